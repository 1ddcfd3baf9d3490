#include "fixture_data.hpp"

namespace forest::fixture_data {

const FixtureData& girth6() {
  static const FixtureData data{
      30,
      {{0, 1}, {0, 5}, {0, 6}, {1, 2}, {2, 3}, {2, 4}, {3, 8}, {3, 10}, {4, 7}, {4, 9}, {5, 8},
       {5, 24}, {6, 9}, {6, 25}, {7, 11}, {8, 12}, {9, 16}, {10, 11}, {10, 14}, {11, 15},
       {12, 13}, {12, 19}, {13, 14}, {14, 17}, {15, 16}, {15, 18}, {16, 20}, {17, 18},
       {17, 26}, {18, 23}, {19, 21}, {19, 26}, {20, 22}, {20, 27}, {21, 24}, {22, 25},
       {23, 27}, {24, 29}, {25, 29}, {26, 28}, {27, 28}, {28, 29}},
      {
          {6, 1, 5},
          {0, 2},
          {1, 4, 3},
          {2, 10, 8},
          {2, 9, 7},
          {0, 8, 24},
          {0, 25, 9},
          {4, 11},
          {5, 3, 12},
          {4, 6, 16},
          {3, 11, 14},
          {10, 7, 15},
          {8, 13, 19},
          {12, 14},
          {13, 10, 17},
          {11, 16, 18},
          {15, 9, 20},
          {14, 18, 26},
          {17, 15, 23},
          {12, 26, 21},
          {16, 22, 27},
          {19, 24},
          {20, 25},
          {18, 27},
          {5, 21, 29},
          {22, 6, 29},
          {19, 17, 28},
          {23, 20, 28},
          {26, 27, 29},
          {24, 28, 25},
      },
      {0, 6}};
  return data;
}

const FixtureData& girth7() {
  static const FixtureData data{
      42,
      {{0, 1}, {0, 2}, {0, 9}, {1, 3}, {2, 4}, {2, 18}, {3, 6}, {3, 8}, {4, 5}, {5, 6},
       {5, 15}, {6, 7}, {7, 10}, {8, 11}, {8, 13}, {9, 12}, {9, 32}, {10, 14}, {10, 17},
       {11, 14}, {12, 13}, {13, 23}, {14, 21}, {15, 16}, {15, 20}, {16, 17}, {17, 24},
       {18, 19}, {18, 39}, {19, 20}, {20, 26}, {21, 22}, {21, 27}, {22, 23}, {23, 28},
       {24, 25}, {24, 31}, {25, 26}, {26, 36}, {27, 30}, {27, 31}, {28, 29}, {28, 33},
       {29, 32}, {30, 33}, {31, 34}, {32, 41}, {33, 38}, {34, 35}, {35, 36}, {35, 38},
       {36, 37}, {37, 39}, {38, 40}, {39, 41}, {40, 41}},
      {
          {9, 1, 2},
          {0, 3},
          {0, 4, 18},
          {1, 8, 6},
          {2, 5},
          {4, 6, 15},
          {5, 3, 7},
          {6, 10},
          {3, 13, 11},
          {0, 32, 12},
          {7, 14, 17},
          {8, 14},
          {9, 13},
          {8, 12, 23},
          {10, 11, 21},
          {5, 16, 20},
          {15, 17},
          {16, 10, 24},
          {2, 19, 39},
          {18, 20},
          {19, 15, 26},
          {14, 22, 27},
          {21, 23},
          {22, 13, 28},
          {17, 31, 25},
          {24, 26},
          {20, 25, 36},
          {21, 30, 31},
          {23, 29, 33},
          {28, 32},
          {27, 33},
          {24, 27, 34},
          {29, 9, 41},
          {30, 28, 38},
          {31, 35},
          {34, 38, 36},
          {26, 35, 37},
          {36, 39},
          {35, 33, 40},
          {18, 37, 41},
          {38, 41},
          {39, 40, 32},
      },
      {0, 9}};
  return data;
}

}  // namespace forest::fixture_data
