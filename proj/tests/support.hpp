#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "forest/bounds.hpp"
#include "forest/graph.hpp"

namespace testing_support {

using forest::Graph;
using forest::Rational;
using forest::Vertex;
using forest::VertexList;

std::string data_path(const std::string& name);

// Reference implementations kept deliberately naive.
bool oracle_acyclic(const Graph& g, std::uint64_t mask);
int oracle_forest_number(const Graph& g);
int oracle_girth(const Graph& g);  // kInfiniteGirth when acyclic
long oracle_components(const Graph& g);

// max a*alpha - b*beta over the constraints, by Fourier-Motzkin elimination;
// nullopt when unbounded.
std::optional<Rational> oracle_triple_max(const std::vector<forest::HalfPlane>& cons,
                                          const forest::Triple& t);
// Vertices by brute force over pairs of constraint lines.
std::vector<forest::PolygonVertex> oracle_vertices(const std::vector<forest::HalfPlane>& cons);

// Random plane graphs derived from a base by deleting vertices and edges.
Graph random_plane_subgraph(const Graph& base, std::mt19937& rng, int max_order,
                            double edge_drop = 0.1);
// Replaces edge uv by a path through a new vertex, keeping the embedding.
Graph subdivide(const Graph& g, Vertex u, Vertex v);

// A 2-connected plane graph of girth at least `girth`, grown from a cycle by
// subdividing edges and adding chords inside faces. With `saturate`, chords
// are added at the end until none fits.
Graph random_girth_plane_graph(std::mt19937& rng, int order, int girth, int chords_per_vertex = 2,
                               bool saturate = false);

VertexList to_list(std::uint64_t mask, int n);

}  // namespace testing_support
