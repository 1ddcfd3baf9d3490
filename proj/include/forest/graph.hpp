#pragma once

#include <compare>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace forest {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
using VertexList = std::vector<Vertex>;

// Girth of an acyclic graph. Compares greater than every finite length.
inline constexpr int kInfiniteGirth = std::numeric_limits<int>::max();

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmbeddingError : public GraphError {
 public:
  using GraphError::GraphError;
};

struct Dart {
  Vertex tail = 0;
  Vertex head = 0;
  auto operator<=>(const Dart&) const = default;
};

// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists and an
// optional rotation system (clockwise neighbour order at every vertex).
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);

  // rotation[v] must be a permutation of v's neighbours.
  static Graph with_rotation(int n, std::span<const Edge> edges,
                             std::vector<VertexList> rotation,
                             std::optional<Dart> outer = std::nullopt);

  int order() const { return static_cast<int>(adj_.size()); }
  std::size_t size() const { return m_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }
  bool has_edge(Vertex u, Vertex v) const;
  std::vector<Edge> edges() const;
  int max_degree() const;
  int min_degree() const;

  bool has_rotation() const { return !rot_.empty() || adj_.empty(); }
  std::span<const Vertex> rotation(Vertex v) const;
  // Neighbour following u in the clockwise order around v.
  Vertex rotation_successor(Vertex v, Vertex u) const;
  std::optional<Dart> outer_dart() const { return outer_; }
  void set_outer_dart(std::optional<Dart> d);
  const std::vector<VertexList>& rotation_table() const { return rot_; }
  Graph without_rotation() const;

  bool operator==(const Graph& o) const {
    return adj_ == o.adj_ && rot_ == o.rot_ && outer_ == o.outer_;
  }

 private:
  void check_vertex(Vertex v) const;

  std::vector<VertexList> adj_;
  std::size_t m_ = 0;
  std::vector<VertexList> rot_;
  std::optional<Dart> outer_;
};

struct Relabel {
  std::vector<Vertex> old_to_new;  // -1 for removed vertices
  std::vector<Vertex> new_to_old;
};

std::pair<Graph, Relabel> delete_vertices(const Graph& g, std::span<const Vertex> doomed);
Graph delete_edges(const Graph& g, std::span<const Edge> doomed);
std::pair<Graph, Relabel> induced_subgraph(const Graph& g, std::span<const Vertex> keep);
Graph disjoint_union(const Graph& a, const Graph& b);

std::vector<VertexList> connected_components(const Graph& g);
bool is_connected(const Graph& g);
std::vector<Edge> bridges(const Graph& g);
bool is_two_edge_connected(const Graph& g);

int girth(const Graph& g);
// Vertex sequence of a shortest cycle, empty when the graph is acyclic.
VertexList shortest_cycle(const Graph& g);
// Shortest path from u to v (inclusive), empty when disconnected.
VertexList shortest_path(const Graph& g, Vertex u, Vertex v);
int distance(const Graph& g, Vertex u, Vertex v);

bool is_induced_forest(const Graph& g, std::span<const Vertex> vertices);

}  // namespace forest
