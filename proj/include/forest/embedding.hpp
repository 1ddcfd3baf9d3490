#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "forest/graph.hpp"

namespace forest {

// Faces of a rotation system. Face i is the closed walk walks[i]: consecutive
// entries are the tails of consecutive darts. The dart after (u, v) is
// (v, w) where w follows u in the clockwise rotation at v.
struct FaceSet {
  std::vector<VertexList> walks;
  std::vector<std::vector<int>> dart_face;  // [v][i]: face of dart (v, rotation(v)[i])
  int outer = -1;

  std::size_t count() const { return walks.size(); }
  int face_of(const Graph& g, Dart d) const;
  bool contains(int face, Vertex v) const;
};

// Throws EmbeddingError unless every component with an edge satisfies
// n - m + f = 2.
FaceSet trace_faces(const Graph& g);
bool is_plane_embedding(const Graph& g);

struct CycleSides {
  VertexList interior;
  VertexList exterior;
  std::vector<int> side;  // per vertex: 1 interior, 0 exterior, -1 on the cycle, -2 elsewhere

  bool separating() const { return !interior.empty() && !exterior.empty(); }
  bool same_side(Vertex a, Vertex b) const { return side[a] >= 0 && side[a] == side[b]; }
  bool opposite_sides(Vertex a, Vertex b) const {
    return side[a] >= 0 && side[b] >= 0 && side[a] != side[b];
  }
};

// Splits the vertices off a simple cycle by the side of the embedding they lie
// on. The interior is the side not containing the outer face.
CycleSides cycle_sides(const Graph& g, const FaceSet& faces, std::span<const Vertex> cycle);

// Inserts edges one by one, each into a face containing both endpoints. A
// vertex with no edges can join any face. Among admissible faces the one
// touching most later endpoints wins, ties to the lower index. Throws
// EmbeddingError when no face fits or the result is not a plane embedding.
Graph insert_edges_embedded(const Graph& g, std::span<const Edge> edges);

// Inserts one edge at the first corner of u on face_u and of v on face_v.
Graph insert_edge_at(const Graph& g, const FaceSet& faces, Vertex u, int face_u, Vertex v,
                     int face_v);

// New vertex joined to nbrs. With a rotation the vertex is placed in `face`,
// which must contain every neighbour.
std::pair<Graph, Vertex> add_vertex_with_edges(const Graph& g, std::span<const Vertex> nbrs,
                                               std::optional<int> face = std::nullopt);

struct EdgeAddition {
  std::optional<Graph> graph;
  VertexList short_cycle;  // the cycle the guard rejected
  bool accepted() const { return graph.has_value(); }
};

// Adds uv unless that closes a cycle shorter than guard. Throws GraphError
// when u and v are already adjacent.
EdgeAddition add_edge(const Graph& g, Vertex u, Vertex v, int guard,
                      std::optional<int> face = std::nullopt);

struct Point {
  double x = 0;
  double y = 0;
};

// Rotation from a straight-line drawing; the outer face is the one of largest
// enclosed area.
Graph embed_from_coordinates(int n, std::span<const Edge> edges, std::span<const Point> coords);

}  // namespace forest
