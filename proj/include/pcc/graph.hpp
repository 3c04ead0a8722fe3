#pragma once

#include <string>
#include <vector>

namespace pcc {

// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(n) {}
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  int num_edges() const { return m_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(int u, int v) const;

  // Rejects self-loops; adding an existing edge is a no-op.
  void add_edge(int u, int v);

  std::vector<std::pair<int, int>> edges() const;

  static Graph path(int n);
  static Graph cycle(int n);
  static Graph complete(int n);
  static Graph grid(int rows, int cols);

 private:
  std::vector<std::vector<int>> adj_;
  int m_ = 0;
};

// BFS layering from a root: layers[i] = vertices at distance i, dist[v] = -1
// if unreachable.
struct Layering {
  int root = 0;
  std::vector<std::vector<int>> layers;
  std::vector<int> dist;

  int eccentricity() const { return static_cast<int>(layers.size()) - 1; }
};

Layering bfs_layering(const Graph& g, int root);

// Path given by its vertex sequence; consecutive vertices must be adjacent.
// is_geodesic is a witness flag: set only when the path realizes the graph
// distance between its endpoints.
struct VertexPath {
  std::vector<int> vertices;
  bool is_geodesic = false;

  int length() const { return static_cast<int>(vertices.size()) - 1; }
};

bool is_path(const Graph& g, const VertexPath& p);
// True when the path realizes the graph distance between its endpoints.
bool is_geodesic(const Graph& g, const VertexPath& p);

// Shortest u-v path; among equal-length paths the BFS parent is always the
// smallest-id neighbor in the previous layer. Throws if v is unreachable.
VertexPath shortest_path(const Graph& g, int u, int v);

// Partition of 0..n-1 into non-empty vertex paths; part_of[v] = part index.
struct Partition {
  std::vector<VertexPath> parts;
  std::vector<int> part_of;

  int num_parts() const { return static_cast<int>(parts.size()); }
  static Partition from_paths(int n, std::vector<VertexPath> parts);
  static Partition singletons(int n);
};

// Throws unless the parts are disjoint paths in g covering every vertex,
// with honest is_geodesic flags.
void validate_partition(const Graph& g, const Partition& p);

// Quotient graph: one vertex per part, parts adjacent iff some cross edge
// exists. Self-loops dropped.
Graph quotient(const Graph& g, const Partition& p);

std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

// Induced subgraph on the given vertices (kept order defines new ids).
// Returns the subgraph and the old id of each new vertex.
std::pair<Graph, std::vector<int>> induced_subgraph(
    const Graph& g, const std::vector<int>& vertices);

}  // namespace pcc
