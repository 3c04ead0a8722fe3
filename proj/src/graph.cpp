#include "pcc/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace pcc {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : adj_(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(int u, int v) {
  int n = num_vertices();
  if (u < 0 || v < 0 || u >= n || v >= n)
    throw std::invalid_argument("add_edge: vertex out of range");
  if (u == v) throw std::invalid_argument("add_edge: self-loop");
  if (has_edge(u, v)) return;
  adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
  ++m_;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices())
    return false;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < num_vertices(); ++u)
    for (int v : adj_[u])
      if (u < v) out.push_back({u, v});
  return out;
}

Graph Graph::path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph Graph::cycle(int n) {
  Graph g = path(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph Graph::grid(int rows, int cols) {
  Graph g(rows * cols);
  auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) g.add_edge(id(r, c), id(r, c + 1));
      if (r + 1 < rows) g.add_edge(id(r, c), id(r + 1, c));
    }
  return g;
}

Layering bfs_layering(const Graph& g, int root) {
  int n = g.num_vertices();
  if (root < 0 || root >= n)
    throw std::invalid_argument("bfs_layering: root out of range");
  Layering l;
  l.root = root;
  l.dist.assign(n, -1);
  l.dist[root] = 0;
  std::vector<int> frontier = {root};
  while (!frontier.empty()) {
    l.layers.push_back(frontier);
    std::vector<int> next;
    for (int u : frontier)
      for (int v : g.neighbors(u))
        if (l.dist[v] == -1) {
          l.dist[v] = l.dist[u] + 1;
          next.push_back(v);
        }
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
  }
  return l;
}

bool is_path(const Graph& g, const VertexPath& p) {
  const auto& vs = p.vertices;
  if (vs.empty()) return false;
  std::vector<int> sorted = vs;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    return false;
  for (size_t i = 0; i + 1 < vs.size(); ++i)
    if (!g.has_edge(vs[i], vs[i + 1])) return false;
  return true;
}

bool is_geodesic(const Graph& g, const VertexPath& p) {
  if (!is_path(g, p)) return false;
  Layering l = bfs_layering(g, p.vertices.front());
  return l.dist[p.vertices.back()] == p.length();
}

VertexPath shortest_path(const Graph& g, int u, int v) {
  Layering l = bfs_layering(g, u);
  if (v < 0 || v >= g.num_vertices() || l.dist[v] == -1)
    throw std::runtime_error("shortest_path: unreachable");
  VertexPath p;
  p.is_geodesic = true;
  int cur = v;
  while (cur != u) {
    p.vertices.push_back(cur);
    // Adjacency is sorted, so the first neighbor one layer closer is the
    // smallest-id parent.
    for (int w : g.neighbors(cur))
      if (l.dist[w] == l.dist[cur] - 1) {
        cur = w;
        break;
      }
  }
  p.vertices.push_back(u);
  std::reverse(p.vertices.begin(), p.vertices.end());
  return p;
}

Partition Partition::from_paths(int n, std::vector<VertexPath> parts) {
  Partition p;
  p.parts = std::move(parts);
  p.part_of.assign(n, -1);
  for (int i = 0; i < p.num_parts(); ++i) {
    if (p.parts[i].vertices.empty())
      throw std::invalid_argument("Partition: empty part");
    for (int v : p.parts[i].vertices) {
      if (v < 0 || v >= n)
        throw std::invalid_argument("Partition: vertex out of range");
      if (p.part_of[v] != -1)
        throw std::invalid_argument("Partition: vertex in two parts");
      p.part_of[v] = i;
    }
  }
  for (int v = 0; v < n; ++v)
    if (p.part_of[v] == -1)
      throw std::invalid_argument("Partition: uncovered vertex");
  return p;
}

Partition Partition::singletons(int n) {
  std::vector<VertexPath> parts(n);
  for (int v = 0; v < n; ++v) parts[v] = {{v}, true};
  return from_paths(n, std::move(parts));
}

void validate_partition(const Graph& g, const Partition& p) {
  if (static_cast<int>(p.part_of.size()) != g.num_vertices())
    throw std::invalid_argument("validate_partition: size mismatch");
  Partition::from_paths(g.num_vertices(), p.parts);  // disjoint cover
  for (const VertexPath& part : p.parts) {
    if (!is_path(g, part))
      throw std::invalid_argument("validate_partition: part is not a path");
    if (part.is_geodesic && !is_geodesic(g, part))
      throw std::invalid_argument(
          "validate_partition: part flagged geodesic but is not");
  }
}

Graph quotient(const Graph& g, const Partition& p) {
  Graph q(p.num_parts());
  for (auto [u, v] : g.edges()) {
    int a = p.part_of[u], b = p.part_of[v];
    if (a != b) q.add_edge(a, b);
  }
  return q;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  int n = g.num_vertices();
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(n, 0);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp = {s};
    seen[s] = 1;
    for (size_t i = 0; i < comp.size(); ++i)
      for (int v : g.neighbors(comp[i]))
        if (!seen[v]) {
          seen[v] = 1;
          comp.push_back(v);
        }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const Graph& g) {
  return g.num_vertices() <= 1 || connected_components(g).size() == 1;
}

std::pair<Graph, std::vector<int>> induced_subgraph(
    const Graph& g, const std::vector<int>& vertices) {
  std::vector<int> old_id = vertices;
  std::vector<int> new_id(g.num_vertices(), -1);
  for (int i = 0; i < static_cast<int>(old_id.size()); ++i) {
    if (new_id[old_id[i]] != -1)
      throw std::invalid_argument("induced_subgraph: duplicate vertex");
    new_id[old_id[i]] = i;
  }
  Graph h(static_cast<int>(old_id.size()));
  for (int i = 0; i < static_cast<int>(old_id.size()); ++i)
    for (int v : g.neighbors(old_id[i]))
      if (new_id[v] > i) h.add_edge(i, new_id[v]);
  return {std::move(h), std::move(old_id)};
}

}  // namespace pcc
