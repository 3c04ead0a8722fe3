#include "pcc/surface.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>

#include "pcc/lifting.hpp"

namespace pcc::surface {

namespace {

long long ekey(int u, int v) {
  if (u > v) std::swap(u, v);
  return (static_cast<long long>(u) << 32) | static_cast<unsigned>(v);
}

}  // namespace

CutGraph tree_cotree_cut_graph(const Graph& g, const planar::Embedding& e) {
  planar::require_embedding_of(g, e);
  if (!is_connected(g))
    throw std::invalid_argument("tree_cotree_cut_graph: graph not connected");
  const int genus = e.euler_genus;
  if (genus == 0)
    throw std::invalid_argument(
        "tree_cotree_cut_graph: genus 0, use the planar route");

  const int n = g.num_vertices();
  const auto edges = g.edges();
  const int m = static_cast<int>(edges.size());
  std::unordered_map<long long, int> edge_id;
  edge_id.reserve(2 * m);
  for (int i = 0; i < m; ++i) edge_id[ekey(edges[i].first, edges[i].second)] = i;

  // BFS tree from vertex 0; neighbor lists are sorted, so parents are the
  // smallest-id discoverers.
  std::vector<int> parent(n, -1);
  std::vector<char> in_tree(m, 0), seen(n, 0);
  std::deque<int> q{0};
  seen[0] = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int v : g.neighbors(u)) {
      if (seen[v]) continue;
      seen[v] = 1;
      parent[v] = u;
      in_tree[edge_id.at(ekey(u, v))] = 1;
      q.push_back(v);
    }
  }

  // Cotree: BFS spanning tree of the dual restricted to non-tree edges.
  const int nf = e.num_faces();
  std::vector<std::vector<std::pair<int, int>>> dual(nf);
  for (int i = 0; i < m; ++i) {
    if (in_tree[i]) continue;
    auto [u, v] = edges[i];
    int f1 = e.face_of(u, v), f2 = e.face_of(v, u);
    dual[f1].push_back({f2, i});
    if (f1 != f2) dual[f2].push_back({f1, i});
  }
  std::vector<char> face_seen(nf, 0), in_cotree(m, 0);
  std::deque<int> fq{0};
  face_seen[0] = 1;
  int reached = 1;
  while (!fq.empty()) {
    int f = fq.front();
    fq.pop_front();
    for (auto [f2, i] : dual[f]) {
      if (face_seen[f2]) continue;
      face_seen[f2] = 1;
      in_cotree[i] = 1;
      ++reached;
      fq.push_back(f2);
    }
  }
  if (reached != nf)
    throw std::logic_error("tree_cotree_cut_graph: cotree did not span the dual");

  std::vector<std::pair<int, int>> extra;
  for (int i = 0; i < m; ++i)
    if (!in_tree[i] && !in_cotree[i]) extra.push_back(edges[i]);
  if (static_cast<int>(extra.size()) != 2 * genus)
    throw std::logic_error("tree_cotree_cut_graph: leftover edge count is not 2g");

  std::vector<char> is_ep(n, 0);
  for (auto [u, v] : extra) is_ep[u] = is_ep[v] = 1;
  std::vector<int> endpoints;
  for (int v = 0; v < n; ++v)
    if (is_ep[v]) endpoints.push_back(v);

  // K before trimming: the extra edges plus the tree paths from the root to
  // their endpoints.
  std::vector<std::vector<int>> root_path(endpoints.size());
  std::vector<char> in_k(n, 0);
  std::vector<std::pair<int, int>> kedges = extra;
  std::vector<char> kedge_seen(m, 0);
  for (auto [u, v] : extra) kedge_seen[edge_id.at(ekey(u, v))] = 1;
  for (std::size_t i = 0; i < endpoints.size(); ++i) {
    std::vector<int> path;
    for (int v = endpoints[i]; v != -1; v = parent[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    for (std::size_t j = 0; j < path.size(); ++j) {
      in_k[path[j]] = 1;
      if (j == 0) continue;
      int id = edge_id.at(ekey(path[j - 1], path[j]));
      if (!kedge_seen[id]) {
        kedge_seen[id] = 1;
        kedges.push_back({std::min(path[j - 1], path[j]),
                          std::max(path[j - 1], path[j])});
      }
    }
    root_path[i] = std::move(path);
  }

  // Peel degree-1 vertices that are not extra-edge endpoints. Leaves of the
  // path union other than the root are endpoints, so only the root's chain
  // down to the first branch point or endpoint can go.
  std::vector<std::vector<int>> kadj(n);
  for (auto [u, v] : kedges) {
    kadj[u].push_back(v);
    kadj[v].push_back(u);
  }
  std::vector<int> kdeg(n, 0);
  for (int v = 0; v < n; ++v) kdeg[v] = static_cast<int>(kadj[v].size());
  std::deque<int> peel;
  for (int v = 0; v < n; ++v)
    if (in_k[v] && kdeg[v] == 1 && !is_ep[v]) peel.push_back(v);
  while (!peel.empty()) {
    int v = peel.front();
    peel.pop_front();
    if (!in_k[v] || kdeg[v] != 1 || is_ep[v]) continue;
    in_k[v] = 0;
    for (int w : kadj[v]) {
      if (!in_k[w]) continue;
      if (--kdeg[w] == 1 && !is_ep[w]) peel.push_back(w);
    }
  }

  CutGraph k;
  for (int v = 0; v < n; ++v)
    if (in_k[v]) k.vertices.push_back(v);
  for (auto [u, v] : kedges)
    if (in_k[u] && in_k[v]) k.edges.push_back({u, v});
  std::sort(k.edges.begin(), k.edges.end());
  k.extra_edges = std::move(extra);
  if (static_cast<int>(k.edges.size()) - static_cast<int>(k.vertices.size()) +
          1 != 2 * genus)
    throw std::logic_error("tree_cotree_cut_graph: Euler relation violated");

  // Greedy disjointification of the trimmed root paths. Trimming removed a
  // common prefix of every path, so each leftover piece is a suffix, hence
  // still a geodesic.
  std::vector<char> used(n, 0);
  for (const auto& path : root_path) {
    VertexPath part;
    for (int v : path) {
      if (!in_k[v] || used[v]) {
        if (!part.vertices.empty())
          throw std::logic_error("tree_cotree_cut_graph: part not a suffix");
        continue;
      }
      used[v] = 1;
      part.vertices.push_back(v);
    }
    if (part.vertices.empty()) continue;
    part.is_geodesic = true;
    if (!is_geodesic(g, part))
      throw std::logic_error("tree_cotree_cut_graph: part not a geodesic");
    k.geodesic_parts.push_back(std::move(part));
  }
  std::size_t covered = 0;
  for (const auto& part : k.geodesic_parts) covered += part.vertices.size();
  if (covered != k.vertices.size())
    throw std::logic_error("tree_cotree_cut_graph: parts do not cover K");
  if (static_cast<int>(k.geodesic_parts.size()) > 4 * genus)
    throw std::logic_error("tree_cotree_cut_graph: more than 4g parts");
  return k;
}

Coloring genus_centered_coloring(const Graph& g, const planar::Embedding& e,
                                 int p) {
  planar::require_embedding_of(g, e);
  if (p < 1) throw std::invalid_argument("genus_centered_coloring: p < 1");
  if (e.euler_genus == 0) return lift::planar_centered_coloring(g, e, p);

  auto colorer = [](const planar::Embedding& w, int pp) -> Coloring {
    if (w.euler_genus == 0)
      return lift::planar_centered_coloring(w.graph, w, pp);
    CutGraph k = tree_cotree_cut_graph(w.graph, w);
    for (const auto& part : k.geodesic_parts)
      if (static_cast<int>(part.vertices.size()) > 4 * pp + 1)
        throw std::logic_error(
            "genus_centered_coloring: geodesic longer than the radius bound");
    const int n = w.graph.num_vertices();
    const int nk = static_cast<int>(k.vertices.size());
    std::vector<int> col(n, -1);
    for (int i = 0; i < nk; ++i) col[k.vertices[i]] = i;
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
      if (col[v] < 0) rest.push_back(v);
    auto [re, old_id] = planar::restrict_embedding(w, rest);
    if (re.euler_genus != 0)
      throw std::logic_error(
          "genus_centered_coloring: remainder after cutting is not planar");
    Coloring pc = lift::planar_centered_coloring(re.graph, re, pp);
    for (int i = 0; i < pc.size(); ++i) col[old_id[i]] = nk + pc.color[i];
    return make_coloring(std::move(col));
  };
  return lift::layered_lift_embedded(e, p, colorer);
}

std::uint64_t genus_color_bound(int p, int genus) {
  if (genus == 0) return lift::planar_color_bound(p);
  std::uint64_t f = 4ull * genus * (4ull * p + 1) + lift::planar_color_bound(p);
  return (p + 1ull) * f * f;
}

}  // namespace pcc::surface
