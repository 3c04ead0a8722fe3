#include "pcc/lifting.hpp"

#include <algorithm>
#include <stdexcept>

#include "pcc/planar.hpp"
#include "pcc/treedecomp.hpp"

namespace pcc::lift {

namespace {

// Window colors per vertex: cur from the window owning the vertex's layer
// band, prev from the one before it (-1 when there is none). The band
// ordinal decides which tuple slot each one lands in; consecutive windows
// alternate slots, so a fixed window's color sits in the same slot for all
// vertices that carry it.
Coloring assemble_triples(int n, int p, const std::vector<int>& layer,
                          const std::vector<int>& cur,
                          const std::vector<int>& prev) {
  TupleDict dict;
  std::vector<int> color(n, 0);
  for (int v = 0; v < n; ++v) {
    int t = layer[v] / p;
    int first = layer[v] % (p + 1);
    std::vector<int> triple = t % 2 == 0
                                  ? std::vector<int>{first, cur[v], prev[v]}
                                  : std::vector<int>{first, prev[v], cur[v]};
    color[v] = dict.id(triple);
  }
  Coloring c;
  c.color = std::move(color);
  c.num_colors = dict.size();
  return c;
}

void check_window(const Graph& w, int start_vertex, int p,
                  const char* who) {
  Layering l = bfs_layering(w, start_vertex);
  if (l.eccentricity() > 2 * p)
    throw std::logic_error(std::string(who) + ": window radius exceeds 2p");
  for (int v = 0; v < w.num_vertices(); ++v)
    if (l.dist[v] == -1)
      throw std::logic_error(std::string(who) + ": window not connected");
}

}  // namespace

Coloring layered_lift(const Graph& g, int p, const RadiusColorer& colorer) {
  if (p < 1) throw std::invalid_argument("layered_lift: p must be positive");
  int n = g.num_vertices();
  std::vector<int> layer(n, -1), cur(n, -2), prev(n, -1);

  for (const auto& comp : connected_components(g)) {
    int root = comp[0];
    Layering lay = bfs_layering(g, root);
    int k = 0;
    for (int v : comp) {
      layer[v] = lay.dist[v];
      k = std::max(k, lay.dist[v]);
    }
    for (int j = 0; j <= k; j += p) {
      int t = j / p;
      std::vector<int> kept;
      for (int v : comp)
        if (lay.dist[v] >= j && lay.dist[v] <= j + 2 * p - 1)
          kept.push_back(v);
      std::sort(kept.begin(), kept.end());
      int blob = j > 0 ? 1 : 0;  // local id 0 is the contracted ball
      std::vector<int> local(n, -1);
      for (int i = 0; i < static_cast<int>(kept.size()); ++i)
        local[kept[i]] = i + blob;
      Graph w(static_cast<int>(kept.size()) + blob);
      for (int u : kept)
        for (int v : g.neighbors(u)) {
          if (local[v] > local[u]) w.add_edge(local[u], local[v]);
          if (blob && lay.dist[v] == j - 1) w.add_edge(0, local[u]);
        }
      int start = blob ? 0 : local[root];
      check_window(w, start, p, "layered_lift");
      Coloring c = colorer(w, p);
      if (c.size() != w.num_vertices())
        throw std::runtime_error("layered_lift: colorer size mismatch");
      for (int u : kept) {
        int band = lay.dist[u] / p;
        if (band == t)
          cur[u] = c.color[local[u]];
        else if (band == t + 1)
          prev[u] = c.color[local[u]];
      }
    }
  }
  for (int v = 0; v < n; ++v)
    if (cur[v] == -2) throw std::logic_error("layered_lift: uncovered vertex");
  return assemble_triples(n, p, layer, cur, prev);
}

Coloring layered_lift_embedded(const planar::Embedding& e, int p,
                               const EmbeddedRadiusColorer& colorer) {
  if (p < 1)
    throw std::invalid_argument("layered_lift_embedded: p must be positive");
  int n = e.graph.num_vertices();
  std::vector<int> layer(n, -1), cur(n, -2), prev(n, -1);

  for (const auto& comp : connected_components(e.graph)) {
    auto [ce, cmap] = planar::restrict_embedding(e, comp);
    Layering lay = bfs_layering(ce.graph, 0);  // comp is sorted: 0 = min id
    int k = lay.eccentricity();
    for (int v = 0; v < ce.graph.num_vertices(); ++v)
      layer[cmap[v]] = lay.dist[v];
    for (int j = 0; j <= k; j += p) {
      int t = j / p;
      // Global ids of window members, and the color each one received.
      std::vector<std::pair<int, int>> member_colors;
      if (j == 0) {
        std::vector<int> kept;
        for (int v = 0; v < ce.graph.num_vertices(); ++v)
          if (lay.dist[v] <= 2 * p - 1) kept.push_back(v);
        auto [we, wmap] = planar::restrict_embedding(ce, kept);
        check_window(we.graph, 0, p, "layered_lift_embedded");
        Coloring c = colorer(we, p);
        if (c.size() != we.graph.num_vertices())
          throw std::runtime_error("layered_lift_embedded: size mismatch");
        for (int v = 0; v < we.graph.num_vertices(); ++v)
          member_colors.push_back({cmap[wmap[v]], c.color[v]});
      } else {
        std::vector<int> ball;
        for (int v = 0; v < ce.graph.num_vertices(); ++v)
          if (lay.dist[v] <= j + 2 * p - 1) ball.push_back(v);
        auto [se, smap] = planar::restrict_embedding(ce, ball);
        std::vector<int> inner;
        int rep = -1;
        for (int v = 0; v < se.graph.num_vertices(); ++v)
          if (lay.dist[smap[v]] < j) {
            inner.push_back(v);
            if (smap[v] == 0) rep = v;
          }
        auto cr = planar::contract_connected(se, inner, rep);
        check_window(cr.emb.graph, cr.blob, p, "layered_lift_embedded");
        Coloring c = colorer(cr.emb, p);
        if (c.size() != cr.emb.graph.num_vertices())
          throw std::runtime_error("layered_lift_embedded: size mismatch");
        for (int v = 0; v < cr.emb.graph.num_vertices(); ++v)
          if (v != cr.blob)
            member_colors.push_back({cmap[smap[cr.old_id[v]]], c.color[v]});
      }
      for (auto [gv, col] : member_colors) {
        int band = layer[gv] / p;
        if (band == t)
          cur[gv] = col;
        else if (band == t + 1)
          prev[gv] = col;
      }
    }
  }
  for (int v = 0; v < n; ++v)
    if (cur[v] == -2)
      throw std::logic_error("layered_lift_embedded: uncovered vertex");
  return assemble_triples(n, p, layer, cur, prev);
}

Coloring partition_lift(const Graph& g, const Partition& part,
                        const Coloring& quotient_coloring, int) {
  if (static_cast<int>(part.part_of.size()) != g.num_vertices())
    throw std::invalid_argument("partition_lift: partition size mismatch");
  if (quotient_coloring.size() != part.num_parts())
    throw std::invalid_argument(
        "partition_lift: quotient coloring size mismatch");
  std::vector<int> kappa(g.num_vertices(), -1);
  for (const VertexPath& path : part.parts)
    for (int i = 0; i < static_cast<int>(path.vertices.size()); ++i)
      kappa[path.vertices[i]] = i;
  TupleDict dict;
  std::vector<int> color(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (kappa[v] == -1)
      throw std::invalid_argument("partition_lift: partition does not cover");
    color[v] = dict.id({kappa[v], quotient_coloring.color[part.part_of[v]]});
  }
  Coloring c;
  c.color = std::move(color);
  c.num_colors = dict.size();
  return c;
}

Coloring planar_centered_coloring(const Graph& g, const planar::Embedding& e,
                                  int p) {
  planar::require_embedding_of(g, e);
  if (e.euler_genus != 0)
    throw std::invalid_argument("planar_centered_coloring: genus not 0");
  EmbeddedRadiusColorer colorer = [](const planar::Embedding& w, int pp) {
    planar::GeodesicPartition gp =
        planar::planar_geodesic_partition(w.graph, w);
    for (const VertexPath& part : gp.partition.parts)
      if (static_cast<int>(part.vertices.size()) > 4 * pp + 1)
        throw std::logic_error(
            "planar_centered_coloring: geodesic longer than the radius bound");
    Graph q = quotient(w.graph, gp.partition);
    Coloring qc = td::treewidth_centered_coloring(q, gp.quotient_td, pp);
    return partition_lift(w.graph, gp.partition, qc, pp);
  };
  return layered_lift_embedded(e, p, colorer);
}

unsigned long long binom_u64(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

unsigned long long treewidth_color_bound(int p, int k) {
  return binom_u64(p + k, k);
}

unsigned long long planar_color_bound(int p) {
  unsigned long long f = binom_u64(p + 8, 8);
  return (p + 1ull) * (4 * p + 1ull) * (4 * p + 1ull) * f * f;
}

}  // namespace pcc::lift
