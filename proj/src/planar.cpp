#include "pcc/planar.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <unordered_set>

namespace pcc::planar {

namespace {

long long ekey(int u, int v) {
  if (u > v) std::swap(u, v);
  return (static_cast<long long>(u) << 32) | static_cast<unsigned>(v);
}

// Segment of the current boundary cycle, in walk order. owner is the global
// part id the segment's vertices belong to; a segment may be a proper
// subpath of its part, the ids make the merge-back implicit.
struct Piece {
  std::vector<int> verts;
  int owner;
};

// Recursive construction over a triangulated component. The boundary cycle
// is carried as <= 6 pieces, each a geodesic of the original graph; every
// call owns the faces strictly inside its cycle.
struct Builder {
  const Graph& g;  // original edges; triangulation chords excluded from BFS
  const Embedding& emb;
  const Triangulation& tri;

  std::vector<VertexPath> parts;
  std::vector<std::vector<int>> bags;  // part ids
  std::vector<int> parents;

  // stamped per-vertex / per-face scratch
  std::vector<int> vstamp, dist, cls, pi, par, posc, lidx;
  std::vector<int> fstamp, fregion;
  int stamp = 0;

  Builder(const Graph& graph, const Embedding& embedding,
          const Triangulation& triangulation)
      : g(graph), emb(embedding), tri(triangulation) {
    int n = emb.graph.num_vertices();
    vstamp.assign(n, 0);
    dist.resize(n);
    cls.resize(n);
    pi.resize(n);
    par.resize(n);
    posc.resize(n);
    lidx.resize(n);
    fstamp.assign(emb.num_faces(), 0);
    fregion.resize(emb.num_faces());
  }

  int new_part(std::vector<int> verts) {
    parts.push_back({std::move(verts), true});
    return static_cast<int>(parts.size()) - 1;
  }

  int new_node(std::vector<int> bag, int parent_node) {
    std::sort(bag.begin(), bag.end());
    bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
    if (bag.size() > 9)
      throw std::logic_error("planar partition: bag exceeds 9 parts");
    bags.push_back(std::move(bag));
    parents.push_back(parent_node);
    return static_cast<int>(bags.size()) - 1;
  }

  static void split_piece(std::vector<Piece>& cycle, int idx, int ways) {
    Piece whole = std::move(cycle[idx]);
    int len = static_cast<int>(whole.verts.size());
    std::vector<Piece> sub;
    for (int i = 0; i < ways; ++i) {
      int from = i * len / ways, to = (i + 1) * len / ways;
      sub.push_back({{whole.verts.begin() + from, whole.verts.begin() + to},
                     whole.owner});
    }
    cycle.erase(cycle.begin() + idx);
    cycle.insert(cycle.begin() + idx, sub.begin(), sub.end());
  }

  void recurse(std::vector<Piece> cycle, std::vector<int> faces,
               int parent_node) {
    if (cycle.size() > 6)
      throw std::logic_error("planar partition: boundary cycle not tight");
    std::sort(faces.begin(), faces.end());

    std::vector<int> owners;
    for (const Piece& p : cycle) owners.push_back(p.owner);

    if (faces.size() == 1) {
      new_node(owners, parent_node);
      return;
    }

    // Need at least three pieces to group the boundary into Q_1,Q_2,Q_3.
    if (cycle.size() < 3) {
      int longest = 0;
      for (int i = 1; i < static_cast<int>(cycle.size()); ++i)
        if (cycle[i].verts.size() > cycle[longest].verts.size()) longest = i;
      split_piece(cycle, longest, cycle.size() == 1 ? 3 : 2);
    }
    int k = static_cast<int>(cycle.size());
    // Group cyclically consecutive pieces: Q_1 and Q_2 take two pieces each
    // once k allows, Q_3 takes the rest.
    std::vector<std::vector<int>> group(3);
    switch (k) {
      case 3: group = {{0}, {1}, {2}}; break;
      case 4: group = {{0, 1}, {2}, {3}}; break;
      case 5: group = {{0, 1}, {2, 3}, {4}}; break;
      default: group = {{0, 1}, {2, 3}, {4, 5}}; break;
    }
    std::vector<int> group_of(k);
    for (int j = 0; j < 3; ++j)
      for (int i : group[j]) group_of[i] = j;

    ++stamp;
    // Cyclic vertex order of the boundary, with piece index per position.
    std::vector<int> cyc, pidx;
    for (int i = 0; i < k; ++i)
      for (int v : cycle[i].verts) {
        posc[v] = static_cast<int>(cyc.size());
        vstamp[v] = stamp;
        cyc.push_back(v);
        pidx.push_back(i);
      }
    int ncyc = static_cast<int>(cyc.size());

    // Region vertices and the original-graph edges inside the region. The
    // shortest path from any region vertex to the boundary stays inside the
    // disk, so this local BFS computes true distances of g.
    std::vector<int> vlist = cyc;
    for (int fid : faces) {
      fstamp[fid] = stamp;
      for (auto [u, v] : emb.faces[fid])
        if (vstamp[u] != stamp) {
          vstamp[u] = stamp;
          posc[u] = -1;
          vlist.push_back(u);
        }
    }
    for (int i = 0; i < static_cast<int>(vlist.size()); ++i)
      lidx[vlist[i]] = i;
    std::vector<std::vector<int>> ladj(vlist.size());
    std::unordered_set<long long> seen_edge;
    for (int fid : faces)
      for (auto [u, v] : emb.faces[fid]) {
        if (tri.is_added(u, v)) continue;
        if (!seen_edge.insert(ekey(u, v)).second) continue;
        ladj[lidx[u]].push_back(v);
        ladj[lidx[v]].push_back(u);
      }
    for (auto& nb : ladj) std::sort(nb.begin(), nb.end());

    // Multi-source BFS from the whole boundary; ties prefer the smaller
    // group index, then the smaller source id. Seeding the queue in label
    // order keeps pops sorted by label within every distance level.
    for (int v : vlist) dist[v] = -1;
    std::vector<std::pair<std::pair<int, int>, int>> seeds;
    for (int q = 0; q < ncyc; ++q)
      seeds.push_back({{group_of[pidx[q]], cyc[q]}, cyc[q]});
    std::sort(seeds.begin(), seeds.end());
    std::queue<int> bfs;
    for (auto& s : seeds) {
      int v = s.second;
      dist[v] = 0;
      cls[v] = s.first.first;
      pi[v] = v;
      par[v] = -1;
      bfs.push(v);
    }
    while (!bfs.empty()) {
      int u = bfs.front();
      bfs.pop();
      for (int w : ladj[lidx[u]])
        if (dist[w] == -1) {
          dist[w] = dist[u] + 1;
          cls[w] = cls[u];
          pi[w] = pi[u];
          par[w] = u;
          bfs.push(w);
        }
    }
    for (int v : vlist)
      if (dist[v] == -1)
        throw std::logic_error("planar partition: region vertex unreached");

    // Sperner face: all three classes on its corners.
    int sperner = -1;
    int corner[3] = {-1, -1, -1};
    for (int fid : faces) {
      int seen_cls = 0;
      for (auto [u, v] : emb.faces[fid]) seen_cls |= 1 << cls[u];
      if (seen_cls == 7) {
        sperner = fid;
        for (auto [u, v] : emb.faces[fid]) corner[cls[u]] = u;
        break;
      }
    }
    if (sperner == -1)
      throw std::logic_error("planar partition: no Sperner face");

    // Geodesics from the Sperner corners to the boundary, by parent chains.
    std::vector<int> kpath[3];
    int fresh[3] = {-1, -1, -1};
    for (int j = 0; j < 3; ++j) {
      for (int v = corner[j]; v != -1; v = par[v]) kpath[j].push_back(v);
      std::reverse(kpath[j].begin(), kpath[j].end());  // pi(v_j) first
      if (kpath[j].size() > 1)
        fresh[j] = new_part({kpath[j].begin() + 1, kpath[j].end()});
    }

    std::vector<int> bag = owners;
    for (int j = 0; j < 3; ++j)
      if (fresh[j] != -1) bag.push_back(fresh[j]);
    int node = new_node(bag, parent_node);

    // Blocked edges for the face flood fills: the boundary cycle, the three
    // corner paths, and the Sperner face. Every sub-cycle's boundary lies in
    // this set and none of it is interior to any sub-region.
    std::unordered_set<long long> blocked;
    for (int q = 0; q < ncyc; ++q)
      blocked.insert(ekey(cyc[q], cyc[(q + 1) % ncyc]));
    for (int j = 0; j < 3; ++j)
      for (size_t i = 0; i + 1 < kpath[j].size(); ++i)
        blocked.insert(ekey(kpath[j][i], kpath[j][i + 1]));
    for (auto [u, v] : emb.faces[sperner]) blocked.insert(ekey(u, v));

    struct Region {
      std::vector<Piece> cycle;
      std::vector<int> faces;
    };
    std::vector<Region> regions;
    int faces_used = 0;

    for (int j = 0; j < 3; ++j) {
      int jn = (j + 1) % 3;
      int a = corner[j], b = corner[jn];
      int pa = pi[a], pb = pi[b];

      // Boundary walk of the sub-cycle: up the corner path j, across the
      // Sperner edge, down corner path j+1, then back along the old cycle
      // from pi(b) to pi(a) avoiding the third group.
      std::vector<Piece> sub;
      if (fresh[j] != -1)
        sub.push_back({{kpath[j].begin() + 1, kpath[j].end()}, fresh[j]});
      if (fresh[jn] != -1)
        sub.push_back({{kpath[jn].rbegin(), kpath[jn].rend() - 1}, fresh[jn]});
      int q = posc[pb];
      int cur_piece = -1, steps = 0;
      while (true) {
        int v = cyc[q];
        if (group_of[pidx[q]] == (j + 2) % 3)
          throw std::logic_error("planar partition: walk hit third group");
        if (++steps > ncyc)
          throw std::logic_error("planar partition: walk did not close");
        if (pidx[q] != cur_piece) {
          cur_piece = pidx[q];
          sub.push_back({{}, cycle[cur_piece].owner});
        }
        sub.back().verts.push_back(v);
        if (v == pa) break;
        q = (q - 1 + ncyc) % ncyc;
      }

      int distinct = 0;
      for (const Piece& p : sub) distinct += static_cast<int>(p.verts.size());
      if (distinct < 3) continue;  // degenerate: Sperner edge lies on cycle

      // Faces strictly inside the sub-cycle: flood from the face on the far
      // side of the Sperner edge (a, b).
      int f0 = emb.face_of(a, b) == sperner ? emb.face_of(b, a)
                                            : emb.face_of(a, b);
      if (fstamp[f0] != stamp || f0 == sperner)
        throw std::logic_error("planar partition: bad flood seed");
      Region reg;
      reg.cycle = std::move(sub);
      fregion[f0] = stamp * 4 + j;
      reg.faces.push_back(f0);
      for (size_t head = 0; head < reg.faces.size(); ++head) {
        int fid = reg.faces[head];
        for (auto [u, v] : emb.faces[fid]) {
          if (blocked.count(ekey(u, v))) continue;
          int nb = emb.face_of(v, u);
          if (fstamp[nb] != stamp || nb == sperner) continue;
          if (fregion[nb] == stamp * 4 + j) continue;
          if (fregion[nb] >= stamp * 4 && fregion[nb] < stamp * 4 + 3)
            throw std::logic_error("planar partition: regions overlap");
          fregion[nb] = stamp * 4 + j;
          reg.faces.push_back(nb);
        }
      }
      faces_used += static_cast<int>(reg.faces.size());
      regions.push_back(std::move(reg));
    }

    if (faces_used != static_cast<int>(faces.size()) - 1)
      throw std::logic_error("planar partition: regions do not cover");

    for (Region& reg : regions)
      recurse(std::move(reg.cycle), std::move(reg.faces), node);
  }
};

}  // namespace

GeodesicPartition planar_geodesic_partition(const Graph& g,
                                            const Embedding& e) {
  require_embedding_of(g, e);
  if (e.euler_genus != 0)
    throw std::invalid_argument("planar_geodesic_partition: genus not 0");

  GeodesicPartition out;
  std::vector<VertexPath> parts;
  std::vector<std::vector<int>> bags;
  std::vector<int> parents;
  auto comps = connected_components(g);

  for (const auto& comp : comps) {
    int part_off = static_cast<int>(parts.size());
    int node_off = static_cast<int>(bags.size());
    if (comp.size() <= 2) {
      std::vector<int> bag;
      for (int v : comp) {
        parts.push_back({{v}, true});
        bag.push_back(part_off++);
      }
      bags.push_back(std::move(bag));
      parents.push_back(-1);
      continue;
    }
    auto [ce, old_id] = restrict_embedding(e, comp);
    Triangulation tri = triangulate(ce);
    Builder b(ce.graph, tri.emb, tri);

    // The first face of the triangulation plays the outer face; its three
    // corners become singleton parts bounding the initial region.
    std::vector<Piece> cycle;
    for (auto [u, v] : tri.emb.faces[0])
      cycle.push_back({{u}, b.new_part({u})});
    std::vector<int> faces;
    for (int fid = 1; fid < tri.emb.num_faces(); ++fid) faces.push_back(fid);
    b.recurse(std::move(cycle), std::move(faces), -1);

    for (VertexPath& part : b.parts) {
      for (int& v : part.vertices) v = old_id[v];
      parts.push_back(std::move(part));
    }
    for (std::vector<int>& bag : b.bags) {
      for (int& id : bag) id += part_off;
      bags.push_back(std::move(bag));
    }
    for (int par : b.parents)
      parents.push_back(par == -1 ? -1 : par + node_off);
  }

  // Forest of component decompositions joined under one (empty) root when
  // the graph is disconnected.
  td::TreeDecomposition q;
  if (comps.size() == 1) {
    q.bags = std::move(bags);
    q.parent = std::move(parents);
    q.root = 0;
  } else {
    q.bags.push_back({});
    q.parent.push_back(-1);
    for (auto& bag : bags) q.bags.push_back(std::move(bag));
    for (int par : parents) q.parent.push_back(par == -1 ? 0 : par + 1);
    q.root = 0;
  }
  out.partition = Partition::from_paths(g.num_vertices(), std::move(parts));
  out.quotient_td = std::move(q);
  return out;
}

}  // namespace pcc::planar
