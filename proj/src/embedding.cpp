#include "pcc/embedding.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <unordered_set>

namespace pcc::planar {

namespace {

long long dart_key(int u, int v) {
  return (static_cast<long long>(u) << 32) | static_cast<unsigned>(v);
}

// Mutable doubly-linked rotation structure used by the surgery operations.
// Darts are directed edge sides; next/prev run around the origin vertex.
struct DartMesh {
  std::vector<int> origin, target, twin, next, prev;
  std::vector<int> first;  // some alive dart per vertex, -1 if none
  std::vector<char> dart_alive, vertex_alive;

  static DartMesh from(const Embedding& e) {
    DartMesh m;
    int n = e.graph.num_vertices();
    m.first.assign(n, -1);
    m.vertex_alive.assign(n, 1);
    std::vector<int> offset(n, 0);
    int total = 0;
    for (int v = 0; v < n; ++v) {
      offset[v] = total;
      total += static_cast<int>(e.rotation[v].size());
    }
    m.origin.resize(total);
    m.target.resize(total);
    m.twin.assign(total, -1);
    m.next.resize(total);
    m.prev.resize(total);
    m.dart_alive.assign(total, 1);
    for (int v = 0; v < n; ++v) {
      int deg = static_cast<int>(e.rotation[v].size());
      for (int i = 0; i < deg; ++i) {
        int d = offset[v] + i;
        m.origin[d] = v;
        m.target[d] = e.rotation[v][i];
        m.next[d] = offset[v] + (i + 1) % deg;
        m.prev[d] = offset[v] + (i + deg - 1) % deg;
      }
      if (deg > 0) m.first[v] = offset[v];
    }
    for (int v = 0; v < n; ++v)
      for (int i = 0; i < static_cast<int>(e.rotation[v].size()); ++i) {
        int d = offset[v] + i;
        if (m.twin[d] != -1) continue;
        int u = e.rotation[v][i];
        for (int j = 0; j < static_cast<int>(e.rotation[u].size()); ++j) {
          int t = offset[u] + j;
          if (e.rotation[u][j] == v && m.twin[t] == -1) {
            m.twin[d] = t;
            m.twin[t] = d;
            break;
          }
        }
      }
    return m;
  }

  std::vector<int> rotation_of(int v) const {
    std::vector<int> darts;
    if (first[v] == -1) return darts;
    int d = first[v];
    do {
      darts.push_back(d);
      d = next[d];
    } while (d != first[v]);
    return darts;
  }

  void unlink(int d) {
    int v = origin[d];
    dart_alive[d] = 0;
    if (next[d] == d) {
      first[v] = -1;
      return;
    }
    next[prev[d]] = next[d];
    prev[next[d]] = prev[d];
    if (first[v] == d) first[v] = next[d];
  }

  void remove_edge(int d) {
    unlink(d);
    unlink(twin[d]);
  }

  void insert_after(int ref, int d) {
    next[d] = next[ref];
    prev[d] = ref;
    prev[next[ref]] = d;
    next[ref] = d;
  }

  // Contract the edge of dart d, merging its target into its origin. The
  // merged rotation keeps the origin's order with the target's order
  // spliced in at the contracted slot, which preserves the embedding.
  void contract(int d) {
    int a = origin[d], b = target[d], t = twin[d];
    std::vector<int> b_darts;
    for (int e = next[t]; e != t; e = next[e]) b_darts.push_back(e);
    for (int e : b_darts) {
      origin[e] = a;
      target[twin[e]] = a;
    }
    bool a_only = next[d] == d;
    bool b_only = next[t] == t;
    int a_prev = prev[d], a_next = next[d];
    int b_prev = prev[t], b_next = next[t];
    dart_alive[d] = dart_alive[t] = 0;
    vertex_alive[b] = 0;
    if (a_only && b_only) {
      first[a] = -1;
    } else if (b_only) {
      next[a_prev] = a_next;
      prev[a_next] = a_prev;
      first[a] = a_next;
    } else if (a_only) {
      next[b_prev] = b_next;
      prev[b_next] = b_prev;
      first[a] = b_next;
    } else {
      next[a_prev] = b_next;
      prev[b_next] = a_prev;
      next[b_prev] = a_next;
      prev[a_next] = b_prev;
      first[a] = a_next;
    }
  }

  void drop_loops_and_parallels() {
    for (int v = 0; v < static_cast<int>(first.size()); ++v) {
      if (!vertex_alive[v]) continue;
      for (int d : rotation_of(v))
        if (dart_alive[d] && target[d] == origin[d]) remove_edge(d);
    }
    std::unordered_map<long long, int> kept;  // edge -> kept dart pair id
    for (int v = 0; v < static_cast<int>(first.size()); ++v) {
      if (!vertex_alive[v]) continue;
      for (int d : rotation_of(v)) {
        if (!dart_alive[d]) continue;
        int a = std::min(origin[d], target[d]);
        int b = std::max(origin[d], target[d]);
        int pair_id = std::min(d, twin[d]);
        auto [it, fresh] = kept.insert({dart_key(a, b), pair_id});
        if (!fresh && it->second != pair_id) remove_edge(d);
      }
    }
  }

  std::pair<Embedding, std::vector<int>> extract() const {
    std::vector<int> old_id;
    std::vector<int> new_id(first.size(), -1);
    for (int v = 0; v < static_cast<int>(first.size()); ++v)
      if (vertex_alive[v]) {
        new_id[v] = static_cast<int>(old_id.size());
        old_id.push_back(v);
      }
    int n = static_cast<int>(old_id.size());
    Graph g(n);
    std::vector<std::vector<int>> rot(n);
    for (int i = 0; i < n; ++i)
      for (int d : rotation_of(old_id[i]))
        if (dart_alive[d]) rot[i].push_back(new_id[target[d]]);
    for (int i = 0; i < n; ++i)
      for (int u : rot[i])
        if (i < u) g.add_edge(i, u);
    return {trace_faces(std::move(g), std::move(rot)), std::move(old_id)};
  }
};

}  // namespace

int Embedding::face_of(int u, int v) const {
  auto it = dart_face_.find(dart_key(u, v));
  if (it == dart_face_.end())
    throw std::invalid_argument("face_of: no such dart");
  return it->second;
}

Embedding trace_faces(Graph g, std::vector<std::vector<int>> rotation) {
  int n = g.num_vertices();
  if (static_cast<int>(rotation.size()) != n)
    throw std::invalid_argument("trace_faces: rotation size mismatch");
  for (int v = 0; v < n; ++v) {
    std::vector<int> sorted = rotation[v];
    std::sort(sorted.begin(), sorted.end());
    if (sorted != g.neighbors(v))
      throw std::invalid_argument(
          "trace_faces: rotation of vertex " + std::to_string(v) +
          " does not match its neighborhood");
  }
  Embedding e;
  e.graph = std::move(g);
  e.rotation = std::move(rotation);

  std::vector<std::unordered_map<int, int>> pos(n);
  std::vector<int> offset(n, 0);
  int total = 0;
  for (int v = 0; v < n; ++v) {
    offset[v] = total;
    total += static_cast<int>(e.rotation[v].size());
    for (int i = 0; i < static_cast<int>(e.rotation[v].size()); ++i)
      pos[v][e.rotation[v][i]] = i;
  }

  std::vector<char> visited(total, 0);
  for (int v = 0; v < n; ++v)
    for (int i = 0; i < static_cast<int>(e.rotation[v].size()); ++i) {
      if (visited[offset[v] + i]) continue;
      std::vector<std::pair<int, int>> walk;
      int cu = v, ci = i;
      while (!visited[offset[cu] + ci]) {
        visited[offset[cu] + ci] = 1;
        int cv = e.rotation[cu][ci];
        walk.push_back({cu, cv});
        e.dart_face_[dart_key(cu, cv)] = e.num_faces();
        int j = pos[cv][cu];
        ci = (j + 1) % static_cast<int>(e.rotation[cv].size());
        cu = cv;
      }
      e.faces.push_back(std::move(walk));
    }
  // an edgeless vertex sits alone on its sphere, one face around it
  for (int v = 0; v < n; ++v)
    if (e.rotation[v].empty()) e.faces.push_back({});

  int f = e.num_faces();
  int c = static_cast<int>(connected_components(e.graph).size());
  if (n == 0) c = 0;
  int chi = e.graph.num_vertices() - e.graph.num_edges() + f;
  if ((2 * c - chi) % 2 != 0 || 2 * c - chi < 0)
    throw std::logic_error("trace_faces: inconsistent Euler characteristic");
  e.euler_genus = (2 * c - chi) / 2;
  return e;
}

void require_embedding_of(const Graph& g, const Embedding& e) {
  if (e.graph.num_vertices() != g.num_vertices() ||
      e.graph.num_edges() != g.num_edges())
    throw std::invalid_argument("embedding does not match the graph");
  for (int v = 0; v < g.num_vertices(); ++v)
    if (e.graph.neighbors(v) != g.neighbors(v))
      throw std::invalid_argument("embedding does not match the graph");
}

std::pair<Embedding, std::vector<int>> restrict_embedding(
    const Embedding& e, const std::vector<int>& keep) {
  std::vector<int> old_id = keep;
  std::sort(old_id.begin(), old_id.end());
  old_id.erase(std::unique(old_id.begin(), old_id.end()), old_id.end());
  std::vector<int> new_id(e.graph.num_vertices(), -1);
  for (int i = 0; i < static_cast<int>(old_id.size()); ++i)
    new_id[old_id[i]] = i;
  int n = static_cast<int>(old_id.size());
  Graph g(n);
  std::vector<std::vector<int>> rot(n);
  for (int i = 0; i < n; ++i)
    for (int u : e.rotation[old_id[i]])
      if (new_id[u] != -1) rot[i].push_back(new_id[u]);
  for (int i = 0; i < n; ++i)
    for (int u : rot[i])
      if (i < u) g.add_edge(i, u);
  return {trace_faces(std::move(g), std::move(rot)), std::move(old_id)};
}

ContractionResult contract_connected(const Embedding& e,
                                     const std::vector<int>& set, int rep) {
  std::vector<char> in_set(e.graph.num_vertices(), 0);
  for (int v : set) {
    if (v < 0 || v >= e.graph.num_vertices())
      throw std::invalid_argument("contract_connected: vertex out of range");
    in_set[v] = 1;
  }
  if (!in_set[rep])
    throw std::invalid_argument("contract_connected: rep outside set");

  // BFS tree of the set rooted at rep; children are contracted into their
  // parents deepest-first, so every contraction happens along an original
  // dart that is still alive.
  std::vector<int> order = {rep};
  std::vector<int> tree_dart;  // dart parent->child, aligned with order[1..]
  std::vector<char> seen(e.graph.num_vertices(), 0);
  seen[rep] = 1;
  DartMesh mesh = DartMesh::from(e);
  std::vector<std::vector<int>> dart_at(e.graph.num_vertices());
  for (int d = 0; d < static_cast<int>(mesh.origin.size()); ++d)
    dart_at[mesh.origin[d]].push_back(d);
  for (size_t i = 0; i < order.size(); ++i) {
    int u = order[i];
    for (int d : dart_at[u]) {
      int w = mesh.target[d];
      if (in_set[w] && !seen[w]) {
        seen[w] = 1;
        order.push_back(w);
        tree_dart.push_back(d);
      }
    }
  }
  for (int v : set)
    if (!seen[v])
      throw std::invalid_argument("contract_connected: set not connected");

  for (int i = static_cast<int>(tree_dart.size()) - 1; i >= 0; --i)
    mesh.contract(tree_dart[i]);
  mesh.drop_loops_and_parallels();

  auto [emb, old_id] = mesh.extract();
  if (emb.euler_genus > e.euler_genus)
    throw std::logic_error("contract_connected: genus increased");
  ContractionResult res;
  res.emb = std::move(emb);
  res.old_id = std::move(old_id);
  for (int i = 0; i < static_cast<int>(res.old_id.size()); ++i)
    if (res.old_id[i] == rep) res.blob = i;
  return res;
}

bool Triangulation::is_added(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(added_edges.begin(), added_edges.end(),
                            std::make_pair(u, v));
}

Triangulation triangulate(const Embedding& e) {
  if (e.euler_genus != 0)
    throw std::invalid_argument("triangulate: embedding is not planar");
  if (!is_connected(e.graph))
    throw std::invalid_argument("triangulate: graph not connected");
  if (e.graph.num_vertices() < 3)
    throw std::invalid_argument("triangulate: need at least 3 vertices");

  DartMesh mesh = DartMesh::from(e);
  std::unordered_set<long long> edge_set;
  for (auto [u, v] : e.graph.edges()) edge_set.insert(dart_key(u, v));
  auto has_edge = [&edge_set](int u, int v) {
    return edge_set.count(dart_key(std::min(u, v), std::max(u, v))) > 0;
  };

  // Initial face walks as dart-id lists.
  std::vector<int> offset(e.graph.num_vertices(), 0);
  int total = 0;
  for (int v = 0; v < e.graph.num_vertices(); ++v) {
    offset[v] = total;
    total += static_cast<int>(e.rotation[v].size());
  }
  std::queue<std::vector<int>> work;
  for (const auto& walk : e.faces) {
    std::vector<int> darts;
    for (auto [u, v] : walk) {
      int i = 0;
      while (e.rotation[u][i] != v) ++i;
      darts.push_back(offset[u] + i);
    }
    work.push(std::move(darts));
  }

  std::vector<std::pair<int, int>> added;
  while (!work.empty()) {
    std::vector<int> face = work.front();
    work.pop();
    int len = static_cast<int>(face.size());
    if (len <= 3) continue;
    std::vector<int> w(len);
    for (int k = 0; k < len; ++k) w[k] = mesh.origin[face[k]];

    // First repeated vertex, if any; chords separating its occurrences are
    // preferred so cut vertices stop blocking progress.
    int q1 = -1, q2 = -1;
    for (int a = 0; a < len && q1 == -1; ++a)
      for (int b = a + 1; b < len; ++b)
        if (w[a] == w[b]) {
          q1 = a;
          q2 = b;
          break;
        }

    int sep_i = -1, sep_j = -1, any_i = -1, any_j = -1;
    for (int i = 0; i < len && sep_i == -1; ++i)
      for (int j = i + 2; j < len; ++j) {
        if (i == 0 && j == len - 1) continue;
        if (w[i] == w[j] || has_edge(w[i], w[j])) continue;
        if (any_i == -1) {
          any_i = i;
          any_j = j;
        }
        if (q1 == -1) break;  // no repeats; first valid chord is fine
        bool in1 = i < q1 && q1 < j, in2 = i < q2 && q2 < j;
        bool on_cut = q1 == i || q1 == j || q2 == i || q2 == j;
        if (!on_cut && in1 != in2) {
          sep_i = i;
          sep_j = j;
          break;
        }
      }
    int i = sep_i != -1 ? sep_i : any_i;
    int j = sep_i != -1 ? sep_j : any_j;
    if (i == -1)
      throw std::runtime_error("triangulate: face admits no chord");
    int a = w[i], b = w[j];
    int nd = static_cast<int>(mesh.origin.size());
    int td = nd + 1;
    mesh.origin.push_back(a);
    mesh.target.push_back(b);
    mesh.origin.push_back(b);
    mesh.target.push_back(a);
    mesh.twin.push_back(td);
    mesh.twin.push_back(nd);
    mesh.next.insert(mesh.next.end(), {0, 0});
    mesh.prev.insert(mesh.prev.end(), {0, 0});
    mesh.dart_alive.insert(mesh.dart_alive.end(), {1, 1});
    int prev_i = face[(i + len - 1) % len];
    int prev_j = face[(j + len - 1) % len];
    mesh.insert_after(mesh.twin[prev_i], nd);
    mesh.insert_after(mesh.twin[prev_j], td);
    edge_set.insert(dart_key(std::min(a, b), std::max(a, b)));
    added.push_back({std::min(a, b), std::max(a, b)});

    std::vector<int> f1 = {nd};
    for (int k = j; k != i; k = (k + 1) % len) f1.push_back(face[k]);
    std::vector<int> f2 = {td};
    for (int k = i; k != j; k = (k + 1) % len) f2.push_back(face[k]);
    work.push(std::move(f1));
    work.push(std::move(f2));
  }

  auto [emb, old_id] = mesh.extract();
  for (const auto& walk : emb.faces)
    if (walk.size() != 3)
      throw std::logic_error("triangulate: non-triangular face left");
  if (emb.euler_genus != 0)
    throw std::logic_error("triangulate: genus changed");
  Triangulation t;
  t.emb = std::move(emb);
  std::sort(added.begin(), added.end());
  t.added_edges = std::move(added);
  return t;
}

}  // namespace pcc::planar
