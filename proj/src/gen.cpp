#include "pcc/gen.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace pcc::gen {

namespace {

double unit(std::mt19937_64& eng) { return (eng() >> 11) * 0x1.0p-53; }

long long dart_key(int u, int v) {
  return (static_cast<long long>(u) << 32) | static_cast<unsigned>(v);
}

// Rotations from consistently oriented face cycles: within a face walk
// ... u, v, w ... the neighbor w follows u in the rotation of v.
planar::Embedding from_faces(int n, const std::vector<std::vector<int>>& faces) {
  std::unordered_map<long long, int> succ;
  std::vector<std::vector<int>> incoming(n);
  for (const auto& f : faces) {
    const int k = static_cast<int>(f.size());
    for (int i = 0; i < k; ++i) {
      int u = f[i], v = f[(i + 1) % k], w = f[(i + 2) % k];
      if (!succ.insert({dart_key(u, v), w}).second)
        throw std::logic_error("from_faces: dart in two faces");
      incoming[v].push_back(u);
    }
  }
  Graph g(n);
  std::vector<std::vector<int>> rot(n);
  for (int v = 0; v < n; ++v) {
    if (incoming[v].empty()) continue;
    int u0 = incoming[v][0], u = u0;
    do {
      rot[v].push_back(u);
      if (u < v) g.add_edge(u, v);
      auto it = succ.find(dart_key(u, v));
      if (it == succ.end()) throw std::logic_error("from_faces: open rotation");
      u = it->second;
    } while (u != u0);
    if (rot[v].size() != incoming[v].size())
      throw std::logic_error("from_faces: rotation misses darts");
  }
  auto e = planar::trace_faces(std::move(g), std::move(rot));
  if (e.num_faces() != static_cast<int>(faces.size()))
    throw std::logic_error("from_faces: face count mismatch");
  return e;
}

std::vector<std::vector<int>> stacked_faces(int n, std::mt19937_64& eng) {
  if (n < 3) throw std::invalid_argument("triangulation needs n >= 3");
  std::vector<std::vector<int>> faces{{0, 1, 2}, {2, 1, 0}};
  for (int v = 3; v < n; ++v) {
    std::size_t f = eng() % faces.size();
    int a = faces[f][0], b = faces[f][1], c = faces[f][2];
    faces[f] = {a, b, v};
    faces.push_back({b, c, v});
    faces.push_back({c, a, v});
  }
  return faces;
}

}  // namespace

DecomposedGraph random_partial_ktree(int n, int k, double keep_prob,
                                     std::uint64_t seed) {
  if (k < 1 || n < k + 1)
    throw std::invalid_argument("random_partial_ktree: need n >= k+1, k >= 1");
  std::mt19937_64 eng(seed);
  td::TreeDecomposition t;
  std::vector<std::pair<int, int>> all_edges;
  std::vector<int> first_bag(k + 1);
  for (int i = 0; i <= k; ++i) first_bag[i] = i;
  for (int i = 0; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) all_edges.push_back({i, j});
  t.bags.push_back(first_bag);
  t.parent.push_back(-1);
  t.root = 0;
  for (int v = k + 1; v < n; ++v) {
    int host = static_cast<int>(eng() % t.bags.size());
    std::vector<int> bag = t.bags[host];
    bag.erase(bag.begin() + static_cast<int>(eng() % bag.size()));
    for (int u : bag) all_edges.push_back({std::min(u, v), std::max(u, v)});
    bag.push_back(v);
    std::sort(bag.begin(), bag.end());
    t.bags.push_back(std::move(bag));
    t.parent.push_back(host);
  }
  Graph g(n);
  for (auto [u, v] : all_edges)
    if (keep_prob >= 1.0 || unit(eng) < keep_prob) g.add_edge(u, v);
  return {std::move(g), std::move(t)};
}

Graph random_graph(int n, double edge_prob, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("random_graph: negative n");
  std::mt19937_64 eng(seed);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (unit(eng) < edge_prob) g.add_edge(u, v);
  return g;
}

planar::Embedding grid_embedding(int rows, int cols) {
  if (rows < 1 || cols < 1)
    throw std::invalid_argument("grid_embedding: empty grid");
  const int n = rows * cols;
  Graph g(n);
  std::vector<std::vector<int>> rot(n);
  auto id = [cols](int i, int j) { return i * cols + j; };
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      // compass order keeps every vertex consistently oriented
      if (i > 0) rot[id(i, j)].push_back(id(i - 1, j));
      if (j + 1 < cols) rot[id(i, j)].push_back(id(i, j + 1));
      if (i + 1 < rows) rot[id(i, j)].push_back(id(i + 1, j));
      if (j > 0) rot[id(i, j)].push_back(id(i, j - 1));
      for (int u : rot[id(i, j)])
        if (u < id(i, j)) g.add_edge(u, id(i, j));
    }
  return planar::trace_faces(std::move(g), std::move(rot));
}

planar::Embedding toroidal_grid_embedding(int rows, int cols) {
  if (rows < 3 || cols < 3)
    throw std::invalid_argument("toroidal_grid_embedding: need rows, cols >= 3");
  const int n = rows * cols;
  Graph g(n);
  std::vector<std::vector<int>> rot(n);
  auto id = [rows, cols](int i, int j) {
    return ((i + rows) % rows) * cols + ((j + cols) % cols);
  };
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      rot[id(i, j)] = {id(i - 1, j), id(i, j + 1), id(i + 1, j), id(i, j - 1)};
      for (int u : rot[id(i, j)])
        if (u < id(i, j)) g.add_edge(u, id(i, j));
    }
  return planar::trace_faces(std::move(g), std::move(rot));
}

planar::Embedding dodecahedron_embedding() {
  // layers: outer pentagon 0-4, upper ring 5-9, lower ring 10-14, inner 15-19
  std::vector<std::vector<int>> faces;
  faces.push_back({4, 3, 2, 1, 0});
  for (int i = 0; i < 5; ++i) {
    int i1 = (i + 1) % 5;
    faces.push_back({i, i1, 5 + i1, 10 + i, 5 + i});
    faces.push_back({5 + i1, 10 + i1, 15 + i1, 15 + i, 10 + i});
  }
  faces.push_back({15, 16, 17, 18, 19});
  return from_faces(20, faces);
}

planar::Embedding stacked_triangulation(int n, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  return from_faces(n, stacked_faces(n, eng));
}

planar::Embedding random_triangulation(int n, int flips, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  auto faces = stacked_faces(n, eng);
  std::unordered_map<long long, int> face_at;
  std::unordered_set<long long> present;
  std::vector<std::pair<int, int>> edges;
  for (std::size_t f = 0; f < faces.size(); ++f)
    for (int i = 0; i < 3; ++i) {
      int u = faces[f][i], v = faces[f][(i + 1) % 3];
      face_at[dart_key(u, v)] = static_cast<int>(f);
      if (u < v) {
        edges.push_back({u, v});
        present.insert(dart_key(u, v));
      }
    }
  auto third = [&faces](int f, int a, int b) {
    for (int i = 0; i < 3; ++i)
      if (faces[f][i] == a && faces[f][(i + 1) % 3] == b)
        return faces[f][(i + 2) % 3];
    throw std::logic_error("random_triangulation: dart not on its face");
  };
  for (int t = 0; t < flips && !edges.empty(); ++t) {
    std::size_t idx = eng() % edges.size();
    auto [a, b] = edges[idx];
    int f1 = face_at.at(dart_key(a, b)), f2 = face_at.at(dart_key(b, a));
    int c = third(f1, a, b), d = third(f2, b, a);
    if (c == d || present.count(dart_key(std::min(c, d), std::max(c, d))))
      continue;
    faces[f1] = {a, d, c};
    faces[f2] = {b, c, d};
    face_at.erase(dart_key(a, b));
    face_at.erase(dart_key(b, a));
    for (int f : {f1, f2})
      for (int i = 0; i < 3; ++i)
        face_at[dart_key(faces[f][i], faces[f][(i + 1) % 3])] = f;
    present.erase(dart_key(std::min(a, b), std::max(a, b)));
    present.insert(dart_key(std::min(c, d), std::max(c, d)));
    edges[idx] = {std::min(c, d), std::max(c, d)};
  }
  return from_faces(n, faces);
}

planar::Embedding drop_random_edges(const planar::Embedding& e,
                                    double keep_prob, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  std::unordered_set<long long> kept;
  for (auto [u, v] : e.graph.edges())
    if (unit(eng) < keep_prob) kept.insert(dart_key(u, v));
  const int n = e.graph.num_vertices();
  Graph g(n);
  std::vector<std::vector<int>> rot(n);
  for (int v = 0; v < n; ++v)
    for (int u : e.rotation[v])
      if (kept.count(dart_key(std::min(u, v), std::max(u, v)))) {
        rot[v].push_back(u);
        if (u < v) g.add_edge(u, v);
      }
  return planar::trace_faces(std::move(g), std::move(rot));
}

}  // namespace pcc::gen
