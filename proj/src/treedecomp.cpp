#include "pcc/treedecomp.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace pcc::td {

namespace {

std::vector<int> set_intersect(const std::vector<int>& a,
                               const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

std::vector<int> set_minus(const std::vector<int>& a,
                           const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

}  // namespace

std::vector<std::vector<int>> TreeDecomposition::children() const {
  std::vector<std::vector<int>> ch(num_nodes());
  for (int x = 0; x < num_nodes(); ++x)
    if (parent[x] != -1) ch[parent[x]].push_back(x);
  return ch;
}

std::vector<int> TreeDecomposition::adhesion_set(int x) const {
  if (parent[x] == -1) return {};
  return set_intersect(bags[x], bags[parent[x]]);
}

std::vector<int> TreeDecomposition::margin(int x) const {
  if (parent[x] == -1) return bags[x];
  return set_minus(bags[x], bags[parent[x]]);
}

int TreeDecomposition::width() const {
  int w = -1;
  for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
  return w;
}

int TreeDecomposition::max_adhesion() const {
  int a = 0;
  for (int x = 0; x < num_nodes(); ++x)
    a = std::max(a, static_cast<int>(adhesion_set(x).size()));
  return a;
}

TdStats validate_td(const Graph& g, const TreeDecomposition& td) {
  TdStats st;
  int nb = td.num_nodes();
  auto fail = [&st](std::string msg) {
    st.valid = false;
    st.violation = std::move(msg);
    return st;
  };
  if (nb == 0) return fail("no nodes");
  if (static_cast<int>(td.parent.size()) != nb)
    return fail("parent array size mismatch");
  if (td.root < 0 || td.root >= nb || td.parent[td.root] != -1)
    return fail("bad root");
  // Tree shape: every node reaches the root.
  for (int x = 0; x < nb; ++x) {
    int cur = x, steps = 0;
    while (cur != td.root) {
      cur = td.parent[cur];
      if (cur < 0 || cur >= nb || ++steps > nb)
        return fail("parent pointers do not form a tree");
    }
  }
  for (int x = 0; x < nb; ++x) {
    const auto& b = td.bags[x];
    if (!std::is_sorted(b.begin(), b.end()) ||
        std::adjacent_find(b.begin(), b.end()) != b.end())
      return fail("bag not sorted/unique");
    for (int v : b)
      if (v < 0 || v >= g.num_vertices()) return fail("bag vertex range");
  }

  std::vector<std::vector<int>> holding(g.num_vertices());
  for (int x = 0; x < nb; ++x)
    for (int v : td.bags[x]) holding[v].push_back(x);

  auto in_bag = [&td](int x, int v) {
    const auto& b = td.bags[x];
    return std::binary_search(b.begin(), b.end(), v);
  };

  // (T1) the nodes holding u form one non-empty subtree: exactly one of
  // them has a parent that does not hold u (or is the root).
  for (int u = 0; u < g.num_vertices(); ++u) {
    if (holding[u].empty())
      return fail("vertex " + std::to_string(u) + " in no bag");
    int tops = 0;
    for (int x : holding[u])
      if (td.parent[x] == -1 || !in_bag(td.parent[x], u)) ++tops;
    if (tops != 1)
      return fail("vertex " + std::to_string(u) + " bags not connected");
  }

  // (T2) every edge inside some bag.
  for (auto [u, v] : g.edges()) {
    bool covered = false;
    for (int x : holding[u])
      if (in_bag(x, v)) {
        covered = true;
        break;
      }
    if (!covered)
      return fail("edge " + std::to_string(u) + "-" + std::to_string(v) +
                  " uncovered");
  }

  st.width = td.width();
  st.adhesion = td.max_adhesion();
  return st;
}

std::vector<int> home_nodes(const TreeDecomposition& td, int n) {
  std::vector<int> home(n, -1);
  for (int x = 0; x < td.num_nodes(); ++x)
    for (int v : td.margin(x)) {
      if (home[v] != -1)
        throw std::invalid_argument("home_nodes: invalid decomposition");
      home[v] = x;
    }
  for (int v = 0; v < n; ++v)
    if (home[v] == -1)
      throw std::invalid_argument("home_nodes: vertex in no bag");
  return home;
}

TreeDecomposition normalize_td(const TreeDecomposition& td) {
  // Pass 1: contract adjacent equal bags until none remain.
  std::vector<std::vector<int>> bags = td.bags;
  std::vector<int> parent = td.parent;
  int root = td.root;
  std::vector<char> alive(bags.size(), 1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < static_cast<int>(bags.size()); ++x) {
      if (!alive[x] || parent[x] == -1) continue;
      int pa = parent[x];
      while (!alive[pa]) pa = parent[pa];
      parent[x] = pa;
      if (bags[x] == bags[pa]) {
        alive[x] = 0;
        changed = true;
      }
    }
  }

  // Pass 2: rebuild, expanding margins of size >= 2 into chains.
  TreeDecomposition out;
  std::vector<int> rep(bags.size(), -1);  // node children attach to
  std::vector<int> order;
  std::vector<std::vector<int>> kids(bags.size());
  for (int x = 0; x < static_cast<int>(bags.size()); ++x) {
    if (!alive[x]) continue;
    if (x == root || parent[x] == -1)
      order.push_back(x);
    else
      kids[parent[x]].push_back(x);
  }
  for (size_t i = 0; i < order.size(); ++i)
    for (int c : kids[order[i]]) order.push_back(c);

  for (int x : order) {
    int up = parent[x] == -1 ? -1 : rep[parent[x]];
    std::vector<int> adh;
    if (up != -1) adh = set_intersect(bags[x], out.bags[up]);
    std::vector<int> marg = set_minus(bags[x], adh);
    if (marg.size() <= 1) {
      out.bags.push_back(bags[x]);
      out.parent.push_back(up);
      rep[x] = out.num_nodes() - 1;
    } else {
      std::vector<int> bag = adh;
      int prev = up;
      for (int v : marg) {
        bag.insert(std::lower_bound(bag.begin(), bag.end(), v), v);
        out.bags.push_back(bag);
        out.parent.push_back(prev);
        prev = out.num_nodes() - 1;
      }
      rep[x] = prev;
    }
  }
  out.root = 0;
  return out;
}

std::pair<Graph, std::vector<int>> torso(const Graph& g,
                                         const TreeDecomposition& td, int x) {
  const auto& bag = td.bags[x];
  auto [h, old_id] = induced_subgraph(g, bag);
  auto add_clique = [&](const std::vector<int>& vs) {
    for (size_t i = 0; i < vs.size(); ++i)
      for (size_t j = i + 1; j < vs.size(); ++j) {
        int a = static_cast<int>(
            std::lower_bound(bag.begin(), bag.end(), vs[i]) - bag.begin());
        int b = static_cast<int>(
            std::lower_bound(bag.begin(), bag.end(), vs[j]) - bag.begin());
        h.add_edge(a, b);
      }
  };
  add_clique(td.adhesion_set(x));
  for (int y = 0; y < td.num_nodes(); ++y)
    if (td.parent[y] == x) add_clique(td.adhesion_set(y));
  return {std::move(h), std::move(old_id)};
}

SkeletonDag skeleton(const TreeDecomposition& td, int n) {
  SkeletonDag s;
  s.out.assign(n, {});
  for (int x = 0; x < td.num_nodes(); ++x) {
    std::vector<int> adh = td.adhesion_set(x);
    for (int u : td.margin(x)) s.out[u] = adh;
  }
  return s;
}

std::vector<std::vector<int>> skeleton_closure(const SkeletonDag& s, int p) {
  int n = s.num_vertices();
  std::vector<std::vector<int>> reach(n);
  for (int u = 0; u < n; ++u) reach[u] = {u};
  for (int round = 0; round < p; ++round) {
    std::vector<std::vector<int>> next(n);
    for (int u = 0; u < n; ++u) {
      std::set<int> acc(reach[u].begin(), reach[u].end());
      for (int v : s.out[u]) acc.insert(reach[v].begin(), reach[v].end());
      next[u].assign(acc.begin(), acc.end());
    }
    reach = std::move(next);
  }
  return reach;
}

Coloring skeleton_coloring(const SkeletonDag& s, int p, int k) {
  int n = s.num_vertices();
  for (int u = 0; u < n; ++u)
    if (static_cast<int>(s.out[u].size()) > k)
      throw std::invalid_argument("skeleton_coloring: out-degree exceeds k");

  auto reach = skeleton_closure(s, p);

  // Process each vertex after all of its out-neighbors: Kahn order over
  // reversed arcs, smallest id first for determinism.
  std::vector<int> pending(n, 0);
  std::vector<std::vector<int>> in(n);
  for (int u = 0; u < n; ++u) {
    pending[u] = static_cast<int>(s.out[u].size());
    for (int v : s.out[u]) in[v].push_back(u);
  }
  std::priority_queue<int, std::vector<int>, std::greater<int>> q;
  for (int u = 0; u < n; ++u)
    if (pending[u] == 0) q.push(u);

  Coloring c;
  c.color.assign(n, -1);
  int processed = 0;
  while (!q.empty()) {
    int u = q.top();
    q.pop();
    ++processed;
    std::vector<char> taken(n + 1, 0);
    for (int v : reach[u])
      if (v != u && c.color[v] != -1) taken[c.color[v]] = 1;
    int mex = 0;
    while (taken[mex]) ++mex;
    c.color[u] = mex;
    c.num_colors = std::max(c.num_colors, mex + 1);
    for (int w : in[u])
      if (--pending[w] == 0) q.push(w);
  }
  if (processed != n)
    throw std::invalid_argument("skeleton_coloring: digraph has a cycle");
  return c;
}

Coloring treewidth_centered_coloring(const Graph& g,
                                     const TreeDecomposition& td, int p) {
  if (p < 1) throw std::invalid_argument("treewidth_centered_coloring: p<1");
  TdStats st = validate_td(g, td);
  if (!st.valid)
    throw std::invalid_argument("treewidth_centered_coloring: invalid td: " +
                                st.violation);
  TreeDecomposition norm = normalize_td(td);
  return skeleton_coloring(skeleton(norm, g.num_vertices()), p, st.width);
}

Coloring lift_over_td(const Graph& g, const TreeDecomposition& td,
                      const TorsoColorer& torso_colorer, int p) {
  if (p < 1) throw std::invalid_argument("lift_over_td: p < 1");
  TdStats st = validate_td(g, td);
  if (!st.valid)
    throw std::invalid_argument("lift_over_td: invalid td: " + st.violation);
  int n = g.num_vertices();
  Coloring kappa =
      skeleton_coloring(skeleton(td, n), p, std::max(st.adhesion, 1));
  std::vector<int> home = home_nodes(td, n);
  std::vector<std::vector<int>> tuples(n);
  for (int x = 0; x < td.num_nodes(); ++x) {
    bool needed = false;
    for (int v : td.margin(x))
      if (home[v] == x) needed = true;
    if (!needed) continue;
    auto [t, old_id] = torso(g, td, x);
    Coloring lambda = torso_colorer(t, p);
    if (lambda.size() != t.num_vertices())
      throw std::invalid_argument("lift_over_td: torso coloring size");
    for (int i = 0; i < t.num_vertices(); ++i) {
      int v = old_id[i];
      if (home[v] == x) tuples[v] = {kappa.color[v], lambda.color[i]};
    }
  }
  return dense_from_tuples(tuples);
}

}  // namespace pcc::td
