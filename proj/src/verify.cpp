#include "pcc/verify.hpp"

#include <algorithm>
#include <stdexcept>

namespace pcc::verify {

namespace {

// Components of G[S]; S given as a sorted vertex list.
std::vector<std::vector<int>> components_within(const Graph& g,
                                                const std::vector<int>& s,
                                                std::vector<char>& in_s) {
  for (int v : s) in_s[v] = 1;
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(g.num_vertices(), 0);
  for (int start : s) {
    if (seen[start]) continue;
    std::vector<int> comp = {start};
    seen[start] = 1;
    for (size_t i = 0; i < comp.size(); ++i)
      for (int w : g.neighbors(comp[i]))
        if (in_s[w] && !seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  for (int v : s) in_s[v] = 0;
  return comps;
}

bool connected_within(const Graph& g, const std::vector<int>& s,
                      std::vector<char>& in_s) {
  if (s.empty()) return false;
  for (int v : s) in_s[v] = 1;
  std::vector<int> stack = {s[0]};
  in_s[s[0]] = 2;
  size_t reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(u))
      if (in_s[w] == 1) {
        in_s[w] = 2;
        ++reached;
        stack.push_back(w);
      }
  }
  for (int v : s) in_s[v] = 0;
  return reached == s.size();
}

// True when no color appears exactly once on s.
bool no_unique_color(const Coloring& c, const std::vector<int>& s,
                     std::vector<int>& cnt) {
  for (int v : s) ++cnt[c.color[v]];
  bool ok = true;
  for (int v : s)
    if (cnt[c.color[v]] == 1) ok = false;
  for (int v : s) cnt[c.color[v]] = 0;
  return ok;
}

std::vector<int> colors_on(const Coloring& c, const std::vector<int>& s) {
  std::vector<int> cols;
  for (int v : s) cols.push_back(c.color[v]);
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  return cols;
}

struct CenteredCtx {
  const Graph& g;
  const Coloring& c;
  std::vector<char> in_s;
  std::vector<int> cnt;

  CenteredCtx(const Graph& g, const Coloring& c)
      : g(g), c(c), in_s(g.num_vertices(), 0), cnt(c.num_colors, 0) {}

  // Shrink a witness while it stays connected with no unique color.
  std::vector<int> minimize(std::vector<int> bad) {
    bool changed = true;
    while (changed && bad.size() > 1) {
      changed = false;
      for (size_t i = 0; i < bad.size(); ++i) {
        std::vector<int> cand = bad;
        cand.erase(cand.begin() + i);
        if (connected_within(g, cand, in_s) && no_unique_color(c, cand, cnt)) {
          bad = std::move(cand);
          changed = true;
          break;
        }
      }
    }
    return bad;
  }

  // Every component must contain a uniquely colored vertex; delete it and
  // recurse. A unique vertex owns its color alone, so each level of the
  // recursion removes one color and depth stays below |X|.
  bool check_component(const std::vector<int>& comp, CenteredVerdict& out) {
    for (int v : comp) ++cnt[c.color[v]];
    int unique = -1;
    for (int v : comp)
      if (cnt[c.color[v]] == 1) {
        unique = v;
        break;
      }
    for (int v : comp) cnt[c.color[v]] = 0;
    if (unique == -1) {
      out.centered = false;
      out.counterexample = minimize(comp);
      out.counterexample_colors = colors_on(c, out.counterexample);
      return false;
    }
    if (comp.size() == 1) return true;
    std::vector<int> rest;
    for (int v : comp)
      if (v != unique) rest.push_back(v);
    for (const auto& sub : components_within(g, rest, in_s))
      if (!check_component(sub, out)) return false;
    return true;
  }
};

}  // namespace

CenteredVerdict check_p_centered(const Graph& g, const Coloring& c, int p) {
  if (p < 1) throw std::invalid_argument("check_p_centered: p < 1");
  if (c.size() != g.num_vertices())
    throw std::invalid_argument("check_p_centered: coloring size mismatch");
  CenteredVerdict out;
  std::vector<int> used = c.used_colors();
  int k = std::min<int>(p, static_cast<int>(used.size()));
  if (k == 0) return out;
  CenteredCtx ctx(g, c);
  std::vector<char> in_x(c.num_colors, 0);

  // Every violating set lies inside some exactly-k subset of used colors.
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    for (int i = 0; i < k; ++i) in_x[used[pick[i]]] = 1;
    std::vector<int> s;
    for (int v = 0; v < g.num_vertices(); ++v)
      if (in_x[c.color[v]]) s.push_back(v);
    bool ok = true;
    for (const auto& comp : components_within(g, s, ctx.in_s))
      if (!ctx.check_component(comp, out)) {
        ok = false;
        break;
      }
    for (int i = 0; i < k; ++i) in_x[used[pick[i]]] = 0;
    if (!ok) return out;

    int i = k - 1;
    while (i >= 0 && pick[i] == static_cast<int>(used.size()) - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

CenteredVerdict check_p_centered_naive(const Graph& g, const Coloring& c,
                                       int p) {
  int n = g.num_vertices();
  if (n > 20)
    throw std::invalid_argument("check_p_centered_naive: n > 20");
  if (c.size() != n)
    throw std::invalid_argument("check_p_centered_naive: size mismatch");
  CenteredVerdict out;
  std::vector<char> in_s(n, 0);
  std::vector<int> cnt(c.num_colors, 0);
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) s.push_back(v);
    if (!connected_within(g, s, in_s)) continue;
    if (static_cast<int>(colors_on(c, s).size()) > p) continue;
    if (no_unique_color(c, s, cnt)) {
      out.centered = false;
      out.counterexample = s;
      out.counterexample_colors = colors_on(c, s);
      return out;
    }
  }
  return out;
}

int TreedepthForest::max_depth() const {
  int d = 0;
  for (int x : depth) d = std::max(d, x);
  return d;
}

int TreedepthForest::index_of(int v) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
  if (it == vertices.end() || *it != v) return -1;
  return static_cast<int>(it - vertices.begin());
}

namespace {

void build_forest(const Graph& g, const Coloring& c,
                  const std::vector<int>& comp, int parent, int depth,
                  std::vector<char>& in_s, std::vector<int>& cnt,
                  TreedepthForest& f) {
  for (int v : comp) ++cnt[c.color[v]];
  int root = -1;
  for (int v : comp)
    if (cnt[c.color[v]] == 1) {
      root = v;
      break;
    }
  for (int v : comp) cnt[c.color[v]] = 0;
  if (root == -1)
    throw std::runtime_error(
        "treedepth_forest_from_coloring: component without unique color");
  int idx = f.index_of(root);
  f.parent[idx] = parent;
  f.depth[idx] = depth;
  std::vector<int> rest;
  for (int v : comp)
    if (v != root) rest.push_back(v);
  for (const auto& sub : components_within(g, rest, in_s))
    build_forest(g, c, sub, root, depth + 1, in_s, cnt, f);
}

}  // namespace

TreedepthForest treedepth_forest_from_coloring(const Graph& g,
                                               const Coloring& c,
                                               const std::vector<int>& x) {
  std::vector<char> in_x(c.num_colors, 0);
  for (int col : x) {
    if (col < 0 || col >= c.num_colors)
      throw std::invalid_argument("treedepth_forest: color out of range");
    in_x[col] = 1;
  }
  TreedepthForest f;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (in_x[c.color[v]]) f.vertices.push_back(v);
  f.parent.assign(f.vertices.size(), -1);
  f.depth.assign(f.vertices.size(), 0);
  std::vector<char> in_s(g.num_vertices(), 0);
  std::vector<int> cnt(c.num_colors, 0);
  for (const auto& comp : components_within(g, f.vertices, in_s))
    build_forest(g, c, comp, -1, 1, in_s, cnt, f);
  return f;
}

namespace {

struct MinColorCtx {
  const Graph& g;
  int p;
  int max_colors;
  std::vector<int> color;  // -1 = uncolored

  // State of the connected set being grown in partial_ok().
  std::vector<int> cnt;
  std::vector<char> in_set, banned;
  int distinct = 0;
  int uniques = 0;

  MinColorCtx(const Graph& g, int p, int k)
      : g(g), p(p), max_colors(k), color(g.num_vertices(), -1), cnt(k, 0),
        in_set(g.num_vertices(), 0), banned(g.num_vertices(), 0) {}

  void add(int v) {
    int c = color[v];
    ++cnt[c];
    if (cnt[c] == 1) ++distinct, ++uniques;
    if (cnt[c] == 2) --uniques;
  }

  void remove(int v) {
    int c = color[v];
    --cnt[c];
    if (cnt[c] == 0) --distinct, --uniques;
    if (cnt[c] == 1) ++uniques;
  }

  // Enumerates connected colored sets containing the newest vertex; a set
  // with <= p colors and no unique color dooms every extension of the
  // current partial coloring, because later vertices cannot rescue it.
  // Returns false once such a set is found.
  bool grow(const std::vector<int>& cand) {
    if (distinct > p) return true;  // supersets only gain colors
    if (uniques == 0) return false;
    std::vector<int> banned_here;
    bool ok = true;
    for (size_t i = 0; i < cand.size() && ok; ++i) {
      int u = cand[i];
      if (banned[u] || in_set[u]) continue;
      std::vector<int> next_cand(cand.begin() + i + 1, cand.end());
      for (int w : g.neighbors(u))
        if (color[w] != -1 && !banned[w] && !in_set[w] && w != u)
          next_cand.push_back(w);
      in_set[u] = 1;
      add(u);
      ok = grow(next_cand);
      remove(u);
      in_set[u] = 0;
      banned[u] = 1;
      banned_here.push_back(u);
    }
    for (int u : banned_here) banned[u] = 0;
    return ok;
  }

  bool partial_ok(int v) {
    std::fill(cnt.begin(), cnt.end(), 0);
    distinct = uniques = 0;
    in_set[v] = 1;
    add(v);
    std::vector<int> cand;
    for (int w : g.neighbors(v))
      if (color[w] != -1) cand.push_back(w);
    bool ok = grow(cand);
    remove(v);
    in_set[v] = 0;
    return ok;
  }

  bool solve(int v, int used) {
    if (v == g.num_vertices()) return true;
    int limit = std::min(max_colors - 1, used);
    for (int c = 0; c <= limit; ++c) {
      color[v] = c;
      if (partial_ok(v) && solve(v + 1, std::max(used, c + 1))) return true;
      color[v] = -1;
    }
    return false;
  }
};

}  // namespace

int min_p_centered_colors(const Graph& g, int p) {
  if (p < 1) throw std::invalid_argument("min_p_centered_colors: p < 1");
  int n = g.num_vertices();
  if (n > 12) throw std::invalid_argument("min_p_centered_colors: n > 12");
  if (n == 0) return 0;
  for (int k = 1; k <= n; ++k) {
    MinColorCtx ctx(g, p, k);
    if (ctx.solve(0, 0)) return k;
  }
  return n;
}

}  // namespace pcc::verify
