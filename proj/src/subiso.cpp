#include "pcc/subiso.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace pcc::subiso {

namespace {

// Chunk evaluation per the treedepth recursion. gamma doubles as the
// witness: entries are set when a pattern vertex is committed to a host
// vertex and undone when that branch fails.
struct Engine {
  const Graph& h;
  const Graph& g;
  const std::vector<int>& alpha;
  const std::vector<std::vector<int>>& children;
  const std::vector<unsigned>& hadj;
  std::vector<int>& gamma;
  SiStats* stats;

  bool edges_ok(unsigned d) const {
    for (unsigned rest = d; rest;) {
      int a = std::countr_zero(rest);
      rest &= rest - 1;
      unsigned nb = hadj[a] & d;
      while (nb) {
        int b = std::countr_zero(nb);
        nb &= nb - 1;
        if (b > a && !g.has_edge(gamma[a], gamma[b])) return false;
      }
    }
    return true;
  }

  void record(int u, unsigned x, unsigned d, int depth) {
    ++stats->calls;
    stats->max_depth = std::max(stats->max_depth, depth);
    std::string key;
    key.reserve(12 + 4 * std::popcount(d));
    auto put = [&key](unsigned v) {
      for (int i = 0; i < 4; ++i) key.push_back(static_cast<char>(v >> (8 * i)));
    };
    put(static_cast<unsigned>(u));
    put(x);
    put(d);
    for (unsigned rest = d; rest;) {
      int a = std::countr_zero(rest);
      rest &= rest - 1;
      put(static_cast<unsigned>(gamma[a]));
    }
    if (!stats->keys.insert(key).second) stats->unique_calls = false;
  }

  bool compute(int u, unsigned x, unsigned d, int depth) {
    if (stats) record(u, x, d, depth);
    const auto& ch = children[u];
    const int w = alpha[u];
    if (ch.empty()) {
      if (x == 0) return edges_ok(d);
      if (x != (1u << w)) return false;
      if (!edges_ok(d)) return false;
      for (unsigned nb = hadj[w] & d; nb;) {
        int a = std::countr_zero(nb);
        nb &= nb - 1;
        if (!g.has_edge(u, gamma[a])) return false;
      }
      gamma[w] = u;
      return true;
    }
    if (!((x >> w) & 1)) {
      for (int v : ch)
        if (compute(v, x, d, depth + 1)) return true;
      return false;
    }
    for (int v : ch)
      if (compute(v, x, d, depth + 1)) return true;
    // Map w to u. The recursion's vacuous-conjunction corner (x == {w})
    // would otherwise accept without ever checking w's edges into d, so the
    // check happens here; for the other branches it is a sound prune.
    for (unsigned nb = hadj[w] & d; nb;) {
      int a = std::countr_zero(nb);
      nb &= nb - 1;
      if (!g.has_edge(u, gamma[a])) return false;
    }
    gamma[w] = u;
    unsigned rest = x & ~(1u << w);
    while (rest) {
      unsigned z = rest & (-rest), frontier = z;
      while (frontier) {
        int a = std::countr_zero(frontier);
        frontier &= frontier - 1;
        unsigned grow = hadj[a] & rest & ~z;
        z |= grow;
        frontier |= grow;
      }
      rest &= ~z;
      bool any = false;
      for (int v : ch)
        if (compute(v, z, d | (1u << w), depth + 1)) {
          any = true;
          break;
        }
      if (!any) {
        gamma[w] = -1;
        return false;
      }
    }
    return true;
  }
};

void validate_host(const Graph& h, const TreedepthHost& host) {
  const int n = host.g.num_vertices();
  const int p = h.num_vertices();
  const auto& f = host.forest;
  if (static_cast<int>(f.vertices.size()) != n)
    throw std::invalid_argument("si_compliant: forest does not span the host");
  for (int i = 0; i < n; ++i)
    if (f.vertices[i] != i)
      throw std::invalid_argument("si_compliant: forest vertices are not 0..n-1");
  for (int i = 0; i < n; ++i) {
    int par = f.parent[i];
    if (par < -1 || par >= n || par == i)
      throw std::invalid_argument("si_compliant: bad forest parent");
    int want = par == -1 ? 1 : f.depth[par] + 1;
    if (f.depth[i] != want)
      throw std::invalid_argument("si_compliant: inconsistent forest depth");
  }
  for (auto [u, v] : host.g.edges()) {
    int a = u, b = v;
    while (f.depth[a] > f.depth[b]) a = f.parent[a];
    while (f.depth[b] > f.depth[a]) b = f.parent[b];
    if (a != b)
      throw std::invalid_argument(
          "si_compliant: edge not between forest ancestor and descendant");
  }
  if (static_cast<int>(host.alpha.size()) != n)
    throw std::invalid_argument("si_compliant: alpha size mismatch");
  for (int v = 0; v < n; ++v)
    if (host.alpha[v] < 0 || host.alpha[v] >= p)
      throw std::invalid_argument("si_compliant: alpha value out of range");
}

}  // namespace

bool si_compliant(const Graph& h, const TreedepthHost& host,
                  std::vector<int>* embedding, SiStats* stats) {
  const int p = h.num_vertices();
  if (p < 1) throw std::invalid_argument("si_compliant: empty pattern");
  if (p > 31) throw std::invalid_argument("si_compliant: pattern too large");
  validate_host(h, host);
  const int n = host.g.num_vertices();

  // Label-class and degree filters: every pattern vertex needs a host vertex
  // of its class with enough degree.
  std::vector<int> best_deg(p, -1);
  for (int v = 0; v < n; ++v)
    best_deg[host.alpha[v]] = std::max(
        best_deg[host.alpha[v]], static_cast<int>(host.g.neighbors(v).size()));
  for (int w = 0; w < p; ++w)
    if (best_deg[w] < static_cast<int>(h.neighbors(w).size())) return false;

  std::vector<std::vector<int>> children(n);
  std::vector<int> roots;
  for (int v = 0; v < n; ++v) {
    if (host.forest.parent[v] == -1)
      roots.push_back(v);
    else
      children[host.forest.parent[v]].push_back(v);
  }
  std::vector<unsigned> hadj(p, 0);
  for (auto [a, b] : h.edges()) {
    hadj[a] |= 1u << b;
    hadj[b] |= 1u << a;
  }

  std::vector<int> gamma(p, -1);
  Engine eng{h, host.g, host.alpha, children, hadj, gamma, stats};

  unsigned todo = p == 31 ? 0x7fffffffu : (1u << p) - 1;
  while (todo) {
    unsigned comp = todo & (-todo), frontier = comp;
    while (frontier) {
      int a = std::countr_zero(frontier);
      frontier &= frontier - 1;
      unsigned grow = hadj[a] & todo & ~comp;
      comp |= grow;
      frontier |= grow;
    }
    todo &= ~comp;
    bool found = false;
    for (int r : roots)
      if (eng.compute(r, comp, 0, 1)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  if (embedding) {
    for (int w = 0; w < p; ++w)
      if (gamma[w] < 0) throw std::logic_error("si_compliant: incomplete witness");
    *embedding = gamma;
  }
  return true;
}

CompliantFamily::CompliantFamily(int g_size, int h_size, FamilyMode mode,
                                 std::uint64_t seed, int trials)
    : n_(g_size), p_(h_size), trials_(trials), mode_(mode), eng_(seed) {
  if (p_ < 1) throw std::invalid_argument("compliant_family: empty pattern");
  if (trials_ < 1) throw std::invalid_argument("compliant_family: trials < 1");
  if (mode_ == FamilyMode::exhaustive) {
    std::uint64_t total = 1;
    for (int i = 0; i < n_ && total <= 4096; ++i) total *= p_;
    all_maps_ = total <= 4096;
    if (all_maps_) {
      counter_.assign(n_, 0);
    } else {
      build_perfect_family();
      sigma_.resize(p_);
      std::iota(sigma_.begin(), sigma_.end(), 0);
    }
  } else {
    if (!advance_trial()) done_ = true;
  }
}

// Greedy cover: random bucket maps are kept while they hit uncovered
// p-subsets, until every p-subset of host vertices has an injective map.
void CompliantFamily::build_perfect_family() {
  if (n_ < p_) return;  // no injective map exists, empty family is complete
  std::uint64_t combos = 1;
  for (int i = 0; i < p_; ++i) combos = combos * (n_ - i) / (i + 1);
  if (combos > 2'000'000)
    throw std::invalid_argument(
        "compliant_family: exhaustive mode infeasible, use randomized");
  const std::size_t total = static_cast<std::size_t>(combos);
  std::vector<char> covered(total, 0);
  std::size_t remaining = total;

  auto scan = [&](const std::vector<int>& f, bool commit) {
    std::vector<int> c(p_);
    std::iota(c.begin(), c.end(), 0);
    std::size_t idx = 0, gain = 0;
    while (true) {
      if (!covered[idx]) {
        unsigned mask = 0;
        for (int j = 0; j < p_; ++j) mask |= 1u << f[c[j]];
        if (std::popcount(mask) == p_) {
          ++gain;
          if (commit) {
            covered[idx] = 1;
            --remaining;
          }
        }
      }
      int i = p_ - 1;
      while (i >= 0 && c[i] == n_ - p_ + i) --i;
      if (i < 0) break;
      ++c[i];
      for (int j = i + 1; j < p_; ++j) c[j] = c[j - 1] + 1;
      ++idx;
    }
    return gain;
  };

  std::vector<int> cand(n_);
  for (int v = 0; v < n_; ++v) cand[v] = v % p_;
  int rounds = 0;
  while (remaining > 0) {
    if (++rounds > 20000)
      throw std::logic_error("compliant_family: cover construction stalled");
    std::vector<int> best;
    std::size_t best_gain = 0;
    for (int b = 0; b < 16; ++b) {
      std::size_t gain = scan(cand, false);
      if (gain > best_gain) {
        best_gain = gain;
        best = cand;
      }
      for (int v = 0; v < n_; ++v) cand[v] = static_cast<int>(eng_() % p_);
    }
    if (best_gain > 0) {
      scan(best, true);
      funcs_.push_back(std::move(best));
    }
  }
}

bool CompliantFamily::advance_trial() {
  const int q = p_ * p_;
  while (trial_ < trials_) {
    ++trial_;
    fmap_.resize(n_);
    for (int v = 0; v < n_; ++v) fmap_[v] = static_cast<int>(eng_() % q);
    used_ = fmap_;
    std::sort(used_.begin(), used_.end());
    used_.erase(std::unique(used_.begin(), used_.end()), used_.end());
    if (static_cast<int>(used_.size()) < p_) continue;
    comb_.resize(p_);
    std::iota(comb_.begin(), comb_.end(), 0);
    sigma_.resize(p_);
    std::iota(sigma_.begin(), sigma_.end(), 0);
    slot_.assign(q, -1);
    for (int j = 0; j < p_; ++j) slot_[used_[comb_[j]]] = j;
    return true;
  }
  return false;
}

bool CompliantFamily::next(std::vector<int>& alpha) {
  if (done_) return false;
  if (mode_ == FamilyMode::exhaustive && all_maps_) {
    alpha = counter_;
    int i = 0;
    while (i < n_ && ++counter_[i] == p_) counter_[i++] = 0;
    if (i == n_) done_ = true;
    return true;
  }
  if (mode_ == FamilyMode::exhaustive) {
    if (fi_ >= funcs_.size()) {
      done_ = true;
      return false;
    }
    alpha.resize(n_);
    for (int v = 0; v < n_; ++v) alpha[v] = sigma_[funcs_[fi_][v]];
    if (!std::next_permutation(sigma_.begin(), sigma_.end())) ++fi_;
    if (fi_ >= funcs_.size()) done_ = true;
    return true;
  }
  alpha.resize(n_);
  for (int v = 0; v < n_; ++v) {
    int s = slot_[fmap_[v]];
    alpha[v] = s >= 0 ? sigma_[s] : 0;
  }
  if (!std::next_permutation(sigma_.begin(), sigma_.end())) {
    const int u = static_cast<int>(used_.size());
    int i = p_ - 1;
    while (i >= 0 && comb_[i] == u - p_ + i) --i;
    if (i >= 0) {
      ++comb_[i];
      for (int j = i + 1; j < p_; ++j) comb_[j] = comb_[j - 1] + 1;
      slot_.assign(p_ * p_, -1);
      for (int j = 0; j < p_; ++j) slot_[used_[comb_[j]]] = j;
    } else if (!advance_trial()) {
      done_ = true;
    }
  }
  return true;
}

bool subgraph_isomorphism(const Graph& h, const Graph& g,
                          const std::function<Coloring(const Graph&, int)>& colorer,
                          int p_override, const SiOptions& opts) {
  const int p = h.num_vertices();
  if (p < 1) throw std::invalid_argument("subgraph_isomorphism: empty pattern");
  const int n = g.num_vertices();
  if (p > n || h.num_edges() > g.num_edges()) return false;
  std::size_t hdeg = 0, gdeg = 0;
  for (int v = 0; v < p; ++v) hdeg = std::max(hdeg, h.neighbors(v).size());
  for (int v = 0; v < n; ++v) gdeg = std::max(gdeg, g.neighbors(v).size());
  if (hdeg > gdeg) return false;

  const int pc = p_override <= 0 ? p : p_override;
  if (pc < p)
    throw std::invalid_argument("subgraph_isomorphism: p_override below |V(h)|");
  Coloring col = colorer(g, pc);
  if (col.size() != n)
    throw std::runtime_error("subgraph_isomorphism: colorer size mismatch");
  if (opts.verify_coloring && !verify::check_p_centered(g, col, pc).centered)
    throw std::runtime_error("subgraph_isomorphism: colorer output not centered");

  const auto used = col.used_colors();
  const auto classes = col.classes();
  const int s = std::min<int>(p, static_cast<int>(used.size()));

  std::size_t h_comp_max = 0;
  for (const auto& c : connected_components(h))
    h_comp_max = std::max(h_comp_max, c.size());

  std::vector<int> c(s);
  std::iota(c.begin(), c.end(), 0);
  while (true) {
    std::vector<int> vs;
    for (int j = 0; j < s; ++j) {
      const auto& cls = classes[used[c[j]]];
      vs.insert(vs.end(), cls.begin(), cls.end());
    }
    std::sort(vs.begin(), vs.end());
    if (static_cast<int>(vs.size()) >= p) {
      auto [gx, old_id] = induced_subgraph(g, vs);
      bool feasible = gx.num_edges() >= h.num_edges();
      if (feasible) {
        std::size_t gx_comp_max = 0;
        for (const auto& cc : connected_components(gx))
          gx_comp_max = std::max(gx_comp_max, cc.size());
        feasible = gx_comp_max >= h_comp_max;
      }
      if (feasible) {
        std::vector<int> xcolors(s);
        for (int j = 0; j < s; ++j) xcolors[j] = used[c[j]];
        auto fg = verify::treedepth_forest_from_coloring(g, col, xcolors);
        if (fg.vertices != vs)
          throw std::logic_error(
              "subgraph_isomorphism: forest members differ from color classes");
        verify::TreedepthForest local;
        const int k = static_cast<int>(vs.size());
        local.vertices.resize(k);
        std::iota(local.vertices.begin(), local.vertices.end(), 0);
        local.parent.resize(k);
        for (int i = 0; i < k; ++i) {
          int gp = fg.parent[i];
          local.parent[i] =
              gp == -1 ? -1
                       : static_cast<int>(std::lower_bound(vs.begin(), vs.end(),
                                                           gp) -
                                          vs.begin());
        }
        local.depth = fg.depth;

        TreedepthHost host{std::move(gx), std::move(local), {}};
        CompliantFamily fam(k, p, opts.mode, opts.seed, opts.trials);
        while (fam.next(host.alpha)) {
          bool found;
          if (opts.stats) {
            SiStats call;
            found = si_compliant(h, host, opts.embedding, &call);
            opts.stats->calls += call.calls;
            opts.stats->max_depth = std::max(opts.stats->max_depth, call.max_depth);
            opts.stats->unique_calls = opts.stats->unique_calls && call.unique_calls;
            opts.stats->depth_bounded = opts.stats->depth_bounded &&
                                        call.max_depth <= host.forest.max_depth();
          } else {
            found = si_compliant(h, host, opts.embedding);
          }
          if (found) {
            if (opts.embedding)
              for (int w = 0; w < p; ++w)
                (*opts.embedding)[w] = old_id[(*opts.embedding)[w]];
            return true;
          }
        }
      }
    }
    int i = s - 1;
    const int u = static_cast<int>(used.size());
    while (i >= 0 && c[i] == u - s + i) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < s; ++j) c[j] = c[j - 1] + 1;
  }
  return false;
}

namespace {

bool naive_extend(const Graph& h, const Graph& g, const std::vector<int>& order,
                  std::size_t i, const std::vector<int>* cls,
                  const std::vector<int>& alpha, std::vector<int>& emb,
                  std::vector<char>& taken) {
  if (i == order.size()) return true;
  const int w = order[i];
  const int n = g.num_vertices();
  for (int v = 0; v < n; ++v) {
    if (taken[v]) continue;
    if (cls && alpha[v] != w) continue;
    if (g.neighbors(v).size() < h.neighbors(w).size()) continue;
    bool ok = true;
    for (int x : h.neighbors(w))
      if (emb[x] >= 0 && !g.has_edge(v, emb[x])) {
        ok = false;
        break;
      }
    if (!ok) continue;
    emb[w] = v;
    taken[v] = 1;
    if (naive_extend(h, g, order, i + 1, cls, alpha, emb, taken)) return true;
    emb[w] = -1;
    taken[v] = 0;
  }
  return false;
}

bool naive_match(const Graph& h, const Graph& g, const std::vector<int>* alpha,
                 std::vector<int>* embedding) {
  const int p = h.num_vertices();
  if (p < 1) throw std::invalid_argument("naive matcher: empty pattern");
  std::vector<int> order(p);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    auto da = h.neighbors(a).size(), db = h.neighbors(b).size();
    return da != db ? da > db : a < b;
  });
  std::vector<int> emb(p, -1);
  std::vector<char> taken(g.num_vertices(), 0);
  static const std::vector<int> no_alpha;
  if (!naive_extend(h, g, order, 0, alpha, alpha ? *alpha : no_alpha, emb,
                    taken))
    return false;
  if (embedding) *embedding = emb;
  return true;
}

}  // namespace

bool subgraph_isomorphism_naive(const Graph& h, const Graph& g,
                                std::vector<int>* embedding) {
  return naive_match(h, g, nullptr, embedding);
}

bool compliant_embedding_naive(const Graph& h, const Graph& g,
                               const std::vector<int>& alpha,
                               std::vector<int>* embedding) {
  if (static_cast<int>(alpha.size()) != g.num_vertices())
    throw std::invalid_argument("compliant matcher: alpha size mismatch");
  return naive_match(h, g, &alpha, embedding);
}

}  // namespace pcc::subiso
