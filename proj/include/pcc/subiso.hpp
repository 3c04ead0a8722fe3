#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "pcc/coloring.hpp"
#include "pcc/graph.hpp"
#include "pcc/verify.hpp"

namespace pcc::subiso {

// Host graph with a treedepth forest spanning it and a label map alpha into
// the pattern's vertices. A compliant embedding eta satisfies
// alpha(eta(u)) = u for every pattern vertex u.
struct TreedepthHost {
  Graph g;
  verify::TreedepthForest forest;  // vertices must be exactly 0..n-1
  std::vector<int> alpha;          // V(g) -> V(h)
};

struct SiStats {
  long long calls = 0;
  int max_depth = 0;
  bool unique_calls = true;
  bool depth_bounded = true;  // depth never exceeded the forest depth
  std::unordered_set<std::string> keys;
};

// Recursive chunk evaluation over the treedepth forest. Polynomial space:
// no memo table, every subproblem is entered at most once. When `embedding`
// is given it receives the witness (pattern vertex -> host vertex).
bool si_compliant(const Graph& h, const TreedepthHost& host,
                  std::vector<int>* embedding = nullptr,
                  SiStats* stats = nullptr);

enum class FamilyMode { exhaustive, randomized };

// Stream of label maps alpha: [g_size] -> [h_size] such that every injective
// eta from the pattern into the host is inverted by some emitted alpha.
// Exhaustive mode guarantees coverage; randomized mode misses a fixed eta
// with probability at most 2^-trials.
class CompliantFamily {
 public:
  CompliantFamily(int g_size, int h_size, FamilyMode mode, std::uint64_t seed,
                  int trials);
  bool next(std::vector<int>& alpha);

 private:
  void build_perfect_family();
  bool advance_trial();

  int n_, p_, trials_;
  FamilyMode mode_;
  std::mt19937_64 eng_;
  bool done_ = false;

  // exhaustive, tiny: odometer over all p_^n_ maps
  bool all_maps_ = false;
  std::vector<int> counter_;

  // exhaustive, larger: perfect hash family into p_ buckets x bijections
  std::vector<std::vector<int>> funcs_;
  std::size_t fi_ = 0;
  std::vector<int> sigma_;

  // randomized: trials x (p-subsets of used buckets) x bijections
  int trial_ = 0;
  std::vector<int> fmap_, used_, comb_, slot_;
};

struct SiOptions {
  FamilyMode mode = FamilyMode::exhaustive;
  std::uint64_t seed = 0;
  int trials = 20;
  bool verify_coloring = false;
  std::vector<int>* embedding = nullptr;
  SiStats* stats = nullptr;  // aggregated over the inner searches; keys unmerged
};

// Color-coding driver: colors g, iterates p-subsets of used colors, and for
// each induced subgraph runs the compliant search over the label family.
bool subgraph_isomorphism(const Graph& h, const Graph& g,
                          const std::function<Coloring(const Graph&, int)>& colorer,
                          int p_override = 0, const SiOptions& opts = {});

// Plain backtracking matchers, used as oracles.
bool subgraph_isomorphism_naive(const Graph& h, const Graph& g,
                                std::vector<int>* embedding = nullptr);
bool compliant_embedding_naive(const Graph& h, const Graph& g,
                               const std::vector<int>& alpha,
                               std::vector<int>* embedding = nullptr);

}  // namespace pcc::subiso
