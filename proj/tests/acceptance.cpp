// Acceptance checks, one line per criterion. Exit code is the number of
// failed criteria, so a green run exits 0.

#include <fcntl.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pcc/cli.hpp"
#include "pcc/coloring.hpp"
#include "pcc/embedding.hpp"
#include "pcc/gen.hpp"
#include "pcc/graph.hpp"
#include "pcc/io.hpp"
#include "pcc/lifting.hpp"
#include "pcc/planar.hpp"
#include "pcc/subiso.hpp"
#include "pcc/surface.hpp"
#include "pcc/treedecomp.hpp"
#include "pcc/verify.hpp"

using namespace pcc;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0)
        .count();
}

int failures = 0;

void report(int num, bool ok, const std::string& detail) {
    if (ok) {
        std::printf("PASS criterion %d (%s)\n", num, detail.c_str());
    } else {
        std::printf("FAIL criterion %d (%s)\n", num, detail.c_str());
        ++failures;
    }
    std::fflush(stdout);
}

// ---- criterion 1: treewidth color budget ----------------------------------

void criterion1() {
    auto t0 = Clock::now();
    std::mt19937_64 eng(101);
    bool ok = true;
    std::string why;
    for (int k = 1; k <= 3 && ok; ++k) {
        for (int p = 1; p <= 4 && ok; ++p) {
            for (int i = 0; i < 50 && ok; ++i) {
                int n = 20 + (int)(eng() % 81);  // n <= 100
                auto dg = gen::random_partial_ktree(n, k, 0.85, eng());
                auto c = td::treewidth_centered_coloring(dg.g, dg.td, p);
                if ((std::uint64_t)c.num_colors > lift::binom_u64(p + k, k)) {
                    ok = false;
                    why = "color budget exceeded";
                }
                if (ok && !verify::check_p_centered(dg.g, c, p).centered) {
                    ok = false;
                    why = "coloring not centered";
                }
            }
        }
    }
    long long t = ms_since(t0);
    if (ok && t >= 10000) {
        ok = false;
        why = "too slow";
    }
    report(1, ok, ok ? "600 graphs within binom(p+k,k), " + std::to_string(t) + " ms"
                     : why);
}

// ---- criterion 2: tightness on paths ---------------------------------------

void criterion2() {
    bool ok = true;
    std::string why;
    for (int p = 1; p <= 3 && ok; ++p) {
        for (int n = 2 * p + 2; n <= 12 && ok; ++n) {
            Graph path = Graph::path(n);
            int oracle = verify::min_p_centered_colors(path, p);
            if (oracle != p + 1) {
                ok = false;
                why = "oracle optimum is not p+1 at n=" + std::to_string(n);
                break;
            }
            td::TreeDecomposition t;
            for (int i = 0; i + 1 < n; ++i) {
                t.bags.push_back({i, i + 1});
                t.parent.push_back(i - 1);
            }
            auto c = td::treewidth_centered_coloring(path, t, p);
            if (c.num_colors < oracle) {
                ok = false;
                why = "pipeline beat the exact optimum";
            }
        }
    }
    report(2, ok, ok ? "path optimum p+1 matched for p=1..3" : why);
}

// ---- criterion 3: planar geodesic partition structure ----------------------

bool partition_contract(const Graph& g, const planar::GeodesicPartition& gp,
                        std::string& why) {
    validate_partition(g, gp.partition);
    for (auto& part : gp.partition.parts) {
        if (!is_geodesic(g, part)) {
            why = "part is not a geodesic";
            return false;
        }
    }
    // validate the decomposition in its emitted form
    std::stringstream ss;
    io::write_td(ss, gp.quotient_td, gp.partition.num_parts());
    auto parsed = io::read_td(ss);
    Graph q = quotient(g, gp.partition);
    auto st = td::validate_td(q, parsed.td);
    if (!st.valid) {
        why = "quotient decomposition invalid: " + st.violation;
        return false;
    }
    if (st.width > 8) {
        why = "quotient width " + std::to_string(st.width);
        return false;
    }
    return true;
}

void criterion3() {
    auto t0 = Clock::now();
    std::mt19937_64 eng(303);
    bool ok = true;
    std::string why;

    for (int i = 0; i < 30 && ok; ++i) {
        // geometric spread over [50, 2000]
        double f = (double)i / 29.0;
        int n = (int)(50.0 * std::pow(2000.0 / 50.0, f));
        auto e = gen::random_triangulation(n, 3 * n, eng());
        auto gp = planar::planar_geodesic_partition(e.graph, e);
        ok = partition_contract(e.graph, gp, why);
    }
    for (auto [r, c] : {std::pair{10, 10}, std::pair{25, 18}, std::pair{40, 40},
                        std::pair{40, 7}}) {
        if (!ok) break;
        auto e = gen::grid_embedding(r, c);
        auto gp = planar::planar_geodesic_partition(e.graph, e);
        ok = partition_contract(e.graph, gp, why);
    }

    long long total = ms_since(t0);
    if (ok && total >= 60000) {
        ok = false;
        why = "too slow";
    }

    long long t500 = 0, t1000 = 0;
    if (ok) {
        auto e500 = gen::random_triangulation(500, 1500, 99);
        auto e1000 = gen::random_triangulation(1000, 3000, 99);
        t500 = t1000 = 1LL << 60;
        for (int rep = 0; rep < 3; ++rep) {
            auto a = Clock::now();
            planar::planar_geodesic_partition(e500.graph, e500);
            t500 = std::min(t500, ms_since(a));
            auto b = Clock::now();
            planar::planar_geodesic_partition(e1000.graph, e1000);
            t1000 = std::min(t1000, ms_since(b));
        }
        t500 = std::max(t500, 1LL);  // clock floor keeps the ratio meaningful
        if (t1000 > 5 * t500) {
            ok = false;
            why = "scaling ratio " + std::to_string((double)t1000 / (double)t500);
        }
    }
    report(3, ok,
           ok ? "34 partitions valid, " + std::to_string(total) +
                    " ms, 500->1000 ratio " + std::to_string(t1000) + "/" +
                    std::to_string(t500)
              : why);
}

// ---- criterion 4: planar coloring bound -------------------------------------

void criterion4() {
    bool ok = true;
    std::string why;
    std::mt19937_64 eng(404);
    struct Inst {
        planar::Embedding e;
        int p;
    };
    std::vector<Inst> insts;
    insts.push_back({gen::random_triangulation(400, 1200, eng()), 1});
    insts.push_back({gen::grid_embedding(20, 20), 1});
    insts.push_back({gen::random_triangulation(250, 750, eng()), 2});
    insts.push_back({gen::grid_embedding(16, 16), 2});
    insts.push_back({gen::random_triangulation(120, 360, eng()), 3});
    insts.push_back({gen::grid_embedding(10, 12), 3});
    insts.push_back({gen::drop_random_edges(gen::grid_embedding(15, 15), 0.7, eng()), 2});
    for (auto& inst : insts) {
        auto c = lift::planar_centered_coloring(inst.e.graph, inst.e, inst.p);
        if ((std::uint64_t)c.num_colors > lift::planar_color_bound(inst.p)) {
            ok = false;
            why = "bound exceeded at p=" + std::to_string(inst.p);
            break;
        }
        if (!verify::check_p_centered(inst.e.graph, c, inst.p).centered) {
            ok = false;
            why = "coloring not centered at p=" + std::to_string(inst.p);
            break;
        }
    }
    report(4, ok, ok ? "7 planar instances verified under the hard bound" : why);
}

// ---- criterion 5: verifier cross-validation ---------------------------------

void criterion5() {
    std::mt19937_64 eng(505);
    int disagreements = 0;
    int checks = 0;
    for (int it = 0; it < 500; ++it) {
        int n = 2 + (int)(eng() % 6);  // n <= 7
        Graph g = gen::random_graph(n, 0.4 + 0.2 * (double)(eng() % 3), eng());
        long long space = 1;
        for (int i = 0; i < n; ++i) space *= 3;
        int samples = space <= 243 ? (int)space : 120;
        for (int s = 0; s < samples; ++s) {
            std::vector<int> col(n);
            if (space <= 243) {
                long long x = s;
                for (int i = 0; i < n; ++i) {
                    col[i] = (int)(x % 3);
                    x /= 3;
                }
            } else {
                for (int& v : col) v = (int)(eng() % 3);
            }
            auto coloring = make_coloring(col);
            for (int p = 1; p <= 3; ++p) {
                ++checks;
                bool a = verify::check_p_centered(g, coloring, p).centered;
                bool b = verify::check_p_centered_naive(g, coloring, p).centered;
                if (a != b) ++disagreements;
            }
        }
    }
    report(5, disagreements == 0,
           disagreements == 0
               ? std::to_string(checks) + " verdict pairs, zero disagreements"
               : std::to_string(disagreements) + " disagreements");
}

// ---- criterion 6: cut graphs on tori ----------------------------------------

void criterion6() {
    bool ok = true;
    std::string why;
    int grids = 0;
    for (int r = 3; r <= 8 && ok; ++r) {
        for (int c = r; c <= 8 && ok; ++c) {
            ++grids;
            auto e = gen::toroidal_grid_embedding(r, c);
            int g2 = 2 * e.euler_genus;
            auto k = surface::tree_cotree_cut_graph(e.graph, e);
            if ((int)k.extra_edges.size() != g2) {
                ok = false;
                why = "cycle count is not 2g";
                break;
            }
            if ((int)k.edges.size() - (int)k.vertices.size() + 1 != g2) {
                ok = false;
                why = "cut graph Euler relation failed";
                break;
            }
            if ((int)k.geodesic_parts.size() > 2 * g2) {
                ok = false;
                why = "more than 4g parts";
                break;
            }
            std::set<int> covered;
            for (auto& part : k.geodesic_parts) {
                if (!is_geodesic(e.graph, part)) {
                    ok = false;
                    why = "part fails the distance check";
                }
                for (int v : part.vertices) {
                    if (covered.count(v)) {
                        ok = false;
                        why = "parts overlap";
                    }
                    covered.insert(v);
                }
            }
            if (ok && covered != std::set<int>(k.vertices.begin(), k.vertices.end())) {
                ok = false;
                why = "parts do not partition V(K)";
            }
            if (!ok) break;

            // independent planarity evidence for the remainder
            std::vector<char> in_k(e.graph.num_vertices(), 0);
            for (int v : k.vertices) in_k[v] = 1;
            std::vector<int> rest;
            for (int v = 0; v < e.graph.num_vertices(); ++v)
                if (!in_k[v]) rest.push_back(v);
            if (!rest.empty()) {
                auto [re, old_id] = planar::restrict_embedding(e, rest);
                if (re.euler_genus != 0) {
                    ok = false;
                    why = "remainder embedding is not planar";
                    break;
                }
                for (auto& comp : connected_components(re.graph)) {
                    if (comp.size() >= 3) {
                        auto [sub, ids] = induced_subgraph(re.graph, comp);
                        if (sub.num_edges() > 3 * (int)comp.size() - 6) {
                            ok = false;
                            why = "remainder exceeds the planar edge budget";
                        }
                    }
                }
            }
            if (!ok) break;

            for (int p = 1; p <= 2; ++p) {
                auto col = surface::genus_centered_coloring(e.graph, e, p);
                if (!verify::check_p_centered(e.graph, col, p).centered) {
                    ok = false;
                    why = "genus coloring not centered";
                    break;
                }
                if ((std::uint64_t)col.num_colors >
                    surface::genus_color_bound(p, e.euler_genus)) {
                    ok = false;
                    why = "genus color bound exceeded";
                    break;
                }
            }
        }
    }
    report(6, ok, ok ? std::to_string(grids) + " toroidal grids pass" : why);
}

// ---- criterion 7: treedepth forests from colorings --------------------------

bool ancestor_related(const verify::TreedepthForest& f, int i, int j) {
    for (int w = i; w >= 0;
         w = f.parent[w] < 0 ? -1 : f.index_of(f.parent[w]))
        if (w == j) return true;
    for (int w = j; w >= 0;
         w = f.parent[w] < 0 ? -1 : f.index_of(f.parent[w]))
        if (w == i) return true;
    return false;
}

void criterion7() {
    std::mt19937_64 eng(707);
    bool ok = true;
    std::string why;

    struct Pipe {
        Graph g;
        Coloring c;
        int p;
    };
    std::vector<Pipe> pipes;
    {
        auto e = gen::random_triangulation(100, 300, 71);
        pipes.push_back({e.graph, lift::planar_centered_coloring(e.graph, e, 3), 3});
        auto dg = gen::random_partial_ktree(80, 2, 0.8, 72);
        pipes.push_back({dg.g, td::treewidth_centered_coloring(dg.g, dg.td, 4), 4});
        auto t = gen::toroidal_grid_embedding(5, 5);
        pipes.push_back({t.graph, surface::genus_centered_coloring(t.graph, t, 2), 2});
    }

    int tested = 0;
    for (auto& pipe : pipes) {
        auto used = pipe.c.used_colors();
        for (int it = 0; it < 100 && ok; ++it) {
            int size = 1 + (int)(eng() % pipe.p);
            std::set<int> xs;
            while ((int)xs.size() < size) xs.insert(used[eng() % used.size()]);
            std::vector<int> x(xs.begin(), xs.end());
            auto f = verify::treedepth_forest_from_coloring(pipe.g, pipe.c, x);
            ++tested;
            if (f.max_depth() > (int)x.size()) {
                ok = false;
                why = "forest depth exceeds |X|";
                break;
            }
            // closure containment: induced edges join ancestor-related pairs
            for (std::size_t i = 0; i < f.vertices.size() && ok; ++i) {
                for (int u : pipe.g.neighbors(f.vertices[i])) {
                    int j = f.index_of(u);
                    if (j < 0 || j <= (int)i) continue;
                    if (!ancestor_related(f, (int)i, j)) {
                        ok = false;
                        why = "induced edge escapes the ancestry closure";
                        break;
                    }
                }
            }
        }
        if (!ok) break;
    }
    report(7, ok, ok ? std::to_string(tested) + " subsets give depth <= |X|" : why);
}

// ---- criterion 8: subgraph isomorphism --------------------------------------

void criterion8() {
    std::mt19937_64 eng(808);
    bool ok = true;
    std::string why;
    subiso::SiStats agg;
    int planted_count = 0, agreements = 0;

    for (int it = 0; it < 200 && ok; ++it) {
        int p;
        {
            int roll = (int)(eng() % 100);
            if (roll < 30) p = 2;
            else if (roll < 60) p = 3;
            else if (roll < 85) p = 4;
            else if (roll < 93) p = 5;
            else p = 6;
        }
        int n = p >= 5 ? 10 + (int)(eng() % 7) : 15 + (int)(eng() % 16);  // <= 30
        auto e = gen::drop_random_edges(gen::random_triangulation(n, 2 * n, eng()),
                                        0.85, eng());
        const Graph& g = e.graph;

        bool plant = (int)(eng() % 100) < 70;
        Graph h(p);
        if (plant) {
            std::vector<int> perm(n);
            for (int i = 0; i < n; ++i) perm[i] = i;
            std::shuffle(perm.begin(), perm.end(), eng);
            std::vector<int> image(perm.begin(), perm.begin() + p);
            for (int a = 0; a < p; ++a)
                for (int b = a + 1; b < p; ++b)
                    if (g.has_edge(image[a], image[b]) && eng() % 100 < 65)
                        h.add_edge(a, b);
            ++planted_count;
        } else {
            for (int a = 0; a < p; ++a)
                for (int b = a + 1; b < p; ++b)
                    if (eng() % 100 < 55) h.add_edge(a, b);
        }

        auto colorer = [&e](const Graph& host, int pp) {
            return surface::genus_centered_coloring(host, e, pp);
        };
        std::vector<int> emb;
        subiso::SiOptions opts;
        opts.embedding = &emb;
        opts.stats = &agg;
        bool fast = subiso::subgraph_isomorphism(h, g, colorer, 0, opts);
        bool slow = subiso::subgraph_isomorphism_naive(h, g);
        if (fast != slow) {
            ok = false;
            why = "driver disagrees with the naive matcher";
            break;
        }
        if (plant && !fast) {
            ok = false;
            why = "planted pattern missed by the exhaustive family";
            break;
        }
        if (fast) {
            for (int w = 0; w < p && ok; ++w)
                for (int x = w + 1; x < p; ++x)
                    if (h.has_edge(w, x) && !g.has_edge(emb[w], emb[x])) {
                        ok = false;
                        why = "invalid witness";
                    }
        }
        ++agreements;
    }

    if (ok && !agg.depth_bounded) {
        ok = false;
        why = "recursion exceeded the elimination depth";
    }
    if (ok && !agg.unique_calls) {
        ok = false;
        why = "a subproblem was entered twice in one run";
    }

    int misses = 0, positives = 0;
    if (ok) {
        for (int it = 0; it < 120; ++it) {
            int p = 2 + (int)(eng() % 2);
            int n = 10 + (int)(eng() % 6);  // <= 15
            auto e = gen::drop_random_edges(
                gen::random_triangulation(n, 2 * n, eng()), 0.9, eng());
            const Graph& g = e.graph;
            std::vector<int> perm(n);
            for (int i = 0; i < n; ++i) perm[i] = i;
            std::shuffle(perm.begin(), perm.end(), eng);
            Graph h(p);
            for (int a = 0; a < p; ++a)
                for (int b = a + 1; b < p; ++b)
                    if (g.has_edge(perm[a], perm[b])) h.add_edge(a, b);
            auto colorer = [&e](const Graph& host, int pp) {
                return surface::genus_centered_coloring(host, e, pp);
            };
            subiso::SiOptions opts;
            opts.mode = subiso::FamilyMode::randomized;
            opts.trials = 20;
            opts.seed = eng();
            ++positives;
            if (!subiso::subgraph_isomorphism(h, g, colorer, 0, opts)) ++misses;
        }
        if (misses * 100 > positives) {
            ok = false;
            why = "randomized false-negative rate above 1%";
        }
    }

    report(8, ok,
           ok ? std::to_string(agreements) + " agreements (" +
                    std::to_string(planted_count) + " planted), randomized misses " +
                    std::to_string(misses) + "/" + std::to_string(positives)
              : why);
}

// ---- criterion 9: byte-identical reruns --------------------------------------

std::string slurp(const std::string& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

// commands echo results to stdout; keep the criterion report readable
int run_quiet(const std::vector<std::string>& args) {
    std::fflush(stdout);
    int saved = ::dup(1);
    int nul = ::open("/dev/null", O_WRONLY);
    ::dup2(nul, 1);
    ::close(nul);
    int rc = cli::run(args);
    std::fflush(stdout);
    ::dup2(saved, 1);
    ::close(saved);
    return rc;
}

void criterion9() {
    bool ok = true;
    std::string why;
    fs::path dir = fs::temp_directory_path() /
                   ("pcc_accept_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    auto file = [&](const std::string& name) { return (dir / name).string(); };

    {
        auto e = gen::grid_embedding(4, 4);
        std::ofstream ge(file("g.el")), gr(file("g.rot"));
        io::write_edge_list(ge, e.graph);
        io::write_rotation(gr, e);
        auto t = gen::toroidal_grid_embedding(3, 4);
        std::ofstream te(file("t.el")), tr(file("t.rot"));
        io::write_edge_list(te, t.graph);
        io::write_rotation(tr, t);
        auto dg = gen::random_partial_ktree(15, 2, 0.8, 9);
        std::ofstream ke(file("k.el")), kt(file("k.td"));
        io::write_edge_list(ke, dg.g);
        io::write_td(kt, dg.td, 15);
        std::ofstream pe(file("p3.el"));
        io::write_edge_list(pe, Graph::path(3));
    }

    struct Cmd {
        std::vector<std::string> argv;  // with {} placeholder for the out path
        std::string name;
    };
    std::vector<Cmd> cmds = {
        {{"color", "planar", "-p", "2", file("g.el"), file("g.rot"), "-o", "{}"},
         "cplanar"},
        {{"color", "treewidth", "-p", "2", file("k.el"), file("k.td"), "-o", "{}"},
         "ctw"},
        {{"color", "genus", "-p", "1", file("t.el"), file("t.rot"), "-o", "{}"},
         "cgenus"},
        {{"partition", "planar", file("g.el"), file("g.rot"), "-o", "{}", "--td",
          "{}td"},
         "part"},
        {{"cutgraph", file("t.el"), file("t.rot"), "-o", "{}"}, "cut"},
        {{"oracle", "mincolors", "-p", "2", file("p3.el"), "-o", "{}"}, "oracle"},
        {{"subiso", file("p3.el"), file("g.el"), "-p", "auto", "-o", "{}"}, "si"},
        {{"subiso", file("p3.el"), file("g.el"), "--mode", "randomized", "--trials",
          "10", "--seed", "42", "-o", "{}"},
         "sirand"},
    };

    for (auto& cmd : cmds) {
        std::vector<std::string> outs;
        for (int run = 0; run < 2 && ok; ++run) {
            std::string out = file(cmd.name + (run == 0 ? "_a" : "_b"));
            std::vector<std::string> argv;
            for (auto& a : cmd.argv) {
                if (a == "{}") argv.push_back(out);
                else if (a == "{}td") argv.push_back(out + ".td");
                else argv.push_back(a);
            }
            if (run_quiet(argv) != 0) {
                ok = false;
                why = cmd.name + " exited nonzero";
            }
            outs.push_back(out);
        }
        if (!ok) break;
        if (slurp(outs[0]) != slurp(outs[1])) {
            ok = false;
            why = cmd.name + " outputs differ between identical runs";
        }
        if (cmd.name == "part" &&
            slurp(outs[0] + ".td") != slurp(outs[1] + ".td")) {
            ok = false;
            why = "quotient decomposition differs between identical runs";
        }
    }
    fs::remove_all(dir);
    report(9, ok, ok ? std::to_string(cmds.size()) + " commands byte-stable" : why);
}

}  // namespace

int main() {
    auto t0 = Clock::now();
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    std::printf("total %lld ms, %d failure(s)\n", ms_since(t0), failures);
    return failures;
}
