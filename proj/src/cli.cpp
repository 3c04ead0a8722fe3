#include "pcc/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "pcc/coloring.hpp"
#include "pcc/gen.hpp"
#include "pcc/graph.hpp"
#include "pcc/io.hpp"
#include "pcc/lifting.hpp"
#include "pcc/planar.hpp"
#include "pcc/subiso.hpp"
#include "pcc/surface.hpp"
#include "pcc/treedecomp.hpp"
#include "pcc/verify.hpp"

namespace pcc::cli {

namespace {

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    long long ms() const {
        auto d = std::chrono::steady_clock::now() - t0;
        return std::chrono::duration_cast<std::chrono::milliseconds>(d).count();
    }
};

// The stats record goes to stdout only, so emitted files stay reproducible.
void print_stats(std::uint64_t colors, std::uint64_t bound, int p, int n, long long ms) {
    std::cout << "colors=" << colors << " bound=" << bound << " p=" << p << " n=" << n
              << " ms=" << ms << "\n";
}

void with_output(const std::string& path, const std::function<void(std::ostream&)>& fn) {
    if (path.empty()) {
        fn(std::cout);
    } else {
        auto f = io::open_output(path);
        fn(f);
    }
}

Graph load_graph(const std::string& path) {
    auto f = io::open_input(path);
    return io::read_edge_list(f);
}

planar::Embedding load_embedding(const Graph& g, const std::string& path) {
    auto f = io::open_input(path);
    auto e = io::read_rotation(f);
    planar::require_embedding_of(g, e);
    return e;
}

void dump_counterexample(const verify::CenteredVerdict& v) {
    std::cout << "NOT CENTERED\n";
    std::cout << "subgraph:";
    for (int u : v.counterexample) std::cout << " " << u;
    std::cout << "\ncolors:";
    for (int c : v.counterexample_colors) std::cout << " " << c;
    std::cout << "\n";
}

// Shared tail of the three coloring commands: write, verify, report.
int finish_coloring(const RunConfig& cfg, const Graph& g, const Coloring& c,
                    std::uint64_t bound, const Timer& t) {
    with_output(cfg.output, [&](std::ostream& os) { io::write_coloring(os, c, cfg.p); });
    if (cfg.verify_after) {
        auto v = verify::check_p_centered(g, c, cfg.p);
        if (!v.centered) {
            dump_counterexample(v);
            return 1;
        }
    }
    if (cfg.stats) print_stats(c.num_colors, bound, cfg.p, g.num_vertices(), t.ms());
    return 0;
}

int run_color_planar(const RunConfig& cfg) {
    Timer t;
    Graph g = load_graph(cfg.inputs[0]);
    auto e = load_embedding(g, cfg.inputs[1]);
    Coloring c = lift::planar_centered_coloring(g, e, cfg.p);
    return finish_coloring(cfg, g, c, lift::planar_color_bound(cfg.p), t);
}

int run_color_treewidth(const RunConfig& cfg) {
    Timer t;
    Graph g = load_graph(cfg.inputs[0]);
    auto f = io::open_input(cfg.inputs[1]);
    auto tf = io::read_td(f);
    if (tf.n != g.num_vertices())
        throw std::invalid_argument("decomposition is for a different vertex count");
    int k = tf.td.width();
    Coloring c = td::treewidth_centered_coloring(g, tf.td, cfg.p);
    return finish_coloring(cfg, g, c, lift::treewidth_color_bound(cfg.p, k), t);
}

int run_color_genus(const RunConfig& cfg) {
    Timer t;
    Graph g = load_graph(cfg.inputs[0]);
    auto e = load_embedding(g, cfg.inputs[1]);
    Coloring c = surface::genus_centered_coloring(g, e, cfg.p);
    return finish_coloring(cfg, g, c, surface::genus_color_bound(cfg.p, e.euler_genus), t);
}

int run_partition_planar(const RunConfig& cfg) {
    Timer t;
    Graph g = load_graph(cfg.inputs[0]);
    auto e = load_embedding(g, cfg.inputs[1]);
    auto gp = planar::planar_geodesic_partition(g, e);
    with_output(cfg.output, [&](std::ostream& os) { io::write_partition(os, gp.partition); });
    std::string td_path = cfg.td_output;
    if (td_path.empty() && !cfg.output.empty()) td_path = cfg.output + ".td";
    with_output(td_path, [&](std::ostream& os) {
        io::write_td(os, gp.quotient_td, gp.partition.num_parts());
    });
    if (cfg.stats)
        print_stats(gp.partition.num_parts(), gp.quotient_td.width() + 1, 0, g.num_vertices(),
                    t.ms());
    return 0;
}

int run_cutgraph(const RunConfig& cfg) {
    Timer t;
    Graph g = load_graph(cfg.inputs[0]);
    auto e = load_embedding(g, cfg.inputs[1]);
    auto k = surface::tree_cotree_cut_graph(g, e);
    with_output(cfg.output, [&](std::ostream& os) {
        os << "genus " << e.euler_genus << "\n";
        for (auto& [u, v] : k.extra_edges) os << "extra " << u << " " << v << "\n";
        for (auto& [u, v] : k.edges) os << "edge " << u << " " << v << "\n";
        for (std::size_t i = 0; i < k.geodesic_parts.size(); ++i) {
            os << "part " << i << ":";
            for (int u : k.geodesic_parts[i].vertices) os << " " << u;
            os << "\n";
        }
    });
    if (cfg.stats)
        print_stats(k.geodesic_parts.size(), 4ull * e.euler_genus, 0, g.num_vertices(), t.ms());
    return 0;
}

int run_verify_centered(const RunConfig& cfg) {
    Timer t;
    Graph g = load_graph(cfg.inputs[0]);
    auto f = io::open_input(cfg.inputs[1]);
    auto cf = io::read_coloring(f);
    if ((int)cf.coloring.color.size() != g.num_vertices())
        throw std::invalid_argument("coloring is for a different vertex count");
    auto v = verify::check_p_centered(g, cf.coloring, cfg.p);
    if (cfg.stats) print_stats(cf.coloring.num_colors, 0, cfg.p, g.num_vertices(), t.ms());
    if (!v.centered) {
        dump_counterexample(v);
        return 1;
    }
    std::cout << "CENTERED\n";
    return 0;
}

int run_oracle_mincolors(const RunConfig& cfg) {
    Timer t;
    Graph g = load_graph(cfg.inputs[0]);
    int k = verify::min_p_centered_colors(g, cfg.p);
    with_output(cfg.output, [&](std::ostream& os) { os << k << "\n"; });
    if (cfg.stats) print_stats(k, 0, cfg.p, g.num_vertices(), t.ms());
    return 0;
}

int run_subiso(const RunConfig& cfg) {
    Timer t;
    Graph h = load_graph(cfg.inputs[0]);
    Graph g = load_graph(cfg.inputs[1]);

    std::function<Coloring(const Graph&, int)> colorer;
    if (!cfg.embedding_path.empty()) {
        auto e = load_embedding(g, cfg.embedding_path);
        colorer = [e](const Graph& host, int pp) {
            return surface::genus_centered_coloring(host, e, pp);
        };
    } else {
        // No embedding given: one color per vertex is p-centered for every p.
        colorer = [](const Graph& host, int) {
            std::vector<int> c(host.num_vertices());
            std::iota(c.begin(), c.end(), 0);
            return make_coloring(c);
        };
    }

    subiso::SiOptions opts;
    opts.mode = cfg.mode == "randomized" ? subiso::FamilyMode::randomized
                                         : subiso::FamilyMode::exhaustive;
    opts.seed = cfg.seed;
    opts.trials = cfg.trials;
    opts.verify_coloring = cfg.verify_after;

    std::vector<int> embedding;
    opts.embedding = &embedding;
    bool found = subiso::subgraph_isomorphism(h, g, colorer, cfg.p, opts);

    if (cfg.stats)
        print_stats(0, 0, cfg.p > 0 ? cfg.p : h.num_vertices(), g.num_vertices(), t.ms());
    auto emit = [&](std::ostream& os) {
        if (!found) {
            os << "NO\n";
            return;
        }
        os << "YES\n";
        for (int w = 0; w < h.num_vertices(); ++w) os << w << " -> " << embedding[w] << "\n";
    };
    emit(std::cout);
    if (!cfg.output.empty()) with_output(cfg.output, emit);
    return found ? 0 : 1;
}

int run_bench(const RunConfig& cfg, bool color) {
    int n = cfg.bench_n;
    int flips = cfg.bench_flips >= 0 ? cfg.bench_flips : 3 * n;
    auto e = gen::random_triangulation(n, flips, cfg.seed);
    Timer t;
    if (color) {
        Coloring c = lift::planar_centered_coloring(e.graph, e, cfg.p);
        print_stats(c.num_colors, lift::planar_color_bound(cfg.p), cfg.p, n, t.ms());
    } else {
        auto gp = planar::planar_geodesic_partition(e.graph, e);
        print_stats(gp.partition.num_parts(), gp.quotient_td.width() + 1, 0, n, t.ms());
    }
    return 0;
}

}  // namespace

int dispatch(const RunConfig& cfg) {
    try {
        if (cfg.command == "color planar") return run_color_planar(cfg);
        if (cfg.command == "color treewidth") return run_color_treewidth(cfg);
        if (cfg.command == "color genus") return run_color_genus(cfg);
        if (cfg.command == "partition planar") return run_partition_planar(cfg);
        if (cfg.command == "cutgraph") return run_cutgraph(cfg);
        if (cfg.command == "verify centered") return run_verify_centered(cfg);
        if (cfg.command == "oracle mincolors") return run_oracle_mincolors(cfg);
        if (cfg.command == "subiso") return run_subiso(cfg);
        if (cfg.command == "bench partition") return run_bench(cfg, false);
        if (cfg.command == "bench color") return run_bench(cfg, true);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    std::cerr << "error: no command\n";
    return 2;
}

int run(int argc, const char* const* argv) {
    RunConfig cfg;
    std::string p_str;
    std::string in_a, in_b;

    CLI::App app{"p-centered colorings and treedepth-bounded subgraph search"};
    app.require_subcommand(1);

    auto add_seed = [&](CLI::App* cmd) {
        cmd->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
    };
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("-o,--output", cfg.output, "output file (default stdout)");
        cmd->add_flag("--stats", cfg.stats, "print a one-line stats record");
    };
    auto leaf = [&](CLI::App* cmd, const std::string& name) {
        cmd->callback([&cfg, name] { cfg.command = name; });
    };

    auto* color = app.add_subcommand("color", "compute a p-centered coloring");
    color->require_subcommand(1);
    for (auto [sub, desc, aux] :
         {std::tuple{"planar", "planar graph with rotation system", "rotation file"},
          std::tuple{"treewidth", "graph with a tree decomposition", "decomposition file"},
          std::tuple{"genus", "graph embedded on an orientable surface", "rotation file"}}) {
        auto* c = color->add_subcommand(sub, desc);
        c->add_option("-p", cfg.p, "centering parameter")->required()->check(CLI::PositiveNumber);
        c->add_option("graph", in_a, "edge list file")->required();
        c->add_option("aux", in_b, aux)->required();
        c->add_flag("--verify", cfg.verify_after, "check the result before reporting success");
        add_common(c);
        leaf(c, std::string("color ") + sub);
    }

    auto* part = app.add_subcommand("partition", "decompose into geodesic parts");
    part->require_subcommand(1);
    auto* pp = part->add_subcommand("planar", "geodesic partition with small quotient width");
    pp->add_option("graph", in_a, "edge list file")->required();
    pp->add_option("rotation", in_b, "rotation file")->required();
    pp->add_option("--td", cfg.td_output, "quotient decomposition file");
    add_common(pp);
    leaf(pp, "partition planar");

    auto* cut = app.add_subcommand("cutgraph", "tree-cotree cut graph of an embedded graph");
    cut->add_option("graph", in_a, "edge list file")->required();
    cut->add_option("rotation", in_b, "rotation file")->required();
    add_common(cut);
    leaf(cut, "cutgraph");

    auto* ver = app.add_subcommand("verify", "check a claimed structure");
    ver->require_subcommand(1);
    auto* vc = ver->add_subcommand("centered", "check that a coloring is p-centered");
    vc->add_option("-p", cfg.p, "centering parameter")->required()->check(CLI::PositiveNumber);
    vc->add_option("graph", in_a, "edge list file")->required();
    vc->add_option("coloring", in_b, "coloring file")->required();
    vc->add_flag("--stats", cfg.stats, "print a one-line stats record");
    leaf(vc, "verify centered");

    auto* orc = app.add_subcommand("oracle", "exact answers on small graphs");
    orc->require_subcommand(1);
    auto* om = orc->add_subcommand("mincolors", "minimum p-centered color count");
    om->add_option("-p", cfg.p, "centering parameter")->required()->check(CLI::PositiveNumber);
    om->add_option("graph", in_a, "edge list file")->required();
    add_common(om);
    leaf(om, "oracle mincolors");

    auto* si = app.add_subcommand("subiso", "find the pattern inside the host");
    si->add_option("pattern", in_a, "pattern edge list")->required();
    si->add_option("host", in_b, "host edge list")->required();
    si->add_option("-p", p_str, "centering parameter, or auto for |V(pattern)|")
        ->default_str("auto");
    si->add_option("--embedding", cfg.embedding_path, "host rotation file");
    si->add_option("--mode", cfg.mode, "label family mode")
        ->check(CLI::IsMember({"exhaustive", "randomized"}))
        ->capture_default_str();
    si->add_option("--trials", cfg.trials, "randomized trials")->check(CLI::PositiveNumber);
    si->add_flag("--verify", cfg.verify_after, "check colorings before using them");
    add_seed(si);
    add_common(si);
    leaf(si, "subiso");

    auto* bench = app.add_subcommand("bench", "time the pipeline on generated inputs");
    bench->require_subcommand(1);
    auto* bp = bench->add_subcommand("partition", "geodesic partition of a random triangulation");
    bp->add_option("-n", cfg.bench_n, "vertex count")->required()->check(CLI::PositiveNumber);
    bp->add_option("--flips", cfg.bench_flips, "diagonal flips (default 3n)");
    add_seed(bp);
    leaf(bp, "bench partition");
    auto* bc = bench->add_subcommand("color", "full coloring of a random triangulation");
    bc->add_option("-n", cfg.bench_n, "vertex count")->required()->check(CLI::PositiveNumber);
    bc->add_option("-p", cfg.p, "centering parameter")->required()->check(CLI::PositiveNumber);
    bc->add_option("--flips", cfg.bench_flips, "diagonal flips (default 3n)");
    add_seed(bc);
    leaf(bc, "bench color");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (!in_a.empty()) cfg.inputs.push_back(in_a);
    if (!in_b.empty()) cfg.inputs.push_back(in_b);

    if (cfg.command == "subiso") {
        if (p_str.empty() || p_str == "auto") {
            cfg.p = 0;
        } else {
            try {
                std::size_t pos = 0;
                cfg.p = std::stoi(p_str, &pos);
                if (pos != p_str.size() || cfg.p < 1) throw std::invalid_argument("");
            } catch (const std::exception&) {
                std::cerr << "error: -p expects a positive integer or auto\n";
                return 2;
            }
        }
    }
    return dispatch(cfg);
}

int run(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.push_back("pcc");
    for (auto& a : args) argv.push_back(a.c_str());
    return run((int)argv.size(), argv.data());
}

}  // namespace pcc::cli
