#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pcc::cli {

// Parsed invocation. `command` is the resolved subcommand path ("color planar",
// "verify centered", ...); handlers read only the fields their command uses.
struct RunConfig {
    std::string command;
    std::vector<std::string> inputs;
    int p = 0;  // 0 means auto (subiso: |V(pattern)|)
    std::uint64_t seed = 0;
    int trials = 20;
    std::string output;
    std::string td_output;
    std::string embedding_path;
    std::string mode = "exhaustive";
    bool verify_after = false;
    bool stats = false;
    int bench_n = 0;
    int bench_flips = -1;
};

// Exit codes: 0 success (or YES), 1 verification failure (or NO), 2 usage or
// input error. Timing goes to stdout only; emitted files depend solely on the
// inputs and the seed.
int dispatch(const RunConfig& cfg);

int run(int argc, const char* const* argv);

// Convenience for in-process use; args exclude the program name.
int run(const std::vector<std::string>& args);

}  // namespace pcc::cli
