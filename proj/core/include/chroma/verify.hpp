#ifndef CHROMA_VERIFY_HPP
#define CHROMA_VERIFY_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "chroma/graph.hpp"

namespace chroma {

// Negative-control hook: `cut_rule` drops the tie-break clause from the cut
// definition inside check 1, which must make that check fail.
enum class Fault { none, cut_rule };

struct VerifyOptions {
    // Check 1 runs every labeled graph for d = 1..exhaustive_d, then
    // sample_count seeded random graphs at each d in sample_ds.
    int exhaustive_d = 4;
    std::vector<int> sample_ds = {5, 6};
    int sample_count = 200;
    std::uint64_t seed = 20260810;
    std::int64_t max_perms = limits::max_permutations;
    Fault fault = Fault::none;
    std::vector<int> only_checks;  // empty = all of 1..13
};

struct CheckResult {
    int id = 0;
    std::string name;
    long long instances = 0;
    bool pass = false;
    std::string detail;  // first failure, empty when passing
};

// Runs the identity checklist (the same checks the acceptance suite pins);
// sampled parts are driven by seed/sample_count, exhaustive scales are fixed
// per check.  Output is deterministic for fixed options.
std::vector<CheckResult> run_verification(const VerifyOptions& opt);

bool all_passed(const std::vector<CheckResult>& results);
// One line per check plus a RESULT line; byte-stable for fixed options.
std::string format_report(const std::vector<CheckResult>& results);

// Seeded helpers shared by the verification sweeps and the test suites.
Graph random_graph(int d, std::mt19937_64& rng);
std::vector<int> random_permutation(int d, std::mt19937_64& rng);
void for_all_graphs(int d, const std::function<void(const Graph&)>& fn);

// Built-in copies of the bundled fixture graphs (fixtures/ holds the same
// graphs as edge-list files).
Graph fixture_path4();        // 1-2-3-4
Graph fixture_star4();        // edges 12, 23, 24
Graph fixture_worked7();       // path 1..5 plus edge 6-7
Graph fixture_triangles5();   // two triangles sharing vertex 3
Graph fixture_chorded5();     // 4-cycle 1-2-4-3 with chord 23, pendant 5 at 4
Graph fixture_codec7();       // host graph for the degree-7 codec examples

}  // namespace chroma

#endif
