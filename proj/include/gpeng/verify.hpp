#ifndef GPENG_VERIFY_HPP
#define GPENG_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gpeng/graph.hpp"
#include "gpeng/rng.hpp"

namespace gpeng {

struct CheckResult {
    std::string name;
    bool passed = false;
    double seconds = 0.0;
    double budget = 0.0; // wall-clock allowance; exceeding it fails the check
    std::string detail;  // failure description, or short statistics on a pass
};

/// Random directed multigraph with up to max_nodes nodes and small random
/// labels. No marks, so every program in the corpus is applicable.
HostGraph random_digraph(Rng& rng, std::size_t max_nodes, bool allow_loops);

/// The acceptance suites, one per case study plus the command-law checks.
/// `corpus_root` is the path of the corpus directory.
std::vector<CheckResult> verify_transclosure(const std::string& corpus_root);
std::vector<CheckResult> verify_colouring(const std::string& corpus_root);
std::vector<CheckResult> verify_cyclecheck(const std::string& corpus_root);
std::vector<CheckResult> verify_seriesparallel(const std::string& corpus_root);
std::vector<CheckResult> verify_laws(const std::string& corpus_root);
std::vector<CheckResult> verify_all(const std::string& corpus_root);

/// Suite lookup by name: transclosure, colouring, cyclecheck,
/// seriesparallel, laws, or all. Unknown names raise IoError.
std::vector<CheckResult> verify_case(const std::string& name,
                                     const std::string& corpus_root);

/// One PASS/FAIL line per check.
std::string format_check(const CheckResult& r);

} // namespace gpeng

#endif // GPENG_VERIFY_HPP
