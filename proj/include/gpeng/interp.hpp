#ifndef GPENG_INTERP_HPP
#define GPENG_INTERP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gpeng/elaborate.hpp"
#include "gpeng/graph.hpp"
#include "gpeng/iso.hpp"

namespace gpeng {

struct ExecConfig {
    std::uint64_t seed = 0;
    std::int64_t fuel = 10000; // must be positive
    bool trace = false;
};

enum class RunStatus { success, fail, diverge };

const char* run_status_name(RunStatus s);

/// One committed rule application: which rule, where it matched (host ids
/// in the order the left-hand items are declared), and the graph size it
/// produced. Applications made while probing an if/try condition appear
/// too; their sizes then describe the probe copy.
struct TraceEntry {
    std::string rule;
    std::vector<NodeId> nodes;
    std::vector<EdgeId> edges;
    std::size_t nodes_after = 0;
    std::size_t edges_after = 0;

    bool operator==(const TraceEntry&) const = default;
};

struct RunResult {
    RunStatus status = RunStatus::fail;
    HostGraph graph; // meaningful only for success
    std::int64_t applications = 0;
    std::vector<TraceEntry> trace;
};

/// One execution, every choice taken uniformly from the ordered match
/// list by a generator seeded with cfg.seed. Identical arguments give a
/// byte-identical result and trace. Fuel is consumed per rule application
/// (and once per loop iteration that applies nothing, so that idle loops
/// cannot spin forever); running out yields RunStatus::diverge.
RunResult run(const CoreProgram& p, const HostGraph& g,
              const ExecConfig& cfg = {});

/// Renders result.trace, one `step <n>: ...` line per entry.
std::string format_trace(const RunResult& result);

struct EnumConfig {
    std::size_t branch_cap = 100000; // max distinct states per loop
    CanonicalOptions canon;
};

/// One isomorphism class of result graphs, with the range of committed
/// rule applications over all executions reaching it. Probing an if/try
/// condition is not committed work: if-condition applications are never
/// counted, try-condition applications only when the probe is kept.
/// When `unbounded` is set, executions of arbitrary length reach this
/// class and max_steps is only a witness value, not a bound.
struct OutcomeClass {
    std::string key; // canonical_key of the class
    HostGraph graph; // one representative
    std::int64_t min_steps = 0;
    std::int64_t max_steps = 0;
    bool unbounded = false;
};

struct OutcomeSet {
    std::vector<OutcomeClass> graphs; // sorted by key
    bool has_fail = false;
    std::int64_t fail_min = 0;
    std::int64_t fail_max = 0;
    bool fail_unbounded = false;
    bool has_diverge = false;
};

/// Exhaustive enumeration of every execution of p on g, folding graphs
/// by canonical key. Divergence is detected exactly, as a cycle in a
/// loop's state space, rather than by fuel. Loops whose state space
/// exceeds cfg.branch_cap raise StateSpaceLimit; graphs larger than the
/// canonical-form limits raise SizeLimit.
OutcomeSet outcomes(const CoreProgram& p, const HostGraph& g,
                    const EnumConfig& cfg = {});

/// Same reachable graph classes and the same failure/divergence verdicts;
/// step counts are not compared.
bool same_outcome_sets(const OutcomeSet& a, const OutcomeSet& b);

} // namespace gpeng

#endif // GPENG_INTERP_HPP
