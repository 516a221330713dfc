#ifndef GPENG_MATCH_HPP
#define GPENG_MATCH_HPP

#include <map>
#include <vector>

#include "gpeng/graph.hpp"
#include "gpeng/rule.hpp"

namespace gpeng {

/// An injective occurrence of a rule's left-hand side in a host graph,
/// together with the variable bindings it forces.
struct Match {
    std::map<std::string, NodeId> nodes; // rule node id -> host node
    std::map<std::string, EdgeId> edges; // rule edge id -> host edge
    Assignment vars;

    bool operator==(const Match&) const = default;
};

/// All applicable matches: injective on nodes and edges, marks equal,
/// labels unifiable, no deleted node left with an unmatched incident
/// edge, condition satisfied. Ordered lexicographically by the host
/// ids assigned to left nodes then left edges in declaration order, so
/// the result is independent of anything but the two arguments.
std::vector<Match> find_matches(const Rule& rule, const HostGraph& g);

/// The rewrite step itself. All right-hand expressions see the graph as
/// it was before the step. Returns the rewritten copy; `g` is untouched.
HostGraph apply_match(const Rule& rule, const Match& m, const HostGraph& g);

} // namespace gpeng

#endif // GPENG_MATCH_HPP
