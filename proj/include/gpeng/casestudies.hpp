#ifndef GPENG_CASESTUDIES_HPP
#define GPENG_CASESTUDIES_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gpeng/graph.hpp"
#include "gpeng/rule.hpp"

namespace gpeng {

/// Series-parallel term: a single edge, or two terms composed end to end
/// (the sink of the first merged with the source of the second) or side
/// by side (sources merged, sinks merged).
struct SPTerm {
    enum class Kind { edge, series, parallel };

    Kind kind = Kind::edge;
    std::vector<SPTerm> kids; // two for series/parallel

    static SPTerm edge();
    static SPTerm series(SPTerm a, SPTerm b);
    static SPTerm parallel(SPTerm a, SPTerm b);

    /// Number of edge leaves, which is also the edge count of the
    /// realized graph.
    std::size_t edge_count() const;
};

/// Number of ordered pairs (v, w), v = w included, with no edge v -> w.
std::size_t nonedge_count(const HostGraph& g);

/// The colour of a node is the trailing integer of its label; asking for
/// one where the label does not end in an integer raises UncolouredNode.
std::int64_t colour_of(const Label& label);
std::int64_t colour_sum(const HostGraph& g);
std::set<std::int64_t> colours_set(const HostGraph& g);

/// Smallest extension of g with an edge (empty label) from v to w for
/// every ordered pair of distinct nodes joined by a directed path but not
/// by an edge. Independent of the rewrite engine: plain reachability.
HostGraph oracle_transitive_closure(const HostGraph& g);

/// True iff g has a directed cycle (a loop counts). Depth-first search,
/// sharing nothing with the rewrite engine it cross-checks.
bool oracle_is_cyclic(const HostGraph& g);

/// True iff `result` is `original` with one integer atom of value >= 1
/// appended to each node label, everything else identical, and no edge
/// joining two nodes of equal colour.
bool check_colouring(const HostGraph& original, const HostGraph& result);

HostGraph realize_sp(const SPTerm& term);

/// Random term with at most max_edges edge leaves, realized with empty
/// labels. The same seed produces the same pair on every platform.
std::pair<SPTerm, HostGraph> gen_series_parallel(std::uint64_t seed,
                                                 std::size_t max_edges);

/// Every irreducible graph reachable from g under the given rules, one
/// representative per isomorphism class keyed by canonical form. Raises
/// StateSpaceLimit once more than `cap` distinct classes get explored.
std::map<std::string, HostGraph> normal_forms(const std::vector<Rule>& rules,
                                              const HostGraph& g,
                                              std::size_t cap);

} // namespace gpeng

#endif // GPENG_CASESTUDIES_HPP
