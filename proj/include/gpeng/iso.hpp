#ifndef GPENG_ISO_HPP
#define GPENG_ISO_HPP

#include <cstddef>
#include <string>

#include "gpeng/graph.hpp"

namespace gpeng {

/// Decides whether two host graphs are isomorphic: a bijection on nodes
/// under which, for every ordered node pair, the multiset of edge labels
/// between them is preserved. Backtracking search with degree and label
/// pruning; edge identities play no role.
bool isomorphic(const HostGraph& a, const HostGraph& b);

struct CanonicalOptions {
    /// Hard cap on graph size; larger graphs throw a size-limit error.
    std::size_t max_nodes = 20;
    /// Budget on discrete colourings visited during the search. Highly
    /// symmetric unlabelled graphs can exhaust it; labelled graphs from
    /// rewrites stay far below.
    std::size_t max_leaves = 500000;
};

/// A complete isomorphism invariant: two graphs have equal keys exactly
/// when they are isomorphic. Computed by iterated neighbourhood
/// refinement plus individualization, taking the lexicographically
/// least certificate over all discrete colourings reached.
///
/// Deliberately shares no code with isomorphic() so the two can
/// cross-check each other.
std::string canonical_key(const HostGraph& g, const CanonicalOptions& opts = {});

} // namespace gpeng

#endif // GPENG_ISO_HPP
