#include "gpeng/casestudies.hpp"

#include <algorithm>
#include <deque>

#include "gpeng/errors.hpp"
#include "gpeng/iso.hpp"
#include "gpeng/match.hpp"
#include "gpeng/rng.hpp"

namespace gpeng {

SPTerm SPTerm::edge() { return SPTerm{}; }

SPTerm SPTerm::series(SPTerm a, SPTerm b) {
    SPTerm t;
    t.kind = Kind::series;
    t.kids.push_back(std::move(a));
    t.kids.push_back(std::move(b));
    return t;
}

SPTerm SPTerm::parallel(SPTerm a, SPTerm b) {
    SPTerm t;
    t.kind = Kind::parallel;
    t.kids.push_back(std::move(a));
    t.kids.push_back(std::move(b));
    return t;
}

std::size_t SPTerm::edge_count() const {
    if (kind == Kind::edge) {
        return 1;
    }
    return kids[0].edge_count() + kids[1].edge_count();
}

std::size_t nonedge_count(const HostGraph& g) {
    std::set<std::pair<NodeId, NodeId>> linked;
    for (const auto& [id, e] : g.edges()) {
        linked.emplace(e.source, e.target);
    }
    std::size_t n = g.node_count();
    return n * n - linked.size();
}

std::int64_t colour_of(const Label& label) {
    if (label.list.empty() || !is_int(label.list.back())) {
        throw EvalError(Errc::uncoloured_node,
                        "label '" + label_to_string(label) +
                            "' does not end in an integer");
    }
    return as_int(label.list.back());
}

std::int64_t colour_sum(const HostGraph& g) {
    std::int64_t sum = 0;
    for (const auto& [id, label] : g.nodes()) {
        sum += colour_of(label);
    }
    return sum;
}

std::set<std::int64_t> colours_set(const HostGraph& g) {
    std::set<std::int64_t> out;
    for (const auto& [id, label] : g.nodes()) {
        out.insert(colour_of(label));
    }
    return out;
}

HostGraph oracle_transitive_closure(const HostGraph& g) {
    std::map<NodeId, std::vector<NodeId>> adj;
    for (const auto& [id, e] : g.edges()) {
        adj[e.source].push_back(e.target);
    }
    HostGraph out = g;
    for (const auto& [v, label] : g.nodes()) {
        // Everything reachable from v by a path of one or more edges.
        std::set<NodeId> reach;
        std::deque<NodeId> queue;
        for (const NodeId& w : adj[v]) {
            if (reach.insert(w).second) {
                queue.push_back(w);
            }
        }
        while (!queue.empty()) {
            NodeId u = queue.front();
            queue.pop_front();
            for (const NodeId& w : adj[u]) {
                if (reach.insert(w).second) {
                    queue.push_back(w);
                }
            }
        }
        for (const NodeId& w : reach) {
            if (w != v && g.edges_between(v, w).empty()) {
                out.add_edge(out.fresh_edge_id(), v, w, Label{});
            }
        }
    }
    return out;
}

bool oracle_is_cyclic(const HostGraph& g) {
    std::map<NodeId, std::vector<NodeId>> adj;
    for (const auto& [id, e] : g.edges()) {
        adj[e.source].push_back(e.target);
    }
    std::map<NodeId, int> state; // 0 unseen, 1 on the stack, 2 finished
    for (const auto& [v, label] : g.nodes()) {
        if (state[v] != 0) {
            continue;
        }
        std::vector<std::pair<NodeId, std::size_t>> stack;
        stack.emplace_back(v, 0);
        state[v] = 1;
        while (!stack.empty()) {
            NodeId u = stack.back().first;
            std::size_t i = stack.back().second;
            std::vector<NodeId>& next = adj[u];
            if (i < next.size()) {
                stack.back().second = i + 1;
                const NodeId& w = next[i];
                if (state[w] == 1) {
                    return true;
                }
                if (state[w] == 0) {
                    state[w] = 1;
                    stack.emplace_back(w, 0);
                }
            } else {
                state[u] = 2;
                stack.pop_back();
            }
        }
    }
    return false;
}

bool check_colouring(const HostGraph& original, const HostGraph& result) {
    if (original.node_count() != result.node_count() ||
        original.edge_count() != result.edge_count()) {
        return false;
    }
    for (const auto& [id, label] : original.nodes()) {
        if (!result.has_node(id)) {
            return false;
        }
        const Label& coloured = result.node_label(id);
        if (coloured.mark != label.mark ||
            coloured.list.size() != label.list.size() + 1) {
            return false;
        }
        if (!std::equal(label.list.begin(), label.list.end(),
                        coloured.list.begin())) {
            return false;
        }
        const Atom& tail = coloured.list.back();
        if (!is_int(tail) || as_int(tail) < 1) {
            return false;
        }
    }
    for (const auto& [id, e] : original.edges()) {
        if (!result.has_edge(id) || !(result.edge(id) == e)) {
            return false;
        }
    }
    for (const auto& [id, e] : result.edges()) {
        if (colour_of(result.node_label(e.source)) ==
            colour_of(result.node_label(e.target))) {
            return false;
        }
    }
    return true;
}

namespace {

void realize_into(const SPTerm& t, HostGraph& g, const NodeId& src,
                  const NodeId& snk) {
    switch (t.kind) {
    case SPTerm::Kind::edge:
        g.add_edge(g.fresh_edge_id(), src, snk, Label{});
        return;
    case SPTerm::Kind::series: {
        NodeId mid = g.fresh_node_id();
        g.add_node(mid, Label{});
        realize_into(t.kids[0], g, src, mid);
        realize_into(t.kids[1], g, mid, snk);
        return;
    }
    case SPTerm::Kind::parallel:
        realize_into(t.kids[0], g, src, snk);
        realize_into(t.kids[1], g, src, snk);
        return;
    }
}

SPTerm random_term(Rng& rng, std::size_t budget) {
    if (budget <= 1 || rng.below(4) == 0) {
        return SPTerm::edge();
    }
    std::size_t left = 1 + static_cast<std::size_t>(rng.below(budget - 1));
    SPTerm a = random_term(rng, left);
    SPTerm b = random_term(rng, budget - left);
    if (rng.below(2) == 0) {
        return SPTerm::series(std::move(a), std::move(b));
    }
    return SPTerm::parallel(std::move(a), std::move(b));
}

} // namespace

HostGraph realize_sp(const SPTerm& term) {
    HostGraph g;
    NodeId src = g.fresh_node_id();
    g.add_node(src, Label{});
    NodeId snk = g.fresh_node_id();
    g.add_node(snk, Label{});
    realize_into(term, g, src, snk);
    return g;
}

std::pair<SPTerm, HostGraph> gen_series_parallel(std::uint64_t seed,
                                                 std::size_t max_edges) {
    if (max_edges < 1) {
        throw LimitError(Errc::size_limit, "max_edges must be at least 1");
    }
    Rng rng(seed);
    SPTerm t = random_term(rng, max_edges);
    HostGraph g = realize_sp(t);
    return {std::move(t), std::move(g)};
}

std::map<std::string, HostGraph> normal_forms(const std::vector<Rule>& rules,
                                              const HostGraph& g,
                                              std::size_t cap) {
    std::map<std::string, HostGraph> irreducible;
    std::set<std::string> seen;
    std::deque<std::pair<std::string, HostGraph>> queue;
    std::string start = canonical_key(g);
    seen.insert(start);
    if (seen.size() > cap) {
        throw LimitError(Errc::state_space_limit,
                         "rewrite state space exceeds the cap");
    }
    queue.emplace_back(std::move(start), g);
    while (!queue.empty()) {
        auto [key, cur] = std::move(queue.front());
        queue.pop_front();
        bool reducible = false;
        for (const Rule& r : rules) {
            for (const Match& m : find_matches(r, cur)) {
                reducible = true;
                HostGraph h = apply_match(r, m, cur);
                std::string k = canonical_key(h);
                if (!seen.insert(k).second) {
                    continue;
                }
                if (seen.size() > cap) {
                    throw LimitError(Errc::state_space_limit,
                                     "rewrite state space exceeds the cap");
                }
                queue.emplace_back(std::move(k), std::move(h));
            }
        }
        if (!reducible) {
            irreducible.emplace(std::move(key), std::move(cur));
        }
    }
    return irreducible;
}

} // namespace gpeng
