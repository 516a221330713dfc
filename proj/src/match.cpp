#include "gpeng/match.hpp"

#include <set>

namespace gpeng {

namespace {

struct MatchSearch {
    const Rule& rule;
    const HostGraph& g;
    std::set<std::string> iface;
    std::vector<Match> out;
    Match cur;
    std::set<NodeId> used_nodes;
    std::set<EdgeId> used_edges;

    MatchSearch(const Rule& r, const HostGraph& host)
        : rule(r), g(host), iface(r.interface.begin(), r.interface.end()) {}

    void try_nodes(std::size_t i) {
        if (i == rule.left.nodes.size()) {
            try_edges(0);
            return;
        }
        const RuleNode& rn = rule.left.nodes[i];
        for (const auto& [id, label] : g.nodes()) {
            if (used_nodes.count(id) != 0) continue;
            if (label.mark != rn.mark) continue;
            for (Assignment& ext :
                 match_label(rn.label, label.list, cur.vars, rule.vars)) {
                Assignment saved = std::move(cur.vars);
                cur.vars = std::move(ext);
                cur.nodes[rn.id] = id;
                used_nodes.insert(id);
                try_nodes(i + 1);
                used_nodes.erase(id);
                cur.nodes.erase(rn.id);
                cur.vars = std::move(saved);
            }
        }
    }

    void try_edges(std::size_t i) {
        if (i == rule.left.edges.size()) {
            finish();
            return;
        }
        const RuleEdge& re = rule.left.edges[i];
        const NodeId& s = cur.nodes.at(re.source);
        const NodeId& t = cur.nodes.at(re.target);
        for (const EdgeId& id : g.edges_between(s, t)) {
            if (used_edges.count(id) != 0) continue;
            const HostEdge& he = g.edge(id);
            if (he.label.mark != re.mark) continue;
            for (Assignment& ext :
                 match_label(re.label, he.label.list, cur.vars, rule.vars)) {
                Assignment saved = std::move(cur.vars);
                cur.vars = std::move(ext);
                cur.edges[re.id] = id;
                used_edges.insert(id);
                try_edges(i + 1);
                used_edges.erase(id);
                cur.edges.erase(re.id);
                cur.vars = std::move(saved);
            }
        }
    }

    void finish() {
        // A deleted node may not leave dangling edges: everything
        // incident to it must be matched by a left edge.
        for (const RuleNode& rn : rule.left.nodes) {
            if (iface.count(rn.id) != 0) continue;
            for (const EdgeId& e : g.incident_edges(cur.nodes.at(rn.id))) {
                if (used_edges.count(e) == 0) return;
            }
        }
        EvalContext ctx{cur.vars, &g, &cur.nodes};
        if (!eval_cond(rule.condition, ctx)) return;
        out.push_back(cur);
    }
};

} // namespace

std::vector<Match> find_matches(const Rule& rule, const HostGraph& g) {
    MatchSearch search(rule, g);
    search.try_nodes(0);
    return std::move(search.out);
}

HostGraph apply_match(const Rule& rule, const Match& m, const HostGraph& g) {
    EvalContext ctx{m.vars, &g, &m.nodes};
    std::set<std::string> iface(rule.interface.begin(), rule.interface.end());

    std::set<std::string> preserved;
    for (const RuleEdge& re : rule.right.edges) {
        if (rule.left.find_edge(re.id) != nullptr) preserved.insert(re.id);
    }

    // Evaluate every right-hand label against the unmodified graph before
    // touching anything; steps must not observe their own effects.
    std::map<std::string, Label> node_labels;
    for (const RuleNode& n : rule.right.nodes) {
        node_labels.emplace(n.id, Label{eval_expr(n.label, ctx), n.mark});
    }
    std::map<std::string, Label> edge_labels;
    for (const RuleEdge& e : rule.right.edges) {
        edge_labels.emplace(e.id, Label{eval_expr(e.label, ctx), e.mark});
    }

    HostGraph out = g;

    for (const RuleEdge& e : rule.left.edges) {
        if (preserved.count(e.id) == 0) out.remove_edge(m.edges.at(e.id));
    }
    for (const RuleNode& n : rule.left.nodes) {
        if (iface.count(n.id) == 0) out.remove_node(m.nodes.at(n.id));
    }

    for (const RuleNode& n : rule.right.nodes) {
        if (iface.count(n.id) != 0) {
            out.set_node_label(m.nodes.at(n.id), node_labels.at(n.id));
        }
    }
    for (const RuleEdge& e : rule.right.edges) {
        if (preserved.count(e.id) != 0) {
            out.set_edge_label(m.edges.at(e.id), edge_labels.at(e.id));
        }
    }

    std::map<std::string, NodeId> placed;
    for (const std::string& id : rule.interface) placed[id] = m.nodes.at(id);
    for (const RuleNode& n : rule.right.nodes) {
        if (iface.count(n.id) != 0) continue;
        NodeId fresh = out.fresh_node_id();
        out.add_node(fresh, node_labels.at(n.id));
        placed[n.id] = fresh;
    }
    for (const RuleEdge& e : rule.right.edges) {
        if (preserved.count(e.id) != 0) continue;
        EdgeId fresh = out.fresh_edge_id();
        out.add_edge(fresh, placed.at(e.source), placed.at(e.target),
                     edge_labels.at(e.id));
    }
    return out;
}

} // namespace gpeng
