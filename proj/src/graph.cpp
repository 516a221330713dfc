#include "gpeng/graph.hpp"

#include <algorithm>

namespace gpeng {

namespace {

void check_mark(const Label& label, bool is_node, const std::string& id) {
    if (is_node && !mark_allowed_on_node(label.mark)) {
        throw GraphError(Errc::illegal_mark,
                         "mark '" + std::string(mark_name(label.mark)) +
                             "' is not allowed on node '" + id + "'");
    }
    if (!is_node && !mark_allowed_on_edge(label.mark)) {
        throw GraphError(Errc::illegal_mark,
                         "mark '" + std::string(mark_name(label.mark)) +
                             "' is not allowed on edge '" + id + "'");
    }
}

} // namespace

HostGraph HostGraph::build(const std::vector<NodeSpec>& nodes,
                           const std::vector<EdgeSpec>& edges) {
    HostGraph g;
    for (const NodeSpec& n : nodes) g.add_node(n.id, n.label);
    for (const EdgeSpec& e : edges) g.add_edge(e.id, e.source, e.target, e.label);
    return g;
}

const Label& HostGraph::node_label(const NodeId& v) const {
    auto it = nodes_.find(v);
    if (it == nodes_.end()) {
        throw GraphError(Errc::unknown_node, "no node '" + v + "'");
    }
    return it->second;
}

const HostEdge& HostGraph::edge(const EdgeId& e) const {
    auto it = edges_.find(e);
    if (it == edges_.end()) {
        throw GraphError(Errc::unknown_node, "no edge '" + e + "'");
    }
    return it->second;
}

int HostGraph::indegree(const NodeId& v) const {
    if (!has_node(v)) {
        throw GraphError(Errc::unknown_node, "no node '" + v + "'");
    }
    int deg = 0;
    for (const auto& [id, e] : edges_) {
        if (e.target == v) ++deg;
    }
    return deg;
}

int HostGraph::outdegree(const NodeId& v) const {
    if (!has_node(v)) {
        throw GraphError(Errc::unknown_node, "no node '" + v + "'");
    }
    int deg = 0;
    for (const auto& [id, e] : edges_) {
        if (e.source == v) ++deg;
    }
    return deg;
}

std::vector<EdgeId> HostGraph::incident_edges(const NodeId& v) const {
    std::vector<EdgeId> out;
    for (const auto& [id, e] : edges_) {
        if (e.source == v || e.target == v) out.push_back(id);
    }
    return out;
}

std::vector<EdgeId> HostGraph::edges_between(const NodeId& from,
                                             const NodeId& to) const {
    std::vector<EdgeId> out;
    for (const auto& [id, e] : edges_) {
        if (e.source == from && e.target == to) out.push_back(id);
    }
    return out;
}

void HostGraph::add_node(const NodeId& id, const Label& label) {
    check_mark(label, true, id);
    if (!nodes_.emplace(id, label).second) {
        throw GraphError(Errc::duplicate_id, "duplicate node id '" + id + "'");
    }
}

void HostGraph::add_edge(const EdgeId& id, const NodeId& src, const NodeId& tgt,
                         const Label& label) {
    check_mark(label, false, id);
    if (!has_node(src)) {
        throw GraphError(Errc::unknown_endpoint,
                         "edge '" + id + "' has unknown source '" + src + "'");
    }
    if (!has_node(tgt)) {
        throw GraphError(Errc::unknown_endpoint,
                         "edge '" + id + "' has unknown target '" + tgt + "'");
    }
    if (!edges_.emplace(id, HostEdge{src, tgt, label}).second) {
        throw GraphError(Errc::duplicate_id, "duplicate edge id '" + id + "'");
    }
}

void HostGraph::remove_node(const NodeId& id) {
    if (!has_node(id)) {
        throw GraphError(Errc::unknown_node, "no node '" + id + "'");
    }
    for (const auto& [eid, e] : edges_) {
        if (e.source == id || e.target == id) {
            throw GraphError(Errc::unknown_endpoint,
                             "cannot remove node '" + id +
                                 "' while edge '" + eid + "' is attached");
        }
    }
    nodes_.erase(id);
}

void HostGraph::remove_edge(const EdgeId& id) {
    if (edges_.erase(id) == 0) {
        throw GraphError(Errc::unknown_node, "no edge '" + id + "'");
    }
}

void HostGraph::set_node_label(const NodeId& id, const Label& label) {
    auto it = nodes_.find(id);
    if (it == nodes_.end()) {
        throw GraphError(Errc::unknown_node, "no node '" + id + "'");
    }
    check_mark(label, true, id);
    it->second = label;
}

void HostGraph::set_edge_label(const EdgeId& id, const Label& label) {
    auto it = edges_.find(id);
    if (it == edges_.end()) {
        throw GraphError(Errc::unknown_node, "no edge '" + id + "'");
    }
    check_mark(label, false, id);
    it->second.label = label;
}

NodeId HostGraph::fresh_node_id() {
    for (;;) {
        NodeId id = "n" + std::to_string(next_node_++);
        if (!has_node(id)) return id;
    }
}

EdgeId HostGraph::fresh_edge_id() {
    for (;;) {
        EdgeId id = "e" + std::to_string(next_edge_++);
        if (!has_edge(id)) return id;
    }
}

void HostGraph::check_invariants() const {
    for (const auto& [id, label] : nodes_) {
        check_mark(label, true, id);
    }
    for (const auto& [id, e] : edges_) {
        check_mark(e.label, false, id);
        if (!has_node(e.source)) {
            throw GraphError(Errc::unknown_endpoint,
                             "edge '" + id + "' has unknown source '" +
                                 e.source + "'");
        }
        if (!has_node(e.target)) {
            throw GraphError(Errc::unknown_endpoint,
                             "edge '" + id + "' has unknown target '" +
                                 e.target + "'");
        }
    }
}

} // namespace gpeng
