#ifndef GPENG_GRAPH_HPP
#define GPENG_GRAPH_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gpeng/label.hpp"

namespace gpeng {

using NodeId = std::string;
using EdgeId = std::string;

struct NodeSpec {
    NodeId id;
    Label label;
};

struct EdgeSpec {
    EdgeId id;
    NodeId source;
    NodeId target;
    Label label;
};

struct HostEdge {
    NodeId source;
    NodeId target;
    Label label;

    bool operator==(const HostEdge&) const = default;
};

/// A directed labelled multigraph. Ids are opaque names, unique within the
/// graph; parallel edges and loops are permitted; every edge endpoint is a
/// node of the graph.
///
/// Values are treated as immutable once built: the rewrite engine copies a
/// graph and mutates the copy, so const references may be shared freely
/// across threads.
class HostGraph {
public:
    HostGraph() = default;

    /// Validates ids, endpoints and mark placement (grey is node-only,
    /// dashed edge-only).
    static HostGraph build(const std::vector<NodeSpec>& nodes,
                           const std::vector<EdgeSpec>& edges);

    const std::map<NodeId, Label>& nodes() const { return nodes_; }
    const std::map<EdgeId, HostEdge>& edges() const { return edges_; }

    std::size_t node_count() const { return nodes_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    bool has_node(const NodeId& v) const { return nodes_.count(v) != 0; }
    bool has_edge(const EdgeId& e) const { return edges_.count(e) != 0; }

    const Label& node_label(const NodeId& v) const;
    const HostEdge& edge(const EdgeId& e) const;

    /// A loop at v counts once toward indegree and once toward outdegree.
    int indegree(const NodeId& v) const;
    int outdegree(const NodeId& v) const;

    std::vector<EdgeId> incident_edges(const NodeId& v) const;
    std::vector<EdgeId> edges_between(const NodeId& from, const NodeId& to) const;

    void add_node(const NodeId& id, const Label& label);
    void add_edge(const EdgeId& id, const NodeId& src, const NodeId& tgt,
                  const Label& label);
    /// The node must have no incident edges left.
    void remove_node(const NodeId& id);
    void remove_edge(const EdgeId& id);
    void set_node_label(const NodeId& id, const Label& label);
    void set_edge_label(const EdgeId& id, const Label& label);

    NodeId fresh_node_id();
    EdgeId fresh_edge_id();

    bool operator==(const HostGraph& other) const {
        return nodes_ == other.nodes_ && edges_ == other.edges_;
    }

    /// Throws if an edge references a missing endpoint or a mark sits on
    /// the wrong kind of item.
    void check_invariants() const;

private:
    std::map<NodeId, Label> nodes_;
    std::map<EdgeId, HostEdge> edges_;
    std::uint64_t next_node_ = 1;
    std::uint64_t next_edge_ = 1;
};

} // namespace gpeng

#endif // GPENG_GRAPH_HPP
