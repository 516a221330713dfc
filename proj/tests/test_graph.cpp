#include "doctest.h"

#include "gpeng/graph.hpp"

#include <algorithm>

using namespace gpeng;

namespace {

Label lab(Value v, Mark m = Mark::none) { return Label{std::move(v), m}; }

HostGraph two_node_graph() {
    return HostGraph::build(
        {{"a", lab({std::int64_t{1}})}, {"b", lab({std::int64_t{2}})}},
        {{"e1", "a", "b", lab({})}});
}

} // namespace

TEST_CASE("build validates ids and endpoints") {
    HostGraph g = two_node_graph();
    CHECK(g.node_count() == 2);
    CHECK(g.edge_count() == 1);
    CHECK(g.has_node("a"));
    CHECK(g.edge("e1").source == "a");
    CHECK(g.edge("e1").target == "b");

    CHECK_THROWS_AS(HostGraph::build({{"a", lab({})}, {"a", lab({})}}, {}),
                    GraphError);
    CHECK_THROWS_AS(
        HostGraph::build({{"a", lab({})}}, {{"e1", "a", "missing", lab({})}}),
        GraphError);
    CHECK_THROWS_AS(HostGraph::build({{"a", lab({})}},
                                     {{"e1", "a", "a", lab({})},
                                      {"e1", "a", "a", lab({})}}),
                    GraphError);
}

TEST_CASE("mark placement is checked") {
    CHECK_NOTHROW(HostGraph::build({{"a", lab({}, Mark::grey)}}, {}));
    CHECK_THROWS_AS(
        HostGraph::build({{"a", lab({}, Mark::dashed)}}, {}),
        GraphError);
    CHECK_THROWS_AS(
        HostGraph::build({{"a", lab({})}},
                         {{"e1", "a", "a", lab({}, Mark::grey)}}),
        GraphError);
    CHECK_NOTHROW(HostGraph::build(
        {{"a", lab({})}}, {{"e1", "a", "a", lab({}, Mark::dashed)}}));
}

TEST_CASE("loops and parallel edges are permitted") {
    HostGraph g = HostGraph::build({{"a", lab({})}, {"b", lab({})}},
                                   {{"e1", "a", "b", lab({})},
                                    {"e2", "a", "b", lab({std::int64_t{7}})},
                                    {"e3", "a", "a", lab({})}});
    CHECK(g.edge_count() == 3);
    CHECK(g.edges_between("a", "b") == std::vector<EdgeId>{"e1", "e2"});
    CHECK(g.edges_between("b", "a").empty());
    CHECK(g.edges_between("a", "a") == std::vector<EdgeId>{"e3"});
}

TEST_CASE("degrees count a loop once on each side") {
    HostGraph g = HostGraph::build({{"a", lab({})}, {"b", lab({})}},
                                   {{"e1", "a", "b", lab({})},
                                    {"e2", "a", "a", lab({})}});
    CHECK(g.outdegree("a") == 2);
    CHECK(g.indegree("a") == 1);
    CHECK(g.indegree("b") == 1);
    CHECK(g.outdegree("b") == 0);
    CHECK_THROWS_AS(g.indegree("zz"), GraphError);
}

TEST_CASE("incident_edges sees both directions") {
    HostGraph g = HostGraph::build({{"a", lab({})}, {"b", lab({})}},
                                   {{"e1", "a", "b", lab({})},
                                    {"e2", "b", "a", lab({})},
                                    {"e3", "a", "a", lab({})}});
    std::vector<EdgeId> inc = g.incident_edges("a");
    std::sort(inc.begin(), inc.end());
    CHECK(inc == std::vector<EdgeId>{"e1", "e2", "e3"});
    CHECK(g.incident_edges("b").size() == 2);
}

TEST_CASE("remove_node refuses while edges remain") {
    HostGraph g = two_node_graph();
    CHECK_THROWS_AS(g.remove_node("a"), GraphError);
    g.remove_edge("e1");
    CHECK_NOTHROW(g.remove_node("a"));
    CHECK(g.node_count() == 1);
    CHECK_THROWS_AS(g.remove_node("a"), GraphError);
}

TEST_CASE("mutators validate their arguments") {
    HostGraph g = two_node_graph();
    CHECK_THROWS_AS(g.add_node("a", lab({})), GraphError);
    CHECK_THROWS_AS(g.add_edge("e1", "a", "b", lab({})), GraphError);
    CHECK_THROWS_AS(g.add_edge("e2", "a", "zz", lab({})), GraphError);
    CHECK_THROWS_AS(g.set_node_label("zz", lab({})), GraphError);
    CHECK_THROWS_AS(g.set_edge_label("zz", lab({})), GraphError);
    g.set_node_label("a", lab({std::string("x")}));
    CHECK(g.node_label("a").list == Value{std::string("x")});
}

TEST_CASE("fresh ids never collide with existing ones") {
    HostGraph g;
    g.add_node("n1", lab({}));
    g.add_node("n2", lab({}));
    NodeId f = g.fresh_node_id();
    CHECK_FALSE(g.has_node(f));
    g.add_node(f, lab({}));
    NodeId f2 = g.fresh_node_id();
    CHECK(f2 != f);
    CHECK_FALSE(g.has_node(f2));

    g.add_edge("e1", "n1", "n2", lab({}));
    EdgeId e = g.fresh_edge_id();
    CHECK_FALSE(g.has_edge(e));
    g.add_edge(e, "n1", "n2", lab({}));
    CHECK(g.fresh_edge_id() != e);
}

TEST_CASE("graph equality is structural") {
    HostGraph a = two_node_graph();
    HostGraph b = two_node_graph();
    CHECK(a == b);
    b.set_edge_label("e1", lab({std::int64_t{9}}));
    CHECK_FALSE(a == b);
}

TEST_CASE("label text forms") {
    CHECK(value_to_string({}) == "empty");
    CHECK(value_to_string({std::int64_t{-4}}) == "-4");
    CHECK(value_to_string({std::int64_t{5}, std::string("hi")}) ==
          "5:\"hi\"");
    CHECK(label_to_string({{std::int64_t{1}}, Mark::red}) == "1 #red");
    CHECK(label_to_string({{}, Mark::none}) == "empty");
    CHECK_FALSE(valid_atom_string("a\"b"));
    CHECK_FALSE(valid_atom_string("a\nb"));
    CHECK(valid_atom_string("plain text"));
}
