#include "doctest.h"

#include "gpeng/graph_io.hpp"

#include <cstdio>

#include "gpeng/rng.hpp"
#include "gpeng/verify.hpp"

using namespace gpeng;

TEST_CASE("parsing accepts free order, comments and blank lines") {
    HostGraph g = parse_host_graph("// a comment\n"
                                   "edge e1 a b 5\n"
                                   "\n"
                                   "node a empty // trailing comment\n"
                                   "node b \"hi\":2 #red\n");
    CHECK(g.node_count() == 2);
    CHECK(g.edge_count() == 1);
    CHECK(g.node_label("a").list.empty());
    CHECK(g.node_label("b").list ==
          Value{std::string("hi"), std::int64_t{2}});
    CHECK(g.node_label("b").mark == Mark::red);
    CHECK(g.edge("e1").label.list == Value{std::int64_t{5}});
}

TEST_CASE("canonical text survives a parse-print cycle byte for byte") {
    const std::string text = "node a -3 #grey\n"
                             "node b \"x y\":7\n"
                             "node c empty\n"
                             "edge e1 a b empty #dashed\n"
                             "edge e2 b b 1:2:3\n";
    CHECK(print_host_graph(parse_host_graph(text)) == text);
}

TEST_CASE("printing then parsing reproduces the graph") {
    Rng rng(7);
    for (int i = 0; i < 40; ++i) {
        HostGraph g = random_digraph(rng, 7, true);
        CHECK(parse_host_graph(print_host_graph(g)) == g);
    }
}

TEST_CASE("parse errors carry positions") {
    try {
        parse_host_graph("node a empty\nedge e1 a zz empty\n", "bad.host");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.file() == "bad.host");
        CHECK(e.line() == 2);
    }

    CHECK_THROWS_AS(parse_host_graph("vertex a empty\n"), ParseError);
    CHECK_THROWS_AS(parse_host_graph("node a\n"), ParseError);
    CHECK_THROWS_AS(parse_host_graph("node a 1 extra\n"), ParseError);
    CHECK_THROWS_AS(parse_host_graph("node a \"unterminated\n"), ParseError);
    CHECK_THROWS_AS(parse_host_graph("node a 1 #purple\n"), ParseError);
    CHECK_THROWS_AS(parse_host_graph("node a 1 #dashed\n"), ParseError);
    CHECK_THROWS_AS(parse_host_graph("edge e1 a a 1 #grey\nnode a empty\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_host_graph("node a empty\nnode a empty\n"),
                    ParseError);
    CHECK_THROWS_AS(
        parse_host_graph("node a 99999999999999999999999999999\n"),
        ParseError);
}

TEST_CASE("the empty keyword is not a node label name") {
    CHECK_THROWS_AS(parse_host_graph("node a hello\n"), ParseError);
    HostGraph g = parse_host_graph("node a empty #blue\n");
    CHECK(g.node_label("a").mark == Mark::blue);
}

TEST_CASE("save and load round-trip through a file") {
    HostGraph g = parse_host_graph("node a 1\nedge e1 a a \"s\"\n");
    const char* path = "build/io_roundtrip.host";
    save_host_graph(g, path);
    CHECK(load_host_graph(path) == g);
    std::remove(path);

    CHECK_THROWS_AS(load_host_graph("no/such/file.host"), Error);
}
