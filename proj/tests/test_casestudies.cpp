#include "doctest.h"

#include "gpeng/casestudies.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include "gpeng/graph_io.hpp"
#include "gpeng/iso.hpp"
#include "gpeng/match.hpp"
#include "gpeng/parser.hpp"
#include "gpeng/rng.hpp"
#include "gpeng/verify.hpp"

using namespace gpeng;

namespace {

ProgramAST load_ast(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_program(buf.str(), path);
}

const Rule& rule_named(const ProgramAST& ast, const std::string& name) {
    for (const Rule& r : ast.rules) {
        if (r.name == name) return r;
    }
    FAIL(("no rule named " + name).c_str());
    static Rule none;
    return none;
}

HostGraph directed_cycle(int n) {
    HostGraph g;
    for (int i = 0; i < n; ++i) {
        g.add_node("v" + std::to_string(i), Label{});
    }
    for (int i = 0; i < n; ++i) {
        g.add_edge("e" + std::to_string(i), "v" + std::to_string(i),
                   "v" + std::to_string((i + 1) % n), Label{});
    }
    return g;
}

HostGraph complete_digraph(int n) {
    HostGraph g;
    for (int i = 0; i < n; ++i) {
        g.add_node("v" + std::to_string(i), Label{});
    }
    int e = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            g.add_edge("e" + std::to_string(e++), "v" + std::to_string(i),
                       "v" + std::to_string(j), Label{});
        }
    }
    return g;
}

/// Appends colour c to every node label, mimicking a finished init pass.
HostGraph coloured(const HostGraph& g, std::int64_t c) {
    HostGraph out = g;
    for (const auto& [id, label] : g.nodes()) {
        Label l = label;
        l.list.push_back(Atom(c));
        out.set_node_label(id, l);
    }
    return out;
}

} // namespace

TEST_CASE("nonedge_count counts ordered pairs, diagonal included") {
    CHECK(nonedge_count(HostGraph{}) == 0);

    HostGraph single;
    single.add_node("a", Label{});
    CHECK(nonedge_count(single) == 1);

    CHECK(nonedge_count(directed_cycle(4)) == 12);
    CHECK(nonedge_count(complete_digraph(4)) == 4);

    // parallel edges close a single pair
    HostGraph twin = parse_host_graph("node a empty\n"
                                      "node b empty\n"
                                      "edge e1 a b 1\n"
                                      "edge e2 a b 2\n");
    CHECK(nonedge_count(twin) == 3);
}

TEST_CASE("colour helpers read the trailing integer") {
    Label good{{std::string("x"), std::int64_t{3}}, Mark::none};
    CHECK(colour_of(good) == 3);
    CHECK_THROWS_AS(colour_of(Label{}), EvalError);
    CHECK_THROWS_AS(colour_of(Label{{std::string("x")}, Mark::none}),
                    EvalError);

    HostGraph g = parse_host_graph("node a 1:2\nnode b 5\n");
    CHECK(colour_sum(g) == 7);
    CHECK(colours_set(g) == std::set<std::int64_t>{2, 5});
}

TEST_CASE("transitive closure oracle on known graphs") {
    HostGraph path = parse_host_graph("node a empty\n"
                                      "node b empty\n"
                                      "node c empty\n"
                                      "edge e1 a b empty\n"
                                      "edge e2 b c empty\n");
    HostGraph closed = oracle_transitive_closure(path);
    CHECK(closed.edge_count() == 3);
    CHECK_FALSE(closed.edges_between("a", "c").empty());
    CHECK(nonedge_count(closed) == 6);

    // closing twice changes nothing
    CHECK(oracle_transitive_closure(closed) == closed);

    HostGraph cyc = directed_cycle(4);
    HostGraph closed_cyc = oracle_transitive_closure(cyc);
    CHECK(closed_cyc.edge_count() == 12);
    CHECK(nonedge_count(closed_cyc) == 4);

    // a loop reaches only itself and stays loop-free beyond the original
    HostGraph loop = parse_host_graph("node a empty\nedge e1 a a empty\n");
    CHECK(oracle_transitive_closure(loop) == loop);
}

TEST_CASE("cyclicity oracle on known graphs") {
    CHECK_FALSE(oracle_is_cyclic(HostGraph{}));
    CHECK(oracle_is_cyclic(directed_cycle(3)));
    CHECK(oracle_is_cyclic(parse_host_graph("node a empty\n"
                                            "edge e1 a a empty\n")));
    CHECK_FALSE(oracle_is_cyclic(parse_host_graph("node a empty\n"
                                                  "node b empty\n"
                                                  "edge e1 a b empty\n"
                                                  "edge e2 a b empty\n")));

    // diamond: two paths to the same node, still acyclic
    HostGraph dag = parse_host_graph("node a empty\nnode b empty\n"
                                     "node c empty\nnode d empty\n"
                                     "edge e1 a b empty\nedge e2 a c empty\n"
                                     "edge e3 b d empty\nedge e4 c d empty\n");
    CHECK_FALSE(oracle_is_cyclic(dag));

    // long chain: the search must not recurse on the host stack
    HostGraph chain;
    chain.add_node("n0", Label{});
    for (int i = 1; i < 20000; ++i) {
        chain.add_node("n" + std::to_string(i), Label{});
        chain.add_edge("e" + std::to_string(i), "n" + std::to_string(i - 1),
                       "n" + std::to_string(i), Label{});
    }
    CHECK_FALSE(oracle_is_cyclic(chain));
    chain.add_edge("back", "n19999", "n0", Label{});
    CHECK(oracle_is_cyclic(chain));
}

TEST_CASE("check_colouring accepts exactly proper colour extensions") {
    HostGraph g = parse_host_graph("node a \"p\"\n"
                                   "node b \"q\" #red\n"
                                   "edge e1 a b 7\n");
    HostGraph ok = parse_host_graph("node a \"p\":1\n"
                                    "node b \"q\":2 #red\n"
                                    "edge e1 a b 7\n");
    CHECK(check_colouring(g, ok));

    // adjacent nodes of equal colour
    HostGraph clash = parse_host_graph("node a \"p\":1\n"
                                       "node b \"q\":1 #red\n"
                                       "edge e1 a b 7\n");
    CHECK_FALSE(check_colouring(g, clash));

    // colours start at one
    HostGraph zero = parse_host_graph("node a \"p\":0\n"
                                      "node b \"q\":2 #red\n"
                                      "edge e1 a b 7\n");
    CHECK_FALSE(check_colouring(g, zero));

    // a dropped mark is a changed node
    HostGraph unmarked = parse_host_graph("node a \"p\":1\n"
                                          "node b \"q\":2\n"
                                          "edge e1 a b 7\n");
    CHECK_FALSE(check_colouring(g, unmarked));

    // edges must survive untouched
    HostGraph relabelled = parse_host_graph("node a \"p\":1\n"
                                            "node b \"q\":2 #red\n"
                                            "edge e1 a b 8\n");
    CHECK_FALSE(check_colouring(g, relabelled));

    // two appended atoms are one too many
    HostGraph twice = parse_host_graph("node a \"p\":1:1\n"
                                       "node b \"q\":2 #red\n"
                                       "edge e1 a b 7\n");
    CHECK_FALSE(check_colouring(g, twice));

    CHECK_FALSE(check_colouring(g, g));

    // a loop can never be properly coloured
    HostGraph lg = parse_host_graph("node a empty\nedge e1 a a empty\n");
    HostGraph lc = parse_host_graph("node a 1\nedge e1 a a empty\n");
    CHECK_FALSE(check_colouring(lg, lc));
}

TEST_CASE("series-parallel terms realize to the expected graphs") {
    HostGraph e = realize_sp(SPTerm::edge());
    CHECK(e.node_count() == 2);
    CHECK(e.edge_count() == 1);

    SPTerm two_series = SPTerm::series(SPTerm::edge(), SPTerm::edge());
    HostGraph path = realize_sp(two_series);
    CHECK(two_series.edge_count() == 2);
    CHECK(path.node_count() == 3);
    CHECK(path.edge_count() == 2);
    CHECK_FALSE(oracle_is_cyclic(path));

    SPTerm two_par = SPTerm::parallel(SPTerm::edge(), SPTerm::edge());
    HostGraph par = realize_sp(two_par);
    CHECK(par.node_count() == 2);
    CHECK(par.edge_count() == 2);

    SPTerm nested = SPTerm::series(two_par, SPTerm::edge());
    HostGraph big = realize_sp(nested);
    CHECK(nested.edge_count() == 3);
    CHECK(big.node_count() == 3);
    CHECK(big.edge_count() == 3);
}

TEST_CASE("the series-parallel generator is deterministic and bounded") {
    for (std::uint64_t seed : {1ull, 2ull, 50ull}) {
        auto [t1, g1] = gen_series_parallel(seed, 10);
        auto [t2, g2] = gen_series_parallel(seed, 10);
        CHECK(g1 == g2);
        CHECK(t1.edge_count() == t2.edge_count());
        CHECK(t1.edge_count() <= 10);
        CHECK(t1.edge_count() >= 1);
        CHECK(realize_sp(t1) == g1);
        CHECK(g1.edge_count() == t1.edge_count());
    }
    auto [t, g] = gen_series_parallel(9, 1);
    CHECK(t.edge_count() == 1);
    CHECK(g.edge_count() == 1);
    CHECK_THROWS_AS(gen_series_parallel(1, 0), LimitError);
}

TEST_CASE("normal forms of series-parallel reduction") {
    ProgramAST ast = load_ast("corpus/seriesparallel/program.gp");
    std::vector<Rule> reduce{rule_named(ast, "series"),
                             rule_named(ast, "parallel")};

    // a reduced series pair collapses to a single edge
    HostGraph path = realize_sp(SPTerm::series(SPTerm::edge(), SPTerm::edge()));
    std::map<std::string, HostGraph> nf = normal_forms(reduce, path, 100);
    REQUIRE(nf.size() == 1);
    CHECK(nf.begin()->second.node_count() == 2);
    CHECK(nf.begin()->second.edge_count() == 1);

    // every normal form is genuinely irreducible
    auto [t, g] = gen_series_parallel(5, 6);
    CHECK(t.edge_count() == g.edge_count());
    for (const auto& [key, h] : normal_forms(reduce, g, 1000)) {
        CHECK(canonical_key(h) == key);
        for (const Rule& r : reduce) {
            CHECK(find_matches(r, h).empty());
        }
    }

    // the non-series-parallel bridge never reaches a single edge
    HostGraph bridge = load_host_graph("corpus/seriesparallel/inputs/bridge.host");
    for (const auto& [key, h] : normal_forms(reduce, bridge, 1000)) {
        CHECK_FALSE((h.node_count() == 2 && h.edge_count() == 1));
    }

    CHECK_THROWS_AS(normal_forms(reduce, bridge, 0), LimitError);
}

TEST_CASE("one closure step removes exactly one nonedge") {
    ProgramAST ast = load_ast("corpus/transclosure/program.gp");
    const Rule& link = rule_named(ast, "link");

    Rng rng(31);
    int steps = 0;
    for (int trial = 0; trial < 30; ++trial) {
        HostGraph g = random_digraph(rng, 6, true);
        for (const Match& m : find_matches(link, g)) {
            HostGraph h = apply_match(link, m, g);
            CHECK(nonedge_count(h) == nonedge_count(g) - 1);
            CHECK(h.node_count() == g.node_count());
            CHECK(h.edge_count() == g.edge_count() + 1);
            ++steps;
        }
    }
    CHECK(steps > 20);
}

TEST_CASE("one colouring step bumps one target colour") {
    ProgramAST ast = load_ast("corpus/colouring/program.gp");
    const Rule& inc = rule_named(ast, "inc");

    Rng rng(32);
    int steps = 0;
    for (int trial = 0; trial < 30; ++trial) {
        HostGraph g = coloured(random_digraph(rng, 6, false), 1);
        for (const Match& m : find_matches(inc, g)) {
            HostGraph h = apply_match(inc, m, g);
            CHECK(colour_sum(h) == colour_sum(g) + 1);
            CHECK(h.node_count() == g.node_count());
            CHECK(h.edge_count() == g.edge_count());
            ++steps;
        }
    }
    CHECK(steps > 20);
}

TEST_CASE("one pruning step preserves cyclicity") {
    ProgramAST ast = load_ast("corpus/cyclecheck/program.gp");
    const Rule& del = rule_named(ast, "delete");

    Rng rng(33);
    int steps = 0;
    for (int trial = 0; trial < 40; ++trial) {
        HostGraph g = random_digraph(rng, 6, true);
        for (const Match& m : find_matches(del, g)) {
            HostGraph h = apply_match(del, m, g);
            CHECK(oracle_is_cyclic(h) == oracle_is_cyclic(g));
            ++steps;
        }
    }
    CHECK(steps > 10);
}
