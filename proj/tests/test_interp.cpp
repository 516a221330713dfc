#include "doctest.h"

#include "gpeng/interp.hpp"

#include <set>
#include <string>

#include "gpeng/elaborate.hpp"
#include "gpeng/graph_io.hpp"
#include "gpeng/parser.hpp"

using namespace gpeng;

namespace {

CoreProgram prog(const std::string& text) {
    return elaborate(parse_program(text));
}

const char* kBump = "rule bump(i : int)\n"
                    "  node 1 i\n"
                    "  =>\n"
                    "  node 1 i+1\n"
                    "  interface 1\n";

const char* kId = "rule id(x : list)\n"
                  "  node 1 x\n"
                  "  =>\n"
                  "  node 1 x\n"
                  "  interface 1\n";

HostGraph one_node(std::int64_t v) {
    return parse_host_graph("node a " + std::to_string(v) + "\n");
}

std::int64_t node_value(const HostGraph& g) {
    REQUIRE(g.node_count() == 1);
    const Label& l = g.nodes().begin()->second;
    REQUIRE(l.list.size() == 1);
    return as_int(l.list[0]);
}

std::set<std::string> class_keys(const OutcomeSet& o) {
    std::set<std::string> keys;
    for (const OutcomeClass& c : o.graphs) {
        keys.insert(c.key);
    }
    return keys;
}

} // namespace

TEST_CASE("equal seeds give byte-identical executions") {
    CoreProgram p = prog(std::string(kBump) + "Main = bump!; bump or bump\n");
    HostGraph g = one_node(0);
    ExecConfig cfg;
    cfg.trace = true;
    for (std::uint64_t seed : {0ull, 1ull, 77ull}) {
        cfg.seed = seed;
        RunResult a = run(p, g, cfg);
        RunResult b = run(p, g, cfg);
        CHECK(a.status == b.status);
        CHECK(a.graph == b.graph);
        CHECK(a.applications == b.applications);
        CHECK(a.trace == b.trace);
    }
}

TEST_CASE("sequences stop at the first failure") {
    CoreProgram p = prog(std::string(kBump) + "Main = bump; fail; bump\n");
    RunResult r = run(p, one_node(0));
    CHECK(r.status == RunStatus::fail);

    OutcomeSet o = outcomes(p, one_node(0));
    CHECK(o.graphs.empty());
    CHECK(o.has_fail);
    CHECK(o.fail_min == 1);
    CHECK(o.fail_max == 1);
    CHECK_FALSE(o.has_diverge);
}

TEST_CASE("skip and fail are units") {
    CoreProgram direct = prog(std::string(kBump) + "Main = bump\n");
    CoreProgram padded = prog(std::string(kBump) + "Main = skip; bump; skip\n");
    HostGraph g = one_node(4);
    CHECK(same_outcome_sets(outcomes(direct, g), outcomes(padded, g)));
    CHECK(run(padded, g).graph == run(direct, g).graph);

    CoreProgram cut = prog(std::string(kBump) + "Main = fail or bump\n");
    OutcomeSet o = outcomes(cut, g);
    REQUIRE(o.graphs.size() == 1);
    CHECK(o.has_fail);
}

TEST_CASE("if probes and discards, try probes and keeps") {
    HostGraph g = one_node(0);

    CoreProgram iff = prog(std::string(kBump) + "Main = if bump then bump\n");
    RunResult ri = run(iff, g);
    CHECK(ri.status == RunStatus::success);
    CHECK(node_value(ri.graph) == 1);
    // the probe application is real work even though its graph is dropped
    CHECK(ri.applications == 2);
    OutcomeSet oi = outcomes(iff, g);
    REQUIRE(oi.graphs.size() == 1);
    CHECK(oi.graphs[0].min_steps == 1);
    CHECK(oi.graphs[0].max_steps == 1);

    CoreProgram tryy = prog(std::string(kBump) + "Main = try bump then bump\n");
    RunResult rt = run(tryy, g);
    CHECK(rt.status == RunStatus::success);
    CHECK(node_value(rt.graph) == 2);
    CHECK(rt.applications == 2);
    OutcomeSet ot = outcomes(tryy, g);
    REQUIRE(ot.graphs.size() == 1);
    CHECK(ot.graphs[0].min_steps == 2);
    CHECK(ot.graphs[0].max_steps == 2);
}

TEST_CASE("failed branches take the else arm") {
    HostGraph g = one_node(0);
    CoreProgram iff =
        prog(std::string(kBump) + "Main = if fail then bump else bump; bump\n");
    // `;` binds weaker, so the else arm is just `bump` and the second
    // bump runs afterwards either way
    RunResult r = run(iff, g);
    CHECK(node_value(r.graph) == 2);

    CoreProgram trf =
        prog(std::string(kBump) + "Main = try fail else bump\n");
    CHECK(node_value(run(trf, g).graph) == 1);

    CoreProgram nested =
        prog(std::string(kBump) + "Main = if (if skip then fail) then bump\n");
    OutcomeSet o = outcomes(nested, g);
    // the inner if fails, so the outer condition fails and nothing happens
    REQUIRE(o.graphs.size() == 1);
    CHECK(o.graphs[0].min_steps == 0);
    CHECK_FALSE(o.has_fail);
    CHECK(node_value(run(nested, g).graph) == 0);
}

TEST_CASE("alternatives cover both branches") {
    CoreProgram p =
        prog(std::string(kBump) + "Main = bump or (bump; bump)\n");
    HostGraph g = one_node(0);

    OutcomeSet o = outcomes(p, g);
    REQUIRE(o.graphs.size() == 2);
    CHECK_FALSE(o.has_fail);
    std::set<std::int64_t> enumerated;
    for (const OutcomeClass& c : o.graphs) {
        enumerated.insert(node_value(c.graph));
        CHECK(c.min_steps == node_value(c.graph));
        CHECK(c.max_steps == node_value(c.graph));
    }
    CHECK(enumerated == std::set<std::int64_t>{1, 2});

    std::set<std::int64_t> seen;
    for (std::uint64_t seed = 0; seed < 16; ++seed) {
        ExecConfig cfg;
        cfg.seed = seed;
        RunResult r = run(p, g, cfg);
        REQUIRE(r.status == RunStatus::success);
        seen.insert(node_value(r.graph));
    }
    CHECK(seen == std::set<std::int64_t>{1, 2});
}

TEST_CASE("loops exit on failure and keep the work done so far") {
    const char* kDel = "rule del(x : list)\n"
                       "  node 1 x\n"
                       "  =>\n"
                       "  interface\n";
    CoreProgram p = prog(std::string(kDel) + "Main = del!\n");
    HostGraph g = parse_host_graph("node a 1\nnode b 2\nnode c 3\n");

    RunResult r = run(p, g);
    CHECK(r.status == RunStatus::success);
    CHECK(r.graph.node_count() == 0);
    CHECK(r.applications == 3);

    OutcomeSet o = outcomes(p, g);
    REQUIRE(o.graphs.size() == 1);
    CHECK(o.graphs[0].graph.node_count() == 0);
    CHECK(o.graphs[0].min_steps == 3);
    CHECK(o.graphs[0].max_steps == 3);
    CHECK_FALSE(o.has_fail);
    CHECK_FALSE(o.has_diverge);
}

TEST_CASE("a failing loop body discards its iteration") {
    CoreProgram p = prog(std::string(kBump) + "Main = (bump; fail)!\n");
    HostGraph g = one_node(0);

    RunResult r = run(p, g);
    CHECK(r.status == RunStatus::success);
    // the half-done iteration was rolled back
    CHECK(node_value(r.graph) == 0);
    // but its application was still paid for
    CHECK(r.applications == 1);

    OutcomeSet o = outcomes(p, g);
    REQUIRE(o.graphs.size() == 1);
    CHECK(node_value(o.graphs[0].graph) == 0);
    CHECK(o.graphs[0].min_steps == 0);
    CHECK(o.graphs[0].max_steps == 0);
}

TEST_CASE("break leaves the loop and keeps the current graph") {
    CoreProgram p = prog(std::string(kBump) + "Main = (bump; break)!\n");
    HostGraph g = one_node(0);

    RunResult r = run(p, g);
    CHECK(r.status == RunStatus::success);
    CHECK(node_value(r.graph) == 1);
    CHECK(r.applications == 1);

    OutcomeSet o = outcomes(p, g);
    REQUIRE(o.graphs.size() == 1);
    CHECK(node_value(o.graphs[0].graph) == 1);
    CHECK(o.graphs[0].min_steps == 1);
    CHECK(o.graphs[0].max_steps == 1);
    CHECK_FALSE(o.has_diverge);
}

TEST_CASE("idle loops are divergence, not termination") {
    HostGraph g = one_node(0);
    for (const char* body : {"skip!", "(skip or skip)!", "(skip!)!"}) {
        CAPTURE(body);
        CoreProgram p = prog(std::string("Main = ") + body + "\n");
        RunResult r = run(p, g);
        CHECK(r.status == RunStatus::diverge);
        OutcomeSet o = outcomes(p, g);
        CHECK(o.has_diverge);
        CHECK(o.graphs.empty());
        CHECK_FALSE(o.has_fail);
    }

    CoreProgram spin = prog(std::string(kId) + "Main = id!\n");
    CHECK(run(spin, g).status == RunStatus::diverge);
    OutcomeSet o = outcomes(spin, g);
    CHECK(o.has_diverge);
    CHECK(o.graphs.empty());
}

TEST_CASE("a cycling loop with an escape is unbounded but productive") {
    const char* text = "rule flip(x : list)\n"
                       "  node 1 x #red\n"
                       "  =>\n"
                       "  node 1 x #blue\n"
                       "  interface 1\n"
                       "rule flop(x : list)\n"
                       "  node 1 x #blue\n"
                       "  =>\n"
                       "  node 1 x #red\n"
                       "  interface 1\n"
                       "rule del(x : list)\n"
                       "  node 1 x #red\n"
                       "  =>\n"
                       "  interface\n"
                       "Main = {flip, flop, del}!\n";
    CoreProgram p = prog(text);
    HostGraph g = parse_host_graph("node a 1 #red\n");

    OutcomeSet o = outcomes(p, g);
    REQUIRE(o.graphs.size() == 1);
    CHECK(o.graphs[0].graph.node_count() == 0);
    CHECK(o.graphs[0].min_steps == 1);
    CHECK(o.graphs[0].unbounded);
    CHECK(o.has_diverge);
    CHECK_FALSE(o.has_fail);

    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        ExecConfig cfg;
        cfg.seed = seed;
        RunResult r = run(p, g, cfg);
        if (r.status == RunStatus::success) {
            CHECK(r.graph.node_count() == 0);
        } else {
            CHECK(r.status == RunStatus::diverge);
        }
    }
}

TEST_CASE("enumeration caps runaway state spaces") {
    CoreProgram p = prog(std::string(kBump) + "Main = bump!\n");
    EnumConfig cfg;
    cfg.branch_cap = 10;
    CHECK_THROWS_AS(outcomes(p, one_node(0), cfg), LimitError);
}

TEST_CASE("fuel must be positive and runs out as divergence") {
    CoreProgram p = prog(std::string(kBump) + "Main = bump!\n");
    ExecConfig cfg;
    cfg.fuel = 0;
    CHECK_THROWS_AS(run(p, one_node(0), cfg), LimitError);

    cfg.fuel = 5;
    RunResult r = run(p, one_node(0), cfg);
    CHECK(r.status == RunStatus::diverge);

    CoreProgram finite = prog(std::string(kBump) + "Main = bump; bump\n");
    cfg.fuel = 2;
    CHECK(run(finite, one_node(0), cfg).status == RunStatus::success);
    cfg.fuel = 1;
    CHECK(run(finite, one_node(0), cfg).status == RunStatus::diverge);
}

TEST_CASE("traces record each application") {
    CoreProgram p = prog(std::string(kBump) + "Main = bump; bump\n");
    ExecConfig cfg;
    cfg.trace = true;
    RunResult r = run(p, one_node(0), cfg);
    REQUIRE(r.trace.size() == 2);
    CHECK(r.trace[0].rule == "bump");
    CHECK(r.trace[0].nodes == std::vector<NodeId>{"a"});
    CHECK(r.trace[0].edges.empty());
    CHECK(r.trace[0].nodes_after == 1);
    CHECK(r.trace[1].edges_after == 0);

    std::string text = format_trace(r);
    CHECK(text.find("step 1: bump") != std::string::npos);
    CHECK(text.find("step 2: bump") != std::string::npos);

    cfg.trace = false;
    CHECK(run(p, one_node(0), cfg).trace.empty());
}

TEST_CASE("every run lands in an enumerated class") {
    struct Pair {
        const char* program;
        const char* input;
    };
    const Pair pairs[] = {
        {"corpus/transclosure/program.gp",
         "corpus/transclosure/inputs/path3.host"},
        {"corpus/transclosure/program.gp",
         "corpus/transclosure/inputs/cycle4.host"},
        {"corpus/colouring/program.gp", "corpus/colouring/inputs/path3.host"},
        {"corpus/colouring/program.gp",
         "corpus/colouring/inputs/two_edges.host"},
        {"corpus/cyclecheck/program.gp",
         "corpus/cyclecheck/inputs/cyclic4.host"},
        {"corpus/cyclecheck/program.gp",
         "corpus/cyclecheck/inputs/acyclic4.host"},
        {"corpus/seriesparallel/program.gp",
         "corpus/seriesparallel/inputs/bridge.host"},
        {"corpus/seriesparallel/program.gp",
         "corpus/seriesparallel/inputs/critpair.host"},
    };
    for (const Pair& pair : pairs) {
        CAPTURE(pair.program);
        CAPTURE(pair.input);
        CoreProgram p = elaborate(load_program(pair.program));
        HostGraph g = load_host_graph(pair.input);
        OutcomeSet o = outcomes(p, g);
        std::set<std::string> keys = class_keys(o);
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            ExecConfig cfg;
            cfg.seed = seed;
            RunResult r = run(p, g, cfg);
            if (r.status == RunStatus::success) {
                CHECK(keys.count(canonical_key(r.graph)) == 1);
            } else if (r.status == RunStatus::fail) {
                CHECK(o.has_fail);
            } else {
                CHECK(o.has_diverge);
            }
        }
    }
}

TEST_CASE("outcome comparison ignores step counts") {
    CoreProgram once = prog(std::string(kBump) + "Main = bump\n");
    CoreProgram twice = prog(std::string(kBump) + "Main = bump; bump\n");
    // same final class reached with different step counts
    OutcomeSet a = outcomes(once, one_node(1));
    OutcomeSet b = outcomes(twice, one_node(0));
    REQUIRE(a.graphs.size() == 1);
    REQUIRE(b.graphs.size() == 1);
    CHECK(a.graphs[0].min_steps != b.graphs[0].min_steps);
    CHECK(same_outcome_sets(a, b));

    OutcomeSet c = outcomes(once, one_node(0));
    CHECK_FALSE(same_outcome_sets(a, c));

    CoreProgram maybe = prog(std::string(kBump) + "Main = bump or fail\n");
    CHECK_FALSE(same_outcome_sets(a, outcomes(maybe, one_node(1))));
}
