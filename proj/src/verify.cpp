#include "gpeng/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>

#include "gpeng/casestudies.hpp"
#include "gpeng/elaborate.hpp"
#include "gpeng/errors.hpp"
#include "gpeng/graph_io.hpp"
#include "gpeng/interp.hpp"
#include "gpeng/iso.hpp"
#include "gpeng/match.hpp"
#include "gpeng/parser.hpp"

namespace gpeng {

namespace {

Label random_label(Rng& rng) {
    Label l;
    switch (rng.below(4)) {
    case 0:
        break;
    case 1:
        l.list.push_back(static_cast<std::int64_t>(rng.below(3)));
        break;
    case 2:
        l.list.push_back(std::string(1, static_cast<char>('a' + rng.below(3))));
        break;
    default:
        l.list.push_back(static_cast<std::int64_t>(rng.below(3)));
        l.list.push_back(static_cast<std::int64_t>(rng.below(3)));
        break;
    }
    return l;
}

/// Runs one check body under a timer. The body returns an empty string or
/// a note starting with "ok:" to pass, anything else to fail; anything it
/// throws fails the check with the message as detail.
struct Suite {
    std::vector<CheckResult> results;

    void add(const std::string& name, double budget,
             const std::function<std::string()>& body) {
        CheckResult r;
        r.name = name;
        r.budget = budget;
        auto start = std::chrono::steady_clock::now();
        try {
            std::string verdict = body();
            if (verdict.substr(0, 3) == "ok:") {
                r.passed = true;
                std::size_t at = verdict.find_first_not_of(' ', 3);
                r.detail = at == std::string::npos ? "" : verdict.substr(at);
            } else {
                r.passed = verdict.empty();
                r.detail = std::move(verdict);
            }
        } catch (const std::exception& e) {
            r.detail = std::string("unexpected error: ") + e.what();
            r.passed = false;
        }
        r.seconds = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - start)
                        .count();
        if (r.passed && r.seconds >= r.budget) {
            r.passed = false;
            r.detail = r.detail.empty()
                           ? "exceeded the time budget"
                           : r.detail + "; exceeded the time budget";
        }
        results.push_back(std::move(r));
    }
};

const Rule& rule_by_name(const ProgramAST& ast, const std::string& name) {
    for (const Rule& r : ast.rules) {
        if (r.name == name) {
            return r;
        }
    }
    throw StaticError(Errc::unknown_rule, "no rule '" + name + "' in program");
}

/// The 3-node digraph whose edge set is given by the low nine bits of
/// `mask`, one bit per ordered node pair.
HostGraph mask_digraph(unsigned mask) {
    static const char* names[3] = {"a", "b", "c"};
    HostGraph g;
    for (int i = 0; i < 3; ++i) {
        g.add_node(names[i], Label{});
    }
    for (int bit = 0; bit < 9; ++bit) {
        if ((mask >> bit) & 1u) {
            g.add_edge("e" + std::to_string(bit), names[bit / 3],
                       names[bit % 3], Label{});
        }
    }
    return g;
}

std::set<std::string> outcome_keys(const OutcomeSet& o) {
    std::set<std::string> keys;
    for (const OutcomeClass& c : o.graphs) {
        keys.insert(c.key);
    }
    return keys;
}

std::string plural(std::size_t n, const std::string& noun) {
    if (n == 1) return "1 " + noun;
    bool es = noun.size() >= 2 && noun.compare(noun.size() - 2, 2, "ss") == 0;
    return std::to_string(n) + " " + noun + (es ? "es" : "s");
}

} // namespace

HostGraph random_digraph(Rng& rng, std::size_t max_nodes, bool allow_loops) {
    std::size_t n = rng.below(max_nodes + 1);
    HostGraph g;
    std::vector<NodeId> ids;
    for (std::size_t i = 0; i < n; ++i) {
        NodeId id = g.fresh_node_id();
        g.add_node(id, random_label(rng));
        ids.push_back(id);
    }
    if (n == 0 || (n == 1 && !allow_loops)) {
        return g;
    }
    std::size_t m = rng.below(n * n + 1);
    for (std::size_t i = 0; i < m; ++i) {
        NodeId src = ids[rng.below(ids.size())];
        NodeId tgt = ids[rng.below(ids.size())];
        while (!allow_loops && tgt == src) {
            tgt = ids[rng.below(ids.size())];
        }
        g.add_edge(g.fresh_edge_id(), src, tgt, random_label(rng));
    }
    return g;
}

std::vector<CheckResult> verify_transclosure(const std::string& corpus_root) {
    Suite suite;
    ProgramAST ast = load_program(corpus_root + "/transclosure/program.gp");
    CoreProgram prog = elaborate(ast);

    suite.add("[1] closure of the 4-cycle: 8 applications, every seed and "
              "every execution",
              1.0, [&]() -> std::string {
        HostGraph cycle4 =
            load_host_graph(corpus_root + "/transclosure/inputs/cycle4.host");
        HostGraph want = oracle_transitive_closure(cycle4);
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            ExecConfig cfg;
            cfg.seed = seed;
            RunResult r = run(prog, cycle4, cfg);
            if (r.status != RunStatus::success) {
                return "seed " + std::to_string(seed) + ": " +
                       run_status_name(r.status);
            }
            if (r.applications != 8) {
                return "seed " + std::to_string(seed) + ": " +
                       std::to_string(r.applications) + " applications";
            }
            if (r.graph.node_count() != 4 || r.graph.edge_count() != 12 ||
                !isomorphic(r.graph, want)) {
                return "seed " + std::to_string(seed) +
                       ": result is not the complete 4-node graph";
            }
        }
        OutcomeSet o = outcomes(prog, cycle4);
        if (o.graphs.size() != 1 || o.has_fail || o.has_diverge) {
            return "enumeration: expected exactly one terminating class";
        }
        const OutcomeClass& c = o.graphs.front();
        if (c.min_steps != 8 || c.max_steps != 8 || c.unbounded) {
            return "enumeration: steps " + std::to_string(c.min_steps) + ".." +
                   std::to_string(c.max_steps);
        }
        if (!isomorphic(c.graph, want)) {
            return "enumeration: class is not the complete 4-node graph";
        }
        return "";
    });

    suite.add("[2] closure application bound on random graphs", 10.0,
              [&]() -> std::string {
        Rng meta(1001);
        for (int i = 0; i < 200; ++i) {
            HostGraph g = random_digraph(meta, 8, true);
            std::int64_t bound = static_cast<std::int64_t>(g.node_count()) *
                                 static_cast<std::int64_t>(g.node_count());
            ExecConfig cfg;
            cfg.seed = static_cast<std::uint64_t>(i);
            RunResult r = run(prog, g, cfg);
            if (r.status != RunStatus::success) {
                return "graph " + std::to_string(i) + ": " +
                       run_status_name(r.status);
            }
            if (r.applications > bound) {
                return "graph " + std::to_string(i) + ": " +
                       std::to_string(r.applications) + " applications on " +
                       plural(g.node_count(), "node");
            }
        }
        return "ok: 200 random graphs within the size-squared bound";
    });

    suite.add("[3] closure matches the reachability oracle", 60.0,
              [&]() -> std::string {
        for (unsigned mask = 0; mask < 512; ++mask) {
            HostGraph g = mask_digraph(mask);
            HostGraph want = oracle_transitive_closure(g);
            ExecConfig cfg;
            cfg.seed = mask;
            RunResult r = run(prog, g, cfg);
            if (r.status != RunStatus::success || !isomorphic(r.graph, want)) {
                return "3-node graph " + std::to_string(mask) +
                       ": run disagrees with the oracle";
            }
            OutcomeSet o = outcomes(prog, g);
            if (o.graphs.size() != 1 || o.has_fail || o.has_diverge ||
                !isomorphic(o.graphs.front().graph, want)) {
                return "3-node graph " + std::to_string(mask) +
                       ": enumeration disagrees with the oracle";
            }
        }
        Rng meta(1003);
        for (int i = 0; i < 100; ++i) {
            HostGraph g = random_digraph(meta, 6, true);
            HostGraph want = oracle_transitive_closure(g);
            ExecConfig cfg;
            cfg.seed = static_cast<std::uint64_t>(1000 + i);
            RunResult r = run(prog, g, cfg);
            if (r.status != RunStatus::success || !isomorphic(r.graph, want)) {
                return "random graph " + std::to_string(i) +
                       ": run disagrees with the oracle";
            }
            if (g.node_count() <= 4) {
                OutcomeSet o = outcomes(prog, g);
                if (o.graphs.size() != 1 ||
                    !isomorphic(o.graphs.front().graph, want)) {
                    return "random graph " + std::to_string(i) +
                           ": enumeration disagrees with the oracle";
                }
            }
        }
        return "ok: 512 exhaustive and 100 random graphs agree";
    });

    return std::move(suite.results);
}

std::vector<CheckResult> verify_colouring(const std::string& corpus_root) {
    Suite suite;
    ProgramAST ast = load_program(corpus_root + "/colouring/program.gp");
    CoreProgram prog = elaborate(ast);
    const Rule& inc = rule_by_name(ast, "inc");

    suite.add("[4] colouring valid with bounded applications", 30.0,
              [&]() -> std::string {
        Rng meta(2002);
        for (int i = 0; i < 200; ++i) {
            HostGraph g = random_digraph(meta, 8, false);
            std::int64_t n = static_cast<std::int64_t>(g.node_count());
            std::int64_t inc_bound = n * (n + 1) / 2 - n;
            for (std::uint64_t seed :
                 {static_cast<std::uint64_t>(i),
                  static_cast<std::uint64_t>(7919 * i + 13)}) {
                ExecConfig cfg;
                cfg.seed = seed;
                cfg.trace = true;
                RunResult r = run(prog, g, cfg);
                if (r.status != RunStatus::success) {
                    return "graph " + std::to_string(i) + ": " +
                           run_status_name(r.status);
                }
                std::int64_t inc_apps = 0;
                for (const TraceEntry& e : r.trace) {
                    if (e.rule == "inc") {
                        ++inc_apps;
                    }
                }
                if (inc_apps > inc_bound) {
                    return "graph " + std::to_string(i) + ": " +
                           std::to_string(inc_apps) + " colour bumps on " +
                           plural(g.node_count(), "node");
                }
                if (r.applications > 2 * n + inc_bound) {
                    return "graph " + std::to_string(i) + ": " +
                           std::to_string(r.applications) +
                           " total applications";
                }
                if (!check_colouring(g, r.graph)) {
                    return "graph " + std::to_string(i) +
                           ": result is not a colouring of the input";
                }
                std::set<std::int64_t> colours = colours_set(r.graph);
                std::int64_t top = colours.empty() ? 0 : *colours.rbegin();
                if (top > n ||
                    colours.size() != static_cast<std::size_t>(top) ||
                    (!colours.empty() && *colours.begin() != 1)) {
                    return "graph " + std::to_string(i) +
                           ": colours are not 1..n";
                }
                if (!find_matches(inc, r.graph).empty()) {
                    return "graph " + std::to_string(i) +
                           ": a colour bump is still applicable";
                }
            }
        }
        return "ok: 200 random graphs, two seeds each";
    });

    suite.add("[5] colouring admits multiple outcomes", 10.0,
              [&]() -> std::string {
        HostGraph path3 =
            load_host_graph(corpus_root + "/colouring/inputs/path3.host");
        OutcomeSet o = outcomes(prog, path3);
        if (o.has_fail || o.has_diverge) {
            return "enumeration reports failure or divergence";
        }
        for (const OutcomeClass& c : o.graphs) {
            if (!check_colouring(path3, c.graph)) {
                return "an enumerated class is not a valid colouring";
            }
        }
        if (o.graphs.size() < 2) {
            return "only " + plural(o.graphs.size(), "class");
        }
        return "ok: " + plural(o.graphs.size(), "distinct colouring class");
    });

    return std::move(suite.results);
}

std::vector<CheckResult> verify_cyclecheck(const std::string& corpus_root) {
    Suite suite;
    CoreProgram check =
        elaborate(load_program(corpus_root + "/cyclecheck/program.gp"));
    CoreProgram p_marker =
        elaborate(load_program(corpus_root + "/cyclecheck/p_marker.gp"));
    CoreProgram q_marker =
        elaborate(load_program(corpus_root + "/cyclecheck/q_marker.gp"));

    suite.add("[6] cycle check agrees with the search oracle", 60.0,
              [&]() -> std::string {
        {
            HostGraph probe = mask_digraph(1);
            if (same_outcome_sets(outcomes(p_marker, probe),
                                  outcomes(q_marker, probe))) {
                return "the two marker programs are indistinguishable";
            }
        }
        auto agree = [&](const HostGraph& g) {
            OutcomeSet got = outcomes(check, g);
            OutcomeSet want =
                outcomes(oracle_is_cyclic(g) ? p_marker : q_marker, g);
            return same_outcome_sets(got, want);
        };
        for (unsigned mask = 0; mask < 512; ++mask) {
            if (!agree(mask_digraph(mask))) {
                return "3-node graph " + std::to_string(mask) +
                       ": wrong branch";
            }
        }
        Rng meta(1006);
        for (int i = 0; i < 100; ++i) {
            if (!agree(random_digraph(meta, 6, true))) {
                return "random graph " + std::to_string(i) + ": wrong branch";
            }
        }
        return "ok: 512 exhaustive and 100 random graphs agree";
    });

    return std::move(suite.results);
}

std::vector<CheckResult> verify_seriesparallel(const std::string& corpus_root) {
    Suite suite;
    ProgramAST ast = load_program(corpus_root + "/seriesparallel/program.gp");
    CoreProgram prog = elaborate(ast);
    std::vector<Rule> reduce = {rule_by_name(ast, "series"),
                                rule_by_name(ast, "parallel")};

    suite.add("[7] series-parallel recognition", 60.0, [&]() -> std::string {
        for (std::uint64_t seed = 1; seed <= 100; ++seed) {
            auto [term, g] = gen_series_parallel(seed, 12);
            OutcomeSet o = outcomes(prog, g);
            if (o.has_fail || o.has_diverge || o.graphs.size() != 1 ||
                o.graphs.front().graph.node_count() != 0) {
                return "generated graph " + std::to_string(seed) +
                       ": some execution does not reach the empty graph";
            }
            ExecConfig cfg;
            cfg.seed = seed;
            RunResult r = run(prog, g, cfg);
            if (r.status != RunStatus::success || r.graph.node_count() != 0) {
                return "generated graph " + std::to_string(seed) +
                       ": seeded run does not reach the empty graph";
            }
        }
        HostGraph bridge =
            load_host_graph(corpus_root + "/seriesparallel/inputs/bridge.host");
        OutcomeSet ob = outcomes(prog, bridge);
        if (!ob.has_fail || !ob.graphs.empty() || ob.has_diverge) {
            return "bridge graph: some execution does not fail";
        }
        for (std::uint64_t seed = 201; seed <= 220; ++seed) {
            auto [term, g] = gen_series_parallel(seed, 10);
            g.add_node(g.fresh_node_id(), Label{});
            OutcomeSet o = outcomes(prog, g);
            if (!o.has_fail || !o.graphs.empty() || o.has_diverge) {
                return "isolated-node mutant " + std::to_string(seed) +
                       ": some execution does not fail";
            }
        }
        return "ok: 100 positives, the bridge, and 20 mutants";
    });

    suite.add("[8] reduction confluence", 30.0, [&]() -> std::string {
        for (std::uint64_t seed = 301; seed <= 340; ++seed) {
            auto [term, g] = gen_series_parallel(seed, 8);
            if (normal_forms(reduce, g, 20000).size() != 1) {
                return "generated graph " + std::to_string(seed) +
                       ": more than one normal form";
            }
        }
        for (std::uint64_t seed = 401; seed <= 410; ++seed) {
            auto [term, g] = gen_series_parallel(seed, 7);
            g.add_node(g.fresh_node_id(), Label{});
            if (normal_forms(reduce, g, 20000).size() != 1) {
                return "mutant " + std::to_string(seed) +
                       ": more than one normal form";
            }
        }
        HostGraph bridge =
            load_host_graph(corpus_root + "/seriesparallel/inputs/bridge.host");
        auto nb = normal_forms(reduce, bridge, 20000);
        if (nb.size() != 1) {
            return "bridge graph: more than one normal form";
        }
        if (nb.begin()->second.node_count() == 2) {
            return "bridge graph reduced to a single edge";
        }
        HostGraph critpair = load_host_graph(
            corpus_root + "/seriesparallel/inputs/critpair.host");
        auto nc = normal_forms(reduce, critpair, 20000);
        if (nc.size() != 1) {
            return "overlapping chain: the two contractions do not rejoin";
        }
        const HostGraph& joined = nc.begin()->second;
        if (joined.node_count() != 2 || joined.edge_count() != 1) {
            return "overlapping chain: normal form is not a single edge";
        }
        Value want = {std::string("a"), std::string("b"), std::string("c")};
        if (joined.edges().begin()->second.label.list != want) {
            return "overlapping chain: wrong edge label";
        }
        return "ok: 50 generated graphs, the bridge, and the overlap join";
    });

    return std::move(suite.results);
}

std::vector<CheckResult> verify_laws(const std::string& corpus_root) {
    Suite suite;

    suite.add("[9] command laws on the corpus", 10.0, [&]() -> std::string {
        ProgramAST tc = load_program(corpus_root + "/transclosure/program.gp");
        HostGraph cycle4 =
            load_host_graph(corpus_root + "/transclosure/inputs/cycle4.host");
        HostGraph path3 =
            load_host_graph(corpus_root + "/transclosure/inputs/path3.host");

        auto with_main = [&](Command main) {
            ProgramAST copy = tc;
            copy.main = std::move(main);
            return elaborate(copy);
        };
        auto union_holds = [&](Command left, Command right,
                               const HostGraph& g) {
            OutcomeSet both = outcomes(
                with_main(Command::alt(left, right)), g);
            OutcomeSet a = outcomes(with_main(std::move(left)), g);
            OutcomeSet b = outcomes(with_main(std::move(right)), g);
            std::set<std::string> u = outcome_keys(a);
            for (const std::string& k : outcome_keys(b)) {
                u.insert(k);
            }
            return outcome_keys(both) == u &&
                   both.has_fail == (a.has_fail || b.has_fail) &&
                   both.has_diverge == (a.has_diverge || b.has_diverge);
        };

        for (const HostGraph* g : {&cycle4, &path3}) {
            if (!union_holds(Command::call("link"), Command::skip(), *g)) {
                return "choice of a rule and skip is not the union";
            }
            if (!union_holds(Command::call("link"), Command::fail(), *g)) {
                return "choice of a rule and fail is not the union";
            }
            if (!union_holds(Command::loop(Command::call("link")),
                             Command::call("link"), *g)) {
                return "choice of a loop and a rule is not the union";
            }
            OutcomeSet seq = outcomes(
                with_main(Command::seq({Command::skip(), Command::call("link")})),
                *g);
            OutcomeSet bare = outcomes(with_main(Command::call("link")), *g);
            if (!same_outcome_sets(seq, bare)) {
                return "a leading skip changes the outcome set";
            }
            OutcomeSet failloop =
                outcomes(with_main(Command::loop(Command::fail())), *g);
            if (failloop.graphs.size() != 1 || failloop.has_fail ||
                failloop.has_diverge ||
                failloop.graphs.front().min_steps != 0 ||
                failloop.graphs.front().max_steps != 0 ||
                !isomorphic(failloop.graphs.front().graph, *g)) {
                return "a looped fail does not return the input unchanged";
            }
        }

        const Rule& link = rule_by_name(tc, "link");
        CoreProgram tcprog = elaborate(tc);
        for (const char* input : {"cycle4", "path3", "triangle", "loop1"}) {
            HostGraph g = load_host_graph(corpus_root +
                                          "/transclosure/inputs/" + input +
                                          ".host");
            for (std::uint64_t seed = 0; seed < 3; ++seed) {
                ExecConfig cfg;
                cfg.seed = seed;
                RunResult r = run(tcprog, g, cfg);
                if (r.status != RunStatus::success ||
                    !find_matches(link, r.graph).empty()) {
                    return std::string(input) +
                           ": the loop exited while its rule still applies";
                }
            }
        }
        ProgramAST col = load_program(corpus_root + "/colouring/program.gp");
        const Rule& inc = rule_by_name(col, "inc");
        CoreProgram colprog = elaborate(col);
        for (const char* input : {"path3", "triangle", "two_edges", "single"}) {
            HostGraph g = load_host_graph(corpus_root + "/colouring/inputs/" +
                                          input + ".host");
            for (std::uint64_t seed = 0; seed < 3; ++seed) {
                ExecConfig cfg;
                cfg.seed = seed;
                RunResult r = run(colprog, g, cfg);
                if (r.status != RunStatus::success ||
                    !find_matches(inc, r.graph).empty()) {
                    return std::string(input) +
                           ": the loop exited while its rule still applies";
                }
            }
        }
        return "";
    });

    return std::move(suite.results);
}

std::vector<CheckResult> verify_all(const std::string& corpus_root) {
    std::vector<CheckResult> all;
    for (auto* fn : {verify_transclosure, verify_colouring, verify_cyclecheck,
                     verify_seriesparallel, verify_laws}) {
        std::vector<CheckResult> part = fn(corpus_root);
        for (CheckResult& r : part) {
            all.push_back(std::move(r));
        }
    }
    return all;
}

std::vector<CheckResult> verify_case(const std::string& name,
                                     const std::string& corpus_root) {
    if (name == "transclosure") {
        return verify_transclosure(corpus_root);
    }
    if (name == "colouring") {
        return verify_colouring(corpus_root);
    }
    if (name == "cyclecheck") {
        return verify_cyclecheck(corpus_root);
    }
    if (name == "seriesparallel") {
        return verify_seriesparallel(corpus_root);
    }
    if (name == "laws") {
        return verify_laws(corpus_root);
    }
    if (name == "all") {
        return verify_all(corpus_root);
    }
    throw Error(Errc::io_error, "unknown case '" + name + "'");
}

std::string format_check(const CheckResult& r) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2fs", r.seconds);
    std::string line = r.passed ? "PASS " : "FAIL ";
    line += r.name + " (" + buf + ")";
    if (!r.detail.empty()) {
        line += ": " + r.detail;
    }
    return line;
}

} // namespace gpeng
