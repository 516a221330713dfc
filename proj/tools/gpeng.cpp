#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "gpeng/dot.hpp"
#include "gpeng/elaborate.hpp"
#include "gpeng/errors.hpp"
#include "gpeng/graph_io.hpp"
#include "gpeng/interp.hpp"
#include "gpeng/parser.hpp"
#include "gpeng/verify.hpp"

namespace {

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text) || !out.flush()) {
        throw gpeng::Error(gpeng::Errc::io_error,
                           "cannot write '" + path + "'");
    }
}

int status_code(gpeng::RunStatus s) {
    switch (s) {
    case gpeng::RunStatus::success:
        return 0;
    case gpeng::RunStatus::fail:
        return 1;
    case gpeng::RunStatus::diverge:
        return 3;
    }
    return 4;
}

std::string counts_line(const char* head, std::int64_t min, std::int64_t max,
                        bool unbounded) {
    std::string line = std::string(head) + " min " + std::to_string(min) +
                       " max " + std::to_string(max);
    if (unbounded) {
        line += " unbounded";
    }
    return line;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph transformation engine"};
    app.require_subcommand(1);

    std::string program_path;
    std::string graph_path;
    std::string dot_path;
    std::string out_path;
    std::string case_name;
    std::string corpus_root = "corpus";
    std::uint64_t seed = 0;
    std::int64_t fuel = 10000;
    std::size_t branch_cap = 100000;
    bool json_trace = false;

    CLI::App* run_cmd = app.add_subcommand(
        "run", "execute a program on a graph and print the result");
    run_cmd->add_option("program", program_path, "program file")->required();
    run_cmd->add_option("graph", graph_path, "host graph file")->required();
    run_cmd->add_option("--seed", seed, "choice seed");
    run_cmd->add_option("--fuel", fuel, "rule application budget");
    run_cmd->add_option("--dot", dot_path, "also write the result graph as DOT");

    CLI::App* outcomes_cmd = app.add_subcommand(
        "outcomes", "enumerate every outcome class of a program on a graph");
    outcomes_cmd->add_option("program", program_path, "program file")
        ->required();
    outcomes_cmd->add_option("graph", graph_path, "host graph file")
        ->required();
    outcomes_cmd->add_option("--branch-cap", branch_cap,
                             "loop state budget per loop");

    CLI::App* trace_cmd = app.add_subcommand(
        "trace", "print the step log of one execution");
    trace_cmd->add_option("program", program_path, "program file")->required();
    trace_cmd->add_option("graph", graph_path, "host graph file")->required();
    trace_cmd->add_option("--seed", seed, "choice seed");
    trace_cmd->add_option("--fuel", fuel, "rule application budget");
    trace_cmd->add_flag("--json-trace", json_trace,
                        "structured output instead of step lines");

    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "run an acceptance suite: transclosure, colouring, "
                  "cyclecheck, seriesparallel, laws, or all");
    verify_cmd->add_option("case", case_name, "suite name")->required();
    verify_cmd->add_option("--corpus", corpus_root, "corpus directory");

    CLI::App* dot_cmd =
        app.add_subcommand("export-dot", "render a graph file as DOT");
    dot_cmd->add_option("graph", graph_path, "host graph file")->required();
    dot_cmd->add_option("--out", out_path, "output path (stdout if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*run_cmd) {
            gpeng::CoreProgram prog =
                gpeng::elaborate(gpeng::load_program(program_path));
            gpeng::HostGraph g = gpeng::load_host_graph(graph_path);
            gpeng::ExecConfig cfg;
            cfg.seed = seed;
            cfg.fuel = fuel;
            gpeng::RunResult r = gpeng::run(prog, g, cfg);
            if (r.status == gpeng::RunStatus::fail) {
                std::cout << "FAIL\n";
            } else if (r.status == gpeng::RunStatus::diverge) {
                std::cout << "DIVERGE\n";
            } else {
                std::cout << gpeng::print_host_graph(r.graph);
                if (!dot_path.empty()) {
                    write_file(dot_path, gpeng::to_dot(r.graph));
                }
            }
            return status_code(r.status);
        }
        if (*outcomes_cmd) {
            gpeng::CoreProgram prog =
                gpeng::elaborate(gpeng::load_program(program_path));
            gpeng::HostGraph g = gpeng::load_host_graph(graph_path);
            gpeng::EnumConfig cfg;
            cfg.branch_cap = branch_cap;
            gpeng::OutcomeSet o = gpeng::outcomes(prog, g, cfg);
            std::cout << "classes " << o.graphs.size() << "\n";
            for (const gpeng::OutcomeClass& c : o.graphs) {
                std::cout << counts_line("class", c.min_steps, c.max_steps,
                                         c.unbounded)
                          << "\n"
                          << gpeng::print_host_graph(c.graph);
            }
            if (o.has_fail) {
                std::cout << counts_line("fail", o.fail_min, o.fail_max,
                                         o.fail_unbounded)
                          << "\n";
            }
            if (o.has_diverge) {
                std::cout << "diverge\n";
            }
            return 0;
        }
        if (*trace_cmd) {
            gpeng::CoreProgram prog =
                gpeng::elaborate(gpeng::load_program(program_path));
            gpeng::HostGraph g = gpeng::load_host_graph(graph_path);
            gpeng::ExecConfig cfg;
            cfg.seed = seed;
            cfg.fuel = fuel;
            cfg.trace = true;
            gpeng::RunResult r = gpeng::run(prog, g, cfg);
            if (json_trace) {
                nlohmann::json steps = nlohmann::json::array();
                for (const gpeng::TraceEntry& e : r.trace) {
                    steps.push_back({{"rule", e.rule},
                                     {"nodes", e.nodes},
                                     {"edges", e.edges},
                                     {"nodes_after", e.nodes_after},
                                     {"edges_after", e.edges_after}});
                }
                nlohmann::json doc = {
                    {"status", gpeng::run_status_name(r.status)},
                    {"applications", r.applications},
                    {"steps", std::move(steps)}};
                std::cout << doc.dump(2) << "\n";
            } else {
                std::cout << gpeng::format_trace(r);
                std::cout << "-- " << gpeng::run_status_name(r.status) << ", "
                          << r.applications << " applications\n";
            }
            return status_code(r.status);
        }
        if (*verify_cmd) {
            std::vector<gpeng::CheckResult> results =
                gpeng::verify_case(case_name, corpus_root);
            std::size_t passed = 0;
            for (const gpeng::CheckResult& r : results) {
                std::cout << gpeng::format_check(r) << "\n";
                if (r.passed) {
                    ++passed;
                }
            }
            std::cout << "passed " << passed << " of " << results.size()
                      << "\n";
            return passed == results.size() ? 0 : 1;
        }
        if (*dot_cmd) {
            gpeng::HostGraph g = gpeng::load_host_graph(graph_path);
            std::string text = gpeng::to_dot(g);
            if (out_path.empty()) {
                std::cout << text;
            } else {
                write_file(out_path, text);
            }
            return 0;
        }
    } catch (const gpeng::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const gpeng::StaticError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const gpeng::PatternError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const gpeng::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == gpeng::Errc::io_error ? 2 : 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 2;
}
