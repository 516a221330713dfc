#include "gpeng/interp.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <tuple>
#include <utility>

#include "gpeng/errors.hpp"
#include "gpeng/match.hpp"
#include "gpeng/rng.hpp"

namespace gpeng {

namespace {

struct FuelExhausted {};

enum class StepSig { ok, fail, brk };

class Runner {
public:
    explicit Runner(const ExecConfig& cfg)
        : rng_(cfg.seed), fuel_(cfg.fuel), trace_on_(cfg.trace) {}

    StepSig exec(const CoreNode& n, HostGraph& g) {
        switch (n.kind) {
        case CoreNode::Kind::rule_set:
            return apply_rule_set(n, g);
        case CoreNode::Kind::seq:
            for (const auto& k : n.kids) {
                StepSig s = exec(*k, g);
                if (s != StepSig::ok) {
                    return s;
                }
            }
            return StepSig::ok;
        case CoreNode::Kind::if_stmt: {
            HostGraph probe = g;
            StepSig c = exec(*n.kids[0], probe);
            return exec(c == StepSig::ok ? *n.kids[1] : *n.kids[2], g);
        }
        case CoreNode::Kind::try_stmt: {
            HostGraph probe = g;
            StepSig c = exec(*n.kids[0], probe);
            if (c == StepSig::ok) {
                g = std::move(probe);
                return exec(*n.kids[1], g);
            }
            return exec(*n.kids[2], g);
        }
        case CoreNode::Kind::alt:
            return exec(*n.kids[rng_.below(2)], g);
        case CoreNode::Kind::loop:
            for (;;) {
                HostGraph entered = g;
                std::int64_t before = ticks_;
                StepSig s = exec(*n.kids[0], g);
                if (s == StepSig::fail) {
                    g = std::move(entered);
                    return StepSig::ok;
                }
                if (s == StepSig::brk) {
                    return StepSig::ok;
                }
                if (ticks_ == before) {
                    consume_fuel(); // idle iteration, still has to run down
                }
            }
        case CoreNode::Kind::brk:
            return StepSig::brk;
        case CoreNode::Kind::skip:
            return StepSig::ok;
        case CoreNode::Kind::fail:
            return StepSig::fail;
        }
        return StepSig::fail;
    }

    std::int64_t applications() const { return applications_; }
    std::vector<TraceEntry> take_trace() { return std::move(trace_); }

private:
    void consume_fuel() {
        if (ticks_ >= fuel_) {
            throw FuelExhausted{};
        }
        ++ticks_;
    }

    StepSig apply_rule_set(const CoreNode& n, HostGraph& g) {
        std::vector<std::pair<const Rule*, Match>> options;
        for (const Rule& r : n.rules) {
            for (Match& m : find_matches(r, g)) {
                options.emplace_back(&r, std::move(m));
            }
        }
        if (options.empty()) {
            return StepSig::fail;
        }
        const auto& pick = options[rng_.below(options.size())];
        consume_fuel();
        ++applications_;
        g = apply_match(*pick.first, pick.second, g);
        if (trace_on_) {
            record(*pick.first, pick.second, g);
        }
        return StepSig::ok;
    }

    void record(const Rule& rule, const Match& m, const HostGraph& g) {
        TraceEntry e;
        e.rule = rule.name;
        for (const RuleNode& rn : rule.left.nodes) {
            e.nodes.push_back(m.nodes.at(rn.id));
        }
        for (const RuleEdge& re : rule.left.edges) {
            e.edges.push_back(m.edges.at(re.id));
        }
        e.nodes_after = g.node_count();
        e.edges_after = g.edge_count();
        trace_.push_back(std::move(e));
    }

    Rng rng_;
    std::int64_t fuel_;
    std::int64_t ticks_ = 0;
    std::int64_t applications_ = 0;
    bool trace_on_;
    std::vector<TraceEntry> trace_;
};

std::string join_ids(const std::vector<std::string>& ids) {
    std::string out;
    for (const std::string& id : ids) {
        if (!out.empty()) {
            out += ", ";
        }
        out += id;
    }
    return out;
}

} // namespace

const char* run_status_name(RunStatus s) {
    switch (s) {
    case RunStatus::success:
        return "success";
    case RunStatus::fail:
        return "fail";
    case RunStatus::diverge:
        return "diverge";
    }
    return "?";
}

RunResult run(const CoreProgram& p, const HostGraph& g, const ExecConfig& cfg) {
    if (cfg.fuel <= 0) {
        throw LimitError(Errc::size_limit, "fuel must be positive");
    }
    Runner runner(cfg);
    RunResult result;
    HostGraph work = g;
    try {
        StepSig s = runner.exec(*p.main, work);
        if (s == StepSig::fail) {
            result.status = RunStatus::fail;
        } else {
            result.status = RunStatus::success;
            result.graph = std::move(work);
        }
    } catch (const FuelExhausted&) {
        result.status = RunStatus::diverge;
    }
    result.applications = runner.applications();
    result.trace = runner.take_trace();
    return result;
}

std::string format_trace(const RunResult& result) {
    std::string out;
    std::size_t n = 0;
    for (const TraceEntry& e : result.trace) {
        ++n;
        out += "step " + std::to_string(n) + ": " + e.rule;
        out += " @ nodes[" + join_ids(e.nodes) + "]";
        out += " edges[" + join_ids(e.edges) + "]";
        out += " -> " + std::to_string(e.nodes_after) + "," +
               std::to_string(e.edges_after) + "\n";
    }
    return out;
}

namespace {

struct Counts {
    std::int64_t min = 0;
    std::int64_t max = 0;
    bool unbounded = false;
};

Counts add(const Counts& a, const Counts& b) {
    return Counts{a.min + b.min, a.max + b.max, a.unbounded || b.unbounded};
}

void merge(Counts& into, const Counts& c) {
    into.min = std::min(into.min, c.min);
    into.max = std::max(into.max, c.max);
    into.unbounded = into.unbounded || c.unbounded;
}

struct EnumOutcome {
    HostGraph rep;
    Counts counts;
};

/// All outcomes of one command on one graph: result classes by canonical
/// key, pending breaks the enclosing loop will catch, failure, and
/// whether some execution never terminates.
struct EnumResult {
    std::map<std::string, EnumOutcome> success;
    std::map<std::string, EnumOutcome> brk;
    bool has_fail = false;
    Counts fail;
    bool diverge = false;
};

void put(std::map<std::string, EnumOutcome>& into, const std::string& key,
         const HostGraph& rep, const Counts& c) {
    auto it = into.find(key);
    if (it == into.end()) {
        into.emplace(key, EnumOutcome{rep, c});
    } else {
        merge(it->second.counts, c);
    }
}

void put_fail(EnumResult& r, const Counts& c) {
    if (!r.has_fail) {
        r.has_fail = true;
        r.fail = c;
    } else {
        merge(r.fail, c);
    }
}

class Enumerator {
public:
    explicit Enumerator(const EnumConfig& cfg) : cfg_(cfg) {}

    EnumResult eval(const CoreNode& n, const HostGraph& g) {
        return eval_at(n, 0, g);
    }

private:
    using MemoKey = std::tuple<int, std::size_t, std::string>;

    std::string cert(const HostGraph& g) { return canonical_key(g, cfg_.canon); }

    /// Adds every outcome of `sub` to `into` with `base` steps prepended.
    void absorb(EnumResult& into, const EnumResult& sub, const Counts& base) {
        into.diverge = into.diverge || sub.diverge;
        if (sub.has_fail) {
            put_fail(into, add(base, sub.fail));
        }
        for (const auto& [k, o] : sub.success) {
            put(into.success, k, o.rep, add(base, o.counts));
        }
        for (const auto& [k, o] : sub.brk) {
            put(into.brk, k, o.rep, add(base, o.counts));
        }
    }

    EnumResult eval_at(const CoreNode& n, std::size_t idx, const HostGraph& g) {
        std::string gkey = cert(g);
        MemoKey key{n.id, idx, gkey};
        auto hit = memo_.find(key);
        if (hit != memo_.end()) {
            return hit->second;
        }
        EnumResult r = compute(n, idx, g, gkey);
        memo_.emplace(std::move(key), r);
        return r;
    }

    EnumResult compute(const CoreNode& n, std::size_t idx, const HostGraph& g,
                       const std::string& gkey) {
        switch (n.kind) {
        case CoreNode::Kind::rule_set: {
            EnumResult r;
            bool any = false;
            for (const Rule& rule : n.rules) {
                for (const Match& m : find_matches(rule, g)) {
                    any = true;
                    HostGraph h = apply_match(rule, m, g);
                    put(r.success, cert(h), h, Counts{1, 1, false});
                }
            }
            if (!any) {
                put_fail(r, Counts{});
            }
            return r;
        }
        case CoreNode::Kind::seq: {
            if (idx == n.kids.size()) {
                EnumResult r;
                put(r.success, gkey, g, Counts{});
                return r;
            }
            EnumResult first = eval_at(*n.kids[idx], 0, g);
            EnumResult r;
            r.diverge = first.diverge;
            if (first.has_fail) {
                put_fail(r, first.fail);
            }
            for (const auto& [k, o] : first.brk) {
                put(r.brk, k, o.rep, o.counts);
            }
            for (const auto& [k, o] : first.success) {
                absorb(r, eval_at(n, idx + 1, o.rep), o.counts);
            }
            return r;
        }
        case CoreNode::Kind::if_stmt: {
            EnumResult c = eval_at(*n.kids[0], 0, g);
            EnumResult r;
            r.diverge = c.diverge;
            if (!c.success.empty()) {
                absorb(r, eval_at(*n.kids[1], 0, g), Counts{});
            }
            if (c.has_fail) {
                absorb(r, eval_at(*n.kids[2], 0, g), Counts{});
            }
            return r;
        }
        case CoreNode::Kind::try_stmt: {
            EnumResult c = eval_at(*n.kids[0], 0, g);
            EnumResult r;
            r.diverge = c.diverge;
            for (const auto& [k, o] : c.success) {
                absorb(r, eval_at(*n.kids[1], 0, o.rep), o.counts);
            }
            if (c.has_fail) {
                absorb(r, eval_at(*n.kids[2], 0, g), Counts{});
            }
            return r;
        }
        case CoreNode::Kind::alt: {
            EnumResult r = eval_at(*n.kids[0], 0, g);
            absorb(r, eval_at(*n.kids[1], 0, g), Counts{});
            return r;
        }
        case CoreNode::Kind::loop:
            return eval_loop(n, g, gkey);
        case CoreNode::Kind::brk: {
            EnumResult r;
            put(r.brk, gkey, g, Counts{});
            return r;
        }
        case CoreNode::Kind::skip: {
            EnumResult r;
            put(r.success, gkey, g, Counts{});
            return r;
        }
        case CoreNode::Kind::fail: {
            EnumResult r;
            put_fail(r, Counts{});
            return r;
        }
        }
        throw StaticError(Errc::unknown_rule, "corrupt command tree");
    }

    /// A loop is an automaton over graph classes: body success is a
    /// transition, body failure exits with the entry graph of that
    /// iteration, break exits with its own graph. Executions of the loop
    /// are walks ending in an exit; a reachable cycle means walks of any
    /// length exist, so the loop can diverge and every exit at or beyond
    /// the cycle has no application-count upper bound.
    EnumResult eval_loop(const CoreNode& n, const HostGraph& g0,
                         const std::string& g0key) {
        const CoreNode& body = *n.kids[0];

        struct Exit {
            std::string key;
            HostGraph rep;
            Counts extra;
        };

        std::map<std::string, std::size_t> index;
        std::vector<std::string> certs;
        std::vector<HostGraph> reps;
        std::vector<std::vector<std::pair<std::size_t, Counts>>> edges;
        std::vector<std::vector<Exit>> exits;
        std::vector<std::size_t> worklist;
        bool saw_diverge = false;

        auto intern = [&](const std::string& key,
                          const HostGraph& rep) -> std::size_t {
            auto it = index.find(key);
            if (it != index.end()) {
                return it->second;
            }
            if (reps.size() >= cfg_.branch_cap) {
                throw LimitError(Errc::state_space_limit,
                                 "loop state space exceeds the branch cap");
            }
            std::size_t id = reps.size();
            index.emplace(key, id);
            certs.push_back(key);
            reps.push_back(rep);
            edges.emplace_back();
            exits.emplace_back();
            worklist.push_back(id);
            return id;
        };

        intern(g0key, g0);
        for (std::size_t qi = 0; qi < worklist.size(); ++qi) {
            std::size_t s = worklist[qi];
            EnumResult b = eval_at(body, 0, reps[s]);
            if (b.diverge) {
                saw_diverge = true;
            }
            if (b.has_fail) {
                exits[s].push_back(Exit{certs[s], reps[s], Counts{}});
            }
            for (const auto& [k, o] : b.brk) {
                exits[s].push_back(Exit{k, o.rep, o.counts});
            }
            for (const auto& [k, o] : b.success) {
                std::size_t t = intern(k, o.rep);
                edges[s].emplace_back(t, o.counts);
            }
        }

        std::size_t count = reps.size();
        std::vector<std::size_t> indeg(count, 0);
        for (std::size_t s = 0; s < count; ++s) {
            for (const auto& [t, c] : edges[s]) {
                ++indeg[t];
            }
        }
        std::vector<std::size_t> topo;
        std::vector<char> acyclic(count, 0);
        std::deque<std::size_t> q;
        for (std::size_t s = 0; s < count; ++s) {
            if (indeg[s] == 0) {
                q.push_back(s);
            }
        }
        while (!q.empty()) {
            std::size_t s = q.front();
            q.pop_front();
            acyclic[s] = 1;
            topo.push_back(s);
            for (const auto& [t, c] : edges[s]) {
                if (--indeg[t] == 0) {
                    q.push_back(t);
                }
            }
        }
        bool cyclic = topo.size() < count;

        std::vector<std::int64_t> min_to(
            count, std::numeric_limits<std::int64_t>::max());
        min_to[0] = 0;
        std::deque<std::size_t> relax{0};
        std::vector<char> queued(count, 0);
        queued[0] = 1;
        while (!relax.empty()) {
            std::size_t s = relax.front();
            relax.pop_front();
            queued[s] = 0;
            for (const auto& [t, c] : edges[s]) {
                if (min_to[s] + c.min < min_to[t]) {
                    min_to[t] = min_to[s] + c.min;
                    if (!queued[t]) {
                        queued[t] = 1;
                        relax.push_back(t);
                    }
                }
            }
        }

        std::vector<std::int64_t> max_to(count, 0);
        std::vector<char> unb_to(count, 0);
        for (std::size_t s : topo) {
            for (const auto& [t, c] : edges[s]) {
                if (!acyclic[t]) {
                    continue;
                }
                max_to[t] = std::max(max_to[t], max_to[s] + c.max);
                unb_to[t] = unb_to[t] || unb_to[s] || c.unbounded;
            }
        }

        EnumResult r;
        r.diverge = saw_diverge || cyclic;
        for (std::size_t s = 0; s < count; ++s) {
            Counts base;
            if (acyclic[s]) {
                base = Counts{min_to[s], max_to[s], unb_to[s] != 0};
            } else {
                base = Counts{min_to[s], min_to[s], true};
            }
            for (const Exit& e : exits[s]) {
                put(r.success, e.key, e.rep, add(base, e.extra));
            }
        }
        return r;
    }

    const EnumConfig cfg_;
    std::map<MemoKey, EnumResult> memo_;
};

} // namespace

OutcomeSet outcomes(const CoreProgram& p, const HostGraph& g,
                    const EnumConfig& cfg) {
    Enumerator en(cfg);
    EnumResult r = en.eval(*p.main, g);
    if (!r.brk.empty()) {
        throw StaticError(Errc::break_outside_loop, "break escaped the program");
    }
    OutcomeSet out;
    for (auto& [k, o] : r.success) {
        out.graphs.push_back(OutcomeClass{k, std::move(o.rep), o.counts.min,
                                          o.counts.max, o.counts.unbounded});
    }
    out.has_fail = r.has_fail;
    if (r.has_fail) {
        out.fail_min = r.fail.min;
        out.fail_max = r.fail.max;
        out.fail_unbounded = r.fail.unbounded;
    }
    out.has_diverge = r.diverge;
    return out;
}

bool same_outcome_sets(const OutcomeSet& a, const OutcomeSet& b) {
    if (a.graphs.size() != b.graphs.size() || a.has_fail != b.has_fail ||
        a.has_diverge != b.has_diverge) {
        return false;
    }
    for (std::size_t i = 0; i < a.graphs.size(); ++i) {
        if (a.graphs[i].key != b.graphs[i].key) {
            return false;
        }
    }
    return true;
}

} // namespace gpeng
