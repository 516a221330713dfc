#ifndef GPENG_EXPR_HPP
#define GPENG_EXPR_HPP

#include <map>
#include <string>
#include <vector>

#include "gpeng/graph.hpp"
#include "gpeng/label.hpp"

namespace gpeng {

enum class VarType {
    integer,
    string,
    atom,
    list,
};

const char* var_type_name(VarType t);

/// Label and arithmetic expressions as they appear in rules. Values are
/// atom lists; arithmetic is defined on single integer atoms only.
struct Expr {
    enum class Kind {
        int_lit,
        str_lit,
        var,
        empty,
        concat,
        add,
        sub,
        mul,
        div,
        neg,
        indeg,
        outdeg,
    };

    Kind kind = Kind::empty;
    std::int64_t int_value = 0;
    std::string text; // variable name, string literal, or degree node id
    std::vector<Expr> kids;

    static Expr integer(std::int64_t v);
    static Expr string(std::string s);
    static Expr var(std::string name);
    static Expr empty();
    static Expr binary(Kind k, Expr lhs, Expr rhs);
    static Expr neg(Expr e);
    static Expr degree(Kind k, std::string node);

    bool operator==(const Expr&) const = default;
};

/// Rule application conditions.
struct Cond {
    enum class Kind {
        truth,
        negation,
        conj,
        disj,
        compare,
        has_type,
        has_edge,
    };

    enum class Cmp { eq, ne, lt, le, gt, ge };

    Kind kind = Kind::truth;
    Cmp cmp = Cmp::eq;
    VarType type = VarType::atom;  // has_type: int()/string()/atom()
    std::string var;               // has_type operand
    std::string source, target;    // has_edge endpoints (rule node ids)
    std::vector<Cond> kids;        // negation: 1, conj/disj: 2
    std::vector<Expr> args;        // compare: [lhs, rhs]; has_edge: [] or [label]

    static Cond truth();
    static Cond negation(Cond c);
    static Cond conj(Cond a, Cond b);
    static Cond disj(Cond a, Cond b);
    static Cond compare(Cmp op, Expr lhs, Expr rhs);
    static Cond has_type(VarType t, std::string var);
    static Cond has_edge(std::string source, std::string target,
                         std::vector<Expr> label = {});

    bool operator==(const Cond&) const = default;
};

/// Variable bindings produced by matching. Every variable holds a Value;
/// int/string/atom variables hold one-element lists.
using Assignment = std::map<std::string, Value>;
using VarTypes = std::map<std::string, VarType>;

struct EvalContext {
    const Assignment& vars;
    /// Needed by degree operators and the edge predicate; label-only
    /// evaluation may leave these null.
    const HostGraph* graph = nullptr;
    const std::map<std::string, NodeId>* nodes = nullptr;
};

/// Evaluates to an atom list. Unbound variables, arithmetic on
/// non-integers, overflow and division by zero all throw.
Value eval_expr(const Expr& e, const EvalContext& ctx);

bool eval_cond(const Cond& c, const EvalContext& ctx);

/// Checks that an expression may be used as a left-hand label: only
/// literals, variables and concatenation, with at most one distinct
/// list variable. Throws PatternError otherwise.
void check_pattern_expr(const Expr& e, const VarTypes& types);

/// Matches a left-hand label expression against a host value, extending
/// `bound`. Returns every solution; for legal patterns there is at most
/// one, which the tests rely on.
std::vector<Assignment> match_label(const Expr& pattern, const Value& host,
                                    const Assignment& bound,
                                    const VarTypes& types);

std::string expr_to_string(const Expr& e);
std::string cond_to_string(const Cond& c);

} // namespace gpeng

#endif // GPENG_EXPR_HPP
