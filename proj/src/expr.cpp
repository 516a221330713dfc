#include "gpeng/expr.hpp"

#include <algorithm>
#include <set>

namespace gpeng {

const char* var_type_name(VarType t) {
    switch (t) {
        case VarType::integer: return "int";
        case VarType::string: return "string";
        case VarType::atom: return "atom";
        case VarType::list: return "list";
    }
    return "list";
}

Expr Expr::integer(std::int64_t v) {
    Expr e;
    e.kind = Kind::int_lit;
    e.int_value = v;
    return e;
}

Expr Expr::string(std::string s) {
    Expr e;
    e.kind = Kind::str_lit;
    e.text = std::move(s);
    return e;
}

Expr Expr::var(std::string name) {
    Expr e;
    e.kind = Kind::var;
    e.text = std::move(name);
    return e;
}

Expr Expr::empty() { return Expr{}; }

Expr Expr::binary(Kind k, Expr lhs, Expr rhs) {
    Expr e;
    e.kind = k;
    e.kids.push_back(std::move(lhs));
    e.kids.push_back(std::move(rhs));
    return e;
}

Expr Expr::neg(Expr inner) {
    Expr e;
    e.kind = Kind::neg;
    e.kids.push_back(std::move(inner));
    return e;
}

Expr Expr::degree(Kind k, std::string node) {
    Expr e;
    e.kind = k;
    e.text = std::move(node);
    return e;
}

Cond Cond::truth() { return Cond{}; }

Cond Cond::negation(Cond c) {
    Cond out;
    out.kind = Kind::negation;
    out.kids.push_back(std::move(c));
    return out;
}

Cond Cond::conj(Cond a, Cond b) {
    Cond out;
    out.kind = Kind::conj;
    out.kids.push_back(std::move(a));
    out.kids.push_back(std::move(b));
    return out;
}

Cond Cond::disj(Cond a, Cond b) {
    Cond out;
    out.kind = Kind::disj;
    out.kids.push_back(std::move(a));
    out.kids.push_back(std::move(b));
    return out;
}

Cond Cond::compare(Cmp op, Expr lhs, Expr rhs) {
    Cond out;
    out.kind = Kind::compare;
    out.cmp = op;
    out.args.push_back(std::move(lhs));
    out.args.push_back(std::move(rhs));
    return out;
}

Cond Cond::has_type(VarType t, std::string var) {
    Cond out;
    out.kind = Kind::has_type;
    out.type = t;
    out.var = std::move(var);
    return out;
}

Cond Cond::has_edge(std::string source, std::string target,
                    std::vector<Expr> label) {
    Cond out;
    out.kind = Kind::has_edge;
    out.source = std::move(source);
    out.target = std::move(target);
    out.args = std::move(label);
    return out;
}

namespace {

std::int64_t int_operand(const Value& v, const char* op) {
    if (v.size() != 1 || !is_int(v[0])) {
        throw EvalError(Errc::type_mismatch,
                        std::string("'") + op + "' needs integer operands, got " +
                            value_to_string(v));
    }
    return as_int(v[0]);
}

const NodeId& context_node(const EvalContext& ctx, const std::string& id,
                           const char* op) {
    if (ctx.graph == nullptr || ctx.nodes == nullptr) {
        throw EvalError(Errc::type_mismatch,
                        std::string(op) + " used outside a rule context");
    }
    auto it = ctx.nodes->find(id);
    if (it == ctx.nodes->end()) {
        throw EvalError(Errc::type_mismatch,
                        std::string(op) + " refers to unknown rule node '" + id +
                            "'");
    }
    return it->second;
}

} // namespace

Value eval_expr(const Expr& e, const EvalContext& ctx) {
    switch (e.kind) {
        case Expr::Kind::int_lit:
            return {Atom(e.int_value)};
        case Expr::Kind::str_lit:
            return {Atom(e.text)};
        case Expr::Kind::var: {
            auto it = ctx.vars.find(e.text);
            if (it == ctx.vars.end()) {
                throw EvalError(Errc::type_mismatch,
                                "unbound variable '" + e.text + "'");
            }
            return it->second;
        }
        case Expr::Kind::empty:
            return {};
        case Expr::Kind::concat: {
            Value l = eval_expr(e.kids[0], ctx);
            Value r = eval_expr(e.kids[1], ctx);
            l.insert(l.end(), r.begin(), r.end());
            return l;
        }
        case Expr::Kind::add: {
            std::int64_t a = int_operand(eval_expr(e.kids[0], ctx), "+");
            std::int64_t b = int_operand(eval_expr(e.kids[1], ctx), "+");
            std::int64_t out = 0;
            if (__builtin_add_overflow(a, b, &out)) {
                throw EvalError(Errc::overflow, "integer overflow in addition");
            }
            return {Atom(out)};
        }
        case Expr::Kind::sub: {
            std::int64_t a = int_operand(eval_expr(e.kids[0], ctx), "-");
            std::int64_t b = int_operand(eval_expr(e.kids[1], ctx), "-");
            std::int64_t out = 0;
            if (__builtin_sub_overflow(a, b, &out)) {
                throw EvalError(Errc::overflow,
                                "integer overflow in subtraction");
            }
            return {Atom(out)};
        }
        case Expr::Kind::mul: {
            std::int64_t a = int_operand(eval_expr(e.kids[0], ctx), "*");
            std::int64_t b = int_operand(eval_expr(e.kids[1], ctx), "*");
            std::int64_t out = 0;
            if (__builtin_mul_overflow(a, b, &out)) {
                throw EvalError(Errc::overflow,
                                "integer overflow in multiplication");
            }
            return {Atom(out)};
        }
        case Expr::Kind::div: {
            std::int64_t a = int_operand(eval_expr(e.kids[0], ctx), "/");
            std::int64_t b = int_operand(eval_expr(e.kids[1], ctx), "/");
            if (b == 0) {
                throw EvalError(Errc::division_by_zero, "division by zero");
            }
            if (a == INT64_MIN && b == -1) {
                throw EvalError(Errc::overflow, "integer overflow in division");
            }
            return {Atom(a / b)};
        }
        case Expr::Kind::neg: {
            std::int64_t a = int_operand(eval_expr(e.kids[0], ctx), "-");
            if (a == INT64_MIN) {
                throw EvalError(Errc::overflow, "integer overflow in negation");
            }
            return {Atom(-a)};
        }
        case Expr::Kind::indeg: {
            const NodeId& v = context_node(ctx, e.text, "indegree");
            return {Atom(static_cast<std::int64_t>(ctx.graph->indegree(v)))};
        }
        case Expr::Kind::outdeg: {
            const NodeId& v = context_node(ctx, e.text, "outdegree");
            return {Atom(static_cast<std::int64_t>(ctx.graph->outdegree(v)))};
        }
    }
    throw EvalError(Errc::type_mismatch, "malformed expression");
}

bool eval_cond(const Cond& c, const EvalContext& ctx) {
    switch (c.kind) {
        case Cond::Kind::truth:
            return true;
        case Cond::Kind::negation:
            return !eval_cond(c.kids[0], ctx);
        case Cond::Kind::conj:
            return eval_cond(c.kids[0], ctx) && eval_cond(c.kids[1], ctx);
        case Cond::Kind::disj:
            return eval_cond(c.kids[0], ctx) || eval_cond(c.kids[1], ctx);
        case Cond::Kind::compare: {
            Value l = eval_expr(c.args[0], ctx);
            Value r = eval_expr(c.args[1], ctx);
            switch (c.cmp) {
                case Cond::Cmp::eq: return l == r;
                case Cond::Cmp::ne: return l != r;
                case Cond::Cmp::lt: return int_operand(l, "<") < int_operand(r, "<");
                case Cond::Cmp::le: return int_operand(l, "<=") <= int_operand(r, "<=");
                case Cond::Cmp::gt: return int_operand(l, ">") > int_operand(r, ">");
                case Cond::Cmp::ge: return int_operand(l, ">=") >= int_operand(r, ">=");
            }
            return false;
        }
        case Cond::Kind::has_type: {
            auto it = ctx.vars.find(c.var);
            if (it == ctx.vars.end()) {
                throw EvalError(Errc::type_mismatch,
                                "unbound variable '" + c.var + "'");
            }
            const Value& v = it->second;
            switch (c.type) {
                case VarType::integer: return v.size() == 1 && is_int(v[0]);
                case VarType::string: return v.size() == 1 && is_string(v[0]);
                case VarType::atom: return v.size() == 1;
                case VarType::list: return true;
            }
            return false;
        }
        case Cond::Kind::has_edge: {
            const NodeId& s = context_node(ctx, c.source, "edge");
            const NodeId& t = context_node(ctx, c.target, "edge");
            std::vector<EdgeId> ids = ctx.graph->edges_between(s, t);
            if (c.args.empty()) return !ids.empty();
            Value want = eval_expr(c.args[0], ctx);
            for (const EdgeId& id : ids) {
                if (ctx.graph->edge(id).label.list == want) return true;
            }
            return false;
        }
    }
    throw EvalError(Errc::type_mismatch, "malformed condition");
}

// ---------------------------------------------------------------------------
// Left-hand label matching.

namespace {

struct Item {
    enum class Kind { fixed, atom_var, list_var };
    Kind kind;
    Value seg;
    std::string name;
    VarType type = VarType::list;
};

void flatten_pattern(const Expr& e, const Assignment& bound,
                     const VarTypes& types, std::vector<Item>& out) {
    switch (e.kind) {
        case Expr::Kind::int_lit:
            out.push_back({Item::Kind::fixed, {Atom(e.int_value)}, {}, {}});
            return;
        case Expr::Kind::str_lit:
            out.push_back({Item::Kind::fixed, {Atom(e.text)}, {}, {}});
            return;
        case Expr::Kind::empty:
            return;
        case Expr::Kind::var: {
            auto bit = bound.find(e.text);
            if (bit != bound.end()) {
                out.push_back({Item::Kind::fixed, bit->second, {}, {}});
                return;
            }
            auto tit = types.find(e.text);
            if (tit == types.end()) {
                throw PatternError(Errc::illegal_pattern,
                                   "undeclared variable '" + e.text +
                                       "' in a left-hand label");
            }
            if (tit->second == VarType::list) {
                out.push_back({Item::Kind::list_var, {}, e.text, tit->second});
            } else {
                out.push_back({Item::Kind::atom_var, {}, e.text, tit->second});
            }
            return;
        }
        case Expr::Kind::concat:
            flatten_pattern(e.kids[0], bound, types, out);
            flatten_pattern(e.kids[1], bound, types, out);
            return;
        default:
            throw PatternError(Errc::illegal_pattern,
                               "operator not allowed in a left-hand label: " +
                                   expr_to_string(e));
    }
}

bool atom_fits(const Atom& a, VarType t) {
    switch (t) {
        case VarType::integer: return is_int(a);
        case VarType::string: return is_string(a);
        default: return true;
    }
}

void match_items(const std::vector<Item>& items, std::size_t idx,
                 const Value& host, std::size_t hpos, Assignment& acc,
                 std::vector<Assignment>& out) {
    if (idx == items.size()) {
        if (hpos == host.size()) out.push_back(acc);
        return;
    }
    const Item& item = items[idx];
    switch (item.kind) {
        case Item::Kind::fixed: {
            if (hpos + item.seg.size() > host.size()) return;
            if (!std::equal(item.seg.begin(), item.seg.end(),
                            host.begin() + hpos)) {
                return;
            }
            match_items(items, idx + 1, host, hpos + item.seg.size(), acc, out);
            return;
        }
        case Item::Kind::atom_var: {
            if (hpos >= host.size()) return;
            const Atom& a = host[hpos];
            if (!atom_fits(a, item.type)) return;
            auto it = acc.find(item.name);
            if (it != acc.end()) {
                if (it->second == Value{a}) {
                    match_items(items, idx + 1, host, hpos + 1, acc, out);
                }
                return;
            }
            acc.emplace(item.name, Value{a});
            match_items(items, idx + 1, host, hpos + 1, acc, out);
            acc.erase(item.name);
            return;
        }
        case Item::Kind::list_var: {
            auto it = acc.find(item.name);
            if (it != acc.end()) {
                const Value& v = it->second;
                if (hpos + v.size() > host.size()) return;
                if (!std::equal(v.begin(), v.end(), host.begin() + hpos)) {
                    return;
                }
                match_items(items, idx + 1, host, hpos + v.size(), acc, out);
                return;
            }
            for (std::size_t len = 0; hpos + len <= host.size(); ++len) {
                acc[item.name] = Value(host.begin() + hpos,
                                       host.begin() + hpos + len);
                match_items(items, idx + 1, host, hpos + len, acc, out);
            }
            acc.erase(item.name);
            return;
        }
    }
}

} // namespace

void check_pattern_expr(const Expr& e, const VarTypes& types) {
    std::vector<Item> items;
    flatten_pattern(e, {}, types, items);
    std::set<std::string> list_vars;
    for (const Item& item : items) {
        if (item.kind == Item::Kind::list_var) list_vars.insert(item.name);
    }
    if (list_vars.size() > 1) {
        throw PatternError(Errc::illegal_pattern,
                           "left-hand label uses more than one list variable: " +
                               expr_to_string(e));
    }
}

std::vector<Assignment> match_label(const Expr& pattern, const Value& host,
                                    const Assignment& bound,
                                    const VarTypes& types) {
    std::vector<Item> items;
    flatten_pattern(pattern, bound, types, items);
    std::set<std::string> list_vars;
    for (const Item& item : items) {
        if (item.kind == Item::Kind::list_var) list_vars.insert(item.name);
    }
    if (list_vars.size() > 1) {
        throw PatternError(Errc::illegal_pattern,
                           "left-hand label uses more than one list variable: " +
                               expr_to_string(pattern));
    }
    std::vector<Assignment> out;
    Assignment acc = bound;
    match_items(items, 0, host, 0, acc, out);
    return out;
}

// ---------------------------------------------------------------------------
// Printing.

namespace {

int expr_level(Expr::Kind k) {
    switch (k) {
        case Expr::Kind::concat: return 0;
        case Expr::Kind::add:
        case Expr::Kind::sub: return 1;
        case Expr::Kind::mul:
        case Expr::Kind::div: return 2;
        case Expr::Kind::neg: return 3;
        default: return 4;
    }
}

const char* expr_op(Expr::Kind k) {
    switch (k) {
        case Expr::Kind::concat: return ":";
        case Expr::Kind::add: return "+";
        case Expr::Kind::sub: return "-";
        case Expr::Kind::mul: return "*";
        case Expr::Kind::div: return "/";
        default: return "?";
    }
}

void print_expr(const Expr& e, int parent, bool right, std::string& out) {
    int level = expr_level(e.kind);
    bool parens = level < parent || (level == parent && right && level < 4);
    if (parens) out += '(';
    switch (e.kind) {
        case Expr::Kind::int_lit:
            out += std::to_string(e.int_value);
            break;
        case Expr::Kind::str_lit:
            out += '"';
            out += e.text;
            out += '"';
            break;
        case Expr::Kind::var:
            out += e.text;
            break;
        case Expr::Kind::empty:
            out += "empty";
            break;
        case Expr::Kind::concat:
        case Expr::Kind::add:
        case Expr::Kind::sub:
        case Expr::Kind::mul:
        case Expr::Kind::div:
            print_expr(e.kids[0], level, false, out);
            out += expr_op(e.kind);
            print_expr(e.kids[1], level, true, out);
            break;
        case Expr::Kind::neg:
            out += '-';
            print_expr(e.kids[0], level, true, out);
            break;
        case Expr::Kind::indeg:
        case Expr::Kind::outdeg:
            out += e.kind == Expr::Kind::indeg ? "indegree(" : "outdegree(";
            out += e.text;
            out += ')';
            break;
    }
    if (parens) out += ')';
}

int cond_level(Cond::Kind k) {
    switch (k) {
        case Cond::Kind::disj: return 0;
        case Cond::Kind::conj: return 1;
        case Cond::Kind::negation: return 2;
        default: return 3;
    }
}

const char* cmp_text(Cond::Cmp c) {
    switch (c) {
        case Cond::Cmp::eq: return "=";
        case Cond::Cmp::ne: return "!=";
        case Cond::Cmp::lt: return "<";
        case Cond::Cmp::le: return "<=";
        case Cond::Cmp::gt: return ">";
        case Cond::Cmp::ge: return ">=";
    }
    return "=";
}

void print_cond(const Cond& c, int parent, bool right, std::string& out) {
    int level = cond_level(c.kind);
    bool parens = level < parent || (level == parent && right && level < 3);
    if (parens) out += '(';
    switch (c.kind) {
        case Cond::Kind::truth:
            out += "true";
            break;
        case Cond::Kind::negation:
            out += "not ";
            print_cond(c.kids[0], level, true, out);
            break;
        case Cond::Kind::conj:
        case Cond::Kind::disj:
            print_cond(c.kids[0], level, false, out);
            out += c.kind == Cond::Kind::conj ? " and " : " or ";
            print_cond(c.kids[1], level, true, out);
            break;
        case Cond::Kind::compare:
            out += expr_to_string(c.args[0]);
            out += ' ';
            out += cmp_text(c.cmp);
            out += ' ';
            out += expr_to_string(c.args[1]);
            break;
        case Cond::Kind::has_type:
            out += var_type_name(c.type);
            out += '(';
            out += c.var;
            out += ')';
            break;
        case Cond::Kind::has_edge:
            out += "edge(";
            out += c.source;
            out += ", ";
            out += c.target;
            if (!c.args.empty()) {
                out += ", ";
                out += expr_to_string(c.args[0]);
            }
            out += ')';
            break;
    }
    if (parens) out += ')';
}

} // namespace

std::string expr_to_string(const Expr& e) {
    std::string out;
    print_expr(e, 0, false, out);
    return out;
}

std::string cond_to_string(const Cond& c) {
    std::string out;
    print_cond(c, 0, false, out);
    return out;
}

} // namespace gpeng
