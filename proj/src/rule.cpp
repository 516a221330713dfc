#include "gpeng/rule.hpp"

#include <set>

namespace gpeng {

const RuleNode* RuleGraph::find_node(const std::string& id) const {
    for (const RuleNode& n : nodes) {
        if (n.id == id) return &n;
    }
    return nullptr;
}

const RuleEdge* RuleGraph::find_edge(const std::string& id) const {
    for (const RuleEdge& e : edges) {
        if (e.id == id) return &e;
    }
    return nullptr;
}

namespace {

bool reserved_word(const std::string& s) {
    static const std::set<std::string> words = {
        "rule", "where", "interface", "node", "edge", "empty", "not", "and",
        "or", "true", "false", "int", "string", "atom", "list", "indegree",
        "outdegree", "if", "then", "else", "try", "break", "skip", "fail",
    };
    return words.count(s) != 0;
}

[[noreturn]] void bad(const std::string& rule, const std::string& msg) {
    throw StaticError(Errc::malformed_rule, "rule '" + rule + "': " + msg);
}

void collect_expr_vars(const Expr& e, std::set<std::string>& out) {
    if (e.kind == Expr::Kind::var) out.insert(e.text);
    for (const Expr& k : e.kids) collect_expr_vars(k, out);
}

void collect_expr_degree_nodes(const Expr& e, std::set<std::string>& out) {
    if (e.kind == Expr::Kind::indeg || e.kind == Expr::Kind::outdeg) {
        out.insert(e.text);
    }
    for (const Expr& k : e.kids) collect_expr_degree_nodes(k, out);
}

void collect_cond_vars(const Cond& c, std::set<std::string>& out) {
    if (c.kind == Cond::Kind::has_type) out.insert(c.var);
    for (const Cond& k : c.kids) collect_cond_vars(k, out);
    for (const Expr& e : c.args) collect_expr_vars(e, out);
}

void collect_cond_node_refs(const Cond& c, std::set<std::string>& out) {
    if (c.kind == Cond::Kind::has_edge) {
        out.insert(c.source);
        out.insert(c.target);
    }
    for (const Cond& k : c.kids) collect_cond_node_refs(k, out);
    for (const Expr& e : c.args) collect_expr_degree_nodes(e, out);
}

struct SideIndex {
    std::set<std::string> node_ids;
    std::set<std::string> edge_ids;
};

SideIndex check_side(const Rule& rule, const RuleGraph& side, const char* name) {
    SideIndex idx;
    for (const RuleNode& n : side.nodes) {
        if (n.id.empty()) bad(rule.name, "empty node id");
        if (reserved_word(n.id)) {
            bad(rule.name, "node id '" + n.id + "' is a reserved word");
        }
        if (!idx.node_ids.insert(n.id).second) {
            bad(rule.name, std::string("duplicate node '") + n.id + "' on the " +
                               name + " side");
        }
        if (!mark_allowed_on_node(n.mark)) {
            bad(rule.name, "mark '" + std::string(mark_name(n.mark)) +
                               "' is not allowed on node '" + n.id + "'");
        }
    }
    for (const RuleEdge& e : side.edges) {
        if (e.id.empty()) bad(rule.name, "empty edge id");
        if (reserved_word(e.id)) {
            bad(rule.name, "edge id '" + e.id + "' is a reserved word");
        }
        if (!idx.edge_ids.insert(e.id).second) {
            bad(rule.name, std::string("duplicate edge '") + e.id + "' on the " +
                               name + " side");
        }
        if (!mark_allowed_on_edge(e.mark)) {
            bad(rule.name, "mark '" + std::string(mark_name(e.mark)) +
                               "' is not allowed on edge '" + e.id + "'");
        }
        if (idx.node_ids.count(e.source) == 0) {
            bad(rule.name, "edge '" + e.id + "' uses undeclared node '" +
                               e.source + "'");
        }
        if (idx.node_ids.count(e.target) == 0) {
            bad(rule.name, "edge '" + e.id + "' uses undeclared node '" +
                               e.target + "'");
        }
    }
    return idx;
}

} // namespace

void validate_rule(const Rule& rule) {
    if (rule.name.empty()) bad(rule.name, "empty rule name");
    for (const auto& [name, type] : rule.vars) {
        if (reserved_word(name)) {
            bad(rule.name, "variable name '" + name + "' is a reserved word");
        }
    }

    SideIndex left = check_side(rule, rule.left, "left");
    SideIndex right = check_side(rule, rule.right, "right");

    std::set<std::string> iface;
    for (const std::string& id : rule.interface) {
        if (!iface.insert(id).second) {
            bad(rule.name, "node '" + id + "' listed twice in the interface");
        }
        if (left.node_ids.count(id) == 0 || right.node_ids.count(id) == 0) {
            bad(rule.name,
                "interface node '" + id + "' must appear on both sides");
        }
    }
    for (const std::string& id : left.node_ids) {
        if (right.node_ids.count(id) != 0 && iface.count(id) == 0) {
            bad(rule.name, "node '" + id +
                               "' appears on both sides but not in the interface");
        }
    }
    for (const RuleEdge& re : rule.right.edges) {
        const RuleEdge* le = rule.left.find_edge(re.id);
        if (le == nullptr) continue;
        if (le->source != re.source || le->target != re.target) {
            bad(rule.name,
                "edge '" + re.id + "' changes endpoints between sides");
        }
        if (iface.count(re.source) == 0 || iface.count(re.target) == 0) {
            bad(rule.name, "preserved edge '" + re.id +
                               "' must connect interface nodes");
        }
    }

    std::set<std::string> left_vars;
    auto check_left_label = [&](const Expr& label, const std::string& item) {
        try {
            check_pattern_expr(label, rule.vars);
        } catch (const PatternError& e) {
            throw PatternError(e.code(), "rule '" + rule.name + "', " + item +
                                             ": " + e.what());
        }
        collect_expr_vars(label, left_vars);
    };
    for (const RuleNode& n : rule.left.nodes) {
        check_left_label(n.label, "node '" + n.id + "'");
    }
    for (const RuleEdge& e : rule.left.edges) {
        check_left_label(e.label, "edge '" + e.id + "'");
    }

    auto check_used_vars = [&](const std::set<std::string>& used,
                               const char* where) {
        for (const std::string& v : used) {
            if (rule.vars.count(v) == 0) {
                bad(rule.name, std::string("undeclared variable '") + v +
                                   "' in " + where);
            }
            if (left_vars.count(v) == 0) {
                bad(rule.name, std::string("variable '") + v + "' in " + where +
                                   " is not bound by the left-hand side");
            }
        }
    };
    auto check_degree_refs = [&](const std::set<std::string>& refs,
                                 const char* where) {
        for (const std::string& id : refs) {
            if (left.node_ids.count(id) == 0) {
                bad(rule.name, std::string("'") + id + "' in " + where +
                                   " is not a left-hand node");
            }
        }
    };

    std::set<std::string> right_vars, right_degree;
    for (const RuleNode& n : rule.right.nodes) {
        collect_expr_vars(n.label, right_vars);
        collect_expr_degree_nodes(n.label, right_degree);
    }
    for (const RuleEdge& e : rule.right.edges) {
        collect_expr_vars(e.label, right_vars);
        collect_expr_degree_nodes(e.label, right_degree);
    }
    check_used_vars(right_vars, "the right-hand side");
    check_degree_refs(right_degree, "the right-hand side");

    std::set<std::string> cond_vars, cond_refs;
    collect_cond_vars(rule.condition, cond_vars);
    collect_cond_node_refs(rule.condition, cond_refs);
    check_used_vars(cond_vars, "the condition");
    check_degree_refs(cond_refs, "the condition");
}

} // namespace gpeng
