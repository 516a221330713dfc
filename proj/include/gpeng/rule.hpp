#ifndef GPENG_RULE_HPP
#define GPENG_RULE_HPP

#include <map>
#include <string>
#include <vector>

#include "gpeng/expr.hpp"

namespace gpeng {

struct RuleNode {
    std::string id;
    Expr label;
    Mark mark = Mark::none;

    bool operator==(const RuleNode&) const = default;
};

struct RuleEdge {
    std::string id;
    std::string source;
    std::string target;
    Expr label;
    Mark mark = Mark::none;

    bool operator==(const RuleEdge&) const = default;
};

struct RuleGraph {
    std::vector<RuleNode> nodes;
    std::vector<RuleEdge> edges;

    const RuleNode* find_node(const std::string& id) const;
    const RuleEdge* find_edge(const std::string& id) const;

    bool operator==(const RuleGraph&) const = default;
};

/// A conditional rule: left pattern, right replacement, the interface
/// naming the nodes common to both sides, and an application condition.
///
/// An edge that keeps its id and endpoints across the two sides is
/// preserved (relabelled in place); all other left edges are deleted and
/// all other right edges created fresh.
struct Rule {
    std::string name;
    VarTypes vars;
    std::vector<std::string> var_order; // declaration order, for printing
    RuleGraph left;
    RuleGraph right;
    std::vector<std::string> interface;
    Cond condition = Cond::truth();

    bool operator==(const Rule&) const = default;
};

/// Structural checks a rule must pass before it can be matched:
/// consistent ids and endpoints, interface present on both sides, legal
/// marks, left labels that are patterns, right-hand and condition
/// variables bound on the left, degree and edge() arguments naming left
/// nodes. Throws StaticError or PatternError.
void validate_rule(const Rule& rule);

} // namespace gpeng

#endif // GPENG_RULE_HPP
