#ifndef GPENG_ELABORATE_HPP
#define GPENG_ELABORATE_HPP

#include <memory>
#include <string>
#include <vector>

#include "gpeng/ast.hpp"
#include "gpeng/rule.hpp"

namespace gpeng {

/// Procedure-free command tree. Rule-set calls carry their resolved Rule
/// values, so execution never consults a declaration table.
struct CoreNode {
    enum class Kind {
        rule_set, // rules = members, label = source text of the call
        seq,      // kids in order
        if_stmt,  // kids = [condition, then, else]
        try_stmt, // kids = [condition, then, else]
        alt,      // kids = [left, right]
        loop,     // kids = [body]
        brk,
        skip,
        fail,
    };

    Kind kind = Kind::skip;
    int id = 0; // dense preorder index, stable across copies of the program
    std::string label;
    std::vector<Rule> rules;
    std::vector<std::unique_ptr<CoreNode>> kids;
};

struct CoreProgram {
    std::unique_ptr<CoreNode> main;
    int node_count = 0;
};

/// Inlines every procedure call at its use site, resolving names through
/// the lexical scope chain of local declarations, and resolves rule-set
/// members to rules. Rejects recursive procedures, unknown names, and
/// `break` outside a loop; the condition of if/try is a break barrier,
/// so a loop around the whole statement does not legalise a break inside
/// the condition.
CoreProgram elaborate(const ProgramAST& program);

} // namespace gpeng

#endif // GPENG_ELABORATE_HPP
