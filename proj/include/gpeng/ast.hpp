#ifndef GPENG_AST_HPP
#define GPENG_AST_HPP

#include <string>
#include <vector>

#include "gpeng/rule.hpp"

namespace gpeng {

/// Program commands as parsed. A bare name is a `call` until elaboration
/// decides whether it names a rule or a procedure; `{r1, r2}` parses to
/// a `rule_set`.
struct Command {
    enum class Kind {
        rule_set, // names = members
        call,     // names[0] = rule or procedure
        seq,      // kids in order
        if_stmt,  // kids = [condition, then, else]
        try_stmt, // kids = [condition, then, else]
        alt,      // kids = [left, right], `or`
        loop,     // kids = [body], `!`
        brk,
        skip,
        fail,
    };

    Kind kind = Kind::skip;
    std::vector<std::string> names;
    std::vector<Command> kids;

    static Command make(Kind k, std::vector<std::string> names,
                        std::vector<Command> kids) {
        Command c;
        c.kind = k;
        c.names = std::move(names);
        c.kids = std::move(kids);
        return c;
    }
    static Command rule_set(std::vector<std::string> names) {
        return make(Kind::rule_set, std::move(names), {});
    }
    static Command call(std::string name) {
        return make(Kind::call, {std::move(name)}, {});
    }
    static Command seq(std::vector<Command> kids) {
        return make(Kind::seq, {}, std::move(kids));
    }
    static Command if_stmt(Command cond, Command then, Command otherwise) {
        return make(Kind::if_stmt, {},
                    {std::move(cond), std::move(then), std::move(otherwise)});
    }
    static Command try_stmt(Command cond, Command then, Command otherwise) {
        return make(Kind::try_stmt, {},
                    {std::move(cond), std::move(then), std::move(otherwise)});
    }
    static Command alt(Command left, Command right) {
        return make(Kind::alt, {}, {std::move(left), std::move(right)});
    }
    static Command loop(Command body) {
        return make(Kind::loop, {}, {std::move(body)});
    }
    static Command brk() { return make(Kind::brk, {}, {}); }
    static Command skip() { return make(Kind::skip, {}, {}); }
    static Command fail() { return make(Kind::fail, {}, {}); }

    bool operator==(const Command&) const = default;
};

struct Procedure {
    std::string name;
    std::vector<Rule> local_rules;
    std::vector<Procedure> local_procedures;
    Command body;

    bool operator==(const Procedure&) const = default;
};

/// One parsed program file: declarations plus the mandatory Main.
struct ProgramAST {
    std::vector<Rule> rules;
    std::vector<Procedure> procedures;
    Command main;

    bool operator==(const ProgramAST&) const = default;
};

} // namespace gpeng

#endif // GPENG_AST_HPP
