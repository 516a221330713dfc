#include "gpeng/elaborate.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "gpeng/errors.hpp"

namespace gpeng {

namespace {

/// One lexical block of declarations. The parser has already rejected
/// duplicate names within a block, so plain maps suffice.
struct Scope {
    std::map<std::string, const Rule*> rules;
    std::map<std::string, const Procedure*> procedures;
};

Scope make_scope(const std::vector<Rule>& rules,
                 const std::vector<Procedure>& procedures) {
    Scope s;
    for (const Rule& r : rules) {
        s.rules[r.name] = &r;
    }
    for (const Procedure& p : procedures) {
        s.procedures[p.name] = &p;
    }
    return s;
}

class Elaborator {
public:
    explicit Elaborator(const ProgramAST& program) {
        scopes_.push_back(make_scope(program.rules, program.procedures));
    }

    CoreProgram expand_main(const Command& main) {
        CoreProgram p;
        p.main = expand(main, 0, false);
        p.node_count = next_id_;
        return p;
    }

private:
    std::unique_ptr<CoreNode> fresh(CoreNode::Kind kind) {
        auto n = std::make_unique<CoreNode>();
        n->kind = kind;
        n->id = next_id_++;
        return n;
    }

    std::unique_ptr<CoreNode> expand(const Command& c, int loop_depth,
                                     bool in_cond) {
        switch (c.kind) {
        case Command::Kind::rule_set:
            return resolve_rule_set(c.names);
        case Command::Kind::call:
            return resolve_call(c.names.front(), loop_depth, in_cond);
        case Command::Kind::seq: {
            auto n = fresh(CoreNode::Kind::seq);
            for (const Command& k : c.kids) {
                n->kids.push_back(expand(k, loop_depth, in_cond));
            }
            return n;
        }
        case Command::Kind::if_stmt:
        case Command::Kind::try_stmt: {
            auto n = fresh(c.kind == Command::Kind::if_stmt
                               ? CoreNode::Kind::if_stmt
                               : CoreNode::Kind::try_stmt);
            n->kids.push_back(expand(c.kids[0], 0, true));
            n->kids.push_back(expand(c.kids[1], loop_depth, in_cond));
            n->kids.push_back(expand(c.kids[2], loop_depth, in_cond));
            return n;
        }
        case Command::Kind::alt: {
            auto n = fresh(CoreNode::Kind::alt);
            n->kids.push_back(expand(c.kids[0], loop_depth, in_cond));
            n->kids.push_back(expand(c.kids[1], loop_depth, in_cond));
            return n;
        }
        case Command::Kind::loop: {
            auto n = fresh(CoreNode::Kind::loop);
            n->kids.push_back(expand(c.kids[0], loop_depth + 1, in_cond));
            return n;
        }
        case Command::Kind::brk:
            if (loop_depth == 0) {
                throw StaticError(
                    Errc::break_outside_loop,
                    in_cond
                        ? "break inside an if/try condition cannot exit a loop"
                        : "break outside any loop");
            }
            return fresh(CoreNode::Kind::brk);
        case Command::Kind::skip:
            return fresh(CoreNode::Kind::skip);
        case Command::Kind::fail:
            return fresh(CoreNode::Kind::fail);
        }
        throw StaticError(Errc::unknown_rule, "corrupt command tree");
    }

    std::unique_ptr<CoreNode> rule_node(std::string text,
                                        const std::vector<const Rule*>& members) {
        auto n = fresh(CoreNode::Kind::rule_set);
        n->label = std::move(text);
        for (const Rule* r : members) {
            n->rules.push_back(*r);
        }
        return n;
    }

    std::unique_ptr<CoreNode> resolve_rule_set(const std::vector<std::string>& names) {
        std::vector<const Rule*> members;
        std::string text = "{";
        for (const std::string& name : names) {
            if (members.size() > 0) {
                text += ", ";
            }
            text += name;
            members.push_back(find_rule(name));
        }
        text += "}";
        return rule_node(std::move(text), members);
    }

    const Rule* find_rule(const std::string& name) {
        for (std::size_t i = scopes_.size(); i-- > 0;) {
            auto r = scopes_[i].rules.find(name);
            if (r != scopes_[i].rules.end()) {
                return r->second;
            }
            if (scopes_[i].procedures.count(name) != 0) {
                throw StaticError(Errc::unknown_rule,
                                  "'" + name + "' names a procedure, not a rule");
            }
        }
        throw StaticError(Errc::unknown_rule, "unknown rule '" + name + "'");
    }

    std::unique_ptr<CoreNode> resolve_call(const std::string& name,
                                           int loop_depth, bool in_cond) {
        for (std::size_t i = scopes_.size(); i-- > 0;) {
            auto p = scopes_[i].procedures.find(name);
            if (p != scopes_[i].procedures.end()) {
                return inline_procedure(*p->second, i, loop_depth, in_cond);
            }
            auto r = scopes_[i].rules.find(name);
            if (r != scopes_[i].rules.end()) {
                return rule_node(name, {r->second});
            }
        }
        throw StaticError(Errc::unknown_rule,
                          "unknown rule or procedure '" + name + "'");
    }

    /// A procedure body is expanded in the environment of its definition:
    /// frames inner to the defining one are set aside, the procedure's own
    /// locals opened, and the caller's frames restored afterwards. A break
    /// in the body still binds to the loop around the call site.
    std::unique_ptr<CoreNode> inline_procedure(const Procedure& proc,
                                               std::size_t frame,
                                               int loop_depth, bool in_cond) {
        if (std::find(active_.begin(), active_.end(), &proc) != active_.end()) {
            throw StaticError(Errc::recursive_procedure,
                              "recursive procedure '" + proc.name + "'");
        }
        active_.push_back(&proc);
        std::vector<Scope> inner(scopes_.begin() + frame + 1, scopes_.end());
        scopes_.resize(frame + 1);
        scopes_.push_back(make_scope(proc.local_rules, proc.local_procedures));
        auto body = expand(proc.body, loop_depth, in_cond);
        scopes_.pop_back();
        scopes_.insert(scopes_.end(), inner.begin(), inner.end());
        active_.pop_back();
        return body;
    }

    std::vector<Scope> scopes_;
    std::vector<const Procedure*> active_;
    int next_id_ = 0;
};

} // namespace

CoreProgram elaborate(const ProgramAST& program) {
    Elaborator el(program);
    return el.expand_main(program.main);
}

} // namespace gpeng
