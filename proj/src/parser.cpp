#include "gpeng/parser.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace gpeng {

namespace {

// ---------------------------------------------------------------------------
// Lexer.

struct Token {
    enum class Kind { word, integer, string, punct, end };
    Kind kind = Kind::end;
    std::string text;
    std::int64_t value = 0;
    int line = 1;
    int col = 1;
};

struct Lexer {
    const std::string& text;
    const std::string& file;
    std::size_t pos = 0;
    int line = 1;
    int col = 1;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(file, line, col, msg);
    }

    char peek(std::size_t ahead = 0) const {
        return pos + ahead < text.size() ? text[pos + ahead] : '\0';
    }

    void advance() {
        if (text[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }

    void skip_blank() {
        for (;;) {
            char c = peek();
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else if (c == '/' && peek(1) == '/') {
                while (peek() != '\n' && peek() != '\0') advance();
            } else {
                return;
            }
        }
    }

    Token next() {
        skip_blank();
        Token t;
        t.line = line;
        t.col = col;
        char c = peek();
        if (c == '\0') {
            t.kind = Token::Kind::end;
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            t.kind = Token::Kind::word;
            while (std::isalnum(static_cast<unsigned char>(peek())) ||
                   peek() == '_') {
                t.text += peek();
                advance();
            }
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            t.kind = Token::Kind::integer;
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                t.text += peek();
                advance();
            }
            auto [end, ec] = std::from_chars(
                t.text.data(), t.text.data() + t.text.size(), t.value);
            if (ec != std::errc() || end != t.text.data() + t.text.size()) {
                throw ParseError(file, t.line, t.col,
                                 "integer literal out of range");
            }
            return t;
        }
        if (c == '"') {
            t.kind = Token::Kind::string;
            advance();
            while (peek() != '"') {
                if (peek() == '\0' || peek() == '\n') {
                    throw ParseError(file, t.line, t.col,
                                     "unterminated string literal");
                }
                t.text += peek();
                advance();
            }
            advance();
            if (!valid_atom_string(t.text)) {
                throw ParseError(file, t.line, t.col,
                                 "string literal contains non-printable "
                                 "characters");
            }
            return t;
        }
        t.kind = Token::Kind::punct;
        if ((c == '=' && peek(1) == '>') || (c == '<' && peek(1) == '=') ||
            (c == '>' && peek(1) == '=') || (c == '!' && peek(1) == '=')) {
            t.text = {c, peek(1)};
            advance();
            advance();
            return t;
        }
        static const std::string singles = "(){}[],;:!=+-*/<>#";
        if (singles.find(c) == std::string::npos) {
            fail(std::string("unexpected character '") + c + "'");
        }
        t.text = c;
        advance();
        return t;
    }
};

std::vector<Token> tokenize(const std::string& text, const std::string& file) {
    Lexer lex{text, file};
    std::vector<Token> out;
    for (;;) {
        out.push_back(lex.next());
        if (out.back().kind == Token::Kind::end) return out;
    }
}

// ---------------------------------------------------------------------------
// Parser.

struct Parser {
    std::vector<Token> toks;
    std::size_t pos = 0;
    std::string file;

    const Token& peek(std::size_t ahead = 0) const {
        std::size_t i = pos + ahead;
        if (i >= toks.size()) i = toks.size() - 1; // the end token
        return toks[i];
    }

    Token eat() { return toks[pos == toks.size() - 1 ? pos : pos++]; }

    [[noreturn]] void fail(const std::string& msg,
                           std::vector<std::string> expected = {}) const {
        const Token& t = peek();
        throw ParseError(file, t.line, t.col, msg, std::move(expected));
    }

    std::string describe(const Token& t) const {
        switch (t.kind) {
            case Token::Kind::word: return "'" + t.text + "'";
            case Token::Kind::integer: return "'" + t.text + "'";
            case Token::Kind::string: return "a string literal";
            case Token::Kind::punct: return "'" + t.text + "'";
            case Token::Kind::end: return "end of input";
        }
        return "?";
    }

    bool at_word(const char* w) const {
        return peek().kind == Token::Kind::word && peek().text == w;
    }

    bool at_punct(const char* p) const {
        return peek().kind == Token::Kind::punct && peek().text == p;
    }

    bool eat_word(const char* w) {
        if (!at_word(w)) return false;
        ++pos;
        return true;
    }

    bool eat_punct(const char* p) {
        if (!at_punct(p)) return false;
        ++pos;
        return true;
    }

    void expect_punct(const char* p) {
        if (!eat_punct(p)) {
            fail("expected '" + std::string(p) + "', got " + describe(peek()),
                 {p});
        }
    }

    void expect_word(const char* w) {
        if (!eat_word(w)) {
            fail("expected '" + std::string(w) + "', got " + describe(peek()),
                 {w});
        }
    }

    std::string name(const char* what) {
        if (peek().kind != Token::Kind::word) {
            fail(std::string("expected ") + what + ", got " + describe(peek()));
        }
        return eat().text;
    }

    /// Rule and procedure names share the namespace of callable commands,
    /// so the command keywords are off limits for them.
    std::string decl_name(const char* what) {
        static const std::set<std::string> keywords = {
            "rule", "if", "then", "else", "try", "or",
            "break", "skip", "fail",
        };
        if (peek().kind == Token::Kind::word &&
            keywords.count(peek().text) != 0) {
            fail("'" + peek().text + "' cannot be used as a declaration name");
        }
        return name(what);
    }

    /// Rule node and edge ids may be plain words or bare numbers.
    std::string item_id(const char* what) {
        if (peek().kind == Token::Kind::word ||
            peek().kind == Token::Kind::integer) {
            return eat().text;
        }
        fail(std::string("expected ") + what + ", got " + describe(peek()));
    }

    // -- Expressions --------------------------------------------------------

    Expr parse_expr() { return parse_concat(); }

    Expr parse_concat() {
        Expr e = parse_add();
        while (at_punct(":")) {
            ++pos;
            e = Expr::binary(Expr::Kind::concat, std::move(e), parse_add());
        }
        return e;
    }

    Expr parse_add() {
        Expr e = parse_mul();
        for (;;) {
            if (eat_punct("+")) {
                e = Expr::binary(Expr::Kind::add, std::move(e), parse_mul());
            } else if (at_punct("-")) {
                ++pos;
                e = Expr::binary(Expr::Kind::sub, std::move(e), parse_mul());
            } else {
                return e;
            }
        }
    }

    Expr parse_mul() {
        Expr e = parse_unary();
        for (;;) {
            if (eat_punct("*")) {
                e = Expr::binary(Expr::Kind::mul, std::move(e), parse_unary());
            } else if (eat_punct("/")) {
                e = Expr::binary(Expr::Kind::div, std::move(e), parse_unary());
            } else {
                return e;
            }
        }
    }

    Expr parse_unary() {
        if (eat_punct("-")) {
            Expr inner = parse_unary();
            if (inner.kind == Expr::Kind::int_lit) {
                return Expr::integer(-inner.int_value);
            }
            return Expr::neg(std::move(inner));
        }
        return parse_primary();
    }

    Expr parse_primary() {
        const Token& t = peek();
        if (t.kind == Token::Kind::integer) {
            return Expr::integer(eat().value);
        }
        if (t.kind == Token::Kind::string) {
            return Expr::string(eat().text);
        }
        if (at_punct("(")) {
            ++pos;
            Expr e = parse_expr();
            expect_punct(")");
            return e;
        }
        if (t.kind == Token::Kind::word) {
            if (t.text == "empty") {
                ++pos;
                return Expr::empty();
            }
            if (t.text == "indegree" || t.text == "outdegree") {
                Expr::Kind k = t.text == "indegree" ? Expr::Kind::indeg
                                                    : Expr::Kind::outdeg;
                ++pos;
                expect_punct("(");
                std::string node = item_id("a node id");
                expect_punct(")");
                return Expr::degree(k, std::move(node));
            }
            return Expr::var(eat().text);
        }
        fail("expected an expression, got " + describe(t));
    }

    // -- Conditions ---------------------------------------------------------

    Cond parse_cond() { return parse_cond_or(); }

    Cond parse_cond_or() {
        Cond c = parse_cond_and();
        while (eat_word("or")) {
            c = Cond::disj(std::move(c), parse_cond_and());
        }
        return c;
    }

    Cond parse_cond_and() {
        Cond c = parse_cond_not();
        while (eat_word("and")) {
            c = Cond::conj(std::move(c), parse_cond_not());
        }
        return c;
    }

    Cond parse_cond_not() {
        if (eat_word("not")) {
            return Cond::negation(parse_cond_not());
        }
        return parse_cond_primary();
    }

    Cond parse_cond_primary() {
        if (eat_word("true")) {
            return Cond::truth();
        }
        if (at_word("int") || at_word("string") || at_word("atom")) {
            VarType t = peek().text == "int"
                            ? VarType::integer
                            : (peek().text == "string" ? VarType::string
                                                       : VarType::atom);
            ++pos;
            expect_punct("(");
            std::string var = name("a variable name");
            expect_punct(")");
            return Cond::has_type(t, std::move(var));
        }
        if (at_word("edge")) {
            ++pos;
            expect_punct("(");
            std::string s = item_id("a node id");
            expect_punct(",");
            std::string t = item_id("a node id");
            std::vector<Expr> label;
            if (eat_punct(",")) {
                label.push_back(parse_expr());
            }
            expect_punct(")");
            return Cond::has_edge(std::move(s), std::move(t), std::move(label));
        }
        if (at_punct("(")) {
            // Either a parenthesised condition or the left expression of a
            // comparison; try the condition reading first.
            std::size_t save = pos;
            try {
                ++pos;
                Cond c = parse_cond();
                expect_punct(")");
                return c;
            } catch (const ParseError&) {
                pos = save;
            }
        }
        Expr lhs = parse_expr();
        Cond::Cmp op;
        if (eat_punct("=")) {
            op = Cond::Cmp::eq;
        } else if (eat_punct("!=")) {
            op = Cond::Cmp::ne;
        } else if (eat_punct("<=")) {
            op = Cond::Cmp::le;
        } else if (eat_punct(">=")) {
            op = Cond::Cmp::ge;
        } else if (eat_punct("<")) {
            op = Cond::Cmp::lt;
        } else if (eat_punct(">")) {
            op = Cond::Cmp::gt;
        } else {
            fail("expected a comparison operator, got " + describe(peek()),
                 {"=", "!=", "<", "<=", ">", ">="});
        }
        return Cond::compare(op, std::move(lhs), parse_expr());
    }

    // -- Rules --------------------------------------------------------------

    VarType parse_var_type() {
        if (eat_word("int")) return VarType::integer;
        if (eat_word("string")) return VarType::string;
        if (eat_word("atom")) return VarType::atom;
        if (eat_word("list")) return VarType::list;
        fail("expected a variable type, got " + describe(peek()),
             {"int", "string", "atom", "list"});
    }

    void parse_var_decls(Rule& rule) {
        if (at_punct(")")) return;
        for (;;) {
            std::vector<std::string> group;
            group.push_back(name("a variable name"));
            while (eat_punct(",")) {
                group.push_back(name("a variable name"));
            }
            expect_punct(":");
            VarType type = parse_var_type();
            for (std::string& v : group) {
                if (!rule.vars.emplace(v, type).second) {
                    fail("variable '" + v + "' declared twice");
                }
                rule.var_order.push_back(std::move(v));
            }
            if (!eat_punct(";")) return;
        }
    }

    Mark parse_optional_mark() {
        if (!eat_punct("#")) return Mark::none;
        std::string w = name("a mark name");
        Mark m = Mark::none;
        if (w == "none" || !mark_from_name(w, m)) {
            fail("unknown mark '" + w + "'",
                 {"red", "green", "blue", "grey", "dashed"});
        }
        return m;
    }

    RuleGraph parse_rule_side() {
        RuleGraph side;
        for (;;) {
            if (at_word("node")) {
                ++pos;
                RuleNode n;
                n.id = item_id("a node id");
                n.label = parse_expr();
                n.mark = parse_optional_mark();
                side.nodes.push_back(std::move(n));
            } else if (at_word("edge")) {
                ++pos;
                RuleEdge e;
                e.id = item_id("an edge id");
                e.source = item_id("a source node id");
                e.target = item_id("a target node id");
                e.label = parse_expr();
                e.mark = parse_optional_mark();
                side.edges.push_back(std::move(e));
            } else {
                return side;
            }
        }
    }

    Rule parse_rule_decl() {
        const Token& start = peek();
        expect_word("rule");
        Rule rule;
        rule.name = decl_name("a rule name");
        expect_punct("(");
        parse_var_decls(rule);
        expect_punct(")");
        rule.left = parse_rule_side();
        expect_punct("=>");
        rule.right = parse_rule_side();
        expect_word("interface");
        while ((peek().kind == Token::Kind::word ||
                peek().kind == Token::Kind::integer) &&
               !at_word("where") && !at_word("rule") &&
               !(peek().kind == Token::Kind::word && peek(1).kind == Token::Kind::punct &&
                 peek(1).text == "=")) {
            rule.interface.push_back(eat().text);
        }
        if (eat_word("where")) {
            rule.condition = parse_cond();
        }
        try {
            validate_rule(rule);
        } catch (const StaticError& e) {
            throw StaticError(e.code(), file + ":" + std::to_string(start.line) +
                                            ": " + e.what());
        } catch (const PatternError& e) {
            throw PatternError(e.code(), file + ":" +
                                             std::to_string(start.line) + ": " +
                                             e.what());
        }
        return rule;
    }

    // -- Commands -----------------------------------------------------------

    Command parse_comseq() {
        std::vector<Command> parts;
        parts.push_back(parse_orcom());
        while (eat_punct(";")) {
            parts.push_back(parse_orcom());
        }
        if (parts.size() == 1) return std::move(parts.front());
        return Command::seq(std::move(parts));
    }

    Command parse_orcom() {
        Command c = parse_postcom();
        while (eat_word("or")) {
            c = Command::alt(std::move(c), parse_postcom());
        }
        return c;
    }

    Command parse_postcom() {
        Command c = parse_atom_command();
        while (eat_punct("!")) {
            c = Command::loop(std::move(c));
        }
        return c;
    }

    Command parse_atom_command() {
        if (eat_punct("(")) {
            Command c = parse_comseq();
            expect_punct(")");
            return c;
        }
        if (eat_punct("{")) {
            std::vector<std::string> names;
            names.push_back(name("a rule name"));
            while (eat_punct(",")) {
                names.push_back(name("a rule name"));
            }
            expect_punct("}");
            return Command::rule_set(std::move(names));
        }
        if (eat_word("if")) {
            Command cond = parse_orcom();
            expect_word("then");
            Command then = parse_orcom();
            Command other = eat_word("else") ? parse_orcom() : Command::skip();
            return Command::if_stmt(std::move(cond), std::move(then),
                                    std::move(other));
        }
        if (eat_word("try")) {
            Command cond = parse_orcom();
            Command then = eat_word("then") ? parse_orcom() : Command::skip();
            Command other = eat_word("else") ? parse_orcom() : Command::skip();
            return Command::try_stmt(std::move(cond), std::move(then),
                                     std::move(other));
        }
        if (eat_word("break")) return Command::brk();
        if (eat_word("skip")) return Command::skip();
        if (eat_word("fail")) return Command::fail();
        if (peek().kind == Token::Kind::word) {
            return Command::call(eat().text);
        }
        fail("expected a command, got " + describe(peek()));
    }

    // -- Declarations -------------------------------------------------------

    struct DeclSet {
        std::vector<Rule> rules;
        std::vector<Procedure> procedures;
        std::set<std::string> names;
    };

    void check_fresh(DeclSet& set, const std::string& name, const Token& at) {
        if (!set.names.insert(name).second) {
            throw StaticError(Errc::duplicate_declaration,
                              file + ":" + std::to_string(at.line) +
                                  ": duplicate declaration of '" + name + "'");
        }
    }

    bool at_declaration() const {
        if (at_word("rule")) return true;
        return peek().kind == Token::Kind::word &&
               peek(1).kind == Token::Kind::punct && peek(1).text == "=";
    }

    /// Parses declarations until `stop` (end of input or `]`), splitting
    /// out Main when `main` is given.
    void parse_declarations(DeclSet& set, Command* main, bool* have_main) {
        while (at_declaration()) {
            const Token& at = peek();
            if (at_word("rule")) {
                Rule r = parse_rule_decl();
                check_fresh(set, r.name, at);
                set.rules.push_back(std::move(r));
                continue;
            }
            std::string proc_name = decl_name("a declaration name");
            expect_punct("=");
            if (main != nullptr && proc_name == "Main") {
                if (*have_main) {
                    throw StaticError(Errc::duplicate_declaration,
                                      file + ":" + std::to_string(at.line) +
                                          ": duplicate declaration of 'Main'");
                }
                *have_main = true;
                *main = parse_comseq();
                continue;
            }
            Procedure p;
            p.name = proc_name;
            if (eat_punct("[")) {
                DeclSet locals;
                parse_declarations(locals, nullptr, nullptr);
                expect_punct("]");
                p.local_rules = std::move(locals.rules);
                p.local_procedures = std::move(locals.procedures);
            }
            p.body = parse_comseq();
            check_fresh(set, p.name, at);
            set.procedures.push_back(std::move(p));
        }
    }
};

// ---------------------------------------------------------------------------
// Printer.

void print_expr_line(const Expr& e, Mark mark, std::string& out) {
    out += expr_to_string(e);
    if (mark != Mark::none) {
        out += " #";
        out += mark_name(mark);
    }
}

void print_rule(const Rule& rule, std::string& out) {
    out += "rule ";
    out += rule.name;
    out += '(';
    std::size_t i = 0;
    while (i < rule.var_order.size()) {
        if (i > 0) out += "; ";
        VarType type = rule.vars.at(rule.var_order[i]);
        std::size_t j = i;
        while (j < rule.var_order.size() &&
               rule.vars.at(rule.var_order[j]) == type) {
            if (j > i) out += ", ";
            out += rule.var_order[j];
            ++j;
        }
        out += " : ";
        out += var_type_name(type);
        i = j;
    }
    out += ")\n";
    auto print_side = [&out](const RuleGraph& side) {
        for (const RuleNode& n : side.nodes) {
            out += "  node ";
            out += n.id;
            out += ' ';
            print_expr_line(n.label, n.mark, out);
            out += '\n';
        }
        for (const RuleEdge& e : side.edges) {
            out += "  edge ";
            out += e.id;
            out += ' ';
            out += e.source;
            out += ' ';
            out += e.target;
            out += ' ';
            print_expr_line(e.label, e.mark, out);
            out += '\n';
        }
    };
    print_side(rule.left);
    out += "  =>\n";
    print_side(rule.right);
    out += "  interface";
    for (const std::string& id : rule.interface) {
        out += ' ';
        out += id;
    }
    out += '\n';
    if (!(rule.condition == Cond::truth())) {
        out += "  where ";
        out += cond_to_string(rule.condition);
        out += '\n';
    }
}

int command_level(const Command& c) {
    switch (c.kind) {
        case Command::Kind::seq: return 0;
        case Command::Kind::alt: return 1;
        case Command::Kind::loop: return 2;
        default: return 3;
    }
}

bool is_branching(const Command& c) {
    return c.kind == Command::Kind::if_stmt ||
           c.kind == Command::Kind::try_stmt;
}

/// `guard` forces parentheses around if/try in positions where their
/// greedy right edge would capture a following `or` or `!`.
void print_command(const Command& c, int required, bool guard,
                   std::string& out) {
    bool parens = command_level(c) < required || (guard && is_branching(c));
    if (parens) out += '(';
    switch (c.kind) {
        case Command::Kind::rule_set: {
            out += '{';
            for (std::size_t i = 0; i < c.names.size(); ++i) {
                if (i > 0) out += ", ";
                out += c.names[i];
            }
            out += '}';
            break;
        }
        case Command::Kind::call:
            out += c.names[0];
            break;
        case Command::Kind::seq:
            for (std::size_t i = 0; i < c.kids.size(); ++i) {
                if (i > 0) out += "; ";
                print_command(c.kids[i], 1, false, out);
            }
            break;
        case Command::Kind::if_stmt:
            out += "if ";
            print_command(c.kids[0], 1, false, out);
            out += " then ";
            print_command(c.kids[1], 1, false, out);
            if (!(c.kids[2] == Command::skip())) {
                out += " else ";
                print_command(c.kids[2], 1, false, out);
            }
            break;
        case Command::Kind::try_stmt:
            out += "try ";
            print_command(c.kids[0], 1, false, out);
            if (!(c.kids[1] == Command::skip())) {
                out += " then ";
                print_command(c.kids[1], 1, false, out);
            }
            if (!(c.kids[2] == Command::skip())) {
                out += " else ";
                print_command(c.kids[2], 1, false, out);
            }
            break;
        case Command::Kind::alt:
            print_command(c.kids[0], 1, true, out);
            out += " or ";
            print_command(c.kids[1], 2, false, out);
            break;
        case Command::Kind::loop:
            print_command(c.kids[0], 2, true, out);
            out += '!';
            break;
        case Command::Kind::brk:
            out += "break";
            break;
        case Command::Kind::skip:
            out += "skip";
            break;
        case Command::Kind::fail:
            out += "fail";
            break;
    }
    if (parens) out += ')';
}

void print_procedure(const Procedure& p, std::string& out) {
    out += p.name;
    out += " = ";
    if (!p.local_rules.empty() || !p.local_procedures.empty()) {
        out += "[\n";
        for (const Rule& r : p.local_rules) {
            print_rule(r, out);
        }
        for (const Procedure& lp : p.local_procedures) {
            print_procedure(lp, out);
        }
        out += "] ";
    }
    print_command(p.body, 0, false, out);
    out += '\n';
}

} // namespace

ProgramAST parse_program(const std::string& text, const std::string& filename) {
    Parser p;
    p.toks = tokenize(text, filename);
    p.file = filename;

    ProgramAST ast;
    Parser::DeclSet top;
    bool have_main = false;
    p.parse_declarations(top, &ast.main, &have_main);
    if (p.peek().kind != Token::Kind::end) {
        p.fail("expected a declaration, got " + p.describe(p.peek()));
    }
    if (!have_main) {
        throw StaticError(Errc::missing_main,
                          filename + ": no Main declaration");
    }
    ast.rules = std::move(top.rules);
    ast.procedures = std::move(top.procedures);
    return ast;
}

std::string print_program(const ProgramAST& ast) {
    std::string out;
    bool first = true;
    for (const Rule& r : ast.rules) {
        if (!first) out += '\n';
        first = false;
        print_rule(r, out);
    }
    for (const Procedure& p : ast.procedures) {
        if (!first) out += '\n';
        first = false;
        print_procedure(p, out);
    }
    if (!first) out += '\n';
    out += "Main = ";
    print_command(ast.main, 0, false, out);
    out += '\n';
    return out;
}

ProgramAST load_program(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(Errc::io_error, "cannot open '" + path + "' for reading");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_program(buf.str(), path);
}

} // namespace gpeng
