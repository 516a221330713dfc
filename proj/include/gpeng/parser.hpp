#ifndef GPENG_PARSER_HPP
#define GPENG_PARSER_HPP

#include <string>

#include "gpeng/ast.hpp"

namespace gpeng {

/// Parses a program file. Newlines are insignificant; comments run from
/// `//` to end of line. Declarations are rule declarations
///
///     rule name(a, b : list; i : int)
///       node 1 a
///       edge e1 1 1 i
///       =>
///       node 1 a
///       interface 1
///       where i > 0
///
/// procedure definitions `Name = command` (optionally with local
/// declarations in `[ ... ]` before the body), and exactly one
/// `Main = command`. Commands follow the usual grammar: `;` sequencing,
/// `or`, postfix `!`, `{r1, r2}`, if/then/else, try/then/else, break,
/// skip, fail, with parentheses for grouping.
///
/// Throws ParseError (with position) and StaticError for duplicate
/// declarations, a missing Main, or rules that fail validation.
ProgramAST parse_program(const std::string& text,
                         const std::string& filename = "<string>");

/// Canonical text form: rules, then procedures, then Main, each
/// declaration in a fixed layout with minimal parentheses.
/// parse(print(ast)) == ast, and print is idempotent on its own output.
std::string print_program(const ProgramAST& ast);

ProgramAST load_program(const std::string& path);

} // namespace gpeng

#endif // GPENG_PARSER_HPP
