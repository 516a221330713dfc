#include "gpeng/errors.hpp"

namespace gpeng {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::duplicate_id: return "DuplicateId";
        case Errc::unknown_endpoint: return "UnknownEndpoint";
        case Errc::illegal_mark: return "IllegalMark";
        case Errc::unknown_node: return "UnknownNode";
        case Errc::size_limit: return "SizeLimitExceeded";
        case Errc::division_by_zero: return "DivisionByZero";
        case Errc::overflow: return "Overflow";
        case Errc::type_mismatch: return "TypeMismatch";
        case Errc::illegal_pattern: return "IllegalPattern";
        case Errc::parse_error: return "ParseError";
        case Errc::duplicate_declaration: return "DuplicateDeclaration";
        case Errc::missing_main: return "MissingMain";
        case Errc::recursive_procedure: return "RecursiveProcedure";
        case Errc::unknown_rule: return "UnknownRule";
        case Errc::break_outside_loop: return "BreakOutsideLoop";
        case Errc::malformed_rule: return "MalformedRule";
        case Errc::state_space_limit: return "StateSpaceLimit";
        case Errc::uncoloured_node: return "UncolouredNode";
        case Errc::io_error: return "IoError";
    }
    return "Error";
}

ParseError::ParseError(std::string file, int line, int col,
                       const std::string& message,
                       std::vector<std::string> expected)
    : Error(Errc::parse_error,
            file + ":" + std::to_string(line) + ":" + std::to_string(col) +
                ": " + message),
      file_(std::move(file)),
      line_(line),
      col_(col),
      expected_(std::move(expected)) {}

} // namespace gpeng
