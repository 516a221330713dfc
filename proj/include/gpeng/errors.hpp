#ifndef GPENG_ERRORS_HPP
#define GPENG_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace gpeng {

enum class Errc {
    duplicate_id,
    unknown_endpoint,
    illegal_mark,
    unknown_node,
    size_limit,
    division_by_zero,
    overflow,
    type_mismatch,
    illegal_pattern,
    parse_error,
    duplicate_declaration,
    missing_main,
    recursive_procedure,
    unknown_rule,
    break_outside_loop,
    malformed_rule,
    state_space_limit,
    uncoloured_node,
    io_error,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

/// Construction-time violations of the host-graph model.
class GraphError : public Error {
public:
    using Error::Error;
};

/// Runtime expression evaluation failures (overflow, division by zero,
/// arithmetic on non-integers).
class EvalError : public Error {
public:
    using Error::Error;
};

/// A left-hand label that cannot be matched deterministically.
class PatternError : public Error {
public:
    using Error::Error;
};

/// Post-parse program checks: unknown rules, recursion, stray break.
class StaticError : public Error {
public:
    using Error::Error;
};

/// Configurable exploration limits (canonical-form size, branch caps).
class LimitError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::string file, int line, int col, const std::string& message,
               std::vector<std::string> expected = {});

    const std::string& file() const noexcept { return file_; }
    int line() const noexcept { return line_; }
    int col() const noexcept { return col_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    std::string file_;
    int line_;
    int col_;
    std::vector<std::string> expected_;
};

} // namespace gpeng

#endif // GPENG_ERRORS_HPP
