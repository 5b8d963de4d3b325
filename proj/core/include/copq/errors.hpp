#ifndef COPQ_ERRORS_HPP
#define COPQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace copq {

/// Input exceeds a hard size guard (brute force n, search cap, qubit count).
class SizeLimitError : public std::runtime_error {
public:
    explicit SizeLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// A requested (problem, size, method) combination cannot run on this build
/// or configuration. Maps to CLI exit code 2.
class CapabilityError : public std::runtime_error {
public:
    explicit CapabilityError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed instance file; carries the 1-based position of the offending token.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line, int column)
        : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// A circuit was executed with an unbound symbolic parameter.
class BindingError : public std::invalid_argument {
public:
    explicit BindingError(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace copq

#endif
