#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace paracert {

/// Malformed textual input (braid strings, diagram files). Carries a
/// position so the CLI can point at the offending token.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::size_t line, std::size_t column)
        : std::runtime_error(format(message, line, column)),
          message_(std::move(message)),
          line_(line),
          column_(column) {}

    /// The description without the position prefix.
    const std::string& message() const { return message_; }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    static std::string format(const std::string& message, std::size_t line,
                              std::size_t column) {
        if (line == 0) return "parse error: " + message;
        return "parse error at line " + std::to_string(line) + ", column " +
               std::to_string(column) + ": " + message;
    }

    std::string message_;
    std::size_t line_;
    std::size_t column_;
};

/// A guaranteed-by-theorem invariant failed at runtime. Seeing this
/// means a bug in the library, not bad input.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& message)
        : std::logic_error("internal invariant violated: " + message) {}
};

}  // namespace paracert
