#ifndef PAIRRANK_ERRORS_HPP
#define PAIRRANK_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace pairrank {

/// Malformed input file: bad header, unparseable field, off-grid number.
/// Carries the 1-based line number (0 when not tied to a line).
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message
                                  : message),
          line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Semantic violation of a tournament or ranking invariant: unknown team,
/// repeated pairing in strict mode, missing seed data, mismatched team sets.
class ValidationError : public std::runtime_error {
public:
    ValidationError(std::string message, std::size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message
                                  : message),
          line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Solver precondition failure: the comparison graph is not connected, so the
/// weight vector is not unique. Carries the offending components by label.
class DisconnectedError : public std::runtime_error {
public:
    DisconnectedError(std::string message, std::vector<std::vector<std::string>> components)
        : std::runtime_error(std::move(message)), components_(std::move(components)) {}

    const std::vector<std::vector<std::string>>& components() const { return components_; }

private:
    std::vector<std::vector<std::string>> components_;
};

} // namespace pairrank

#endif
