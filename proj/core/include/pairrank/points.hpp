#ifndef PAIRRANK_POINTS_HPP
#define PAIRRANK_POINTS_HPP

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace pairrank {

/// Board points of one side of a team match, stored as integer half-points so
/// that grid and sum checks stay exact. "2.5" board points == 5 halves.
class BoardPoints {
public:
    BoardPoints() = default;

    static BoardPoints from_halves(int halves) { return BoardPoints(halves); }

    /// Parses a decimal on the half-point grid: "3", "3.0", "2.5".
    /// Returns nullopt for anything else (negative, off-grid, garbage).
    static std::optional<BoardPoints> parse(std::string_view text);

    int halves() const { return halves_; }
    double value() const { return halves_ / 2.0; }

    /// Renders back to the external decimal form: 6 halves -> "3", 5 -> "2.5".
    std::string str() const;

    auto operator<=>(const BoardPoints&) const = default;

private:
    explicit BoardPoints(int halves) : halves_(halves) {}
    int halves_ = 0;
};

} // namespace pairrank

#endif
