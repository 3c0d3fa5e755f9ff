#ifndef PAIRRANK_SCALE_HPP
#define PAIRRANK_SCALE_HPP

#include <iosfwd>
#include <map>
#include <string>

#include "pairrank/points.hpp"

namespace pairrank {

/// Maps the winner's board points of a decided match to a comparison ratio
/// > 1; drawn matches always map to 1. Keyed by winner points only: with
/// board points summing to the board count, the loser column is redundant.
class ComparisonScale {
public:
    ComparisonScale() = default;
    ComparisonScale(std::string name, std::map<int, double> ratio_by_winner_halves);

    const std::string& name() const { return name_; }

    /// True when every winning score b with boards/2 < b <= boards has a ratio.
    bool covers_board_count(int boards) const;

    bool contains(BoardPoints winner_points) const {
        return ratios_.count(winner_points.halves()) > 0;
    }

    /// Ratio for a match the winner took with `winner_points`; throws
    /// ValidationError when the score is outside the scale's domain.
    double ratio(BoardPoints winner_points) const;

    static constexpr double draw_ratio = 1.0;

    const std::map<int, double>& ratios_by_winner_halves() const { return ratios_; }

private:
    std::string name_;
    std::map<int, double> ratios_; // winner half-points -> ratio > 1
};

/// The four built-in transformation scales ("pc1".."pc4", case-insensitive).
/// Throws ValidationError for any other name.
ComparisonScale builtin_scale(const std::string& name);

/// Loads a custom scale from CSV with header `winner_points,ratio`, one row
/// per winning score; ratios must exceed 1. The draw ratio is fixed at 1 and
/// never listed.
ComparisonScale load_scale_csv(std::istream& in, std::string name = "custom");

} // namespace pairrank

#endif
