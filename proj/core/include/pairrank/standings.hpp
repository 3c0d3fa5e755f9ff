#ifndef PAIRRANK_STANDINGS_HPP
#define PAIRRANK_STANDINGS_HPP

#include <vector>

#include "pairrank/ranking.hpp"
#include "pairrank/tournament.hpp"

namespace pairrank {

/// One line of the official standing. Board points and TB3 are kept in
/// half-points so the tie-break comparison stays exact.
struct StandingRow {
    int team = -1;
    int match_points = 0;    // 2 per won match, 1 per drawn, 0 per lost
    int board_halves = 0;    // own board points, in halves
    int tb3_halves = 0;      // sum of each opponent's total board points
    double rank = 0.0;

    double board_points() const { return board_halves / 2.0; }
    double tb3() const { return tb3_halves / 2.0; }
};

struct OfficialRanking {
    std::vector<StandingRow> rows; // sorted by rank, then team code
    RankVector ranks;              // keyed by team code
};

/// The official lexicographic standing: match points, then board points
/// (TB2), then sum of opponents' board points (TB3). Rows still tied after
/// TB3 share an average rank; no further tie-break is applied.
OfficialRanking official_standings(const Tournament& t);

/// TB3 for one team: over every match the team played, the opponent's
/// tournament-total board points (an opponent met twice counts twice).
/// Throws ValidationError for an unknown team id.
double tb3(const Tournament& t, int team);

} // namespace pairrank

#endif
