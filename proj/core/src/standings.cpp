#include "pairrank/standings.hpp"

#include <algorithm>
#include <tuple>

#include "pairrank/errors.hpp"

namespace pairrank {

namespace {

struct Tally {
    int match_points = 0;
    int board_halves = 0;
};

std::vector<Tally> tally_matches(const Tournament& t) {
    std::vector<Tally> tallies(t.team_count());
    for (const auto& match : t.matches()) {
        auto& a = tallies[static_cast<std::size_t>(match.team_a)];
        auto& b = tallies[static_cast<std::size_t>(match.team_b)];
        a.board_halves += match.points_a.halves();
        b.board_halves += match.points_b.halves();
        if (match.drawn()) {
            a.match_points += 1;
            b.match_points += 1;
        } else {
            (match.winner() == match.team_a ? a : b).match_points += 2;
        }
    }
    return tallies;
}

} // namespace

OfficialRanking official_standings(const Tournament& t) {
    const auto tallies = tally_matches(t);

    std::vector<int> tb3_halves(t.team_count(), 0);
    for (const auto& match : t.matches()) {
        tb3_halves[static_cast<std::size_t>(match.team_a)] +=
            tallies[static_cast<std::size_t>(match.team_b)].board_halves;
        tb3_halves[static_cast<std::size_t>(match.team_b)] +=
            tallies[static_cast<std::size_t>(match.team_a)].board_halves;
    }

    auto key = [&](std::size_t i) {
        return std::tuple(tallies[i].match_points, tallies[i].board_halves, tb3_halves[i]);
    };
    const std::vector<double> ranks = average_ranks(
        t.team_count(),
        [&](std::size_t a, std::size_t b) { return key(a) > key(b); },
        [&](std::size_t a, std::size_t b) { return key(a) == key(b); });

    OfficialRanking result;
    for (const auto& team : t.teams()) {
        const auto i = static_cast<std::size_t>(team.id);
        result.rows.push_back(StandingRow{team.id, tallies[i].match_points,
                                          tallies[i].board_halves, tb3_halves[i], ranks[i]});
        result.ranks[team.code] = ranks[i];
    }
    std::sort(result.rows.begin(), result.rows.end(),
              [&](const StandingRow& a, const StandingRow& b) {
                  if (a.rank != b.rank) return a.rank < b.rank;
                  return t.team(a.team).code < t.team(b.team).code;
              });
    return result;
}

double tb3(const Tournament& t, int team) {
    if (team < 0 || team >= static_cast<int>(t.team_count()))
        throw ValidationError("unknown team id " + std::to_string(team));

    const auto tallies = tally_matches(t);
    int halves = 0;
    for (const auto& match : t.matches()) {
        if (match.team_a == team)
            halves += tallies[static_cast<std::size_t>(match.team_b)].board_halves;
        else if (match.team_b == team)
            halves += tallies[static_cast<std::size_t>(match.team_a)].board_halves;
    }
    return halves / 2.0;
}

} // namespace pairrank
