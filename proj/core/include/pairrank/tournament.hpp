#ifndef PAIRRANK_TOURNAMENT_HPP
#define PAIRRANK_TOURNAMENT_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pairrank/points.hpp"
#include "pairrank/ranking.hpp"

namespace pairrank {

/// A participating team. `id` is the dense index assigned in teams-file
/// order and is the identifier used throughout the library; `code` is the
/// external token ("AZE") the data files use.
struct Team {
    int id = -1;
    std::string code;
    std::string name;
    std::vector<int> player_ratings;   // empty when the file carries seeds
    std::optional<double> seed_rating; // precomputed seed strength

    /// True when the team can appear in the start ranking: at least four
    /// player ratings or an explicit seed.
    bool has_seed_info() const {
        return seed_rating.has_value() || player_ratings.size() >= 4;
    }
};

struct MatchResult {
    int round = 0;
    int team_a = -1;
    int team_b = -1;
    BoardPoints points_a;
    BoardPoints points_b;

    bool drawn() const { return points_a == points_b; }
    /// Winner's team id; call only on decided matches.
    int winner() const { return points_a > points_b ? team_a : team_b; }
    int loser() const { return points_a > points_b ? team_b : team_a; }
    BoardPoints winner_points() const { return points_a > points_b ? points_a : points_b; }
};

struct ParseOptions {
    bool strict_swiss = true; // each unordered pair meets at most once
    int boards = 4;           // board points per match sum to this
};

/// Immutable tournament: teams in file order, validated match list.
class Tournament {
public:
    Tournament(std::vector<Team> teams, std::vector<MatchResult> matches, ParseOptions options);

    const std::vector<Team>& teams() const { return teams_; }
    const std::vector<MatchResult>& matches() const { return matches_; }
    int rounds() const { return rounds_; }
    int boards() const { return options_.boards; }
    bool strict_swiss() const { return options_.strict_swiss; }

    const Team& team(int id) const { return teams_.at(static_cast<std::size_t>(id)); }
    /// Id for an external token, or -1 if unknown.
    int find_team(const std::string& code) const;

    std::size_t team_count() const { return teams_.size(); }

private:
    std::vector<Team> teams_;
    std::vector<MatchResult> matches_;
    ParseOptions options_;
    int rounds_ = 0;
};

/// Parses and validates the two CSV sources (see README for the formats).
/// Throws ParseError for malformed rows and ValidationError for semantic
/// violations (unknown team, duplicate pairing in strict mode, ...), both
/// carrying the offending line number.
Tournament parse_tournament(std::istream& teams_source, std::istream& results_source,
                            const ParseOptions& options = {});

/// Serializers producing the same dialect `parse_tournament` accepts;
/// parse(write(t)) reproduces the tournament exactly.
void write_teams_csv(const Tournament& t, std::ostream& out);
void write_results_csv(const Tournament& t, std::ostream& out);

struct CoverageStats {
    std::size_t known = 0; // distinct compared pairs
    std::size_t total = 0; // n(n-1)/2
    double fraction = 0.0;
};

/// How much of the full pairwise comparison set the matches cover.
CoverageStats match_count_fraction(const Tournament& t);

struct StartRow {
    int team = -1;
    double score = 0.0; // mean of the 4 highest ratings, or the seed
    double rank = 0.0;
};

struct StartRanking {
    std::vector<StartRow> rows; // sorted by rank, then team code
    RankVector ranks;           // keyed by team code
};

/// Pre-tournament reference ranking: descending by the average of each
/// team's four highest player ratings (seed_rating when given); ties get
/// average ranks. Throws ValidationError when a team has neither.
StartRanking start_ranking(const Tournament& t);

} // namespace pairrank

#endif
