#include "pairrank/tournament.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <ostream>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "pairrank/csv.hpp"
#include "pairrank/errors.hpp"

namespace pairrank {

namespace {

bool parse_int(const std::string& s, int& out) {
    if (s.empty()) return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

bool parse_real(const std::string& s, double& out) {
    if (s.empty()) return false;
    try {
        std::size_t consumed = 0;
        out = std::stod(s, &consumed);
        return consumed == s.size();
    } catch (const std::exception&) {
        return false;
    }
}

bool valid_token(const std::string& s) {
    if (s.empty()) return false;
    return std::none_of(s.begin(), s.end(), [](unsigned char c) {
        return c == ',' || std::isspace(c) != 0;
    });
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::vector<Team> parse_teams(std::istream& in) {
    const auto rows = csv::read(in);
    if (rows.empty()) throw ParseError("teams file has no header");

    const auto& header = rows.front().fields;
    if (header.size() < 2 || lower(header[0]) != "id" || lower(header[1]) != "name")
        throw ParseError("teams header must start with 'id,name'", rows.front().line);

    bool seed_format = false;
    if (header.size() == 3 && lower(header[2]) == "seed") {
        seed_format = true;
    } else {
        for (std::size_t c = 2; c < header.size(); ++c) {
            if (lower(header[c]).rfind("rating", 0) != 0)
                throw ParseError("teams header columns after 'name' must be 'seed' or 'rating1,rating2,...'",
                                 rows.front().line);
        }
    }

    std::vector<Team> teams;
    std::unordered_set<std::string> seen;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.fields.size() < 2)
            throw ParseError("team row needs at least 'id,name'", row.line);
        if (row.fields.size() > header.size())
            throw ParseError("team row has more fields than the header", row.line);

        Team team;
        team.id = static_cast<int>(teams.size());
        team.code = row.fields[0];
        team.name = row.fields[1];
        if (!valid_token(team.code))
            throw ParseError("team id must be a non-empty token without commas or spaces", row.line);
        if (!seen.insert(team.code).second)
            throw ValidationError("duplicate team id '" + team.code + "'", row.line);

        if (seed_format) {
            if (row.fields.size() >= 3 && !row.fields[2].empty()) {
                double seed = 0.0;
                if (!parse_real(row.fields[2], seed))
                    throw ParseError("seed is not a number (column 3)", row.line);
                team.seed_rating = seed;
            }
        } else {
            for (std::size_t c = 2; c < row.fields.size(); ++c) {
                if (row.fields[c].empty()) continue;
                int rating = 0;
                if (!parse_int(row.fields[c], rating) || rating < 0)
                    throw ParseError("rating is not a non-negative integer (column " +
                                         std::to_string(c + 1) + ")",
                                     row.line);
                team.player_ratings.push_back(rating);
            }
        }
        teams.push_back(std::move(team));
    }
    return teams;
}

std::vector<MatchResult> parse_results(std::istream& in, const std::vector<Team>& teams,
                                       const ParseOptions& options) {
    const auto rows = csv::read(in);
    if (rows.empty()) throw ParseError("results file has no header");

    const std::vector<std::string> expected = {"round", "team_a", "team_b", "points_a", "points_b"};
    const auto& header = rows.front().fields;
    if (header.size() != expected.size())
        throw ParseError("results header must be 'round,team_a,team_b,points_a,points_b'",
                         rows.front().line);
    for (std::size_t c = 0; c < expected.size(); ++c)
        if (lower(header[c]) != expected[c])
            throw ParseError("results header must be 'round,team_a,team_b,points_a,points_b'",
                             rows.front().line);

    std::unordered_map<std::string, int> id_by_code;
    for (const auto& team : teams) id_by_code[team.code] = team.id;

    const int sum_halves = 2 * options.boards;
    std::vector<MatchResult> matches;
    std::set<std::pair<int, int>> round_slots;     // (round, team)
    std::set<std::pair<int, int>> played_pairs;    // unordered (min, max)

    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.fields.size() != expected.size())
            throw ParseError("result row needs exactly 5 fields", row.line);

        MatchResult match;
        if (!parse_int(row.fields[0], match.round) || match.round <= 0)
            throw ParseError("round must be a positive integer (column 1)", row.line);

        for (int side = 0; side < 2; ++side) {
            const std::string& code = row.fields[1 + static_cast<std::size_t>(side)];
            auto it = id_by_code.find(code);
            if (it == id_by_code.end())
                throw ValidationError("unknown team id '" + code + "' (column " +
                                          std::to_string(side + 2) + ")",
                                      row.line);
            (side == 0 ? match.team_a : match.team_b) = it->second;
        }

        for (int side = 0; side < 2; ++side) {
            const std::string& text = row.fields[3 + static_cast<std::size_t>(side)];
            auto points = BoardPoints::parse(text);
            if (!points)
                throw ParseError("board points '" + text + "' are off the half-point grid (column " +
                                     std::to_string(side + 4) + ")",
                                 row.line);
            (side == 0 ? match.points_a : match.points_b) = *points;
        }

        if (match.team_a == match.team_b)
            throw ValidationError("team '" + teams[static_cast<std::size_t>(match.team_a)].code +
                                      "' plays itself",
                                  row.line);
        if (match.points_a.halves() + match.points_b.halves() != sum_halves)
            throw ValidationError("board points " + match.points_a.str() + ":" +
                                      match.points_b.str() + " do not sum to " +
                                      BoardPoints::from_halves(sum_halves).str(),
                                  row.line);
        if (!round_slots.insert({match.round, match.team_a}).second)
            throw ValidationError("team '" + teams[static_cast<std::size_t>(match.team_a)].code +
                                      "' appears twice in round " + std::to_string(match.round),
                                  row.line);
        if (!round_slots.insert({match.round, match.team_b}).second)
            throw ValidationError("team '" + teams[static_cast<std::size_t>(match.team_b)].code +
                                      "' appears twice in round " + std::to_string(match.round),
                                  row.line);

        const std::pair<int, int> pair{std::min(match.team_a, match.team_b),
                                       std::max(match.team_a, match.team_b)};
        if (!played_pairs.insert(pair).second && options.strict_swiss)
            throw ValidationError("pair '" + teams[static_cast<std::size_t>(pair.first)].code +
                                      "' vs '" + teams[static_cast<std::size_t>(pair.second)].code +
                                      "' meets twice in strict Swiss mode",
                                  row.line);

        matches.push_back(match);
    }
    return matches;
}

} // namespace

Tournament::Tournament(std::vector<Team> teams, std::vector<MatchResult> matches,
                       ParseOptions options)
    : teams_(std::move(teams)), matches_(std::move(matches)), options_(options) {
    if (options_.boards <= 0) throw ValidationError("board count must be positive");

    std::unordered_set<std::string> codes;
    for (std::size_t i = 0; i < teams_.size(); ++i) {
        if (teams_[i].id != static_cast<int>(i))
            throw ValidationError("team ids must be dense and in teams-file order");
        if (!codes.insert(teams_[i].code).second)
            throw ValidationError("duplicate team id '" + teams_[i].code + "'");
    }

    const int sum_halves = 2 * options_.boards;
    std::set<std::pair<int, int>> round_slots;
    std::set<std::pair<int, int>> played_pairs;
    for (const auto& match : matches_) {
        const bool ids_ok = match.team_a >= 0 && match.team_b >= 0 &&
                            match.team_a < static_cast<int>(teams_.size()) &&
                            match.team_b < static_cast<int>(teams_.size());
        if (!ids_ok) throw ValidationError("match references a team id outside the team list");
        if (match.team_a == match.team_b) throw ValidationError("a team cannot play itself");
        if (match.round <= 0) throw ValidationError("round numbers must be positive");
        if (match.points_a.halves() < 0 || match.points_b.halves() < 0 ||
            match.points_a.halves() + match.points_b.halves() != sum_halves)
            throw ValidationError("board points must sum to " +
                                  BoardPoints::from_halves(sum_halves).str());
        if (!round_slots.insert({match.round, match.team_a}).second ||
            !round_slots.insert({match.round, match.team_b}).second)
            throw ValidationError("a team appears twice in one round");
        const std::pair<int, int> pair{std::min(match.team_a, match.team_b),
                                       std::max(match.team_a, match.team_b)};
        if (!played_pairs.insert(pair).second && options_.strict_swiss)
            throw ValidationError("an unordered pair meets twice in strict Swiss mode");
        rounds_ = std::max(rounds_, match.round);
    }
}

int Tournament::find_team(const std::string& code) const {
    for (const auto& team : teams_)
        if (team.code == code) return team.id;
    return -1;
}

Tournament parse_tournament(std::istream& teams_source, std::istream& results_source,
                            const ParseOptions& options) {
    auto teams = parse_teams(teams_source);
    auto matches = parse_results(results_source, teams, options);
    return Tournament(std::move(teams), std::move(matches), options);
}

void write_teams_csv(const Tournament& t, std::ostream& out) {
    const bool any_ratings = std::any_of(t.teams().begin(), t.teams().end(),
                                         [](const Team& x) { return !x.player_ratings.empty(); });
    const bool any_seed = std::any_of(t.teams().begin(), t.teams().end(),
                                      [](const Team& x) { return x.seed_rating.has_value(); });
    if (any_ratings && any_seed)
        throw ValidationError("cannot serialize a team list mixing seeds and player ratings");

    if (any_ratings) {
        std::size_t columns = 0;
        for (const auto& team : t.teams())
            columns = std::max(columns, team.player_ratings.size());
        out << "id,name";
        for (std::size_t c = 1; c <= columns; ++c) out << ",rating" << c;
        out << "\n";
        for (const auto& team : t.teams()) {
            out << team.code << "," << team.name;
            for (std::size_t c = 0; c < columns; ++c) {
                out << ",";
                if (c < team.player_ratings.size()) out << team.player_ratings[c];
            }
            out << "\n";
        }
    } else {
        out << "id,name,seed\n";
        for (const auto& team : t.teams()) {
            out << team.code << "," << team.name << ",";
            if (team.seed_rating) {
                char buffer[64];
                std::snprintf(buffer, sizeof buffer, "%.10g", *team.seed_rating);
                out << buffer;
            }
            out << "\n";
        }
    }
}

void write_results_csv(const Tournament& t, std::ostream& out) {
    out << "round,team_a,team_b,points_a,points_b\n";
    for (const auto& match : t.matches()) {
        out << match.round << ","
            << t.team(match.team_a).code << "," << t.team(match.team_b).code << ","
            << match.points_a.str() << "," << match.points_b.str() << "\n";
    }
}

CoverageStats match_count_fraction(const Tournament& t) {
    std::set<std::pair<int, int>> pairs;
    for (const auto& match : t.matches())
        pairs.insert({std::min(match.team_a, match.team_b), std::max(match.team_a, match.team_b)});

    CoverageStats stats;
    stats.known = pairs.size();
    const std::size_t n = t.team_count();
    stats.total = n * (n - (n ? 1 : 0)) / 2;
    stats.fraction = stats.total ? static_cast<double>(stats.known) / static_cast<double>(stats.total)
                                 : 1.0;
    return stats;
}

StartRanking start_ranking(const Tournament& t) {
    std::vector<double> scores(t.team_count(), 0.0);
    for (const auto& team : t.teams()) {
        if (team.player_ratings.size() >= 4) {
            std::vector<int> sorted = team.player_ratings;
            std::sort(sorted.begin(), sorted.end(), std::greater<>());
            scores[static_cast<std::size_t>(team.id)] =
                (sorted[0] + sorted[1] + sorted[2] + sorted[3]) / 4.0;
        } else if (team.seed_rating) {
            scores[static_cast<std::size_t>(team.id)] = *team.seed_rating;
        } else {
            throw ValidationError("team '" + team.code +
                                  "' has neither four player ratings nor a seed");
        }
    }

    const std::vector<double> ranks = ranks_descending(scores);

    StartRanking result;
    for (const auto& team : t.teams()) {
        const auto i = static_cast<std::size_t>(team.id);
        result.rows.push_back(StartRow{team.id, scores[i], ranks[i]});
        result.ranks[team.code] = ranks[i];
    }
    std::sort(result.rows.begin(), result.rows.end(), [&](const StartRow& a, const StartRow& b) {
        if (a.rank != b.rank) return a.rank < b.rank;
        return t.team(a.team).code < t.team(b.team).code;
    });
    return result;
}

} // namespace pairrank
