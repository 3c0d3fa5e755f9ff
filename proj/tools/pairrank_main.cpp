// pairrank: rank Swiss-system team tournaments from pairwise comparison
// matrices, next to the official lexicographic standing, and compare the two.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pairrank/analysis.hpp"
#include "pairrank/csv.hpp"
#include "pairrank/errors.hpp"
#include "pairrank/llsm.hpp"
#include "pairrank/matrix.hpp"
#include "pairrank/scale.hpp"
#include "pairrank/standings.hpp"
#include "pairrank/tournament.hpp"

namespace {

using nlohmann::json;
using namespace pairrank;

constexpr const char* kSchemaTag = "pairrank/1";

// exit codes: keep parse, validation and solver preconditions distinct
enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kIoError = 2,
    kParseError = 3,
    kValidationError = 4,
    kSolverPrecondition = 5,
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string teams_path;
    std::string results_path;
    std::string scale_selector = "pc1"; // pc1|pc2|pc3|pc4|custom:<path>
    std::string format = "csv";         // csv|json
    bool strict_swiss = true;
    int boards = 4;
    int threshold = 6;                  // compare only
    std::string official_override;      // compare only
    std::vector<std::string> ranking_names; // compare only
};

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    return in;
}

Tournament load_tournament(const RunConfig& config) {
    auto teams = open_or_throw(config.teams_path);
    auto results = open_or_throw(config.results_path);
    return parse_tournament(teams, results,
                            ParseOptions{config.strict_swiss, config.boards});
}

ComparisonScale resolve_scale(const std::string& selector) {
    if (selector.rfind("custom:", 0) == 0) {
        const std::string path = selector.substr(7);
        auto in = open_or_throw(path);
        return load_scale_csv(in);
    }
    return builtin_scale(selector);
}

std::string fmt(const char* spec, double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, spec, value);
    return buffer;
}

std::string fmt_rank(double rank) {
    if (rank == static_cast<double>(static_cast<long long>(rank)))
        return std::to_string(static_cast<long long>(rank));
    return fmt("%.1f", rank);
}

std::string fmt_weight(double w) { return fmt("%.10g", w); }
std::string fmt_corr(double c) { return fmt("%.4f", c); }

double round4(double c) { return std::stod(fmt_corr(c)); }

// ---------------------------------------------------------------------------
// validate

void cmd_validate(const RunConfig& config, std::ostream& out) {
    const Tournament t = load_tournament(config);
    const CoverageStats coverage = match_count_fraction(t);
    const ResultDistribution distribution = result_distribution(t);

    const auto components = connected_components(comparison_graph(t));
    const bool connected = components.size() == 1;

    if (config.format == "json") {
        json doc;
        doc["schema"] = kSchemaTag;
        doc["command"] = "validate";
        doc["teams"] = t.team_count();
        doc["matches"] = t.matches().size();
        doc["rounds"] = t.rounds();
        doc["pairs_known"] = coverage.known;
        doc["pairs_total"] = coverage.total;
        doc["pair_fraction"] = coverage.fraction;
        doc["connected"] = connected;
        json comps = json::array();
        for (const auto& component : components) {
            json names = json::array();
            for (std::size_t v : component) names.push_back(t.team(static_cast<int>(v)).code);
            comps.push_back(names);
        }
        doc["components"] = comps;
        json outcomes = json::object();
        for (const auto& [halves, count] : distribution.count_by_winner_halves)
            outcomes[ResultDistribution::outcome_label(halves, distribution.boards)] = count;
        doc["result_distribution"] = outcomes;
        out << doc.dump(2) << "\n";
    } else {
        out << "key,value\n";
        out << "teams," << t.team_count() << "\n";
        out << "matches," << t.matches().size() << "\n";
        out << "rounds," << t.rounds() << "\n";
        out << "pairs_known," << coverage.known << "\n";
        out << "pairs_total," << coverage.total << "\n";
        out << "pair_fraction," << fmt("%.4f", coverage.fraction) << "\n";
        out << "connected," << (connected ? "true" : "false") << "\n";
        out << "components," << components.size() << "\n";
        std::size_t index = 0;
        for (const auto& component : components) {
            if (connected) break; // only list members when something is wrong
            out << "component_" << ++index << ",";
            for (std::size_t k = 0; k < component.size(); ++k)
                out << (k ? ";" : "") << t.team(static_cast<int>(component[k])).code;
            out << "\n";
        }
        for (const auto& [halves, count] : distribution.count_by_winner_halves)
            out << "outcome_" << ResultDistribution::outcome_label(halves, distribution.boards)
                << "," << count << "\n";
    }

    if (!connected)
        throw ValidationError("comparison graph is disconnected (" +
                              std::to_string(components.size()) + " components)");
}

// ---------------------------------------------------------------------------
// rank

void cmd_rank(const RunConfig& config, std::ostream& out) {
    const Tournament t = load_tournament(config);
    const ComparisonScale scale = resolve_scale(config.scale_selector);
    const WeightVector weights = solve_llsm(build_matrix(t, scale));
    const RankVector ranks = ranking_from_weights(weights);

    struct Line {
        std::string team, name;
        double weight, rank;
    };
    std::vector<Line> lines;
    for (std::size_t i = 0; i < weights.labels.size(); ++i) {
        const auto& code = weights.labels[i];
        lines.push_back({code, t.team(t.find_team(code)).name, weights.weights[i],
                         ranks.at(code)});
    }
    std::sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) {
        if (a.rank != b.rank) return a.rank < b.rank;
        return a.team < b.team;
    });

    if (config.format == "json") {
        json doc;
        doc["schema"] = kSchemaTag;
        doc["command"] = "rank";
        doc["scale"] = scale.name();
        doc["objective_value"] = weights.objective_value;
        doc["residual_norm"] = weights.residual_norm;
        json rows = json::array();
        for (const auto& line : lines)
            rows.push_back({{"team", line.team},
                            {"name", line.name},
                            {"weight", line.weight},
                            {"rank", line.rank}});
        doc["rows"] = rows;
        out << doc.dump(2) << "\n";
    } else {
        out << "team,name,weight,rank\n";
        for (const auto& line : lines)
            out << line.team << "," << line.name << "," << fmt_weight(line.weight) << ","
                << fmt_rank(line.rank) << "\n";
    }
}

// ---------------------------------------------------------------------------
// official

void cmd_official(const RunConfig& config, std::ostream& out) {
    const Tournament t = load_tournament(config);
    const OfficialRanking standings = official_standings(t);

    if (config.format == "json") {
        json doc;
        doc["schema"] = kSchemaTag;
        doc["command"] = "official";
        json rows = json::array();
        for (const auto& row : standings.rows)
            rows.push_back({{"team", t.team(row.team).code},
                            {"name", t.team(row.team).name},
                            {"match_points", row.match_points},
                            {"board_points", row.board_points()},
                            {"tb3", row.tb3()},
                            {"rank", row.rank}});
        doc["rows"] = rows;
        out << doc.dump(2) << "\n";
    } else {
        out << "team,name,match_points,board_points,tb3,rank\n";
        for (const auto& row : standings.rows)
            out << t.team(row.team).code << "," << t.team(row.team).name << ","
                << row.match_points << "," << BoardPoints::from_halves(row.board_halves).str()
                << "," << BoardPoints::from_halves(row.tb3_halves).str() << ","
                << fmt_rank(row.rank) << "\n";
    }
}

// ---------------------------------------------------------------------------
// compare

RankVector load_official_override(const std::string& path) {
    auto in = open_or_throw(path);
    const auto rows = csv::read(in);
    if (rows.empty()) throw ParseError("official override file has no header");
    const auto& header = rows.front().fields;
    if (header.size() != 2 || header[0] != "team" || header[1] != "rank")
        throw ParseError("official override header must be 'team,rank'", rows.front().line);

    RankVector ranks;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.fields.size() != 2)
            throw ParseError("override row needs exactly 'team,rank'", row.line);
        double rank = 0.0;
        try {
            std::size_t consumed = 0;
            rank = std::stod(row.fields[1], &consumed);
            if (consumed != row.fields[1].size()) throw std::invalid_argument("trailing junk");
        } catch (const std::exception&) {
            throw ParseError("rank '" + row.fields[1] + "' is not a number", row.line);
        }
        if (!ranks.emplace(row.fields[0], rank).second)
            throw ValidationError("duplicate team '" + row.fields[0] + "' in override", row.line);
    }
    return ranks;
}

RankVector ranking_by_name(const std::string& name, const Tournament& t,
                           const RunConfig& config,
                           std::map<std::string, RankVector>& cache) {
    auto it = cache.find(name);
    if (it != cache.end()) return it->second;

    RankVector ranks;
    if (name == "start") {
        ranks = start_ranking(t).ranks;
    } else if (name == "final") {
        ranks = config.official_override.empty()
                    ? official_standings(t).ranks
                    : load_official_override(config.official_override);
    } else if (name == "pc1" || name == "pc2" || name == "pc3" || name == "pc4") {
        ranks = ranking_from_weights(solve_llsm(build_matrix(t, builtin_scale(name))));
    } else if (name == "custom") {
        if (config.scale_selector.rfind("custom:", 0) != 0)
            throw ValidationError("ranking 'custom' needs --scale custom:<path>");
        ranks = ranking_from_weights(
            solve_llsm(build_matrix(t, resolve_scale(config.scale_selector))));
    } else {
        throw ValidationError("unknown ranking '" + name +
                              "' (expected start, final, pc1..pc4 or custom)");
    }
    cache[name] = ranks;
    return ranks;
}

void cmd_compare(const RunConfig& config, std::ostream& out) {
    const Tournament t = load_tournament(config);

    std::map<std::string, RankVector> cache;
    std::vector<RankVector> rankings;
    for (const auto& name : config.ranking_names)
        rankings.push_back(ranking_by_name(name, t, config, cache));

    const CorrelationMatrix matrix = compare_rankings(config.ranking_names, rankings);
    const double threshold = config.threshold;

    if (config.format == "json") {
        json doc;
        doc["schema"] = kSchemaTag;
        doc["command"] = "compare";
        doc["names"] = config.ranking_names;
        doc["threshold"] = config.threshold;
        json correlations = json::array();
        for (const auto& row : matrix.cells) {
            json cells = json::array();
            for (const auto& cell : row) cells.push_back(round4(cell.coefficient));
            correlations.push_back(cells);
        }
        doc["correlations"] = correlations;
        json tie_flags = json::array();
        for (const auto& row : matrix.cells) {
            json cells = json::array();
            for (const auto& cell : row) cells.push_back(cell.tie_adjusted);
            tie_flags.push_back(cells);
        }
        doc["tie_adjusted"] = tie_flags;

        json discrepancies = json::array();
        json scatter = json::array();
        for (std::size_t i = 0; i < rankings.size(); ++i) {
            for (std::size_t j = i + 1; j < rankings.size(); ++j) {
                json teams = json::array();
                for (const auto& d : discrepancy_report(rankings[i], rankings[j], threshold))
                    teams.push_back({{"team", d.team},
                                     {"rank_a", d.rank_a},
                                     {"rank_b", d.rank_b},
                                     {"delta", d.delta}});
                discrepancies.push_back({{"a", config.ranking_names[i]},
                                         {"b", config.ranking_names[j]},
                                         {"teams", teams}});
                json points = json::array();
                for (const auto& p : scatter_data(rankings[i], rankings[j]))
                    points.push_back({{"team", p.team},
                                      {"rank_a", p.rank_a},
                                      {"rank_b", p.rank_b}});
                scatter.push_back({{"a", config.ranking_names[i]},
                                   {"b", config.ranking_names[j]},
                                   {"points", points}});
            }
        }
        doc["discrepancies"] = discrepancies;
        doc["scatter"] = scatter;
        out << doc.dump(2) << "\n";
    } else {
        out << "# correlations\n";
        out << "name";
        for (const auto& name : matrix.names) out << "," << name;
        out << "\n";
        for (std::size_t i = 0; i < matrix.names.size(); ++i) {
            out << matrix.names[i];
            for (std::size_t j = 0; j < matrix.names.size(); ++j)
                out << "," << fmt_corr(matrix.cells[i][j].coefficient);
            out << "\n";
        }
        for (std::size_t i = 0; i < rankings.size(); ++i) {
            for (std::size_t j = i + 1; j < rankings.size(); ++j) {
                const auto& a = config.ranking_names[i];
                const auto& b = config.ranking_names[j];
                out << "# discrepancies " << a << " vs " << b << " (threshold "
                    << config.threshold << ")\n";
                out << "team,rank_" << a << ",rank_" << b << ",delta\n";
                for (const auto& d : discrepancy_report(rankings[i], rankings[j], threshold))
                    out << d.team << "," << fmt_rank(d.rank_a) << "," << fmt_rank(d.rank_b)
                        << "," << fmt("%g", d.delta) << "\n";
            }
        }
        for (std::size_t i = 0; i < rankings.size(); ++i) {
            for (std::size_t j = i + 1; j < rankings.size(); ++j) {
                const auto& a = config.ranking_names[i];
                const auto& b = config.ranking_names[j];
                out << "# scatter " << a << " vs " << b << "\n";
                out << "team,rank_" << a << ",rank_" << b << "\n";
                for (const auto& p : scatter_data(rankings[i], rankings[j]))
                    out << p.team << "," << fmt_rank(p.rank_a) << "," << fmt_rank(p.rank_b)
                        << "\n";
            }
        }
    }
}

// ---------------------------------------------------------------------------
// triads

void cmd_triads(const RunConfig& config, std::ostream& out) {
    const Tournament t = load_tournament(config);
    const ComparisonScale scale = resolve_scale(config.scale_selector);
    const IncompletePairwiseMatrix m = build_matrix(t, scale);
    const std::vector<Triad> triads = circular_triads(m);

    // score of the pair (x beats y) from x's perspective; repeats join with '+'
    auto score_text = [&](std::size_t x, std::size_t y) {
        std::string text;
        for (const auto& match : t.matches()) {
            const auto a = static_cast<std::size_t>(match.team_a);
            const auto b = static_cast<std::size_t>(match.team_b);
            if ((a == x && b == y) || (a == y && b == x)) {
                const BoardPoints mine = a == x ? match.points_a : match.points_b;
                const BoardPoints theirs = a == x ? match.points_b : match.points_a;
                if (!text.empty()) text += "+";
                text += mine.str() + ":" + theirs.str();
            }
        }
        return text;
    };

    if (config.format == "json") {
        json doc;
        doc["schema"] = kSchemaTag;
        doc["command"] = "triads";
        doc["scale"] = scale.name();
        json rows = json::array();
        for (const auto& triad : triads) {
            rows.push_back({{"teams",
                             {m.labels()[triad.i], m.labels()[triad.j], m.labels()[triad.k]}},
                            {"scores",
                             {score_text(triad.i, triad.j), score_text(triad.j, triad.k),
                              score_text(triad.k, triad.i)}},
                            {"ratios",
                             {m.at(triad.i, triad.j), m.at(triad.j, triad.k),
                              m.at(triad.k, triad.i)}}});
        }
        doc["triads"] = rows;
        out << doc.dump(2) << "\n";
    } else {
        out << "a,b,c,score_ab,score_bc,score_ca,ratio_ab,ratio_bc,ratio_ca\n";
        for (const auto& triad : triads) {
            out << m.labels()[triad.i] << "," << m.labels()[triad.j] << ","
                << m.labels()[triad.k] << "," << score_text(triad.i, triad.j) << ","
                << score_text(triad.j, triad.k) << "," << score_text(triad.k, triad.i) << ","
                << fmt("%g", m.at(triad.i, triad.j)) << ","
                << fmt("%g", m.at(triad.j, triad.k)) << ","
                << fmt("%g", m.at(triad.k, triad.i)) << "\n";
        }
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pairwise-comparison ranking for Swiss-system team tournaments"};
    app.require_subcommand(1);

    RunConfig config;
    std::string command;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--teams", config.teams_path, "teams CSV path")->required();
        sub->add_option("--results", config.results_path, "results CSV path")->required();
        sub->add_option("--format", config.format, "output format")
            ->check(CLI::IsMember({"csv", "json"}))
            ->capture_default_str();
        sub->add_flag_callback(
            "--no-strict-swiss", [&] { config.strict_swiss = false; },
            "allow repeated pairings (round robins with rematches)");
        sub->add_option("--boards", config.boards, "boards per match")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        sub->callback([&, sub] { command = sub->get_name(); });
        return sub;
    };
    auto add_scale = [&](CLI::App* sub) {
        sub->add_option("--scale", config.scale_selector,
                        "comparison scale: pc1|pc2|pc3|pc4|custom:<path>")
            ->capture_default_str();
    };

    add_common(app.add_subcommand("validate", "parse inputs and check invariants"));
    add_scale(add_common(app.add_subcommand("rank", "LLSM ranking under a scale")));
    add_common(app.add_subcommand("official", "official standings (match points, TB2, TB3)"));
    auto* compare =
        add_common(app.add_subcommand("compare", "correlate and diff rankings"));
    add_scale(compare);
    compare->add_option("--threshold", config.threshold,
                        "minimum |rank difference| for the discrepancy report")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    compare->add_option("--official-override", config.official_override,
                        "use an external official ranking CSV as 'final'");
    compare->add_option("names", config.ranking_names,
                        "rankings to compare: start|final|pc1|pc2|pc3|pc4|custom")
        ->expected(2, 7);
    add_scale(add_common(app.add_subcommand("triads", "list circular triads")));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kUsage;
    }

    try {
        if (command == "validate") cmd_validate(config, std::cout);
        else if (command == "rank") cmd_rank(config, std::cout);
        else if (command == "official") cmd_official(config, std::cout);
        else if (command == "compare") cmd_compare(config, std::cout);
        else if (command == "triads") cmd_triads(config, std::cout);
        return kOk;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIoError;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParseError;
    } catch (const DisconnectedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kSolverPrecondition;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kValidationError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kUsage;
    }
}
