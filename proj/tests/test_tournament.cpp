#include <doctest.h>

#include <random>
#include <sstream>

#include "pairrank/errors.hpp"
#include "pairrank/points.hpp"
#include "pairrank/tournament.hpp"
#include "support/generators.hpp"

using namespace pairrank;

namespace {

Tournament parse(const std::string& teams, const std::string& results,
                 ParseOptions options = {}) {
    std::istringstream teams_in(teams);
    std::istringstream results_in(results);
    return parse_tournament(teams_in, results_in, options);
}

const std::string kTeams3 =
    "id,name,seed\n"
    "AZE,Azerbaijan,2732.5\n"
    "GER,Germany,2665.5\n"
    "ISR,Israel,2668.75\n";

} // namespace

TEST_CASE("board points parse on the half grid only") {
    CHECK(BoardPoints::parse("2.5")->halves() == 5);
    CHECK(BoardPoints::parse("4")->halves() == 8);
    CHECK(BoardPoints::parse("0")->halves() == 0);
    CHECK(BoardPoints::parse("3.0")->halves() == 6);
    CHECK_FALSE(BoardPoints::parse("2.4").has_value());
    CHECK_FALSE(BoardPoints::parse("-1").has_value());
    CHECK_FALSE(BoardPoints::parse("2.").has_value());
    CHECK_FALSE(BoardPoints::parse("x").has_value());
    CHECK_FALSE(BoardPoints::parse("").has_value());
    CHECK(BoardPoints::from_halves(5).str() == "2.5");
    CHECK(BoardPoints::from_halves(8).str() == "4");
}

TEST_CASE("rows map directly onto match results") {
    const auto t = parse(kTeams3,
                         "round,team_a,team_b,points_a,points_b\n"
                         "1,AZE,GER,2.5,1.5\n"
                         "3,GER,ISR,2,2\n");
    REQUIRE(t.matches().size() == 2);

    const auto& first = t.matches()[0];
    CHECK(first.round == 1);
    CHECK(t.team(first.team_a).code == "AZE");
    CHECK(t.team(first.team_b).code == "GER");
    CHECK(first.points_a.halves() == 5);
    CHECK(first.points_b.halves() == 3);
    CHECK_FALSE(first.drawn());
    CHECK(t.team(first.winner()).code == "AZE");

    const auto& second = t.matches()[1];
    CHECK(second.drawn());
    CHECK(second.points_a.value() == 2.0);
    CHECK(t.rounds() == 3);
}

TEST_CASE("parser rejects a team playing itself") {
    CHECK_THROWS_AS(parse(kTeams3,
                          "round,team_a,team_b,points_a,points_b\n"
                          "1,AZE,AZE,4,0\n"),
                    ValidationError);
}

TEST_CASE("parser reports the offending line") {
    try {
        parse(kTeams3,
              "round,team_a,team_b,points_a,points_b\n"
              "1,AZE,GER,2.5,1.5\n"
              "2,AZE,ISR,2.25,1.75\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }

    try {
        parse(kTeams3,
              "round,team_a,team_b,points_a,points_b\n"
              "1,AZE,XXX,3,1\n");
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()).find("XXX") != std::string::npos);
    }
}

TEST_CASE("parser enforces the board-point sum and round uniqueness") {
    CHECK_THROWS_AS(parse(kTeams3,
                          "round,team_a,team_b,points_a,points_b\n"
                          "1,AZE,GER,3,0.5\n"),
                    ValidationError);
    CHECK_THROWS_AS(parse(kTeams3,
                          "round,team_a,team_b,points_a,points_b\n"
                          "1,AZE,GER,2,2\n"
                          "1,AZE,ISR,2,2\n"),
                    ValidationError);
    // same pair twice: rejected in strict mode, fine otherwise
    const std::string repeats =
        "round,team_a,team_b,points_a,points_b\n"
        "1,AZE,GER,2,2\n"
        "2,GER,AZE,3,1\n";
    CHECK_THROWS_AS(parse(kTeams3, repeats), ValidationError);
    CHECK_NOTHROW(parse(kTeams3, repeats, ParseOptions{false, 4}));
}

TEST_CASE("board count is configurable") {
    const std::string results =
        "round,team_a,team_b,points_a,points_b\n"
        "1,AZE,GER,4,2\n";
    CHECK_THROWS_AS(parse(kTeams3, results), ValidationError);
    const auto t = parse(kTeams3, results, ParseOptions{true, 6});
    CHECK(t.boards() == 6);
    CHECK(t.matches()[0].points_a.value() == 4.0);
}

TEST_CASE("comment lines and header variants") {
    const auto t = parse(
        "# teams of the event\n"
        "id,name,rating1,rating2,rating3,rating4,rating5\n"
        "AZE,Azerbaijan,2781,2757,2733,2659,2625\n"
        "GER,Germany,2712,2659,2659,2632,\n",
        "round,team_a,team_b,points_a,points_b\n"
        "# round one\n"
        "1,AZE,GER,2.5,1.5\n");
    CHECK(t.team_count() == 2);
    CHECK(t.team(0).player_ratings.size() == 5);
    CHECK(t.team(1).player_ratings.size() == 4);

    CHECK_THROWS_AS(parse("id,team\nAZE,Azerbaijan\n", "round,team_a,team_b,points_a,points_b\n"),
                    ParseError);
    CHECK_THROWS_AS(parse(kTeams3, "round,a,b,pa,pb\n"), ParseError);
    CHECK_THROWS_AS(parse("id,name,seed\nAZE,Az,2732\nAZE,Az2,2700\n",
                          "round,team_a,team_b,points_a,points_b\n"),
                    ValidationError);
}

TEST_CASE("round trip through the serializers is exact") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 12);
        const int rounds = 1 + static_cast<int>(rng() % 5);
        const Tournament t = testgen::random_tournament(rng, n, rounds);

        std::ostringstream teams_out, results_out;
        write_teams_csv(t, teams_out);
        write_results_csv(t, results_out);
        const Tournament back = parse(teams_out.str(), results_out.str());

        REQUIRE(back.team_count() == t.team_count());
        REQUIRE(back.matches().size() == t.matches().size());
        for (std::size_t i = 0; i < t.team_count(); ++i) {
            CHECK(back.team(static_cast<int>(i)).code == t.team(static_cast<int>(i)).code);
            CHECK(back.team(static_cast<int>(i)).name == t.team(static_cast<int>(i)).name);
        }
        for (std::size_t i = 0; i < t.matches().size(); ++i) {
            CHECK(back.matches()[i].round == t.matches()[i].round);
            CHECK(back.matches()[i].team_a == t.matches()[i].team_a);
            CHECK(back.matches()[i].team_b == t.matches()[i].team_b);
            CHECK(back.matches()[i].points_a == t.matches()[i].points_a);
            CHECK(back.matches()[i].points_b == t.matches()[i].points_b);
        }

        // every parsed match sums exactly, and coverage respects the Swiss cap
        for (const auto& match : back.matches())
            CHECK(match.points_a.halves() + match.points_b.halves() == 8);
        const auto coverage = match_count_fraction(back);
        CHECK(coverage.known <= static_cast<std::size_t>(rounds) *
                                    (static_cast<std::size_t>(n) / 2));
    }
}

TEST_CASE("match coverage counting") {
    const auto one = parse(
        "id,name,seed\nA,a,1\nB,b,2\n",
        "round,team_a,team_b,points_a,points_b\n1,A,B,4,0\n");
    auto stats = match_count_fraction(one);
    CHECK(stats.known == 1);
    CHECK(stats.total == 1);
    CHECK(stats.fraction == 1.0);

    const auto disjoint = parse(
        "id,name,seed\nA,a,1\nB,b,2\nC,c,3\nD,d,4\n",
        "round,team_a,team_b,points_a,points_b\n1,A,B,4,0\n1,C,D,2,2\n");
    stats = match_count_fraction(disjoint);
    CHECK(stats.known == 2);
    CHECK(stats.total == 6);
    CHECK(stats.fraction == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("start ranking scores and ties") {
    const auto t = parse(
        "id,name,rating1,rating2,rating3,rating4,rating5\n"
        "A,Alpha,2700,2690,2680,2670,2500\n"
        "B,Beta,2600,2600,2600,2600\n",
        "round,team_a,team_b,points_a,points_b\n1,A,B,2,2\n");
    const auto ranking = start_ranking(t);
    CHECK(ranking.rows[0].score == 2685.0); // the 2500 falls outside the top 4
    CHECK(ranking.ranks.at("A") == 1.0);
    CHECK(ranking.ranks.at("B") == 2.0);

    const auto tied = parse(
        "id,name,seed\nA,Alpha,2600\nB,Beta,2600\nC,Gamma,2500\n",
        "round,team_a,team_b,points_a,points_b\n1,A,B,2,2\n");
    const auto tied_ranking = start_ranking(tied);
    CHECK(tied_ranking.ranks.at("A") == 1.5);
    CHECK(tied_ranking.ranks.at("B") == 1.5);
    CHECK(tied_ranking.ranks.at("C") == 3.0);

    const auto missing = parse(
        "id,name,rating1,rating2,rating3,rating4\nA,Alpha,2700,2690,2680,2670\nB,Beta,2600,2600,,\n",
        "round,team_a,team_b,points_a,points_b\n1,A,B,2,2\n");
    CHECK_THROWS_AS(start_ranking(missing), ValidationError);
}
