#ifndef PAIRRANK_ANALYSIS_HPP
#define PAIRRANK_ANALYSIS_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "pairrank/llsm.hpp"
#include "pairrank/ranking.hpp"
#include "pairrank/tournament.hpp"

namespace pairrank {

struct CorrelationResult {
    double coefficient = 0.0; // in [-1, 1]
    std::size_t n = 0;
    bool tie_adjusted = false;
};

/// Ranks teams by descending weight; weights equal to 1e-12 relative
/// tolerance tie and share an average rank.
RankVector ranking_from_weights(const WeightVector& w);

/// Spearman's rank correlation. Tie-free inputs use the exact
/// 1 - 6*sum(d^2)/(n(n^2-1)) formula; inputs with ties fall back to the
/// Pearson correlation of the average-rank vectors and set tie_adjusted.
/// Throws ValidationError when the two vectors cover different team sets
/// or fewer than two teams.
CorrelationResult spearman(const RankVector& a, const RankVector& b);

struct CorrelationMatrix {
    std::vector<std::string> names;
    std::vector<std::vector<CorrelationResult>> cells; // symmetric, unit diagonal
};

/// Pairwise Spearman coefficients between named rankings over one team set.
CorrelationMatrix compare_rankings(const std::vector<std::string>& names,
                                   const std::vector<RankVector>& rankings);

struct Discrepancy {
    std::string team;
    double rank_a = 0.0;
    double rank_b = 0.0;
    double delta = 0.0; // rank_b - rank_a
};

/// Teams whose ranks differ by at least `threshold`, largest |delta| first.
std::vector<Discrepancy> discrepancy_report(const RankVector& a, const RankVector& b,
                                            double threshold);

/// Histogram over match outcomes keyed by the winner's board points in
/// halves (a draw is keyed as boards half-points, e.g. 2:2 under 4 boards).
/// Every representable outcome appears, possibly with count zero.
struct ResultDistribution {
    int boards = 4;
    std::map<int, std::size_t> count_by_winner_halves;
    std::size_t total = 0;

    /// External label of a bin: "3:1", "2.5:1.5".
    static std::string outcome_label(int winner_halves, int boards);
};

ResultDistribution result_distribution(const Tournament& t);

struct ScatterPoint {
    std::string team;
    double rank_a = 0.0;
    double rank_b = 0.0;
};

/// One (rank_a, rank_b) point per team, sorted by team code; intended for
/// external plotting.
std::vector<ScatterPoint> scatter_data(const RankVector& a, const RankVector& b);

} // namespace pairrank

#endif
