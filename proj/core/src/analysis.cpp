#include "pairrank/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pairrank/errors.hpp"

namespace pairrank {

RankVector ranking_from_weights(const WeightVector& w) {
    const std::vector<double> ranks = ranks_descending(w.weights, 1e-12);
    RankVector result;
    for (std::size_t i = 0; i < w.labels.size(); ++i) result[w.labels[i]] = ranks[i];
    return result;
}

namespace {

void check_same_teams(const RankVector& a, const RankVector& b) {
    if (a.size() != b.size())
        throw ValidationError("rank vectors cover different team sets");
    for (auto ia = a.begin(), ib = b.begin(); ia != a.end(); ++ia, ++ib)
        if (ia->first != ib->first)
            throw ValidationError("rank vectors cover different team sets ('" + ia->first +
                                  "' vs '" + ib->first + "')");
}

bool tie_free(const std::vector<double>& ranks) {
    std::vector<double> sorted = ranks;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] == sorted[i - 1]) return false;
    return true;
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    const auto n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0.0 && syy == 0.0) return 1.0; // two all-tied rankings agree
    if (sxx == 0.0 || syy == 0.0) return 0.0; // one side carries no order at all
    return sxy / std::sqrt(sxx * syy);
}

} // namespace

CorrelationResult spearman(const RankVector& a, const RankVector& b) {
    check_same_teams(a, b);
    const std::size_t n = a.size();
    if (n < 2) throw ValidationError("rank correlation needs at least two teams");

    std::vector<double> ra, rb;
    ra.reserve(n);
    rb.reserve(n);
    for (auto ia = a.begin(), ib = b.begin(); ia != a.end(); ++ia, ++ib) {
        ra.push_back(ia->second);
        rb.push_back(ib->second);
    }

    CorrelationResult result;
    result.n = n;
    if (tie_free(ra) && tie_free(rb)) {
        double d2 = 0.0;
        for (std::size_t i = 0; i < n; ++i) d2 += (ra[i] - rb[i]) * (ra[i] - rb[i]);
        const double nn = static_cast<double>(n);
        result.coefficient = 1.0 - 6.0 * d2 / (nn * (nn * nn - 1.0));
    } else {
        result.coefficient = pearson(ra, rb);
        result.tie_adjusted = true;
    }
    return result;
}

CorrelationMatrix compare_rankings(const std::vector<std::string>& names,
                                   const std::vector<RankVector>& rankings) {
    if (names.size() != rankings.size())
        throw std::invalid_argument("one name per ranking required");
    if (rankings.size() < 2)
        throw ValidationError("comparison needs at least two rankings");

    CorrelationMatrix matrix;
    matrix.names = names;
    matrix.cells.assign(rankings.size(), std::vector<CorrelationResult>(rankings.size()));
    for (std::size_t i = 0; i < rankings.size(); ++i) {
        matrix.cells[i][i] = CorrelationResult{1.0, rankings[i].size(), false};
        for (std::size_t j = i + 1; j < rankings.size(); ++j) {
            matrix.cells[i][j] = spearman(rankings[i], rankings[j]);
            matrix.cells[j][i] = matrix.cells[i][j];
        }
    }
    return matrix;
}

std::vector<Discrepancy> discrepancy_report(const RankVector& a, const RankVector& b,
                                            double threshold) {
    check_same_teams(a, b);
    if (threshold < 0.0) throw std::invalid_argument("threshold must be non-negative");

    std::vector<Discrepancy> report;
    for (auto ia = a.begin(), ib = b.begin(); ia != a.end(); ++ia, ++ib) {
        const double delta = ib->second - ia->second;
        if (std::fabs(delta) >= threshold)
            report.push_back(Discrepancy{ia->first, ia->second, ib->second, delta});
    }
    std::sort(report.begin(), report.end(), [](const Discrepancy& x, const Discrepancy& y) {
        if (std::fabs(x.delta) != std::fabs(y.delta)) return std::fabs(x.delta) > std::fabs(y.delta);
        return x.team < y.team;
    });
    return report;
}

std::string ResultDistribution::outcome_label(int winner_halves, int boards) {
    const BoardPoints winner = BoardPoints::from_halves(winner_halves);
    const BoardPoints loser = BoardPoints::from_halves(2 * boards - winner_halves);
    return winner.str() + ":" + loser.str();
}

ResultDistribution result_distribution(const Tournament& t) {
    ResultDistribution distribution;
    distribution.boards = t.boards();
    // bins for every representable outcome, draw (= boards halves) included
    for (int halves = t.boards(); halves <= 2 * t.boards(); ++halves)
        distribution.count_by_winner_halves[halves] = 0;

    for (const auto& match : t.matches()) {
        const int winner_halves = std::max(match.points_a.halves(), match.points_b.halves());
        ++distribution.count_by_winner_halves[winner_halves];
        ++distribution.total;
    }
    return distribution;
}

std::vector<ScatterPoint> scatter_data(const RankVector& a, const RankVector& b) {
    check_same_teams(a, b);
    std::vector<ScatterPoint> points;
    for (auto ia = a.begin(), ib = b.begin(); ia != a.end(); ++ia, ++ib)
        points.push_back(ScatterPoint{ia->first, ia->second, ib->second});
    return points; // map order == sorted by team code
}

} // namespace pairrank
