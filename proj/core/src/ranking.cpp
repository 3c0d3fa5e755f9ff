#include "pairrank/ranking.hpp"

#include <cmath>

namespace pairrank {

std::vector<double> ranks_descending(const std::vector<double>& scores) {
    return average_ranks(
        scores.size(),
        [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; },
        [&](std::size_t a, std::size_t b) { return scores[a] == scores[b]; });
}

std::vector<double> ranks_descending(const std::vector<double>& scores, double rel_eps) {
    auto close = [&](std::size_t a, std::size_t b) {
        const double scale = std::max(std::fabs(scores[a]), std::fabs(scores[b]));
        return std::fabs(scores[a] - scores[b]) <= rel_eps * scale;
    };
    return average_ranks(
        scores.size(),
        [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; },
        close);
}

} // namespace pairrank
