#ifndef PAIRRANK_RANKING_HPP
#define PAIRRANK_RANKING_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace pairrank {

/// Team-indexed rank values. Ranks are 1-based and real-valued so that tied
/// blocks can carry average ranks; a tie-free vector is a permutation of 1..n.
using RankVector = std::map<std::string, double>;

/// Assigns 1-based average ranks to n items given a strict ordering predicate
/// `before(i, j)` (item i ranks ahead of item j) and an equivalence predicate
/// `tied(i, j)`. Items equivalent under `tied` share the mean of the positions
/// they occupy. Returns ranks indexed like the items.
template <typename Before, typename Tied>
std::vector<double> average_ranks(std::size_t n, Before before, Tied tied) {
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return before(a, b); });

    std::vector<double> ranks(n, 0.0);
    std::size_t pos = 0;
    while (pos < n) {
        std::size_t end = pos + 1;
        while (end < n && tied(order[end - 1], order[end])) ++end;
        // positions pos+1 .. end (1-based) share their mean rank
        const double rank = (static_cast<double>(pos + 1) + static_cast<double>(end)) / 2.0;
        for (std::size_t k = pos; k < end; ++k) ranks[order[k]] = rank;
        pos = end;
    }
    return ranks;
}

/// Average ranks for plain scores, higher score first, exact-equality ties.
std::vector<double> ranks_descending(const std::vector<double>& scores);

/// Average ranks for plain scores, higher first, with ties declared whenever
/// two adjacent sorted scores agree to `rel_eps` relative tolerance.
std::vector<double> ranks_descending(const std::vector<double>& scores, double rel_eps);

} // namespace pairrank

#endif
