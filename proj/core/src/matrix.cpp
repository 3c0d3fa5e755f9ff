#include "pairrank/matrix.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include "pairrank/errors.hpp"

namespace pairrank {

IncompletePairwiseMatrix::IncompletePairwiseMatrix(std::vector<std::string> labels)
    : labels_(std::move(labels)) {}

void IncompletePairwiseMatrix::set_pair(std::size_t i, std::size_t j, double value) {
    if (i == j) throw std::invalid_argument("diagonal entries are implicit");
    if (i >= size() || j >= size()) throw std::out_of_range("alternative index out of range");
    if (!(value > 0.0)) throw std::invalid_argument("comparison ratios must be positive");
    entries_[{i, j}] = value;
    entries_[{j, i}] = 1.0 / value;
}

bool IncompletePairwiseMatrix::known(std::size_t i, std::size_t j) const {
    if (i == j) return true;
    return entries_.count({i, j}) > 0;
}

double IncompletePairwiseMatrix::at(std::size_t i, std::size_t j) const {
    if (i == j) return 1.0;
    auto it = entries_.find({i, j});
    if (it == entries_.end()) throw std::out_of_range("entry is unknown");
    return it->second;
}

std::vector<std::pair<std::size_t, std::size_t>> IncompletePairwiseMatrix::known_pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto& [key, value] : entries_)
        if (key.first < key.second) pairs.push_back(key);
    return pairs; // map iteration is already sorted
}

IncompletePairwiseMatrix build_matrix(const Tournament& t, const ComparisonScale& scale) {
    std::vector<std::string> labels;
    labels.reserve(t.team_count());
    for (const auto& team : t.teams()) labels.push_back(team.code);

    // per unordered pair: the ratio of each match, oriented by who won
    struct OrientedRatio {
        int sign;     // +1 the lower index won, -1 the higher, 0 draw
        double ratio; // scale value, 1 for draws
    };
    std::map<std::pair<std::size_t, std::size_t>, std::vector<OrientedRatio>> per_pair;
    for (const auto& match : t.matches()) {
        const auto i = static_cast<std::size_t>(std::min(match.team_a, match.team_b));
        const auto j = static_cast<std::size_t>(std::max(match.team_a, match.team_b));
        if (match.drawn()) {
            per_pair[{i, j}].push_back({0, ComparisonScale::draw_ratio});
        } else {
            const int sign = static_cast<std::size_t>(match.winner()) == i ? 1 : -1;
            per_pair[{i, j}].push_back({sign, scale.ratio(match.winner_points())});
        }
    }

    IncompletePairwiseMatrix m(std::move(labels));
    for (const auto& [pair, results] : per_pair) {
        if (results.size() == 1) {
            // store the scale value itself so entries stay bit-exact
            const auto& [sign, ratio] = results.front();
            if (sign >= 0) m.set_pair(pair.first, pair.second, ratio);
            else m.set_pair(pair.second, pair.first, ratio);
        } else {
            // repeated pairings aggregate to the geometric mean of their ratios
            double log_sum = 0.0;
            for (const auto& [sign, ratio] : results) log_sum += sign * std::log(ratio);
            m.set_pair(pair.first, pair.second,
                       std::exp(log_sum / static_cast<double>(results.size())));
        }
    }
    return m;
}

ComparisonGraph comparison_graph(const IncompletePairwiseMatrix& m) {
    return ComparisonGraph{m.size(), m.known_pairs()};
}

ComparisonGraph comparison_graph(const Tournament& t) {
    std::set<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto& match : t.matches()) {
        const auto i = static_cast<std::size_t>(std::min(match.team_a, match.team_b));
        const auto j = static_cast<std::size_t>(std::max(match.team_a, match.team_b));
        pairs.insert({i, j});
    }
    return ComparisonGraph{t.team_count(), {pairs.begin(), pairs.end()}};
}

std::vector<std::vector<std::size_t>> connected_components(const ComparisonGraph& g) {
    std::vector<std::vector<std::size_t>> adjacency(g.n);
    for (const auto& [i, j] : g.edges) {
        adjacency[i].push_back(j);
        adjacency[j].push_back(i);
    }

    std::vector<std::vector<std::size_t>> components;
    std::vector<bool> visited(g.n, false);
    for (std::size_t start = 0; start < g.n; ++start) {
        if (visited[start]) continue;
        std::vector<std::size_t> component;
        std::vector<std::size_t> stack{start};
        visited[start] = true;
        while (!stack.empty()) {
            const std::size_t v = stack.back();
            stack.pop_back();
            component.push_back(v);
            for (std::size_t next : adjacency[v]) {
                if (!visited[next]) {
                    visited[next] = true;
                    stack.push_back(next);
                }
            }
        }
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
    }
    return components;
}

namespace {

/// Calls fn(i, j, k) for every i < j < k whose three entries are all known.
template <typename Fn>
void for_each_known_triple(const IncompletePairwiseMatrix& m, Fn fn) {
    const auto pairs = m.known_pairs();
    std::vector<std::vector<std::size_t>> neighbors(m.size());
    for (const auto& [i, j] : pairs) {
        neighbors[i].push_back(j); // j > i, kept sorted by construction
    }
    for (const auto& [i, j] : pairs) {
        // common higher neighbors of i and j close a triangle
        const auto& a = neighbors[i];
        const auto& b = neighbors[j];
        std::size_t pa = 0, pb = 0;
        while (pa < a.size() && pb < b.size()) {
            if (a[pa] < b[pb]) ++pa;
            else if (b[pb] < a[pa]) ++pb;
            else {
                fn(i, j, a[pa]); // common higher neighbor, so a[pa] > j > i
                ++pa;
                ++pb;
            }
        }
    }
}

} // namespace

double consistency_defect(const IncompletePairwiseMatrix& m) {
    double worst = 0.0;
    for_each_known_triple(m, [&](std::size_t i, std::size_t j, std::size_t k) {
        // |log a_ik - log(a_ij a_jk)| equals the cyclic log-product magnitude,
        // identical for all six orientations of the triple
        const double defect =
            std::fabs(std::log(m.at(i, j)) + std::log(m.at(j, k)) + std::log(m.at(k, i)));
        worst = std::max(worst, defect);
    });
    return worst;
}

std::vector<Triad> circular_triads(const IncompletePairwiseMatrix& m) {
    std::vector<Triad> triads;
    for_each_known_triple(m, [&](std::size_t i, std::size_t j, std::size_t k) {
        const double ij = m.at(i, j), jk = m.at(j, k), ki = m.at(k, i);
        if (ij > 1.0 && jk > 1.0 && ki > 1.0) {
            triads.push_back(Triad{i, j, k});
        } else if (ij < 1.0 && jk < 1.0 && ki < 1.0) {
            // cycle runs the other way round: i beats k, k beats j, j beats i
            triads.push_back(Triad{i, k, j});
        }
    });
    return triads; // triple enumeration is already (i, j, k)-sorted
}

} // namespace pairrank
