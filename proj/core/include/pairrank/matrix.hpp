#ifndef PAIRRANK_MATRIX_HPP
#define PAIRRANK_MATRIX_HPP

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pairrank/scale.hpp"
#include "pairrank/tournament.hpp"

namespace pairrank {

/// Positive reciprocal matrix over n alternatives with a known-entry set.
/// Entries come in reciprocal pairs (a_ji = 1/a_ij); the diagonal is
/// implicitly 1 and never stored.
class IncompletePairwiseMatrix {
public:
    explicit IncompletePairwiseMatrix(std::vector<std::string> labels);

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Stores value at (i, j) and its reciprocal at (j, i). Overwrites.
    void set_pair(std::size_t i, std::size_t j, double value);

    bool known(std::size_t i, std::size_t j) const;
    /// Entry a_ij; 1 on the diagonal; throws std::out_of_range when unknown.
    double at(std::size_t i, std::size_t j) const;

    /// All stored ordered entries in deterministic (row, column) order.
    const std::map<std::pair<std::size_t, std::size_t>, double>& entries() const {
        return entries_;
    }

    /// Known unordered pairs (i < j), sorted.
    std::vector<std::pair<std::size_t, std::size_t>> known_pairs() const;

private:
    std::vector<std::string> labels_;
    std::map<std::pair<std::size_t, std::size_t>, double> entries_;
};

/// Undirected graph of the known comparisons: one vertex per alternative,
/// one edge per known unordered pair.
struct ComparisonGraph {
    std::size_t n = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges; // i < j, sorted
};

/// Transforms match results into the incomplete pairwise comparison matrix
/// under the given scale: winner's entry = scale(winner points), loser's its
/// reciprocal, draws 1 both ways. Alternatives are indexed in teams-file
/// order. Repeated pairings (non-strict mode) aggregate to the geometric
/// mean of their per-match ratios.
IncompletePairwiseMatrix build_matrix(const Tournament& t, const ComparisonScale& scale);

ComparisonGraph comparison_graph(const IncompletePairwiseMatrix& m);

/// Same graph straight from the fixture: one edge per compared pair. The
/// known-entry set of a built matrix is scale-independent, so this needs no
/// ComparisonScale.
ComparisonGraph comparison_graph(const Tournament& t);

/// Partition of the vertices into maximal connected sets, each sorted, the
/// list ordered by smallest member. The matrix is irreducible iff exactly
/// one component comes back.
std::vector<std::vector<std::size_t>> connected_components(const ComparisonGraph& g);

/// Maximum over fully-known triples of |log a_ik - log(a_ij * a_jk)|; zero
/// when no triple has all three entries (or the known part is consistent).
double consistency_defect(const IncompletePairwiseMatrix& m);

/// A cyclically dominant triple: each alternative beats the next.
struct Triad {
    std::size_t i = 0, j = 0, k = 0; // a_ij > 1, a_jk > 1, a_ki > 1
};

/// Every known triple where the three results form a cycle; draws (ratio 1)
/// never participate. Each triad is reported once, rotated to start at its
/// smallest index, sorted by (i, j, k).
std::vector<Triad> circular_triads(const IncompletePairwiseMatrix& m);

} // namespace pairrank

#endif
