#pragma once

// Monte Carlo sampling of entangled-pair outcomes.
//
// Pairs at (x, y) are drawn from the four-cell joint distribution. Triples
// at (a, b, b') draw a fair +-1 at a, then b and b' independently given a,
// each from its conditional distribution. That makes the (a,b) and (a,b')
// marginals the usual pair distributions while (b,b') follows the
// conditional construction.

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "bellwig/core.hpp"
#include "bellwig/rng.hpp"

namespace bellwig {

/// One arm of a matched-pairs experiment had no trials with a given a outcome.
class InsufficientMatches : public Error {
public:
    using Error::Error;
};

std::pair<Outcome, Outcome> sample_pair(double x, double y, AngleConvention convention, Rng& rng);

TrialTriple sample_triple(const AngleConfig& cfg, Rng& rng);

/// `n` triples from sample_triple. Throws EmptyData for n == 0.
DataSetTriple sample_data_set(const AngleConfig& cfg, std::size_t n, Rng& rng);

/// Two independent arms of `n_per_arm` pairs, at (a,b) and at (a,b').
/// Trials are grouped by the a outcome, arm-2 trials are paired with arm-1
/// trials uniformly at random inside each group (the surplus of the larger
/// group is dropped), and the correlation of the paired (b, b') readings is
/// returned.
double matched_pairs_estimate(const AngleConfig& cfg, std::size_t n_per_arm, Rng& rng);

/// matched_pairs_estimate plus the number of (b, b') pairs actually used.
struct MatchedPairsResult {
    double estimate;
    std::size_t n_pairs;
};
MatchedPairsResult matched_pairs(const AngleConfig& cfg, std::size_t n_per_arm, Rng& rng);

/// Empirical correlations of one sampled data set.
struct EmpiricalCorrelations {
    double ab;
    double abp;
    double bbp;
};
EmpiricalCorrelations empirical_correlations(const DataSetTriple& d);

/// For each N in `n_list` (nonempty, ascending) samples N triples from
/// substream i of `seed`, checks the exact data inequality and records the
/// (b,b') estimate against third_correlation(). Throws InvalidValue for a
/// bad n_list; throws std::logic_error if a sampled set ever fails the data
/// inequality.
std::vector<ConvergenceRecord> convergence_study(const AngleConfig& cfg, std::span<const std::size_t> n_list,
                                                 std::uint64_t seed);

}  // namespace bellwig
