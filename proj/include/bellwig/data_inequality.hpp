#pragma once

// Data-level Bell inequalities evaluated in integer arithmetic.
//
// For any three aligned +-1 sequences a, b, b' of length N
//
//     |sum a_i b_i - sum a_i b'_i| <= N - sum b_i b'_i
//
// holds identically, because a_i b_i - a_i b'_i = a_i b_i (1 - b_i b'_i)
// and |a_i b_i| = 1. Every routine here works on sums scaled by N so the
// comparison is exact, with no floating point involved.

#include <cstdint>
#include <span>

#include "bellwig/core.hpp"

namespace bellwig {

/// sum(x_i * y_i) / n kept as an exact fraction.
struct ExactCorrelation {
    std::int64_t numerator;
    std::int64_t denominator;

    double value() const noexcept { return static_cast<double>(numerator) / static_cast<double>(denominator); }
    bool operator==(const ExactCorrelation&) const noexcept = default;
};

/// Throws LengthMismatch if the lengths differ, EmptyData if both are empty.
ExactCorrelation cross_correlation(std::span<const Outcome> xs, std::span<const Outcome> ys);

/// Checks a*b - a*b' == a*(b - b') for one trial. Always true; kept as an
/// executable witness of the per-trial step.
bool per_trial_identity(const TrialTriple& t) noexcept;

/// |C(a,b) - C(a,b')| <= 1 - C(b,b') on the data, exact.
InequalityReport data_bell_margin_3(const DataSetTriple& d);

/// Same inequality after substituting a'_i = -b'_i on the opposite side:
/// |C(a,b) - C(a,b')| <= 1 + C(b,a'). Margin matches data_bell_margin_3.
InequalityReport data_bell_margin_3_flipped(const DataSetTriple& d);

/// |mean(a b + a b' + a' b - a' b')| <= 2, exact. Throws EmptyData for no trials.
InequalityReport data_bell_margin_4(std::span<const TrialQuad> quads);

/// a b + a b' + a' b - a' b' for one trial; always +2 or -2.
int four_set_bracket(const TrialQuad& q) noexcept;

}  // namespace bellwig
