#pragma once

// Closed-form probabilities, correlations and inequality margins for
// perfectly entangled pairs.
//
// Every trigonometric argument is (y - x) scaled by half_angle_factor():
// 1/2 for spin, 1 for optical. Formulas for the (b, b') pair are built by
// conditioning both B-side readings on the shared A-side reading at `a`.

#include <utility>

#include "bellwig/core.hpp"

namespace bellwig::analytic {

/// Tolerance carried by every analytic InequalityReport.
inline constexpr double kMarginTolerance = 1e-12;

double half_angle_factor(AngleConvention convention) noexcept;

/// P++ = P-- = sin^2(k(y-x))/2, P+- = P-+ = cos^2(k(y-x))/2.
JointProbabilities joint_probability(double x, double y, AngleConvention convention);

/// -cos(2k(y-x)), i.e. 4 P++ - 1.
double bell_correlation(double x, double y, AngleConvention convention) noexcept;

/// Probability that the B-side detector at `setting` reads +1 given the
/// A-side reading `a_outcome` at `a_setting`.
double conditional_plus_probability(double setting, double a_setting, Outcome a_outcome,
                                    AngleConvention convention) noexcept;

struct ThirdPairProbabilities {
    double ppp;  ///< P++(b, b')
    double ppm;  ///< P+-(b, b')
};

/// (b, b') probabilities obtained by conditioning both readings on a.
/// ppp + ppm == 1/2.
ThirdPairProbabilities third_pair_probabilities(const AngleConfig& cfg) noexcept;

/// cos(2k(b-a)) cos(2k(b'-a)); equals 2 ppp - 2 ppm.
double third_correlation(const AngleConfig& cfg) noexcept;

/// |C(a,b) - C(a,b')| <= 1 - C3(b,b').
///
/// Paper mode takes C3 from third_correlation(). Naive mode substitutes the
/// pair formula for the third pair with b' moved to the opposite side,
/// giving rhs = 1 + bell_correlation(b, b').
InequalityReport bell_margin(const AngleConfig& cfg, EvaluationMode mode);

/// P++(a,b) - P++(a,b') <= P++(b,a').
///
/// a' is the A-side setting equal to b', so a' = +1 means b' = -1 and the
/// paper-mode right side is P+-(b,b') of third_pair_probabilities(). Naive
/// mode uses the pair formula sin^2(k(b-b'))/2 instead.
InequalityReport wigner_margin(const AngleConfig& cfg, EvaluationMode mode);

/// 2 sin^2(k(a-b')) cos^2(k(a-b)), which equals twice the paper-mode
/// wigner_margin and is never negative.
double wigner_slack(const AngleConfig& cfg) noexcept;

}  // namespace bellwig::analytic
