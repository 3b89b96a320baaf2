#include "bellwig/analytic.hpp"

#include <cmath>

namespace bellwig::analytic {

namespace {

double sin2(double x) noexcept {
    const double s = std::sin(x);
    return s * s;
}

double cos2(double x) noexcept {
    const double c = std::cos(x);
    return c * c;
}

}  // namespace

double half_angle_factor(AngleConvention convention) noexcept {
    return convention == AngleConvention::Spin ? 0.5 : 1.0;
}

JointProbabilities joint_probability(double x, double y, AngleConvention convention) {
    const double arg = half_angle_factor(convention) * (y - x);
    const double same = 0.5 * sin2(arg);
    const double opposite = 0.5 * cos2(arg);
    return JointProbabilities(same, opposite, opposite, same);
}

double bell_correlation(double x, double y, AngleConvention convention) noexcept {
    return -std::cos(2.0 * half_angle_factor(convention) * (y - x));
}

double conditional_plus_probability(double setting, double a_setting, Outcome a_outcome,
                                    AngleConvention convention) noexcept {
    // P(a=+, b=+) = sin^2/2 and P(a=+) = 1/2; likewise cos^2 for a = -1
    const double arg = half_angle_factor(convention) * (setting - a_setting);
    return a_outcome.value() > 0 ? sin2(arg) : cos2(arg);
}

ThirdPairProbabilities third_pair_probabilities(const AngleConfig& cfg) noexcept {
    const double k = half_angle_factor(cfg.convention());
    const double sb = sin2(k * (cfg.b() - cfg.a()));
    const double cb = cos2(k * (cfg.b() - cfg.a()));
    const double sbp = sin2(k * (cfg.bp() - cfg.a()));
    const double cbp = cos2(k * (cfg.bp() - cfg.a()));
    return {0.5 * (sb * sbp + cb * cbp), 0.5 * (sb * cbp + cb * sbp)};
}

double third_correlation(const AngleConfig& cfg) noexcept {
    const double k2 = 2.0 * half_angle_factor(cfg.convention());
    return std::cos(k2 * (cfg.b() - cfg.a())) * std::cos(k2 * (cfg.bp() - cfg.a()));
}

InequalityReport bell_margin(const AngleConfig& cfg, EvaluationMode mode) {
    const auto conv = cfg.convention();
    const double lhs = std::abs(bell_correlation(cfg.a(), cfg.b(), conv) - bell_correlation(cfg.a(), cfg.bp(), conv));
    double rhs = 0.0;
    switch (mode) {
        case EvaluationMode::Paper: rhs = 1.0 - third_correlation(cfg); break;
        case EvaluationMode::Naive: rhs = 1.0 + bell_correlation(cfg.b(), cfg.bp(), conv); break;
        case EvaluationMode::ExactData: throw InvalidValue("bell_margin: mode must be PAPER or NAIVE");
    }
    return InequalityReport::numeric(InequalityKind::CorrBell, mode, lhs, rhs, kMarginTolerance);
}

InequalityReport wigner_margin(const AngleConfig& cfg, EvaluationMode mode) {
    const auto conv = cfg.convention();
    const double lhs = joint_probability(cfg.a(), cfg.b(), conv).pp() - joint_probability(cfg.a(), cfg.bp(), conv).pp();
    double rhs = 0.0;
    switch (mode) {
        // (+ at b, + at a') is (+ at b, - at b')
        case EvaluationMode::Paper: rhs = third_pair_probabilities(cfg).ppm; break;
        case EvaluationMode::Naive:
            rhs = 0.5 * sin2(half_angle_factor(conv) * (cfg.b() - cfg.bp()));
            break;
        case EvaluationMode::ExactData: throw InvalidValue("wigner_margin: mode must be PAPER or NAIVE");
    }
    return InequalityReport::numeric(InequalityKind::Wigner, mode, lhs, rhs, kMarginTolerance);
}

double wigner_slack(const AngleConfig& cfg) noexcept {
    const double k = half_angle_factor(cfg.convention());
    return 2.0 * sin2(k * (cfg.a() - cfg.bp())) * cos2(k * (cfg.a() - cfg.b()));
}

}  // namespace bellwig::analytic
