#include "bellwig/core.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

namespace bellwig {

namespace {

std::string lowercase(std::string_view text) {
    std::string out(text);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::vector<Outcome> column(std::span<const TrialTriple> trials, Outcome TrialTriple::*field) {
    std::vector<Outcome> out;
    out.reserve(trials.size());
    for (const auto& t : trials) out.push_back(t.*field);
    return out;
}

}  // namespace

Outcome::Outcome(int value) : value_(0) {
    if (value != 1 && value != -1) {
        throw InvalidValue("outcome must be +1 or -1, got " + std::to_string(value));
    }
    value_ = static_cast<std::int8_t>(value);
}

DataSetTriple::DataSetTriple(std::vector<TrialTriple> trials) : trials_(std::move(trials)) {
    if (trials_.empty()) throw EmptyData("data set must contain at least one trial");
}

DataSetTriple DataSetTriple::from_columns(std::span<const Outcome> a, std::span<const Outcome> b,
                                          std::span<const Outcome> bp) {
    if (a.size() != b.size() || a.size() != bp.size()) {
        throw LengthMismatch("column lengths differ: a=" + std::to_string(a.size()) +
                             " b=" + std::to_string(b.size()) + " bp=" + std::to_string(bp.size()));
    }
    std::vector<TrialTriple> trials;
    trials.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) trials.push_back({a[i], b[i], bp[i]});
    return DataSetTriple(std::move(trials));
}

std::vector<Outcome> DataSetTriple::column_a() const { return column(trials_, &TrialTriple::a); }
std::vector<Outcome> DataSetTriple::column_b() const { return column(trials_, &TrialTriple::b); }
std::vector<Outcome> DataSetTriple::column_bp() const { return column(trials_, &TrialTriple::bp); }

std::string_view to_string(AngleConvention c) noexcept {
    return c == AngleConvention::Spin ? "spin" : "optical";
}

AngleConvention parse_convention(std::string_view text) {
    const auto t = lowercase(text);
    if (t == "spin") return AngleConvention::Spin;
    if (t == "optical") return AngleConvention::Optical;
    throw InvalidValue("unknown angle convention '" + std::string(text) + "' (expected spin|optical)");
}

AngleConfig::AngleConfig(double a, double b, double bp, AngleConvention convention)
    : a_(a), b_(b), bp_(bp), convention_(convention) {
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(bp)) {
        throw InvalidValue("angles must be finite");
    }
}

JointProbabilities::JointProbabilities(double pp, double pm, double mp, double mm)
    : pp_(pp), pm_(pm), mp_(mp), mm_(mm) {
    for (double p : {pp, pm, mp, mm}) {
        // NaN fails both comparisons, so test for the valid range
        if (!(p >= 0.0 && p <= 1.0)) {
            throw InvalidValue("probability cell outside [0, 1]: " + std::to_string(p));
        }
    }
    if (std::abs(total() - 1.0) > kProbabilityTolerance) {
        throw InvalidValue("joint probabilities do not sum to 1 (sum = " + std::to_string(total()) + ")");
    }
}

bool JointProbabilities::is_entangled_symmetric(double tol) const noexcept {
    return std::abs(pp_ - mm_) <= tol && std::abs(pm_ - mp_) <= tol;
}

std::string_view to_string(InequalityKind k) noexcept {
    switch (k) {
        case InequalityKind::DataBell3: return "DATA_BELL_3";
        case InequalityKind::DataBell4: return "DATA_BELL_4";
        case InequalityKind::CorrBell: return "CORR_BELL";
        case InequalityKind::Wigner: return "WIGNER";
    }
    return "UNKNOWN";
}

std::string_view to_string(EvaluationMode m) noexcept {
    switch (m) {
        case EvaluationMode::Paper: return "PAPER";
        case EvaluationMode::Naive: return "NAIVE";
        case EvaluationMode::ExactData: return "EXACT_DATA";
    }
    return "UNKNOWN";
}

InequalityKind parse_kind(std::string_view text) {
    const auto t = lowercase(text);
    if (t == "corr_bell" || t == "bell") return InequalityKind::CorrBell;
    if (t == "wigner") return InequalityKind::Wigner;
    throw InvalidValue("unknown inequality kind '" + std::string(text) + "' (expected bell|wigner)");
}

EvaluationMode parse_mode(std::string_view text) {
    const auto t = lowercase(text);
    if (t == "paper") return EvaluationMode::Paper;
    if (t == "naive") return EvaluationMode::Naive;
    throw InvalidValue("unknown mode '" + std::string(text) + "' (expected paper|naive)");
}

InequalityReport InequalityReport::numeric(InequalityKind kind, EvaluationMode mode, double lhs, double rhs,
                                           double tolerance) {
    if (mode == EvaluationMode::ExactData) {
        throw InvalidValue("numeric reports cannot carry EXACT_DATA mode");
    }
    if (!(tolerance >= 0.0)) throw InvalidValue("tolerance must be nonnegative");
    InequalityReport r;
    r.kind_ = kind;
    r.mode_ = mode;
    r.lhs_ = lhs;
    r.rhs_ = rhs;
    r.margin_ = rhs - lhs;
    r.tolerance_ = tolerance;
    r.satisfied_ = r.margin_ >= -tolerance;
    return r;
}

InequalityReport InequalityReport::exact(InequalityKind kind, ExactSides sides) {
    if (sides.n <= 0) throw EmptyData("exact report needs a positive trial count");
    InequalityReport r;
    r.kind_ = kind;
    r.mode_ = EvaluationMode::ExactData;
    const auto n = static_cast<double>(sides.n);
    r.lhs_ = static_cast<double>(sides.lhs_scaled) / n;
    r.rhs_ = static_cast<double>(sides.rhs_scaled) / n;
    r.margin_ = static_cast<double>(sides.margin_scaled()) / n;
    r.tolerance_ = 0.0;
    r.satisfied_ = sides.margin_scaled() >= 0;
    r.exact_ = sides;
    return r;
}

double correlation_std_error(double estimate, std::size_t n) {
    if (n == 0) return 0.0;
    const double var = 1.0 - estimate * estimate;
    return var > 0.0 ? std::sqrt(var / static_cast<double>(n)) : 0.0;
}

ConvergenceRecord ConvergenceRecord::make(std::size_t n_samples, double estimate, double analytic,
                                          std::uint64_t seed) {
    ConvergenceRecord r;
    r.n_samples = n_samples;
    r.estimate = estimate;
    r.analytic = analytic;
    r.abs_error = std::abs(estimate - analytic);
    r.std_error = correlation_std_error(estimate, n_samples);
    r.seed = seed;
    return r;
}

}  // namespace bellwig
