#pragma once

// Shared value types: detector outcomes, trial records, angle settings,
// outcome probabilities and inequality reports.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bellwig {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A value was outside the domain of the type being constructed.
class InvalidValue : public Error {
public:
    using Error::Error;
};

/// Two sequences that must be aligned have different lengths.
class LengthMismatch : public Error {
public:
    using Error::Error;
};

/// An operation that needs at least one trial received none.
class EmptyData : public Error {
public:
    using Error::Error;
};

/// Probability invariants are checked to this absolute tolerance.
inline constexpr double kProbabilityTolerance = 1e-12;

/// A single detector reading, +1 or -1.
class Outcome {
public:
    /// Throws InvalidValue unless `value` is +1 or -1.
    explicit Outcome(int value);

    static constexpr Outcome plus() noexcept { return Outcome{Tag{}, 1}; }
    static constexpr Outcome minus() noexcept { return Outcome{Tag{}, -1}; }

    constexpr int value() const noexcept { return value_; }
    constexpr Outcome operator-() const noexcept { return Outcome{Tag{}, static_cast<std::int8_t>(-value_)}; }
    constexpr bool operator==(const Outcome&) const noexcept = default;

private:
    struct Tag {};
    constexpr Outcome(Tag, std::int8_t v) noexcept : value_(v) {}
    std::int8_t value_;
};

/// Integer product of two outcomes, always +1 or -1.
constexpr int operator*(Outcome x, Outcome y) noexcept { return x.value() * y.value(); }

/// Outcomes recorded in one trial at settings a, b and b'.
struct TrialTriple {
    Outcome a;
    Outcome b;
    Outcome bp;

    bool operator==(const TrialTriple&) const noexcept = default;
};

/// Outcomes recorded in one trial at settings a, a', b and b'.
struct TrialQuad {
    Outcome a;
    Outcome ap;
    Outcome b;
    Outcome bp;

    bool operator==(const TrialQuad&) const noexcept = default;
};

/// Aligned outcome records for the three settings; never empty.
class DataSetTriple {
public:
    /// Throws EmptyData when `trials` is empty.
    explicit DataSetTriple(std::vector<TrialTriple> trials);

    /// Builds from three per-setting columns; throws LengthMismatch or EmptyData.
    static DataSetTriple from_columns(std::span<const Outcome> a, std::span<const Outcome> b,
                                      std::span<const Outcome> bp);

    std::size_t size() const noexcept { return trials_.size(); }
    std::span<const TrialTriple> trials() const noexcept { return trials_; }
    const TrialTriple& operator[](std::size_t i) const { return trials_[i]; }

    std::vector<Outcome> column_a() const;
    std::vector<Outcome> column_b() const;
    std::vector<Outcome> column_bp() const;

    bool operator==(const DataSetTriple&) const = default;

private:
    std::vector<TrialTriple> trials_;
};

enum class AngleConvention {
    Spin,     ///< half-angle arguments, sin^2((y - x) / 2)
    Optical,  ///< full-angle arguments, sin^2(y - x)
};

std::string_view to_string(AngleConvention c) noexcept;
/// Accepts "spin" or "optical" (case-insensitive); throws InvalidValue otherwise.
AngleConvention parse_convention(std::string_view text);

/// Three detector settings in radians plus the angle convention.
/// Angles are kept as given; every formula using them is periodic.
class AngleConfig {
public:
    /// Throws InvalidValue if any angle is not finite.
    AngleConfig(double a, double b, double bp, AngleConvention convention = AngleConvention::Spin);

    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }
    double bp() const noexcept { return bp_; }
    AngleConvention convention() const noexcept { return convention_; }

    bool operator==(const AngleConfig&) const noexcept = default;

private:
    double a_;
    double b_;
    double bp_;
    AngleConvention convention_;
};

/// The four outcome probabilities P++, P+-, P-+, P-- for one setting pair.
class JointProbabilities {
public:
    /// Throws InvalidValue if a cell is outside [0, 1] or the cells do not sum to 1.
    JointProbabilities(double pp, double pm, double mp, double mm);

    double pp() const noexcept { return pp_; }
    double pm() const noexcept { return pm_; }
    double mp() const noexcept { return mp_; }
    double mm() const noexcept { return mm_; }

    double total() const noexcept { return pp_ + pm_ + mp_ + mm_; }
    /// P++ == P-- and P+- == P-+ within `tol`.
    bool is_entangled_symmetric(double tol = kProbabilityTolerance) const noexcept;

private:
    double pp_;
    double pm_;
    double mp_;
    double mm_;
};

enum class InequalityKind { DataBell3, DataBell4, CorrBell, Wigner };
enum class EvaluationMode { Paper, Naive, ExactData };

std::string_view to_string(InequalityKind k) noexcept;
std::string_view to_string(EvaluationMode m) noexcept;
/// Accepts "corr_bell"/"bell" or "wigner"; throws InvalidValue otherwise.
InequalityKind parse_kind(std::string_view text);
/// Accepts "paper" or "naive"; throws InvalidValue otherwise.
EvaluationMode parse_mode(std::string_view text);

/// Both sides of a data-level inequality scaled by the trial count, so that
/// lhs = lhs_scaled / n and rhs = rhs_scaled / n exactly.
struct ExactSides {
    std::int64_t lhs_scaled;
    std::int64_t rhs_scaled;
    std::int64_t n;

    std::int64_t margin_scaled() const noexcept { return rhs_scaled - lhs_scaled; }
};

/// Outcome of evaluating one inequality: margin = rhs - lhs, satisfied iff
/// margin >= -tolerance.
class InequalityReport {
public:
    static InequalityReport numeric(InequalityKind kind, EvaluationMode mode, double lhs, double rhs,
                                    double tolerance);
    /// Exact report for data-level inequalities; tolerance is zero and the
    /// satisfied flag is decided on the integers.
    static InequalityReport exact(InequalityKind kind, ExactSides sides);

    InequalityKind kind() const noexcept { return kind_; }
    EvaluationMode mode() const noexcept { return mode_; }
    double lhs() const noexcept { return lhs_; }
    double rhs() const noexcept { return rhs_; }
    double margin() const noexcept { return margin_; }
    double tolerance() const noexcept { return tolerance_; }
    bool satisfied() const noexcept { return satisfied_; }
    const std::optional<ExactSides>& exact_sides() const noexcept { return exact_; }

private:
    InequalityReport() = default;

    InequalityKind kind_{};
    EvaluationMode mode_{};
    double lhs_ = 0.0;
    double rhs_ = 0.0;
    double margin_ = 0.0;
    double tolerance_ = 0.0;
    bool satisfied_ = false;
    std::optional<ExactSides> exact_;
};

/// One point of a Monte Carlo convergence study for the (b, b') correlation.
struct ConvergenceRecord {
    std::size_t n_samples = 0;
    double estimate = 0.0;
    double analytic = 0.0;
    double abs_error = 0.0;
    double std_error = 0.0;
    std::uint64_t seed = 0;

    /// Fills abs_error and std_error from the other fields.
    static ConvergenceRecord make(std::size_t n_samples, double estimate, double analytic, std::uint64_t seed);
};

/// sqrt((1 - r^2) / n) for a correlation estimate r of +-1 products; 0 when r^2 >= 1.
double correlation_std_error(double estimate, std::size_t n);

}  // namespace bellwig
