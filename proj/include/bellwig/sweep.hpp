#pragma once

// Uniform angle-grid evaluation of the correlation Bell and Wigner margins.
//
// The grid has `resolution` points per axis over the half-open interval
// [0, 2pi), so resolution^3 configurations in total. Points are indexed
// row-major as (a, b, b'). Work is split across worker threads by slices
// of a; the reduction picks the lowest flat index among equal minima, so
// results never depend on the worker count.

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <utility>

#include "bellwig/core.hpp"

namespace bellwig {

/// Grid points with margin below this count as violations.
inline constexpr double kViolationThreshold = -1e-9;

/// Environment variable holding the worker count; unset means sequential.
inline constexpr const char* kWorkersEnv = "BELLWIG_WORKERS";

struct SweepRecord {
    double a;
    double b;
    double bp;
    InequalityKind kind;
    EvaluationMode mode;
    double lhs;
    double rhs;
    double margin;
};

struct SweepOptions {
    std::size_t resolution = 60;
    AngleConvention convention = AngleConvention::Spin;
    InequalityKind kind = InequalityKind::Wigner;
    EvaluationMode mode = EvaluationMode::Paper;
    std::size_t workers = 1;
};

struct SweepResult {
    double min_margin;
    AngleConfig argmin;
    std::size_t points;
    std::size_t violations;  ///< points with margin < kViolationThreshold
};

/// Receives every record in grid order when full emission is requested.
using SweepSink = std::function<void(const SweepRecord&)>;

/// Throws InvalidValue if resolution < 2, workers == 0, or kind/mode are not
/// a correlation-level inequality evaluated in PAPER or NAIVE mode.
SweepResult grid_sweep(const SweepOptions& options, const SweepSink& sink = {});

/// Angle of grid index i: 2 pi i / resolution.
double grid_angle(std::size_t index, std::size_t resolution) noexcept;

/// Single-point margin used by the sweep.
InequalityReport evaluate_margin(const AngleConfig& cfg, InequalityKind kind, EvaluationMode mode);

using CensusKey = std::pair<InequalityKind, EvaluationMode>;

/// Violation counts for {CORR_BELL, WIGNER} x {PAPER, NAIVE}.
std::map<CensusKey, std::size_t> violation_census(std::size_t resolution, AngleConvention convention,
                                                  std::size_t workers = 1);

/// Worker count from BELLWIG_WORKERS; 1 when unset. Throws InvalidValue
/// when it is set to something other than a positive integer.
std::size_t workers_from_env();

}  // namespace bellwig
