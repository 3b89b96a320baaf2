#include "bellwig/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "bellwig/analytic.hpp"

namespace bellwig {

namespace {

struct SliceStats {
    double min_margin = std::numeric_limits<double>::infinity();
    std::size_t argmin_flat = 0;
    std::size_t violations = 0;
};

SliceStats evaluate_slice(std::size_t ia, const SweepOptions& opt, std::vector<SweepRecord>* records) {
    const std::size_t r = opt.resolution;
    SliceStats s;
    const double a = grid_angle(ia, r);
    for (std::size_t ib = 0; ib < r; ++ib) {
        const double b = grid_angle(ib, r);
        for (std::size_t ibp = 0; ibp < r; ++ibp) {
            const double bp = grid_angle(ibp, r);
            const auto rep = evaluate_margin(AngleConfig(a, b, bp, opt.convention), opt.kind, opt.mode);
            const double m = rep.margin();
            if (m < s.min_margin) {
                s.min_margin = m;
                s.argmin_flat = (ia * r + ib) * r + ibp;
            }
            if (m < kViolationThreshold) ++s.violations;
            if (records) records->push_back({a, b, bp, opt.kind, opt.mode, rep.lhs(), rep.rhs(), m});
        }
    }
    return s;
}

// Evaluates slices [first, last) on up to `workers` threads.
void run_slices(std::size_t first, std::size_t last, const SweepOptions& opt, std::vector<SliceStats>& stats,
                std::vector<std::vector<SweepRecord>>* buffers) {
    std::atomic<std::size_t> next{first};
    auto work = [&] {
        for (std::size_t ia = next++; ia < last; ia = next++) {
            auto* buf = buffers ? &(*buffers)[ia - first] : nullptr;
            if (buf) buf->clear();
            stats[ia] = evaluate_slice(ia, opt, buf);
        }
    };
    const std::size_t n_threads = std::min(opt.workers, last - first);
    if (n_threads <= 1) {
        work();
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(n_threads);
    for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(work);
}

}  // namespace

double grid_angle(std::size_t index, std::size_t resolution) noexcept {
    return 2.0 * std::numbers::pi * static_cast<double>(index) / static_cast<double>(resolution);
}

InequalityReport evaluate_margin(const AngleConfig& cfg, InequalityKind kind, EvaluationMode mode) {
    switch (kind) {
        case InequalityKind::CorrBell: return analytic::bell_margin(cfg, mode);
        case InequalityKind::Wigner: return analytic::wigner_margin(cfg, mode);
        default: break;
    }
    throw InvalidValue("sweep supports only CORR_BELL and WIGNER, got " + std::string(to_string(kind)));
}

SweepResult grid_sweep(const SweepOptions& opt, const SweepSink& sink) {
    if (opt.resolution < 2) throw InvalidValue("grid_sweep: resolution must be at least 2");
    if (opt.workers == 0) throw InvalidValue("grid_sweep: workers must be at least 1");
    if (opt.kind != InequalityKind::CorrBell && opt.kind != InequalityKind::Wigner) {
        throw InvalidValue("grid_sweep: kind must be CORR_BELL or WIGNER");
    }
    if (opt.mode == EvaluationMode::ExactData) throw InvalidValue("grid_sweep: mode must be PAPER or NAIVE");

    const std::size_t r = opt.resolution;
    std::vector<SliceStats> stats(r);
    if (!sink) {
        run_slices(0, r, opt, stats, nullptr);
    } else {
        // bounded buffering: one batch of slices in memory at a time
        const std::size_t batch = std::max<std::size_t>(opt.workers, 1);
        std::vector<std::vector<SweepRecord>> buffers(batch);
        for (auto& b : buffers) b.reserve(r * r);
        for (std::size_t first = 0; first < r; first += batch) {
            const std::size_t last = std::min(r, first + batch);
            run_slices(first, last, opt, stats, &buffers);
            for (std::size_t ia = first; ia < last; ++ia) {
                for (const auto& rec : buffers[ia - first]) sink(rec);
            }
        }
    }

    SliceStats total;
    for (const auto& s : stats) {
        if (s.min_margin < total.min_margin) {
            total.min_margin = s.min_margin;
            total.argmin_flat = s.argmin_flat;
        }
        total.violations += s.violations;
    }
    const std::size_t ibp = total.argmin_flat % r;
    const std::size_t ib = (total.argmin_flat / r) % r;
    const std::size_t ia = total.argmin_flat / (r * r);
    return {total.min_margin, AngleConfig(grid_angle(ia, r), grid_angle(ib, r), grid_angle(ibp, r), opt.convention),
            r * r * r, total.violations};
}

std::map<CensusKey, std::size_t> violation_census(std::size_t resolution, AngleConvention convention,
                                                  std::size_t workers) {
    std::map<CensusKey, std::size_t> out;
    for (auto kind : {InequalityKind::CorrBell, InequalityKind::Wigner}) {
        for (auto mode : {EvaluationMode::Paper, EvaluationMode::Naive}) {
            SweepOptions opt{resolution, convention, kind, mode, workers};
            out[{kind, mode}] = grid_sweep(opt).violations;
        }
    }
    return out;
}

std::size_t workers_from_env() {
    const char* raw = std::getenv(kWorkersEnv);
    if (raw == nullptr || *raw == '\0') return 1;
    const std::string_view text(raw);
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0) {
        throw InvalidValue(std::string(kWorkersEnv) + " must be a positive integer, got '" + std::string(text) + "'");
    }
    return value;
}

}  // namespace bellwig
