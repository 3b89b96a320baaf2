#include "bellwig/data_inequality.hpp"

#include <cstdlib>
#include <string>

namespace bellwig {

namespace {

struct TripleSums {
    std::int64_t ab = 0;
    std::int64_t abp = 0;
    std::int64_t bbp = 0;
};

TripleSums triple_sums(const DataSetTriple& d) {
    TripleSums s;
    for (const auto& t : d.trials()) {
        s.ab += t.a * t.b;
        s.abp += t.a * t.bp;
        s.bbp += t.b * t.bp;
    }
    return s;
}

}  // namespace

ExactCorrelation cross_correlation(std::span<const Outcome> xs, std::span<const Outcome> ys) {
    if (xs.size() != ys.size()) {
        throw LengthMismatch("cross_correlation: lengths differ (" + std::to_string(xs.size()) + " vs " +
                             std::to_string(ys.size()) + ")");
    }
    if (xs.empty()) throw EmptyData("cross_correlation: no trials");
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) sum += xs[i] * ys[i];
    return {sum, static_cast<std::int64_t>(xs.size())};
}

bool per_trial_identity(const TrialTriple& t) noexcept {
    const int a = t.a.value();
    const int b = t.b.value();
    const int bp = t.bp.value();
    return a * b - a * bp == a * (b - bp);
}

InequalityReport data_bell_margin_3(const DataSetTriple& d) {
    const auto s = triple_sums(d);
    const auto n = static_cast<std::int64_t>(d.size());
    return InequalityReport::exact(InequalityKind::DataBell3, {std::llabs(s.ab - s.abp), n - s.bbp, n});
}

InequalityReport data_bell_margin_3_flipped(const DataSetTriple& d) {
    std::int64_t ab = 0;
    std::int64_t abp = 0;
    std::int64_t b_ap = 0;
    for (const auto& t : d.trials()) {
        const Outcome ap = -t.bp;  // same setting as b', read on the A side
        ab += t.a * t.b;
        abp += t.a * t.bp;
        b_ap += t.b * ap;
    }
    const auto n = static_cast<std::int64_t>(d.size());
    return InequalityReport::exact(InequalityKind::DataBell3, {std::llabs(ab - abp), n + b_ap, n});
}

int four_set_bracket(const TrialQuad& q) noexcept {
    return q.a * q.b + q.a * q.bp + q.ap * q.b - q.ap * q.bp;
}

InequalityReport data_bell_margin_4(std::span<const TrialQuad> quads) {
    if (quads.empty()) throw EmptyData("data_bell_margin_4: no trials");
    std::int64_t sum = 0;
    for (const auto& q : quads) sum += four_set_bracket(q);
    const auto n = static_cast<std::int64_t>(quads.size());
    return InequalityReport::exact(InequalityKind::DataBell4, {std::llabs(sum), 2 * n, n});
}

}  // namespace bellwig
