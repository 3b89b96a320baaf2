#include "bellwig/sampler.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "bellwig/analytic.hpp"
#include "bellwig/data_inequality.hpp"

namespace bellwig {

namespace {

Outcome draw_plus(double p_plus, Rng& rng) {
    return rng.bernoulli(p_plus) ? Outcome::plus() : Outcome::minus();
}

// Fisher-Yates with our own generator; std::shuffle is not specified
// bit-for-bit across standard libraries.
void shuffle(std::vector<std::int8_t>& v, Rng& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        const auto j = static_cast<std::size_t>(rng.below(i));
        std::swap(v[i - 1], v[j]);
    }
}

struct ArmGroups {
    std::vector<std::int8_t> after_plus;   // B readings where a = +1
    std::vector<std::int8_t> after_minus;  // B readings where a = -1
};

ArmGroups run_arm(double a, double setting, AngleConvention conv, std::size_t n, Rng& rng) {
    ArmGroups g;
    g.after_plus.reserve(n / 2 + 1);
    g.after_minus.reserve(n / 2 + 1);
    for (std::size_t i = 0; i < n; ++i) {
        const auto [ra, rb] = sample_pair(a, setting, conv, rng);
        (ra.value() > 0 ? g.after_plus : g.after_minus).push_back(static_cast<std::int8_t>(rb.value()));
    }
    return g;
}

}  // namespace

std::pair<Outcome, Outcome> sample_pair(double x, double y, AngleConvention convention, Rng& rng) {
    const auto p = analytic::joint_probability(x, y, convention);
    const double u = rng.uniform();
    if (u < p.pp()) return {Outcome::plus(), Outcome::plus()};
    if (u < p.pp() + p.pm()) return {Outcome::plus(), Outcome::minus()};
    if (u < p.pp() + p.pm() + p.mp()) return {Outcome::minus(), Outcome::plus()};
    return {Outcome::minus(), Outcome::minus()};
}

TrialTriple sample_triple(const AngleConfig& cfg, Rng& rng) {
    const auto conv = cfg.convention();
    const Outcome a = draw_plus(0.5, rng);
    const Outcome b = draw_plus(analytic::conditional_plus_probability(cfg.b(), cfg.a(), a, conv), rng);
    const Outcome bp = draw_plus(analytic::conditional_plus_probability(cfg.bp(), cfg.a(), a, conv), rng);
    return {a, b, bp};
}

DataSetTriple sample_data_set(const AngleConfig& cfg, std::size_t n, Rng& rng) {
    if (n == 0) throw EmptyData("sample_data_set: n must be at least 1");
    const auto conv = cfg.convention();
    // conditional probabilities depend only on the a outcome; hoist them
    const double b_plus[2] = {
        analytic::conditional_plus_probability(cfg.b(), cfg.a(), Outcome::minus(), conv),
        analytic::conditional_plus_probability(cfg.b(), cfg.a(), Outcome::plus(), conv)};
    const double bp_plus[2] = {
        analytic::conditional_plus_probability(cfg.bp(), cfg.a(), Outcome::minus(), conv),
        analytic::conditional_plus_probability(cfg.bp(), cfg.a(), Outcome::plus(), conv)};
    std::vector<TrialTriple> trials;
    trials.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Outcome a = draw_plus(0.5, rng);
        const int idx = a.value() > 0 ? 1 : 0;
        const Outcome b = draw_plus(b_plus[idx], rng);
        const Outcome bp = draw_plus(bp_plus[idx], rng);
        trials.push_back({a, b, bp});
    }
    return DataSetTriple(std::move(trials));
}

MatchedPairsResult matched_pairs(const AngleConfig& cfg, std::size_t n_per_arm, Rng& rng) {
    if (n_per_arm == 0) throw InvalidValue("matched_pairs: n_per_arm must be at least 1");
    const auto conv = cfg.convention();
    auto arm1 = run_arm(cfg.a(), cfg.b(), conv, n_per_arm, rng);
    auto arm2 = run_arm(cfg.a(), cfg.bp(), conv, n_per_arm, rng);
    if (arm1.after_plus.empty() || arm1.after_minus.empty() || arm2.after_plus.empty() ||
        arm2.after_minus.empty()) {
        throw InsufficientMatches("matched_pairs: an a-outcome group is empty in one arm (n_per_arm = " +
                                  std::to_string(n_per_arm) + ")");
    }
    shuffle(arm2.after_plus, rng);
    shuffle(arm2.after_minus, rng);

    std::int64_t sum = 0;
    std::size_t pairs = 0;
    auto pair_up = [&](const std::vector<std::int8_t>& bs, const std::vector<std::int8_t>& bps) {
        const std::size_t m = std::min(bs.size(), bps.size());
        for (std::size_t i = 0; i < m; ++i) sum += bs[i] * bps[i];
        pairs += m;
    };
    pair_up(arm1.after_plus, arm2.after_plus);
    pair_up(arm1.after_minus, arm2.after_minus);
    return {static_cast<double>(sum) / static_cast<double>(pairs), pairs};
}

double matched_pairs_estimate(const AngleConfig& cfg, std::size_t n_per_arm, Rng& rng) {
    return matched_pairs(cfg, n_per_arm, rng).estimate;
}

EmpiricalCorrelations empirical_correlations(const DataSetTriple& d) {
    std::int64_t ab = 0;
    std::int64_t abp = 0;
    std::int64_t bbp = 0;
    for (const auto& t : d.trials()) {
        ab += t.a * t.b;
        abp += t.a * t.bp;
        bbp += t.b * t.bp;
    }
    const auto n = static_cast<double>(d.size());
    return {static_cast<double>(ab) / n, static_cast<double>(abp) / n, static_cast<double>(bbp) / n};
}

std::vector<ConvergenceRecord> convergence_study(const AngleConfig& cfg, std::span<const std::size_t> n_list,
                                                 std::uint64_t seed) {
    if (n_list.empty()) throw InvalidValue("convergence_study: n_list is empty");
    for (std::size_t i = 0; i < n_list.size(); ++i) {
        if (n_list[i] == 0) throw InvalidValue("convergence_study: sample counts must be at least 1");
        if (i > 0 && n_list[i] < n_list[i - 1]) throw InvalidValue("convergence_study: n_list must be ascending");
    }
    const double target = analytic::third_correlation(cfg);
    std::vector<ConvergenceRecord> out;
    out.reserve(n_list.size());
    for (std::size_t i = 0; i < n_list.size(); ++i) {
        Rng rng(seed, i);
        const auto data = sample_data_set(cfg, n_list[i], rng);
        if (!data_bell_margin_3(data).satisfied()) {
            throw std::logic_error("sampled data set violates the exact data inequality");
        }
        out.push_back(ConvergenceRecord::make(n_list[i], empirical_correlations(data).bbp, target, seed));
    }
    return out;
}

}  // namespace bellwig
