// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <json.hpp>

#include "bellwig/analytic.hpp"
#include "bellwig/cli.hpp"
#include "bellwig/data_inequality.hpp"
#include "bellwig/sampler.hpp"
#include "bellwig/sweep.hpp"
#include "oracles.hpp"

using namespace bellwig;

namespace {

constexpr double pi = std::numbers::pi;
constexpr double kTol = 1e-12;

struct Check {
    bool pass = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            pass = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

std::string fmt(double v) { return cli::format_double(v); }

int failures = 0;

void criterion(int id, const char* name, double time_limit_s, const std::function<void(Check&)>& body) {
    Check o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (time_limit_s > 0) o.require(secs < time_limit_s, "runtime " + fmt(secs) + " s over " + fmt(time_limit_s) + " s");
    if (!o.pass) ++failures;
    std::printf("[%s] %d %s (%.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", id, name, secs, o.detail.empty() ? "" : ": ",
                o.detail.c_str());
    std::fflush(stdout);
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

int main() {
    criterion(1, "DATA IDENTITY: exhaustive N<=4 and 1e5 random sets at N=1000, exact", 5.0, [](Check& o) {
        std::size_t sets = 0, violations = 0;
        for (std::size_t n = 1; n <= 4; ++n) {
            for (std::uint64_t code = 0; code < (std::uint64_t{1} << (3 * n)); ++code) {
                const auto d = oracle::triple_set_from_code(code, n);
                const auto r = data_bell_margin_3(d);
                const auto ref = oracle::data_sides(d);
                if (!r.satisfied() || r.exact_sides()->margin_scaled() < 0 ||
                    r.exact_sides()->lhs_scaled != ref.lhs || r.exact_sides()->rhs_scaled != ref.rhs) {
                    ++violations;
                }
                ++sets;
            }
        }
        o.require(sets == 4680, "enumerated " + std::to_string(sets) + " sets, expected 4680");
        std::mt19937_64 gen(20240601);
        for (int rep = 0; rep < 100000; ++rep) {
            const auto d = oracle::random_triple_set(gen, 1000);
            if (data_bell_margin_3(d).exact_sides()->margin_scaled() < 0) ++violations;
        }
        o.require(violations == 0, std::to_string(violations) + " violations");
    });

    criterion(2, "FOUR-SET IDENTITY: all quad sets N<=3 satisfy |S| <= 2 exactly", 5.0, [](Check& o) {
        std::size_t sets = 0, violations = 0;
        for (std::size_t n = 1; n <= 3; ++n) {
            for (std::uint64_t code = 0; code < (std::uint64_t{1} << (4 * n)); ++code) {
                if (!data_bell_margin_4(oracle::quad_set_from_code(code, n)).satisfied()) ++violations;
                ++sets;
            }
        }
        o.require(sets == 16 + 256 + 4096, "enumerated " + std::to_string(sets) + " sets");
        o.require(violations == 0, std::to_string(violations) + " violations");
    });

    const AngleConfig thirds(0, pi / 3, 2 * pi / 3, AngleConvention::Spin);

    criterion(3, "THIRD CORRELATION at (0, pi/3, 2pi/3): analytic, Monte Carlo, matched pairs", 10.0, [&](Check& o) {
        const double c3 = analytic::third_correlation(thirds);
        o.require(std::abs(c3 + 0.25) < kTol, "analytic C3 = " + fmt(c3));
        Rng rng(kDefaultSeed, 3);
        const auto emp = empirical_correlations(sample_data_set(thirds, 1000000, rng));
        o.require(std::abs(emp.bbp + 0.25) <= 0.005, "MC C3 = " + fmt(emp.bbp));
        Rng rng2(kDefaultSeed, 4);
        const double mp = matched_pairs_estimate(thirds, 1000000, rng2);
        o.require(std::abs(mp + 0.25) <= 0.01, "matched-pairs C3 = " + fmt(mp));
        std::printf("    analytic %s, MC %s, matched pairs %s\n", fmt(c3).c_str(), fmt(emp.bbp).c_str(),
                    fmt(mp).c_str());
    });

    criterion(4, "MARGINAL CONSISTENCY: C(a,b) = -0.5, C(b,b') = -0.25 and far from naive -0.5", 0, [&](Check& o) {
        Rng rng(kDefaultSeed, 5);
        constexpr std::size_t n = 1000000;
        const auto emp = empirical_correlations(sample_data_set(thirds, n, rng));
        const double naive = analytic::bell_correlation(thirds.b(), thirds.bp(), thirds.convention());
        const double se = correlation_std_error(emp.bbp, n);
        o.require(std::abs(emp.ab + 0.5) <= 0.005, "C(a,b) = " + fmt(emp.ab));
        o.require(std::abs(emp.bbp + 0.25) <= 0.005, "C(b,b') = " + fmt(emp.bbp));
        o.require(std::abs(naive + 0.5) < kTol, "naive target = " + fmt(naive));
        const double distance = std::abs(emp.bbp - naive) / se;
        o.require(distance > 25, "only " + fmt(distance) + " standard errors from naive");
        std::printf("    C(a,b) %s, C(b,b') %s, %.1f standard errors from naive %s\n", fmt(emp.ab).c_str(),
                    fmt(emp.bbp).c_str(), distance, fmt(naive).c_str());
    });

    criterion(5, "WIGNER SLACK IDENTITY over the 60^3 spin grid", 30.0, [](Check& o) {
        constexpr std::size_t r = 60;
        double worst = 0.0, min_margin = 1.0;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j)
                for (std::size_t k = 0; k < r; ++k) {
                    const double a = grid_angle(i, r), b = grid_angle(j, r), bp = grid_angle(k, r);
                    const AngleConfig cfg(a, b, bp, AngleConvention::Spin);
                    const auto w = analytic::wigner_margin(cfg, EvaluationMode::Paper);
                    const double s1 = std::sin((a - bp) / 2), c2 = std::cos((a - b) / 2);
                    const double closed = 2 * s1 * s1 * c2 * c2;
                    worst = std::max(worst, std::abs(2 * (w.rhs() - w.lhs()) - closed));
                    min_margin = std::min(min_margin, w.margin());
                }
        o.require(worst < kTol, "max slack mismatch " + fmt(worst));
        o.require(min_margin >= -kTol, "min paper margin " + fmt(min_margin));
        std::printf("    max |2 margin - slack| %s, min margin %s\n", fmt(worst).c_str(), fmt(min_margin).c_str());
    });

    criterion(6, "BELL CORRELATION INEQUALITY: paper-mode min margin over 60^3 grid", 30.0, [](Check& o) {
        const auto r = grid_sweep({60, AngleConvention::Spin, InequalityKind::CorrBell, EvaluationMode::Paper, 1});
        o.require(r.min_margin >= -kTol, "min margin " + fmt(r.min_margin));
        std::printf("    min margin %s over %zu points\n", fmt(r.min_margin).c_str(), r.points);
    });

    criterion(7, "NAIVE VIOLATIONS: witness margins and violation census at resolution 60", 0, [](Check& o) {
        const AngleConfig w(0, 2 * pi / 3, pi / 3, AngleConvention::Spin);
        const double wig = analytic::wigner_margin(w, EvaluationMode::Naive).margin();
        const double bell = analytic::bell_margin(w, EvaluationMode::Naive).margin();
        o.require(std::abs(wig + 0.125) <= kTol, "naive Wigner margin " + fmt(wig));
        o.require(std::abs(bell + 0.5) <= kTol, "naive Bell margin " + fmt(bell));
        const auto census = violation_census(60, AngleConvention::Spin, workers_from_env());
        for (const auto& [key, count] : census) {
            const bool paper = key.second == EvaluationMode::Paper;
            o.require(paper ? count == 0 : count > 0, std::string(to_string(key.first)) + "/" +
                                                          std::string(to_string(key.second)) + " count " +
                                                          std::to_string(count));
            std::printf("    %s %s violations: %zu\n", std::string(to_string(key.first)).c_str(),
                        std::string(to_string(key.second)).c_str(), count);
        }
    });

    criterion(8, "ANALYTIC CROSS-CHECKS on 1e5 random configs", 0, [](Check& o) {
        std::mt19937_64 gen(8);
        std::uniform_real_distribution<double> angle(0.0, 2 * pi);
        std::size_t bad = 0;
        for (int i = 0; i < 100000; ++i) {
            const auto conv = i % 2 ? AngleConvention::Optical : AngleConvention::Spin;
            const AngleConfig cfg(angle(gen), angle(gen), angle(gen), conv);
            const auto p = analytic::joint_probability(cfg.a(), cfg.b(), conv);
            const auto t = analytic::third_pair_probabilities(cfg);
            const bool ok = std::abs(analytic::bell_correlation(cfg.a(), cfg.b(), conv) - (4 * p.pp() - 1)) < kTol &&
                            std::abs(analytic::third_correlation(cfg) - (2 * t.ppp - 2 * t.ppm)) < kTol &&
                            std::abs(t.ppp + t.ppm - 0.5) < kTol;
            if (!ok) ++bad;
        }
        o.require(bad == 0, std::to_string(bad) + " configs failed");
    });

    criterion(9, "REPRODUCIBILITY: simulate seed 42 twice, sweep worker invariance", 0, [](Check& o) {
        const auto dir = std::filesystem::temp_directory_path() / ("bellwig_accept_" + std::to_string(::getpid()));
        std::filesystem::create_directories(dir);
        std::string outs[2];
        for (int i = 0; i < 2; ++i) {
            std::ostringstream out, err;
            const int code = cli::run({"simulate", "--angles", "0,1.0471975511965976,2.0943951023931953", "--n",
                                       "100000", "--seed", "42", "--out", (dir / ("run" + std::to_string(i) + ".csv")).string()},
                                      out, err);
            o.require(code == 0, "simulate exit " + std::to_string(code) + " " + err.str());
            // the summary echoes the output path, which differs by design
            auto summary = nlohmann::json::parse(out.str());
            summary.erase("output");
            outs[i] = summary.dump();
        }
        const auto f0 = slurp(dir / "run0.csv");
        o.require(!f0.empty() && f0 == slurp(dir / "run1.csv"), "simulate files differ");
        o.require(outs[0] == outs[1], "simulate summaries differ");

        SweepOptions opt{40, AngleConvention::Spin, InequalityKind::Wigner, EvaluationMode::Naive, 1};
        std::vector<SweepRecord> serial, parallel;
        const auto r1 = grid_sweep(opt, [&](const SweepRecord& r) { serial.push_back(r); });
        opt.workers = 7;
        const auto r7 = grid_sweep(opt, [&](const SweepRecord& r) { parallel.push_back(r); });
        bool same = serial.size() == parallel.size();
        for (std::size_t i = 0; same && i < serial.size(); ++i) {
            same = serial[i].margin == parallel[i].margin && serial[i].a == parallel[i].a &&
                   serial[i].b == parallel[i].b && serial[i].bp == parallel[i].bp;
        }
        o.require(same, "sweep records depend on worker count");
        o.require(r1.min_margin == r7.min_margin && r1.argmin == r7.argmin && r1.violations == r7.violations,
                  "sweep summary depends on worker count");
        std::filesystem::remove_all(dir);
    });

    std::printf("%s: %d criterion(s) failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
    return failures == 0 ? 0 : 1;
}
