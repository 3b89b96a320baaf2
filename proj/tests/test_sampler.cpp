#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>
#include <set>

#include "bellwig/analytic.hpp"
#include "bellwig/data_inequality.hpp"
#include "bellwig/sampler.hpp"

using namespace bellwig;

namespace {

constexpr double pi = std::numbers::pi;
constexpr auto Spin = AngleConvention::Spin;

}  // namespace

TEST_SUITE("rng") {
    TEST_CASE("identical seeds give identical streams; streams differ") {
        Rng a(123), b(123), c(124), d(123, 1);
        bool differs_seed = false, differs_stream = false;
        for (int i = 0; i < 1000; ++i) {
            const auto x = a.next_u64();
            CHECK(x == b.next_u64());
            differs_seed |= x != c.next_u64();
            differs_stream |= x != d.next_u64();
        }
        CHECK(differs_seed);
        CHECK(differs_stream);
        CHECK(a == b);
    }

    TEST_CASE("first outputs match a reference implementation of the documented algorithm") {
        // values from an independent Python transcription of splitmix64 seeding
        // plus xoshiro256**; a change here breaks replay of earlier runs
        Rng r(42);
        CHECK(r.next_u64() == 0x19e479e2aaa77bfbULL);
        CHECK(r.next_u64() == 0x5e3efe753be27527ULL);
        CHECK(r.next_u64() == 0xc3ed7125b780200aULL);
        Rng s(42, 7);
        CHECK(s.next_u64() == 0x288439a8e1597adeULL);
        CHECK(s.next_u64() == 0x076f68cc322b2a29ULL);
    }

    TEST_CASE("uniform stays in [0, 1) with mean near 1/2") {
        Rng r(5);
        double sum = 0;
        for (int i = 0; i < 100000; ++i) {
            const double u = r.uniform();
            REQUIRE(u >= 0.0);
            REQUIRE(u < 1.0);
            sum += u;
        }
        CHECK(std::abs(sum / 100000 - 0.5) < 0.005);
    }

    TEST_CASE("below covers the range without leaving it") {
        Rng r(9);
        std::set<std::uint64_t> seen;
        for (int i = 0; i < 10000; ++i) {
            const auto v = r.below(7);
            REQUIRE(v < 7);
            seen.insert(v);
        }
        CHECK(seen.size() == 7);
        CHECK(r.below(1) == 0);
    }
}

TEST_CASE("sample_pair: same settings always disagree, opposite settings always agree") {
    Rng rng(1);
    for (int i = 0; i < 10000; ++i) {
        const auto [x, y] = sample_pair(0, 0, Spin, rng);
        REQUIRE(x == -y);
        const auto [u, v] = sample_pair(0, pi, Spin, rng);
        REQUIRE(u == v);
    }
}

TEST_CASE("sample_pair cell frequencies match joint_probability") {
    Rng rng(2);
    constexpr int n = 1000000;
    std::array<int, 4> counts{};
    for (int i = 0; i < n; ++i) {
        const auto [x, y] = sample_pair(0, pi / 2, Spin, rng);
        ++counts[(x.value() > 0 ? 0 : 2) + (y.value() > 0 ? 0 : 1)];
    }
    for (int c : counts) CHECK(std::abs(static_cast<double>(c) / n - 0.25) < 0.002);
}

TEST_CASE("sample_triple: identical settings force b = b' = -a") {
    Rng rng(3);
    const AngleConfig cfg(0, 0, 0, Spin);
    for (int i = 0; i < 10000; ++i) {
        const auto t = sample_triple(cfg, rng);
        REQUIRE(t.b == -t.a);
        REQUIRE(t.bp == -t.a);
    }
}

TEST_CASE("sample_triple marginals at (0, pi/3, 2pi/3)") {
    Rng rng(4);
    const AngleConfig cfg(0, pi / 3, 2 * pi / 3, Spin);
    constexpr int n = 1000000;
    long long pp_bbp = 0, ab = 0, abp = 0;
    for (int i = 0; i < n; ++i) {
        const auto t = sample_triple(cfg, rng);
        pp_bbp += (t.b.value() > 0 && t.bp.value() > 0);
        ab += t.a * t.b;
        abp += t.a * t.bp;
    }
    CHECK(std::abs(static_cast<double>(pp_bbp) / n - 3.0 / 16) < 0.002);
    CHECK(std::abs(static_cast<double>(ab) / n + 0.5) < 0.005);
    CHECK(std::abs(static_cast<double>(abp) / n - 0.5) < 0.005);
}

TEST_CASE("sample_data_set reproduces the sample_triple stream") {
    const AngleConfig cfg(0.4, 1.3, 2.9, AngleConvention::Optical);
    Rng r1(77), r2(77);
    const auto d = sample_data_set(cfg, 500, r1);
    for (std::size_t i = 0; i < d.size(); ++i) REQUIRE(d[i] == sample_triple(cfg, r2));
    CHECK_THROWS_AS(sample_data_set(cfg, 0, r1), EmptyData);
}

TEST_CASE("matched_pairs_estimate examples") {
    Rng rng(5);
    CHECK(matched_pairs_estimate(AngleConfig(0, 0, 0, Spin), 50, rng) == 1.0);
    CHECK(std::abs(matched_pairs_estimate(AngleConfig(0, pi / 3, 2 * pi / 3, Spin), 1000000, rng) + 0.25) < 0.01);
    CHECK(std::abs(matched_pairs_estimate(AngleConfig(0, pi / 2, 0, Spin), 1000000, rng)) < 0.01);
}

TEST_CASE("matched_pairs errors and bookkeeping") {
    Rng rng(6);
    const AngleConfig cfg(0, pi / 3, 2 * pi / 3, Spin);
    CHECK_THROWS_AS(matched_pairs(cfg, 1, rng), InsufficientMatches);
    CHECK_THROWS_AS(matched_pairs(cfg, 0, rng), InvalidValue);
    const auto r = matched_pairs(cfg, 1000, rng);
    CHECK(r.n_pairs <= 1000);
    CHECK(r.n_pairs > 900);
    Rng x(99), y(99);
    CHECK(matched_pairs(cfg, 5000, x).estimate == matched_pairs(cfg, 5000, y).estimate);
}

TEST_CASE("matched pairs agrees with the triple sampler on (b, b')") {
    const AngleConfig cfg(0.2, 1.1, 2.5, Spin);
    Rng r1(10), r2(11);
    constexpr std::size_t n = 400000;
    const auto mp = matched_pairs(cfg, n, r1);
    const auto tri = empirical_correlations(sample_data_set(cfg, n, r2));
    const double se = std::hypot(correlation_std_error(mp.estimate, mp.n_pairs), correlation_std_error(tri.bbp, n));
    CHECK(std::abs(mp.estimate - tri.bbp) < 5 * se);
}

TEST_CASE("(b, b') converges to the conditional form, not to -cos(b - b')") {
    const AngleConfig cfg(0, pi / 3, 2 * pi / 3, Spin);
    Rng rng(12);
    constexpr std::size_t n = 1000000;
    const auto emp = empirical_correlations(sample_data_set(cfg, n, rng));
    const double se = correlation_std_error(emp.bbp, n);
    CHECK(std::abs(emp.ab - analytic::bell_correlation(cfg.a(), cfg.b(), Spin)) < 5 * correlation_std_error(emp.ab, n));
    CHECK(std::abs(emp.abp - analytic::bell_correlation(cfg.a(), cfg.bp(), Spin)) <
          5 * correlation_std_error(emp.abp, n));
    CHECK(std::abs(emp.bbp - analytic::third_correlation(cfg)) < 5 * se);
    CHECK(std::abs(emp.bbp - analytic::bell_correlation(cfg.b(), cfg.bp(), Spin)) > 25 * se);
}

TEST_CASE("convergence_study") {
    const AngleConfig cfg(0, pi / 3, 2 * pi / 3, Spin);
    const std::vector<std::size_t> n_list{100, 10000, 1000000};
    const auto records = convergence_study(cfg, n_list, kDefaultSeed);
    REQUIRE(records.size() == 3);
    for (std::size_t i = 0; i < records.size(); ++i) {
        CHECK(records[i].n_samples == n_list[i]);
        CHECK(records[i].analytic == doctest::Approx(-0.25));
        CHECK(records[i].seed == kDefaultSeed);
    }
    CHECK(records[1].abs_error < records[0].abs_error);
    CHECK(records[2].abs_error < records[1].abs_error);
    CHECK(records.back().abs_error < 5 * records.back().std_error);

    const auto again = convergence_study(cfg, n_list, kDefaultSeed);
    for (std::size_t i = 0; i < records.size(); ++i) CHECK(again[i].estimate == records[i].estimate);

    CHECK_THROWS_AS(convergence_study(cfg, std::vector<std::size_t>{}, 1), InvalidValue);
    CHECK_THROWS_AS(convergence_study(cfg, std::vector<std::size_t>{100, 10}, 1), InvalidValue);
    CHECK_THROWS_AS(convergence_study(cfg, std::vector<std::size_t>{0, 10}, 1), InvalidValue);
}

TEST_CASE("every sampled data set satisfies the exact data inequality") {
    Rng gen(13);
    for (int rep = 0; rep < 500; ++rep) {
        const AngleConfig cfg(2 * pi * gen.uniform(), 2 * pi * gen.uniform(), 2 * pi * gen.uniform(),
                              rep % 2 ? Spin : AngleConvention::Optical);
        const auto d = sample_data_set(cfg, 1 + gen.below(200), gen);
        REQUIRE(data_bell_margin_3(d).satisfied());
    }
}
