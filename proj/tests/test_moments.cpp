#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "spms/error.hpp"
#include "spms/moments.hpp"

using namespace spms;

namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected spms::Error");
    return ErrorCode::io_error;
}

std::vector<double> random_values(std::mt19937_64& rng, std::size_t n) {
    std::lognormal_distribution<double> d(0.0, 0.7);
    std::vector<double> v(n);
    for (double& x : v) x = d(rng);
    return v;
}

}  // namespace

TEST_CASE("central moments of small hand-checked samples") {
    SUBCASE("symmetric {-1, 0, 1}") {
        const auto m = central_moments(Sample({-1, 0, 1}));
        CHECK(m.m2 == doctest::Approx(2.0 / 3.0));
        CHECK(m.m3 == 0.0);
        CHECK(m.m4 == doctest::Approx(2.0 / 3.0));
        CHECK(m.sqrt_b1 == 0.0);
        CHECK(m.b2 == doctest::Approx(1.5));
    }
    SUBCASE("{0, 0, 1}") {
        const auto m = central_moments(Sample({0, 0, 1}));
        CHECK(m.m2 == doctest::Approx(2.0 / 9.0));
        CHECK(m.m3 == doctest::Approx(2.0 / 27.0));
        CHECK(m.m4 == doctest::Approx(2.0 / 27.0));
        CHECK(m.sqrt_b1 == doctest::Approx(0.707106781187).epsilon(1e-12));
        CHECK(m.b2 == doctest::Approx(1.5));
    }
    SUBCASE("{1, 2, 3, 4, 10}") {
        // Exact rationals: m2 = 10, m3 = 36, m4 = 1394/5.
        const auto m = central_moments(Sample({1, 2, 3, 4, 10}));
        CHECK(m.mean == doctest::Approx(4.0));
        CHECK(m.m2 == doctest::Approx(10.0));
        CHECK(m.m3 == doctest::Approx(36.0));
        CHECK(m.m4 == doctest::Approx(278.8));
        CHECK(m.sqrt_b1 == doctest::Approx(1.13841995766).epsilon(1e-12));
        CHECK(m.b2 == doctest::Approx(2.788));
    }
}

TEST_CASE("sample validation") {
    CHECK(code_of([] { Sample({1, 2}); }) == ErrorCode::sample_too_small);
    CHECK(code_of([] { Sample({3, 3, 3, 3}); }) == ErrorCode::zero_variance);
    CHECK(code_of([] { Sample({1, std::numeric_limits<double>::quiet_NaN(), 3}); }) == ErrorCode::non_finite);
    CHECK(code_of([] { Sample({1, std::numeric_limits<double>::infinity(), 3}); }) == ErrorCode::non_finite);
    CHECK(code_of([] { (void)central_moments(std::vector<double>{}); }) == ErrorCode::sample_too_small);
}

TEST_CASE("shift_scale") {
    const Sample s({1, 2, 3});
    auto vals = [](const Sample& x) { return std::vector<double>(x.values().begin(), x.values().end()); };
    CHECK(vals(shift_scale(s, 0, 1)) == std::vector<double>{1, 2, 3});
    CHECK(vals(shift_scale(s, 5, 1)) == std::vector<double>{6, 7, 8});
    CHECK(vals(shift_scale(s, 0, -1)) == std::vector<double>{-1, -2, -3});
    CHECK(code_of([&] { (void)shift_scale(s, 1, 0); }) == ErrorCode::zero_scale);
}

TEST_CASE("property: location-scale invariance and reflection") {
    std::mt19937_64 rng(20240517);
    std::uniform_real_distribution<double> shift(-100.0, 100.0), scale(0.01, 50.0);
    constexpr double tol = 10.0 * std::numeric_limits<double>::epsilon();
    for (int trial = 0; trial < 200; ++trial) {
        const Sample s(random_values(rng, 5 + trial % 60));
        const auto base = central_moments(s);
        const double a = shift(rng), b = scale(rng);
        const auto pos = central_moments(shift_scale(s, a, b));
        const auto neg = central_moments(shift_scale(s, a, -b));
        // Relative tolerance scaled by the magnitudes involved in the cancellation.
        const double scale_sb1 = std::max(1.0, std::abs(base.sqrt_b1));
        CHECK(std::abs(pos.sqrt_b1 - base.sqrt_b1) <= 1e3 * tol * scale_sb1 * (1.0 + std::abs(a) / b));
        CHECK(std::abs(pos.b2 - base.b2) <= 1e3 * tol * base.b2 * (1.0 + std::abs(a) / b));
        CHECK(std::abs(neg.sqrt_b1 + base.sqrt_b1) <= 1e3 * tol * scale_sb1 * (1.0 + std::abs(a) / b));
        CHECK(std::abs(neg.b2 - base.b2) <= 1e3 * tol * base.b2 * (1.0 + std::abs(a) / b));
    }
}

TEST_CASE("property: pure scaling preserves shape statistics to 10 ulps") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const Sample s(random_values(rng, 8 + trial % 40));
        const auto base = central_moments(s);
        const auto scaled = central_moments(shift_scale(s, 0.0, 4.0));  // power of two: exact
        const double eps = 10.0 * std::numeric_limits<double>::epsilon();
        CHECK(std::abs(scaled.sqrt_b1 - base.sqrt_b1) <= eps * std::abs(base.sqrt_b1));
        CHECK(std::abs(scaled.b2 - base.b2) <= eps * base.b2);
    }
}

TEST_CASE("property: b2 >= 1 + b1") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> small(0, 3);
    for (int trial = 0; trial < 2000; ++trial) {
        std::vector<double> v(3 + trial % 20);
        for (double& x : v) x = small(rng);
        if (std::all_of(v.begin(), v.end(), [&](double x) { return x == v.front(); })) v.back() += 1.0;
        const auto m = central_moments(Sample(v));
        CHECK(m.b2 >= 1.0 + m.b1() - 1e-12);
    }
}

TEST_CASE("summation order: repeat calls are bit-identical, permutations agree to rounding") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        auto v = random_values(rng, 100);
        const auto a = central_moments(Sample(v));
        const auto b = central_moments(Sample(v));
        CHECK(a.sqrt_b1 == b.sqrt_b1);
        CHECK(a.b2 == b.b2);
        std::shuffle(v.begin(), v.end(), rng);
        const auto c = central_moments(Sample(v));
        CHECK(c.sqrt_b1 == doctest::Approx(a.sqrt_b1).epsilon(1e-12));
        CHECK(c.b2 == doctest::Approx(a.b2).epsilon(1e-12));
    }
}
