#include <doctest.h>

#include <cmath>

#include "reference_data.hpp"
#include "spms/error.hpp"
#include "spms/su_transform.hpp"

using namespace spms;

TEST_CASE("null moment series, hand-evaluated") {
    CHECK(lambda2(100) == doctest::Approx(0.0223555).epsilon(1e-12));
    CHECK(lambda2(1000) == doctest::Approx(0.0015442555).epsilon(1e-12));
    CHECK(lambda4(200) == doctest::Approx(0.0002205).epsilon(1e-12));
    CHECK(lambda4(100) == doctest::Approx(0.001089).epsilon(1e-12));
    CHECK(beta2_spms(200) == doctest::Approx(3.64879311111).epsilon(1e-11));
    CHECK(beta2_spms(500) == doctest::Approx(3.11395795911).epsilon(1e-11));
}

TEST_CASE("series limits") {
    CHECK(1e7 * lambda2(10000000) == doctest::Approx(1.5).epsilon(1e-5));
    CHECK(1e14 * lambda4(10000000) == doctest::Approx(6.75).epsilon(1e-5));
    CHECK(beta2_spms(1000000000) == doctest::Approx(3.0).epsilon(1e-7));
}

TEST_CASE("lambda4 / lambda2^2 agrees with the beta2 series only to the printed order") {
    // 40-digit evaluation: lambda4(500)/lambda2(500)^2 = 2.97866214...
    const double ratio = lambda4(500) / (lambda2(500) * lambda2(500));
    CHECK(ratio == doctest::Approx(2.978662142).epsilon(1e-9));
    CHECK(std::abs(ratio - beta2_spms(500)) > 0.1);
}

TEST_CASE("su_params chain at n = 200") {
    SUBCASE("as printed") {
        const auto t = su_params(200, TransformVariant::as_printed);
        CHECK(t.lambda2 == doctest::Approx(0.0089319375).epsilon(1e-12));
        CHECK(t.beta2_spms == doctest::Approx(3.64879311111).epsilon(1e-11));
        CHECK(t.w2 == doctest::Approx(reference::as_printed_200_w2).epsilon(1e-10));
        CHECK(t.delta == doctest::Approx(reference::as_printed_200_delta).epsilon(1e-10));
        CHECK(t.alpha == doctest::Approx(reference::as_printed_200_alpha).epsilon(1e-10));
    }
    SUBCASE("full series, moment-matched alpha") {
        const auto t = su_params(200, TransformVariant::full_series);
        CHECK(t.w2 == doctest::Approx(1.30164858791).epsilon(1e-10));
        CHECK(t.alpha == doctest::Approx(2.57492361074).epsilon(1e-10));
    }
    SUBCASE("published tables") {
        const auto t = su_params(200, TransformVariant::published_tables);
        CHECK(t.lambda2 == doctest::Approx(0.008525).epsilon(1e-12));
        CHECK(t.beta2_spms == doctest::Approx(3.50453333333).epsilon(1e-11));
        CHECK(t.w2 == doctest::Approx(1.23809442756).epsilon(1e-10));
        CHECK(t.delta == doctest::Approx(3.0601405283).epsilon(1e-10));
        CHECK(t.alpha == doctest::Approx(2.89828028249).epsilon(1e-10));
    }
}

TEST_CASE("z_transform values against the high-precision chain") {
    struct Row {
        TransformVariant v;
        double z[3];
    };
    const double spms_values[3] = {0.1, -0.25, 0.4};
    const Row rows[] = {
        {TransformVariant::as_printed, {1.52199427314, -3.21792906547, 4.35190285453}},
        {TransformVariant::published_tables, {1.11847681241, -2.55243925749, 3.64724343056}},
        {TransformVariant::full_series, {1.10217325285, -2.48042891603, 3.50328892104}},
    };
    for (const auto& r : rows) {
        for (int k = 0; k < 3; ++k) {
            CHECK(z_transform(spms_values[k], 200, r.v) == doctest::Approx(r.z[k]).epsilon(1e-10));
        }
    }
}

TEST_CASE("z_transform basic shape") {
    for (std::size_t n : {8, 40, 100, 1000}) {
        CHECK(z_transform(0.0, n) == 0.0);
        for (double v : {0.01, 0.3, 2.0, 50.0}) {
            CHECK(z_transform(-v, n) == -z_transform(v, n));
        }
        double prev = -INFINITY;
        for (double v = -3.0; v <= 3.0; v += 0.01) {
            const double z = z_transform(v, n);
            CHECK(z > prev);
            prev = z;
        }
    }
    // Large negative inputs stay finite and odd (asinh form, no cancellation).
    CHECK(std::isfinite(z_transform(-1e12, 200)));
}

TEST_CASE("transform degenerates to the identity in Y for large n") {
    for (auto v : {TransformVariant::published_tables, TransformVariant::full_series}) {
        const auto t = su_params(100000000, v);
        const double y = 0.5;
        CHECK(t.z(y * std::sqrt(t.lambda2)) / y == doctest::Approx(1.0).epsilon(1e-4));
    }
}

TEST_CASE("invariants for every n") {
    double prev_beta2 = INFINITY;
    for (std::size_t n = 8; n <= 1000000; n += (n < 2000 ? 1 : n / 100)) {
        for (auto v : {TransformVariant::published_tables, TransformVariant::full_series,
                       TransformVariant::as_printed}) {
            const auto t = su_params(n, v);
            REQUIRE(t.lambda2 > 0.0);
            REQUIRE(t.beta2_spms > 3.0);
            REQUIRE(t.w2 > 1.0);
            REQUIRE(t.delta > 0.0);
            REQUIRE(t.alpha > 0.0);
            REQUIRE(std::isfinite(t.alpha));
        }
        REQUIRE(lambda4(n) > 0.0);
        REQUIRE(beta2_spms(n) < prev_beta2);
        prev_beta2 = beta2_spms(n);
    }
}

TEST_CASE("small n is rejected") {
    CHECK_THROWS_AS((void)su_params(7), Error);
    CHECK_THROWS_AS((void)lambda2(3), Error);
}

TEST_CASE("variant names round-trip") {
    for (auto v : {TransformVariant::published_tables, TransformVariant::full_series, TransformVariant::as_printed}) {
        CHECK(parse_variant(to_string(v)) == v);
    }
    CHECK_THROWS_AS((void)parse_variant("bogus"), Error);
}
