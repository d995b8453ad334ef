#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "spms/error.hpp"
#include "spms/moments.hpp"
#include "spms/su_transform.hpp"

namespace spms {

enum class TestName { spms, sqrt_b1, shapiro_wilk, lin_mudholkar };

inline constexpr std::array<TestName, 4> all_tests = {
    TestName::spms, TestName::sqrt_b1, TestName::shapiro_wilk, TestName::lin_mudholkar};

/// Short identifiers used on the command line and in CSV output: spms, sqrt_b1, sw, lm.
[[nodiscard]] std::string_view to_string(TestName t) noexcept;
/// @throws spms::Error (invalid_config)
[[nodiscard]] TestName parse_test_name(std::string_view name);

/// True for tests that reject in both tails of z_value.
[[nodiscard]] constexpr bool is_two_sided(TestName t) noexcept {
    return t != TestName::shapiro_wilk;
}

/**
 * @brief Outcome of one normality test on one sample.
 *
 * When `defined` is false the numeric fields carry no meaning and
 * `failure` says why (degenerate denominator or correlation).
 */
struct TestResult {
    TestName test = TestName::spms;
    double raw_statistic = 0.0;
    double z_value = 0.0;
    double p_value = 1.0;
    bool defined = true;
    std::optional<ErrorCode> failure;

    /// Undefined results never reject.
    [[nodiscard]] bool rejects(double level) const noexcept { return defined && p_value < level; }
};

/// Minimum sample sizes enforced by the tests.
inline constexpr std::size_t min_test_n = 8;
inline constexpr std::size_t max_shapiro_wilk_n = 5000;

/// Relative-scale guard on 5 b2 - 6 b1 - 9.
[[nodiscard]] bool pms_denominator_degenerate(double sqrt_b1, double b2) noexcept;

/// sqrt_b1 (b2 + 3) / (2 (5 b2 - 6 b1 - 9)).
/// @throws spms::Error (degenerate_denominator)
[[nodiscard]] double spms_statistic(const MomentSummary& summary);

/// Population counterpart of spms_statistic from sqrt(beta1) and beta2.
/// @throws spms::Error (degenerate_denominator)
[[nodiscard]] double population_pms(double sqrt_beta1, double beta2);

/// Scaled moment deviations U = sqrt(n)(m2 - 1), V = sqrt(n) m3, W = sqrt(n)(m4 - 3).
struct SeriesState {
    double u = 0.0;
    double v = 0.0;
    double w = 0.0;
    std::size_t n = 0;
};

[[nodiscard]] SeriesState series_state(const MomentSummary& summary);

/// Power series of spms in 1/sqrt(n), through the n^-2 term.
[[nodiscard]] double spms_series(const SeriesState& state);

/// Only the leading n^-1/2 (V/2) term of the series.
[[nodiscard]] double spms_series_leading(const SeriesState& state);

/// spms with the S_U normalization. n >= 8.
[[nodiscard]] TestResult spms_test(const Sample& sample, TransformVariant variant = default_variant);
[[nodiscard]] TestResult spms_test(const MomentSummary& summary,
                                   TransformVariant variant = default_variant);

/// D'Agostino's S_U normalization of sqrt(b1), exact finite-n null moments. n >= 8.
[[nodiscard]] TestResult sqrt_b1_test(const Sample& sample);
[[nodiscard]] TestResult sqrt_b1_test(const MomentSummary& summary);

/// Null moments of sqrt(b1) under normality.
[[nodiscard]] double sqrt_b1_null_variance(std::size_t n);
[[nodiscard]] double sqrt_b1_null_kurtosis(std::size_t n);

/**
 * @brief Shapiro-Wilk W with Royston's AS R94 approximations.
 *
 * z_value is the normalized log(1 - W); p_value is its upper tail, so small
 * W (large z) rejects. Valid for 8 <= n <= 5000.
 */
[[nodiscard]] TestResult shapiro_wilk_test(const Sample& sample);

/// Antisymmetric AS R94 coefficients for the ascending order statistics.
/// The n/2 leading entries are negative; sum of squares is 1.
[[nodiscard]] std::vector<double> shapiro_wilk_coefficients(std::size_t n);

/// Lin-Mudholkar correlation between x_i and the cube root of the
/// leave-one-out variance; z = atanh(r) sqrt(n / 3). n >= 8.
[[nodiscard]] TestResult lin_mudholkar_test(const Sample& sample);

/// Dispatch by name. spms uses `variant`; the other tests ignore it.
[[nodiscard]] TestResult run_test(TestName test, const Sample& sample,
                                  TransformVariant variant = default_variant);

}  // namespace spms
