#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace spms {

/**
 * @brief A validated sample of real observations.
 *
 * Construction enforces n >= 3, finite values and positive variance, so
 * every downstream statistic can assume m2 > 0.
 */
class Sample {
public:
    /// @throws spms::Error (sample_too_small, non_finite, zero_variance)
    explicit Sample(std::vector<double> values);

    [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }

private:
    std::vector<double> values_;
};

/**
 * @brief Biased central moments (divisor n) and the standardized shape
 *        statistics derived from them.
 */
struct MomentSummary {
    std::size_t n = 0;
    double mean = 0.0;
    double m2 = 0.0;
    double m3 = 0.0;
    double m4 = 0.0;
    double sqrt_b1 = 0.0;  ///< m3 / m2^{3/2}
    double b2 = 0.0;       ///< m4 / m2^2

    [[nodiscard]] double b1() const noexcept { return sqrt_b1 * sqrt_b1; }
};

/**
 * @brief Two-pass central moments of a sample.
 *
 * The mean is accumulated first, then the centred powers, both in index
 * order 0..n-1. Results are therefore bit-identical for a given input
 * order; a permuted input can differ in the last ulp.
 */
[[nodiscard]] MomentSummary central_moments(const Sample& sample);

/// Same as above on raw data. Only checks n >= 1 and m2 > 0.
/// @throws spms::Error (sample_too_small, zero_variance)
[[nodiscard]] MomentSummary central_moments(std::span<const double> values);

/// Returns {a + b * x_i}. @throws spms::Error (zero_scale) when b == 0.
[[nodiscard]] Sample shift_scale(const Sample& sample, double a, double b);

}  // namespace spms
