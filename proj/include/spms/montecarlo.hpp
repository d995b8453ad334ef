#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "spms/distributions.hpp"
#include "spms/skewtests.hpp"
#include "spms/su_transform.hpp"

namespace spms {

/**
 * Monte Carlo experiments on the normality tests.
 *
 * Replication i always draws from substream (seed, i), so outcomes depend
 * only on (seed, configuration). Per-replication results are written to
 * their own slots and reduced in index order afterwards, which makes every
 * aggregate bit-identical for any thread count. The functions in
 * spms::serial compute the same quantities with plain loops and exist as a
 * reference for testing and benchmarking.
 */

struct RunOptions {
    int threads = 0;  ///< 0 = OpenMP default
    TransformVariant variant = default_variant;
};

/// Stream ids at or above this offset are reserved for the null reference
/// simulations behind empirical critical values.
inline constexpr std::uint64_t null_stream_offset = std::uint64_t{1} << 63;

struct CalibrationRow {
    std::size_t n = 0;
    std::size_t reps = 0;
    std::vector<double> levels;
    std::vector<double> rejection_rates;
    std::vector<std::size_t> rejections;
    std::size_t undefined_count = 0;
};

/// Null rejection rates of the two-sided spms test: reject when |Z| > z_{1-level/2}.
/// Undefined replications are counted separately and never reject.
/// @throws spms::Error (invalid_level, sample_too_small, invalid_config)
[[nodiscard]] CalibrationRow calibrate(std::size_t n, std::size_t reps, const std::vector<double>& levels,
                                       std::uint64_t seed, const RunOptions& opts = {});

/// How a power study decides rejection.
enum class CriticalMode {
    empirical,   ///< size-corrected: thresholds from a simulated null at the same n
    asymptotic,  ///< each test's own normal approximation (p < level)
};

/**
 * @brief Null rejection thresholds, one per test.
 *
 * A replication rejects when its extremeness (|z| for two-sided tests, z for
 * Shapiro-Wilk) strictly exceeds the threshold.
 */
struct CriticalValues {
    std::size_t n = 0;
    double level = 0.0;
    std::size_t null_reps = 0;
    std::uint64_t seed = 0;
    TransformVariant variant = default_variant;
    std::map<TestName, double> threshold;
};

/// Extremeness used for empirical thresholds.
[[nodiscard]] double extremeness(const TestResult& r) noexcept;

/// Simulates `null_reps` standard normal samples on the reserved null streams.
[[nodiscard]] CriticalValues null_critical_values(std::size_t n, double level,
                                                  const std::vector<TestName>& tests,
                                                  std::size_t null_reps, std::uint64_t seed,
                                                  const RunOptions& opts = {});

struct PowerOptions {
    RunOptions run;
    CriticalMode mode = CriticalMode::empirical;
    std::size_t null_reps = 100000;
    /// Reused instead of simulating when set; must match n, level and tests.
    const CriticalValues* critical = nullptr;
};

struct PowerCell {
    AlternativeSpec alternative;
    std::size_t n = 0;
    std::size_t reps = 0;
    double level = 0.0;
    CriticalMode mode = CriticalMode::empirical;
    std::vector<TestName> tests;
    std::map<TestName, double> powers;
    std::map<TestName, std::size_t> rejections;
    std::map<TestName, std::size_t> undefined_counts;
    std::optional<CriticalValues> critical;
};

/// Every requested test sees the same sample in each replication.
/// @throws spms::Error (invalid_params, invalid_level, invalid_config, sample_too_small)
[[nodiscard]] PowerCell power_study(const AlternativeSpec& alternative, std::size_t n, std::size_t reps,
                                    double level, const std::vector<TestName>& tests, std::uint64_t seed,
                                    const PowerOptions& opts = {});

enum class HistStatistic { spms_raw, spms_z };

struct HistogramData {
    HistStatistic statistic = HistStatistic::spms_raw;
    std::size_t n = 0;
    std::size_t reps = 0;
    std::vector<double> bin_edges;
    std::vector<std::size_t> counts;
    std::size_t out_of_range = 0;   ///< below the first or at/above the last edge
    std::size_t undefined = 0;      ///< replications with a degenerate spms

    [[nodiscard]] std::size_t total() const noexcept;
};

/// Histogram of the null statistic. Without `range` the edges span
/// mean +/- 5 empirical standard deviations.
[[nodiscard]] HistogramData null_histogram(HistStatistic statistic, std::size_t n, std::size_t reps,
                                           std::size_t bins, std::uint64_t seed, const RunOptions& opts = {},
                                           std::optional<std::pair<double, double>> range = std::nullopt);

struct MomentEstimate {
    double empirical = 0.0;
    double series = 0.0;
    double se = 0.0;

    /// |empirical - series| / se
    [[nodiscard]] double deviation() const noexcept;
};

/// Empirical null moments of spms about zero against the asymptotic series.
struct MomentReport {
    std::size_t n = 0;
    std::size_t reps = 0;
    std::size_t undefined = 0;
    MomentEstimate mean;
    MomentEstimate variance;   ///< series: lambda2(n)
    MomentEstimate third;
    MomentEstimate kurtosis;   ///< series: beta2_spms(n)
};

/// @throws spms::Error (invalid_config) when reps < 10^4.
[[nodiscard]] MomentReport moment_validation(std::size_t n, std::size_t reps, std::uint64_t seed,
                                             const RunOptions& opts = {});

/// Raw null spms values of replications 0..reps-1; NaN marks a degenerate denominator.
[[nodiscard]] std::vector<double> null_spms_values(std::size_t n, std::size_t reps, std::uint64_t seed,
                                                   const RunOptions& opts = {});

namespace serial {

[[nodiscard]] CalibrationRow calibrate(std::size_t n, std::size_t reps, const std::vector<double>& levels,
                                       std::uint64_t seed, TransformVariant variant = default_variant);

[[nodiscard]] PowerCell power_study(const AlternativeSpec& alternative, std::size_t n, std::size_t reps,
                                    double level, const std::vector<TestName>& tests, std::uint64_t seed,
                                    CriticalMode mode, std::size_t null_reps,
                                    TransformVariant variant = default_variant);

[[nodiscard]] std::vector<double> null_spms_values(std::size_t n, std::size_t reps, std::uint64_t seed);

}  // namespace serial

}  // namespace spms
