#pragma once

// Per-replication work and order-dependent reductions shared by the OpenMP
// kernels and the serial reference.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "spms/montecarlo.hpp"

namespace spms::detail {

/// spms of one standard normal sample on (seed, stream); NaN if degenerate.
double null_spms(std::size_t n, std::uint64_t seed, std::uint64_t stream, std::span<double> scratch);

/// Applies `tests` to one sample of `spec` on (seed, stream), writing tests.size() results.
void replicate_tests(const AlternativeSpec& spec, std::size_t n, std::uint64_t seed, std::uint64_t stream,
                     const std::vector<TestName>& tests, TransformVariant variant, std::span<double> scratch,
                     TestResult* out);

void check_levels(const std::vector<double>& levels);
void check_tests(const std::vector<TestName>& tests);
void check_reps(std::size_t reps);

/// Turns per-replication z values (NaN = undefined) into a CalibrationRow.
CalibrationRow tally_calibration(std::size_t n, std::span<const double> z, const std::vector<double>& levels);

/// Thresholds from a reps x tests row-major block of null results.
CriticalValues thresholds_from(std::size_t n, double level, const std::vector<TestName>& tests,
                               std::size_t null_reps, std::uint64_t seed, TransformVariant variant,
                               std::span<const TestResult> results);

PowerCell tally_power(const AlternativeSpec& alt, std::size_t n, std::size_t reps, double level,
                      const std::vector<TestName>& tests, CriticalMode mode, const CriticalValues* critical,
                      std::span<const TestResult> results);

}  // namespace spms::detail
