#include "spms/montecarlo.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "replicate.hpp"
#include "spms/error.hpp"
#include "spms/normal.hpp"

namespace spms {

namespace detail {

double null_spms(std::size_t n, std::uint64_t seed, std::uint64_t stream, std::span<double> scratch) {
    PhiloxStream gen(seed, stream);
    auto x = scratch.first(n);
    draw(AlternativeSpec::normal(), gen, x);
    const MomentSummary m = central_moments(x);
    if (pms_denominator_degenerate(m.sqrt_b1, m.b2)) return std::numeric_limits<double>::quiet_NaN();
    return spms_statistic(m);
}

void replicate_tests(const AlternativeSpec& spec, std::size_t n, std::uint64_t seed, std::uint64_t stream,
                     const std::vector<TestName>& tests, TransformVariant variant, std::span<double> scratch,
                     TestResult* out) {
    PhiloxStream gen(seed, stream);
    auto x = scratch.first(n);
    draw(spec, gen, x);
    try {
        const Sample s(std::vector<double>(x.begin(), x.end()));
        for (std::size_t k = 0; k < tests.size(); ++k) out[k] = run_test(tests[k], s, variant);
    } catch (const Error& e) {
        // Only data-dependent failures land here (e.g. a tied sample).
        for (std::size_t k = 0; k < tests.size(); ++k) {
            out[k] = TestResult{tests[k], std::numeric_limits<double>::quiet_NaN(),
                                std::numeric_limits<double>::quiet_NaN(), 1.0, false, e.code()};
        }
    }
}

void check_levels(const std::vector<double>& levels) {
    if (levels.empty()) throw Error(ErrorCode::invalid_level, "no significance levels given");
    for (double l : levels) {
        if (!(l > 0.0 && l < 1.0)) {
            throw Error(ErrorCode::invalid_level, "significance level must lie in (0, 1), got " + std::to_string(l));
        }
    }
}

void check_tests(const std::vector<TestName>& tests) {
    if (tests.empty()) throw Error(ErrorCode::invalid_config, "no tests requested");
}

void check_reps(std::size_t reps) {
    if (reps == 0) throw Error(ErrorCode::invalid_config, "replication count must be at least 1");
}

CalibrationRow tally_calibration(std::size_t n, std::span<const double> z, const std::vector<double>& levels) {
    CalibrationRow row;
    row.n = n;
    row.reps = z.size();
    row.levels = levels;
    row.rejections.assign(levels.size(), 0);
    std::vector<double> crit(levels.size());
    for (std::size_t k = 0; k < levels.size(); ++k) crit[k] = two_sided_critical(levels[k]);
    for (double v : z) {
        if (std::isnan(v)) {
            ++row.undefined_count;
            continue;
        }
        for (std::size_t k = 0; k < levels.size(); ++k) row.rejections[k] += std::abs(v) > crit[k];
    }
    for (std::size_t r : row.rejections) row.rejection_rates.push_back(static_cast<double>(r) / row.reps);
    return row;
}

CriticalValues thresholds_from(std::size_t n, double level, const std::vector<TestName>& tests,
                               std::size_t null_reps, std::uint64_t seed, TransformVariant variant,
                               std::span<const TestResult> results) {
    CriticalValues cv{n, level, null_reps, seed, variant, {}};
    const std::size_t t = tests.size();
    std::vector<double> e;
    e.reserve(null_reps);
    for (std::size_t k = 0; k < t; ++k) {
        e.clear();
        for (std::size_t i = 0; i < null_reps; ++i) {
            const TestResult& r = results[i * t + k];
            if (r.defined) e.push_back(extremeness(r));
        }
        if (e.empty()) throw Error(ErrorCode::invalid_config, "null simulation produced no defined statistics");
        std::sort(e.begin(), e.end());
        // At most floor(level * R) null values exceed the threshold.
        const auto exceed = static_cast<std::size_t>(std::floor(level * static_cast<double>(e.size())));
        cv.threshold[tests[k]] = e[e.size() - 1 - std::min(exceed, e.size() - 1)];
    }
    return cv;
}

PowerCell tally_power(const AlternativeSpec& alt, std::size_t n, std::size_t reps, double level,
                      const std::vector<TestName>& tests, CriticalMode mode, const CriticalValues* critical,
                      std::span<const TestResult> results) {
    PowerCell cell;
    cell.alternative = alt;
    cell.n = n;
    cell.reps = reps;
    cell.level = level;
    cell.mode = mode;
    cell.tests = tests;
    if (critical) cell.critical = *critical;
    const std::size_t t = tests.size();
    for (std::size_t k = 0; k < t; ++k) {
        std::size_t rejected = 0, undefined = 0;
        const double threshold = critical ? critical->threshold.at(tests[k]) : 0.0;
        for (std::size_t i = 0; i < reps; ++i) {
            const TestResult& r = results[i * t + k];
            if (!r.defined) {
                ++undefined;
                continue;
            }
            rejected += mode == CriticalMode::empirical ? extremeness(r) > threshold : r.rejects(level);
        }
        cell.rejections[tests[k]] = rejected;
        cell.undefined_counts[tests[k]] = undefined;
        cell.powers[tests[k]] = static_cast<double>(rejected) / static_cast<double>(reps);
    }
    return cell;
}

}  // namespace detail

namespace {

int thread_count(const RunOptions& opts) { return opts.threads > 0 ? opts.threads : omp_get_max_threads(); }

// Runs body(i, scratch) for i in [0, reps) with one n-sized scratch buffer per thread.
template <class Body>
void parallel_replications(std::size_t reps, std::size_t n, const RunOptions& opts, Body&& body) {
    const auto count = static_cast<std::int64_t>(reps);
#pragma omp parallel num_threads(thread_count(opts))
    {
        std::vector<double> scratch(n);
#pragma omp for schedule(static)
        for (std::int64_t i = 0; i < count; ++i) body(static_cast<std::size_t>(i), scratch);
    }
}

std::vector<TestResult> run_block(const AlternativeSpec& spec, std::size_t n, std::size_t reps,
                                  std::uint64_t seed, std::uint64_t stream_base, const std::vector<TestName>& tests,
                                  const RunOptions& opts) {
    const std::size_t t = tests.size();
    std::vector<TestResult> results(reps * t);
    // Warm each thread's state outside the loop so errors surface here, not inside OpenMP.
    (void)su_params(n, opts.variant);
    if (std::find(tests.begin(), tests.end(), TestName::shapiro_wilk) != tests.end()) {
        (void)shapiro_wilk_coefficients(n);
    }
    parallel_replications(reps, n, opts, [&](std::size_t i, std::vector<double>& scratch) {
        detail::replicate_tests(spec, n, seed, stream_base + i, tests, opts.variant, scratch, &results[i * t]);
    });
    return results;
}

void check_test_n(std::size_t n) {
    if (n < min_test_n) throw Error(ErrorCode::sample_too_small, "sample size must be >= 8, got " + std::to_string(n));
}

}  // namespace

double extremeness(const TestResult& r) noexcept {
    return is_two_sided(r.test) ? std::abs(r.z_value) : r.z_value;
}

std::vector<double> null_spms_values(std::size_t n, std::size_t reps, std::uint64_t seed, const RunOptions& opts) {
    check_test_n(n);
    std::vector<double> out(reps);
    parallel_replications(reps, n, opts, [&](std::size_t i, std::vector<double>& scratch) {
        out[i] = detail::null_spms(n, seed, i, scratch);
    });
    return out;
}

CalibrationRow calibrate(std::size_t n, std::size_t reps, const std::vector<double>& levels, std::uint64_t seed,
                         const RunOptions& opts) {
    detail::check_levels(levels);
    detail::check_reps(reps);
    const SuTransform su = su_params(n, opts.variant);
    std::vector<double> z(reps);
    parallel_replications(reps, n, opts, [&](std::size_t i, std::vector<double>& scratch) {
        z[i] = su.z(detail::null_spms(n, seed, i, scratch));
    });
    return detail::tally_calibration(n, z, levels);
}

CriticalValues null_critical_values(std::size_t n, double level, const std::vector<TestName>& tests,
                                    std::size_t null_reps, std::uint64_t seed, const RunOptions& opts) {
    check_test_n(n);
    detail::check_levels({level});
    detail::check_tests(tests);
    detail::check_reps(null_reps);
    const auto results = run_block(AlternativeSpec::normal(), n, null_reps, seed, null_stream_offset, tests, opts);
    return detail::thresholds_from(n, level, tests, null_reps, seed, opts.variant, results);
}

PowerCell power_study(const AlternativeSpec& alternative, std::size_t n, std::size_t reps, double level,
                      const std::vector<TestName>& tests, std::uint64_t seed, const PowerOptions& opts) {
    validate(alternative);
    check_test_n(n);
    detail::check_levels({level});
    detail::check_tests(tests);
    detail::check_reps(reps);

    std::optional<CriticalValues> own;
    const CriticalValues* critical = nullptr;
    if (opts.mode == CriticalMode::empirical) {
        if (opts.critical) {
            critical = opts.critical;
            bool matches = critical->n == n && critical->level == level && critical->variant == opts.run.variant;
            for (TestName t : tests) matches = matches && critical->threshold.count(t) == 1;
            if (!matches) throw Error(ErrorCode::invalid_config, "supplied critical values do not match the cell");
        } else {
            own = null_critical_values(n, level, tests, opts.null_reps, seed, opts.run);
            critical = &*own;
        }
    }
    const auto results = run_block(alternative, n, reps, seed, 0, tests, opts.run);
    return detail::tally_power(alternative, n, reps, level, tests, opts.mode, critical, results);
}

std::size_t HistogramData::total() const noexcept {
    std::size_t s = out_of_range + undefined;
    for (std::size_t c : counts) s += c;
    return s;
}

HistogramData null_histogram(HistStatistic statistic, std::size_t n, std::size_t reps, std::size_t bins,
                             std::uint64_t seed, const RunOptions& opts,
                             std::optional<std::pair<double, double>> range) {
    if (bins < 2) throw Error(ErrorCode::invalid_config, "histogram needs at least 2 bins");
    detail::check_reps(reps);
    std::vector<double> v = null_spms_values(n, reps, seed, opts);
    if (statistic == HistStatistic::spms_z) {
        const SuTransform su = su_params(n, opts.variant);
        for (double& x : v) x = su.z(x);
    }

    HistogramData h;
    h.statistic = statistic;
    h.n = n;
    h.reps = reps;

    double lo, hi;
    if (range) {
        std::tie(lo, hi) = *range;
        if (!(hi > lo)) throw Error(ErrorCode::invalid_config, "histogram range must be increasing");
    } else {
        double sum = 0.0, sum2 = 0.0;
        std::size_t k = 0;
        for (double x : v) {
            if (std::isnan(x)) continue;
            sum += x;
            ++k;
        }
        const double mean = k ? sum / static_cast<double>(k) : 0.0;
        for (double x : v) {
            if (!std::isnan(x)) sum2 += (x - mean) * (x - mean);
        }
        const double sd = k > 1 ? std::sqrt(sum2 / static_cast<double>(k - 1)) : 1.0;
        lo = mean - 5.0 * sd;
        hi = mean + 5.0 * sd;
    }
    const double width = (hi - lo) / static_cast<double>(bins);
    h.bin_edges.resize(bins + 1);
    for (std::size_t b = 0; b <= bins; ++b) h.bin_edges[b] = lo + width * static_cast<double>(b);
    h.bin_edges.back() = hi;
    h.counts.assign(bins, 0);

    for (double x : v) {
        if (std::isnan(x)) {
            ++h.undefined;
        } else if (x < lo || x >= hi) {
            ++h.out_of_range;
        } else {
            auto b = static_cast<std::size_t>((x - lo) / width);
            b = std::min(b, bins - 1);
            // Float rounding near an edge: keep the bin consistent with the stored edges.
            while (b > 0 && x < h.bin_edges[b]) --b;
            while (b + 1 < bins && x >= h.bin_edges[b + 1]) ++b;
            ++h.counts[b];
        }
    }
    return h;
}

double MomentEstimate::deviation() const noexcept { return std::abs(empirical - series) / se; }

MomentReport moment_validation(std::size_t n, std::size_t reps, std::uint64_t seed, const RunOptions& opts) {
    if (reps < 10000) throw Error(ErrorCode::invalid_config, "moment validation needs at least 10^4 replications");
    const std::vector<double> v = null_spms_values(n, reps, seed, opts);

    double s1 = 0.0, s2 = 0.0, s3 = 0.0, s4 = 0.0, s6 = 0.0;
    std::size_t k = 0;
    for (double x : v) {
        if (std::isnan(x)) continue;
        const double x2 = x * x;
        s1 += x;
        s2 += x2;
        s3 += x2 * x;
        s4 += x2 * x2;
        s6 += x2 * x2 * x2;
        ++k;
    }
    const double r = static_cast<double>(k);
    const double l2 = lambda2(n);

    MomentReport rep;
    rep.n = n;
    rep.reps = reps;
    rep.undefined = reps - k;
    rep.mean = {s1 / r, 0.0, std::sqrt(l2 / r)};
    rep.variance = {s2 / r, l2, l2 * std::sqrt(2.0 / r)};
    rep.third = {s3 / r, 0.0, std::sqrt(s6 / r / r)};
    rep.kurtosis = {(s4 / r) / ((s2 / r) * (s2 / r)), beta2_spms(n), std::sqrt(24.0 / r)};
    return rep;
}

}  // namespace spms
