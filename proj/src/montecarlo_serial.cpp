#include <vector>

#include "replicate.hpp"

namespace spms::serial {

std::vector<double> null_spms_values(std::size_t n, std::size_t reps, std::uint64_t seed) {
    std::vector<double> out(reps);
    std::vector<double> scratch(n);
    for (std::size_t i = 0; i < reps; ++i) out[i] = detail::null_spms(n, seed, i, scratch);
    return out;
}

CalibrationRow calibrate(std::size_t n, std::size_t reps, const std::vector<double>& levels, std::uint64_t seed,
                         TransformVariant variant) {
    detail::check_levels(levels);
    detail::check_reps(reps);
    const SuTransform su = su_params(n, variant);
    std::vector<double> z = null_spms_values(n, reps, seed);
    for (double& v : z) v = su.z(v);
    return detail::tally_calibration(n, z, levels);
}

PowerCell power_study(const AlternativeSpec& alternative, std::size_t n, std::size_t reps, double level,
                      const std::vector<TestName>& tests, std::uint64_t seed, CriticalMode mode,
                      std::size_t null_reps, TransformVariant variant) {
    validate(alternative);
    detail::check_levels({level});
    detail::check_tests(tests);
    detail::check_reps(reps);
    const std::size_t t = tests.size();
    std::vector<double> scratch(n);

    std::optional<CriticalValues> critical;
    if (mode == CriticalMode::empirical) {
        detail::check_reps(null_reps);
        std::vector<TestResult> null_results(null_reps * t);
        for (std::size_t i = 0; i < null_reps; ++i) {
            detail::replicate_tests(AlternativeSpec::normal(), n, seed, null_stream_offset + i, tests, variant,
                                    scratch, &null_results[i * t]);
        }
        critical = detail::thresholds_from(n, level, tests, null_reps, seed, variant, null_results);
    }

    std::vector<TestResult> results(reps * t);
    for (std::size_t i = 0; i < reps; ++i) {
        detail::replicate_tests(alternative, n, seed, i, tests, variant, scratch, &results[i * t]);
    }
    return detail::tally_power(alternative, n, reps, level, tests, mode, critical ? &*critical : nullptr, results);
}

}  // namespace spms::serial
