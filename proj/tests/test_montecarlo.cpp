#include <doctest.h>

#include <cmath>
#include <cstring>

#include "spms/error.hpp"
#include "spms/montecarlo.hpp"
#include "spms/su_transform.hpp"

using namespace spms;

namespace {

bool same_bits(const std::vector<double>& a, const std::vector<double>& b) {
    return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

double binomial_se(double p, std::size_t reps) { return std::sqrt(p * (1 - p) / static_cast<double>(reps)); }

}  // namespace

TEST_CASE("parallel kernels reproduce the serial reference bit for bit") {
    const std::vector<double> levels = {0.01, 0.05, 0.1, 0.2};
    for (int threads : {1, 2, 3}) {
        CAPTURE(threads);
        const auto par = calibrate(80, 5000, levels, 17, {threads, default_variant});
        const auto ser = serial::calibrate(80, 5000, levels, 17);
        CHECK(par.rejections == ser.rejections);
        CHECK(par.undefined_count == ser.undefined_count);
        CHECK(same_bits(par.rejection_rates, ser.rejection_rates));

        CHECK(same_bits(null_spms_values(60, 3000, 4, {threads, default_variant}),
                        serial::null_spms_values(60, 3000, 4)));

        for (CriticalMode mode : {CriticalMode::empirical, CriticalMode::asymptotic}) {
            PowerOptions opts;
            opts.run.threads = threads;
            opts.mode = mode;
            opts.null_reps = 4000;
            const auto p = power_study(AlternativeSpec::gamma(3), 40, 2000, 0.05,
                                       {all_tests.begin(), all_tests.end()}, 9, opts);
            const auto s = serial::power_study(AlternativeSpec::gamma(3), 40, 2000, 0.05,
                                               {all_tests.begin(), all_tests.end()}, 9, mode, 4000);
            CHECK(p.rejections == s.rejections);
            CHECK(p.undefined_counts == s.undefined_counts);
            for (TestName t : all_tests) CHECK(std::memcmp(&p.powers.at(t), &s.powers.at(t), sizeof(double)) == 0);
        }
    }
}

TEST_CASE("calibration of the spms test") {
    const auto a = calibrate(500, 100000, {0.05}, 1);
    CHECK(std::abs(a.rejection_rates[0] - 0.0504) < 0.005);
    const auto b = calibrate(100, 100000, {0.01}, 1);
    CHECK(std::abs(b.rejection_rates[0] - 0.0112) < 0.002);
    const auto c = calibrate(1000, 100000, {0.20}, 1);
    CHECK(std::abs(c.rejection_rates[0] - 0.2004) < 0.008);
    CHECK(a.reps == 100000);
    CHECK(a.undefined_count < 100);
}

TEST_CASE("calibration rejects invalid input") {
    for (double bad : {0.0, 1.0, -0.1, 1.5, std::nan("")}) {
        try {
            (void)calibrate(100, 100, {bad}, 1);
            FAIL("expected InvalidLevel");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::invalid_level);
        }
    }
    CHECK_THROWS_AS((void)calibrate(5, 100, {0.05}, 1), Error);
    CHECK_THROWS_AS((void)calibrate(100, 0, {0.05}, 1), Error);
}

TEST_CASE("each test is near its nominal size under the null") {
    PowerOptions opts;
    opts.mode = CriticalMode::asymptotic;
    const auto cell = power_study(AlternativeSpec::normal(), 100, 20000, 0.05,
                                  {all_tests.begin(), all_tests.end()}, 3, opts);
    for (TestName t : all_tests) {
        CAPTURE(to_string(t));
        CHECK(cell.powers.at(t) > 0.03);
        CHECK(cell.powers.at(t) < 0.08);
        CHECK(cell.undefined_counts.at(t) < 20);
    }
}

TEST_CASE("empirical critical values give exact size on their own null") {
    const auto cv = null_critical_values(50, 0.05, {all_tests.begin(), all_tests.end()}, 20000, 5);
    CHECK(cv.threshold.size() == 4);
    PowerOptions opts;
    opts.critical = &cv;
    // A different seed: an independent null replicate.
    const auto cell = power_study(AlternativeSpec::normal(), 50, 20000, 0.05,
                                  {all_tests.begin(), all_tests.end()}, 6, opts);
    for (TestName t : all_tests) {
        CAPTURE(to_string(t));
        CHECK(std::abs(cell.powers.at(t) - 0.05) < 4 * binomial_se(0.05, 20000) * std::sqrt(2.0));
    }
}

TEST_CASE("power increases with n") {
    PowerOptions opts;
    opts.null_reps = 20000;
    for (const auto& alt : {AlternativeSpec::gamma(3), AlternativeSpec::beta(3, 2)}) {
        double prev = 0.0;
        for (std::size_t n : {40, 60, 100}) {
            const auto cell = power_study(alt, n, 4000, 0.05, {TestName::spms}, 12, opts);
            const double p = cell.powers.at(TestName::spms);
            CHECK(p > prev - 2 * binomial_se(p, 4000));
            CHECK(cell.undefined_counts.at(TestName::spms) < 4);
            prev = p;
        }
    }
}

TEST_CASE("reused critical values must match the study") {
    const auto cv = null_critical_values(40, 0.05, {TestName::spms}, 2000, 1);
    PowerOptions opts;
    opts.critical = &cv;
    CHECK_THROWS_AS((void)power_study(AlternativeSpec::gamma(2), 60, 100, 0.05, {TestName::spms}, 1, opts), Error);
    CHECK_THROWS_AS((void)power_study(AlternativeSpec::gamma(2), 40, 100, 0.10, {TestName::spms}, 1, opts), Error);
    CHECK_NOTHROW((void)power_study(AlternativeSpec::gamma(2), 40, 100, 0.05, {TestName::spms}, 1, opts));
}

TEST_CASE("histogram accounting") {
    const auto h = null_histogram(HistStatistic::spms_raw, 200, 20000, 60, 1);
    CHECK(h.bin_edges.size() == 61);
    CHECK(h.counts.size() == 60);
    CHECK(h.total() == 20000);
    std::size_t in_bins = 0;
    double sum = 0.0;
    for (std::size_t i = 0; i < h.counts.size(); ++i) {
        in_bins += h.counts[i];
        sum += h.counts[i] * 0.5 * (h.bin_edges[i] + h.bin_edges[i + 1]);
    }
    CHECK(in_bins + h.out_of_range + h.undefined == 20000);
    CHECK(std::abs(sum / in_bins) < 0.01);

    const auto z = null_histogram(HistStatistic::spms_z, 200, 5000, 20, 1, {}, std::pair{-1.0, 1.0});
    CHECK(z.bin_edges.front() == -1.0);
    CHECK(z.bin_edges.back() == 1.0);
    CHECK(z.out_of_range > 1000);
    CHECK(z.total() == 5000);
    CHECK_THROWS_AS((void)null_histogram(HistStatistic::spms_z, 200, 100, 0, 1), Error);
}

TEST_CASE("null moments against the series") {
    CHECK_THROWS_AS((void)moment_validation(200, 9999, 1), Error);
    const auto r = moment_validation(500, 100000, 1);
    CHECK(r.variance.series == doctest::Approx(lambda2(500)));
    CHECK(r.kurtosis.series == doctest::Approx(beta2_spms(500)));
    CHECK(r.mean.series == 0.0);
    CHECK(r.third.series == 0.0);
    for (const auto* e : {&r.mean, &r.variance, &r.third, &r.kurtosis}) {
        CHECK(e->se > 0.0);
        CHECK(e->deviation() < 4.0);
    }
}
