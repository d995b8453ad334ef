#include "spms/skewtests.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "spms/normal.hpp"

namespace spms {

std::string_view to_string(TestName t) noexcept {
    switch (t) {
        case TestName::spms: return "spms";
        case TestName::sqrt_b1: return "sqrt_b1";
        case TestName::shapiro_wilk: return "sw";
        case TestName::lin_mudholkar: return "lm";
    }
    return "unknown";
}

TestName parse_test_name(std::string_view name) {
    if (name == "spms") return TestName::spms;
    if (name == "sqrt_b1" || name == "b1") return TestName::sqrt_b1;
    if (name == "sw" || name == "shapiro_wilk") return TestName::shapiro_wilk;
    if (name == "lm" || name == "lin_mudholkar") return TestName::lin_mudholkar;
    throw Error(ErrorCode::invalid_config, "unknown test '" + std::string(name) + "'");
}

namespace {

void require_min_n(std::size_t n, std::string_view test) {
    if (n < min_test_n) {
        throw Error(ErrorCode::sample_too_small,
                    std::string(test) + " needs n >= 8, got " + std::to_string(n));
    }
}

TestResult undefined_result(TestName test, ErrorCode why) {
    TestResult r;
    r.test = test;
    r.defined = false;
    r.failure = why;
    r.raw_statistic = std::numeric_limits<double>::quiet_NaN();
    r.z_value = std::numeric_limits<double>::quiet_NaN();
    r.p_value = 1.0;
    return r;
}

double pms_form(double sqrt_b1, double b2) {
    if (pms_denominator_degenerate(sqrt_b1, b2)) {
        throw Error(ErrorCode::degenerate_denominator, "5 b2 - 6 b1 - 9 is numerically zero");
    }
    const double b1 = sqrt_b1 * sqrt_b1;
    return sqrt_b1 * (b2 + 3.0) / (2.0 * (5.0 * b2 - 6.0 * b1 - 9.0));
}

}  // namespace

bool pms_denominator_degenerate(double sqrt_b1, double b2) noexcept {
    const double b1 = sqrt_b1 * sqrt_b1;
    const double eps = 1e-12 * (1.0 + std::abs(5.0 * b2) + std::abs(6.0 * b1) + 9.0);
    return !(std::abs(5.0 * b2 - 6.0 * b1 - 9.0) > eps);
}

double spms_statistic(const MomentSummary& summary) { return pms_form(summary.sqrt_b1, summary.b2); }

double population_pms(double sqrt_beta1, double beta2) { return pms_form(sqrt_beta1, beta2); }

SeriesState series_state(const MomentSummary& s) {
    const double rn = std::sqrt(static_cast<double>(s.n));
    return {rn * (s.m2 - 1.0), rn * s.m3, rn * (s.m4 - 3.0), s.n};
}

double spms_series_leading(const SeriesState& st) {
    return 0.5 * st.v / std::sqrt(static_cast<double>(st.n));
}

double spms_series(const SeriesState& st) {
    const double u = st.u, v = st.v, w = st.w;
    const double h = 1.0 / std::sqrt(static_cast<double>(st.n));  // n^-1/2

    const double o1 = v / 2.0;
    const double o2 = 5.0 / 4.0 * u * v - 1.0 / 3.0 * v * w;
    const double o3 = 79.0 / 16.0 * u * u * v - 13.0 / 6.0 * u * v * w + 0.5 * v * v * v + 5.0 / 18.0 * v * w * w;
    const double o4 = 517.0 / 32.0 * u * u * u * v - 263.0 / 24.0 * u * u * v * w + 9.0 / 4.0 * u * v * v * v +
                      95.0 / 36.0 * u * v * w * w - 3.0 / 4.0 * v * v * v * w - 25.0 / 108.0 * v * w * w * w;
    return h * (o1 + h * (o2 + h * (o3 + h * o4)));
}

TestResult spms_test(const MomentSummary& summary, TransformVariant variant) {
    require_min_n(summary.n, "spms test");
    if (pms_denominator_degenerate(summary.sqrt_b1, summary.b2)) {
        return undefined_result(TestName::spms, ErrorCode::degenerate_denominator);
    }
    TestResult r;
    r.test = TestName::spms;
    r.raw_statistic = spms_statistic(summary);
    r.z_value = su_params(summary.n, variant).z(r.raw_statistic);
    r.p_value = two_sided_p(r.z_value);
    return r;
}

TestResult spms_test(const Sample& sample, TransformVariant variant) {
    return spms_test(central_moments(sample), variant);
}

double sqrt_b1_null_variance(std::size_t n) {
    const double x = static_cast<double>(n);
    return 6.0 * (x - 2.0) / ((x + 1.0) * (x + 3.0));
}

double sqrt_b1_null_kurtosis(std::size_t n) {
    const double x = static_cast<double>(n);
    return 3.0 * (x * x + 27.0 * x - 70.0) * (x + 1.0) * (x + 3.0) /
           ((x - 2.0) * (x + 5.0) * (x + 7.0) * (x + 9.0));
}

TestResult sqrt_b1_test(const MomentSummary& summary) {
    require_min_n(summary.n, "sqrt(b1) test");
    const double y = summary.sqrt_b1 / std::sqrt(sqrt_b1_null_variance(summary.n));
    const double w2 = -1.0 + std::sqrt(2.0 * (sqrt_b1_null_kurtosis(summary.n) - 1.0));
    const double delta = 1.0 / std::sqrt(0.5 * std::log(w2));
    const double alpha = std::sqrt(2.0 / (w2 - 1.0));

    TestResult r;
    r.test = TestName::sqrt_b1;
    r.raw_statistic = summary.sqrt_b1;
    r.z_value = delta * std::asinh(y / alpha);
    r.p_value = two_sided_p(r.z_value);
    return r;
}

TestResult sqrt_b1_test(const Sample& sample) { return sqrt_b1_test(central_moments(sample)); }

TestResult lin_mudholkar_test(const Sample& sample) {
    const auto x = sample.values();
    const std::size_t n = x.size();
    require_min_n(n, "Lin-Mudholkar test");
    const double dn = static_cast<double>(n);

    double mean = 0.0;
    for (double v : x) mean += v;
    mean /= dn;
    double ss = 0.0;
    for (double v : x) ss += (v - mean) * (v - mean);

    // Leave-one-out sum of squares about the reduced mean, in centred form:
    // sum_{j!=i} d_j^2 - (sum_{j!=i} d_j)^2/(n-1) = ss - d_i^2 n/(n-1).
    std::vector<double> y(n);
    double ymean = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = x[i] - mean;
        y[i] = std::cbrt(std::max(0.0, ss - d * d * dn / (dn - 1.0)));
        ymean += y[i];
    }
    ymean /= dn;

    double sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dy = y[i] - ymean;
        sxy += (x[i] - mean) * dy;
        syy += dy * dy;
    }
    if (!(syy > 1e-28 * ymean * ymean * dn)) {
        return undefined_result(TestName::lin_mudholkar, ErrorCode::degenerate_correlation);
    }

    TestResult res;
    res.test = TestName::lin_mudholkar;
    res.raw_statistic = std::clamp(sxy / std::sqrt(ss * syy), -1.0, 1.0);
    res.z_value = std::atanh(res.raw_statistic) * std::sqrt(dn / 3.0);
    res.p_value = two_sided_p(res.z_value);
    return res;
}

TestResult run_test(TestName test, const Sample& sample, TransformVariant variant) {
    switch (test) {
        case TestName::spms: return spms_test(sample, variant);
        case TestName::sqrt_b1: return sqrt_b1_test(sample);
        case TestName::shapiro_wilk: return shapiro_wilk_test(sample);
        case TestName::lin_mudholkar: return lin_mudholkar_test(sample);
    }
    throw Error(ErrorCode::invalid_config, "unknown test");
}

}  // namespace spms
