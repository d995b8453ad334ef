// Shapiro-Wilk W with Royston's (1995) AS R94 coefficient and p-value
// approximations.

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "spms/normal.hpp"
#include "spms/skewtests.hpp"

namespace spms {

namespace {

template <std::size_t N>
double poly(const double (&c)[N], double x) {
    double r = c[N - 1];
    for (std::size_t k = N - 1; k-- > 0;) r = r * x + c[k];
    return r;
}

constexpr double c1[] = {0.0, 0.221157, -0.147981, -2.071190, 4.434685, -2.706056};
constexpr double c2[] = {0.0, 0.042981, -0.293762, -1.752461, 5.682633, -3.582633};
constexpr double c3[] = {0.5440, -0.39978, 0.025054, -6.714e-4};
constexpr double c4[] = {1.3822, -0.77857, 0.062767, -0.0020322};
constexpr double c5[] = {-1.5861, -0.31082, -0.083751, 0.0038915};
constexpr double c6[] = {-0.4803, -0.082676, 0.0030302};
constexpr double g[] = {-2.273, 0.459};

// Positive weights a_1 >= a_2 >= ... for the pairs (x_(n+1-i) - x_(i)), i = 1..n/2.
std::vector<double> half_weights(std::size_t n) {
    const std::size_t half = n / 2;
    const double an = static_cast<double>(n);
    std::vector<double> m(half);
    double summ2 = 0.0;
    for (std::size_t i = 0; i < half; ++i) {
        m[i] = normal_quantile((static_cast<double>(i + 1) - 0.375) / (an + 0.25));
        summ2 += m[i] * m[i];
    }
    summ2 *= 2.0;
    const double ssumm2 = std::sqrt(summ2);
    const double rsn = 1.0 / std::sqrt(an);

    std::vector<double> a(half);
    const double a1 = poly(c1, rsn) - m[0] / ssumm2;
    std::size_t first;
    double fac;
    if (n > 5) {
        const double a2 = -m[1] / ssumm2 + poly(c2, rsn);
        fac = std::sqrt((summ2 - 2.0 * m[0] * m[0] - 2.0 * m[1] * m[1]) / (1.0 - 2.0 * a1 * a1 - 2.0 * a2 * a2));
        a[1] = a2;
        first = 2;
    } else {
        fac = std::sqrt((summ2 - 2.0 * m[0] * m[0]) / (1.0 - 2.0 * a1 * a1));
        first = 1;
    }
    a[0] = a1;
    for (std::size_t i = first; i < half; ++i) a[i] = -m[i] / fac;
    return a;
}

const std::vector<double>& cached_half_weights(std::size_t n) {
    thread_local std::size_t cached_n = 0;
    thread_local std::vector<double> cached;
    if (cached_n != n) {
        cached = half_weights(n);
        cached_n = n;
    }
    return cached;
}

void check_size(std::size_t n) {
    if (n < min_test_n) {
        throw Error(ErrorCode::sample_too_small, "Shapiro-Wilk test needs n >= 8, got " + std::to_string(n));
    }
    if (n > max_shapiro_wilk_n) {
        throw Error(ErrorCode::sample_too_large, "Shapiro-Wilk test supports n <= 5000, got " + std::to_string(n));
    }
}

}  // namespace

std::vector<double> shapiro_wilk_coefficients(std::size_t n) {
    check_size(n);
    const auto& half = cached_half_weights(n);
    std::vector<double> a(n, 0.0);
    for (std::size_t i = 0; i < half.size(); ++i) {
        a[i] = -half[i];
        a[n - 1 - i] = half[i];
    }
    return a;
}

TestResult shapiro_wilk_test(const Sample& sample) {
    const std::size_t n = sample.size();
    check_size(n);
    const auto& a = cached_half_weights(n);

    std::vector<double> x(sample.values().begin(), sample.values().end());
    std::sort(x.begin(), x.end());

    double mean = 0.0;
    for (double v : x) mean += v;
    mean /= static_cast<double>(n);
    double ss = 0.0;
    for (double v : x) ss += (v - mean) * (v - mean);

    double num = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) num += a[i] * (x[n - 1 - i] - x[i]);
    const double w = std::min(1.0, num * num / ss);

    TestResult r;
    r.test = TestName::shapiro_wilk;
    r.raw_statistic = w;

    const double an = static_cast<double>(n);
    double y = std::log1p(-w);
    double mu, sigma;
    if (n <= 11) {
        const double gamma = poly(g, an);
        if (y >= gamma) {
            r.z_value = std::numeric_limits<double>::infinity();
            r.p_value = 1e-99;
            return r;
        }
        y = -std::log(gamma - y);
        mu = poly(c3, an);
        sigma = std::exp(poly(c4, an));
    } else {
        const double ln = std::log(an);
        mu = poly(c5, ln);
        sigma = std::exp(poly(c6, ln));
    }
    r.z_value = (y - mu) / sigma;
    r.p_value = std::clamp(normal_sf(r.z_value), 0.0, 1.0);
    return r;
}

}  // namespace spms
