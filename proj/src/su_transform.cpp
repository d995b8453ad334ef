#include "spms/su_transform.hpp"

#include <cmath>
#include <string>

#include "spms/error.hpp"

namespace spms {

namespace {

void require_n(std::size_t n) {
    if (n < 8) throw Error(ErrorCode::sample_too_small, "S_U transform needs n >= 8, got " + std::to_string(n));
}

// sum_k c[k] * x^(first_power + k) over the first `terms` coefficients
template <std::size_t N>
double series(const double (&c)[N], std::size_t terms, int first_power, double inv_n) {
    double acc = 0.0;
    double p = std::pow(inv_n, first_power);
    for (std::size_t k = 0; k < terms && k < N; ++k) {
        acc += c[k] * p;
        p *= inv_n;
    }
    return acc;
}

}  // namespace

double lambda2(std::size_t n) {
    require_n(n);
    return series(null_series::lambda2_coeffs, 3, 1, 1.0 / static_cast<double>(n));
}

double lambda4(std::size_t n) {
    require_n(n);
    return series(null_series::lambda4_coeffs, 2, 2, 1.0 / static_cast<double>(n));
}

double beta2_spms(std::size_t n) {
    require_n(n);
    return series(null_series::beta2_coeffs, 4, 0, 1.0 / static_cast<double>(n));
}

std::string_view to_string(TransformVariant v) noexcept {
    switch (v) {
        case TransformVariant::published_tables: return "published_tables";
        case TransformVariant::full_series: return "full_series";
        case TransformVariant::as_printed: return "as_printed";
    }
    return "unknown";
}

TransformVariant parse_variant(std::string_view name) {
    if (name == "published_tables" || name == "tables") return TransformVariant::published_tables;
    if (name == "full_series" || name == "full") return TransformVariant::full_series;
    if (name == "as_printed" || name == "printed") return TransformVariant::as_printed;
    throw Error(ErrorCode::invalid_config, "unknown transform variant '" + std::string(name) + "'");
}

SuTransform su_params(std::size_t n, TransformVariant variant) {
    require_n(n);
    const double inv_n = 1.0 / static_cast<double>(n);
    const bool truncated = variant == TransformVariant::published_tables;

    SuTransform t;
    t.n = n;
    t.variant = variant;
    t.lambda2 = series(null_series::lambda2_coeffs, truncated ? 2 : 3, 1, inv_n);
    t.beta2_spms = series(null_series::beta2_coeffs, truncated ? 3 : 4, 0, inv_n);
    t.w2 = -1.0 + std::sqrt(2.0 * (t.beta2_spms - 1.0));
    t.delta = 1.0 / std::sqrt(0.5 * std::log(t.w2));
    const double alpha_num = variant == TransformVariant::as_printed ? 1.0 : 2.0;
    t.alpha = std::sqrt(alpha_num / (t.w2 - 1.0));
    return t;
}

double SuTransform::z(double spms_value) const noexcept {
    const double y = spms_value / std::sqrt(lambda2);
    return delta * std::asinh(y / alpha);
}

double z_transform(double spms_value, std::size_t n, TransformVariant variant) {
    return su_params(n, variant).z(spms_value);
}

}  // namespace spms
