#include "spms/moments.hpp"

#include <cmath>
#include <string>

#include "spms/error.hpp"

namespace spms {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::zero_variance: return "ZeroVariance";
        case ErrorCode::non_finite: return "NonFinite";
        case ErrorCode::zero_scale: return "ZeroScale";
        case ErrorCode::degenerate_denominator: return "DegenerateDenominator";
        case ErrorCode::degenerate_correlation: return "DegenerateCorrelation";
        case ErrorCode::sample_too_small: return "SampleTooSmall";
        case ErrorCode::sample_too_large: return "SampleTooLarge";
        case ErrorCode::invalid_params: return "InvalidParams";
        case ErrorCode::invalid_level: return "InvalidLevel";
        case ErrorCode::parse_error: return "ParseError";
        case ErrorCode::invalid_config: return "InvalidConfig";
        case ErrorCode::io_error: return "IoError";
    }
    return "Unknown";
}

Sample::Sample(std::vector<double> values) : values_(std::move(values)) {
    if (values_.size() < 3) {
        throw Error(ErrorCode::sample_too_small,
                    "sample needs at least 3 values, got " + std::to_string(values_.size()));
    }
    bool distinct = false;
    for (double x : values_) {
        if (!std::isfinite(x)) throw Error(ErrorCode::non_finite, "sample contains a non-finite value");
        distinct = distinct || x != values_.front();
    }
    if (!distinct) throw Error(ErrorCode::zero_variance, "all sample values are equal");
}

MomentSummary central_moments(std::span<const double> values) {
    const std::size_t n = values.size();
    if (n == 0) throw Error(ErrorCode::sample_too_small, "empty sample");

    double sum = 0.0;
    for (double x : values) sum += x;
    const double mean = sum / static_cast<double>(n);

    double s2 = 0.0, s3 = 0.0, s4 = 0.0;
    for (double x : values) {
        const double d = x - mean;
        const double d2 = d * d;
        s2 += d2;
        s3 += d2 * d;
        s4 += d2 * d2;
    }
    const double inv_n = 1.0 / static_cast<double>(n);
    MomentSummary m;
    m.n = n;
    m.mean = mean;
    m.m2 = s2 * inv_n;
    m.m3 = s3 * inv_n;
    m.m4 = s4 * inv_n;
    if (!(m.m2 > 0.0)) throw Error(ErrorCode::zero_variance, "sample variance is zero");
    m.sqrt_b1 = m.m3 / std::pow(m.m2, 1.5);
    m.b2 = m.m4 / (m.m2 * m.m2);
    return m;
}

MomentSummary central_moments(const Sample& sample) { return central_moments(sample.values()); }

Sample shift_scale(const Sample& sample, double a, double b) {
    if (b == 0.0) throw Error(ErrorCode::zero_scale, "scale factor must be nonzero");
    std::vector<double> out;
    out.reserve(sample.size());
    for (double x : sample.values()) out.push_back(a + b * x);
    return Sample(std::move(out));
}

}  // namespace spms
