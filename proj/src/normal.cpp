#include "spms/normal.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/math/distributions/normal.hpp>

#include "spms/error.hpp"

namespace spms {

namespace {
const boost::math::normal_distribution<double> standard{0.0, 1.0};
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double normal_sf(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw Error(ErrorCode::invalid_params, "normal quantile needs p in (0, 1), got " + std::to_string(p));
    }
    return boost::math::quantile(standard, p);
}

double two_sided_p(double z) {
    if (std::isnan(z)) return 1.0;
    return std::clamp(std::erfc(std::abs(z) / std::sqrt(2.0)), 0.0, 1.0);
}

double two_sided_critical(double level) {
    if (!(level > 0.0 && level < 1.0)) {
        throw Error(ErrorCode::invalid_level, "significance level must lie in (0, 1), got " + std::to_string(level));
    }
    return boost::math::quantile(boost::math::complement(standard, level / 2.0));
}

}  // namespace spms
