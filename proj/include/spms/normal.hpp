#pragma once

namespace spms {

/// Standard normal CDF.
[[nodiscard]] double normal_cdf(double x);

/// 1 - Phi(x), accurate in the upper tail.
[[nodiscard]] double normal_sf(double x);

/// Phi^{-1}(p) for p in (0, 1).
[[nodiscard]] double normal_quantile(double p);

/// 2 * (1 - Phi(|z|)), clamped to [0, 1].
[[nodiscard]] double two_sided_p(double z);

/// z_{1 - level/2}: the two-sided rejection threshold for |Z|.
[[nodiscard]] double two_sided_critical(double level);

}  // namespace spms
