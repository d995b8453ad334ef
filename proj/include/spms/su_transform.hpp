#pragma once

#include <cstddef>
#include <string_view>

namespace spms {

/**
 * Asymptotic null moments of spms as series in 1/n.
 *
 *   lambda2 = (3/2) n^-1 + 41 n^-2 + (6511/2) n^-3
 *   lambda4 = (27/4) n^-2 + 414 n^-3
 *   beta2   = 3 + 20 n^-1 + (48544/3) n^-2 + (10386704/9) n^-3
 *
 * Odd moments vanish identically under normality.
 */
namespace null_series {
inline constexpr double lambda2_coeffs[] = {3.0 / 2.0, 41.0, 6511.0 / 2.0};
inline constexpr double lambda4_coeffs[] = {27.0 / 4.0, 414.0};
inline constexpr double beta2_coeffs[] = {3.0, 20.0, 48544.0 / 3.0, 10386704.0 / 9.0};
}  // namespace null_series

/// Full printed series for the second null moment of spms. Requires n >= 8.
[[nodiscard]] double lambda2(std::size_t n);
/// Full printed series for the fourth null moment of spms. Requires n >= 8.
[[nodiscard]] double lambda4(std::size_t n);
/// Full printed series for the kurtosis of spms. Requires n >= 8.
[[nodiscard]] double beta2_spms(std::size_t n);

/**
 * @brief Which constants feed the Johnson S_U transform.
 *
 * All variants use W^2 = -1 + sqrt(2 (beta2 - 1)) and delta = 1/sqrt(ln W).
 *
 * - published_tables: lambda2 and beta2 truncated after their n^-2 terms,
 *   alpha = sqrt(2 / (W^2 - 1)). These are the constants that reproduce
 *   the published null calibration table at every tabulated n and level,
 *   so it is the default.
 * - full_series: every series term, alpha = sqrt(2 / (W^2 - 1)). This is
 *   the moment-matched S_U fit (Var(Y) = 1 implies the factor 2).
 * - as_printed: every series term, alpha = sqrt(1 / (W^2 - 1)) as the
 *   transform is usually typeset. Its Z has variance near 2 under the null
 *   and over-rejects; kept for reference and cross-checking.
 *
 * The transform is accepted for n >= 8 but is only well calibrated from
 * roughly n >= 200 upward.
 */
enum class TransformVariant { published_tables, full_series, as_printed };

inline constexpr TransformVariant default_variant = TransformVariant::published_tables;

[[nodiscard]] std::string_view to_string(TransformVariant v) noexcept;
/// @throws spms::Error (invalid_config) for unknown names.
[[nodiscard]] TransformVariant parse_variant(std::string_view name);

/// Per-n constants of the S_U normalizing transform.
struct SuTransform {
    std::size_t n = 0;
    TransformVariant variant = default_variant;
    double lambda2 = 0.0;     ///< variance used to standardize spms
    double beta2_spms = 0.0;  ///< kurtosis fed to the S_U fit
    double w2 = 0.0;
    double delta = 0.0;
    double alpha = 0.0;

    /// Z = delta * asinh(Y / alpha) with Y = spms / sqrt(lambda2).
    [[nodiscard]] double z(double spms_value) const noexcept;
};

/// @throws spms::Error (sample_too_small) when n < 8.
[[nodiscard]] SuTransform su_params(std::size_t n, TransformVariant variant = default_variant);

[[nodiscard]] double z_transform(double spms_value, std::size_t n,
                                 TransformVariant variant = default_variant);

}  // namespace spms
