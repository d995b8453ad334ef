#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "spms/moments.hpp"
#include "spms/philox.hpp"

namespace spms {

enum class Family { normal, beta, gamma, weibull, lognormal };

/**
 * @brief A distribution to draw samples from.
 *
 * Parameters: beta (p, q); gamma (shape); weibull (shape); lognormal
 * (mu, sigma); normal (mean, sd), defaulting to the standard normal.
 * Gamma and Weibull have unit scale.
 */
struct AlternativeSpec {
    Family family = Family::normal;
    double p1 = 0.0;
    double p2 = 1.0;

    static AlternativeSpec normal(double mean = 0.0, double sd = 1.0);
    static AlternativeSpec beta(double p, double q);
    static AlternativeSpec gamma(double shape);
    static AlternativeSpec weibull(double shape);
    static AlternativeSpec lognormal(double mu, double sigma);

    /// Canonical `family:param1[,param2]` form, e.g. `beta:2,1`, `normal`.
    [[nodiscard]] std::string label() const;

    friend bool operator==(const AlternativeSpec&, const AlternativeSpec&) = default;
};

/// Parses `family:param1[,param2]`.
/// @throws spms::Error (invalid_params)
[[nodiscard]] AlternativeSpec parse_alternative(std::string_view text);

/// @throws spms::Error (invalid_params) if any parameter is out of range.
void validate(const AlternativeSpec& spec);

/// The six skewed alternatives of the power study, in table order.
[[nodiscard]] std::vector<AlternativeSpec> table_alternatives();

struct SeededStream {
    std::uint64_t seed = 0;
    std::uint64_t stream_id = 0;
};

/// Fills `out` with iid variates drawn from `gen`.
void draw(const AlternativeSpec& spec, PhiloxStream& gen, std::span<double> out);

/// n iid variates; bit-reproducible for fixed (spec, n, seed, stream_id).
/// @throws spms::Error (invalid_params)
[[nodiscard]] std::vector<double> draw(const AlternativeSpec& spec, std::size_t n, SeededStream stream);

/// Same as draw() wrapped as a validated Sample (n >= 3).
[[nodiscard]] Sample sample(const AlternativeSpec& spec, std::size_t n, SeededStream stream);

struct PopulationMoments {
    double sqrt_beta1 = 0.0;
    double beta2 = 3.0;
};

/// Closed-form population skewness and kurtosis.
[[nodiscard]] PopulationMoments population_moments(const AlternativeSpec& spec);

/// Individual variate generators.
double standard_normal(PhiloxStream& gen) noexcept;
double gamma_variate(PhiloxStream& gen, double shape) noexcept;

}  // namespace spms
