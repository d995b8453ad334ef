#include "spms/distributions.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>

#include <boost/math/special_functions/gamma.hpp>

#include "spms/error.hpp"

namespace spms {

AlternativeSpec AlternativeSpec::normal(double mean, double sd) { return {Family::normal, mean, sd}; }
AlternativeSpec AlternativeSpec::beta(double p, double q) { return {Family::beta, p, q}; }
AlternativeSpec AlternativeSpec::gamma(double shape) { return {Family::gamma, shape, 1.0}; }
AlternativeSpec AlternativeSpec::weibull(double shape) { return {Family::weibull, shape, 1.0}; }
AlternativeSpec AlternativeSpec::lognormal(double mu, double sigma) { return {Family::lognormal, mu, sigma}; }

namespace {

std::string fmt_param(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorCode::invalid_params, msg); }

std::vector<double> parse_params(std::string_view text, std::string_view original) {
    std::vector<double> out;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const std::string_view tok = text.substr(0, comma);
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty()) {
            bad("bad parameter '" + std::string(tok) + "' in '" + std::string(original) + "'");
        }
        out.push_back(v);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
        if (text.empty()) bad("trailing comma in '" + std::string(original) + "'");
    }
    return out;
}

}  // namespace

std::string AlternativeSpec::label() const {
    switch (family) {
        case Family::normal:
            if (p1 == 0.0 && p2 == 1.0) return "normal";
            return "normal:" + fmt_param(p1) + "," + fmt_param(p2);
        case Family::beta: return "beta:" + fmt_param(p1) + "," + fmt_param(p2);
        case Family::gamma: return "gamma:" + fmt_param(p1);
        case Family::weibull: return "weibull:" + fmt_param(p1);
        case Family::lognormal: return "lognormal:" + fmt_param(p1) + "," + fmt_param(p2);
    }
    return "unknown";
}

void validate(const AlternativeSpec& s) {
    const bool finite = std::isfinite(s.p1) && std::isfinite(s.p2);
    switch (s.family) {
        case Family::normal:
        case Family::lognormal:
            if (!finite || !(s.p2 > 0.0)) bad("scale parameter must be positive in " + s.label());
            return;
        case Family::beta:
            if (!finite || !(s.p1 > 0.0) || !(s.p2 > 0.0)) bad("beta parameters must be positive");
            return;
        case Family::gamma:
        case Family::weibull:
            if (!finite || !(s.p1 > 0.0)) bad("shape parameter must be positive in " + s.label());
            return;
    }
}

AlternativeSpec parse_alternative(std::string_view text) {
    const auto colon = text.find(':');
    const std::string_view family = text.substr(0, colon);
    const auto params =
        colon == std::string_view::npos ? std::vector<double>{} : parse_params(text.substr(colon + 1), text);
    if (colon != std::string_view::npos && params.empty()) bad("missing parameters in '" + std::string(text) + "'");

    auto need = [&](std::size_t lo, std::size_t hi) {
        if (params.size() < lo || params.size() > hi) {
            bad("wrong number of parameters in '" + std::string(text) + "'");
        }
    };
    AlternativeSpec spec;
    if (family == "normal") {
        need(0, 2);
        spec = params.size() == 2 ? AlternativeSpec::normal(params[0], params[1])
               : params.size() == 1 ? AlternativeSpec::normal(params[0]) : AlternativeSpec::normal();
    } else if (family == "beta") {
        need(2, 2);
        spec = AlternativeSpec::beta(params[0], params[1]);
    } else if (family == "gamma") {
        need(1, 1);
        spec = AlternativeSpec::gamma(params[0]);
    } else if (family == "weibull") {
        need(1, 1);
        spec = AlternativeSpec::weibull(params[0]);
    } else if (family == "lognormal") {
        need(2, 2);
        spec = AlternativeSpec::lognormal(params[0], params[1]);
    } else {
        bad("unknown distribution family '" + std::string(family) + "'");
    }
    validate(spec);
    return spec;
}

std::vector<AlternativeSpec> table_alternatives() {
    return {AlternativeSpec::beta(2, 1),  AlternativeSpec::beta(3, 2),  AlternativeSpec::weibull(2),
            AlternativeSpec::gamma(3),    AlternativeSpec::gamma(2),    AlternativeSpec::lognormal(0, 0.5)};
}

double standard_normal(PhiloxStream& gen) noexcept {
    // Marsaglia polar method; the second variate of each pair is discarded.
    for (;;) {
        const double u = 2.0 * gen.uniform() - 1.0;
        const double v = 2.0 * gen.uniform() - 1.0;
        const double s = u * u + v * v;
        if (s < 1.0 && s > 0.0) return u * std::sqrt(-2.0 * std::log(s) / s);
    }
}

namespace {

void fill_normal(PhiloxStream& gen, std::span<double> out) {
    std::size_t i = 0;
    while (i < out.size()) {
        const double u = 2.0 * gen.uniform() - 1.0;
        const double v = 2.0 * gen.uniform() - 1.0;
        const double s = u * u + v * v;
        if (!(s < 1.0 && s > 0.0)) continue;
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        out[i++] = u * f;
        if (i < out.size()) out[i++] = v * f;
    }
}

}  // namespace

double gamma_variate(PhiloxStream& gen, double shape) noexcept {
    // Marsaglia-Tsang; shapes below 1 are boosted by one and scaled by U^{1/shape}.
    const bool boost = shape < 1.0;
    const double a = boost ? shape + 1.0 : shape;
    const double d = a - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    double x;
    for (;;) {
        const double z = standard_normal(gen);
        const double t = 1.0 + c * z;
        if (t <= 0.0) continue;
        const double v = t * t * t;
        const double u = gen.uniform();
        const double z2 = z * z;
        if (u < 1.0 - 0.0331 * z2 * z2 || std::log(u) < 0.5 * z2 + d * (1.0 - v + std::log(v))) {
            x = d * v;
            break;
        }
    }
    if (boost) x *= std::pow(gen.uniform(), 1.0 / shape);
    return x;
}

void draw(const AlternativeSpec& spec, PhiloxStream& gen, std::span<double> out) {
    switch (spec.family) {
        case Family::normal:
            fill_normal(gen, out);
            for (double& x : out) x = spec.p1 + spec.p2 * x;
            return;
        case Family::lognormal:
            fill_normal(gen, out);
            for (double& x : out) x = std::exp(spec.p1 + spec.p2 * x);
            return;
        case Family::gamma:
            for (double& x : out) x = gamma_variate(gen, spec.p1);
            return;
        case Family::beta:
            for (double& x : out) {
                const double gp = gamma_variate(gen, spec.p1);
                const double gq = gamma_variate(gen, spec.p2);
                x = gp / (gp + gq);
            }
            return;
        case Family::weibull:
            for (double& x : out) x = std::pow(-std::log(gen.uniform()), 1.0 / spec.p1);
            return;
    }
}

std::vector<double> draw(const AlternativeSpec& spec, std::size_t n, SeededStream stream) {
    validate(spec);
    std::vector<double> out(n);
    PhiloxStream gen(stream.seed, stream.stream_id);
    draw(spec, gen, out);
    return out;
}

Sample sample(const AlternativeSpec& spec, std::size_t n, SeededStream stream) {
    return Sample(draw(spec, n, stream));
}

PopulationMoments population_moments(const AlternativeSpec& s) {
    validate(s);
    switch (s.family) {
        case Family::normal: return {0.0, 3.0};
        case Family::gamma: return {2.0 / std::sqrt(s.p1), 3.0 + 6.0 / s.p1};
        case Family::beta: {
            const double p = s.p1, q = s.p2, t = p + q;
            const double skew = 2.0 * (q - p) * std::sqrt(t + 1.0) / ((t + 2.0) * std::sqrt(p * q));
            const double excess =
                6.0 * ((p - q) * (p - q) * (t + 1.0) - p * q * (t + 2.0)) / (p * q * (t + 2.0) * (t + 3.0));
            return {skew, 3.0 + excess};
        }
        case Family::weibull: {
            auto g = [k = s.p1](int i) { return boost::math::tgamma(1.0 + i / k); };
            const double g1 = g(1), g2 = g(2), g3 = g(3), g4 = g(4);
            const double var = g2 - g1 * g1;
            const double skew = (g3 - 3.0 * g1 * g2 + 2.0 * g1 * g1 * g1) / std::pow(var, 1.5);
            const double kurt = (g4 - 4.0 * g1 * g3 + 6.0 * g1 * g1 * g2 - 3.0 * g1 * g1 * g1 * g1) / (var * var);
            return {skew, kurt};
        }
        case Family::lognormal: {
            const double w = std::exp(s.p2 * s.p2);
            return {(w + 2.0) * std::sqrt(w - 1.0), w * w * w * w + 2.0 * w * w * w + 3.0 * w * w - 3.0};
        }
    }
    return {};
}

}  // namespace spms
