#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace spms {

enum class ErrorCode {
    zero_variance,
    non_finite,
    zero_scale,
    degenerate_denominator,
    degenerate_correlation,
    sample_too_small,
    sample_too_large,
    invalid_params,
    invalid_level,
    parse_error,
    invalid_config,
    io_error,
};

[[nodiscard]] std::string_view to_string(ErrorCode code) noexcept;

/// Exception carrying a machine-checkable code alongside the message.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace spms
