#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace spms {

/// Philox4x32-10 block function (Salmon et al., Random123).
[[nodiscard]] std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> ctr,
                                                          std::array<std::uint32_t, 2> key) noexcept;

/**
 * @brief Counter-based 64-bit generator addressed by (seed, stream_id).
 *
 * The seed is the Philox key, the stream id occupies the high half of the
 * counter and the low half counts blocks. Any (seed, stream_id) pair is an
 * independent substream that can be constructed in O(1) on any thread.
 * Satisfies UniformRandomBitGenerator.
 */
class PhiloxStream {
public:
    using result_type = std::uint64_t;

    PhiloxStream(std::uint64_t seed, std::uint64_t stream_id) noexcept;

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    result_type operator()() noexcept;

    /// Uniform on the open interval (0, 1) with 53-bit resolution.
    double uniform() noexcept;

private:
    std::array<std::uint32_t, 2> key_;
    std::uint64_t stream_;
    std::uint64_t block_ = 0;
    std::array<std::uint32_t, 4> buffer_{};
    int used_ = 4;  // 32-bit words consumed from buffer_, in pairs
};

}  // namespace spms
