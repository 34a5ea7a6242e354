#pragma once

#include <array>
#include <cstdint>

namespace resetsde {

/// Counter-based random stream (Philox4x32-10).
///
/// A stream is fully determined by a (seed, stream id) pair: the seed forms
/// the cipher key and the stream id occupies the upper half of the 128-bit
/// counter. Stream `i` of an ensemble can therefore be constructed directly
/// by any worker, without jump-ahead or shared state, and the i-th
/// trajectory is identical however the work is partitioned.
class RngStream {
public:
    using result_type = std::uint32_t;

    RngStream(std::uint64_t seed, std::uint64_t stream_id);

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return 0xFFFFFFFFu; }
    result_type operator()();

    std::uint64_t next_u64();
    /// Uniform on the open interval (0, 1), 53-bit resolution.
    double uniform();
    /// Standard normal via Box-Muller; the second variate is cached.
    double normal();
    /// Unit-mean exponential.
    double exponential();

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

private:
    void refill();

    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::uint64_t block_ = 0;
    std::array<std::uint32_t, 4> buffer_{};
    int buffered_ = 0;
    double cached_normal_ = 0.0;
    bool has_cached_normal_ = false;
};

/// Philox4x32-10 block function, exposed for known-answer tests.
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter,
                                           std::array<std::uint32_t, 2> key);

}  // namespace resetsde
