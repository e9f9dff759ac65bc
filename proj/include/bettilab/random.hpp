#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace bettilab {

/// Seeded generator used everywhere randomness appears.
///
/// Wraps `std::mt19937_64` and draws bounded integers by rejection, so the
/// stream is identical across standard libraries (unlike the std
/// distributions, whose algorithms are implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x = 0;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

    /// Uniform in [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

private:
    std::mt19937_64 engine_;
};

/// Counter-based seed derivation: the seed of subtask (label, index) under a
/// master seed. Subtasks never share streams, and a partial re-run of one
/// subtask sees exactly the stream it saw inside the full run.
[[nodiscard]] std::uint64_t derive_seed(std::uint64_t master, std::string_view label, std::uint64_t index = 0) noexcept;

/// 64-bit FNV-1a, used for labels and content hashes.
[[nodiscard]] std::uint64_t fnv1a64(std::string_view bytes) noexcept;

} // namespace bettilab
