#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bettilab {

/// Arithmetic in the prime field F_p for odd primes p < 2^31.
///
/// Elements are plain `std::uint32_t` residues in [0, p); products fit in
/// 64 bits, so every operation is a single multiply followed by a reduction.
class PrimeField {
public:
    using value_type = std::uint32_t;

    explicit PrimeField(std::uint32_t p);

    [[nodiscard]] std::uint32_t modulus() const noexcept { return p_; }

    [[nodiscard]] value_type add(value_type a, value_type b) const noexcept {
        const std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    [[nodiscard]] value_type sub(value_type a, value_type b) const noexcept {
        return a >= b ? a - b : a + p_ - b;
    }
    [[nodiscard]] value_type neg(value_type a) const noexcept { return a == 0 ? 0 : p_ - a; }
    [[nodiscard]] value_type mul(value_type a, value_type b) const noexcept {
        return static_cast<value_type>((static_cast<std::uint64_t>(a) * b) % p_);
    }
    [[nodiscard]] value_type pow(value_type a, std::uint64_t e) const noexcept;
    /// Inverse of a nonzero element (Fermat). Throws on zero.
    [[nodiscard]] value_type inv(value_type a) const;
    /// Reduces an arbitrary signed integer into [0, p).
    [[nodiscard]] value_type from_int(std::int64_t v) const noexcept;
    /// Symmetric lift into (-p/2, p/2], handy for printing small values.
    [[nodiscard]] std::int64_t to_signed(value_type a) const noexcept;

    [[nodiscard]] bool is_square(value_type a) const noexcept;
    /// A square root of a quadratic residue (Tonelli-Shanks); throws otherwise.
    [[nodiscard]] value_type sqrt(value_type a) const;

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint32_t p_;
};

/// A field element tagged with its modulus. Used at API boundaries where the
/// result of a computation (determinant, pfaffian, Chow value) is returned.
struct FieldElement {
    std::uint32_t value = 0;
    std::uint32_t modulus = 0;

    [[nodiscard]] bool is_zero() const noexcept { return value == 0; }
    friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

/// Deterministic Miller-Rabin, exact for all 32-bit inputs.
[[nodiscard]] bool is_prime(std::uint64_t n) noexcept;

/// Smallest prime >= n.
[[nodiscard]] std::uint32_t next_prime(std::uint32_t n);

/// Random prime in [2^30, 2^31), a function of the seed only.
[[nodiscard]] std::uint32_t random_prime_31(std::uint64_t seed);

class FieldError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace bettilab
