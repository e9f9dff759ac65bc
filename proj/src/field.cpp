#include "bettilab/field.hpp"

#include "bettilab/random.hpp"

namespace bettilab {

namespace {

__extension__ using u128 = unsigned __int128;

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<u128>(a) * b) % m);
}

std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e != 0) {
        if ((e & 1U) != 0) r = mulmod64(r, a, m);
        a = mulmod64(a, a, m);
        e >>= 1U;
    }
    return r;
}

} // namespace

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (p < 3 || p >= (1U << 31U) || !is_prime(p)) {
        throw FieldError("modulus must be an odd prime below 2^31, got " + std::to_string(p));
    }
}

PrimeField::value_type PrimeField::pow(value_type a, std::uint64_t e) const noexcept {
    return static_cast<value_type>(powmod64(a, e, p_));
}

PrimeField::value_type PrimeField::inv(value_type a) const {
    if (a % p_ == 0) throw FieldError("inverse of zero");
    return pow(a, p_ - 2);
}

PrimeField::value_type PrimeField::from_int(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<value_type>(r);
}

std::int64_t PrimeField::to_signed(value_type a) const noexcept {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
}

bool PrimeField::is_square(value_type a) const noexcept {
    return a == 0 || pow(a, (p_ - 1) / 2) == 1;
}

PrimeField::value_type PrimeField::sqrt(value_type a) const {
    a %= p_;
    if (a == 0) return 0;
    if (!is_square(a)) throw FieldError("not a quadratic residue");
    if (p_ % 4 == 3) return pow(a, (p_ + 1) / 4);
    std::uint32_t q = p_ - 1;
    unsigned s = 0;
    while ((q & 1U) == 0) {
        q >>= 1U;
        ++s;
    }
    value_type z = 2;
    while (is_square(z)) ++z;
    value_type c = pow(z, q);
    value_type x = pow(a, (q + 1) / 2);
    value_type t = pow(a, q);
    unsigned m = s;
    while (t != 1) {
        unsigned i = 0;
        value_type t2 = t;
        while (t2 != 1) {
            t2 = mul(t2, t2);
            ++i;
        }
        value_type b = c;
        for (unsigned j = 0; j + i + 1 < m; ++j) b = mul(b, b);
        x = mul(x, b);
        c = mul(b, b);
        t = mul(t, c);
        m = i;
    }
    return x;
}

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % small == 0) return n == small;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    // These bases are exact for n < 3.3e24.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mulmod64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::uint32_t next_prime(std::uint32_t n) {
    std::uint64_t c = n < 2 ? 2 : n;
    while (!is_prime(c)) ++c;
    if (c >= (1ULL << 32U)) throw FieldError("next_prime overflow");
    return static_cast<std::uint32_t>(c);
}

std::uint32_t random_prime_31(std::uint64_t seed) {
    Rng rng(seed);
    for (;;) {
        const std::uint32_t lo = 1U << 30U;
        const std::uint32_t candidate = (lo + static_cast<std::uint32_t>(rng.below(lo))) | 1U;
        const std::uint32_t p = next_prime(candidate);
        if (p < (1U << 31U)) return p;
    }
}

} // namespace bettilab
