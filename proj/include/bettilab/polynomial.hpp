#pragma once

#include <cstdint>
#include <vector>

#include "bettilab/field.hpp"

namespace bettilab {

/// Dense univariate polynomial over F_p, coefficient k of x^k, no trailing
/// zeros (the zero polynomial is empty).
using Poly = std::vector<std::uint32_t>;

void trim(Poly& a);
[[nodiscard]] int degree(const Poly& a) noexcept;  // -1 for zero
[[nodiscard]] Poly poly_add(const PrimeField& f, const Poly& a, const Poly& b);
[[nodiscard]] Poly poly_sub(const PrimeField& f, const Poly& a, const Poly& b);
[[nodiscard]] Poly poly_mul(const PrimeField& f, const Poly& a, const Poly& b);
/// Remainder of a modulo a nonzero b.
[[nodiscard]] Poly poly_mod(const PrimeField& f, Poly a, const Poly& b);
/// Monic gcd; zero if both inputs are zero.
[[nodiscard]] Poly poly_gcd(const PrimeField& f, Poly a, Poly b);
[[nodiscard]] Poly derivative(const PrimeField& f, const Poly& a);
[[nodiscard]] std::uint32_t evaluate(const PrimeField& f, const Poly& a, std::uint32_t x) noexcept;
/// Coefficients of a(x0 + t) in t.
[[nodiscard]] Poly taylor_shift(const PrimeField& f, const Poly& a, std::uint32_t x0);
[[nodiscard]] bool is_squarefree(const PrimeField& f, const Poly& a);

} // namespace bettilab
