#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bettilab/curve.hpp"
#include "bettilab/polynomial.hpp"
#include "bettilab/random.hpp"

namespace bettilab {

/// y^2 = f(x) with f squarefree of degree 2g+1, one point at infinity.
class HyperellipticCurve {
public:
    HyperellipticCurve(PrimeField field, Poly f);

    [[nodiscard]] const PrimeField& field() const noexcept { return field_; }
    [[nodiscard]] std::size_t genus() const noexcept { return g_; }
    [[nodiscard]] const Poly& f() const noexcept { return f_; }
    [[nodiscard]] bool contains(std::uint32_t x, std::uint32_t y) const noexcept;

    [[nodiscard]] nlohmann::json to_json() const;
    static HyperellipticCurve from_json(const nlohmann::json& j);

private:
    PrimeField field_;
    Poly f_;
    std::size_t g_;
};

/// Random monic squarefree f of degree 2g+1.
[[nodiscard]] HyperellipticCurve random_hyperelliptic(PrimeField field, std::size_t g, std::uint64_t seed);

using AffinePoint = std::pair<std::uint32_t, std::uint32_t>;  // (x, y)

/// Integer combination of affine points and the point at infinity.
struct Divisor {
    std::map<AffinePoint, int> affine;
    int infinity = 0;

    [[nodiscard]] int degree() const noexcept;
    Divisor& operator+=(const Divisor& other);
    [[nodiscard]] friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
    [[nodiscard]] Divisor negated() const;

    static Divisor at_infinity(int n) {
        Divisor d;
        d.infinity = n;
        return d;
    }
};

/// Canonical class (2g - 2) * infinity.
[[nodiscard]] Divisor canonical_divisor(const HyperellipticCurve& c);

/// A random affine point with y != 0.
[[nodiscard]] AffinePoint random_point(const HyperellipticCurve& c, Rng& rng);
/// Sum of n distinct random non-Weierstrass affine points.
[[nodiscard]] Divisor random_effective_divisor(const HyperellipticCurve& c, std::size_t n, Rng& rng);

/// dim L(D) = dim { h : div h + D >= 0 }, from the basis x^a, x^b y of
/// functions regular away from infinity after clearing affine poles.
[[nodiscard]] std::size_t h0_divisor(const HyperellipticCurve& c, const Divisor& D);

/// Betti rows u-1 and u of gamma points in the gonal construction: C mapped
/// to P^r by L = A^r, A = O(2 infinity) the hyperelliptic pencil, so d = 2r
/// and M_V = (A^-1)^{C(r,i)} on wedge^i. Entries come from
///   b_{i+1,u-1} = C(r,i) h^0(A^{ur-i}(-Gamma)),  b_{i,u} = C(r,i) h^1(...).
struct GonalRows {
    std::size_t g = 0;
    std::size_t r = 0;
    std::size_t d = 0;
    std::size_t gamma = 0;
    int u = 0;
    std::vector<std::int64_t> delta;    // Delta_i from the closed form
    std::vector<std::size_t> h0;        // h^0(D_i)
    std::vector<std::size_t> h1;        // h^1(D_i)
    std::vector<std::size_t> upper;     // b_{i+1,u-1}
    std::vector<std::size_t> lower;     // b_{i,u}

    [[nodiscard]] bool differences_match() const;
    [[nodiscard]] bool products_vanish() const;
    [[nodiscard]] nlohmann::json to_json() const;
};

/// gamma_divisor must be effective, affine and of degree gamma.
[[nodiscard]] GonalRows gonal_betti_rows(const HyperellipticCurve& c, std::size_t r, const Divisor& gamma_divisor);

struct PropertyRResult {
    std::size_t trials = 0;
    std::size_t vanishing = 0;

    [[nodiscard]] double frequency() const noexcept {
        return trials == 0 ? 0.0 : static_cast<double>(vanishing) / static_cast<double>(trials);
    }
};

/// For trial k with seed derive_seed(seed, "property-r", k): xi = (sum of
/// deg+g random points) - g*infinity of degree g - 1 + 2i, and the trial
/// vanishes when h^0(A^{-i} (x) xi) = 0.
[[nodiscard]] PropertyRResult property_r_sample(const HyperellipticCurve& c, std::size_t r, std::size_t i,
                                                std::size_t trials, std::uint64_t seed);

} // namespace bettilab
