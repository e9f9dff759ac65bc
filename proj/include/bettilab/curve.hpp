#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "bettilab/betti.hpp"
#include "bettilab/graded_module.hpp"
#include "bettilab/graded_points.hpp"

namespace bettilab {

class InvalidCurve : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A map P^1 -> P^r given by r+1 binary forms of degree d. Coefficient a of
/// a form multiplies s^(d-a) t^a.
class ParametricCurve {
public:
    /// Rejects dependent forms (degenerate image) and common zeros (base points).
    ParametricCurve(PrimeField field, std::size_t r, std::size_t d, std::vector<std::vector<std::uint32_t>> forms);

    [[nodiscard]] const PrimeField& field() const noexcept { return field_; }
    [[nodiscard]] std::size_t r() const noexcept { return r_; }
    [[nodiscard]] std::size_t d() const noexcept { return d_; }
    [[nodiscard]] const std::vector<std::vector<std::uint32_t>>& forms() const noexcept { return forms_; }

    [[nodiscard]] std::vector<std::uint32_t> point(std::uint32_t s, std::uint32_t t) const;

    [[nodiscard]] nlohmann::json to_json() const;
    static ParametricCurve from_json(const nlohmann::json& j);

private:
    PrimeField field_;
    std::size_t r_;
    std::size_t d_;
    std::vector<std::vector<std::uint32_t>> forms_;
};

/// (s^r, s^(r-1) t, ..., t^r).
[[nodiscard]] ParametricCurve rational_normal_curve(PrimeField field, std::size_t r);
/// Forms s^(d-e) t^e for the given exponents e.
[[nodiscard]] ParametricCurve monomial_curve(PrimeField field, std::size_t d, const std::vector<std::size_t>& exponents);
/// Forms with uniformly random coefficients (redrawn until valid).
[[nodiscard]] ParametricCurve random_curve(PrimeField field, std::size_t r, std::size_t d, std::uint64_t seed);

/// T_{P^r}|_R(-1) = O(a_1) + ... + O(a_r), equivalently M_V = O(-a_1) + ... + O(-a_r).
struct SplittingType {
    std::vector<int> a;  // nondecreasing

    [[nodiscard]] bool balanced() const noexcept { return a.empty() || a.back() - a.front() <= 1; }
    friend bool operator==(const SplittingType&, const SplittingType&) = default;
};

/// dim ker(V (x) H^0(O(m)) -> H^0(O(d+m))) = h^0(M_V(m)).
[[nodiscard]] std::size_t kernel_dimension(const ParametricCurve& c, std::size_t m);
[[nodiscard]] SplittingType splitting_type(const ParametricCurve& c);

/// Images of gamma distinct seeded-random affine parameters (1 : t), skipping
/// parameters whose image repeats an earlier point.
[[nodiscard]] PointSet sample_points(const ParametricCurve& c, std::size_t gamma, std::uint64_t seed);

/// The homogeneous coordinate ring S(C): degree j lives in binary forms of
/// degree dj as the span of all degree-j monomials in the curve's forms.
class CurveModule final : public GradedModule {
public:
    CurveModule(const ParametricCurve& c, int max_degree);

    [[nodiscard]] const PrimeField& field() const override { return curve_.field(); }
    [[nodiscard]] std::size_t num_variables() const override { return curve_.r() + 1; }
    [[nodiscard]] int max_degree() const override { return static_cast<int>(pieces_.size()) - 1; }
    [[nodiscard]] std::size_t ambient_dim(int j) const override {
        return j < 0 ? 0 : curve_.d() * static_cast<std::size_t>(j) + 1;
    }
    [[nodiscard]] const Matrix& basis(int j) const override;
    void multiply(std::size_t var, int j, std::span<const std::uint32_t> v,
                  std::span<std::uint32_t> out) const override;

private:
    ParametricCurve curve_;
    std::vector<Matrix> pieces_;
    Matrix empty_;
};

/// Betti table of S(C) through row d - r + 2, one past the regularity bound
/// for rational curves, so the last row is zero.
[[nodiscard]] BettiTable curve_table(const ParametricCurve& c);

} // namespace bettilab
