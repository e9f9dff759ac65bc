#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <json.hpp>

#include "bettilab/field.hpp"
#include "bettilab/matrix.hpp"

namespace bettilab {

/// Exponent vector of a monomial in x_0..x_r.
using Exponents = std::vector<unsigned>;

/// All degree-j monomials in r+1 variables, graded-lexicographic order
/// (x_0^j first, x_r^j last). Count is C(j+r, r).
[[nodiscard]] std::vector<Exponents> monomial_basis(std::size_t r, unsigned j);

[[nodiscard]] std::uint64_t binomial(std::int64_t n, std::int64_t k) noexcept;

class InvalidPointSet : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A reduced finite set of points in P^r over F_p with fixed affine lifts.
class PointSet {
public:
    /// Rejects zero vectors, wrong lengths and projectively equal pairs.
    PointSet(PrimeField field, std::size_t r, std::vector<std::vector<std::uint32_t>> points);

    [[nodiscard]] const PrimeField& field() const noexcept { return field_; }
    [[nodiscard]] std::size_t r() const noexcept { return r_; }
    [[nodiscard]] std::size_t size() const noexcept { return points_.size(); }
    [[nodiscard]] const std::vector<std::uint32_t>& point(std::size_t i) const { return points_[i]; }
    [[nodiscard]] const std::vector<std::vector<std::uint32_t>>& points() const noexcept { return points_; }

    /// Same points, lift i multiplied by scalars[i] (nonzero).
    [[nodiscard]] PointSet rescaled(std::span<const std::uint32_t> scalars) const;

    [[nodiscard]] nlohmann::json to_json() const;
    static PointSet from_json(const nlohmann::json& j);

private:
    PrimeField field_;
    std::size_t r_;
    std::vector<std::vector<std::uint32_t>> points_;
};

/// gamma points with uniformly random lifts (distinct, nonzero), a function
/// of the seed only.
[[nodiscard]] PointSet random_point_set(PrimeField field, std::size_t r, std::size_t gamma, std::uint64_t seed);

/// C(j+r, r) x gamma matrix; entry (m, i) is monomial m at the lift of point i.
[[nodiscard]] Matrix evaluation_matrix(const PointSet& points, unsigned j);

/// dim S(Gamma)_j, the rank of the evaluation matrix.
[[nodiscard]] std::size_t hilbert_function(const PointSet& points, unsigned j);

/// Smallest j with h_Gamma(j) = gamma: the regularity of S(Gamma).
[[nodiscard]] unsigned hilbert_regularity(const PointSet& points);

/// S(Gamma)_j realized inside F^gamma (function values at the lifts).
struct GradedPiece {
    unsigned degree = 0;
    Matrix basis;  // rows are linearly independent value vectors

    [[nodiscard]] std::size_t dim() const noexcept { return basis.rows(); }
};

[[nodiscard]] GradedPiece graded_piece(const PointSet& points, unsigned j);

/// Values of the linear form sum_k coeffs[k] x_k at every lift.
[[nodiscard]] std::vector<std::uint32_t> linear_form_values(const PointSet& points,
                                                            std::span<const std::uint32_t> coeffs);

/// Coordinatewise product of each basis row with the values of a linear form.
[[nodiscard]] Matrix multiply_piece(const GradedPiece& piece, std::span<const std::uint32_t> form_values);

} // namespace bettilab
