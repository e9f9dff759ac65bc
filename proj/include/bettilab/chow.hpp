#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "bettilab/curve.hpp"
#include "bettilab/random.hpp"
#include "bettilab/ulrich.hpp"

namespace bettilab {

/// A codimension-(k+1) linear subspace of P^r cut out by k+1 independent
/// linear forms (coefficient vectors in x_0..x_r).
class PlanePoint {
public:
    PlanePoint(PrimeField field, std::size_t r, std::vector<std::vector<std::uint32_t>> forms);

    [[nodiscard]] const PrimeField& field() const noexcept { return field_; }
    [[nodiscard]] std::size_t r() const noexcept { return r_; }
    [[nodiscard]] const std::vector<std::vector<std::uint32_t>>& forms() const noexcept { return forms_; }
    [[nodiscard]] nlohmann::json to_json() const;

private:
    PrimeField field_;
    std::size_t r_;
    std::vector<std::vector<std::uint32_t>> forms_;
};

/// Maximal minors of the forms, indexed by the lex basis of wedge^{k+1} of
/// the coordinate space: the coefficients of l_1 ^ ... ^ l_{k+1}.
[[nodiscard]] std::vector<std::uint32_t> plucker(const PlanePoint& plane);

class TateDimensionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// n x n matrix of linear forms in the Plucker coordinates: entry (a, b) is
/// sum_w coefficients[w](a, b) * p_w.
struct ChowMatrix {
    PrimeField field{3};
    std::size_t k = 0;
    std::size_t r = 0;
    std::size_t size = 0;
    bool skew = false;
    std::vector<Matrix> coefficients;  // one per Plucker coordinate

    [[nodiscard]] Matrix at(const std::vector<std::uint32_t>& p) const;
    [[nodiscard]] nlohmann::json to_json() const;
    /// One line per entry: "(a,b): 3*p01 - p23".
    [[nodiscard]] std::string listing() const;
};

/// Space of beta : wedge^{k+1} V -> H^0(E) whose composite
/// wedge^{k+2} V -> V (x) wedge^{k+1} V -> V (x) H^0(E) -> H^0(E(1)) vanishes,
/// as the nullspace of this constraint matrix acting on beta flattened as
/// (w, a) -> w * h0 + a.
[[nodiscard]] Matrix tate_constraints(const UlrichModuleData& m);

/// Builds the matrix from a deterministic basis of Sol. Throws
/// TateDimensionError unless dim Sol = h^0(E) = d * rank. For rank-2
/// surface data the basis is changed (random invertible solution of the
/// linear skewness equations, seeded) so the matrix is skew; failure throws.
[[nodiscard]] ChowMatrix tate_phi(const UlrichModuleData& m, std::uint64_t seed = 0);

/// The composite of every basis map of the matrix with the constraint map is zero.
[[nodiscard]] bool tate_composite_is_zero(const UlrichModuleData& m, const ChowMatrix& cm);

/// Determinant, or pfaffian when the matrix is skew.
[[nodiscard]] FieldElement chow_evaluate(const ChowMatrix& cm, const PlanePoint& plane);

/// The quadric x0 x3 - x1 x2 in P^3.
struct QuadricSurface {};
using ChowTarget = std::variant<ParametricCurve, QuadricSurface>;

[[nodiscard]] std::size_t target_dimension(const ChowTarget& x);
[[nodiscard]] std::size_t target_ambient(const ChowTarget& x);

/// Sylvester resultant of two binary forms of equal degree (coefficient a of s^(d-a) t^a).
[[nodiscard]] std::uint32_t binary_resultant(const PrimeField& f, const std::vector<std::uint32_t>& a,
                                             const std::vector<std::uint32_t>& b);

/// Whether the plane meets X over the algebraic closure. Curves: resultant of
/// the pulled-back forms. Quadric: the plane is a point, tested on the equation.
[[nodiscard]] bool chow_membership_oracle(const ChowTarget& x, const PlanePoint& plane);

/// A nonzero-scalar multiple of the Chow form evaluated at the plane:
/// the resultant for curves, Q at the Hodge dual point for the quadric.
[[nodiscard]] std::uint32_t chow_reference_value(const ChowTarget& x, const PlanePoint& plane);

[[nodiscard]] std::vector<std::uint32_t> random_target_point(const ChowTarget& x, const PrimeField& f, Rng& rng);
[[nodiscard]] PlanePoint random_plane(const PrimeField& f, std::size_t r, std::size_t count, Rng& rng);
/// Random plane containing the given point.
[[nodiscard]] PlanePoint random_plane_through(const PrimeField& f, const std::vector<std::uint32_t>& point,
                                              std::size_t count, Rng& rng);

struct ChowReport {
    std::size_t samples = 0;
    std::size_t vanishing = 0;
    std::size_t agreements = 0;
    std::vector<nlohmann::json> disagreements;  // offending planes
    bool ratio_constant = true;
    std::optional<std::uint32_t> ratio;          // value / reference on nonvanishing samples

    [[nodiscard]] bool ok() const noexcept { return disagreements.empty() && ratio_constant; }
    [[nodiscard]] nlohmann::json to_json() const;
};

/// Sample k of `samples` uses derive_seed(seed, "chow-plane", k); even k
/// draws a general plane, odd k a plane through a random point of X.
[[nodiscard]] ChowReport chow_compare(const ChowMatrix& cm, const ChowTarget& x, std::size_t samples,
                                      std::uint64_t seed);

} // namespace bettilab
