#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bettilab/curve.hpp"
#include "bettilab/matrix.hpp"

namespace bettilab {

class MissingCohomology : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// A sheaf E on X in P^r (dim X = k, deg X = d) described by H^0(E), the
/// multiplication maps x_v : H^0(E) -> H^0(E(1)) and cohomology dimensions.
struct UlrichModuleData {
    PrimeField field{3};
    std::string label;
    std::size_t k = 0;
    std::size_t r = 0;
    std::size_t d = 0;
    std::size_t rank = 0;
    std::size_t h0 = 0;          // dim H^0(E)
    std::size_t h0_twist = 0;    // dim H^0(E(1))
    std::vector<Matrix> mult;    // r+1 matrices, h0 x h0_twist
    std::map<std::pair<int, int>, std::size_t> cohomology;  // (q, t) -> h^q(E(t))
    // Curves only: used for the slope criterion.
    std::optional<std::int64_t> bundle_degree;
    std::int64_t genus = 0;

    /// Throws MissingCohomology when absent.
    [[nodiscard]] std::size_t h(int q, int t) const;
    [[nodiscard]] nlohmann::json to_json() const;
};

/// E = O_{P^1}(e) pushed forward along a parametric curve (assumed an embedding).
[[nodiscard]] UlrichModuleData curve_line_bundle_data(const ParametricCurve& c, int e);
/// O_{P^1}(d-1) on the rational normal curve of degree d.
[[nodiscard]] UlrichModuleData rational_normal_curve_data(PrimeField field, std::size_t d);

/// Direct sum of O(a, b) on the quadric x0 x3 = x1 x2, the image of
/// P^1 x P^1 under x = (s0 t0, s0 t1, s1 t0, s1 t1).
[[nodiscard]] UlrichModuleData quadric_data(PrimeField field, const std::vector<std::pair<int, int>>& bidegrees);

struct UlrichCondition {
    std::string name;  // e.g. "h^1(E(-1))"
    std::size_t value = 0;
    bool ok = false;
};

struct UlrichReport {
    std::vector<UlrichCondition> conditions;
    bool ulrich = false;
    std::optional<bool> slope_criterion;  // curves: slope d+g-1 and h^0(E(-1)) = 0

    [[nodiscard]] nlohmann::json to_json() const;
};

/// H^i(E(-i)) = 0 for 1 <= i <= k and H^i(E(-i-1)) = 0 for 0 <= i < k.
[[nodiscard]] UlrichReport ulrich_certify(const UlrichModuleData& m);

/// chi(E^dual (x) F) = -2abs - 8ab for Ulrich bundles of ranks 2a, 2b on a
/// K3 surface with H^2 = 2s.
[[nodiscard]] std::int64_t euler_pairing(std::int64_t a, std::int64_t b, std::int64_t s);

class OddRankObstruction : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct UlrichNumerics {
    std::int64_t a = 0;
    std::int64_t s = 0;
    std::int64_t rank = 0;
    std::int64_t det_twist = 0;  // det E = O_S(det_twist)
    std::int64_t c2 = 0;
    bool balance_ok = false;     // H.(c1 - (rank/2)(K + 3H)) = 0 with K = 0

    [[nodiscard]] nlohmann::json to_json() const;
};

/// Rank-2a Ulrich bundle on a K3 surface of degree 2s: det O(3a), c2 = 9a^2 s - 4a(s-1).
[[nodiscard]] UlrichNumerics ulrich_numerics(std::int64_t a, std::int64_t s);
/// Same, by rank; with Picard rank one c1 = (3 rank / 2) H forces even rank.
[[nodiscard]] UlrichNumerics ulrich_numerics_for_rank(std::int64_t rank, std::int64_t s);

/// c2(E(n)) = 2n^2 s + 6sn + 5s + 4 for a rank-2 Ulrich E.
[[nodiscard]] std::int64_t gamma_n(std::int64_t n, std::int64_t s);
/// floor(sqrt((gamma_n - 2) / s)) + 1, so P_S(u-1) <= gamma_n < P_S(u) with P_S(t) = t^2 s + 2.
[[nodiscard]] std::int64_t u_n(std::int64_t n, std::int64_t s);

/// Consistency of synthetic rank-2 data on a K3 surface of degree 2s in
/// P^{s+1}: shape, h^0(E) = 4s, multiplication sizes, Ulrich vanishings.
[[nodiscard]] std::vector<std::string> validate_k3_rank2(const UlrichModuleData& m, std::size_t s);

} // namespace bettilab
