#include "bettilab/graded_points.hpp"

#include "bettilab/random.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace bettilab {

namespace {

void monomials_rec(std::size_t var, std::size_t nvars, unsigned remaining, Exponents& cur,
                   std::vector<Exponents>& out) {
    if (var + 1 == nvars) {
        cur[var] = remaining;
        out.push_back(cur);
        return;
    }
    for (unsigned e = remaining + 1; e-- > 0;) {
        cur[var] = e;
        monomials_rec(var + 1, nvars, remaining - e, cur, out);
    }
    cur[var] = 0;
}

std::vector<std::uint32_t> normalized(const PrimeField& f, const std::vector<std::uint32_t>& v) {
    std::vector<std::uint32_t> out = v;
    for (const std::uint32_t x : v) {
        if (x != 0) {
            const std::uint32_t s = f.inv(x);
            for (auto& y : out) y = f.mul(y, s);
            break;
        }
    }
    return out;
}

} // namespace

std::uint64_t binomial(std::int64_t n, std::int64_t k) noexcept {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

std::vector<Exponents> monomial_basis(std::size_t r, unsigned j) {
    std::vector<Exponents> out;
    out.reserve(binomial(static_cast<std::int64_t>(j + r), static_cast<std::int64_t>(r)));
    Exponents cur(r + 1, 0);
    monomials_rec(0, r + 1, j, cur, out);
    return out;
}

PointSet::PointSet(PrimeField field, std::size_t r, std::vector<std::vector<std::uint32_t>> points)
    : field_(field), r_(r), points_(std::move(points)) {
    std::set<std::vector<std::uint32_t>> seen;
    for (std::size_t i = 0; i < points_.size(); ++i) {
        auto& pt = points_[i];
        if (pt.size() != r_ + 1) {
            throw InvalidPointSet("point " + std::to_string(i) + " has " + std::to_string(pt.size()) +
                                  " coordinates, expected " + std::to_string(r_ + 1));
        }
        bool zero = true;
        for (auto& x : pt) {
            x %= field_.modulus();
            zero = zero && x == 0;
        }
        if (zero) throw InvalidPointSet("point " + std::to_string(i) + " is the zero vector");
        if (!seen.insert(normalized(field_, pt)).second) {
            throw InvalidPointSet("point " + std::to_string(i) + " coincides projectively with an earlier point");
        }
    }
}

PointSet random_point_set(PrimeField field, std::size_t r, std::size_t gamma, std::uint64_t seed) {
    Rng rng(seed);
    std::set<std::vector<std::uint32_t>> seen;
    std::vector<std::vector<std::uint32_t>> pts;
    while (pts.size() < gamma) {
        std::vector<std::uint32_t> v(r + 1);
        for (auto& x : v) x = static_cast<std::uint32_t>(rng.below(field.modulus()));
        if (std::all_of(v.begin(), v.end(), [](std::uint32_t x) { return x == 0; })) continue;
        if (!seen.insert(normalized(field, v)).second) continue;
        pts.push_back(std::move(v));
    }
    return PointSet(field, r, std::move(pts));
}

PointSet PointSet::rescaled(std::span<const std::uint32_t> scalars) const {
    if (scalars.size() != points_.size()) throw InvalidPointSet("rescaled: one scalar per point required");
    auto pts = points_;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (scalars[i] % field_.modulus() == 0) throw InvalidPointSet("rescaled: zero scalar");
        for (auto& x : pts[i]) x = field_.mul(x, scalars[i] % field_.modulus());
    }
    return PointSet(field_, r_, std::move(pts));
}

nlohmann::json PointSet::to_json() const {
    return {{"p", field_.modulus()}, {"r", r_}, {"points", points_}};
}

PointSet PointSet::from_json(const nlohmann::json& j) {
    const PrimeField f(j.at("p").get<std::uint32_t>());
    const auto r = j.at("r").get<std::size_t>();
    std::vector<std::vector<std::uint32_t>> pts;
    for (const auto& row : j.at("points")) {
        std::vector<std::uint32_t> pt;
        for (const auto& x : row) pt.push_back(f.from_int(x.get<std::int64_t>()));
        pts.push_back(std::move(pt));
    }
    return PointSet(f, r, std::move(pts));
}

Matrix evaluation_matrix(const PointSet& points, unsigned j) {
    const PrimeField& f = points.field();
    const auto monomials = monomial_basis(points.r(), j);
    Matrix m(f, monomials.size(), points.size());
    // powers[i][k][e] = (x_k at point i)^e
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto& pt = points.point(i);
        std::vector<std::vector<std::uint32_t>> powers(pt.size(), std::vector<std::uint32_t>(j + 1, 1));
        for (std::size_t k = 0; k < pt.size(); ++k)
            for (unsigned e = 1; e <= j; ++e) powers[k][e] = f.mul(powers[k][e - 1], pt[k]);
        for (std::size_t m_idx = 0; m_idx < monomials.size(); ++m_idx) {
            std::uint32_t v = 1;
            for (std::size_t k = 0; k < pt.size(); ++k) v = f.mul(v, powers[k][monomials[m_idx][k]]);
            m(m_idx, i) = v;
        }
    }
    return m;
}

std::size_t hilbert_function(const PointSet& points, unsigned j) { return rank(evaluation_matrix(points, j)); }

unsigned hilbert_regularity(const PointSet& points) {
    unsigned j = 0;
    while (hilbert_function(points, j) < points.size()) ++j;
    return j;
}

GradedPiece graded_piece(const PointSet& points, unsigned j) {
    return GradedPiece{j, row_space(evaluation_matrix(points, j))};
}

std::vector<std::uint32_t> linear_form_values(const PointSet& points, std::span<const std::uint32_t> coeffs) {
    if (coeffs.size() != points.r() + 1) throw DimensionError("linear form needs r+1 coefficients");
    const PrimeField& f = points.field();
    std::vector<std::uint32_t> values(points.size(), 0);
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t k = 0; k <= points.r(); ++k) values[i] = f.add(values[i], f.mul(coeffs[k], points.point(i)[k]));
    return values;
}

Matrix multiply_piece(const GradedPiece& piece, std::span<const std::uint32_t> form_values) {
    const PrimeField& f = piece.basis.field();
    if (form_values.size() != piece.basis.cols()) throw DimensionError("multiply_piece: length mismatch");
    Matrix out = piece.basis;
    for (std::size_t r = 0; r < out.rows(); ++r)
        for (std::size_t c = 0; c < out.cols(); ++c) out(r, c) = f.mul(out(r, c), form_values[c]);
    return out;
}

} // namespace bettilab
