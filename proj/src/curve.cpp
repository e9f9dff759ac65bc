#include "bettilab/curve.hpp"

#include <set>
#include <string>

#include "bettilab/polynomial.hpp"
#include "bettilab/random.hpp"

namespace bettilab {

ParametricCurve::ParametricCurve(PrimeField field, std::size_t r, std::size_t d,
                                 std::vector<std::vector<std::uint32_t>> forms)
    : field_(field), r_(r), d_(d), forms_(std::move(forms)) {
    if (r_ == 0 || d_ == 0) throw InvalidCurve("curve needs r >= 1 and d >= 1");
    if (r_ > 7) throw InvalidCurve("curve: r > 7 is unsupported");
    if (forms_.size() != r_ + 1) throw InvalidCurve("curve needs exactly r+1 forms");
    for (auto& form : forms_) {
        if (form.size() != d_ + 1) throw InvalidCurve("every form needs d+1 coefficients");
        for (auto& x : form) x %= field_.modulus();
    }
    if (rank(Matrix::from_rows(field_, forms_, d_ + 1)) != r_ + 1) {
        throw InvalidCurve("forms are linearly dependent: the image is degenerate");
    }
    // Common zero at (0 : 1) means every coefficient of t^d vanishes; affine
    // common zeros show up in the gcd of the dehomogenized forms.
    bool all_vanish_at_infinity = true;
    for (const auto& form : forms_) all_vanish_at_infinity = all_vanish_at_infinity && form[d_] == 0;
    Poly g;
    for (const auto& form : forms_) g = poly_gcd(field_, g, Poly(form.begin(), form.end()));
    if (all_vanish_at_infinity || degree(g) > 0) throw InvalidCurve("forms have a common zero: base point");
}

std::vector<std::uint32_t> ParametricCurve::point(std::uint32_t s, std::uint32_t t) const {
    std::vector<std::uint32_t> out;
    out.reserve(r_ + 1);
    for (const auto& form : forms_) {
        std::uint32_t acc = 0;
        std::uint32_t sp = 1;
        std::vector<std::uint32_t> tp(d_ + 1, 1);
        for (std::size_t a = 1; a <= d_; ++a) tp[a] = field_.mul(tp[a - 1], t);
        for (std::size_t a = d_ + 1; a-- > 0;) {
            acc = field_.add(acc, field_.mul(form[a], field_.mul(sp, tp[a])));
            sp = field_.mul(sp, s);
        }
        out.push_back(acc);
    }
    return out;
}

nlohmann::json ParametricCurve::to_json() const {
    return {{"kind", "parametric"}, {"p", field_.modulus()}, {"r", r_}, {"d", d_}, {"forms", forms_}};
}

ParametricCurve ParametricCurve::from_json(const nlohmann::json& j) {
    if (j.value("kind", std::string("parametric")) != "parametric") throw InvalidCurve("not a parametric curve");
    return ParametricCurve(PrimeField(j.at("p").get<std::uint32_t>()), j.at("r").get<std::size_t>(),
                           j.at("d").get<std::size_t>(), j.at("forms").get<std::vector<std::vector<std::uint32_t>>>());
}

ParametricCurve rational_normal_curve(PrimeField field, std::size_t r) {
    std::vector<std::size_t> e(r + 1);
    for (std::size_t k = 0; k <= r; ++k) e[k] = k;
    return monomial_curve(field, r, e);
}

ParametricCurve monomial_curve(PrimeField field, std::size_t d, const std::vector<std::size_t>& exponents) {
    if (exponents.empty()) throw InvalidCurve("monomial_curve: no exponents");
    std::vector<std::vector<std::uint32_t>> forms;
    for (const std::size_t e : exponents) {
        if (e > d) throw InvalidCurve("monomial_curve: exponent exceeds degree");
        std::vector<std::uint32_t> form(d + 1, 0);
        form[e] = 1;
        forms.push_back(std::move(form));
    }
    return ParametricCurve(field, exponents.size() - 1, d, std::move(forms));
}

ParametricCurve random_curve(PrimeField field, std::size_t r, std::size_t d, std::uint64_t seed) {
    if (d < r) throw InvalidCurve("random_curve: a nondegenerate curve needs d >= r");
    Rng rng(seed);
    for (int attempt = 0; attempt < 100; ++attempt) {
        std::vector<std::vector<std::uint32_t>> forms(r + 1, std::vector<std::uint32_t>(d + 1));
        for (auto& form : forms)
            for (auto& x : form) x = static_cast<std::uint32_t>(rng.below(field.modulus()));
        try {
            return ParametricCurve(field, r, d, std::move(forms));
        } catch (const InvalidCurve&) {
        }
    }
    throw InvalidCurve("random_curve: no valid curve found");
}

std::size_t kernel_dimension(const ParametricCurve& c, std::size_t m) {
    const std::size_t d = c.d();
    Matrix mult(c.field(), (c.r() + 1) * (m + 1), d + m + 1);
    for (std::size_t k = 0; k <= c.r(); ++k)
        for (std::size_t a = 0; a <= m; ++a)
            for (std::size_t b = 0; b <= d; ++b) mult(k * (m + 1) + a, a + b) = c.forms()[k][b];
    return mult.rows() - rank(mult);
}

SplittingType splitting_type(const ParametricCurve& c) {
    // h^0(M_V(m)) = sum_i max(m - a_i + 1, 0), so its first difference counts
    // the a_i <= m.
    SplittingType type;
    std::size_t prev = 0;
    for (std::size_t m = 0; type.a.size() < c.r(); ++m) {
        const std::size_t k = kernel_dimension(c, m);
        const std::size_t below = k - prev;
        if (below < type.a.size() || below > c.r()) throw std::logic_error("splitting_type: inconsistent kernel dimensions");
        while (type.a.size() < below) type.a.push_back(static_cast<int>(m));
        prev = k;
        if (m > c.d()) throw std::logic_error("splitting_type: kernel did not stabilize");
    }
    return type;
}

PointSet sample_points(const ParametricCurve& c, std::size_t gamma, std::uint64_t seed) {
    const PrimeField& f = c.field();
    if (gamma >= f.modulus()) throw InvalidCurve("sample_points: field too small for " + std::to_string(gamma) + " points");
    Rng rng(seed);
    std::set<std::uint32_t> used;
    std::set<std::vector<std::uint32_t>> images;
    std::vector<std::vector<std::uint32_t>> pts;
    std::size_t misses = 0;
    while (pts.size() < gamma) {
        const auto t = static_cast<std::uint32_t>(rng.below(f.modulus()));
        if (!used.insert(t).second) continue;
        auto pt = c.point(1, t);
        auto key = pt;
        std::uint32_t lead = 0;
        for (const auto x : key)
            if (x != 0) {
                lead = f.inv(x);
                break;
            }
        for (auto& x : key) x = f.mul(x, lead);
        if (!images.insert(key).second) {
            if (++misses > 10 * gamma + 100) throw InvalidCurve("sample_points: too many coincident images");
            continue;
        }
        pts.push_back(std::move(pt));
    }
    return PointSet(f, c.r(), std::move(pts));
}

CurveModule::CurveModule(const ParametricCurve& c, int max_degree) : curve_(c), empty_(c.field(), 0, 0) {
    const PrimeField& f = c.field();
    pieces_.push_back(Matrix::from_rows(f, {{1}}));
    for (int j = 1; j <= max_degree; ++j) {
        const Matrix& prev = pieces_.back();
        std::vector<std::vector<std::uint32_t>> spans;
        std::vector<std::uint32_t> out(ambient_dim(j));
        for (std::size_t b = 0; b < prev.rows(); ++b) {
            for (std::size_t k = 0; k <= c.r(); ++k) {
                multiply(k, j - 1, prev.row(b), out);
                spans.push_back(out);
            }
        }
        pieces_.push_back(row_space(Matrix::from_rows(f, spans, ambient_dim(j))));
    }
}

const Matrix& CurveModule::basis(int j) const {
    if (j < 0) return empty_;
    return pieces_.at(static_cast<std::size_t>(j));
}

void CurveModule::multiply(std::size_t var, int j, std::span<const std::uint32_t> v,
                           std::span<std::uint32_t> out) const {
    const PrimeField& f = curve_.field();
    const auto& form = curve_.forms()[var];
    std::fill(out.begin(), out.end(), 0U);
    for (std::size_t a = 0; a < ambient_dim(j); ++a) {
        if (v[a] == 0) continue;
        for (std::size_t b = 0; b < form.size(); ++b) out[a + b] = f.add(out[a + b], f.mul(v[a], form[b]));
    }
}

BettiTable curve_table(const ParametricCurve& c) {
    const int rows = static_cast<int>(c.d()) - static_cast<int>(c.r()) + 3;
    const CurveModule module(c, rows);
    BettiTable t = betti_table(module, static_cast<std::size_t>(rows));
    t.prime = c.field().modulus();
    t.r = c.r();
    return t;
}

} // namespace bettilab
