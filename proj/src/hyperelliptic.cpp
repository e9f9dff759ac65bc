#include "bettilab/hyperelliptic.hpp"

#include <set>
#include <string>

#include "bettilab/matrix.hpp"

namespace bettilab {

HyperellipticCurve::HyperellipticCurve(PrimeField field, Poly f) : field_(field), f_(std::move(f)), g_(0) {
    for (auto& c : f_) c %= field_.modulus();
    trim(f_);
    const int deg = degree(f_);
    if (deg < 1 || deg % 2 == 0) throw InvalidCurve("hyperelliptic: f must have odd degree 2g+1");
    if (!is_squarefree(field_, f_)) throw InvalidCurve("hyperelliptic: f is not squarefree");
    g_ = static_cast<std::size_t>(deg - 1) / 2;
}

bool HyperellipticCurve::contains(std::uint32_t x, std::uint32_t y) const noexcept {
    if (x >= field_.modulus() || y >= field_.modulus()) return false;
    return field_.mul(y, y) == evaluate(field_, f_, x);
}

nlohmann::json HyperellipticCurve::to_json() const {
    return {{"kind", "hyperelliptic"}, {"p", field_.modulus()}, {"f", f_}};
}

HyperellipticCurve HyperellipticCurve::from_json(const nlohmann::json& j) {
    if (j.value("kind", std::string("hyperelliptic")) != "hyperelliptic") throw InvalidCurve("not a hyperelliptic curve");
    return HyperellipticCurve(PrimeField(j.at("p").get<std::uint32_t>()), j.at("f").get<Poly>());
}

HyperellipticCurve random_hyperelliptic(PrimeField field, std::size_t g, std::uint64_t seed) {
    Rng rng(seed);
    for (int attempt = 0; attempt < 100; ++attempt) {
        Poly f(2 * g + 2);
        for (auto& c : f) c = static_cast<std::uint32_t>(rng.below(field.modulus()));
        f.back() = 1;
        if (is_squarefree(field, f)) return HyperellipticCurve(field, std::move(f));
    }
    throw InvalidCurve("random_hyperelliptic: no squarefree polynomial found");
}

int Divisor::degree() const noexcept {
    int total = infinity;
    for (const auto& [pt, n] : affine) total += n;
    return total;
}

Divisor& Divisor::operator+=(const Divisor& other) {
    for (const auto& [pt, n] : other.affine) {
        const int v = (affine[pt] += n);
        if (v == 0) affine.erase(pt);
    }
    infinity += other.infinity;
    return *this;
}

Divisor Divisor::negated() const {
    Divisor out;
    for (const auto& [pt, n] : affine) out.affine[pt] = -n;
    out.infinity = -infinity;
    return out;
}

Divisor canonical_divisor(const HyperellipticCurve& c) {
    return Divisor::at_infinity(2 * static_cast<int>(c.genus()) - 2);
}

AffinePoint random_point(const HyperellipticCurve& c, Rng& rng) {
    const PrimeField& f = c.field();
    for (;;) {
        const auto x = static_cast<std::uint32_t>(rng.below(f.modulus()));
        const std::uint32_t v = evaluate(f, c.f(), x);
        if (v == 0 || !f.is_square(v)) continue;
        std::uint32_t y = f.sqrt(v);
        if (rng.below(2) == 1) y = f.neg(y);
        return {x, y};
    }
}

Divisor random_effective_divisor(const HyperellipticCurve& c, std::size_t n, Rng& rng) {
    Divisor d;
    while (d.affine.size() < n) {
        const AffinePoint pt = random_point(c, rng);
        d.affine.emplace(pt, 1);
    }
    return d;
}

namespace {

// shift[j][k] = C(j,k) x0^(j-k): coefficient of t^k in (x0 + t)^j.
std::vector<std::vector<std::uint32_t>> shift_table(const PrimeField& f, std::uint32_t x0, std::size_t n) {
    std::vector<std::vector<std::uint32_t>> s(n + 1, std::vector<std::uint32_t>(n + 1, 0));
    s[0][0] = 1;
    for (std::size_t j = 1; j <= n; ++j) {
        for (std::size_t k = 0; k <= j; ++k) {
            std::uint32_t v = f.mul(s[j - 1][k], x0);
            if (k > 0) v = f.add(v, s[j - 1][k - 1]);
            s[j][k] = v;
        }
    }
    return s;
}

// Power series of y = sqrt(f(x0 + t)) with y(0) = y0 != 0, to order m.
std::vector<std::uint32_t> local_y(const PrimeField& f, const Poly& poly, std::uint32_t x0, std::uint32_t y0,
                                   std::size_t m) {
    const Poly F = taylor_shift(f, poly, x0);
    std::vector<std::uint32_t> Y(m, 0);
    if (m == 0) return Y;
    Y[0] = y0;
    const std::uint32_t inv2y = f.inv(f.add(y0, y0));
    for (std::size_t n = 1; n < m; ++n) {
        std::uint32_t acc = n < F.size() ? F[n] : 0;
        for (std::size_t k = 1; k < n; ++k) acc = f.sub(acc, f.mul(Y[k], Y[n - k]));
        Y[n] = f.mul(acc, inv2y);
    }
    return Y;
}

} // namespace

std::size_t h0_divisor(const HyperellipticCurve& c, const Divisor& D) {
    const PrimeField& f = c.field();
    const auto g = static_cast<int>(c.genus());
    for (const auto& [pt, n] : D.affine) {
        if (!c.contains(pt.first, pt.second)) {
            throw InvalidCurve("h0_divisor: (" + std::to_string(pt.first) + ", " + std::to_string(pt.second) +
                               ") is not on the curve");
        }
    }

    // Clear affine poles: multiply by c(x) = prod (x - x0)^e, which moves
    // the problem to D' = D - div(c), effective nowhere affine.
    std::map<std::uint32_t, int> clear;
    for (const auto& [pt, n] : D.affine) {
        if (n <= 0) continue;
        const int need = pt.second == 0 ? (n + 1) / 2 : n;
        clear[pt.first] = std::max(clear[pt.first], need);
    }
    Divisor Dp = D;
    for (const auto& [x0, e] : clear) {
        const std::uint32_t v = evaluate(f, c.f(), x0);
        Divisor div;
        if (v == 0) {
            div.affine[{x0, 0}] = 2 * e;
        } else {
            const std::uint32_t y0 = f.sqrt(v);
            div.affine[{x0, y0}] = e;
            div.affine[{x0, f.neg(y0)}] = e;
        }
        div.infinity = -2 * e;
        Dp += div.negated();
    }

    const int N = Dp.infinity;
    if (N < 0) return 0;
    const std::size_t na = static_cast<std::size_t>(N / 2) + 1;
    const std::size_t nb = N >= 2 * g + 1 ? static_cast<std::size_t>((N - 2 * g - 1) / 2) + 1 : 0;
    const std::size_t unknowns = na + nb;
    const std::size_t top = std::max(na, nb);

    std::vector<std::vector<std::uint32_t>> rows;
    for (const auto& [pt, n] : Dp.affine) {
        if (n >= 0) continue;
        const auto m = static_cast<std::size_t>(-n);
        const auto [x0, y0] = pt;
        const auto shift = shift_table(f, x0, top);
        if (y0 == 0) {
            // Local parameter y, ord(x - x0) = 2: ord a >= ceil(m/2), ord b >= floor(m/2).
            for (std::size_t k = 0; k < (m + 1) / 2; ++k) {
                std::vector<std::uint32_t> row(unknowns, 0);
                for (std::size_t j = k; j < na; ++j) row[j] = shift[j][k];
                rows.push_back(std::move(row));
            }
            for (std::size_t k = 0; k < m / 2; ++k) {
                std::vector<std::uint32_t> row(unknowns, 0);
                for (std::size_t j = k; j < nb; ++j) row[na + j] = shift[j][k];
                rows.push_back(std::move(row));
            }
        } else {
            // Local parameter t = x - x0: a(x0+t) + b(x0+t) Y(t) = 0 mod t^m.
            const auto Y = local_y(f, c.f(), x0, y0, m);
            for (std::size_t n2 = 0; n2 < m; ++n2) {
                std::vector<std::uint32_t> row(unknowns, 0);
                for (std::size_t j = n2; j < na; ++j) row[j] = shift[j][n2];
                for (std::size_t j = 0; j < nb; ++j) {
                    std::uint32_t acc = 0;
                    for (std::size_t k = 0; k <= std::min(n2, j); ++k) acc = f.add(acc, f.mul(shift[j][k], Y[n2 - k]));
                    row[na + j] = acc;
                }
                rows.push_back(std::move(row));
            }
        }
    }
    if (rows.empty()) return unknowns;
    return unknowns - rank(Matrix::from_rows(f, rows, unknowns));
}

bool GonalRows::differences_match() const {
    for (std::size_t i = 0; i < delta.size(); ++i) {
        if (static_cast<std::int64_t>(upper[i]) - static_cast<std::int64_t>(lower[i]) != delta[i]) return false;
    }
    return true;
}

bool GonalRows::products_vanish() const {
    for (std::size_t i = 0; i < upper.size(); ++i)
        if (upper[i] != 0 && lower[i] != 0) return false;
    return true;
}

nlohmann::json GonalRows::to_json() const {
    return {{"g", g},         {"r", r},         {"d", d},         {"gamma", gamma},
            {"u", u},         {"delta", delta}, {"h0", h0},       {"h1", h1},
            {"b_upper", upper}, {"b_lower", lower}, {"differences_match", differences_match()},
            {"products_vanish", products_vanish()}};
}

GonalRows gonal_betti_rows(const HyperellipticCurve& c, std::size_t r, const Divisor& gamma_divisor) {
    const std::size_t g = c.genus();
    if (r < 1) throw std::invalid_argument("gonal_betti_rows: r must be positive");
    if (g > r + 1) throw std::invalid_argument("gonal_betti_rows: needs g <= r + 1 for the pencil construction");
    if (gamma_divisor.infinity != 0) throw std::invalid_argument("gonal_betti_rows: Gamma must be affine");
    for (const auto& [pt, n] : gamma_divisor.affine)
        if (n <= 0) throw std::invalid_argument("gonal_betti_rows: Gamma must be effective");
    const int gamma = gamma_divisor.degree();
    if (gamma <= 0) throw std::invalid_argument("gonal_betti_rows: Gamma is empty");

    GonalRows out;
    out.g = g;
    out.r = r;
    out.d = 2 * r;
    out.gamma = static_cast<std::size_t>(gamma);
    const auto gi = static_cast<std::int64_t>(g);
    const auto d = static_cast<std::int64_t>(out.d);
    out.u = static_cast<int>(1 + (gamma + gi - 1) / d);
    const std::int64_t u = out.u;
    for (std::size_t i = 0; i <= r; ++i) {
        const auto ii = static_cast<std::int64_t>(i);
        const auto bin = static_cast<std::int64_t>(binomial(static_cast<std::int64_t>(r), ii));
        const std::int64_t bin1 = static_cast<std::int64_t>(binomial(static_cast<std::int64_t>(r) - 1, ii - 1));
        out.delta.push_back(-bin1 * d + bin * (d * u - gamma + 1 - gi));
        const Divisor Di = Divisor::at_infinity(static_cast<int>(2 * (u * static_cast<std::int64_t>(r) - ii))) +
                           gamma_divisor.negated();
        const std::size_t h0 = h0_divisor(c, Di);
        const std::int64_t chi = Di.degree() - gi + 1;
        const std::int64_t h1 = static_cast<std::int64_t>(h0) - chi;
        if (h1 < 0) throw std::logic_error("gonal_betti_rows: negative h^1");
        out.h0.push_back(h0);
        out.h1.push_back(static_cast<std::size_t>(h1));
        out.upper.push_back(static_cast<std::size_t>(bin) * h0);
        out.lower.push_back(static_cast<std::size_t>(bin * h1));
    }
    return out;
}

PropertyRResult property_r_sample(const HyperellipticCurve& c, std::size_t r, std::size_t i, std::size_t trials,
                                  std::uint64_t seed) {
    if (i < 1 || i + 1 > r) throw std::invalid_argument("property_r_sample: needs 1 <= i <= r - 1");
    const std::size_t g = c.genus();
    const std::size_t deg_xi = g - 1 + 2 * i;
    PropertyRResult res;
    res.trials = trials;
    for (std::size_t k = 0; k < trials; ++k) {
        Rng rng(derive_seed(seed, "property-r", k));
        Divisor xi = random_effective_divisor(c, deg_xi + g, rng);
        xi.infinity = -static_cast<int>(g);
        const Divisor twist = xi + Divisor::at_infinity(-2 * static_cast<int>(i));
        if (h0_divisor(c, twist) == 0) ++res.vanishing;
    }
    return res;
}

} // namespace bettilab
