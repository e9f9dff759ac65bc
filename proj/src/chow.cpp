#include "bettilab/chow.hpp"

#include <sstream>

#include "bettilab/exterior.hpp"

namespace bettilab {

PlanePoint::PlanePoint(PrimeField field, std::size_t r, std::vector<std::vector<std::uint32_t>> forms)
    : field_(field), r_(r), forms_(std::move(forms)) {
    if (forms_.empty() || forms_.size() > r_ + 1) throw std::invalid_argument("plane: needs 1..r+1 forms");
    for (auto& form : forms_) {
        if (form.size() != r_ + 1) throw std::invalid_argument("plane: every form needs r+1 coefficients");
        for (auto& x : form) x %= field_.modulus();
    }
    if (rank(Matrix::from_rows(field_, forms_, r_ + 1)) != forms_.size()) {
        throw std::invalid_argument("plane: defining forms are dependent");
    }
}

nlohmann::json PlanePoint::to_json() const { return {{"p", field_.modulus()}, {"r", r_}, {"forms", forms_}}; }

std::vector<std::uint32_t> plucker(const PlanePoint& plane) {
    const std::size_t n = plane.r() + 1;
    const std::size_t m = plane.forms().size();
    const WedgeBasis basis(n, m);
    std::vector<std::uint32_t> out;
    out.reserve(basis.size());
    for (std::size_t w = 0; w < basis.size(); ++w) {
        const auto cols = basis.elements(w);
        Matrix minor(plane.field(), m, m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) minor(i, j) = plane.forms()[i][cols[j]];
        out.push_back(determinant(minor).value);
    }
    return out;
}

Matrix ChowMatrix::at(const std::vector<std::uint32_t>& p) const {
    if (p.size() != coefficients.size()) throw std::invalid_argument("ChowMatrix::at: wrong number of Plucker coordinates");
    Matrix out(field, size, size);
    for (std::size_t w = 0; w < p.size(); ++w) {
        if (p[w] == 0) continue;
        const Matrix& c = coefficients[w];
        for (std::size_t a = 0; a < size; ++a)
            for (std::size_t b = 0; b < size; ++b)
                if (c(a, b) != 0) out(a, b) = field.add(out(a, b), field.mul(p[w], c(a, b)));
    }
    return out;
}

nlohmann::json ChowMatrix::to_json() const {
    const WedgeBasis basis(r + 1, k + 1);
    nlohmann::json coeffs = nlohmann::json::array();
    for (std::size_t w = 0; w < coefficients.size(); ++w) {
        std::vector<std::vector<std::uint32_t>> rows;
        for (std::size_t a = 0; a < size; ++a) rows.emplace_back(coefficients[w].row(a).begin(), coefficients[w].row(a).end());
        coeffs.push_back({{"plucker", basis.elements(w)}, {"matrix", rows}});
    }
    return {{"p", field.modulus()}, {"k", k}, {"r", r}, {"size", size}, {"skew", skew}, {"coefficients", coeffs}};
}

std::string ChowMatrix::listing() const {
    const WedgeBasis basis(r + 1, k + 1);
    std::ostringstream os;
    for (std::size_t a = 0; a < size; ++a) {
        for (std::size_t b = 0; b < size; ++b) {
            os << '(' << a << ',' << b << "): ";
            bool first = true;
            for (std::size_t w = 0; w < coefficients.size(); ++w) {
                const std::int64_t c = field.to_signed(coefficients[w](a, b));
                if (c == 0) continue;
                os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
                const std::int64_t mag = c < 0 ? -c : c;
                if (mag != 1) os << mag << '*';
                os << 'p';
                for (const auto e : basis.elements(w)) os << e;
                first = false;
            }
            if (first) os << '0';
            os << '\n';
        }
    }
    return os.str();
}

Matrix tate_constraints(const UlrichModuleData& m) {
    const std::size_t n = m.r + 1;
    const WedgeBasis top(n, m.k + 2);
    const WedgeBasis mid(n, m.k + 1);
    const WedgeBasis one(n, 1);
    const auto split = comultiply(n, 1, m.k + 1);
    const PrimeField& f = m.field;
    Matrix out(f, top.size() * m.h0_twist, mid.size() * m.h0);
    for (std::size_t u = 0; u < top.size(); ++u) {
        for (const auto& term : split[u]) {
            const std::size_t v = one.elements(term.left).front();
            const Matrix& mult = m.mult[v];
            for (std::size_t a = 0; a < m.h0; ++a) {
                const std::size_t col = term.right * m.h0 + a;
                for (std::size_t c = 0; c < m.h0_twist; ++c) {
                    const std::uint32_t x = mult(a, c);
                    if (x == 0) continue;
                    std::uint32_t& slot = out(u * m.h0_twist + c, col);
                    slot = term.sign > 0 ? f.add(slot, x) : f.sub(slot, x);
                }
            }
        }
    }
    return out;
}

namespace {

// g with C_w g skew for every w, from a random element of the solution space.
std::optional<Matrix> skew_change_of_basis(const std::vector<Matrix>& coeffs, std::size_t n, std::uint64_t seed) {
    const PrimeField& f = coeffs.front().field();
    // Unknown g(b, c) at b * n + c; equations (C_w g)(a,c) + (C_w g)(c,a) = 0 for a <= c.
    std::vector<std::vector<std::uint32_t>> eqs;
    for (const auto& C : coeffs) {
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t c = a; c < n; ++c) {
                std::vector<std::uint32_t> row(n * n, 0);
                for (std::size_t b = 0; b < n; ++b) {
                    row[b * n + c] = f.add(row[b * n + c], C(a, b));
                    row[b * n + a] = f.add(row[b * n + a], C(c, b));
                }
                eqs.push_back(std::move(row));
            }
        }
    }
    const auto sols = nullspace(Matrix::from_rows(f, eqs, n * n));
    if (sols.empty()) return std::nullopt;
    Rng rng(derive_seed(seed, "skew-basis"));
    for (int attempt = 0; attempt < 20; ++attempt) {
        Matrix g(f, n, n);
        for (const auto& s : sols) {
            const auto c = static_cast<std::uint32_t>(rng.below(f.modulus()));
            for (std::size_t i = 0; i < n * n; ++i) g(i / n, i % n) = f.add(g(i / n, i % n), f.mul(c, s[i]));
        }
        if (!determinant(g).is_zero()) return g;
    }
    return std::nullopt;
}

} // namespace

ChowMatrix tate_phi(const UlrichModuleData& m, std::uint64_t seed) {
    if (m.mult.size() != m.r + 1) throw std::invalid_argument("tate_phi: one multiplication matrix per coordinate required");
    const auto sol = nullspace(tate_constraints(m));
    const std::size_t expected = m.d * m.rank;
    if (sol.size() != expected || m.h0 != expected) {
        throw TateDimensionError("tate_phi: dim Sol = " + std::to_string(sol.size()) + ", h^0(E) = " +
                                 std::to_string(m.h0) + ", expected d*rank = " + std::to_string(expected));
    }
    ChowMatrix cm;
    cm.field = m.field;
    cm.k = m.k;
    cm.r = m.r;
    cm.size = expected;
    const std::size_t planes = binomial(static_cast<std::int64_t>(m.r + 1), static_cast<std::int64_t>(m.k + 1));
    for (std::size_t w = 0; w < planes; ++w) {
        Matrix c(m.field, cm.size, cm.size);
        for (std::size_t a = 0; a < m.h0; ++a)
            for (std::size_t b = 0; b < cm.size; ++b) c(a, b) = sol[b][w * m.h0 + a];
        cm.coefficients.push_back(std::move(c));
    }
    if (m.k == 2 && m.rank == 2) {
        const auto g = skew_change_of_basis(cm.coefficients, cm.size, seed);
        if (!g) throw TateDimensionError("tate_phi: no basis of Sol makes the matrix skew-symmetric");
        for (auto& c : cm.coefficients) {
            c = c * *g;
            if (!c.is_skew_symmetric()) throw std::logic_error("tate_phi: symmetrized coefficient is not skew");
        }
        cm.skew = true;
    }
    return cm;
}

bool tate_composite_is_zero(const UlrichModuleData& m, const ChowMatrix& cm) {
    const Matrix constraints = tate_constraints(m);
    for (std::size_t b = 0; b < cm.size; ++b) {
        std::vector<std::uint32_t> beta(constraints.cols(), 0);
        for (std::size_t w = 0; w < cm.coefficients.size(); ++w)
            for (std::size_t a = 0; a < m.h0; ++a) beta[w * m.h0 + a] = cm.coefficients[w](a, b);
        for (const auto x : mat_vec(constraints, beta))
            if (x != 0) return false;
    }
    return true;
}

FieldElement chow_evaluate(const ChowMatrix& cm, const PlanePoint& plane) {
    if (plane.r() != cm.r || plane.forms().size() != cm.k + 1) {
        throw std::invalid_argument("chow_evaluate: plane has the wrong dimension");
    }
    const Matrix mat = cm.at(plucker(plane));
    return cm.skew ? pfaffian(mat) : determinant(mat);
}

std::size_t target_dimension(const ChowTarget& x) { return std::holds_alternative<ParametricCurve>(x) ? 1 : 2; }

std::size_t target_ambient(const ChowTarget& x) {
    if (const auto* c = std::get_if<ParametricCurve>(&x)) return c->r();
    return 3;
}

std::uint32_t binary_resultant(const PrimeField& f, const std::vector<std::uint32_t>& a,
                               const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size() || a.size() < 2) throw std::invalid_argument("binary_resultant: forms of equal positive degree required");
    const std::size_t d = a.size() - 1;
    Matrix syl(f, 2 * d, 2 * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j <= d; ++j) {
            syl(i, i + j) = a[j];
            syl(d + i, i + j) = b[j];
        }
    return determinant(syl).value;
}

namespace {

std::vector<std::uint32_t> pullback(const ParametricCurve& c, const std::vector<std::uint32_t>& form) {
    const PrimeField& f = c.field();
    std::vector<std::uint32_t> out(c.d() + 1, 0);
    for (std::size_t i = 0; i <= c.r(); ++i)
        for (std::size_t a = 0; a <= c.d(); ++a) out[a] = f.add(out[a], f.mul(form[i], c.forms()[i][a]));
    return out;
}

std::uint32_t quadric_value(const PrimeField& f, const std::vector<std::uint32_t>& x) {
    return f.sub(f.mul(x[0], x[3]), f.mul(x[1], x[2]));
}

void check_plane(const ChowTarget& x, const PlanePoint& plane) {
    if (plane.r() != target_ambient(x) || plane.forms().size() != target_dimension(x) + 1) {
        throw std::invalid_argument("plane does not have complementary dimension to the target");
    }
}

} // namespace

bool chow_membership_oracle(const ChowTarget& x, const PlanePoint& plane) {
    check_plane(x, plane);
    const PrimeField& f = plane.field();
    if (const auto* c = std::get_if<ParametricCurve>(&x)) {
        return binary_resultant(f, pullback(*c, plane.forms()[0]), pullback(*c, plane.forms()[1])) == 0;
    }
    const auto pts = nullspace(Matrix::from_rows(f, plane.forms(), 4));
    return quadric_value(f, pts.front()) == 0;
}

std::uint32_t chow_reference_value(const ChowTarget& x, const PlanePoint& plane) {
    check_plane(x, plane);
    const PrimeField& f = plane.field();
    if (const auto* c = std::get_if<ParametricCurve>(&x)) {
        return binary_resultant(f, pullback(*c, plane.forms()[0]), pullback(*c, plane.forms()[1]));
    }
    // Point dual to the three forms: x_i = (-1)^i * minor omitting column i.
    const auto p = plucker(plane);
    const WedgeBasis basis(4, 3);
    std::vector<std::uint32_t> pt(4);
    for (std::size_t i = 0; i < 4; ++i) {
        const std::uint32_t v = p[basis.index_of(0xFU & ~(1U << i))];
        pt[i] = i % 2 == 0 ? v : f.neg(v);
    }
    return quadric_value(f, pt);
}

std::vector<std::uint32_t> random_target_point(const ChowTarget& x, const PrimeField& f, Rng& rng) {
    if (const auto* c = std::get_if<ParametricCurve>(&x)) {
        for (;;) {
            auto pt = c->point(1, static_cast<std::uint32_t>(rng.below(f.modulus())));
            for (const auto v : pt)
                if (v != 0) return pt;
        }
    }
    const auto s0 = static_cast<std::uint32_t>(rng.below(f.modulus()));
    const auto t0 = static_cast<std::uint32_t>(rng.below(f.modulus()));
    return {f.mul(s0, t0), s0, t0, 1};
}

PlanePoint random_plane(const PrimeField& f, std::size_t r, std::size_t count, Rng& rng) {
    for (;;) {
        std::vector<std::vector<std::uint32_t>> forms(count, std::vector<std::uint32_t>(r + 1));
        for (auto& form : forms)
            for (auto& v : form) v = static_cast<std::uint32_t>(rng.below(f.modulus()));
        if (rank(Matrix::from_rows(f, forms, r + 1)) == count) return PlanePoint(f, r, std::move(forms));
    }
}

PlanePoint random_plane_through(const PrimeField& f, const std::vector<std::uint32_t>& point, std::size_t count,
                                Rng& rng) {
    const std::size_t n = point.size();
    std::size_t pivot = 0;
    while (pivot < n && point[pivot] == 0) ++pivot;
    if (pivot == n) throw std::invalid_argument("random_plane_through: zero point");
    const std::uint32_t inv = f.inv(point[pivot]);
    for (;;) {
        std::vector<std::vector<std::uint32_t>> forms(count, std::vector<std::uint32_t>(n));
        for (auto& form : forms) {
            std::uint32_t acc = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == pivot) continue;
                form[j] = static_cast<std::uint32_t>(rng.below(f.modulus()));
                acc = f.add(acc, f.mul(form[j], point[j]));
            }
            form[pivot] = f.neg(f.mul(acc, inv));
        }
        if (rank(Matrix::from_rows(f, forms, n)) == count) return PlanePoint(f, n - 1, std::move(forms));
    }
}

nlohmann::json ChowReport::to_json() const {
    nlohmann::json j = {{"samples", samples},
                        {"vanishing", vanishing},
                        {"agreements", agreements},
                        {"disagreements", disagreements},
                        {"ratio_constant", ratio_constant},
                        {"ok", ok()}};
    j["ratio"] = ratio ? nlohmann::json(*ratio) : nlohmann::json(nullptr);
    return j;
}

ChowReport chow_compare(const ChowMatrix& cm, const ChowTarget& x, std::size_t samples, std::uint64_t seed) {
    const PrimeField& f = cm.field;
    const std::size_t count = target_dimension(x) + 1;
    if (cm.k + 1 != count || cm.r != target_ambient(x)) throw std::invalid_argument("chow_compare: matrix does not match the target");
    ChowReport rep;
    rep.samples = samples;
    for (std::size_t s = 0; s < samples; ++s) {
        Rng rng(derive_seed(seed, "chow-plane", s));
        const PlanePoint plane = s % 2 == 0 ? random_plane(f, cm.r, count, rng)
                                            : random_plane_through(f, random_target_point(x, f, rng), count, rng);
        const FieldElement value = chow_evaluate(cm, plane);
        const bool meets = chow_membership_oracle(x, plane);
        if (value.is_zero()) ++rep.vanishing;
        if (value.is_zero() == meets) {
            ++rep.agreements;
        } else {
            nlohmann::json bad = plane.to_json();
            bad["value"] = value.value;
            bad["oracle_meets"] = meets;
            rep.disagreements.push_back(std::move(bad));
        }
        if (value.is_zero()) continue;
        const std::uint32_t ref = chow_reference_value(x, plane);
        if (ref == 0) {
            rep.ratio_constant = false;
            continue;
        }
        const std::uint32_t ratio = f.mul(value.value, f.inv(ref));
        if (!rep.ratio) {
            rep.ratio = ratio;
        } else if (*rep.ratio != ratio) {
            rep.ratio_constant = false;
        }
    }
    return rep;
}

} // namespace bettilab
