#include "bettilab/ulrich.hpp"

#include <cmath>
#include <string>

namespace bettilab {

namespace {

std::size_t h0_p1(std::int64_t e) { return e >= 0 ? static_cast<std::size_t>(e + 1) : 0; }
std::size_t h1_p1(std::int64_t e) { return e <= -2 ? static_cast<std::size_t>(-e - 1) : 0; }

std::string twist_name(int q, int t) {
    return "h^" + std::to_string(q) + "(E(" + std::to_string(t) + "))";
}

} // namespace

std::size_t UlrichModuleData::h(int q, int t) const {
    const auto it = cohomology.find({q, t});
    if (it == cohomology.end()) throw MissingCohomology("missing " + twist_name(q, t));
    return it->second;
}

nlohmann::json UlrichModuleData::to_json() const {
    nlohmann::json coh = nlohmann::json::array();
    for (const auto& [key, v] : cohomology) coh.push_back({{"q", key.first}, {"t", key.second}, {"dim", v}});
    nlohmann::json mats = nlohmann::json::array();
    for (const auto& m : mult) {
        std::vector<std::vector<std::uint32_t>> rows;
        for (std::size_t i = 0; i < m.rows(); ++i) rows.emplace_back(m.row(i).begin(), m.row(i).end());
        mats.push_back(rows);
    }
    return {{"label", label}, {"p", field.modulus()}, {"k", k},       {"r", r},           {"d", d},
            {"rank", rank},   {"h0", h0},             {"h0_twist", h0_twist}, {"mult", mats}, {"cohomology", coh}};
}

UlrichModuleData curve_line_bundle_data(const ParametricCurve& c, int e) {
    if (e < 0) throw std::invalid_argument("curve_line_bundle_data: needs e >= 0 so that H^0(E) is nonzero");
    UlrichModuleData m;
    m.field = c.field();
    const auto d = static_cast<std::int64_t>(c.d());
    m.label = "O_P1(" + std::to_string(e) + ") on a degree-" + std::to_string(d) + " curve";
    m.k = 1;
    m.r = c.r();
    m.d = c.d();
    m.rank = 1;
    m.h0 = static_cast<std::size_t>(e) + 1;
    m.h0_twist = static_cast<std::size_t>(e + d) + 1;
    for (const auto& form : c.forms()) {
        Matrix mat(c.field(), m.h0, m.h0_twist);
        for (std::size_t a = 0; a < m.h0; ++a)
            for (std::size_t b = 0; b < form.size(); ++b) mat(a, a + b) = form[b];
        m.mult.push_back(std::move(mat));
    }
    for (int t = -2; t <= 1; ++t) {
        const std::int64_t deg = e + d * t;
        m.cohomology[{0, t}] = h0_p1(deg);
        m.cohomology[{1, t}] = h1_p1(deg);
    }
    m.bundle_degree = e;
    m.genus = 0;
    return m;
}

UlrichModuleData rational_normal_curve_data(PrimeField field, std::size_t d) {
    return curve_line_bundle_data(rational_normal_curve(field, d), static_cast<int>(d) - 1);
}

UlrichModuleData quadric_data(PrimeField field, const std::vector<std::pair<int, int>>& bidegrees) {
    if (bidegrees.empty()) throw std::invalid_argument("quadric_data: no summands");
    UlrichModuleData m;
    m.field = field;
    m.label = "sum of O(a,b) on the quadric surface";
    m.k = 2;
    m.r = 3;
    m.d = 2;
    m.rank = bidegrees.size();
    for (const auto& [a, b] : bidegrees) {
        if (a < 0 || b < 0) throw std::invalid_argument("quadric_data: bidegrees must be nonnegative");
        m.h0 += static_cast<std::size_t>((a + 1) * (b + 1));
        m.h0_twist += static_cast<std::size_t>((a + 2) * (b + 2));
    }
    // x_{2 alpha + beta} = s_alpha t_beta; basis s0^(a-i) s1^i t0^(b-j) t1^j at i (b+1) + j.
    for (std::size_t v = 0; v < 4; ++v) {
        const std::size_t alpha = v / 2;
        const std::size_t beta = v % 2;
        Matrix mat(field, m.h0, m.h0_twist);
        std::size_t row_off = 0;
        std::size_t col_off = 0;
        for (const auto& [a, b] : bidegrees) {
            const auto ua = static_cast<std::size_t>(a);
            const auto ub = static_cast<std::size_t>(b);
            for (std::size_t i = 0; i <= ua; ++i)
                for (std::size_t j = 0; j <= ub; ++j) mat(row_off + i * (ub + 1) + j, col_off + (i + alpha) * (ub + 2) + j + beta) = 1;
            row_off += (ua + 1) * (ub + 1);
            col_off += (ua + 2) * (ub + 2);
        }
        m.mult.push_back(std::move(mat));
    }
    for (int t = -3; t <= 1; ++t) {
        for (int q = 0; q <= 2; ++q) {
            std::size_t total = 0;
            for (const auto& [a, b] : bidegrees) {
                const std::int64_t x = a + t;
                const std::int64_t y = b + t;
                const std::size_t hx[2] = {h0_p1(x), h1_p1(x)};
                const std::size_t hy[2] = {h0_p1(y), h1_p1(y)};
                for (int q1 = 0; q1 <= 1; ++q1)
                    if (q - q1 >= 0 && q - q1 <= 1) total += hx[q1] * hy[q - q1];
            }
            m.cohomology[{q, t}] = total;
        }
    }
    return m;
}

nlohmann::json UlrichReport::to_json() const {
    nlohmann::json conds = nlohmann::json::array();
    for (const auto& c : conditions) conds.push_back({{"name", c.name}, {"value", c.value}, {"ok", c.ok}});
    nlohmann::json j = {{"ulrich", ulrich}, {"conditions", conds}};
    if (slope_criterion) j["slope_criterion"] = *slope_criterion;
    return j;
}

UlrichReport ulrich_certify(const UlrichModuleData& m) {
    UlrichReport rep;
    const auto k = static_cast<int>(m.k);
    for (int i = 1; i <= k; ++i) {
        const std::size_t v = m.h(i, -i);
        rep.conditions.push_back({twist_name(i, -i), v, v == 0});
    }
    for (int i = 0; i < k; ++i) {
        const std::size_t v = m.h(i, -i - 1);
        rep.conditions.push_back({twist_name(i, -i - 1), v, v == 0});
    }
    rep.ulrich = true;
    for (const auto& c : rep.conditions) rep.ulrich = rep.ulrich && c.ok;
    if (m.k == 1 && m.bundle_degree) {
        const auto slope_target = static_cast<std::int64_t>(m.rank) * (static_cast<std::int64_t>(m.d) + m.genus - 1);
        rep.slope_criterion = *m.bundle_degree == slope_target && m.h(0, -1) == 0;
    }
    return rep;
}

std::int64_t euler_pairing(std::int64_t a, std::int64_t b, std::int64_t s) { return -2 * a * b * s - 8 * a * b; }

nlohmann::json UlrichNumerics::to_json() const {
    return {{"a", a}, {"s", s}, {"rank", rank}, {"det_twist", det_twist}, {"c2", c2}, {"balance_ok", balance_ok}};
}

UlrichNumerics ulrich_numerics(std::int64_t a, std::int64_t s) {
    if (a < 1 || s < 1) throw std::invalid_argument("ulrich_numerics: needs a >= 1 and s >= 1");
    UlrichNumerics n;
    n.a = a;
    n.s = s;
    n.rank = 2 * a;
    n.det_twist = 3 * a;
    n.c2 = 9 * a * a * s - 4 * a * (s - 1);
    // H.(c1 - (rank/2)(K + 3H)) with K = 0, H^2 = 2s.
    n.balance_ok = 2 * s * (n.det_twist - (n.rank / 2) * 3) == 0;
    return n;
}

UlrichNumerics ulrich_numerics_for_rank(std::int64_t rank, std::int64_t s) {
    if (rank % 2 != 0) {
        throw OddRankObstruction("no Ulrich bundle of odd rank " + std::to_string(rank) +
                                 " on a K3 surface of Picard number one: c1 = (3 rank / 2) H must be integral");
    }
    return ulrich_numerics(rank / 2, s);
}

std::int64_t gamma_n(std::int64_t n, std::int64_t s) { return 2 * n * n * s + 6 * s * n + 5 * s + 4; }

std::int64_t u_n(std::int64_t n, std::int64_t s) {
    const std::int64_t q = (gamma_n(n, s) - 2) / s;
    auto root = static_cast<std::int64_t>(std::sqrt(static_cast<double>(q)));
    while (root * root > q) --root;
    while ((root + 1) * (root + 1) <= q) ++root;
    return root + 1;
}

std::vector<std::string> validate_k3_rank2(const UlrichModuleData& m, std::size_t s) {
    std::vector<std::string> problems;
    if (m.k != 2) problems.push_back("k must be 2");
    if (m.r != s + 1) problems.push_back("ambient dimension must be s+1");
    if (m.d != 2 * s) problems.push_back("degree must be 2s");
    if (m.rank != 2) problems.push_back("rank must be 2");
    if (m.h0 != 4 * s) problems.push_back("h^0(E) must be 4s");
    if (m.mult.size() != m.r + 1) problems.push_back("one multiplication matrix per coordinate required");
    for (const auto& mat : m.mult)
        if (mat.rows() != m.h0 || mat.cols() != m.h0_twist) problems.push_back("multiplication matrix has wrong shape");
    try {
        if (!ulrich_certify(m).ulrich) problems.push_back("Ulrich vanishings fail");
    } catch (const MissingCohomology& e) {
        problems.emplace_back(e.what());
    }
    return problems;
}

} // namespace bettilab
