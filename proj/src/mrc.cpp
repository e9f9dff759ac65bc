#include "bettilab/mrc.hpp"

#include <algorithm>

#include "bettilab/graded_points.hpp"

namespace bettilab {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::int64_t choose(std::int64_t n, std::int64_t k) { return static_cast<std::int64_t>(binomial(n, k)); }

} // namespace

int u_value(std::int64_t gamma, std::int64_t g, std::int64_t d) {
    if (d <= 0) throw std::invalid_argument("u_value: degree must be positive");
    return static_cast<int>(1 + floor_div(gamma + g - 1, d));
}

std::int64_t delta(std::int64_t i, std::int64_t g, std::int64_t r, std::int64_t d, std::int64_t gamma, std::int64_t u) {
    if (i < 0 || i > r) throw std::invalid_argument("delta: needs 0 <= i <= r");
    return -choose(r - 1, i - 1) * d + choose(r, i) * (d * u - gamma + 1 - g);
}

std::int64_t igc_generator_count(std::int64_t g, std::int64_t r, std::int64_t d, std::int64_t gamma) {
    const std::int64_t u = u_value(gamma, g, d);
    return std::max<std::int64_t>(d - r * (d * u - gamma + 1 - g), 0);
}

MrcPrediction predict(std::int64_t g, std::int64_t r, std::int64_t d, std::int64_t gamma, int ideal_regularity) {
    if (r < 1 || d < 1 || g < 0 || gamma < 0) throw std::invalid_argument("predict: needs r, d >= 1 and g, gamma >= 0");
    MrcPrediction p;
    p.g = g;
    p.r = r;
    p.d = d;
    p.gamma = gamma;
    p.u = u_value(gamma, g, d);
    const auto P = [&](std::int64_t t) { return d * t + 1 - g; };
    p.sandwich_ok = P(p.u - 1) <= gamma && gamma < P(p.u);
    for (std::int64_t i = 0; i <= r; ++i) {
        const std::int64_t v = delta(i, g, r, d, gamma, p.u);
        p.delta.push_back(v);
        p.upper.push_back(std::max<std::int64_t>(v, 0));
        p.lower.push_back(std::max<std::int64_t>(-v, 0));
    }
    p.igc_generators = igc_generator_count(g, r, d, gamma);
    p.ideal_regularity = ideal_regularity;
    p.precondition_ok = ideal_regularity < 0 || gamma >= d * ideal_regularity - g + 1;
    return p;
}

nlohmann::json MrcPrediction::to_json() const {
    return {{"g", g},
            {"r", r},
            {"d", d},
            {"gamma", gamma},
            {"u", u},
            {"delta", delta},
            {"row_u_minus_1", upper},
            {"row_u", lower},
            {"igc_generators", igc_generators},
            {"ideal_regularity", ideal_regularity},
            {"sandwich_ok", sandwich_ok},
            {"precondition_ok", precondition_ok}};
}

Verdict verdict(const BettiTable& table, const MrcPrediction& pred, const BettiTable* curve_table) {
    const auto u = static_cast<std::size_t>(pred.u);
    const auto r = static_cast<std::size_t>(pred.r);
    if (pred.u < 1) throw IncompleteTable("verdict: u must be at least 1");
    if (table.rows() <= u || table.columns() < r + 1) {
        throw IncompleteTable("verdict: table must reach row " + std::to_string(u) + " and column " + std::to_string(r));
    }
    Verdict v;
    v.rows_match_prediction = true;
    v.differences_match = true;
    bool products_vanish = true;
    for (std::size_t i = 0; i <= r; ++i) {
        DiagonalEntry e{i, table.at(i + 1, u - 1), table.at(i, u)};
        v.diagonals.push_back(e);
        if (static_cast<std::int64_t>(e.upper) - static_cast<std::int64_t>(e.lower) != pred.delta[i]) v.differences_match = false;
        if (static_cast<std::int64_t>(e.upper) != pred.upper[i] || static_cast<std::int64_t>(e.lower) != pred.lower[i]) {
            v.rows_match_prediction = false;
        }
        if (e.upper != 0 && e.lower != 0) {
            products_vanish = false;
            v.failing.push_back(e);
        }
    }
    v.mrc_pass = products_vanish && v.rows_match_prediction;
    const auto diag_ok = [&](std::size_t i) { return i > r || table.at(i + 1, u - 1) == 0 || table.at(i, u) == 0; };
    v.igc_pass = diag_ok(1) && (r < 1 || diag_ok(r - 1));
    if (curve_table != nullptr) {
        v.low_rows_checked = true;
        for (std::size_t j = 0; j + 2 <= u; ++j)
            for (std::size_t i = 0; i < std::max(table.columns(), curve_table->columns()); ++i)
                if (table.at(i, j) != curve_table->at(i, j)) v.low_rows_match = false;
    }
    for (std::size_t j = u + 1; j < table.rows(); ++j) v.high_rows_zero = v.high_rows_zero && table.row_is_zero(j);
    return v;
}

nlohmann::json Verdict::to_json() const {
    auto entries = [](const std::vector<DiagonalEntry>& es) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& e : es) out.push_back({{"i", e.i}, {"b_i+1,u-1", e.upper}, {"b_i,u", e.lower}});
        return out;
    };
    return {{"mrc_pass", mrc_pass},
            {"igc_pass", igc_pass},
            {"rows_match_prediction", rows_match_prediction},
            {"differences_match", differences_match},
            {"failing_diagonals", entries(failing)},
            {"diagonals", entries(diagonals)},
            {"low_rows_checked", low_rows_checked},
            {"low_rows_match", low_rows_match},
            {"high_rows_zero", high_rows_zero}};
}

} // namespace bettilab
