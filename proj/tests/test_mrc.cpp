#include "doctest.h"

#include <algorithm>

#include "bettilab/curve.hpp"
#include "bettilab/mrc.hpp"

using namespace bettilab;

namespace {

// Rows u-1, u for points on a rational curve with splitting type a:
// wedge^i M_V (x) L^u(-Gamma) = sum over i-subsets S of O(du - gamma - a_S) on P^1.
std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>> p1_rows(const SplittingType& t, std::int64_t d,
                                                                        std::int64_t gamma, std::int64_t u) {
    const auto r = t.a.size();
    std::vector<std::int64_t> upper(r + 1, 0), lower(r + 1, 0);
    for (std::uint32_t mask = 0; mask < (1U << r); ++mask) {
        std::int64_t deg = d * u - gamma;
        for (std::size_t k = 0; k < r; ++k)
            if (mask & (1U << k)) deg -= t.a[k];
        const auto i = static_cast<std::size_t>(__builtin_popcount(mask));
        if (deg >= 0) upper[i] += deg + 1;
        if (deg <= -2) lower[i] += -deg - 1;
    }
    return {upper, lower};
}

} // namespace

TEST_CASE("u values and the Hilbert polynomial sandwich") {
    CHECK(u_value(20, 0, 3) == 7);
    CHECK(u_value(12, 2, 4) == 4);
    CHECK(u_value(28, 0, 7) == 4);
    for (std::int64_t g = 0; g <= 4; ++g)
        for (std::int64_t d = 1; d <= 9; ++d)
            for (std::int64_t gamma = 0; gamma <= 60; ++gamma) {
                const std::int64_t u = u_value(gamma, g, d);
                CHECK(d * (u - 1) + 1 - g <= gamma);
                CHECK(gamma < d * u + 1 - g);
                CHECK(predict(g, std::max<std::int64_t>(1, d / 2), d, gamma).sandwich_ok);
            }
}

TEST_CASE("delta examples") {
    std::vector<std::int64_t> got;
    for (std::int64_t i = 0; i <= 3; ++i) got.push_back(delta(i, 0, 3, 3, 20, 7));
    CHECK(got == std::vector<std::int64_t>{2, 3, 0, -1});
    got.clear();
    for (std::int64_t i = 0; i <= 2; ++i) got.push_back(delta(i, 2, 2, 4, 12, 4));
    CHECK(got == std::vector<std::int64_t>{3, 2, -1});
    for (std::int64_t gamma = 5; gamma < 40; ++gamma) CHECK(delta(0, 1, 3, 5, gamma, 6) == 5 * 6 - gamma + 1 - 1);
    CHECK_THROWS_AS((void)delta(4, 0, 3, 3, 20, 7), std::invalid_argument);
}

TEST_CASE("delta agrees with the rational slope formula when r divides id") {
    for (std::int64_t r = 1; r <= 5; ++r)
        for (std::int64_t m = 1; m <= 3; ++m)
            for (std::int64_t i = 0; i <= r; ++i) {
                const std::int64_t d = m * r;
                const auto bin = static_cast<std::int64_t>(binomial(r, i));
                CHECK(delta(i, 1, r, d, 30, 5) == bin * (-i * m + d * 5 - 30 + 1 - 1));
            }
}

TEST_CASE("igc generator count") {
    CHECK(igc_generator_count(0, 3, 3, 20) == 0);
    CHECK(igc_generator_count(0, 3, 7, 28) == 4);
    for (std::int64_t gamma = 10; gamma < 40; ++gamma) {
        const MrcPrediction p = predict(0, 3, 7, gamma);
        CHECK(p.igc_generators == p.lower[1]);
    }
}

TEST_CASE("prediction is product-zero") {
    for (std::int64_t g = 0; g <= 3; ++g)
        for (std::int64_t r = 1; r <= 5; ++r)
            for (std::int64_t d = r; d <= r + 6; ++d)
                for (std::int64_t gamma = 1; gamma <= 40; ++gamma) {
                    const MrcPrediction p = predict(g, r, d, gamma);
                    for (std::size_t i = 0; i < p.delta.size(); ++i) {
                        CHECK(p.upper[i] * p.lower[i] == 0);
                        CHECK(p.upper[i] - p.lower[i] == p.delta[i]);
                    }
                }
}

TEST_CASE("precondition flag") {
    CHECK(predict(0, 3, 3, 7, 2).precondition_ok);
    CHECK_FALSE(predict(0, 3, 3, 6, 2).precondition_ok);
    CHECK(predict(0, 3, 3, 6).precondition_ok);
}

TEST_CASE("twisted cubic with 20 points") {
    const PrimeField f(random_prime_31(1));
    const ParametricCurve c = rational_normal_curve(f, 3);
    const BettiTable ct = curve_table(c);
    const BettiTable t = betti_table(sample_points(c, 20, 3));
    const MrcPrediction p = predict(0, 3, 3, 20, regularity(ct) + 1);
    CHECK(p.u == 7);
    const Verdict v = verdict(t, p, &ct);
    CHECK(v.mrc_pass);
    CHECK(v.igc_pass);
    CHECK(v.low_rows_match);
    CHECK(v.high_rows_zero);
    CHECK(v.failing.empty());
}

TEST_CASE("injected diagonal failure") {
    const PrimeField f(random_prime_31(1));
    const ParametricCurve c = rational_normal_curve(f, 3);
    BettiTable t = betti_table(sample_points(c, 20, 3));
    const MrcPrediction p = predict(0, 3, 3, 20);
    t.set(2, 6, 1);
    t.set(1, 7, 1);
    const Verdict v = verdict(t, p);
    CHECK_FALSE(v.igc_pass);
    CHECK_FALSE(v.mrc_pass);
    REQUIRE(v.failing.size() == 1);
    CHECK(v.failing[0].i == 1);
    CHECK(v.failing[0].upper == 1);
    CHECK(v.failing[0].lower == 1);
    CHECK_FALSE(v.differences_match);
    CHECK(v.to_json()["failing_diagonals"].size() == 1);
}

TEST_CASE("incomplete table is rejected") {
    BettiTable t(4, 3);
    CHECK_THROWS_AS((void)verdict(t, predict(0, 3, 3, 20)), IncompleteTable);
}

TEST_CASE("computed tables on rational curves satisfy the diagonal identity and the P^1 oracle") {
    // difference = Delta_i holds for every sample; entries match the
    // splitting-type line bundle count, balanced or not.
    const PrimeField f(random_prime_31(21));
    std::vector<ParametricCurve> curves{random_curve(f, 3, 5, 1), random_curve(f, 4, 6, 2), random_curve(f, 3, 7, 3),
                                        monomial_curve(f, 5, {0, 1, 4, 5}), monomial_curve(f, 4, {0, 1, 3, 4})};
    for (const auto& c : curves) {
        const BettiTable ct = curve_table(c);
        const int ireg = regularity(ct) + 1;
        const SplittingType type = splitting_type(c);
        const auto d = static_cast<std::int64_t>(c.d());
        for (std::int64_t gamma = d * ireg + 1; gamma <= d * ireg + d + 1; ++gamma) {
            const BettiTable t = betti_table(sample_points(c, static_cast<std::size_t>(gamma), static_cast<std::uint64_t>(gamma)));
            const MrcPrediction p = predict(0, static_cast<std::int64_t>(c.r()), d, gamma, ireg);
            INFO("d=" << d << " r=" << c.r() << " gamma=" << gamma << " rows=" << t.rows());
            const Verdict v = verdict(t, p, &ct);
            CHECK(v.differences_match);
            CHECK(v.low_rows_match);
            CHECK(v.high_rows_zero);
            const auto [upper, lower] = p1_rows(type, d, gamma, p.u);
            for (std::size_t i = 0; i <= c.r(); ++i) {
                CHECK(static_cast<std::int64_t>(v.diagonals[i].upper) == upper[i]);
                CHECK(static_cast<std::int64_t>(v.diagonals[i].lower) == lower[i]);
            }
            if (!v.mrc_pass) CHECK_FALSE(v.failing.empty());
            if (v.mrc_pass) CHECK(v.igc_pass);
        }
    }
}

TEST_CASE("unbalanced quintic fails on some diagonal") {
    const PrimeField f(random_prime_31(22));
    const ParametricCurve c = monomial_curve(f, 5, {0, 1, 4, 5});
    const BettiTable ct = curve_table(c);
    const BettiTable t = betti_table(sample_points(c, 23, 1));
    const Verdict v = verdict(t, predict(0, 3, 5, 23, regularity(ct) + 1), &ct);
    CHECK_FALSE(v.mrc_pass);
    REQUIRE(v.failing.size() == 1);
    CHECK(v.failing[0].i == 2);
}

TEST_CASE("json") {
    const nlohmann::json j = predict(0, 3, 3, 20).to_json();
    CHECK(j["u"] == 7);
    CHECK(j["delta"] == nlohmann::json::array({2, 3, 0, -1}));
    CHECK(j["igc_generators"] == 0);
}
