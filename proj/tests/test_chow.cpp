#include "doctest.h"

#include "bettilab/chow.hpp"
#include "bettilab/exterior.hpp"

using namespace bettilab;

namespace {

PlanePoint coordinate_plane(const PrimeField& f, std::size_t r, std::initializer_list<std::size_t> vars) {
    std::vector<std::vector<std::uint32_t>> forms;
    for (const auto v : vars) {
        std::vector<std::uint32_t> form(r + 1, 0);
        form[v] = 1;
        forms.push_back(form);
    }
    return PlanePoint(f, r, forms);
}

} // namespace

TEST_CASE("plane validation and Plucker coordinates") {
    const PrimeField f(1009);
    CHECK_THROWS_AS(PlanePoint(f, 3, {{1, 0, 0, 0}, {2, 0, 0, 0}}), std::invalid_argument);
    const PlanePoint p = coordinate_plane(f, 3, {0, 3});
    const auto w = plucker(p);
    REQUIRE(w.size() == 6);
    // Only p_{03} is nonzero.
    CHECK(w == std::vector<std::uint32_t>{0, 0, 1, 0, 0, 0});
}

TEST_CASE("resultant oracle examples") {
    const PrimeField f(random_prime_31(1));
    const ChowTarget cubic = rational_normal_curve(f, 3);
    CHECK_FALSE(chow_membership_oracle(cubic, coordinate_plane(f, 3, {0, 3})));
    CHECK(chow_membership_oracle(cubic, coordinate_plane(f, 3, {1, 2})));
    const std::int64_t res = f.to_signed(chow_reference_value(cubic, coordinate_plane(f, 3, {0, 3})));
    CHECK((res == 1 || res == -1));
    // Resultant vanishes iff a common root, checked on products of linear factors.
    Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const auto r1 = static_cast<std::uint32_t>(rng.below(f.modulus()));
        const auto r2 = static_cast<std::uint32_t>(rng.below(f.modulus()));
        const auto r3 = static_cast<std::uint32_t>(rng.below(f.modulus()));
        // (t - r1 s)(t - r2 s) and (t - r1 s)(t - r3 s), coefficients of s^2, st, t^2.
        const std::vector<std::uint32_t> a{f.mul(r1, r2), f.neg(f.add(r1, r2)), 1};
        const std::vector<std::uint32_t> b{f.mul(r1, r3), f.neg(f.add(r1, r3)), 1};
        CHECK(binary_resultant(f, a, b) == 0);
        if (r1 != r2 && r1 != r3 && r2 != r3) CHECK(binary_resultant(f, a, {f.mul(r3, r3), f.neg(f.add(r3, r3)), 1}) != 0);
    }
}

TEST_CASE("Sol dimension equals d * rank") {
    const PrimeField f(random_prime_31(2));
    for (std::size_t d = 3; d <= 5; ++d) {
        const UlrichModuleData m = rational_normal_curve_data(f, d);
        const ChowMatrix cm = tate_phi(m);
        CHECK(cm.size == d);
        CHECK(cm.size == m.h(1, -2));
        CHECK(cm.coefficients.size() == binomial(static_cast<std::int64_t>(d + 1), 2));
        CHECK_FALSE(cm.skew);
        CHECK(tate_composite_is_zero(m, cm));
    }
    for (const auto& bd : std::vector<std::vector<std::pair<int, int>>>{{{0, 1}}, {{1, 0}}, {{0, 1}, {1, 0}}}) {
        const UlrichModuleData m = quadric_data(f, bd);
        const ChowMatrix cm = tate_phi(m, 3);
        CHECK(cm.size == 2 * bd.size());
        CHECK(cm.size == m.h(2, -3));
        CHECK(tate_composite_is_zero(m, cm));
    }
}

TEST_CASE("non-Ulrich input fails the dimension assertion") {
    const PrimeField f(random_prime_31(2));
    CHECK_THROWS_AS((void)tate_phi(curve_line_bundle_data(rational_normal_curve(f, 3), 3)), TateDimensionError);
    CHECK_THROWS_AS((void)tate_phi(quadric_data(f, {{1, 1}})), TateDimensionError);
}

TEST_CASE("perturbed matrices break the composite") {
    const PrimeField f(random_prime_31(4));
    const UlrichModuleData m = rational_normal_curve_data(f, 3);
    ChowMatrix cm = tate_phi(m);
    cm.coefficients[0](0, 0) = f.add(cm.coefficients[0](0, 0), 1);
    CHECK_FALSE(tate_composite_is_zero(m, cm));
}

TEST_CASE("curve Chow forms agree with the resultant") {
    const PrimeField f(random_prime_31(5));
    for (std::size_t d = 3; d <= 5; ++d) {
        const ChowMatrix cm = tate_phi(rational_normal_curve_data(f, d));
        const ChowReport rep = chow_compare(cm, rational_normal_curve(f, d), 100, d);
        CHECK(rep.disagreements.empty());
        CHECK(rep.ratio_constant);
        CHECK(rep.ok());
        CHECK(rep.vanishing == 50);
    }
    // A non-normal curve: O_P1(d-1) on a random rational curve of degree 4 in P^3.
    const ParametricCurve c = random_curve(f, 3, 4, 2);
    const UlrichModuleData m = curve_line_bundle_data(c, 3);
    CHECK(ulrich_certify(m).ulrich);
    const ChowMatrix cm = tate_phi(m);
    CHECK(chow_compare(cm, c, 60, 9).ok());
}

TEST_CASE("quadric determinant and pfaffian") {
    const PrimeField f(random_prime_31(6));
    const ChowMatrix single = tate_phi(quadric_data(f, {{0, 1}}));
    CHECK(chow_compare(single, QuadricSurface{}, 50, 2).ok());

    const ChowMatrix cm = tate_phi(quadric_data(f, {{0, 1}, {1, 0}}), 11);
    CHECK(cm.skew);
    CHECK(cm.size == 4);
    for (const auto& c : cm.coefficients) CHECK(c.is_skew_symmetric());
    const ChowReport rep = chow_compare(cm, QuadricSurface{}, 50, 3);
    CHECK(rep.ok());
    CHECK(rep.vanishing == 25);
    Rng rng(8);
    for (int s = 0; s < 20; ++s) {
        const PlanePoint plane = random_plane(f, 3, 3, rng);
        const Matrix mat = cm.at(plucker(plane));
        const FieldElement pf = pfaffian(mat);
        CHECK(f.mul(pf.value, pf.value) == determinant(mat).value);
    }
}

TEST_CASE("evaluation homogeneity") {
    const PrimeField f(random_prime_31(7));
    const std::size_t d = 4;
    const ChowMatrix cm = tate_phi(rational_normal_curve_data(f, d));
    Rng rng(1);
    const PlanePoint plane = random_plane(f, d, 2, rng);
    const std::uint32_t lambda = 12345;
    auto forms = plane.forms();
    for (auto& x : forms[0]) x = f.mul(x, lambda);
    const PlanePoint scaled(f, d, forms);
    CHECK(chow_evaluate(cm, scaled).value == f.mul(chow_evaluate(cm, plane).value, f.pow(lambda, d)));
    CHECK_THROWS_AS((void)chow_evaluate(cm, random_plane(f, d, 3, rng)), std::invalid_argument);
}

TEST_CASE("serialization and listing") {
    const PrimeField f(1009);
    const ChowMatrix cm = tate_phi(rational_normal_curve_data(f, 3));
    const auto j = cm.to_json();
    CHECK(j["size"] == 3);
    CHECK(j["coefficients"].size() == 6);
    const std::string text = cm.listing();
    CHECK(text.find("(0,0): ") == 0);
    CHECK(text.find('p') != std::string::npos);
}
