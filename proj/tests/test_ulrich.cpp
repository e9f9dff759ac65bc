#include "doctest.h"

#include "bettilab/ulrich.hpp"

using namespace bettilab;

TEST_CASE("rational normal curve bundles") {
    const PrimeField f(1009);
    for (std::size_t d = 2; d <= 6; ++d) {
        const UlrichModuleData m = rational_normal_curve_data(f, d);
        CHECK(m.h0 == d);
        CHECK(m.h(0, -1) == 0);
        CHECK(m.h(1, -2) == d);  // h^1(O(-d-1)) = d
        const UlrichReport rep = ulrich_certify(m);
        CHECK(rep.ulrich);
        REQUIRE(rep.slope_criterion.has_value());
        CHECK(*rep.slope_criterion);
        const UlrichReport bad = ulrich_certify(curve_line_bundle_data(rational_normal_curve(f, d), static_cast<int>(d)));
        CHECK_FALSE(bad.ulrich);
        CHECK(bad.conditions.back().value == 1);  // h^0(E(-1)) = h^0(O)
        CHECK_FALSE(*bad.slope_criterion);
    }
}

TEST_CASE("multiplication maps on curves are polynomial products") {
    const PrimeField f(1009);
    const UlrichModuleData m = rational_normal_curve_data(f, 3);
    REQUIRE(m.mult.size() == 4);
    // x_1 = s^2 t sends s^2 (index 0) to s^5 t (index 1).
    CHECK(m.mult[1](0, 1) == 1);
    CHECK(m.mult[1].rows() == 3);
    CHECK(m.mult[1].cols() == 6);
}

TEST_CASE("quadric sheaves via Kunneth") {
    const PrimeField f(1009);
    const UlrichModuleData e01 = quadric_data(f, {{0, 1}});
    CHECK(e01.h0 == 2);
    CHECK(e01.h0_twist == 6);
    CHECK(ulrich_certify(e01).ulrich);
    CHECK_FALSE(ulrich_certify(e01).slope_criterion.has_value());
    const UlrichModuleData sum = quadric_data(f, {{0, 1}, {1, 0}});
    CHECK(sum.h0 == 4);
    CHECK(sum.rank == 2);
    CHECK(ulrich_certify(sum).ulrich);
    // O(1,1) = O_X(1) is not Ulrich: h^0(E(-1)) = 1.
    CHECK_FALSE(ulrich_certify(quadric_data(f, {{1, 1}})).ulrich);
    // O(2,0): h^1(E(-1)) = h^1(O(1,-1)) = 0 but h^1(E(-2)) = h^0(O(0)) h^1(O(-2)) = 1.
    CHECK_FALSE(ulrich_certify(quadric_data(f, {{2, 0}})).ulrich);
    // Euler characteristic identity chi(O(a,b)) = (a+1)(b+1).
    for (int t = -3; t <= 1; ++t) {
        const auto chi = static_cast<std::int64_t>(e01.h(0, t)) - static_cast<std::int64_t>(e01.h(1, t)) +
                         static_cast<std::int64_t>(e01.h(2, t));
        CHECK(chi == (t + 1) * (t + 2));
    }
}

TEST_CASE("missing cohomology is an error") {
    UlrichModuleData m = rational_normal_curve_data(PrimeField(101), 3);
    m.cohomology.erase({1, -1});
    CHECK_THROWS_AS((void)ulrich_certify(m), MissingCohomology);
}

TEST_CASE("numerical identities") {
    CHECK(euler_pairing(1, 1, 2) == -12);
    CHECK(euler_pairing(1, 2, 3) == -28);
    for (std::int64_t a = 1; a <= 4; ++a)
        for (std::int64_t b = 1; b <= 4; ++b) CHECK(euler_pairing(a, b, 5) == euler_pairing(b, a, 5));
    const UlrichNumerics n = ulrich_numerics(1, 2);
    CHECK(n.rank == 2);
    CHECK(n.det_twist == 3);
    CHECK(n.c2 == 14);
    CHECK(n.balance_ok);
    CHECK(ulrich_numerics(2, 1).c2 == 36);
    // Rank 2: c2 = 5/2 H^2 + 4 with H^2 = 2s.
    for (std::int64_t s = 1; s <= 10; ++s) CHECK(2 * ulrich_numerics(1, s).c2 == 5 * 2 * s + 8);
    CHECK(gamma_n(1, 2) == 30);
    CHECK_THROWS_AS((void)ulrich_numerics_for_rank(3, 2), OddRankObstruction);
    CHECK(ulrich_numerics_for_rank(4, 2).a == 2);
    for (std::int64_t s = 1; s <= 6; ++s)
        for (std::int64_t k = 1; k <= 20; ++k) {
            const std::int64_t u = u_n(k, s);
            CHECK((u - 1) * (u - 1) * s + 2 <= gamma_n(k, s));
            CHECK(gamma_n(k, s) < u * u * s + 2);
        }
}

TEST_CASE("synthetic K3 rank-2 validation") {
    const PrimeField f(101);
    UlrichModuleData m;
    m.field = f;
    m.k = 2;
    m.r = 4;
    m.d = 6;
    m.rank = 2;
    m.h0 = 12;
    m.h0_twist = 30;
    for (int v = 0; v < 5; ++v) m.mult.emplace_back(f, 12, 30);
    for (int t = -3; t <= 1; ++t)
        for (int q = 0; q <= 2; ++q) m.cohomology[{q, t}] = 0;
    CHECK(validate_k3_rank2(m, 3).empty());
    m.h0 = 11;
    CHECK_FALSE(validate_k3_rank2(m, 3).empty());
    m.h0 = 12;
    m.cohomology.erase({2, -2});
    CHECK_FALSE(validate_k3_rank2(m, 3).empty());
}
