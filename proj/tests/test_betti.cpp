#include "doctest.h"

#include "bettilab/betti.hpp"
#include "bettilab/graded_points.hpp"

using namespace bettilab;

namespace {

BettiTable from_rows(std::initializer_list<std::initializer_list<std::size_t>> rows) {
    const std::size_t cols = rows.begin()->size();
    BettiTable t(cols, rows.size());
    std::size_t j = 0;
    for (const auto& row : rows) {
        std::size_t i = 0;
        for (const auto v : row) t.set(i++, j, v);
        ++j;
    }
    return t;
}

// sum_{i,j} (-1)^i b_{i,j} dim S_{t-i-j} must equal h(t).
void check_hilbert_identity(const BettiTable& b, const PointSet& pts, unsigned t_max) {
    for (unsigned t = 0; t <= t_max; ++t) {
        std::int64_t total = 0;
        for (std::size_t i = 0; i < b.columns(); ++i)
            for (std::size_t j = 0; j < b.rows(); ++j) {
                const std::int64_t deg = static_cast<std::int64_t>(t) - static_cast<std::int64_t>(i + j);
                if (deg < 0) continue;
                const auto s = static_cast<std::int64_t>(binomial(deg + static_cast<std::int64_t>(pts.r()),
                                                                  static_cast<std::int64_t>(pts.r())));
                total += (i % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(b.at(i, j)) * s;
            }
        CHECK(total == static_cast<std::int64_t>(hilbert_function(pts, t)));
    }
}

} // namespace

TEST_CASE("one point on the projective line") {
    const PointSet pts(PrimeField(101), 1, {{1, 0}});
    const BettiTable b = betti_table(pts);
    CHECK(b.same_entries(from_rows({{1, 1, 0}})));
    CHECK(regularity(b) == 0);
}

TEST_CASE("one point in the plane") {
    const PointSet pts(PrimeField(101), 2, {{0, 0, 1}});
    CHECK(betti_table(pts).same_entries(from_rows({{1, 2, 1, 0}})));
}

TEST_CASE("five general points in the plane") {
    const PointSet pts = random_point_set(PrimeField(random_prime_31(9)), 2, 5, 4);
    const BettiTable b = betti_table(pts);
    CHECK(b.same_entries(from_rows({{1, 0, 0}, {0, 1, 0}, {0, 2, 2}})));
    CHECK(b.hilbert == std::vector<std::size_t>{1, 3, 5, 5});
    CHECK(b.gamma == 5);
    CHECK(b.prime == pts.field().modulus());
}

TEST_CASE("three collinear points have an internal zero row") {
    const PointSet pts(PrimeField(1009), 2, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}});
    const BettiTable b = betti_table(pts);
    CHECK(b.same_entries(from_rows({{1, 1, 0}, {0, 0, 0}, {0, 1, 1}})));
    CHECK(b.row_is_zero(1));
    CHECK(regularity(b) == 2);
    CHECK(brute_force_betti(pts).same_entries(b));
}

TEST_CASE("four points on the projective line") {
    const PointSet pts(PrimeField(1009), 1, {{1, 0}, {0, 1}, {1, 1}, {1, 2}});
    CHECK(betti_table(pts).same_entries(from_rows({{1, 0}, {0, 0}, {0, 0}, {0, 1}})));
}

TEST_CASE("koszul betti table agrees with the free resolution oracle") {
    const PrimeField f(random_prime_31(17));
    std::uint64_t seed = 1;
    for (std::size_t r = 1; r <= 3; ++r) {
        for (std::size_t gamma : {2U, 5U, 8U, 12U}) {
            const PointSet pts = random_point_set(f, r, gamma, seed++);
            const BettiTable b = betti_table(pts);
            CHECK(brute_force_betti(pts).same_entries(b));
            check_hilbert_identity(b, pts, 8);
            CHECK(b.row_is_zero(b.rows() - 1));
        }
    }
}

TEST_CASE("special configurations agree with the oracle") {
    const PrimeField f(10007);
    // Six points on a conic in P^2 and points on a twisted cubic in P^3.
    std::vector<std::vector<std::uint32_t>> conic, cubic;
    for (std::uint32_t t = 1; t <= 6; ++t) conic.push_back({1, t, t * t});
    for (std::uint32_t t = 1; t <= 9; ++t) cubic.push_back({1, t, t * t, t * t * t});
    for (const PointSet& pts : {PointSet(f, 2, conic), PointSet(f, 3, cubic)}) {
        const BettiTable b = betti_table(pts);
        CHECK(brute_force_betti(pts).same_entries(b));
        check_hilbert_identity(b, pts, 8);
    }
}

TEST_CASE("betti table is invariant under rescaling lifts") {
    const PrimeField f(random_prime_31(23));
    const PointSet pts = random_point_set(f, 3, 10, 5);
    std::vector<std::uint32_t> s;
    for (std::size_t i = 0; i < pts.size(); ++i) s.push_back(static_cast<std::uint32_t>(7 * i + 3));
    CHECK(betti_table(pts).same_entries(betti_table(pts.rescaled(s))));
}

TEST_CASE("column and row limits") {
    const PrimeField f(1009);
    const PointSet pts = random_point_set(f, 3, 6, 6);
    const BettiTable b = betti_table(pts, 2, 5);
    CHECK(b.columns() == 3);
    CHECK(b.rows() == 6);
    CHECK(b.same_entries(betti_table(pts)) == false);  // truncated columns differ
    const BettiTable full = betti_table(pts);
    for (std::size_t i = 0; i <= 2; ++i)
        for (std::size_t j = 0; j < 6; ++j) CHECK(b.at(i, j) == full.at(i, j));
}

TEST_CASE("oracle resource limit") {
    const PointSet pts = random_point_set(PrimeField(1009), 3, 20, 1);
    CHECK_THROWS_AS((void)brute_force_betti(pts, 50), ResourceLimit);
}

TEST_CASE("rendering and serialization") {
    const PointSet pts = random_point_set(PrimeField(1009), 2, 5, 4);
    BettiTable b = betti_table(pts);
    b.seed = 42;
    const std::string text = render_betti(b);
    CHECK(text.find("total:") != std::string::npos);
    CHECK(text.find("2: . 2 2") != std::string::npos);
    CHECK(betti_csv(b).rfind("row,b0,b1,b2,b3\n0,1,0,0,0\n", 0) == 0);
    const BettiTable back = BettiTable::from_json(b.to_json());
    CHECK(back.same_entries(b));
    CHECK(back.seed == 42);
    CHECK(back.hilbert == b.hilbert);
}
