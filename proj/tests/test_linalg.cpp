#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "bettilab/field.hpp"
#include "bettilab/matrix.hpp"
#include "bettilab/random.hpp"

using namespace bettilab;

namespace {

Matrix random_matrix(const PrimeField& f, std::size_t rows, std::size_t cols, Rng& rng) {
    Matrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = static_cast<std::uint32_t>(rng.below(f.modulus()));
    return m;
}

// Product of a random rows x k and k x cols matrix: rank at most k.
Matrix random_low_rank(const PrimeField& f, std::size_t rows, std::size_t cols, std::size_t k, Rng& rng) {
    return random_matrix(f, rows, k, rng) * random_matrix(f, k, cols, rng);
}

Matrix random_skew(const PrimeField& f, std::size_t n, Rng& rng) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            m(i, j) = static_cast<std::uint32_t>(rng.below(f.modulus()));
            m(j, i) = f.neg(m(i, j));
        }
    return m;
}

// Leibniz expansion; independent of the elimination code.
std::uint32_t leibniz_det(const Matrix& m) {
    const PrimeField& f = m.field();
    std::vector<std::size_t> perm(m.rows());
    std::iota(perm.begin(), perm.end(), 0);
    std::uint32_t total = 0;
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < perm.size(); ++i)
            for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j] ? 1 : 0;
        std::uint32_t term = 1;
        for (std::size_t i = 0; i < perm.size(); ++i) term = f.mul(term, m(i, perm[i]));
        total = inversions % 2 == 0 ? f.add(total, term) : f.sub(total, term);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// Expansion along the first row: pf(A) = sum_j (-1)^{j+1} a_{0j} pf(A without 0, j).
std::uint32_t expansion_pf(const Matrix& m) {
    const PrimeField& f = m.field();
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    std::uint32_t total = 0;
    for (std::size_t j = 1; j < n; ++j) {
        std::vector<std::size_t> keep;
        for (std::size_t t = 1; t < n; ++t)
            if (t != j) keep.push_back(t);
        Matrix minor(f, n - 2, n - 2);
        for (std::size_t a = 0; a < keep.size(); ++a)
            for (std::size_t b = 0; b < keep.size(); ++b) minor(a, b) = m(keep[a], keep[b]);
        const std::uint32_t term = f.mul(m(0, j), expansion_pf(minor));
        total = (j % 2 == 1) ? f.add(total, term) : f.sub(total, term);
    }
    return total;
}

} // namespace

TEST_CASE("prime field basics") {
    const PrimeField f(101);
    CHECK(f.mul(f.inv(7), 7) == 1);
    CHECK(f.from_int(-1) == 100);
    CHECK(f.to_signed(100) == -1);
    CHECK_THROWS_AS(PrimeField(100), FieldError);
    CHECK_THROWS_AS(PrimeField(2), FieldError);
    CHECK_THROWS_AS((void)f.inv(0), FieldError);

    const PrimeField big(2147483647U);
    Rng rng(3);
    for (int i = 0; i < 50; ++i) {
        const auto x = static_cast<std::uint32_t>(rng.below(big.modulus()));
        const auto sq = big.mul(x, x);
        const auto root = big.sqrt(sq);
        CHECK(big.mul(root, root) == sq);
    }
    // p = 1 mod 8 exercises the general Tonelli-Shanks loop.
    const PrimeField tonelli(17);
    for (std::uint32_t x = 1; x < 17; ++x) {
        const auto r = tonelli.sqrt(tonelli.mul(x, x));
        CHECK(tonelli.mul(r, r) == tonelli.mul(x, x));
    }
}

TEST_CASE("prime generation") {
    CHECK(is_prime(2147483647ULL));
    CHECK_FALSE(is_prime(2147483649ULL));
    CHECK(next_prime(90) == 97);
    const auto p = random_prime_31(11);
    CHECK(p >= (1U << 30U));
    CHECK(p < (1U << 31U));
    CHECK(is_prime(p));
    CHECK(random_prime_31(11) == p);
    CHECK(random_prime_31(12) != p);
}

TEST_CASE("rank examples") {
    const PrimeField f(101);
    CHECK(rank(Matrix::identity(f, 3)) == 3);
    CHECK(rank(Matrix(f, 4, 7)) == 0);
    CHECK(rank(Matrix::from_rows(f, {{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("nullspace examples") {
    const PrimeField f7(7);
    CHECK(nullspace(Matrix::identity(f7, 2)).empty());
    CHECK(nullspace(Matrix(f7, 1, 3)).size() == 3);
    const auto basis = nullspace(Matrix::from_rows(f7, {{1, 1, 0}}));
    REQUIRE(basis.size() == 2);
    CHECK(basis[0] == std::vector<std::uint32_t>{6, 1, 0});
    CHECK(basis[1] == std::vector<std::uint32_t>{0, 0, 1});
}

TEST_CASE("determinant examples") {
    const PrimeField f(101);
    CHECK(determinant(Matrix::identity(f, 4)).value == 1);
    CHECK(determinant(Matrix::from_rows(f, {{0, 1}, {1, 0}})).value == 100);
    CHECK(determinant(Matrix::from_rows(f, {{2, 0, 0}, {0, 3, 0}, {0, 0, 4}})).value == 24);
    CHECK_THROWS_AS((void)determinant(Matrix(f, 2, 3)), DimensionError);
}

TEST_CASE("pfaffian examples") {
    const PrimeField f(101);
    CHECK(pfaffian(Matrix::from_rows(f, {{0, 5}, {-5, 0}})).value == 5);
    Rng rng(17);
    const Matrix a = random_skew(f, 4, rng);
    const std::uint32_t classical =
        f.add(f.sub(f.mul(a(0, 1), a(2, 3)), f.mul(a(0, 2), a(1, 3))), f.mul(a(0, 3), a(1, 2)));
    CHECK(pfaffian(a).value == classical);
    CHECK_THROWS_AS((void)pfaffian(Matrix(f, 3, 3)), DimensionError);
    CHECK_THROWS_AS((void)pfaffian(Matrix::from_rows(f, {{0, 1}, {1, 0}})), DimensionError);
    CHECK_THROWS_AS((void)pfaffian(Matrix::from_rows(f, {{1, 1}, {-1, 0}})), DimensionError);
}

TEST_CASE("solve") {
    const PrimeField f(101);
    const Matrix m = Matrix::from_rows(f, {{1, 2}, {3, 4}});
    const std::vector<std::uint32_t> b{5, 6};
    const auto x = solve(m, b);
    REQUIRE(x.has_value());
    CHECK(mat_vec(m, *x) == b);
    const Matrix singular = Matrix::from_rows(f, {{1, 2}, {2, 4}});
    const std::vector<std::uint32_t> bad{1, 0};
    CHECK_FALSE(solve(singular, bad).has_value());
}

TEST_CASE("properties on random matrices") {
    const PrimeField f(random_prime_31(99));
    Rng rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        const auto rows = static_cast<std::size_t>(rng.between(1, 12));
        const auto cols = static_cast<std::size_t>(rng.between(1, 12));
        const auto k = static_cast<std::size_t>(rng.between(0, 6));
        const Matrix m = random_low_rank(f, rows, cols, k, rng);
        const std::size_t rk = rank(m);
        CHECK(rk <= std::min({rows, cols, k}));
        CHECK(rk == rank(m.transpose()));
        const auto ns = nullspace(m);
        CHECK(ns.size() + rk == cols);
        for (const auto& v : ns) {
            const auto image = mat_vec(m, v);
            CHECK(std::all_of(image.begin(), image.end(), [](std::uint32_t x) { return x == 0; }));
        }
        CHECK(nullspace(m) == ns);  // determinism
        CHECK(rank(row_space(m)) == rk);
    }
}

TEST_CASE("determinant and pfaffian against expansion oracles") {
    const PrimeField f(random_prime_31(5));
    Rng rng(77);
    for (std::size_t n = 1; n <= 6; ++n) {
        const Matrix m = random_matrix(f, n, n, rng);
        CHECK(determinant(m).value == leibniz_det(m));
    }
    for (std::size_t n = 2; n <= 8; n += 2) {
        for (int t = 0; t < 5; ++t) {
            Matrix s = random_skew(f, n, rng);
            if (t == 0) {
                // Force a zero in the first pivot position to exercise swaps.
                s(0, 1) = 0;
                s(1, 0) = 0;
            }
            const auto pf = pfaffian(s).value;
            CHECK(pf == expansion_pf(s));
            CHECK(f.mul(pf, pf) == determinant(s).value);
        }
    }
}
