#include "doctest.h"

#include "bettilab/exterior.hpp"
#include "bettilab/graded_module.hpp"

using namespace bettilab;

TEST_CASE("wedge basis") {
    const WedgeBasis w(4, 2);
    CHECK(w.size() == 6);
    CHECK(w.mask(0) == 0b0011U);
    CHECK(w.mask(5) == 0b1100U);
    CHECK(w.elements(4) == std::vector<std::size_t>{1, 3});
    for (std::size_t k = 0; k < w.size(); ++k) CHECK(w.index_of(w.mask(k)) == k);
    CHECK(WedgeBasis(3, 0).size() == 1);
    CHECK(WedgeBasis(3, 4).size() == 0);
    CHECK(wedge_sign(0b0110U, 3) == 1);
    CHECK(wedge_sign(0b0010U, 3) == -1);
}

TEST_CASE("comultiplication reassembles the wedge") {
    // e_A ^ e_B = (sign of the merge permutation) e_U, computed by bubble sort.
    const std::size_t n = 5;
    for (std::size_t i = 0; i <= 3; ++i) {
        for (std::size_t k = 0; i + k <= n; ++k) {
            const WedgeBasis wu(n, i + k);
            const WedgeBasis wa(n, i);
            const WedgeBasis wb(n, k);
            const auto terms = comultiply(n, i, k);
            REQUIRE(terms.size() == wu.size());
            for (std::size_t u = 0; u < wu.size(); ++u) {
                CHECK(terms[u].size() == binomial(static_cast<std::int64_t>(i + k), static_cast<std::int64_t>(i)));
                for (const auto& t : terms[u]) {
                    CHECK((wa.mask(t.left) | wb.mask(t.right)) == wu.mask(u));
                    CHECK((wa.mask(t.left) & wb.mask(t.right)) == 0U);
                    auto seq = wa.elements(t.left);
                    const auto rest = wb.elements(t.right);
                    seq.insert(seq.end(), rest.begin(), rest.end());
                    int sign = 1;
                    for (std::size_t a = 0; a < seq.size(); ++a)
                        for (std::size_t b = 0; b + 1 < seq.size() - a; ++b)
                            if (seq[b] > seq[b + 1]) {
                                std::swap(seq[b], seq[b + 1]);
                                sign = -sign;
                            }
                    CHECK(t.sign == sign);
                }
            }
        }
    }
}

TEST_CASE("koszul differential squares to zero") {
    const PrimeField f(random_prime_31(3));
    const PointSet pts = random_point_set(f, 3, 8, 21);
    const PointModule mod(pts, 5);
    const PolynomialRingModule ring(f, 2, 5);
    for (std::size_t i = 2; i <= 4; ++i) {
        for (int j = 0; j + 1 < 5; ++j) {
            const Matrix a = koszul_matrix_ambient(mod, i, j);
            const Matrix b = koszul_matrix_ambient(mod, i - 1, j + 1);
            CHECK((a * b).is_zero());
        }
    }
    for (std::size_t i = 2; i <= 3; ++i) {
        for (int j = 0; j + 1 < 5; ++j) {
            CHECK((koszul_matrix_ambient(ring, i, j) * koszul_matrix_ambient(ring, i - 1, j + 1)).is_zero());
        }
    }
}

TEST_CASE("koszul complex of the polynomial ring is exact") {
    const PrimeField f(1009);
    for (std::size_t r = 0; r <= 3; ++r) {
        const PolynomialRingModule ring(f, r, 5);
        for (std::size_t i = 0; i <= r + 1; ++i) {
            for (int j = 0; j < 5; ++j) {
                CHECK(koszul_cohomology_dim(ring, i, j) == ((i == 0 && j == 0) ? 1U : 0U));
            }
        }
    }
}

TEST_CASE("koszul matrix shape") {
    const PrimeField f(1009);
    const PointSet pts = random_point_set(f, 2, 5, 2);
    const PointModule mod(pts, 4);
    const Matrix k = koszul_matrix(mod, 2, 1);
    CHECK(k.rows() == 3 * mod.dim(1));
    CHECK(k.cols() == 3 * pts.size());
    CHECK(koszul_matrix(mod, 0, 1).cols() == 0);
}
