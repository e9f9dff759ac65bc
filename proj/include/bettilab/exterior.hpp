#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bettilab/graded_module.hpp"
#include "bettilab/matrix.hpp"

namespace bettilab {

/// Basis of the i-th exterior power of an n-dimensional space: strictly
/// increasing i-subsets of {0..n-1} in lexicographic order, stored as bitmasks.
class WedgeBasis {
public:
    WedgeBasis(std::size_t n, std::size_t degree);

    [[nodiscard]] std::size_t n() const noexcept { return n_; }
    [[nodiscard]] std::size_t degree() const noexcept { return degree_; }
    [[nodiscard]] std::size_t size() const noexcept { return masks_.size(); }
    [[nodiscard]] std::uint32_t mask(std::size_t idx) const { return masks_[idx]; }
    [[nodiscard]] const std::vector<std::uint32_t>& masks() const noexcept { return masks_; }
    [[nodiscard]] std::size_t index_of(std::uint32_t mask) const { return index_.at(mask); }
    /// Element indices of a basis wedge, increasing.
    [[nodiscard]] std::vector<std::size_t> elements(std::size_t idx) const;

private:
    std::size_t n_;
    std::size_t degree_;
    std::vector<std::uint32_t> masks_;
    std::vector<std::size_t> index_;  // by mask; entries for masks of other sizes are unused
};

/// (-1)^(number of elements of mask below k): the sign of moving e_k to the
/// front of the wedge.
[[nodiscard]] inline int wedge_sign(std::uint32_t mask, std::size_t k) noexcept {
    return (__builtin_popcount(mask & ((1U << k) - 1U)) % 2 == 0) ? 1 : -1;
}

/// Matrix of the Koszul differential
///   wedge^i V (x) M_j  ->  wedge^{i-1} V (x) M_{j+1},
///   e_{k_0} ^ ... ^ e_{k_{i-1}} (x) m  |->  sum_t (-1)^t e_{..k_t omitted..} (x) x_{k_t} m.
/// Row (w, b) is the image of wedge w tensor basis vector b of M_j; column
/// (w', c) is wedge w' tensor ambient coordinate c of degree j+1. Rank equals
/// the rank of the differential because M_{j+1} embeds in its ambient space.
[[nodiscard]] Matrix koszul_matrix(const GradedModule& module, std::size_t i, int j);

/// Same differential with the source also in ambient coordinates, so that
/// consecutive matrices compose: koszul_matrix_ambient(i+1, j-1) times
/// koszul_matrix_ambient(i, j) is zero.
[[nodiscard]] Matrix koszul_matrix_ambient(const GradedModule& module, std::size_t i, int j);

/// dim K_{i,j}(M): kernel of the outgoing differential modulo the image of
/// the incoming one at wedge^i V (x) M_j.
[[nodiscard]] std::size_t koszul_cohomology_dim(const GradedModule& module, std::size_t i, int j);

/// One term sign * (a (x) b) of a comultiplication.
struct ShuffleTerm {
    int sign;
    std::size_t left;   // index in WedgeBasis(n, i)
    std::size_t right;  // index in WedgeBasis(n, k)
};

/// Structure constants of wedge^{i+k} -> wedge^i (x) wedge^k: for each basis
/// wedge of degree i+k, the signed (i-wedge, k-wedge) shuffle splittings with
/// e_U = sign * e_A ^ e_B.
[[nodiscard]] std::vector<std::vector<ShuffleTerm>> comultiply(std::size_t n, std::size_t i, std::size_t k);

} // namespace bettilab
