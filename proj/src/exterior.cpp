#include "bettilab/exterior.hpp"

#include <stdexcept>

namespace bettilab {

namespace {

void subsets_rec(std::size_t start, std::size_t n, std::size_t left, std::uint32_t mask,
                 std::vector<std::uint32_t>& out) {
    if (left == 0) {
        out.push_back(mask);
        return;
    }
    for (std::size_t k = start; k + left <= n; ++k) subsets_rec(k + 1, n, left - 1, mask | (1U << k), out);
}

Matrix koszul_impl(const GradedModule& module, std::size_t i, int j, bool ambient_source) {
    const PrimeField& f = module.field();
    const std::size_t n = module.num_variables();
    const std::size_t src_piece = ambient_source ? (j < 0 ? 0 : module.ambient_dim(j)) : module.dim(j);
    if (i == 0 || i > n) {
        const std::size_t src = i > n ? 0 : src_piece;
        const std::size_t tgt_wedges = (i == 0 || i - 1 > n) ? 0 : WedgeBasis(n, i - 1).size();
        return Matrix(f, src, tgt_wedges * (j + 1 < 0 ? 0 : module.ambient_dim(j + 1)));
    }
    const WedgeBasis source(n, i);
    const WedgeBasis target(n, i - 1);
    const std::size_t amb_next = module.ambient_dim(j + 1);
    Matrix out(f, source.size() * src_piece, target.size() * amb_next);
    if (src_piece == 0) return out;
    const std::size_t amb = module.ambient_dim(j);

    std::vector<std::uint32_t> unit(amb, 0);
    std::vector<std::uint32_t> image(amb_next, 0);
    for (std::size_t b = 0; b < src_piece; ++b) {
        std::span<const std::uint32_t> vec;
        if (ambient_source) {
            std::fill(unit.begin(), unit.end(), 0);
            unit[b] = 1;
            vec = unit;
        } else {
            vec = module.basis(j).row(b);
        }
        for (std::size_t var = 0; var < n; ++var) {
            module.multiply(var, j, vec, image);
            for (std::size_t w = 0; w < source.size(); ++w) {
                const std::uint32_t mask = source.mask(w);
                if ((mask & (1U << var)) == 0) continue;
                const std::size_t t = target.index_of(mask & ~(1U << var));
                const bool negative = wedge_sign(mask, var) < 0;
                auto row = out.row(w * src_piece + b);
                for (std::size_t c = 0; c < amb_next; ++c) {
                    if (image[c] == 0) continue;
                    row[t * amb_next + c] = negative ? f.neg(image[c]) : image[c];
                }
            }
        }
    }
    return out;
}

} // namespace

WedgeBasis::WedgeBasis(std::size_t n, std::size_t degree) : n_(n), degree_(degree) {
    if (n > 20) throw std::invalid_argument("WedgeBasis: at most 20 generators");
    if (degree <= n) subsets_rec(0, n, degree, 0, masks_);
    index_.assign(std::size_t{1} << n, SIZE_MAX);
    for (std::size_t i = 0; i < masks_.size(); ++i) index_[masks_[i]] = i;
}

std::vector<std::size_t> WedgeBasis::elements(std::size_t idx) const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < n_; ++k)
        if ((masks_[idx] & (1U << k)) != 0) out.push_back(k);
    return out;
}

Matrix koszul_matrix(const GradedModule& module, std::size_t i, int j) { return koszul_impl(module, i, j, false); }

Matrix koszul_matrix_ambient(const GradedModule& module, std::size_t i, int j) {
    return koszul_impl(module, i, j, true);
}

std::size_t koszul_cohomology_dim(const GradedModule& module, std::size_t i, int j) {
    const std::size_t n = module.num_variables();
    if (i > n || j < 0) return 0;
    const std::size_t total = WedgeBasis(n, i).size() * module.dim(j);
    const std::size_t out_rank = rank(koszul_matrix(module, i, j));
    const std::size_t in_rank = (i + 1 <= n && j >= 1) ? rank(koszul_matrix(module, i + 1, j - 1)) : 0;
    if (out_rank + in_rank > total) throw std::logic_error("Koszul ranks exceed the chain dimension");
    return total - out_rank - in_rank;
}

std::vector<std::vector<ShuffleTerm>> comultiply(std::size_t n, std::size_t i, std::size_t k) {
    if (i + k > n) throw std::invalid_argument("comultiply: i + k exceeds the dimension");
    const WedgeBasis whole(n, i + k);
    const WedgeBasis left(n, i);
    const WedgeBasis right(n, k);
    std::vector<std::vector<ShuffleTerm>> out(whole.size());
    for (std::size_t u = 0; u < whole.size(); ++u) {
        const std::uint32_t mask = whole.mask(u);
        for (std::size_t a = 0; a < left.size(); ++a) {
            const std::uint32_t amask = left.mask(a);
            if ((amask & mask) != amask) continue;
            const std::uint32_t bmask = mask & ~amask;
            // Sign of the shuffle: count pairs (x in A, y in B) with x > y.
            std::size_t inversions = 0;
            for (std::size_t y = 0; y < n; ++y)
                if ((bmask & (1U << y)) != 0) inversions += static_cast<std::size_t>(__builtin_popcount(amask >> (y + 1)));
            out[u].push_back({inversions % 2 == 0 ? 1 : -1, a, right.index_of(bmask)});
        }
    }
    return out;
}

} // namespace bettilab
