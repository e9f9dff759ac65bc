#include "bettilab/matrix.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace bettilab {

namespace {

// dst[c] -= f * src[c] for c in [from, n), where neg_f = p - f.
inline void axpy_row(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t neg_f, std::size_t from,
                     std::size_t n, std::uint64_t p) noexcept {
    for (std::size_t c = from; c < n; ++c) {
        if (src[c] != 0) {
            dst[c] = static_cast<std::uint32_t>((dst[c] + static_cast<std::uint64_t>(neg_f) * src[c]) % p);
        }
    }
}

inline void scale_row(std::uint32_t* row, std::uint32_t s, std::size_t from, std::size_t n, std::uint64_t p) noexcept {
    for (std::size_t c = from; c < n; ++c) row[c] = static_cast<std::uint32_t>((row[c] * static_cast<std::uint64_t>(s)) % p);
}

// Forward elimination (optionally Gauss-Jordan). Returns pivot columns; rows
// [0, rank) of m hold the echelon rows afterwards.
std::vector<std::size_t> eliminate(Matrix& m, bool reduce) {
    const PrimeField& f = m.field();
    const std::uint64_t p = f.modulus();
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::size_t found = rows;
        for (std::size_t r = pivot_row; r < rows; ++r) {
            if (m(r, col) != 0) {
                found = r;
                break;
            }
        }
        if (found == rows) continue;
        m.swap_rows(found, pivot_row);
        std::uint32_t* prow = m.row(pivot_row).data();
        scale_row(prow, f.inv(prow[col]), col, cols, p);
        const std::size_t first = reduce ? 0 : pivot_row + 1;
        for (std::size_t r = first; r < rows; ++r) {
            if (r == pivot_row) continue;
            std::uint32_t* row = m.row(r).data();
            const std::uint32_t factor = row[col];
            if (factor != 0) axpy_row(row, prow, f.neg(factor), col, cols, p);
        }
        pivots.push_back(col);
        ++pivot_row;
    }
    return pivots;
}

} // namespace

Matrix::Matrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::identity(PrimeField field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(PrimeField field, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    const std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
    Matrix m(field, rows.size(), cols);
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != cols) throw DimensionError("ragged matrix literal");
        std::size_t c = 0;
        for (const std::int64_t v : row) m(r, c++) = field.from_int(v);
        ++r;
    }
    return m;
}

Matrix Matrix::from_rows(PrimeField field, const std::vector<std::vector<value_type>>& rows, std::size_t cols) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw DimensionError("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c] % field.modulus();
    }
    return m;
}

void Matrix::append_row(std::span<const value_type> values) {
    if (values.size() != cols_) throw DimensionError("append_row: length mismatch");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) noexcept {
    if (a == b) return;
    std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(a * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>(b * cols_));
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool Matrix::is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](value_type v) { return v == 0; });
}

bool Matrix::is_skew_symmetric() const noexcept {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
        if ((*this)(i, i) != 0) return false;
        for (std::size_t j = i + 1; j < cols_; ++j) {
            if ((*this)(i, j) != field_.neg((*this)(j, i))) return false;
        }
    }
    return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product: inner dimensions differ");
    if (a.field_ != b.field_) throw DimensionError("matrix product: moduli differ");
    const std::uint64_t p = a.modulus();
    Matrix out(a.field_, a.rows_, b.cols_);
    std::vector<std::uint64_t> acc(b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const std::uint64_t x = a(i, k);
            if (x == 0) continue;
            const auto brow = b.row(k);
            for (std::size_t j = 0; j < b.cols_; ++j) acc[j] = (acc[j] + x * brow[j]) % p;
        }
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) = static_cast<std::uint32_t>(acc[j]);
    }
    return out;
}

bool operator==(const Matrix& a, const Matrix& b) noexcept {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

EchelonForm row_reduce(Matrix m) {
    auto pivots = eliminate(m, true);
    return EchelonForm{std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    // Eliminating along the shorter side is cheaper; rank is transpose-invariant.
    Matrix work = m.rows() > m.cols() * 2 ? m.transpose() : m;
    return eliminate(work, false).size();
}

std::vector<std::vector<std::uint32_t>> nullspace(const Matrix& m) {
    const EchelonForm ef = row_reduce(m);
    const PrimeField& f = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (const std::size_t c : ef.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<std::uint32_t>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<std::uint32_t> v(m.cols(), 0);
        v[free] = 1;
        for (std::size_t i = 0; i < ef.pivot_cols.size(); ++i) v[ef.pivot_cols[i]] = f.neg(ef.reduced(i, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

Matrix row_space(const Matrix& m) {
    EchelonForm ef = row_reduce(m);
    Matrix out(m.field(), ef.rank(), m.cols());
    for (std::size_t i = 0; i < ef.rank(); ++i) std::copy_n(ef.reduced.row(i).begin(), m.cols(), out.row(i).begin());
    return out;
}

std::optional<std::vector<std::uint32_t>> solve(const Matrix& m, std::span<const std::uint32_t> b) {
    if (b.size() != m.rows()) throw DimensionError("solve: right-hand side length mismatch");
    Matrix aug(m.field(), m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::copy_n(m.row(r).begin(), m.cols(), aug.row(r).begin());
        aug(r, m.cols()) = b[r] % m.modulus();
    }
    const EchelonForm ef = row_reduce(std::move(aug));
    if (!ef.pivot_cols.empty() && ef.pivot_cols.back() == m.cols()) return std::nullopt;
    std::vector<std::uint32_t> x(m.cols(), 0);
    for (std::size_t i = 0; i < ef.rank(); ++i) x[ef.pivot_cols[i]] = ef.reduced(i, m.cols());
    return x;
}

FieldElement determinant(const Matrix& m) {
    if (!m.is_square()) {
        throw DimensionError("determinant of a " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                             " matrix");
    }
    const PrimeField& f = m.field();
    const std::uint64_t p = f.modulus();
    const std::size_t n = m.rows();
    Matrix a = m;
    std::uint32_t det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t found = n;
        for (std::size_t r = col; r < n; ++r) {
            if (a(r, col) != 0) {
                found = r;
                break;
            }
        }
        if (found == n) return {0, f.modulus()};
        if (found != col) {
            a.swap_rows(found, col);
            det = f.neg(det);
        }
        const std::uint32_t piv = a(col, col);
        det = f.mul(det, piv);
        const std::uint32_t piv_inv = f.inv(piv);
        for (std::size_t r = col + 1; r < n; ++r) {
            const std::uint32_t factor = f.mul(a(r, col), piv_inv);
            if (factor != 0) axpy_row(a.row(r).data(), a.row(col).data(), f.neg(factor), col, n, p);
        }
    }
    return {det, f.modulus()};
}

FieldElement pfaffian(const Matrix& m) {
    if (!m.is_square() || m.rows() % 2 != 0) {
        throw DimensionError("pfaffian needs a square matrix of even size");
    }
    if (!m.is_skew_symmetric()) throw DimensionError("pfaffian needs a skew-symmetric matrix");
    const PrimeField& f = m.field();
    const std::size_t n = m.rows();
    Matrix a = m;
    std::uint32_t pf = 1;
    auto swap_index = [&a, n](std::size_t i, std::size_t j) {
        a.swap_rows(i, j);
        for (std::size_t r = 0; r < n; ++r) std::swap(a(r, i), a(r, j));
    };
    for (std::size_t k = 0; k < n; k += 2) {
        std::size_t found = n;
        for (std::size_t j = k + 1; j < n; ++j) {
            if (a(k, j) != 0) {
                found = j;
                break;
            }
        }
        if (found == n) return {0, f.modulus()};
        if (found != k + 1) {
            swap_index(k + 1, found);
            pf = f.neg(pf);
        }
        const std::uint32_t pivot = a(k, k + 1);
        pf = f.mul(pf, pivot);
        const std::uint32_t inv = f.inv(pivot);
        // Trailing block update: C + B^T J^{-1} B with J the 2x2 pivot block.
        for (std::size_t i = k + 2; i < n; ++i) {
            const std::uint32_t ki = f.mul(a(k, i), inv);
            const std::uint32_t k1i = f.mul(a(k + 1, i), inv);
            for (std::size_t j = k + 2; j < n; ++j) {
                const std::uint32_t delta = f.sub(f.mul(k1i, a(k, j)), f.mul(ki, a(k + 1, j)));
                a(i, j) = f.add(a(i, j), delta);
            }
        }
    }
    return {pf, f.modulus()};
}

std::vector<std::uint32_t> vec_mat(std::span<const std::uint32_t> v, const Matrix& m) {
    if (v.size() != m.rows()) throw DimensionError("vec_mat: length mismatch");
    const std::uint64_t p = m.modulus();
    std::vector<std::uint64_t> acc(m.cols(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (v[i] == 0) continue;
        const auto row = m.row(i);
        for (std::size_t j = 0; j < m.cols(); ++j) acc[j] = (acc[j] + static_cast<std::uint64_t>(v[i]) * row[j]) % p;
    }
    return {acc.begin(), acc.end()};
}

std::vector<std::uint32_t> mat_vec(const Matrix& m, std::span<const std::uint32_t> v) {
    if (v.size() != m.cols()) throw DimensionError("mat_vec: length mismatch");
    const std::uint64_t p = m.modulus();
    std::vector<std::uint32_t> out(m.rows(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::uint64_t acc = 0;
        const auto row = m.row(i);
        for (std::size_t j = 0; j < m.cols(); ++j) acc = (acc + static_cast<std::uint64_t>(row[j]) * v[j]) % p;
        out[i] = static_cast<std::uint32_t>(acc);
    }
    return out;
}

} // namespace bettilab
