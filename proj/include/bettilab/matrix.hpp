#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "bettilab/field.hpp"

namespace bettilab {

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix over a prime field.
class Matrix {
public:
    using value_type = std::uint32_t;

    Matrix(PrimeField field, std::size_t rows, std::size_t cols);

    static Matrix identity(PrimeField field, std::size_t n);
    /// Builds a matrix from signed integer literals, reduced mod p.
    static Matrix from_rows(PrimeField field, std::initializer_list<std::initializer_list<std::int64_t>> rows);
    static Matrix from_rows(PrimeField field, const std::vector<std::vector<value_type>>& rows, std::size_t cols);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] const PrimeField& field() const noexcept { return field_; }
    [[nodiscard]] std::uint32_t modulus() const noexcept { return field_.modulus(); }

    [[nodiscard]] value_type operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
    [[nodiscard]] value_type& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }

    [[nodiscard]] std::span<value_type> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
    [[nodiscard]] std::span<const value_type> row(std::size_t r) const noexcept {
        return {data_.data() + r * cols_, cols_};
    }
    [[nodiscard]] std::span<const value_type> data() const noexcept { return data_; }

    void append_row(std::span<const value_type> values);
    void swap_rows(std::size_t a, std::size_t b) noexcept;

    [[nodiscard]] Matrix transpose() const;
    [[nodiscard]] bool is_zero() const noexcept;
    [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }
    [[nodiscard]] bool is_skew_symmetric() const noexcept;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b) noexcept;

private:
    PrimeField field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<value_type> data_;
};

/// Reduced row echelon form with the pivot columns that produced it.
struct EchelonForm {
    Matrix reduced;
    std::vector<std::size_t> pivot_cols;

    [[nodiscard]] std::size_t rank() const noexcept { return pivot_cols.size(); }
};

/// Gauss-Jordan elimination. Pivots are the first nonzero entry in column
/// order, scanning rows top to bottom, so the result is reproducible.
[[nodiscard]] EchelonForm row_reduce(Matrix m);

[[nodiscard]] std::size_t rank(const Matrix& m);

/// Basis of {v : m v = 0}, one vector per free column. The free coordinate is
/// set to 1, the other free coordinates to 0, and pivot coordinates follow
/// from back-substitution.
[[nodiscard]] std::vector<std::vector<std::uint32_t>> nullspace(const Matrix& m);

/// Basis of the row space (nonzero rows of the reduced echelon form).
[[nodiscard]] Matrix row_space(const Matrix& m);

/// Some x with m x = b, or nullopt when the system is inconsistent.
[[nodiscard]] std::optional<std::vector<std::uint32_t>> solve(const Matrix& m, std::span<const std::uint32_t> b);

/// Throws DimensionError for non-square input.
[[nodiscard]] FieldElement determinant(const Matrix& m);

/// Pfaffian of a skew-symmetric matrix of even size with zero diagonal, by
/// congruence elimination on 2x2 pivot blocks. Throws DimensionError for odd
/// size or non-skew input.
[[nodiscard]] FieldElement pfaffian(const Matrix& m);

/// Row vector times matrix.
[[nodiscard]] std::vector<std::uint32_t> vec_mat(std::span<const std::uint32_t> v, const Matrix& m);
/// Matrix times column vector.
[[nodiscard]] std::vector<std::uint32_t> mat_vec(const Matrix& m, std::span<const std::uint32_t> v);

} // namespace bettilab
