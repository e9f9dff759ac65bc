#pragma once

#include <cstddef>
#include <span>
#include <unordered_map>
#include <vector>

#include "bettilab/graded_points.hpp"
#include "bettilab/matrix.hpp"

namespace bettilab {

/// A finitely generated graded S-module, S = F_p[x_0..x_r], given degree by
/// degree as a subspace of an ambient coordinate space together with the
/// action of the variables on those ambient spaces. Pieces exist for degrees
/// [0, max_degree()]; negative degrees are zero.
class GradedModule {
public:
    virtual ~GradedModule() = default;

    [[nodiscard]] virtual const PrimeField& field() const = 0;
    [[nodiscard]] virtual std::size_t num_variables() const = 0;
    [[nodiscard]] virtual int max_degree() const = 0;
    [[nodiscard]] virtual std::size_t ambient_dim(int j) const = 0;
    /// Rows form a basis of M_j inside the ambient space of degree j.
    [[nodiscard]] virtual const Matrix& basis(int j) const = 0;
    /// x_var * v, from the ambient space of degree j to that of degree j+1.
    virtual void multiply(std::size_t var, int j, std::span<const std::uint32_t> v,
                          std::span<std::uint32_t> out) const = 0;

    [[nodiscard]] std::size_t dim(int j) const { return j < 0 ? 0 : basis(j).rows(); }
};

/// Ranks and lookups of monomials of bounded degree.
class MonomialTable {
public:
    MonomialTable(std::size_t r, unsigned max_degree);

    [[nodiscard]] std::size_t r() const noexcept { return r_; }
    [[nodiscard]] unsigned max_degree() const noexcept { return static_cast<unsigned>(by_degree_.size()) - 1; }
    [[nodiscard]] const std::vector<Exponents>& of_degree(unsigned j) const { return by_degree_.at(j); }
    [[nodiscard]] std::size_t count(unsigned j) const { return by_degree_.at(j).size(); }
    [[nodiscard]] std::size_t index_of(const Exponents& e) const;
    /// Index (in degree j+1) of x_var times monomial idx of degree j.
    [[nodiscard]] std::size_t times_variable(unsigned j, std::size_t idx, std::size_t var) const {
        return times_var_.at(j)[idx * (r_ + 1) + var];
    }

private:
    [[nodiscard]] std::uint64_t key(const Exponents& e) const noexcept;

    std::size_t r_;
    std::vector<std::vector<Exponents>> by_degree_;
    std::unordered_map<std::uint64_t, std::size_t> index_;
    std::vector<std::vector<std::size_t>> times_var_;
};

/// S(Gamma) for a point set: every piece lives in F^gamma and variables act
/// by coordinatewise multiplication with their values at the lifts.
class PointModule final : public GradedModule {
public:
    PointModule(const PointSet& points, int max_degree);

    [[nodiscard]] const PrimeField& field() const override { return points_.field(); }
    [[nodiscard]] std::size_t num_variables() const override { return points_.r() + 1; }
    [[nodiscard]] int max_degree() const override { return static_cast<int>(pieces_.size()) - 1; }
    [[nodiscard]] std::size_t ambient_dim(int) const override { return points_.size(); }
    [[nodiscard]] const Matrix& basis(int j) const override;
    void multiply(std::size_t var, int j, std::span<const std::uint32_t> v,
                  std::span<std::uint32_t> out) const override;

private:
    PointSet points_;
    std::vector<Matrix> pieces_;
    Matrix empty_;
};

/// The polynomial ring S itself, truncated at max_degree.
class PolynomialRingModule final : public GradedModule {
public:
    PolynomialRingModule(PrimeField field, std::size_t r, int max_degree);

    [[nodiscard]] const PrimeField& field() const override { return field_; }
    [[nodiscard]] std::size_t num_variables() const override { return table_.r() + 1; }
    [[nodiscard]] int max_degree() const override { return max_degree_; }
    [[nodiscard]] std::size_t ambient_dim(int j) const override;
    [[nodiscard]] const Matrix& basis(int j) const override;
    void multiply(std::size_t var, int j, std::span<const std::uint32_t> v,
                  std::span<std::uint32_t> out) const override;

private:
    PrimeField field_;
    int max_degree_;
    MonomialTable table_;
    std::vector<Matrix> identities_;
    Matrix empty_;
};

} // namespace bettilab
