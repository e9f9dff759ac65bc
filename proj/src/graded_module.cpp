#include "bettilab/graded_module.hpp"

#include <algorithm>
#include <stdexcept>

namespace bettilab {

MonomialTable::MonomialTable(std::size_t r, unsigned max_degree) : r_(r) {
    if (r + 1 > 8) throw std::invalid_argument("MonomialTable supports at most 8 variables");
    for (unsigned j = 0; j <= max_degree + 1; ++j) {
        by_degree_.push_back(monomial_basis(r, j));
        for (std::size_t i = 0; i < by_degree_.back().size(); ++i) index_.emplace(key(by_degree_.back()[i]), i);
    }
    for (unsigned j = 0; j <= max_degree; ++j) {
        std::vector<std::size_t> table;
        table.reserve(by_degree_[j].size() * (r + 1));
        for (const auto& e : by_degree_[j]) {
            for (std::size_t var = 0; var <= r; ++var) {
                Exponents shifted = e;
                ++shifted[var];
                table.push_back(index_.at(key(shifted)));
            }
        }
        times_var_.push_back(std::move(table));
    }
    by_degree_.pop_back();
}

std::uint64_t MonomialTable::key(const Exponents& e) const noexcept {
    std::uint64_t k = 0;
    for (const unsigned x : e) k = (k << 8U) | x;
    return k;
}

std::size_t MonomialTable::index_of(const Exponents& e) const {
    const auto it = index_.find(key(e));
    if (it == index_.end()) throw std::out_of_range("monomial outside the table");
    return it->second;
}

PointModule::PointModule(const PointSet& points, int max_degree)
    : points_(points), empty_(points.field(), 0, points.size()) {
    for (int j = 0; j <= max_degree; ++j) pieces_.push_back(graded_piece(points_, static_cast<unsigned>(j)).basis);
}

const Matrix& PointModule::basis(int j) const {
    if (j < 0) return empty_;
    if (j > max_degree()) throw std::out_of_range("PointModule: degree beyond precomputed range");
    return pieces_[static_cast<std::size_t>(j)];
}

void PointModule::multiply(std::size_t var, int, std::span<const std::uint32_t> v,
                           std::span<std::uint32_t> out) const {
    const PrimeField& f = points_.field();
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = f.mul(v[i], points_.point(i)[var]);
}

PolynomialRingModule::PolynomialRingModule(PrimeField field, std::size_t r, int max_degree)
    : field_(field), max_degree_(max_degree), table_(r, static_cast<unsigned>(max_degree + 1)), empty_(field, 0, 0) {
    for (int j = 0; j <= max_degree; ++j) identities_.push_back(Matrix::identity(field_, table_.count(j)));
}

std::size_t PolynomialRingModule::ambient_dim(int j) const { return j < 0 ? 0 : table_.count(static_cast<unsigned>(j)); }

const Matrix& PolynomialRingModule::basis(int j) const {
    if (j < 0) return empty_;
    return identities_.at(static_cast<std::size_t>(j));
}

void PolynomialRingModule::multiply(std::size_t var, int j, std::span<const std::uint32_t> v,
                                    std::span<std::uint32_t> out) const {
    std::fill(out.begin(), out.end(), 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] != 0) out[table_.times_variable(static_cast<unsigned>(j), i, var)] = v[i];
    }
}

} // namespace bettilab
