#include "bettilab/betti.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "bettilab/exterior.hpp"

namespace bettilab {

BettiTable::BettiTable(std::size_t columns, std::size_t rows) : b_(columns, std::vector<std::size_t>(rows, 0)) {}

std::size_t BettiTable::at(std::size_t i, std::size_t j) const noexcept {
    if (i >= b_.size() || j >= b_[i].size()) return 0;
    return b_[i][j];
}

void BettiTable::set(std::size_t i, std::size_t j, std::size_t value) { b_.at(i).at(j) = value; }

bool BettiTable::row_is_zero(std::size_t j) const noexcept {
    return std::all_of(b_.begin(), b_.end(), [j](const auto& col) { return j >= col.size() || col[j] == 0; });
}

bool BettiTable::same_entries(const BettiTable& other) const noexcept {
    const std::size_t cols = std::max(columns(), other.columns());
    const std::size_t rws = std::max(rows(), other.rows());
    for (std::size_t i = 0; i < cols; ++i)
        for (std::size_t j = 0; j < rws; ++j)
            if (at(i, j) != other.at(i, j)) return false;
    return true;
}

nlohmann::json BettiTable::to_json() const {
    return {{"prime", prime}, {"seed", seed}, {"gamma", gamma}, {"r", r}, {"hilbert", hilbert}, {"betti", b_}};
}

BettiTable BettiTable::from_json(const nlohmann::json& j) {
    BettiTable t;
    t.b_ = j.at("betti").get<std::vector<std::vector<std::size_t>>>();
    t.prime = j.value("prime", 0U);
    t.seed = j.value("seed", std::uint64_t{0});
    t.gamma = j.value("gamma", std::size_t{0});
    t.r = j.value("r", std::size_t{0});
    t.hilbert = j.value("hilbert", std::vector<std::size_t>{});
    return t;
}

BettiTable betti_table(const GradedModule& module, std::size_t rows) {
    const std::size_t n = module.num_variables();
    if (module.max_degree() < static_cast<int>(rows)) {
        throw std::invalid_argument("betti_table: module pieces do not reach the requested rows");
    }
    BettiTable table(n + 1, rows);
    for (std::size_t j = 0; j < rows; ++j) {
        table.hilbert.push_back(module.dim(static_cast<int>(j)));
        for (std::size_t i = 0; i <= n; ++i) table.set(i, j, koszul_cohomology_dim(module, i, static_cast<int>(j)));
    }
    return table;
}

BettiTable betti_table(const PointSet& points, std::size_t i_max, int j_max) {
    if (points.size() == 0) throw InvalidPointSet("betti_table: empty point set");
    const int reg = static_cast<int>(hilbert_regularity(points));
    const int last_row = std::max(j_max, reg + 1);
    const PointModule module(points, last_row + 1);
    const std::size_t cols = std::min(i_max, points.r() + 1) + 1;
    BettiTable table(cols, static_cast<std::size_t>(last_row) + 1);
    for (int j = 0; j <= last_row; ++j) {
        table.hilbert.push_back(module.dim(j));
        for (std::size_t i = 0; i < cols; ++i) table.set(i, static_cast<std::size_t>(j), koszul_cohomology_dim(module, i, j));
    }
    table.prime = points.field().modulus();
    table.gamma = points.size();
    table.r = points.r();
    return table;
}

namespace {

// Row-echelon accumulator answering "is v in the span so far?".
class IncrementalSpan {
public:
    IncrementalSpan(PrimeField f, std::size_t dim) : f_(f), dim_(dim) {}

    // Adds v if independent; returns whether it was.
    bool add(std::vector<std::uint32_t> v) {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const std::uint32_t c = v[pivots_[i]];
            if (c == 0) continue;
            const std::uint32_t neg = f_.neg(c);
            for (std::size_t k = 0; k < dim_; ++k)
                if (rows_[i][k] != 0) v[k] = f_.add(v[k], f_.mul(neg, rows_[i][k]));
        }
        std::size_t piv = 0;
        while (piv < dim_ && v[piv] == 0) ++piv;
        if (piv == dim_) return false;
        const std::uint32_t inv = f_.inv(v[piv]);
        for (auto& x : v) x = f_.mul(x, inv);
        rows_.push_back(std::move(v));
        pivots_.push_back(piv);
        return true;
    }

private:
    PrimeField f_;
    std::size_t dim_;
    std::vector<std::vector<std::uint32_t>> rows_;
    std::vector<std::size_t> pivots_;
};

// A graded free module with generator degrees, plus its map to the previous
// module of the resolution, tracked one degree at a time.
struct FreeModule {
    std::vector<int> gen_degree;
    std::vector<std::vector<std::uint32_t>> gen_image;  // in the previous module, degree gen_degree

    [[nodiscard]] std::size_t dim(const MonomialTable& mt, int t) const {
        std::size_t total = 0;
        for (const int e : gen_degree)
            if (e <= t) total += mt.count(static_cast<unsigned>(t - e));
        return total;
    }
    [[nodiscard]] std::size_t offset(const MonomialTable& mt, int t, std::size_t g) const {
        std::size_t total = 0;
        for (std::size_t h = 0; h < g; ++h)
            if (gen_degree[h] <= t) total += mt.count(static_cast<unsigned>(t - gen_degree[h]));
        return total;
    }
};

// x_var * v for v in module degree t, landing in degree t+1.
std::vector<std::uint32_t> times_variable(const FreeModule& m, const MonomialTable& mt, int t,
                                          std::span<const std::uint32_t> v, std::size_t var) {
    std::vector<std::uint32_t> out(m.dim(mt, t + 1), 0);
    std::size_t src = 0;
    std::size_t dst = 0;
    for (const int e : m.gen_degree) {
        if (e > t + 1) continue;
        if (e <= t) {
            const auto deg = static_cast<unsigned>(t - e);
            for (std::size_t idx = 0; idx < mt.count(deg); ++idx) {
                if (v[src + idx] != 0) out[dst + mt.times_variable(deg, idx, var)] = v[src + idx];
            }
            src += mt.count(deg);
        }
        dst += mt.count(static_cast<unsigned>(t + 1 - e));
    }
    return out;
}

// Images of the basis of F_t under F -> previous module, built from degree t-1.
class DegreewiseMap {
public:
    DegreewiseMap(const FreeModule& source, const FreeModule& target, const MonomialTable& mt, PrimeField f)
        : source_(source), target_(target), mt_(mt), f_(f) {}

    // Advance to degree t (must be called with t = 0, 1, 2, ...).
    const std::vector<std::vector<std::uint32_t>>& advance(int t) {
        std::vector<std::vector<std::uint32_t>> rows;
        for (std::size_t g = 0; g < source_.gen_degree.size(); ++g) {
            const int e = source_.gen_degree[g];
            if (e > t) continue;
            if (e == t) {
                rows.push_back(source_.gen_image[g]);
                continue;
            }
            const auto deg = static_cast<unsigned>(t - e);
            const std::size_t prev_off = source_.offset(mt_, t - 1, g);
            for (const auto& mono : mt_.of_degree(deg)) {
                std::size_t var = 0;
                while (mono[var] == 0) ++var;
                Exponents lower = mono;
                --lower[var];
                const std::size_t prev_row = prev_off + mt_.index_of(lower);
                rows.push_back(times_variable(target_, mt_, t - 1, current_[prev_row], var));
            }
        }
        current_ = std::move(rows);
        return current_;
    }

private:
    const FreeModule& source_;
    const FreeModule& target_;
    const MonomialTable& mt_;
    PrimeField f_;
    std::vector<std::vector<std::uint32_t>> current_;
};

} // namespace

BettiTable brute_force_betti(const PointSet& points, std::size_t max_dim) {
    if (points.size() == 0) throw InvalidPointSet("brute_force_betti: empty point set");
    const PrimeField& f = points.field();
    const std::size_t n = points.r() + 1;
    const int reg = static_cast<int>(hilbert_regularity(points));
    const int top = reg + static_cast<int>(n) + 1;
    const MonomialTable mt(points.r(), static_cast<unsigned>(top + 1));

    BettiTable table(n + 1, static_cast<std::size_t>(reg) + 2);
    table.set(0, 0, 1);
    table.prime = f.modulus();
    table.gamma = points.size();
    table.r = points.r();
    for (int j = 0; j <= reg + 1; ++j) table.hilbert.push_back(hilbert_function(points, static_cast<unsigned>(j)));

    FreeModule prev_prev;  // F_{i-2}; unused for i = 1
    FreeModule prev;       // F_{i-1}
    prev.gen_degree = {0};
    prev.gen_image = {{}};

    for (std::size_t i = 1; i <= n; ++i) {
        FreeModule current;
        DegreewiseMap map(prev, prev_prev, mt, f);
        std::vector<std::vector<std::uint32_t>> syz_prev;  // basis of K_i in degree t-1
        const int t_max = static_cast<int>(i) + reg + 1;
        for (int t = 0; t <= t_max; ++t) {
            const std::size_t dim_t = prev.dim(mt, t);
            if (dim_t > max_dim) {
                throw ResourceLimit("brute_force_betti: free module of dimension " + std::to_string(dim_t) +
                                    " in degree " + std::to_string(t));
            }
            // K_i in degree t: kernel of F_{i-1,t} -> F_{i-2,t} (or -> S(Gamma)_t).
            std::vector<std::vector<std::uint32_t>> syz;
            if (i == 1) {
                syz = nullspace(evaluation_matrix(points, static_cast<unsigned>(t)).transpose());
            } else {
                const auto& rows = map.advance(t);
                const std::size_t cols = prev_prev.dim(mt, t);
                if (rows.empty()) {
                    syz.clear();
                } else if (cols == 0) {
                    for (std::size_t k = 0; k < rows.size(); ++k) {
                        std::vector<std::uint32_t> e(rows.size(), 0);
                        e[k] = 1;
                        syz.push_back(std::move(e));
                    }
                } else {
                    syz = nullspace(Matrix::from_rows(f, rows, cols).transpose());
                }
            }
            if (dim_t == 0 || syz.empty()) {
                syz_prev = std::move(syz);
                continue;
            }
            IncrementalSpan span(f, dim_t);
            for (const auto& v : syz_prev)
                for (std::size_t var = 0; var < n; ++var) span.add(times_variable(prev, mt, t - 1, v, var));
            std::size_t fresh = 0;
            for (const auto& v : syz) {
                if (span.add(v)) {
                    current.gen_degree.push_back(t);
                    current.gen_image.push_back(v);
                    ++fresh;
                }
            }
            if (fresh > 0) {
                const int j = t - static_cast<int>(i);
                if (j < 0 || j > reg + 1) throw std::logic_error("brute_force_betti: syzygy outside the expected range");
                table.set(i, static_cast<std::size_t>(j), fresh);
            }
            syz_prev = std::move(syz);
        }
        prev_prev = std::move(prev);
        prev = std::move(current);
    }
    return table;
}

int regularity(const BettiTable& table) {
    for (std::size_t j = table.rows(); j-- > 0;)
        if (!table.row_is_zero(j)) return static_cast<int>(j);
    return -1;
}

std::string render_betti(const BettiTable& table) {
    std::size_t last = table.columns();
    while (last > 0) {
        bool zero = true;
        for (std::size_t j = 0; j < table.rows(); ++j) zero = zero && table.at(last - 1, j) == 0;
        if (!zero) break;
        --last;
    }
    const int reg = regularity(table);
    std::vector<std::string> lines;
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> labels;
    labels.emplace_back("");
    labels.emplace_back("total:");
    cells.emplace_back();
    cells.emplace_back();
    for (std::size_t i = 0; i < last; ++i) {
        cells[0].push_back(std::to_string(i));
        std::size_t total = 0;
        for (std::size_t j = 0; j < table.rows(); ++j) total += table.at(i, j);
        cells[1].push_back(std::to_string(total));
    }
    for (int j = 0; j <= reg; ++j) {
        labels.push_back(std::to_string(j) + ":");
        cells.emplace_back();
        for (std::size_t i = 0; i < last; ++i) {
            const std::size_t v = table.at(i, static_cast<std::size_t>(j));
            cells.back().push_back(v == 0 ? "." : std::to_string(v));
        }
    }
    std::size_t label_w = 0;
    for (const auto& l : labels) label_w = std::max(label_w, l.size());
    std::vector<std::size_t> width(last, 1);
    for (const auto& row : cells)
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    std::ostringstream os;
    for (std::size_t k = 0; k < cells.size(); ++k) {
        os << std::setw(static_cast<int>(label_w)) << labels[k];
        for (std::size_t i = 0; i < cells[k].size(); ++i) os << ' ' << std::setw(static_cast<int>(width[i])) << cells[k][i];
        os << '\n';
    }
    return os.str();
}

std::string betti_csv(const BettiTable& table) {
    std::ostringstream os;
    os << "row";
    for (std::size_t i = 0; i < table.columns(); ++i) os << ",b" << i;
    os << '\n';
    for (std::size_t j = 0; j < table.rows(); ++j) {
        os << j;
        for (std::size_t i = 0; i < table.columns(); ++i) os << ',' << table.at(i, j);
        os << '\n';
    }
    return os.str();
}

} // namespace bettilab
