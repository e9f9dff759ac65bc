#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "bettilab/graded_module.hpp"
#include "bettilab/graded_points.hpp"

namespace bettilab {

/// Graded Betti numbers b[i][j] = dim Tor_i(M, F)_{i+j}, laid out Macaulay
/// style: column i, row j.
class BettiTable {
public:
    BettiTable() = default;
    BettiTable(std::size_t columns, std::size_t rows);

    [[nodiscard]] std::size_t columns() const noexcept { return b_.size(); }
    [[nodiscard]] std::size_t rows() const noexcept { return b_.empty() ? 0 : b_.front().size(); }
    /// Zero outside the stored range.
    [[nodiscard]] std::size_t at(std::size_t i, std::size_t j) const noexcept;
    void set(std::size_t i, std::size_t j, std::size_t value);
    [[nodiscard]] bool row_is_zero(std::size_t j) const noexcept;

    /// Entry equality on the union of both ranges (metadata ignored).
    [[nodiscard]] bool same_entries(const BettiTable& other) const noexcept;

    // Metadata carried into every report.
    std::uint32_t prime = 0;
    std::uint64_t seed = 0;
    std::size_t gamma = 0;
    std::size_t r = 0;
    std::vector<std::size_t> hilbert;  // h(j) for the rows computed

    [[nodiscard]] nlohmann::json to_json() const;
    static BettiTable from_json(const nlohmann::json& j);

private:
    std::vector<std::vector<std::size_t>> b_;  // b_[i][j]
};

/// Betti table of a point set from Koszul cohomology of S(Gamma). Rows run
/// through max(j_max, reg + 1), where reg is read off the Hilbert function,
/// so the last row is always zero. Columns 0..min(i_max, r+1).
[[nodiscard]] BettiTable betti_table(const PointSet& points, std::size_t i_max, int j_max = 0);
[[nodiscard]] inline BettiTable betti_table(const PointSet& points) { return betti_table(points, points.r() + 1, 0); }

/// Rows 0..rows-1 of the Betti table of an arbitrary graded module, which must
/// provide pieces through degree rows.
[[nodiscard]] BettiTable betti_table(const GradedModule& module, std::size_t rows);

class ResourceLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Independent oracle: builds a minimal free resolution of S(Gamma) degree by
/// degree (minimal generators of each syzygy module as a complement of
/// S_1 * lower-degree syzygies) and counts generators. Intended for gamma <= 30
/// and r <= 3; throws ResourceLimit past max_dim coordinates in any degree.
[[nodiscard]] BettiTable brute_force_betti(const PointSet& points, std::size_t max_dim = 6000);

/// Largest j with a nonzero entry in row j; -1 for the zero table.
[[nodiscard]] int regularity(const BettiTable& table);

/// Macaulay2-style diagram: header of column indices, a "total:" line, then
/// one line per row with '.' for zeros.
[[nodiscard]] std::string render_betti(const BettiTable& table);
/// One line per row: j,b0,b1,...
[[nodiscard]] std::string betti_csv(const BettiTable& table);

} // namespace bettilab
