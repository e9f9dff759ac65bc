#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "bettilab/betti.hpp"

namespace bettilab {

/// u = 1 + floor((gamma + g - 1) / d), so P(u-1) <= gamma < P(u) for the
/// Hilbert polynomial P(t) = dt + 1 - g.
[[nodiscard]] int u_value(std::int64_t gamma, std::int64_t g, std::int64_t d);

/// b_{i+1,u-1} - b_{i,u} = chi(wedge^i M_V (x) L^u(-Gamma)), from the rank
/// C(r,i) and total degree -C(r-1,i-1) d of wedge^i M_V.
[[nodiscard]] std::int64_t delta(std::int64_t i, std::int64_t g, std::int64_t r, std::int64_t d, std::int64_t gamma,
                                 std::int64_t u);

/// max{d - r(du - gamma + 1 - g), 0}.
[[nodiscard]] std::int64_t igc_generator_count(std::int64_t g, std::int64_t r, std::int64_t d, std::int64_t gamma);

struct MrcPrediction {
    std::int64_t g = 0;
    std::int64_t r = 0;
    std::int64_t d = 0;
    std::int64_t gamma = 0;
    int u = 0;
    std::vector<std::int64_t> delta;     // i = 0..r
    std::vector<std::int64_t> upper;     // b_{i+1,u-1} = max(delta_i, 0)
    std::vector<std::int64_t> lower;     // b_{i,u} = max(-delta_i, 0)
    std::int64_t igc_generators = 0;
    int ideal_regularity = -1;           // reg(I_C) if known
    bool sandwich_ok = false;            // P(u-1) <= gamma < P(u)
    bool precondition_ok = true;         // gamma >= d reg(I_C) - g + 1, when reg is known

    [[nodiscard]] nlohmann::json to_json() const;
};

/// ideal_regularity is reg(I_C) = reg(S(C)) + 1; pass -1 when unknown.
[[nodiscard]] MrcPrediction predict(std::int64_t g, std::int64_t r, std::int64_t d, std::int64_t gamma,
                                    int ideal_regularity = -1);

class IncompleteTable : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct DiagonalEntry {
    std::size_t i = 0;
    std::size_t upper = 0;  // b_{i+1,u-1}
    std::size_t lower = 0;  // b_{i,u}
};

struct Verdict {
    bool mrc_pass = false;
    bool igc_pass = false;
    bool rows_match_prediction = false;  // rows u-1 and u equal max(+-delta)
    bool differences_match = false;      // b_{i+1,u-1} - b_{i,u} = delta_i for all i
    std::vector<DiagonalEntry> failing;  // nonzero diagonal products
    std::vector<DiagonalEntry> diagonals;
    bool low_rows_checked = false;
    bool low_rows_match = true;          // rows <= u-2 against the curve table
    bool high_rows_zero = true;          // rows >= u+1

    [[nodiscard]] nlohmann::json to_json() const;
};

/// The table must hold rows through u and columns through r+1.
[[nodiscard]] Verdict verdict(const BettiTable& table, const MrcPrediction& pred, const BettiTable* curve_table = nullptr);

} // namespace bettilab
