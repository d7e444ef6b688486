#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "manin/surface.hpp"

namespace manin {

using ExpVec7 = std::array<int, 7>;

/* The Moebius weight mu0 on {0,1}^7 inverting the chart-membership indicator,
 * extended multiplicatively over closed points to 7-tuples of effective
 * divisors.  The 128-entry table is built once at construction; divisor
 * evaluation only walks joint supports (it sits in the hot loop of the
 * Moebius counter).
 */
class MoebiusTable {
public:
    // chart family as bitmasks over the generator order; defaults to the
    // seven charts of S
    explicit MoebiusTable(std::vector<uint8_t> chart_masks = {
        surface::kChartMasks.begin(), surface::kChartMasks.end()});

    // min over charts of the chart-sum of n is zero
    bool in_01S(unsigned mask) const { return indicator_[mask]; }
    bool in_01S(const ExpVec7& n) const;

    int mu0(unsigned mask) const { return table_[mask]; }
    int mu0(const ExpVec7& n) const; // 0 when any entry >= 2

    long long mu_div(const DivTuple7& E) const;

    // exponent vectors with nonzero mu0, as masks
    const std::vector<unsigned>& support() const { return support_; }

private:
    std::array<bool, 128> indicator_{};
    std::array<int, 128> table_{};
    std::vector<unsigned> support_;
};

} // namespace manin
