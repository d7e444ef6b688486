#include "manin/moebius.hpp"

#include <bit>
#include <set>
#include <stdexcept>

namespace manin {

MoebiusTable::MoebiusTable(std::vector<uint8_t> chart_masks) {
    for (unsigned m = 0; m < 128; ++m) {
        bool in = false;
        for (uint8_t chart : chart_masks)
            if ((m & chart) == 0) { in = true; break; }
        indicator_[m] = in;
    }
    // Boolean Moebius transform: mu0(n) = sum_{m <= n} (-1)^{|n|-|m|} ind(m)
    for (unsigned n = 0; n < 128; ++n) {
        int acc = 0;
        // iterate submasks of n
        unsigned m = n;
        for (;;) {
            int sign = (std::popcount(n) - std::popcount(m)) % 2 ? -1 : 1;
            acc += sign * (indicator_[m] ? 1 : 0);
            if (m == 0) break;
            m = (m - 1) & n;
        }
        table_[n] = acc;
        if (acc != 0) support_.push_back(n);
    }
}

bool MoebiusTable::in_01S(const ExpVec7& n) const {
    unsigned mask = 0;
    for (int i = 0; i < 7; ++i) {
        if (n[i] != 0 && n[i] != 1) throw std::invalid_argument("in_01S: entries must be 0/1");
        if (n[i]) mask |= 1u << i;
    }
    return indicator_[mask];
}

int MoebiusTable::mu0(const ExpVec7& n) const {
    unsigned mask = 0;
    for (int i = 0; i < 7; ++i) {
        if (n[i] >= 2) return 0;
        if (n[i]) mask |= 1u << i;
    }
    return table_[mask];
}

long long MoebiusTable::mu_div(const DivTuple7& E) const {
    std::set<ClosedPoint> support;
    for (const DivisorP1& D : E)
        for (const auto& [P, k] : D.mult) support.insert(P);
    long long prod = 1;
    for (const ClosedPoint& P : support) {
        ExpVec7 n;
        for (int i = 0; i < 7; ++i) n[i] = valuation(E[i], P);
        int m = mu0(n);
        if (m == 0) return 0;
        prod *= m;
    }
    return prod;
}

} // namespace manin
