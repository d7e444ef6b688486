#include "manin/surface.hpp"

#include <set>
#include <stdexcept>

namespace manin {
namespace surface {

DegreeVec7 lift_degrees(const DegreeVec4& d) {
    // f_i = d0 + sum_{j != i, j >= 1} d_j, forced by deg t_i = [F_i]
    DegreeVec7 out;
    for (int j = 0; j < 4; ++j) out[j] = d[j];
    int s = d[1] + d[2] + d[3];
    for (int i = 1; i <= 3; ++i) out[3 + i] = d[0] + s - d[i];
    return out;
}

int anticanonical_degree(const DegreeVec4& d) {
    return 3 * d[0] + 2 * (d[1] + d[2] + d[3]);
}

int psi(int i, const DegreeVec4& d, const std::array<int, 7>& Edeg) {
    if (i < 1 || i > 3) throw std::invalid_argument("psi: i must be 1..3");
    int v = d[0] + Edeg[0];
    for (int j = 1; j <= 3; ++j)
        if (j != i) v += d[j] + Edeg[j];
    return v - Edeg[3 + i];
}

int phi(int i, const DegreeVec4& d, const std::array<int, 7>& Edeg) {
    if (i < 1 || i > 3) throw std::invalid_argument("phi: i must be 1..3");
    int j = i % 3 + 1, k = j % 3 + 1; // the other two indices, cyclically
    return d[0] + d[i] + Edeg[0] + Edeg[i] - Edeg[3 + j] - Edeg[3 + k];
}

bool is_primitive(const DivTuple7& divs) {
    std::set<ClosedPoint> support;
    for (const DivisorP1& D : divs)
        for (const auto& [P, k] : D.mult) support.insert(P);
    for (const ClosedPoint& P : support) {
        int vals[7];
        for (int i = 0; i < 7; ++i) vals[i] = valuation(divs[i], P);
        bool some_chart_clean = false;
        for (uint8_t mask : kChartMasks) {
            int s = 0;
            for (int i = 0; i < 7; ++i)
                if (mask & (1u << i)) s += vals[i];
            if (s == 0) { some_chart_clean = true; break; }
        }
        if (!some_chart_clean) return false;
    }
    return true;
}

Rational cone_limit(int r, const std::vector<int>& exponents) {
    // each factor 1 - T^a = (1 - T)(1 + T + ... + T^{a-1}); the second factor
    // evaluates to a at T = 1, so full cancellation requires r = #exponents
    if ((int)exponents.size() != r)
        throw std::invalid_argument("cone_limit: pole order does not cancel");
    Rational denom = 1;
    for (int a : exponents) {
        if (a <= 0) throw std::invalid_argument("cone_limit: exponents must be positive");
        denom *= a;
    }
    return Rational(1) / denom;
}

Rational alpha_S() {
    return cone_limit(4, {3, 2, 2, 2});
}

} // namespace surface
} // namespace manin
