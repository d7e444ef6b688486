#include "manin/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace manin {

TruncSeries::TruncSeries(int r, std::array<int, 3> shape) : r_(r), shape_(shape) {
    if (r < 1 || r > 3) throw std::invalid_argument("TruncSeries: 1..3 variables");
    for (int i = r; i < 3; ++i) shape_[i] = 1;
    c_.assign((size_t)shape_[0] * shape_[1] * shape_[2], Rational(0));
}

TruncSeries TruncSeries::one(int r, std::array<int, 3> shape) {
    TruncSeries s(r, shape);
    s.at(0, 0, 0) = 1;
    return s;
}

TruncSeries TruncSeries::mul(const TruncSeries& o) const {
    if (o.r_ != r_ || o.shape_ != shape_)
        throw std::invalid_argument("TruncSeries::mul: shape mismatch");
    TruncSeries out(r_, shape_);
    for (int i = 0; i < shape_[0]; ++i)
        for (int j = 0; j < shape_[1]; ++j)
            for (int k = 0; k < shape_[2]; ++k) {
                const Rational& a = at(i, j, k);
                if (a == 0) continue;
                for (int i2 = 0; i + i2 < shape_[0]; ++i2)
                    for (int j2 = 0; j + j2 < shape_[1]; ++j2)
                        for (int k2 = 0; k + k2 < shape_[2]; ++k2) {
                            const Rational& b = o.at(i2, j2, k2);
                            if (b == 0) continue;
                            out.at(i + i2, j + j2, k + k2) += a * b;
                        }
            }
    return out;
}

TruncSeries TruncSeries::add(const TruncSeries& o) const {
    TruncSeries out = *this;
    for (size_t i = 0; i < c_.size(); ++i) out.c_[i] += o.c_[i];
    return out;
}

TruncSeries TruncSeries::sub(const TruncSeries& o) const {
    TruncSeries out = *this;
    for (size_t i = 0; i < c_.size(); ++i) out.c_[i] -= o.c_[i];
    return out;
}

Rational TruncSeries::eval(const std::array<Rational, 3>& t) const {
    Rational total = 0;
    for (int i = 0; i < shape_[0]; ++i)
        for (int j = 0; j < shape_[1]; ++j)
            for (int k = 0; k < shape_[2]; ++k) {
                const Rational& a = at(i, j, k);
                if (a == 0) continue;
                Rational term = a;
                for (int e = 0; e < i; ++e) term *= t[0];
                for (int e = 0; e < j; ++e) term *= t[1];
                for (int e = 0; e < k; ++e) term *= t[2];
                total += term;
            }
    return total;
}

TruncSeries zeta_p1(long long q, int trunc) {
    TruncSeries s(1, {trunc + 1, 1, 1});
    for (int d = 0; d <= trunc; ++d)
        s.at(d) = Rational(int_pow(q, d + 1) - 1) / Rational(q - 1);
    return s;
}

TruncSeries F_nu_direct(const std::vector<int>& nu, const Rational& rho, int trunc) {
    int r = (int)nu.size();
    std::array<int, 3> shape = {trunc + 1, r >= 2 ? trunc + 1 : 1, r >= 3 ? trunc + 1 : 1};
    TruncSeries s(r, shape);
    for (int i = 0; i < shape[0]; ++i)
        for (int j = 0; j < shape[1]; ++j)
            for (int k = 0; k < shape[2]; ++k) {
                int n[3] = {i, j, k};
                int m = n[0] + nu[0];
                for (int v = 1; v < r; ++v) m = std::min(m, n[v] + nu[v]);
                Rational c = 1;
                for (int e = 0; e < m; ++e) c *= rho;
                s.at(i, j, k) = c;
            }
    return s;
}

Rational F_tilde_coeff(const std::vector<int>& nu, const Rational& rho,
                       const std::vector<int>& n) {
    int r = (int)nu.size();
    int m = n[0] + nu[0];
    for (int v = 1; v < r; ++v) m = std::min(m, n[v] + nu[v]);
    bool I1_full = true, I1_empty = true, I2_empty = true;
    bool K_empty = true, I2_K_overlap = false;
    for (int v = 0; v < r; ++v) {
        bool in_I1 = n[v] >= 1;
        bool in_I2 = n[v] >= 2;
        bool in_K = in_I1 && n[v] + nu[v] >= m + 1;
        if (in_I1) I1_empty = false; else I1_full = false;
        if (in_I2) I2_empty = false;
        if (in_K) K_empty = false;
        if (in_I2 && in_K) I2_K_overlap = true;
    }
    auto rho_pow = [&](int e) {
        Rational c = 1;
        for (int i = 0; i < e; ++i) c *= rho;
        for (int i = 0; i > e; --i) c /= rho;
        return c;
    };
    if (!I1_full) {
        if (I1_empty) return rho_pow(m);
        if (K_empty) return rho_pow(m) - rho_pow(m - 1);
        return 0;
    }
    // all n_v >= 1, so m >= 1 and rho^{m-1} is well defined
    if (I2_K_overlap) return 0;
    if (I2_empty && !K_empty) return -rho_pow(m);
    if (!I2_empty && K_empty) return 0;
    if (!I2_empty && !K_empty) return rho_pow(m - 1) - rho_pow(m);
    return -rho_pow(m - 1); // I2 and K both empty
}

TruncSeries F_tilde_closed(const std::vector<int>& nu, const Rational& rho) {
    int r = (int)nu.size();
    int maxnu = *std::max_element(nu.begin(), nu.end());
    int sz = maxnu + 2; // degree bound max(nu)+1 in each variable
    std::array<int, 3> shape = {sz, r >= 2 ? sz : 1, r >= 3 ? sz : 1};
    TruncSeries s(r, shape);
    for (int i = 0; i < shape[0]; ++i)
        for (int j = 0; j < shape[1]; ++j)
            for (int k = 0; k < shape[2]; ++k) {
                std::vector<int> n = {i, j, k};
                n.resize(r);
                s.at(i, j, k) = F_tilde_coeff(nu, rho, n);
            }
    return s;
}

BigInt gcd_sum_brute(const FieldCtx& F, const std::vector<DivisorP1>& D,
                     const std::vector<int>& d) {
    int r = (int)D.size();
    if (r < 1 || r > 2) throw std::invalid_argument("gcd_sum_brute: r must be 1 or 2");
    int total_deg = 0;
    for (int x : d) total_deg += x;
    if (total_deg > 8) throw std::invalid_argument("gcd_sum_brute: degree budget exceeded");

    std::vector<std::vector<DivisorP1>> G(r);
    for (int i = 0; i < r; ++i) G[i] = enumerate_divisors(F, d[i]);

    BigInt total = 0;
    if (r == 1) {
        for (const DivisorP1& g : G[0])
            total += int_pow(F.q(), (D[0] + g).degree());
    } else {
        for (const DivisorP1& g0 : G[0]) {
            DivisorP1 a = D[0] + g0;
            for (const DivisorP1& g1 : G[1])
                total += int_pow(F.q(), divisor_gcd(a, D[1] + g1).degree());
        }
    }
    return total;
}

BigInt gcd_sum_euler(const FieldCtx& F, const std::vector<DivisorP1>& D,
                     const std::vector<int>& d, int cutoff) {
    int r = (int)D.size();
    int total_deg = 0;
    for (int x : d) total_deg += x;
    if (cutoff < total_deg) throw std::invalid_argument("gcd_sum_euler: cutoff too small");

    std::array<int, 3> shape = {d[0] + 1, r >= 2 ? d[1] + 1 : 1, r >= 3 ? d[2] + 1 : 1};
    TruncSeries prod = TruncSeries::one(r, shape);

    // every place of degree <= cutoff, plus the support of D (whose factors
    // have nonunit constant terms q_v^{min nu_i})
    int max_needed = cutoff;
    for (const DivisorP1& Di : D)
        for (const auto& [P, k] : Di.mult) max_needed = std::max(max_needed, P.deg);
    auto pts = closed_points(F, max_needed);

    for (const auto& level : pts)
        for (const ClosedPoint& P : level) {
            std::vector<int> nu(r);
            bool trivial = true;
            for (int i = 0; i < r; ++i) {
                nu[i] = valuation(D[i], P);
                if (nu[i] != 0) trivial = false;
            }
            if (trivial && P.deg > cutoff) continue;
            BigInt qv = int_pow(F.q(), P.deg);
            TruncSeries factor(r, shape);
            for (int i = 0; i < shape[0]; ++i)
                for (int j = 0; j < shape[1]; ++j)
                    for (int k = 0; k < shape[2]; ++k) {
                        int n[3] = {i, j, k};
                        bool ok = true;
                        int m = -1;
                        for (int v = 0; v < r; ++v) {
                            if (n[v] % P.deg != 0) { ok = false; break; }
                            int e = n[v] / P.deg + nu[v];
                            m = (m < 0) ? e : std::min(m, e);
                        }
                        if (!ok) continue;
                        BigInt c = 1;
                        for (int e = 0; e < m; ++e) c *= qv;
                        factor.at(i, j, k) = Rational(c);
                    }
            prod = prod.mul(factor);
        }

    Rational c = prod.at(d[0], r >= 2 ? d[1] : 0, r >= 3 ? d[2] : 0);
    if (denominator(c) != 1) throw std::logic_error("gcd_sum_euler: non-integer coefficient");
    return numerator(c);
}

Rational main_term_residue(long long q) {
    // (1-qT)^4 Z(q^2 T^3) Z(q T^2)^3
    //   = 1 / ((1 - q^2 T^3)(1 + qT + q^2 T^2) (1 - q T^2)^3 (1 + qT)^3)
    // at T = 1/q: 1 / ((1 - 1/q) * 3 * (1 - 1/q)^3 * 8)
    Rational one_minus = Rational(q - 1) / Rational(q);
    Rational denom = one_minus * 3;
    denom *= one_minus * one_minus * one_minus * 8;
    return Rational(1) / denom;
}

double tauber_fit(const std::vector<double>& coeffs, int k, double alpha_inv,
                  int tail_start) {
    if (coeffs.size() < 4) throw std::invalid_argument("tauber_fit: need >= 4 coefficients");
    if (tail_start < 0) tail_start = (int)coeffs.size() / 2;
    if (tail_start >= (int)coeffs.size()) throw std::invalid_argument("tauber_fit: empty tail");
    double sxy = 0, sxx = 0;
    for (int n = tail_start; n < (int)coeffs.size(); ++n) {
        double x = std::pow((double)n, k - 1) * std::pow(alpha_inv, n);
        sxy += coeffs[n] * x;
        sxx += x * x;
    }
    return sxy / sxx;
}

} // namespace manin
