#include "manin/local.hpp"

#include <algorithm>
#include <stdexcept>

#include "manin/series.hpp"

namespace manin {

Rational dens(const ExpVec7& n, const FieldCtx& F) {
    long long q = F.q();
    if (q > 16) throw std::invalid_argument("dens: field too large for exhaustive loop");
    for (int i = 0; i < 7; ++i)
        if (n[i] != 0 && n[i] != 1) throw std::invalid_argument("dens: pattern must be binary");

    // x0 never enters the equation
    long long x0_factor = n[0] ? 1 : q;

    long long count = 0;
    int xmax[3], ymax[3];
    for (int i = 0; i < 3; ++i) {
        xmax[i] = n[1 + i] ? 1 : (int)q;
        ymax[i] = n[4 + i] ? 1 : (int)q;
    }
    for (int x1 = 0; x1 < xmax[0]; ++x1)
        for (int x2 = 0; x2 < xmax[1]; ++x2)
            for (int x3 = 0; x3 < xmax[2]; ++x3)
                for (int y1 = 0; y1 < ymax[0]; ++y1)
                    for (int y2 = 0; y2 < ymax[1]; ++y2)
                        for (int y3 = 0; y3 < ymax[2]; ++y3) {
                            int s = F.add(F.add(F.mul(x1, y1), F.mul(x2, y2)), F.mul(x3, y3));
                            if (s == 0) ++count;
                        }
    return Rational(x0_factor * count) / Rational(int_pow(q, 6));
}

Rational fact_closed(const ExpVec7& n, long long qv) {
    std::vector<int> nu = {n[1] + n[4], n[2] + n[5], n[3] + n[6]};
    Rational qinv = Rational(1) / Rational(qv);
    Rational val = F_tilde_closed(nu, Rational(qv)).eval({qinv, qinv, qinv});
    long long esum = n[0] + nu[0] + nu[1] + nu[2];
    Rational pre = Rational(1) / (Rational(1) - qinv * qinv);
    return pre * q_pow(qv, -esum) * val;
}

Rational fact_sum(const ExpVec7& n, long long qv) {
    // S(a) = sum_{m_i >= a_i} q^{min m - sum m}, evaluated exactly by writing
    // q^{min m} = 1 + sum_{k>=1} (q^k - q^{k-1}) [min m >= k]; each slice is
    // a product of geometric series, and the k > max(a) slices close to a
    // geometric tail.
    int a[3] = {n[1] + n[4], n[2] + n[5], n[3] + n[6]};
    int A = std::max({a[0], a[1], a[2]});
    Rational qinv = Rational(1) / Rational(qv);
    Rational geom = Rational(1) / (Rational(1) - qinv); // sum_{m>=0} q^{-m}
    auto slice = [&](int b0, int b1, int b2) {
        // sum over m_i >= b_i of q^{-sum m}
        return q_pow(qv, -(long long)(b0 + b1 + b2)) * geom * geom * geom;
    };
    Rational S = slice(a[0], a[1], a[2]);
    for (int k = 1; k <= A; ++k) {
        Rational w = q_pow(qv, k) - q_pow(qv, k - 1);
        S += w * slice(std::max(a[0], k), std::max(a[1], k), std::max(a[2], k));
    }
    // k >= A+1: slice(k,k,k) = q^{-3k} geom^3, weight (1-1/q) q^k
    // tail = geom^3 (1-1/q) sum_{k>A} q^{-2k}
    Rational tail = geom * geom * geom * (Rational(1) - qinv)
                    * q_pow(qv, -2LL * (A + 1)) / (Rational(1) - qinv * qinv);
    S += tail;
    Rational pre = (Rational(1) - qinv) * (Rational(1) - qinv) * (Rational(1) - qinv);
    return pre * q_pow(qv, -(long long)n[0]) * S;
}

long long s_count_torsor(const FieldCtx& F) {
    long long q = F.q();
    if (q > 16) throw std::invalid_argument("s_count_torsor: field too large");
    long long raw = 0;
    long long total = 1;
    for (int i = 0; i < 7; ++i) total *= q;
    int x[7];
    for (long long idx = 0; idx < total; ++idx) {
        long long t = idx;
        for (int i = 0; i < 7; ++i) { x[i] = (int)(t % q); t /= q; }
        int s = F.add(F.add(F.mul(x[1], x[4]), F.mul(x[2], x[5])), F.mul(x[3], x[6]));
        if (s != 0) continue;
        bool semistable = false;
        for (uint8_t mask : surface::kChartMasks) {
            bool all_nonzero = true;
            for (int i = 0; i < 7; ++i)
                if ((mask & (1u << i)) && x[i] == 0) { all_nonzero = false; break; }
            if (all_nonzero) { semistable = true; break; }
        }
        if (semistable) ++raw;
    }
    long long torus = (q - 1) * (q - 1) * (q - 1) * (q - 1);
    if (raw % torus != 0) throw std::logic_error("s_count_torsor: torus orbit division not exact");
    return raw / torus;
}

LocalReport verify_local(const FieldCtx& F) {
    long long q = F.q();
    if (q > 9) throw std::invalid_argument("verify_local: dens sum limited to q_v <= 9");
    MoebiusTable mu;
    LocalReport rep;
    rep.dens_sum = 0;
    rep.fact_total = 0;
    for (unsigned m = 0; m < 128; ++m) {
        int w = mu.mu0(m);
        if (w == 0) continue;
        ExpVec7 n;
        for (int i = 0; i < 7; ++i) n[i] = (m >> i) & 1;
        rep.dens_sum += w * dens(n, F);
        rep.fact_total += w * fact_closed(n, q);
    }
    rep.surface_points = s_count_torsor(F);
    Rational om = Rational(q - 1) / Rational(q);
    rep.point_side = om * om * om * om * Rational(rep.surface_points) / Rational(q * q);
    rep.pass = (rep.dens_sum == rep.fact_total) && (rep.fact_total == rep.point_side);
    return rep;
}

} // namespace manin
