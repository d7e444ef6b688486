#include "manin/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace manin {

void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_add(const FieldCtx& F, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        int x = i < a.size() ? a[i] : 0;
        int y = i < b.size() ? b[i] : 0;
        r[i] = F.add(x, y);
    }
    poly_trim(r);
    return r;
}

Poly poly_sub(const FieldCtx& F, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        int x = i < a.size() ? a[i] : 0;
        int y = i < b.size() ? b[i] : 0;
        r[i] = F.sub(x, y);
    }
    poly_trim(r);
    return r;
}

Poly poly_mul(const FieldCtx& F, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    poly_trim(r);
    return r;
}

void poly_divmod(const FieldCtx& F, const Poly& a, const Poly& b, Poly& q, Poly& r) {
    if (b.empty()) throw std::domain_error("poly division by zero");
    r = a;
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    int db = poly_deg(b);
    int lead_inv = F.inv(b.back());
    for (int i = poly_deg(r); i >= db; --i) {
        if ((size_t)i >= r.size() || r[i] == 0) continue;
        int c = F.mul(r[i], lead_inv);
        q[i - db] = c;
        for (int j = 0; j <= db; ++j)
            r[i - db + j] = F.sub(r[i - db + j], F.mul(c, b[j]));
    }
    poly_trim(q);
    poly_trim(r);
}

Poly poly_mod(const FieldCtx& F, const Poly& a, const Poly& b) {
    Poly q, r;
    poly_divmod(F, a, b, q, r);
    return r;
}

Poly poly_monic(const FieldCtx& F, const Poly& a) {
    if (a.empty()) return a;
    Poly r = a;
    int inv = F.inv(r.back());
    for (int& c : r) c = F.mul(c, inv);
    return r;
}

Poly poly_gcd(const FieldCtx& F, Poly a, Poly b) {
    while (!b.empty()) {
        Poly r = poly_mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(F, a);
}

bool poly_is_irreducible(const FieldCtx& F, const Poly& a) {
    int deg = poly_deg(a);
    if (deg <= 0) return false;
    for (int d = 1; 2 * d <= deg; ++d) {
        unsigned long long cnt = 1;
        for (int i = 0; i < d; ++i) cnt *= F.q();
        for (unsigned long long idx = 0; idx < cnt; ++idx) {
            Poly div(d + 1);
            unsigned long long t = idx;
            for (int i = 0; i < d; ++i) { div[i] = (int)(t % F.q()); t /= F.q(); }
            div[d] = 1;
            if (poly_mod(F, a, div).empty()) return false;
        }
    }
    return true;
}

std::vector<std::vector<Poly>> monic_irreducibles(const FieldCtx& F, int max_deg) {
    std::vector<std::vector<Poly>> out(max_deg);
    for (int e = 1; e <= max_deg; ++e) {
        unsigned long long cnt = 1;
        for (int i = 0; i < e; ++i) cnt *= F.q();
        for (unsigned long long idx = 0; idx < cnt; ++idx) {
            Poly cand(e + 1);
            unsigned long long t = idx;
            for (int i = 0; i < e; ++i) { cand[i] = (int)(t % F.q()); t /= F.q(); }
            cand[e] = 1;
            // trial-divide only by the already-collected lower irreducibles
            bool irr = true;
            for (int d = 1; 2 * d <= e && irr; ++d)
                for (const Poly& pi : out[d - 1])
                    if (poly_mod(F, cand, pi).empty()) { irr = false; break; }
            if (irr) out[e - 1].push_back(cand);
        }
    }
    return out;
}

std::vector<std::vector<ClosedPoint>> closed_points(const FieldCtx& F, int max_deg) {
    auto irr = monic_irreducibles(F, max_deg);
    std::vector<std::vector<ClosedPoint>> out(max_deg);
    out[0].push_back(ClosedPoint{true, {}, 1});
    for (int e = 1; e <= max_deg; ++e)
        for (const Poly& pi : irr[e - 1])
            out[e - 1].push_back(ClosedPoint{false, pi, e});
    return out;
}

long long closed_point_count(long long q, int e) {
    if (e == 1) return q + 1;
    // necklace count (1/e) sum_{m|e} mu(m) q^{e/m}
    long long total = 0;
    for (int m = 1; m <= e; ++m) {
        if (e % m != 0) continue;
        // squarefree factor check / Moebius of m
        int mm = m, mu = 1;
        for (int d = 2; d * d <= mm; ++d) {
            if (mm % d == 0) {
                mm /= d;
                mu = -mu;
                if (mm % d == 0) { mu = 0; break; }
            }
        }
        if (mu != 0 && mm > 1) mu = -mu;
        if (mu == 0) continue;
        long long pw = 1;
        for (int i = 0; i < e / m; ++i) pw *= q;
        total += mu * pw;
    }
    return total / e;
}

int DivisorP1::degree() const {
    int d = 0;
    for (const auto& [P, k] : mult) d += P.deg * k;
    return d;
}

void DivisorP1::add_point(const ClosedPoint& P, int k) {
    if (k == 0) return;
    mult[P] += k;
    if (mult[P] == 0) mult.erase(P);
}

DivisorP1 operator+(const DivisorP1& a, const DivisorP1& b) {
    DivisorP1 r = a;
    for (const auto& [P, k] : b.mult) r.add_point(P, k);
    return r;
}

DivisorP1 divisor_gcd(const DivisorP1& a, const DivisorP1& b) {
    DivisorP1 r;
    for (const auto& [P, k] : a.mult) {
        auto it = b.mult.find(P);
        if (it != b.mult.end()) r.add_point(P, std::min(k, it->second));
    }
    return r;
}

int valuation(const DivisorP1& D, const ClosedPoint& P) {
    auto it = D.mult.find(P);
    return it == D.mult.end() ? 0 : it->second;
}

BinaryForm form_from_poly(const FieldCtx&, const Poly& p, int d) {
    BinaryForm f;
    f.d = d;
    f.coeffs.assign(d + 1, 0);
    for (size_t i = 0; i < p.size(); ++i) f.coeffs[i] = p[i];
    return f;
}

BinaryForm form_mul(const FieldCtx& F, const BinaryForm& a, const BinaryForm& b) {
    BinaryForm r;
    r.d = a.d + b.d;
    r.coeffs.assign(r.d + 1, 0);
    for (int i = 0; i <= a.d; ++i) {
        if (a.coeffs[i] == 0) continue;
        for (int j = 0; j <= b.d; ++j)
            r.coeffs[i + j] = F.add(r.coeffs[i + j], F.mul(a.coeffs[i], b.coeffs[j]));
    }
    return r;
}

namespace {
// degree in X of the dehomogenization; -1 for the zero form
int x_degree(const BinaryForm& a) {
    for (int i = a.d; i >= 0; --i)
        if (a.coeffs[i] != 0) return i;
    return -1;
}
Poly dehomogenize(const BinaryForm& a) {
    Poly p(a.coeffs.begin(), a.coeffs.begin() + (x_degree(a) + 1));
    return p;
}
} // namespace

BinaryForm form_gcd(const FieldCtx& F, const BinaryForm& a, const BinaryForm& b) {
    if (a.is_zero() || b.is_zero()) throw std::domain_error("form_gcd of zero form");
    int inf = std::min(a.d - x_degree(a), b.d - x_degree(b));
    Poly g = poly_gcd(F, dehomogenize(a), dehomogenize(b));
    return form_from_poly(F, g, poly_deg(g) + inf);
}

int form_valuation(const FieldCtx& F, const BinaryForm& a, const ClosedPoint& P) {
    if (a.is_zero()) throw std::domain_error("valuation of zero form");
    if (P.at_infinity) return a.d - x_degree(a);
    Poly p = dehomogenize(a);
    int v = 0;
    for (;;) {
        Poly q, r;
        poly_divmod(F, p, P.minpoly, q, r);
        if (!r.empty()) break;
        ++v;
        p = std::move(q);
        if (p.empty()) break; // cannot happen for nonzero forms
    }
    return v;
}

DivisorP1 divisor_of(const FieldCtx& F, const BinaryForm& a) {
    if (a.is_zero()) throw std::domain_error("divisor of zero form");
    DivisorP1 D;
    int dx = x_degree(a);
    if (dx < a.d) D.add_point(ClosedPoint{true, {}, 1}, a.d - dx);
    Poly p = poly_monic(F, dehomogenize(a));
    // trial division by monic irreducibles of increasing degree
    for (int e = 1; poly_deg(p) > 0 && e <= poly_deg(p); ++e) {
        if (2 * e > poly_deg(p)) {
            // remainder is itself irreducible
            D.add_point(ClosedPoint{false, p, poly_deg(p)}, 1);
            p = {1};
            break;
        }
        unsigned long long cnt = 1;
        for (int i = 0; i < e; ++i) cnt *= F.q();
        for (unsigned long long idx = 0; idx < cnt && poly_deg(p) >= e; ++idx) {
            Poly cand(e + 1);
            unsigned long long t = idx;
            for (int i = 0; i < e; ++i) { cand[i] = (int)(t % F.q()); t /= F.q(); }
            cand[e] = 1;
            int v = 0;
            for (;;) {
                Poly q, r;
                poly_divmod(F, p, cand, q, r);
                if (!r.empty()) break;
                ++v;
                p = std::move(q);
            }
            if (v > 0) D.add_point(ClosedPoint{false, cand, e}, v);
        }
    }
    return D;
}

BinaryForm canonical_section(const FieldCtx& F, const DivisorP1& D) {
    Poly p = {1};
    int inf = 0;
    for (const auto& [P, k] : D.mult) {
        if (P.at_infinity) { inf = k; continue; }
        for (int i = 0; i < k; ++i) p = poly_mul(F, p, P.minpoly);
    }
    return form_from_poly(F, p, poly_deg(p) + inf);
}

BinaryForm form_from_index(const FieldCtx& F, int d, unsigned long long idx) {
    BinaryForm f;
    f.d = d;
    f.coeffs.assign(d + 1, 0);
    for (int i = 0; i <= d; ++i) {
        f.coeffs[i] = (int)(idx % F.q());
        idx /= F.q();
    }
    return f;
}

unsigned long long form_count(const FieldCtx& F, int d) {
    unsigned long long c = 1;
    for (int i = 0; i <= d; ++i) c *= F.q();
    return c;
}

std::vector<BinaryForm> normalized_forms(const FieldCtx& F, int d) {
    std::vector<BinaryForm> out;
    unsigned long long n = form_count(F, d);
    for (unsigned long long idx = 1; idx < n; ++idx) {
        BinaryForm f = form_from_index(F, d, idx);
        int lead = 0;
        for (int i = 0; i <= d; ++i)
            if (f.coeffs[i] != 0) { lead = f.coeffs[i]; break; }
        if (lead == 1) out.push_back(std::move(f));
    }
    return out;
}

std::vector<DivisorP1> enumerate_divisors(const FieldCtx& F, int d) {
    std::vector<DivisorP1> out;
    if (d == 0) {
        out.push_back(DivisorP1{});
        return out;
    }
    for (const BinaryForm& f : normalized_forms(F, d)) out.push_back(divisor_of(F, f));
    return out;
}

} // namespace manin
