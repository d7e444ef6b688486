#include "manin/heights.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

#include "manin/moebius.hpp"

namespace manin {

namespace {

double now_seconds() {
    using clock = std::chrono::steady_clock;
    static const clock::time_point t0 = clock::now();
    return std::chrono::duration<double>(clock::now() - t0).count();
}

// all d in N^4 with 3 d0 + 2 (d1+d2+d3) == n
std::vector<DegreeVec4> degree_vectors(int n) {
    std::vector<DegreeVec4> out;
    for (int d0 = 0; 3 * d0 <= n; ++d0) {
        int rem = n - 3 * d0;
        if (rem % 2 != 0) continue;
        int s = rem / 2;
        for (int d1 = 0; d1 <= s; ++d1)
            for (int d2 = 0; d1 + d2 <= s; ++d2)
                out.push_back({d0, d1, d2, s - d1 - d2});
    }
    return out;
}

struct RepForm {
    BinaryForm form;
    DivisorP1 div;
};

std::vector<RepForm> rep_forms(const FieldCtx& F, int d) {
    std::vector<RepForm> out;
    for (BinaryForm& f : normalized_forms(F, d)) {
        DivisorP1 D = divisor_of(F, f);
        out.push_back({std::move(f), std::move(D)});
    }
    return out;
}

// does the closed point divide the form given by coeffs[0..deg]?
bool point_divides(const FieldCtx& F, const ClosedPoint& P, const int* coeffs, int deg) {
    if (P.at_infinity) return coeffs[deg] == 0;
    int e = P.deg;
    int r[24] = {0};
    for (int i = deg; i >= 0; --i) {
        int t = r[e - 1];
        for (int j = e - 1; j >= 1; --j)
            r[j] = F.sub(r[j - 1], F.mul(t, P.minpoly[j]));
        r[0] = F.sub(coeffs[i], F.mul(t, P.minpoly[0]));
    }
    for (int j = 0; j < e; ++j)
        if (r[j] != 0) return false;
    return true;
}

struct EvalPoint {
    ClosedPoint P;
    bool vsb[3] = {false, false, false}; // does P divide s_i
    int p0_index = -1;                   // index into the degree <= d0 point list
};

/* Torsor count for a single degree vector, over a contiguous range of
 * s-triple representative indices.  Representatives are nonzero forms with
 * first nonzero coefficient 1; scaling the s_i and s0 by torus elements
 * permutes the t-solutions bijectively, so the sum over representatives
 * (with full t-enumeration) is exactly the primitive tuple count divided by
 * (q-1)^4.
 */
unsigned long long torsor_range(const FieldCtx& F, const DegreeVec4& d,
                                const std::vector<std::vector<RepForm>>& reps,
                                const std::vector<ClosedPoint>& p0list,
                                const std::vector<uint64_t>& s0_supp_masks,
                                unsigned long long lo, unsigned long long hi) {
    const int q = F.q();
    const int delta = d[0] + d[1] + d[2] + d[3];
    const size_t R2 = reps[2].size(), R3 = reps[3].size();
    int psi[3] = {delta - d[1], delta - d[2], delta - d[3]};
    int block_off[3] = {0, psi[0] + 1, psi[0] + psi[1] + 2};
    const int C = psi[0] + psi[1] + psi[2] + 3;

    unsigned long long total = 0;
    std::vector<int> cur(C), dig;
    std::vector<EvalPoint> pts;

    for (unsigned long long idx = lo; idx < hi; ++idx) {
        const RepForm& s1 = reps[1][idx / (R2 * R3)];
        const RepForm& s2 = reps[2][(idx / R3) % R2];
        const RepForm& s3 = reps[3][idx % R3];

        // a point on all three s_i kills every chart regardless of t and s0
        if (divisor_gcd(divisor_gcd(s1.div, s2.div), s3.div).degree() > 0) continue;

        // evaluation points: the s-supports plus every possible s0-support point
        pts.clear();
        std::set<ClosedPoint> seen;
        const DivisorP1* sdiv[3] = {&s1.div, &s2.div, &s3.div};
        for (int i = 0; i < 3; ++i)
            for (const auto& [P, k] : sdiv[i]->mult)
                if (seen.insert(P).second) pts.push_back({P, {}, -1});
        for (size_t j = 0; j < p0list.size(); ++j) {
            if (seen.insert(p0list[j]).second) pts.push_back({p0list[j], {}, (int)j});
            else
                for (EvalPoint& ep : pts)
                    if (ep.P == p0list[j]) { ep.p0_index = (int)j; break; }
        }
        for (EvalPoint& ep : pts)
            for (int i = 0; i < 3; ++i) ep.vsb[i] = valuation(*sdiv[i], ep.P) > 0;

        MatFq m = section_map_matrix(F, {s1.form, s2.form, s3.form}, delta);
        auto basis = kernel_basis(F, m);
        const int k = (int)basis.size();

        std::fill(cur.begin(), cur.end(), 0);
        dig.assign(k, 0);
        unsigned long long nelem = 1;
        for (int i = 0; i < k; ++i) nelem *= q;

        for (unsigned long long it = 1; it < nelem; ++it) {
            // odometer step: digit c -> c' changes cur by (elem(c')-elem(c)) b
            // (element indices are the elements, so the scalar is F.sub(c',c);
            // over prime fields consecutive indices differ by 1)
            for (int j = 0; j < k; ++j) {
                const std::vector<int>& b = basis[j];
                int c0 = dig[j];
                int c1 = c0 + 1 == q ? 0 : c0 + 1;
                int s = F.sub(c1, c0);
                if (s == 1)
                    for (int c = 0; c < C; ++c) cur[c] = F.add(cur[c], b[c]);
                else
                    for (int c = 0; c < C; ++c) cur[c] = F.add(cur[c], F.mul(s, b[c]));
                dig[j] = c1;
                if (c1 != 0) break;
            }

            bool nz = true;
            for (int i = 0; i < 3 && nz; ++i) {
                const int* t = cur.data() + block_off[i];
                bool any = false;
                for (int c = 0; c <= psi[i]; ++c)
                    if (t[c] != 0) { any = true; break; }
                nz = any;
            }
            if (!nz) continue;

            uint64_t badmask = 0;
            bool reject = false;
            for (const EvalPoint& ep : pts) {
                bool bt[3];
                for (int i = 0; i < 3; ++i)
                    bt[i] = point_divides(F, ep.P, cur.data() + block_off[i], psi[i]);
                bool btany = bt[0] || bt[1] || bt[2];
                bool c1 = ep.vsb[0] || ep.vsb[1] || btany;
                bool c2 = ep.vsb[1] || ep.vsb[2] || btany;
                bool c3 = ep.vsb[0] || ep.vsb[2] || btany;
                if (!(c1 && c2 && c3)) continue; // a torus-free chart survives
                bool rest0 = (!ep.vsb[0] && !ep.vsb[1] && !bt[0] && !bt[1])
                          || (!ep.vsb[0] && !ep.vsb[2] && !bt[0] && !bt[2])
                          || (!ep.vsb[1] && !ep.vsb[2] && !bt[1] && !bt[2])
                          || (!ep.vsb[0] && !ep.vsb[1] && !ep.vsb[2]);
                if (!rest0) { reject = true; break; }
                // a chart through s0 can still be clean, but only if s0
                // avoids this point
                if (ep.p0_index >= 0) badmask |= uint64_t(1) << ep.p0_index;
                // points of degree > d0 cannot divide s0: no constraint
            }
            if (reject) continue;

            for (uint64_t sm : s0_supp_masks)
                if ((sm & badmask) == 0) ++total;
        }
    }
    return total;
}

unsigned long long torsor_count_d(const FieldCtx& F, const DegreeVec4& d, int threads) {
    std::vector<std::vector<RepForm>> reps(4);
    for (int j = 0; j < 4; ++j) reps[j] = rep_forms(F, d[j]);

    // all closed points that can appear in a degree-d0 divisor
    std::vector<ClosedPoint> p0list;
    if (d[0] >= 1)
        for (const auto& level : closed_points(F, d[0]))
            for (const ClosedPoint& P : level) p0list.push_back(P);
    if (p0list.size() > 64) throw std::logic_error("torsor: s0 support mask overflow");

    std::vector<uint64_t> s0_supp_masks;
    for (const RepForm& r : reps[0]) {
        uint64_t mask = 0;
        for (const auto& [P, k] : r.div.mult) {
            auto it = std::find(p0list.begin(), p0list.end(), P);
            mask |= uint64_t(1) << (it - p0list.begin());
        }
        s0_supp_masks.push_back(mask);
    }

    unsigned long long jobs =
        (unsigned long long)reps[1].size() * reps[2].size() * reps[3].size();
    if (threads <= 1 || jobs < 64)
        return torsor_range(F, d, reps, p0list, s0_supp_masks, 0, jobs);

    int nt = std::min<unsigned long long>(threads, jobs);
    std::vector<unsigned long long> partial(nt, 0);
    std::vector<std::thread> pool;
    for (int t = 0; t < nt; ++t) {
        unsigned long long lo = jobs * t / nt, hi = jobs * (t + 1) / nt;
        pool.emplace_back([&, t, lo, hi] {
            partial[t] = torsor_range(F, d, reps, p0list, s0_supp_masks, lo, hi);
        });
    }
    for (auto& th : pool) th.join();
    unsigned long long total = 0;
    for (unsigned long long p : partial) total += p;
    return total;
}

} // namespace

std::vector<CountRecord> count_torsor(const FieldCtx& F, int n_max, int threads) {
    double t0 = now_seconds();
    std::vector<BigInt> counts(n_max + 1, 0);
    for (int n = 0; n <= n_max; ++n)
        for (const DegreeVec4& d : degree_vectors(n))
            counts[n] += torsor_count_d(F, d, threads);
    double elapsed = now_seconds() - t0;
    std::vector<CountRecord> out;
    for (int n = 0; n <= n_max; ++n)
        out.push_back({n, "torsor", counts[n], 0.0, 0.0, elapsed});
    return out;
}

GeomConfig default_geometry() {
    // L: Z = 0 carries p1=(1:0:0), p2=(0:1:0), p3=(1:1:0); p0=(0:0:1).
    // Joining lines: <p1,p0> : Y = 0, <p2,p0> : X = 0, <p3,p0> : X - Y = 0.
    GeomConfig cfg;
    cfg.lines[0] = {0, 0, 1};
    cfg.lines[1] = {0, 1, 0};
    cfg.lines[2] = {1, 0, 0};
    cfg.lines[3] = {1, -1, 0};
    return cfg;
}

namespace {

void geometric_range(const FieldCtx& F, const GeomConfig& cfg, int e, int n_max,
                     std::vector<unsigned long long>& counts,
                     unsigned long long lo, unsigned long long hi) {
    const int q = F.q();
    const int len = e + 1;
    std::array<BinaryForm, 3> g;
    for (auto& f : g) { f.d = e; f.coeffs.assign(len, 0); }

    for (unsigned long long idx = lo; idx < hi; ++idx) {
        unsigned long long t = idx;
        int first_nonzero = -1;
        for (int c = 0; c < 3 * len; ++c) {
            int v = (int)(t % q);
            t /= q;
            g[c / len].coeffs[c % len] = v;
            if (first_nonzero < 0 && v != 0) first_nonzero = c;
        }
        if (first_nonzero < 0) continue;
        if (g[first_nonzero / len].coeffs[first_nonzero % len] != 1) continue; // scalar rep

        // no common factor (otherwise this is a lower-degree map)
        const BinaryForm* nz[3];
        int nnz = 0;
        for (int i = 0; i < 3; ++i)
            if (!g[i].is_zero()) nz[nnz++] = &g[i];
        BinaryForm common = *nz[0];
        for (int i = 1; i < nnz; ++i) common = form_gcd(F, common, *nz[i]);
        if (common.d > 0) continue;

        // pull back the four lines; vanishing pullback = image inside the line
        std::array<BinaryForm, 4> pull;
        bool excluded = false;
        for (int l = 0; l < 4; ++l) {
            BinaryForm p;
            p.d = e;
            p.coeffs.assign(len, 0);
            for (int i = 0; i < 3; ++i) {
                int a = ((cfg.lines[l][i] % q) + q) % q;
                if (a == 0) continue;
                for (int c = 0; c < len; ++c)
                    p.coeffs[c] = F.add(p.coeffs[c], F.mul(a, g[i].coeffs[c]));
            }
            if (p.is_zero()) { excluded = true; break; }
            pull[l] = std::move(p);
        }
        if (excluded) continue;

        // fiber degree over p_i = deg gcd of the two pulled-back lines through p_i
        int msum = 0;
        for (int i = 1; i <= 3; ++i) msum += form_gcd(F, pull[0], pull[i]).d;
        int n = 3 * e - msum;
        if (n <= n_max) ++counts[n];
    }
}

} // namespace

std::vector<CountRecord> count_geometric(const FieldCtx& F, int n_max, int threads,
                                         const GeomConfig* cfg) {
    double t0 = now_seconds();
    GeomConfig conf = cfg ? *cfg : default_geometry();
    const int q = F.q();
    std::vector<BigInt> counts(n_max + 1, 0);
    counts[0] = (BigInt)(q - 1) * (q - 2); // constant maps: points off the four lines

    for (int e = 1; 2 * e <= n_max; ++e) {
        unsigned long long jobs = 1;
        for (int c = 0; c < 3 * (e + 1); ++c) jobs *= q;
        int nt = (threads <= 1 || jobs < 4096) ? 1 : threads;
        std::vector<std::vector<unsigned long long>> partial(
            nt, std::vector<unsigned long long>(n_max + 1, 0));
        if (nt == 1) {
            geometric_range(F, conf, e, n_max, partial[0], 0, jobs);
        } else {
            std::vector<std::thread> pool;
            for (int t = 0; t < nt; ++t) {
                unsigned long long lo = jobs * t / nt, hi = jobs * (t + 1) / nt;
                pool.emplace_back([&, t, lo, hi] {
                    geometric_range(F, conf, e, n_max, partial[t], lo, hi);
                });
            }
            for (auto& th : pool) th.join();
        }
        for (const auto& part : partial)
            for (int n = 0; n <= n_max; ++n) counts[n] += part[n];
    }

    double elapsed = now_seconds() - t0;
    std::vector<CountRecord> out;
    for (int n = 0; n <= n_max; ++n)
        out.push_back({n, "geometric", counts[n], 0.0, 0.0, elapsed});
    return out;
}

namespace {

struct MoebiusAccum {
    const FieldCtx* F;
    const MoebiusTable* mu;
    int n_max;
    std::vector<BigInt> totals; // raw, divided by (q-1)^4 at the end

    void process(const DivTuple7& E, long long mu_val) {
        std::array<int, 7> Edeg;
        for (int i = 0; i < 7; ++i) Edeg[i] = E[i].degree();
        int w = 3 * Edeg[0] + 2 * (Edeg[1] + Edeg[2] + Edeg[3]);
        for (int n = w; n <= n_max; ++n) {
            for (const DegreeVec4& d : degree_vectors(n - w)) {
                bool ok = true;
                for (int i = 1; i <= 3 && ok; ++i)
                    if (surface::psi(i, d, Edeg) < 0) ok = false;
                if (!ok) continue;
                totals[n] += mu_val * count_NS(*F, d, E, NSVariant::full);
            }
        }
    }

    void rec(const std::vector<std::pair<ClosedPoint, int>>& pts, size_t i,
             DivTuple7& E, int weight, long long mu_val,
             const std::vector<unsigned>& patterns) {
        if (i == pts.size()) {
            process(E, mu_val);
            return;
        }
        rec(pts, i + 1, E, weight, mu_val, patterns);
        const auto& [P, deg] = pts[i];
        for (unsigned mask : patterns) {
            int wm = 0;
            for (int b = 0; b < 4; ++b)
                if (mask & (1u << b)) wm += (b == 0) ? 3 : 2;
            if (weight + wm * deg > n_max) continue;
            ExpVec7 nv;
            for (int b = 0; b < 7; ++b) nv[b] = (mask >> b) & 1;
            int m = mu->mu0(nv);
            for (int b = 0; b < 7; ++b)
                if (nv[b]) E[b].add_point(P, 1);
            rec(pts, i + 1, E, weight + wm * deg, mu_val * m, patterns);
            for (int b = 0; b < 7; ++b)
                if (nv[b]) E[b].add_point(P, -1);
        }
    }
};

} // namespace

std::vector<CountRecord> count_moebius(const FieldCtx& F, int n_max, int /*threads*/) {
    double t0 = now_seconds();
    const long long q = F.q();
    MoebiusTable mu;

    // every supported pattern has an e-bit, so it costs weighted degree >= 2
    std::vector<std::pair<ClosedPoint, int>> pts;
    if (n_max >= 2)
        for (const auto& level : closed_points(F, n_max / 2))
            for (const ClosedPoint& P : level) pts.emplace_back(P, P.deg);

    std::vector<unsigned> patterns;
    for (unsigned m : mu.support())
        if (m != 0) patterns.push_back(m);

    MoebiusAccum acc{&F, &mu, n_max, std::vector<BigInt>(n_max + 1, 0)};
    DivTuple7 E;
    acc.rec(pts, 0, E, 0, 1, patterns);

    BigInt torus = (BigInt)(q - 1) * (q - 1) * (q - 1) * (q - 1);
    double elapsed = now_seconds() - t0;
    std::vector<CountRecord> out;
    for (int n = 0; n <= n_max; ++n) {
        if (acc.totals[n] % torus != 0)
            throw std::logic_error("count_moebius: torus divisibility failure");
        out.push_back({n, "moebius", acc.totals[n] / torus, 0.0, 0.0, elapsed});
    }
    return out;
}

double gamma_S(long long q, int cutoff, Rational* exact) {
    double accd = (double)q * q * std::pow((double)q / (double)(q - 1), 4);
    // exact numerator/denominator kept unreduced; one gcd at the end only
    // when the caller wants the rational value (sensible for small cutoffs)
    BigInt num = int_pow(q, 6), den = int_pow(q - 1, 4);
    for (int e = 1; e <= cutoff; ++e) {
        long long cnt = closed_point_count(q, e);
        double qv = std::pow((double)q, e);
        double f = 1.0 - 1.0 / qv;
        accd *= std::pow(f * f * f * f * (qv * qv + 4.0 * qv + 1.0) / (qv * qv), (double)cnt);
        if (exact) {
            BigInt qvi = int_pow(q, e);
            BigInt fn = qvi - 1;
            fn = fn * fn * fn * fn * (qvi * qvi + 4 * qvi + 1);
            num *= boost::multiprecision::pow(fn, (unsigned)cnt);
            den *= boost::multiprecision::pow(qvi * qvi * qvi * qvi * qvi * qvi, (unsigned)cnt);
        }
    }
    if (exact) *exact = Rational(num, den);
    return accd;
}

double predict(long long q, int n) {
    static std::map<long long, double> cache;
    static std::mutex mtx;
    double gamma;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(q);
        if (it == cache.end()) it = cache.emplace(q, gamma_S(q, 10)).first;
        gamma = it->second;
    }
    double alpha = surface::alpha_S().convert_to<double>();
    return alpha * gamma * (double)n * n * n * std::pow((double)q, n);
}

void attach_prediction(std::vector<CountRecord>& recs, long long q) {
    for (CountRecord& r : recs) {
        r.predicted = r.n >= 1 ? predict(q, r.n) : 0.0;
        double c = r.count.convert_to<double>();
        r.ratio = c / r.predicted; // inf or nan at n = 0 by design
    }
}

} // namespace manin
