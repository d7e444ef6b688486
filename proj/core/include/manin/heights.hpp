#pragma once

#include <string>
#include <vector>

#include "manin/rational.hpp"
#include "manin/sections.hpp"
#include "manin/surface.hpp"

namespace manin {

/* Three independent counters for N(n), the number of morphisms P^1 -> S of
 * anticanonical degree n whose image meets the torsor locus, plus the
 * predicted constant gamma(S) and the Manin main-term comparison.
 */

struct CountRecord {
    int n = 0;
    std::string method;
    BigInt count = 0;
    double predicted = 0.0;
    double ratio = 0.0;
    double seconds = 0.0;
};

// Torsor counter: 7-tuples of nonzero forms with the Cox relation and
// primitive divisor tuple, summed over degree vectors, divided by (q-1)^4.
std::vector<CountRecord> count_torsor(const FieldCtx& F, int n_max, int threads = 1);

/* Geometric counter configuration: the four lines of the blown-up
 * configuration as linear forms (coefficients of X, Y, Z).  lines[0] is the
 * common line through p1, p2, p3; lines[i] joins p_i to the fourth base
 * point, so p_i = lines[0] ^ lines[i].
 */
struct GeomConfig {
    std::array<std::array<int, 3>, 4> lines;
};

GeomConfig default_geometry(); // p1=(1:0:0), p2=(0:1:0), p3=(1:1:0), p0=(0:0:1)

std::vector<CountRecord> count_geometric(const FieldCtx& F, int n_max, int threads = 1,
                                         const GeomConfig* cfg = nullptr);

// Moebius-inverted counter: sum over divisor 7-tuples E weighted by mu, of
// the renormalized non-primitive counts.
std::vector<CountRecord> count_moebius(const FieldCtx& F, int n_max, int threads = 1);

// Euler product (1-1/q)^{-4} q^2 prod_{deg v <= cutoff} (1-1/q_v)^4 (q_v^2+4q_v+1)/q_v^2.
double gamma_S(long long q, int cutoff, Rational* exact = nullptr);

// alpha(S) gamma(S) n^3 q^n with the default cutoff 10.
double predict(long long q, int n);

// Attach predicted/ratio columns to finished records.
void attach_prediction(std::vector<CountRecord>& recs, long long q);

} // namespace manin
