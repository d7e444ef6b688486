#pragma once

#include <cstdint>
#include <vector>

namespace manin {

/* An explicit finite field F_{p^f}.  Elements are the integers 0..q-1; the
 * index encodes the coefficient vector of the residue class in base p
 * (digit i = coefficient of x^i modulo the chosen irreducible).
 *
 * For small q (everything this project actually runs) full add/mul tables
 * are built; beyond the table threshold arithmetic falls back to digitwise
 * computation so that make_field(2,16) still works.
 */
class FieldCtx {
public:
    using Elem = int;

    FieldCtx(int p, int f);

    int p() const { return p_; }
    int f() const { return f_; }
    int q() const { return q_; }

    // Monic irreducible modulus, coefficient of x^i at index i (f >= 2 only;
    // for prime fields this is just {0,1} placeholder of degree 1).
    const std::vector<int>& modulus() const { return modulus_; }

    Elem add(Elem a, Elem b) const {
        return tables_ ? add_table_[a * q_ + b] : add_slow(a, b);
    }
    Elem neg(Elem a) const { return tables_ ? neg_table_[a] : neg_slow(a); }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const {
        return tables_ ? mul_table_[a * q_ + b] : mul_slow(a, b);
    }
    Elem inv(Elem a) const;
    Elem pow(Elem a, long long e) const;

private:
    int p_, f_, q_;
    bool tables_ = false;
    std::vector<int> modulus_;
    std::vector<Elem> add_table_, mul_table_, neg_table_, inv_table_;

    Elem add_slow(Elem a, Elem b) const;
    Elem neg_slow(Elem a) const;
    Elem mul_slow(Elem a, Elem b) const;
};

} // namespace manin
