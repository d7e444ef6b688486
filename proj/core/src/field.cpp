#include "manin/field.hpp"

#include <stdexcept>

namespace manin {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; (long long)d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Digits of a in base p, least significant first, padded to f entries.
void to_digits(int a, int p, int f, int* out) {
    for (int i = 0; i < f; ++i) {
        out[i] = a % p;
        a /= p;
    }
}

int from_digits(const int* d, int p, int f) {
    int a = 0;
    for (int i = f - 1; i >= 0; --i) a = a * p + d[i];
    return a;
}

// Trial-division irreducibility over F_p for a monic polynomial given by its
// coefficient vector (degree = coeffs.size()-1).  Divides by every monic of
// degree 1..deg/2.
bool irreducible_fp(const std::vector<int>& poly, int p) {
    int deg = (int)poly.size() - 1;
    for (int d = 1; 2 * d <= deg; ++d) {
        // all monics of degree d: p^d of them
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long idx = 0; idx < count; ++idx) {
            std::vector<int> div(d + 1);
            long long t = idx;
            for (int i = 0; i < d; ++i) { div[i] = (int)(t % p); t /= p; }
            div[d] = 1;
            // remainder of poly by div
            std::vector<int> rem = poly;
            for (int i = deg; i >= d; --i) {
                int c = rem[i] % p;
                if (c == 0) continue;
                for (int j = 0; j <= d; ++j) {
                    rem[i - d + j] = ((rem[i - d + j] - c * div[j]) % p + p * p) % p;
                }
            }
            bool zero = true;
            for (int i = 0; i < d; ++i)
                if (rem[i] % p != 0) { zero = false; break; }
            if (zero) return false;
        }
    }
    return true;
}

} // namespace

FieldCtx::FieldCtx(int p, int f) : p_(p), f_(f) {
    if (!is_prime(p)) throw std::invalid_argument("make_field: p is not prime");
    if (f < 1) throw std::invalid_argument("make_field: f must be >= 1");
    long long q = 1;
    for (int i = 0; i < f; ++i) {
        q *= p;
        if (q > (1 << 16)) throw std::invalid_argument("make_field: p^f exceeds 2^16");
    }
    q_ = (int)q;

    if (f == 1) {
        modulus_ = {0, 1};
    } else {
        // lexicographically-first monic irreducible of degree f
        long long count = 1;
        for (int i = 0; i < f; ++i) count *= p;
        bool found = false;
        for (long long idx = 0; idx < count && !found; ++idx) {
            std::vector<int> cand(f + 1);
            long long t = idx;
            for (int i = 0; i < f; ++i) { cand[i] = (int)(t % p); t /= p; }
            cand[f] = 1;
            if (irreducible_fp(cand, p)) {
                modulus_ = cand;
                found = true;
            }
        }
        if (!found) throw std::logic_error("make_field: no irreducible modulus found");
    }

    if (q_ <= 1024) {
        tables_ = true;
        add_table_.resize((size_t)q_ * q_);
        mul_table_.resize((size_t)q_ * q_);
        neg_table_.resize(q_);
        for (int a = 0; a < q_; ++a) {
            neg_table_[a] = neg_slow(a);
            for (int b = 0; b < q_; ++b) {
                add_table_[(size_t)a * q_ + b] = add_slow(a, b);
                mul_table_[(size_t)a * q_ + b] = mul_slow(a, b);
            }
        }
        inv_table_.assign(q_, 0);
        for (int a = 1; a < q_; ++a) {
            for (int b = 1; b < q_; ++b)
                if (mul_table_[(size_t)a * q_ + b] == 1) { inv_table_[a] = b; break; }
            if (inv_table_[a] == 0) throw std::logic_error("non-invertible nonzero element");
        }
    }
}

FieldCtx::Elem FieldCtx::add_slow(Elem a, Elem b) const {
    if (f_ == 1) return (a + b) % p_;
    int da[32], db[32];
    to_digits(a, p_, f_, da);
    to_digits(b, p_, f_, db);
    for (int i = 0; i < f_; ++i) da[i] = (da[i] + db[i]) % p_;
    return from_digits(da, p_, f_);
}

FieldCtx::Elem FieldCtx::neg_slow(Elem a) const {
    if (f_ == 1) return (p_ - a) % p_;
    int da[32];
    to_digits(a, p_, f_, da);
    for (int i = 0; i < f_; ++i) da[i] = (p_ - da[i]) % p_;
    return from_digits(da, p_, f_);
}

FieldCtx::Elem FieldCtx::mul_slow(Elem a, Elem b) const {
    if (f_ == 1) return (int)(((long long)a * b) % p_);
    int da[32], db[32], prod[64] = {0};
    to_digits(a, p_, f_, da);
    to_digits(b, p_, f_, db);
    for (int i = 0; i < f_; ++i)
        for (int j = 0; j < f_; ++j)
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    // reduce modulo the monic modulus
    for (int i = 2 * f_ - 2; i >= f_; --i) {
        int c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (int j = 0; j < f_; ++j)
            prod[i - f_ + j] = ((prod[i - f_ + j] - c * modulus_[j]) % p_ + p_ * p_) % p_;
    }
    return from_digits(prod, p_, f_);
}

FieldCtx::Elem FieldCtx::inv(Elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    if (tables_) return inv_table_[a];
    return pow(a, q_ - 2);
}

FieldCtx::Elem FieldCtx::pow(Elem a, long long e) const {
    if (e < 0) return pow(inv(a), -e);
    Elem r = 1, base = a;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

} // namespace manin
