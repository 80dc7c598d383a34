#pragma once

#include <vector>

#include "anticyc/errors.hpp"
#include "anticyc/int_util.hpp"

namespace anticyc {

/* Z/p^n with p certified prime by trial division. Elements are least
 * non-negative residues held in u64; all arithmetic is exact. */
class ResidueRing {
  public:
    ResidueRing() : p_(2), n_(1), q_(2) {}

    ResidueRing(i64 p, int n) : p_(p), n_(n)
    {
        if (!is_prime(p)) throw std::domain_error("ResidueRing: p not prime");
        if (n < 1) throw std::domain_error("ResidueRing: n < 1");
        i64 q = 1;
        for (int i = 0; i < n; ++i) {
            if (q > (i64)4e18 / p) throw std::domain_error("ResidueRing: p^n too large");
            q *= p;
        }
        q_ = q;
    }

    i64 p() const { return p_; }
    int n() const { return n_; }
    u64 modulus() const { return (u64)q_; }

    bool operator==(const ResidueRing &o) const { return p_ == o.p_ && n_ == o.n_; }
    bool operator!=(const ResidueRing &o) const { return !(*this == o); }

    u64 reduce(i64 x) const { return (u64)mod_floor(x, q_); }
    u64 add(u64 a, u64 b) const { return addmod(a, b, q_); }
    u64 sub(u64 a, u64 b) const { return submod(a, b, q_); }
    u64 neg(u64 a) const { return a == 0 ? 0 : (u64)q_ - a; }
    u64 mul(u64 a, u64 b) const { return mulmod(a, b, q_); }
    u64 pow(u64 a, u64 e) const { return powmod(a, e, q_); }

    bool is_unit(u64 a) const { return a % (u64)p_ != 0; }

    /* p-adic valuation capped at n (val(0) = n) */
    int val(u64 a) const
    {
        if (a == 0) return n_;
        int v = 0;
        while (a % (u64)p_ == 0) { a /= (u64)p_; ++v; }
        return v;
    }

    u64 inv(u64 a) const
    {
        if (!is_unit(a)) throw NonUnitError("inv_mod: p divides argument");
        i64 x, y;
        xgcd((i64)a, q_, x, y);
        return (u64)mod_floor(x, q_);
    }

    /* reduce into Z/p^k, k <= n */
    ResidueRing quotient(int k) const { return ResidueRing(p_, k); }

  private:
    i64 p_;
    int n_;
    i64 q_;
};

inline u64 inv_mod(u64 x, const ResidueRing &R) { return R.inv(R.reduce((i64)x)); }

}  // namespace anticyc
