#pragma once

#include <algorithm>
#include <vector>

#include "anticyc/errors.hpp"
#include "anticyc/residue.hpp"

namespace anticyc {

/* dense polynomials over Z/p^n, coefficient i = coefficient of X^i */
using Poly = std::vector<u64>;

inline Poly poly_trim(Poly f)
{
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

inline int poly_deg(const Poly &f)
{
    for (size_t i = f.size(); i-- > 0;)
        if (f[i] != 0) return (int)i;
    return -1;
}

inline Poly poly_add(const Poly &a, const Poly &b, const ResidueRing &R)
{
    Poly c(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) {
        u64 x = i < a.size() ? a[i] : 0;
        u64 y = i < b.size() ? b[i] : 0;
        c[i] = R.add(x, y);
    }
    return poly_trim(c);
}

inline Poly poly_sub(const Poly &a, const Poly &b, const ResidueRing &R)
{
    Poly c(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) {
        u64 x = i < a.size() ? a[i] : 0;
        u64 y = i < b.size() ? b[i] : 0;
        c[i] = R.sub(x, y);
    }
    return poly_trim(c);
}

inline Poly poly_scale(const Poly &a, u64 c, const ResidueRing &R)
{
    Poly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = R.mul(a[i], c);
    return poly_trim(r);
}

inline Poly poly_mul(const Poly &a, const Poly &b, const ResidueRing &R)
{
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = R.add(c[i + j], R.mul(a[i], b[j]));
    }
    return poly_trim(c);
}

/* division with remainder; the divisor's leading coefficient must be a unit */
inline void poly_divmod(const Poly &a, const Poly &b, const ResidueRing &R, Poly &q, Poly &r)
{
    int db = poly_deg(b);
    if (db < 0) throw std::domain_error("poly_divmod: division by zero");
    u64 lead_inv = R.inv(b[db]);
    r = poly_trim(a);
    q.assign(r.size() > (size_t)db ? r.size() - db : 0, 0);
    while (poly_deg(r) >= db) {
        int dr = poly_deg(r);
        u64 c = R.mul(r[dr], lead_inv);
        q[dr - db] = c;
        for (int i = 0; i <= db; ++i)
            r[dr - db + i] = R.sub(r[dr - db + i], R.mul(c, b[i]));
    }
    r = poly_trim(r);
    q = poly_trim(q);
}

inline Poly poly_mod(const Poly &a, const Poly &b, const ResidueRing &R)
{
    Poly q, r;
    poly_divmod(a, b, R, q, r);
    return r;
}

inline Poly poly_mulmod(const Poly &a, const Poly &b, const Poly &m, const ResidueRing &R)
{
    return poly_mod(poly_mul(a, b, R), m, R);
}

inline Poly poly_powmod(Poly base, u64 e, const Poly &m, const ResidueRing &R)
{
    Poly r = {1};
    base = poly_mod(base, m, R);
    while (e) {
        if (e & 1) r = poly_mulmod(r, base, m, R);
        base = poly_mulmod(base, base, m, R);
        e >>= 1;
    }
    return r;
}

/* gcd over F_p (n must be 1) */
inline Poly poly_gcd_fp(Poly a, Poly b, const ResidueRing &R)
{
    while (poly_deg(b) >= 0) {
        Poly r = poly_mod(a, b, R);
        a = std::move(b);
        b = std::move(r);
    }
    int d = poly_deg(a);
    if (d >= 0 && a[d] != 1) a = poly_scale(a, R.inv(a[d]), R);
    return a;
}

/* s*a + t*b = gcd over F_p */
inline Poly poly_xgcd_fp(Poly a, Poly b, const ResidueRing &R, Poly &s, Poly &t)
{
    Poly s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
    while (poly_deg(b) >= 0) {
        Poly q, r;
        poly_divmod(a, b, R, q, r);
        a = std::move(b);
        b = std::move(r);
        Poly s2 = poly_sub(s0, poly_mul(q, s1, R), R);
        s0 = std::move(s1);
        s1 = std::move(s2);
        Poly t2 = poly_sub(t0, poly_mul(q, t1, R), R);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    int d = poly_deg(a);
    if (d >= 0 && a[d] != 1) {
        u64 c = R.inv(a[d]);
        a = poly_scale(a, c, R);
        s0 = poly_scale(s0, c, R);
        t0 = poly_scale(t0, c, R);
    }
    s = s0;
    t = t0;
    return a;
}

inline u64 poly_eval(const Poly &f, u64 x, const ResidueRing &R)
{
    u64 r = 0;
    for (size_t i = f.size(); i-- > 0;) r = R.add(R.mul(r, x), f[i]);
    return r;
}

/* multiplication-by-p orbits on Z/m'Z, listed from their smallest element */
inline std::vector<std::vector<i64>> cyclotomic_cosets(i64 mprime, i64 p)
{
    if (mprime < 1) throw std::domain_error("cyclotomic_cosets: m' < 1");
    if (mprime % p == 0) throw NotCoprimeError("cyclotomic_cosets: p divides m'");
    std::vector<bool> seen(mprime, false);
    std::vector<std::vector<i64>> cosets;
    for (i64 a = 0; a < mprime; ++a) {
        if (seen[a]) continue;
        std::vector<i64> orbit;
        i64 x = a;
        do {
            seen[x] = true;
            orbit.push_back(x);
            x = (x * (p % mprime)) % mprime;
        } while (x != a);
        cosets.push_back(std::move(orbit));
    }
    return cosets;
}

namespace detail {

/* irreducibility over F_p via x^(p^e) = x and proper-divisor checks */
inline bool fp_irreducible(const Poly &h, const ResidueRing &Fp)
{
    int e = poly_deg(h);
    if (e <= 0) return false;
    Poly x = {0, 1};
    Poly xq = x;
    for (int i = 0; i < e; ++i) xq = poly_powmod(xq, (u64)Fp.p(), h, Fp);
    if (poly_deg(poly_sub(xq, x, Fp)) >= 0) return false;
    for (auto &[q, mult] : factorize(e)) {
        Poly xe = x;
        for (int i = 0; i < e / q; ++i) xe = poly_powmod(xe, (u64)Fp.p(), h, Fp);
        Poly g = poly_gcd_fp(poly_sub(xe, x, Fp), h, Fp);
        if (poly_deg(g) != 0) return false;
    }
    return true;
}

inline Poly find_irreducible(int e, const ResidueRing &Fp)
{
    if (e == 1) return {0, 1};
    /* monic X^e + lower part, counting order on the lower coefficients */
    i64 p = Fp.p();
    std::vector<u64> lower(e, 0);
    for (;;) {
        size_t i = 0;
        while (i < lower.size()) {
            if (++lower[i] < (u64)p) break;
            lower[i] = 0;
            ++i;
        }
        if (i == lower.size()) throw std::logic_error("find_irreducible: exhausted");
        Poly h(lower.begin(), lower.end());
        h.push_back(1);
        if (fp_irreducible(h, Fp)) return h;
    }
}

}  // namespace detail

/* One monic factor of X^m' - 1 over Z/p^n per cyclotomic coset, obtained by
 * root bunching over F_{p^e} and quadratic Hensel lifting; congruence
 * identities hold bit-exactly. */
struct CyclotomicFactor {
    std::vector<i64> coset;  /* exponents j with zeta^j a root */
    Poly modulus;            /* monic over Z/p^n, degree = coset size */
};

inline std::vector<CyclotomicFactor> factor_cyclotomic(i64 mprime, i64 p, int n)
{
    if (mprime < 1) throw std::domain_error("factor_cyclotomic: m' < 1");
    if (mprime % p == 0) throw NotCoprimeError("factor_cyclotomic: p divides m'");
    ResidueRing Rn(p, n);
    ResidueRing Fp(p, 1);

    auto cosets = cyclotomic_cosets(mprime, p);
    std::vector<CyclotomicFactor> out;
    if (mprime == 1) {
        out.push_back({{0}, Poly{Rn.reduce(-1), 1}});
        return out;
    }

    /* order of p mod m' = size of the coset of 1 */
    int e = 1;
    for (auto &c : cosets)
        if (std::find(c.begin(), c.end(), 1) != c.end()) e = (int)c.size();

    Poly h = detail::find_irreducible(e, Fp);

    /* F_{p^e} elements are polys mod h; find a primitive m'-th root */
    u64 group = 1;
    for (int i = 0; i < e; ++i) group *= (u64)p;
    group -= 1;
    if (group % (u64)mprime != 0) throw std::logic_error("factor_cyclotomic: bad field degree");
    u64 cof = group / (u64)mprime;
    auto fac_m = factorize(mprime);
    Poly w;
    {
        std::vector<u64> cnt(e, 0);
        for (;;) {
            size_t i = 0;
            while (i < cnt.size()) {
                if (++cnt[i] < (u64)p) break;
                cnt[i] = 0;
                ++i;
            }
            if (i == cnt.size()) throw std::logic_error("factor_cyclotomic: no root found");
            Poly z(cnt.begin(), cnt.end());
            z = poly_trim(z);
            if (poly_deg(z) < 0) continue;
            Poly cand = poly_powmod(z, cof, h, Fp);
            bool ok = poly_deg(cand) >= 0;
            for (auto &[q, mult] : fac_m) {
                if (!ok) break;
                Poly t = poly_powmod(cand, (u64)(mprime / q), h, Fp);
                if (poly_deg(poly_sub(t, {1}, Fp)) < 0) ok = false;
            }
            if (ok) {
                w = cand;
                break;
            }
        }
    }

    /* mod-p factor per coset: product of (X - w^j) in F_{p^e}[X] */
    std::vector<Poly> modp;
    for (auto &c : cosets) {
        std::vector<Poly> acc(1, Poly{1});  /* coefficients live in F_{p^e} */
        for (i64 j : c) {
            Poly root = poly_powmod(w, (u64)j, h, Fp);
            std::vector<Poly> next(acc.size() + 1, Poly{});
            for (size_t i = 0; i < acc.size(); ++i) {
                next[i + 1] = poly_add(next[i + 1], acc[i], Fp);
                Poly t = poly_mulmod(acc[i], root, h, Fp);
                next[i] = poly_sub(next[i], t, Fp);
            }
            acc = std::move(next);
        }
        Poly f(acc.size());
        for (size_t i = 0; i < acc.size(); ++i) {
            if (poly_deg(acc[i]) > 0)
                throw std::logic_error("factor_cyclotomic: coefficient not in F_p");
            f[i] = acc[i].empty() ? 0 : acc[i][0];
        }
        modp.push_back(poly_trim(f));
    }

    /* Hensel: lift each factor against the cofactor, quadratically */
    Poly F(mprime + 1, 0);
    F[0] = Rn.reduce(-1);
    F[mprime] = 1;
    for (size_t ci = 0; ci < cosets.size(); ++ci) {
        Poly g = modp[ci];
        Poly hh = {1};
        for (size_t cj = 0; cj < cosets.size(); ++cj)
            if (cj != ci) hh = poly_mul(hh, modp[cj], Fp);
        Poly s, t;
        Poly gc = poly_xgcd_fp(g, hh, Fp, s, t);
        if (poly_deg(gc) != 0) throw std::logic_error("factor_cyclotomic: factors not coprime");

        /* lift (g, hh, s, t) from mod p to mod p^n; all arithmetic mod p^n */
        int steps = 0;
        for (int reach = 1; reach < n; reach *= 2) ++steps;
        for (int it = 0; it < steps; ++it) {
            Poly eP = poly_sub(F, poly_mul(g, hh, Rn), Rn);
            Poly q, r;
            poly_divmod(poly_mul(s, eP, Rn), hh, Rn, q, r);
            Poly g2 = poly_add(poly_add(g, poly_mul(t, eP, Rn), Rn), poly_mul(q, g, Rn), Rn);
            Poly h2 = poly_add(hh, r, Rn);
            Poly b = poly_sub(poly_add(poly_mul(s, g2, Rn), poly_mul(t, h2, Rn), Rn), {1}, Rn);
            Poly c, d;
            poly_divmod(poly_mul(s, b, Rn), h2, Rn, c, d);
            Poly s2 = poly_sub(s, d, Rn);
            Poly t2 = poly_sub(poly_sub(t, poly_mul(t, b, Rn), Rn), poly_mul(c, g2, Rn), Rn);
            g = std::move(g2);
            hh = std::move(h2);
            s = std::move(s2);
            t = std::move(t2);
        }
        /* force monic; leading coefficient is a unit congruent to 1 mod p */
        int dg = poly_deg(g);
        if (dg != (int)cosets[ci].size()) throw std::logic_error("factor_cyclotomic: degree drift");
        if (g[dg] != 1) g = poly_scale(g, Rn.inv(g[dg]), Rn);
        out.push_back({cosets[ci], g});
    }

    std::sort(out.begin(), out.end(), [](const CyclotomicFactor &a, const CyclotomicFactor &b) {
        if (a.modulus.size() != b.modulus.size()) return a.modulus.size() < b.modulus.size();
        return a.modulus < b.modulus;
    });
    return out;
}

/* O_{omega,n} = (Z/p^n)[X]/(g) with g the Hensel lift of an irreducible
 * factor of X^m' - 1 mod p. Unramified: the p-valuation of an element is
 * the minimum valuation of its coefficients. */
class CyclotomicFactorRing {
  public:
    CyclotomicFactorRing() = default;

    CyclotomicFactorRing(ResidueRing base, Poly modulus, i64 mprime)
        : base_(base), g_(poly_trim(std::move(modulus))), mprime_(mprime)
    {
        if (poly_deg(g_) < 1) throw std::domain_error("CyclotomicFactorRing: bad modulus");
        if (g_[poly_deg(g_)] != 1) throw std::domain_error("CyclotomicFactorRing: modulus not monic");
    }

    const ResidueRing &base() const { return base_; }
    const Poly &modulus_poly() const { return g_; }
    int degree() const { return poly_deg(g_); }
    i64 mprime() const { return mprime_; }

    bool operator==(const CyclotomicFactorRing &o) const
    {
        return base_ == o.base_ && g_ == o.g_;
    }

    using Elt = Poly;

    Elt zero() const { return {}; }
    Elt one() const { return {1}; }
    Elt from_base(u64 c) const
    {
        c %= base_.modulus();
        return c ? Elt{c} : Elt{};
    }
    Elt zeta() const { return poly_mod({0, 1}, g_, base_); }

    Elt reduce(const Poly &f) const { return poly_mod(f, g_, base_); }
    Elt add(const Elt &a, const Elt &b) const { return poly_add(a, b, base_); }
    Elt sub(const Elt &a, const Elt &b) const { return poly_sub(a, b, base_); }
    Elt neg(const Elt &a) const { return poly_scale(a, base_.reduce(-1), base_); }
    Elt mul(const Elt &a, const Elt &b) const { return poly_mulmod(a, b, g_, base_); }
    Elt pow(const Elt &a, u64 e) const { return poly_powmod(a, e, g_, base_); }

    bool is_zero(const Elt &a) const { return poly_deg(a) < 0; }

    /* unit iff nonzero mod p (residue ring is a field) */
    bool is_unit(const Elt &a) const
    {
        for (u64 c : a)
            if (c % (u64)base_.p() != 0) return true;
        return false;
    }

    int val(const Elt &a) const
    {
        int v = base_.n();
        for (u64 c : a) v = std::min(v, base_.val(c));
        return v;
    }

    Elt inv(const Elt &a) const
    {
        if (!is_unit(a)) throw NonUnitError("CyclotomicFactorRing::inv: not a unit");
        ResidueRing Fp(base_.p(), 1);
        Poly abar(a.size());
        for (size_t i = 0; i < a.size(); ++i) abar[i] = a[i] % (u64)base_.p();
        Poly gbar(g_.size());
        for (size_t i = 0; i < g_.size(); ++i) gbar[i] = g_[i] % (u64)base_.p();
        Poly s, t;
        Poly g0 = poly_xgcd_fp(poly_trim(abar), gbar, Fp, s, t);
        if (poly_deg(g0) != 0) throw std::logic_error("CyclotomicFactorRing::inv: gcd not 1");
        Elt z = reduce(poly_scale(s, Fp.inv(g0[0]), Fp));
        /* Newton: z <- z(2 - a z), doubling precision each step */
        for (int reach = 1; reach < base_.n(); reach *= 2) {
            Elt az = mul(a, z);
            Elt two_minus = sub(from_base(2), az);
            z = mul(z, two_minus);
        }
        return z;
    }

  private:
    ResidueRing base_;
    Poly g_;
    i64 mprime_ = 1;
};

}  // namespace anticyc
