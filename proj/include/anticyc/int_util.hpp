#pragma once

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace anticyc {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m)
{
    return static_cast<u64>((u128)a * b % m);
}

inline u64 addmod(u64 a, u64 b, u64 m)
{
    u64 s = a + b;
    if (s >= m || s < a) s -= m;
    return s;
}

inline u64 submod(u64 a, u64 b, u64 m)
{
    return a >= b ? a - b : a + (m - b);
}

inline u64 powmod(u64 base, u64 e, u64 m)
{
    u64 r = 1 % m;
    base %= m;
    while (e) {
        if (e & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        e >>= 1;
    }
    return r;
}

/* ax + by = gcd(a,b), gcd returned non-negative */
inline i64 xgcd(i64 a, i64 b, i64 &x, i64 &y)
{
    if (b == 0) {
        x = (a < 0) ? -1 : 1;
        y = 0;
        return std::abs(a);
    }
    i64 x1, y1;
    i64 g = xgcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

inline i64 gcd64(i64 a, i64 b) { return std::gcd(a, b); }

inline i64 mod_floor(i64 a, i64 m)
{
    i64 r = a % m;
    if (r < 0) r += m;
    return r;
}

inline u64 isqrt_u64(u64 n)
{
    if (n == 0) return 0;
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

inline bool is_square(i64 n, i64 &root)
{
    if (n < 0) return false;
    u64 r = isqrt_u64(static_cast<u64>(n));
    if ((i64)(r * r) == n) {
        root = (i64)r;
        return true;
    }
    return false;
}

/* trial division; desk scale only */
inline bool is_prime(i64 n)
{
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (i64 d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<i64> primes_up_to(i64 bound)
{
    std::vector<i64> out;
    if (bound < 2) return out;
    std::vector<bool> sieve(static_cast<size_t>(bound) + 1, true);
    for (i64 p = 2; p <= bound; ++p) {
        if (!sieve[p]) continue;
        out.push_back(p);
        for (i64 q = p * p; q <= bound; q += p) sieve[q] = false;
    }
    return out;
}

inline std::vector<std::pair<i64, int>> factorize(i64 n)
{
    std::vector<std::pair<i64, int>> f;
    if (n < 0) n = -n;
    for (i64 d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d) continue;
        int e = 0;
        while (n % d == 0) { n /= d; ++e; }
        f.emplace_back(d, e);
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

inline bool is_squarefree(i64 n)
{
    for (auto &[p, e] : factorize(n))
        if (e > 1) return false;
    return true;
}

inline int valuation(i64 n, i64 p)
{
    if (n == 0) throw std::domain_error("valuation of zero");
    int v = 0;
    while (n % p == 0) { n /= p; ++v; }
    return v;
}

inline i64 ipow(i64 b, int e)
{
    i64 r = 1;
    while (e-- > 0) r *= b;
    return r;
}

inline i64 euler_phi(i64 n)
{
    i64 r = n;
    for (auto &[p, e] : factorize(n)) r -= r / p;
    return r;
}

/* Kronecker symbol (a|n), n may be even or negative */
inline int kronecker(i64 a, i64 n)
{
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    if ((a % 2 == 0) && (n % 2 == 0)) return 0;
    int v = 0;
    while (n % 2 == 0) { n /= 2; ++v; }
    int k = 1;
    if (v % 2 == 1) {
        i64 am8 = mod_floor(a, 8);
        if (am8 == 3 || am8 == 5) k = -1;
    }
    if (n < 0) {
        n = -n;
        if (a < 0) k = -k;
    }
    /* now n odd positive: Jacobi */
    a = mod_floor(a, n);
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            i64 nm8 = n % 8;
            if (nm8 == 3 || nm8 == 5) k = -k;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) k = -k;
        a %= n;
    }
    return n == 1 ? k : 0;
}

/* smallest non-negative square root of a mod odd prime p, -1 if none */
inline i64 sqrt_mod_prime(i64 a, i64 p)
{
    a = mod_floor(a, p);
    if (a == 0) return 0;
    if (p == 2) return a;
    if (powmod(a, (p - 1) / 2, p) != 1) return -1;
    if (p % 4 == 3) {
        i64 r = (i64)powmod(a, (p + 1) / 4, p);
        return std::min(r, p - r);
    }
    /* Tonelli-Shanks */
    i64 q = p - 1;
    int s = 0;
    while (q % 2 == 0) { q /= 2; ++s; }
    i64 z = 2;
    while (powmod(z, (p - 1) / 2, p) != (u64)(p - 1)) ++z;
    u64 m = s, c = powmod(z, q, p), t = powmod(a, q, p), r = powmod(a, (q + 1) / 2, p);
    while (t != 1) {
        u64 t2 = t;
        u64 i = 0;
        while (t2 != 1) { t2 = mulmod(t2, t2, p); ++i; }
        u64 b = c;
        for (u64 j = 0; j + i + 1 < m; ++j) b = mulmod(b, b, p);
        m = i;
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        r = mulmod(r, b, p);
    }
    return std::min((i64)r, p - (i64)r);
}

/* CRT for coprime moduli; result reduced mod m1*m2 (must fit in i64) */
inline i64 crt_pair(i64 r1, i64 m1, i64 r2, i64 m2)
{
    i64 x, y;
    i64 g = xgcd(m1, m2, x, y);
    if (g != 1) throw std::domain_error("crt: moduli not coprime");
    r1 = mod_floor(r1, m1);
    i64 d = mod_floor(r2 - r1, m2);
    i64 t = mod_floor((i64)((i128)d * mod_floor(x, m2) % m2), m2);
    return r1 + m1 * t;
}

inline std::string to_string_i128(i128 v)
{
    if (v == 0) return "0";
    bool neg = v < 0;
    u128 x = neg ? (u128)(-v) : (u128)v;
    std::string s;
    while (x) {
        s.push_back(char('0' + (int)(x % 10)));
        x /= 10;
    }
    if (neg) s.push_back('-');
    return std::string(s.rbegin(), s.rend());
}

}  // namespace anticyc
