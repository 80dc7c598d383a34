#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace anticyc {

using bigint = boost::multiprecision::cpp_int;
using BigMat = std::vector<std::vector<bigint>>;

inline BigMat big_identity(size_t n)
{
    BigMat I(n, std::vector<bigint>(n, 0));
    for (size_t i = 0; i < n; ++i) I[i][i] = 1;
    return I;
}

inline BigMat big_mul(const BigMat &A, const BigMat &B)
{
    size_t n = A.size(), k = B.size(), m = B.empty() ? 0 : B[0].size();
    BigMat C(n, std::vector<bigint>(m, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l) {
            if (A[i][l] == 0) continue;
            for (size_t j = 0; j < m; ++j) C[i][j] += A[i][l] * B[l][j];
        }
    return C;
}

/* fraction-free Gaussian elimination (Bareiss) */
inline bigint big_det(BigMat A)
{
    size_t n = A.size();
    if (n == 0) return 1;
    int sign = 1;
    bigint den = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t piv = k;
        while (piv < n && A[piv][k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            std::swap(A[piv], A[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                A[i][j] = A[k][k] * A[i][j] - A[i][k] * A[k][j];
                if (k > 0) A[i][j] /= den;
            }
        den = A[k][k];
    }
    return sign > 0 ? A[n - 1][n - 1] : -A[n - 1][n - 1];
}

struct SmithForm {
    BigMat D, U, V;  /* U*A*V = D, diag divisibility chain */
};

/* Smith normal form with unimodular transforms. */
inline SmithForm smith_normal_form(const BigMat &A)
{
    size_t m = A.size();
    size_t n = m ? A[0].size() : 0;
    SmithForm S;
    S.D = A;
    S.U = big_identity(m);
    S.V = big_identity(n);
    auto &D = S.D;
    auto &U = S.U;
    auto &V = S.V;

    auto swap_rows = [&](size_t a, size_t b) {
        std::swap(D[a], D[b]);
        std::swap(U[a], U[b]);
    };
    auto swap_cols = [&](size_t a, size_t b) {
        for (size_t i = 0; i < m; ++i) std::swap(D[i][a], D[i][b]);
        for (size_t i = 0; i < n; ++i) std::swap(V[i][a], V[i][b]);
    };
    auto add_row = [&](size_t dst, size_t src, const bigint &c) {
        for (size_t j = 0; j < n; ++j) D[dst][j] += c * D[src][j];
        for (size_t j = 0; j < m; ++j) U[dst][j] += c * U[src][j];
    };
    auto add_col = [&](size_t dst, size_t src, const bigint &c) {
        for (size_t i = 0; i < m; ++i) D[i][dst] += c * D[i][src];
        for (size_t i = 0; i < n; ++i) V[i][dst] += c * V[i][src];
    };
    auto negate_row = [&](size_t r) {
        for (size_t j = 0; j < n; ++j) D[r][j] = -D[r][j];
        for (size_t j = 0; j < m; ++j) U[r][j] = -U[r][j];
    };

    size_t t = std::min(m, n);
    for (size_t k = 0; k < t; ++k) {
        for (;;) {
            /* move a minimal nonzero entry of the trailing block to (k,k) */
            size_t pi = k, pj = k;
            bigint best = 0;
            for (size_t i = k; i < m; ++i)
                for (size_t j = k; j < n; ++j) {
                    if (D[i][j] == 0) continue;
                    bigint a = abs(D[i][j]);
                    if (best == 0 || a < best) {
                        best = a;
                        pi = i;
                        pj = j;
                    }
                }
            if (best == 0) goto next_k;
            if (pi != k) swap_rows(pi, k);
            if (pj != k) swap_cols(pj, k);

            bool clean = true;
            for (size_t i = k + 1; i < m; ++i) {
                if (D[i][k] == 0) continue;
                bigint q = D[i][k] / D[k][k];
                add_row(i, k, -q);
                if (D[i][k] != 0) clean = false;
            }
            for (size_t j = k + 1; j < n; ++j) {
                if (D[k][j] == 0) continue;
                bigint q = D[k][j] / D[k][k];
                add_col(j, k, -q);
                if (D[k][j] != 0) clean = false;
            }
            if (!clean) continue;

            /* make the pivot divide the whole trailing block */
            bool divides_all = true;
            for (size_t i = k + 1; i < m && divides_all; ++i)
                for (size_t j = k + 1; j < n; ++j)
                    if (D[i][j] % D[k][k] != 0) {
                        add_row(k, i, 1);
                        divides_all = false;
                        break;
                    }
            if (divides_all) break;
        }
        if (D[k][k] < 0) negate_row(k);
    next_k:;
    }
    return S;
}

inline std::vector<bigint> elementary_divisors(const BigMat &A)
{
    SmithForm S = smith_normal_form(A);
    std::vector<bigint> d;
    size_t t = std::min(S.D.size(), S.D.empty() ? 0 : S.D[0].size());
    for (size_t k = 0; k < t; ++k) d.push_back(S.D[k][k]);
    return d;
}

}  // namespace anticyc
