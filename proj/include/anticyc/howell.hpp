#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <vector>

#include "anticyc/residue.hpp"

namespace anticyc {

/* Canonical basis of a row span over Z/p^n (Howell normal form).
 *
 * Unlike plain echelon form, the Howell form also spans every element of
 * the row space supported on a suffix of the columns, which is what makes
 * greedy prefix reduction a complete membership test in the presence of
 * zero divisors. Pivot entries are powers of p, entries above a pivot are
 * reduced modulo the pivot, and the form is unique for a given span. */
class HowellBasis {
  public:
    HowellBasis(ResidueRing R, size_t ncols) : R_(R), m_(ncols), pivot_col_of_row_{} {}

    HowellBasis(ResidueRing R, size_t ncols, const std::vector<std::vector<u64>> &rows)
        : R_(R), m_(ncols)
    {
        for (auto &r : rows) insert(r);
        canonicalize();
    }

    const ResidueRing &ring() const { return R_; }
    size_t ncols() const { return m_; }
    size_t nrows() const { return rows_.size(); }
    const std::vector<std::vector<u64>> &rows() const { return rows_; }

    /* add a row and restore the Howell property */
    void insert(const std::vector<u64> &row)
    {
        std::deque<std::vector<u64>> work;
        work.push_back(reduce_input(row));
        while (!work.empty()) {
            std::vector<u64> r = work.front();
            work.pop_front();
            insert_one(std::move(r), work);
        }
        dirty_ = true;
    }

    void canonicalize()
    {
        if (!dirty_) return;
        sort_rows();
        back_reduce();
        dirty_ = false;
    }

    bool contains(const std::vector<u64> &v) const
    {
        std::vector<u64> r = reduce_input(v);
        for (size_t j = 0; j < m_; ++j) {
            if (r[j] == 0) continue;
            int pi = pivot_row(j);
            if (pi < 0) return false;
            int vp = R_.val(rows_[pi][j]);
            if (R_.val(r[j]) < vp) return false;
            u64 c = r[j] / (u64)ipow(R_.p(), vp);
            sub_scaled(r, rows_[pi], c);
        }
        return true;
    }

    bool contains_all(const std::vector<std::vector<u64>> &vs) const
    {
        for (auto &v : vs)
            if (!contains(v)) return false;
        return true;
    }

    bool same_span(const HowellBasis &other) const
    {
        return contains_all(other.rows_) && other.contains_all(rows_);
    }

    /* number of elements of the spanned module: p^length */
    int length() const
    {
        int len = 0;
        for (size_t i = 0; i < rows_.size(); ++i)
            len += R_.n() - R_.val(rows_[i][pivot_col_of_row_[i]]);
        return len;
    }

    bool is_zero() const { return rows_.empty(); }

  private:
    std::vector<u64> reduce_input(const std::vector<u64> &row) const
    {
        if (row.size() != m_) throw std::domain_error("howell: bad row length");
        std::vector<u64> r(m_);
        for (size_t j = 0; j < m_; ++j) r[j] = row[j] % R_.modulus();
        return r;
    }

    int pivot_row(size_t col) const
    {
        for (size_t i = 0; i < rows_.size(); ++i)
            if (pivot_col_of_row_[i] == col) return (int)i;
        return -1;
    }

    void sub_scaled(std::vector<u64> &r, const std::vector<u64> &s, u64 c) const
    {
        for (size_t j = 0; j < m_; ++j) r[j] = R_.sub(r[j], R_.mul(c, s[j]));
    }

    void insert_one(std::vector<u64> r, std::deque<std::vector<u64>> &work)
    {
        for (size_t j = 0; j < m_; ++j) {
            if (r[j] == 0) continue;
            int pi = pivot_row(j);
            if (pi >= 0) {
                int vp = R_.val(rows_[pi][j]);
                int vr = R_.val(r[j]);
                if (vr >= vp) {
                    u64 c = r[j] / (u64)ipow(R_.p(), vp);
                    sub_scaled(r, rows_[pi], c);
                    continue;  /* column j is now clear */
                }
                /* incoming row has the better pivot: swap, re-insert old */
                normalize_pivot(r, j);
                std::vector<u64> old = rows_[pi];
                rows_[pi] = r;
                queue_shadow(rows_[pi], j, work);
                work.push_back(std::move(old));
                return;
            }
            normalize_pivot(r, j);
            rows_.push_back(r);
            pivot_col_of_row_.push_back(j);
            queue_shadow(rows_.back(), j, work);
            return;
        }
        /* reduced to zero */
    }

    /* scale by a unit so the pivot entry equals p^v */
    void normalize_pivot(std::vector<u64> &r, size_t j) const
    {
        int v = R_.val(r[j]);
        u64 unit = r[j] / (u64)ipow(R_.p(), v);
        u64 c = R_.inv(unit);
        for (size_t k = 0; k < m_; ++k) r[k] = R_.mul(r[k], c);
    }

    /* p^(n-v) times a pivot row kills the pivot but may leave a tail that
     * the Howell property requires in the span */
    void queue_shadow(const std::vector<u64> &r, size_t j, std::deque<std::vector<u64>> &work) const
    {
        int v = R_.val(r[j]);
        if (v == 0) return;
        u64 c = (u64)ipow(R_.p(), R_.n() - v);
        std::vector<u64> s(m_);
        bool nonzero = false;
        for (size_t k = 0; k < m_; ++k) {
            s[k] = R_.mul(c, r[k]);
            nonzero |= (s[k] != 0);
        }
        if (nonzero) work.push_back(std::move(s));
    }

    void sort_rows()
    {
        std::vector<size_t> idx(rows_.size());
        for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
            return pivot_col_of_row_[a] < pivot_col_of_row_[b];
        });
        std::vector<std::vector<u64>> nr;
        std::vector<size_t> np;
        nr.reserve(rows_.size());
        np.reserve(rows_.size());
        for (size_t i : idx) {
            nr.push_back(rows_[i]);
            np.push_back(pivot_col_of_row_[i]);
        }
        rows_ = std::move(nr);
        pivot_col_of_row_ = std::move(np);
    }

    /* reduce entries lying in pivot columns of other rows */
    void back_reduce()
    {
        for (size_t i = 0; i < rows_.size(); ++i) {
            for (size_t k = 0; k < rows_.size(); ++k) {
                if (k == i) continue;
                size_t j = pivot_col_of_row_[k];
                if (j <= pivot_col_of_row_[i]) continue;
                int vp = R_.val(rows_[k][j]);
                u64 pv = (u64)ipow(R_.p(), vp);
                u64 e = rows_[i][j];
                u64 c = e / pv;
                if (c) sub_scaled(rows_[i], rows_[k], c);
            }
        }
    }

    ResidueRing R_;
    size_t m_;
    std::vector<std::vector<u64>> rows_;
    std::vector<size_t> pivot_col_of_row_;
    bool dirty_ = false;
};

inline HowellBasis howell_basis(const std::vector<std::vector<u64>> &rows, ResidueRing R,
                                size_t ncols)
{
    return HowellBasis(R, ncols, rows);
}

/* Kernel of x -> x*M over Z/p^n via the Howell form of [M | I]: rows whose
 * M-part vanished have transform parts spanning the kernel exactly. */
inline std::vector<std::vector<u64>> howell_kernel(const std::vector<std::vector<u64>> &M,
                                                   ResidueRing R, size_t ncols_out)
{
    size_t d = M.size();
    HowellBasis H(R, ncols_out + d);
    for (size_t i = 0; i < d; ++i) {
        std::vector<u64> aug(ncols_out + d, 0);
        for (size_t j = 0; j < ncols_out; ++j) aug[j] = M[i][j] % R.modulus();
        aug[ncols_out + i] = 1;
        H.insert(aug);
    }
    H.canonicalize();
    std::vector<std::vector<u64>> ker;
    for (auto &r : H.rows()) {
        bool zero_prefix = true;
        for (size_t j = 0; j < ncols_out; ++j) zero_prefix &= (r[j] == 0);
        if (zero_prefix) ker.emplace_back(r.begin() + ncols_out, r.end());
    }
    return ker;
}

/* One solution of x*M = b plus a kernel basis; nullopt if unsolvable. */
struct HowellSolution {
    std::vector<u64> x;
    std::vector<std::vector<u64>> kernel;
};

inline std::optional<HowellSolution> howell_solve(const std::vector<std::vector<u64>> &M,
                                                  const std::vector<u64> &b, ResidueRing R)
{
    size_t d = M.size();
    size_t e = b.size();
    HowellBasis H(R, e + d);
    for (size_t i = 0; i < d; ++i) {
        std::vector<u64> aug(e + d, 0);
        for (size_t j = 0; j < e; ++j) aug[j] = M[i][j] % R.modulus();
        aug[e + i] = 1;
        H.insert(aug);
    }
    H.canonicalize();

    /* reduce (b | 0); the accumulated transform gives the solution */
    std::vector<u64> r(e + d, 0);
    for (size_t j = 0; j < e; ++j) r[j] = b[j] % R.modulus();
    for (size_t j = 0; j < e; ++j) {
        if (r[j] == 0) continue;
        int pi = -1;
        for (size_t i = 0; i < H.nrows(); ++i) {
            const auto &row = H.rows()[i];
            size_t pc = 0;
            while (pc < e + d && row[pc] == 0) ++pc;
            if (pc == j) { pi = (int)i; break; }
        }
        if (pi < 0) return std::nullopt;
        const auto &row = H.rows()[pi];
        int vp = R.val(row[j]);
        if (R.val(r[j]) < vp) return std::nullopt;
        u64 c = r[j] / (u64)ipow(R.p(), vp);
        for (size_t k = 0; k < e + d; ++k) r[k] = R.sub(r[k], R.mul(c, row[k]));
    }
    for (size_t j = 0; j < e; ++j)
        if (r[j] != 0) return std::nullopt;

    HowellSolution sol;
    sol.x.resize(d);
    for (size_t i = 0; i < d; ++i) sol.x[i] = R.neg(r[e + i]);
    sol.kernel = howell_kernel(M, R, e);
    return sol;
}

}  // namespace anticyc
