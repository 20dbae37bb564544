#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "polycoh/bigint.hpp"
#include "polycoh/sparse_matrix.hpp"

namespace polycoh {

// Nonzero part of a Smith normal form diagonal: d1 | d2 | ... , all positive.
struct SmithDiagonal {
    std::vector<BigInt> d;

    long rank() const { return static_cast<long>(d.size()); }

    // Rank of the same matrix reduced mod a prime p: entries divisible by p
    // become zero, the rest stay invertible (U, V are invertible mod p).
    long rank_mod(long p) const
    {
        long r = 0;
        for (const auto& e : d)
            if (e % p != 0) ++r;
        return r;
    }

    std::vector<BigInt> torsion() const
    {
        std::vector<BigInt> t;
        for (const auto& e : d)
            if (e > 1) t.push_back(e);
        return t;
    }
};

struct SmithResult {
    DenseIntMatrix U;  // rows x rows, det = +-1
    DenseIntMatrix V;  // cols x cols, det = +-1
    SmithDiagonal diag;
    int det_u = 1;  // tracked exactly through elementary operations
    int det_v = 1;

    SparseIntMatrix D(int rows, int cols) const
    {
        SparseIntMatrix m(rows, cols);
        for (size_t i = 0; i < diag.d.size(); ++i)
            m.set(static_cast<int>(i), static_cast<int>(i), diag.d[i]);
        return m;
    }
};

namespace detail {

// In-place Smith reduction on a row-map + column-occupancy representation.
// Pivot rule: minimal absolute value, ties broken by (row, col); this keeps
// entry growth down and makes every run reproducible.
class SnfWorker {
public:
    SnfWorker(const SparseIntMatrix& a, bool track)
        : n_(a.rows()), m_(a.cols()), row_(a.rows()), colrows_(a.cols()), track_(track)
    {
        for (int i = 0; i < n_; ++i)
            for (const auto& [j, v] : a.row(i)) {
                row_[i].emplace(j, v);
                colrows_[j].insert(i);
            }
        if (track_) {
            u_ = DenseIntMatrix::identity(n_);
            v_ = DenseIntMatrix::identity(m_);
        }
    }

    void run()
    {
        int bound = std::min(n_, m_);
        for (int r = 0; r < bound; ++r) {
            if (!move_pivot_to(r)) break;
            reduce_pivot(r);
            ++rank_;
        }
    }

    std::vector<BigInt> diagonal() const
    {
        std::vector<BigInt> d;
        for (int r = 0; r < rank_; ++r) d.push_back(row_[r].at(r));
        return d;
    }

    DenseIntMatrix take_u() { return std::move(u_); }
    DenseIntMatrix take_v() { return std::move(v_); }
    int det_u() const { return sign_u_; }
    int det_v() const { return sign_v_; }

private:
    // Scan the submatrix [r..)x[r..) for the minimal |value|; first in
    // (row, col) order wins. |v| == 1 cannot be beaten, so stop there.
    bool move_pivot_to(int r)
    {
        int bi = -1, bj = -1;
        BigInt best = 0;
        for (int i = r; i < n_ && best != 1; ++i)
            for (const auto& [j, v] : row_[i]) {
                if (j < r) continue;
                BigInt a = big_abs(v);
                if (best == 0 || a < best) {
                    best = a;
                    bi = i;
                    bj = j;
                    if (best == 1) break;
                }
            }
        if (bi < 0) return false;
        swap_rows(r, bi);
        swap_cols(r, bj);
        return true;
    }

    // Clear row and column r, then make the pivot divide the remaining
    // submatrix; Euclidean steps shrink the pivot until everything settles.
    void reduce_pivot(int r)
    {
        for (;;) {
            if (row_[r].at(r) < 0) negate_row(r);
            if (clear_column(r)) continue;
            if (clear_row(r)) continue;
            if (row_[r].at(r) != 1 && !divisibility_ok(r)) continue;
            return;
        }
    }

    // Returns true if the pivot changed and clearing must restart.
    bool clear_column(int r)
    {
        const BigInt& p = row_[r].at(r);
        std::vector<int> rows(colrows_[r].begin(), colrows_[r].end());
        for (int i : rows) {
            if (i == r) continue;
            BigInt q = row_[i].at(r) / p;  // truncated: |remainder| < |p|
            if (q != 0) row_axpy(i, r, -q);
            auto it = row_[i].find(r);
            if (it != row_[i].end()) {
                swap_rows(i, r);  // remainder is a strictly smaller pivot
                return true;
            }
        }
        return false;
    }

    bool clear_row(int r)
    {
        const BigInt& p = row_[r].at(r);
        std::vector<int> cols;
        for (const auto& [j, v] : row_[r])
            if (j != r) cols.push_back(j);
        for (int j : cols) {
            BigInt q = row_[r].at(j) / p;
            if (q != 0) col_axpy(j, r, -q);
            if (row_[r].count(j)) {
                swap_cols(j, r);
                return true;
            }
        }
        return false;
    }

    // If some remaining entry is not divisible by the pivot, fold its row
    // into row r; the next clearing pass replaces the pivot by a gcd.
    bool divisibility_ok(int r)
    {
        const BigInt& p = row_[r].at(r);
        for (int i = r + 1; i < n_; ++i)
            for (const auto& [j, v] : row_[i]) {
                if (j < r) continue;
                if (v % p != 0) {
                    row_axpy(r, i, 1);
                    return false;
                }
            }
        return true;
    }

    void row_axpy(int dst, int src, const BigInt& c)
    {
        for (const auto& [j, v] : row_[src]) {
            auto it = row_[dst].find(j);
            if (it == row_[dst].end()) {
                row_[dst].emplace(j, c * v);
                colrows_[j].insert(dst);
            } else {
                it->second += c * v;
                if (it->second == 0) {
                    row_[dst].erase(it);
                    colrows_[j].erase(dst);
                }
            }
        }
        if (track_)
            for (int j = 0; j < n_; ++j) u_.at(dst, j) += c * u_.at(src, j);
    }

    void col_axpy(int dst, int src, const BigInt& c)
    {
        std::vector<int> rows(colrows_[src].begin(), colrows_[src].end());
        for (int i : rows) {
            const BigInt v = row_[i].at(src);
            auto it = row_[i].find(dst);
            if (it == row_[i].end()) {
                row_[i].emplace(dst, c * v);
                colrows_[dst].insert(i);
            } else {
                it->second += c * v;
                if (it->second == 0) {
                    row_[i].erase(it);
                    colrows_[dst].erase(i);
                }
            }
        }
        if (track_)
            for (int i = 0; i < m_; ++i) v_.at(i, dst) += c * v_.at(i, src);
    }

    void swap_rows(int a, int b)
    {
        if (a == b) return;
        for (const auto& [j, v] : row_[a])
            if (!row_[b].count(j)) {
                colrows_[j].erase(a);
                colrows_[j].insert(b);
            }
        for (const auto& [j, v] : row_[b])
            if (!row_[a].count(j)) {
                colrows_[j].erase(b);
                colrows_[j].insert(a);
            }
        row_[a].swap(row_[b]);
        if (track_) {
            for (int j = 0; j < n_; ++j) std::swap(u_.at(a, j), u_.at(b, j));
            sign_u_ = -sign_u_;
        }
    }

    void swap_cols(int a, int b)
    {
        if (a == b) return;
        std::set<int> touched = colrows_[a];
        touched.insert(colrows_[b].begin(), colrows_[b].end());
        for (int i : touched) {
            auto ia = row_[i].find(a);
            auto ib = row_[i].find(b);
            BigInt va = ia == row_[i].end() ? BigInt(0) : ia->second;
            BigInt vb = ib == row_[i].end() ? BigInt(0) : ib->second;
            if (va != 0) row_[i][b] = va; else row_[i].erase(b);
            if (vb != 0) row_[i][a] = vb; else row_[i].erase(a);
        }
        colrows_[a].swap(colrows_[b]);
        if (track_) {
            for (int i = 0; i < m_; ++i) std::swap(v_.at(i, a), v_.at(i, b));
            sign_v_ = -sign_v_;
        }
    }

    void negate_row(int r)
    {
        for (auto& [j, v] : row_[r]) v = -v;
        if (track_) {
            for (int j = 0; j < n_; ++j) u_.at(r, j) = -u_.at(r, j);
            sign_u_ = -sign_u_;
        }
    }

    int n_, m_;
    std::vector<std::map<int, BigInt>> row_;
    std::vector<std::set<int>> colrows_;
    bool track_;
    int rank_ = 0;
    DenseIntMatrix u_, v_;
    int sign_u_ = 1, sign_v_ = 1;
};

}  // namespace detail

// Diagonal-only SNF; the workhorse for rank and torsion queries.
inline SmithDiagonal smith_diagonal(const SparseIntMatrix& a)
{
    detail::SnfWorker w(a, /*track=*/false);
    w.run();
    return SmithDiagonal{w.diagonal()};
}

// Full SNF with unimodular transforms: U * A * V = D.
inline SmithResult smith_normal_form(const SparseIntMatrix& a)
{
    detail::SnfWorker w(a, /*track=*/true);
    w.run();
    SmithResult r;
    r.diag = SmithDiagonal{w.diagonal()};
    r.U = w.take_u();
    r.V = w.take_v();
    r.det_u = w.det_u();
    r.det_v = w.det_v();
    return r;
}

inline long integer_rank(const SparseIntMatrix& a) { return smith_diagonal(a).rank(); }

}  // namespace polycoh
