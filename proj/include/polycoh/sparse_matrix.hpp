#pragma once

#include <map>
#include <vector>

#include "polycoh/bigint.hpp"
#include "polycoh/errors.hpp"

namespace polycoh {

// Sparse integer matrix, row-major. Entries are arbitrary precision.
class SparseIntMatrix {
public:
    SparseIntMatrix() = default;
    SparseIntMatrix(int rows, int cols) : rows_(rows), cols_(cols), row_(rows) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void add(int i, int j, const BigInt& v)
    {
        check_index(i, j);
        if (v == 0) return;
        auto& r = row_[i];
        auto it = r.find(j);
        if (it == r.end()) {
            r.emplace(j, v);
        } else {
            it->second += v;
            if (it->second == 0) r.erase(it);
        }
    }

    void set(int i, int j, const BigInt& v)
    {
        check_index(i, j);
        if (v == 0)
            row_[i].erase(j);
        else
            row_[i][j] = v;
    }

    BigInt get(int i, int j) const
    {
        check_index(i, j);
        auto it = row_[i].find(j);
        return it == row_[i].end() ? BigInt(0) : it->second;
    }

    const std::map<int, BigInt>& row(int i) const { return row_[i]; }

    long nnz() const
    {
        long n = 0;
        for (const auto& r : row_) n += static_cast<long>(r.size());
        return n;
    }

    bool is_zero() const { return nnz() == 0; }

    SparseIntMatrix transpose() const
    {
        SparseIntMatrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (const auto& [j, v] : row_[i]) t.row_[j].emplace(i, v);
        return t;
    }

    std::vector<BigInt> apply(const std::vector<BigInt>& x) const
    {
        if (static_cast<int>(x.size()) != cols_)
            throw StructureError("matrix-vector size mismatch");
        std::vector<BigInt> y(rows_, BigInt(0));
        for (int i = 0; i < rows_; ++i)
            for (const auto& [j, v] : row_[i]) y[i] += v * x[j];
        return y;
    }

    friend SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b)
    {
        if (a.cols_ != b.rows_) throw StructureError("matrix product dimension mismatch");
        SparseIntMatrix c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (const auto& [k, av] : a.row_[i])
                for (const auto& [j, bv] : b.row_[k]) c.add(i, j, av * bv);
        return c;
    }

    bool operator==(const SparseIntMatrix& o) const
    {
        return rows_ == o.rows_ && cols_ == o.cols_ && row_ == o.row_;
    }

private:
    void check_index(int i, int j) const
    {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
            throw StructureError("matrix index out of range");
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::map<int, BigInt>> row_;
};

// Dense integer matrix; used for the unimodular transforms of an SNF, which
// fill up quickly and stay small in this code base.
class DenseIntMatrix {
public:
    DenseIntMatrix() = default;
    DenseIntMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, BigInt(0))
    {
    }

    static DenseIntMatrix identity(int n)
    {
        DenseIntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    BigInt& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const BigInt& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    std::vector<BigInt> apply(const std::vector<BigInt>& x) const
    {
        if (static_cast<int>(x.size()) != cols_)
            throw StructureError("matrix-vector size mismatch");
        std::vector<BigInt> y(rows_, BigInt(0));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (a_[static_cast<size_t>(i) * cols_ + j] != 0)
                    y[i] += a_[static_cast<size_t>(i) * cols_ + j] * x[j];
        return y;
    }

    SparseIntMatrix to_sparse() const
    {
        SparseIntMatrix s(rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (at(i, j) != 0) s.set(i, j, at(i, j));
        return s;
    }

    // Fraction-free determinant (Bareiss); test oracle for unimodularity.
    BigInt determinant() const
    {
        if (rows_ != cols_) throw StructureError("determinant of non-square matrix");
        int n = rows_;
        if (n == 0) return 1;
        DenseIntMatrix w = *this;
        BigInt prev = 1;
        int sign = 1;
        for (int k = 0; k < n - 1; ++k) {
            if (w.at(k, k) == 0) {
                int swap_row = -1;
                for (int i = k + 1; i < n; ++i)
                    if (w.at(i, k) != 0) { swap_row = i; break; }
                if (swap_row < 0) return 0;
                for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(swap_row, j));
                sign = -sign;
            }
            for (int i = k + 1; i < n; ++i)
                for (int j = k + 1; j < n; ++j)
                    w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
            prev = w.at(k, k);
        }
        return sign * w.at(n - 1, n - 1);
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<BigInt> a_;
};

}  // namespace polycoh
