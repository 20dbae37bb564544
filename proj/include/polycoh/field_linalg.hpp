#pragma once

#include <optional>
#include <vector>

#include "polycoh/bigint.hpp"
#include "polycoh/errors.hpp"
#include "polycoh/sparse_matrix.hpp"

namespace polycoh {

// Field abstraction for the two fields the ring machinery runs over.

struct FieldQ {
    using Elem = Rational;
    Elem zero() const { return Rational(0); }
    Elem one() const { return Rational(1); }
    Elem from_int(const BigInt& v) const { return Rational(v); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem div(const Elem& a, const Elem& b) const { return a / b; }
    Elem neg(const Elem& a) const { return -a; }
    bool is_zero(const Elem& a) const { return a == 0; }
    std::string to_string(const Elem& a) const { return a.str(); }
};

struct FieldFp {
    long p;
    using Elem = long;
    explicit FieldFp(long prime) : p(prime) {}
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(const BigInt& v) const
    {
        long r = static_cast<long>(v % p);
        return r < 0 ? r + p : r;
    }
    Elem add(Elem a, Elem b) const { return (a + b) % p; }
    Elem sub(Elem a, Elem b) const { return ((a - b) % p + p) % p; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p; }
    Elem div(Elem a, Elem b) const { return mul(a, inverse(b)); }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    bool is_zero(Elem a) const { return a % p == 0; }
    std::string to_string(Elem a) const { return std::to_string(a); }

    Elem inverse(Elem x) const
    {
        if (x % p == 0) throw StructureError("division by zero in Z/p");
        long t = 0, nt = 1, r = p, nr = ((x % p) + p) % p;
        while (nr != 0) {
            long q = r / nr;
            long tmp = t - q * nt;
            t = nt;
            nt = tmp;
            tmp = r - q * nr;
            r = nr;
            nr = tmp;
        }
        return t < 0 ? t + p : t;
    }
};

// Incrementally built column space over a field. Supports the two queries the
// representative machinery needs: "is v already in the span" (with the
// expressing coefficients) and "extend the span by v".
template <class Field>
class SpanBuilder {
public:
    using Elem = typename Field::Elem;

    SpanBuilder(Field f, int dim) : f_(f), dim_(dim) {}

    int size() const { return static_cast<int>(cols_.size()); }
    int added() const { return added_; }

    // Reduce v against the stored columns. Returns the residual and the
    // coefficients used: v = sum coeff[k] * col_k + residual.
    std::pair<std::vector<Elem>, std::vector<Elem>> reduce(std::vector<Elem> v) const
    {
        std::vector<Elem> coeff(cols_.size(), f_.zero());
        for (size_t k = 0; k < cols_.size(); ++k) {
            const Elem& lead = v[pivot_[k]];
            if (f_.is_zero(lead)) continue;
            Elem c = lead;  // columns are normalised to lead coefficient 1
            for (int i = 0; i < dim_; ++i) v[i] = f_.sub(v[i], f_.mul(c, cols_[k][i]));
            coeff[k] = c;
        }
        return {std::move(v), std::move(coeff)};
    }

    bool contains(const std::vector<Elem>& v) const
    {
        auto [res, coeff] = reduce(v);
        for (const auto& e : res)
            if (!f_.is_zero(e)) return false;
        return true;
    }

    // Coefficients expressing v in terms of the ORIGINAL added vectors,
    // or nullopt if v lies outside the span.
    std::optional<std::vector<Elem>> express(const std::vector<Elem>& v) const
    {
        auto [res, coeff] = reduce(v);
        for (const auto& e : res)
            if (!f_.is_zero(e)) return std::nullopt;
        // cols_[k] = sum_j basis_expr_[k][j] * original_j
        std::vector<Elem> out(added_, f_.zero());
        for (size_t k = 0; k < cols_.size(); ++k)
            for (size_t j = 0; j < basis_expr_[k].size(); ++j)
                out[j] = f_.add(out[j], f_.mul(coeff[k], basis_expr_[k][j]));
        return out;
    }

    // Returns true if v enlarged the span.
    bool add(const std::vector<Elem>& v)
    {
        auto [res, coeff] = reduce(v);
        int piv = -1;
        for (int i = 0; i < dim_; ++i)
            if (!f_.is_zero(res[i])) { piv = i; break; }
        ++added_;
        if (piv < 0) return false;
        Elem lead = res[piv];
        for (int i = 0; i < dim_; ++i) res[i] = f_.div(res[i], lead);
        std::vector<Elem> expr(added_, f_.zero());
        expr[added_ - 1] = f_.div(f_.one(), lead);
        for (size_t k = 0; k < cols_.size(); ++k) {
            // res = (v - sum coeff_k col_k) / lead
            Elem c = f_.neg(f_.div(coeff[k], lead));
            for (int j = 0; j < static_cast<int>(basis_expr_[k].size()); ++j)
                expr[j] = f_.add(expr[j], f_.mul(c, basis_expr_[k][j]));
        }
        cols_.push_back(std::move(res));
        pivot_.push_back(piv);
        basis_expr_.push_back(std::move(expr));
        return true;
    }

private:
    Field f_;
    int dim_;
    int added_ = 0;
    std::vector<std::vector<Elem>> cols_;        // reduced, lead coefficient 1
    std::vector<int> pivot_;                     // lead row per stored column
    std::vector<std::vector<Elem>> basis_expr_;  // stored column in terms of added vectors
};

// Kernel basis of an integer matrix read over a field, via row reduction.
// Deterministic: columns processed left to right, free columns give the
// kernel vectors in column order.
template <class Field>
std::vector<std::vector<typename Field::Elem>> field_kernel_basis(const Field& f,
                                                                  const SparseIntMatrix& a)
{
    using Elem = typename Field::Elem;
    int n = a.rows(), m = a.cols();
    std::vector<std::vector<Elem>> rowmat(n, std::vector<Elem>(m, f.zero()));
    for (int i = 0; i < n; ++i)
        for (const auto& [j, v] : a.row(i)) rowmat[i][j] = f.from_int(v);

    std::vector<int> pivot_of_col(m, -1);
    int rank = 0;
    for (int j = 0; j < m && rank < n; ++j) {
        int sel = -1;
        for (int i = rank; i < n; ++i)
            if (!f.is_zero(rowmat[i][j])) { sel = i; break; }
        if (sel < 0) continue;
        std::swap(rowmat[sel], rowmat[rank]);
        Elem lead = rowmat[rank][j];
        for (int k = j; k < m; ++k) rowmat[rank][k] = f.div(rowmat[rank][k], lead);
        for (int i = 0; i < n; ++i) {
            if (i == rank || f.is_zero(rowmat[i][j])) continue;
            Elem c = rowmat[i][j];
            for (int k = j; k < m; ++k)
                rowmat[i][k] = f.sub(rowmat[i][k], f.mul(c, rowmat[rank][k]));
        }
        pivot_of_col[j] = rank;
        ++rank;
    }

    std::vector<std::vector<Elem>> kernel;
    for (int j = 0; j < m; ++j) {
        if (pivot_of_col[j] >= 0) continue;
        std::vector<Elem> v(m, f.zero());
        v[j] = f.one();
        for (int k = 0; k < m; ++k)
            if (pivot_of_col[k] >= 0) v[k] = f.neg(rowmat[pivot_of_col[k]][j]);
        kernel.push_back(std::move(v));
    }
    return kernel;
}

template <class Field>
long field_rank(const Field& f, const SparseIntMatrix& a)
{
    return a.cols() - static_cast<long>(field_kernel_basis(f, a).size());
}

}  // namespace polycoh
