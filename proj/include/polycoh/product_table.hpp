#pragma once

#include <optional>
#include <vector>

#include "polycoh/monomial_complex.hpp"

namespace polycoh {

// Which degree feeds the Koszul sign in d(a*b) = d(a)*b + (-1)^eps a*d(b).
// The Koszul-type algebras sign on the first degree; the Cai-Franz family
// signs on the total degree. Mixing the two breaks the comparison maps.
enum class LeibnizSign { FirstDegree, TotalDegree };

inline int leibniz_exponent(const BasisMonomial& m, LeibnizSign mode)
{
    return mode == LeibnizSign::FirstDegree ? m.d1 : m.total_degree();
}

// Structure constants of an associative product on a monomial basis.
// Truncated algebras may leave pairs undefined; checks skip those.
class ProductTable {
public:
    ProductTable() = default;
    ProductTable(int n, int unit_index)
        : n_(n), unit_(unit_index), tab_(static_cast<size_t>(n) * n),
          defined_(static_cast<size_t>(n) * n, true)
    {
    }

    int size() const { return n_; }
    int unit_index() const { return unit_; }

    void set_product(int i, int j, Term t) { tab_[pos(i, j)] = std::move(t); }
    void set_undefined(int i, int j) { defined_[pos(i, j)] = false; }

    bool defined(int i, int j) const { return defined_[pos(i, j)]; }
    const Term& product(int i, int j) const { return tab_[pos(i, j)]; }

    // Bilinear expansion; nullopt if any needed pair is undefined.
    std::optional<Term> multiply(const Term& a, const Term& b) const
    {
        Term out;
        for (const auto& [i, ci] : a)
            for (const auto& [j, cj] : b) {
                if (!defined(i, j)) return std::nullopt;
                term_axpy(out, tab_[pos(i, j)], ci * cj);
            }
        return out;
    }

    CheckResult check_unit(const MonomialComplex& c, const std::string& id = "product.unit") const
    {
        for (int i = 0; i < n_; ++i) {
            Term expect{{i, 1}};
            if (defined(unit_, i) && product(unit_, i) != expect)
                return CheckResult::fail(id, "1 * " + c.monomial(i).label + " != " +
                                                 c.monomial(i).label);
            if (defined(i, unit_) && product(i, unit_) != expect)
                return CheckResult::fail(id, c.monomial(i).label + " * 1 != " +
                                                 c.monomial(i).label);
        }
        return CheckResult::pass(id);
    }

    // Exhaustive associativity on basis triples. Basis products here are
    // short combinations, so this stays cheap even at a few hundred basis
    // elements; a single-term fast path covers the monomial-valued tables.
    CheckResult check_associativity(const MonomialComplex& c,
                                    const std::string& id = "product.assoc") const
    {
        // allocation-free comparison of scaled single-step products
        auto scaled_equal = [](const Term& a, long long ca, const Term& b, long long cb) {
            bool a_zero = ca == 0 || a.empty(), b_zero = cb == 0 || b.empty();
            if (a_zero || b_zero) return a_zero && b_zero;
            if (a.size() != b.size()) return false;
            for (size_t t = 0; t < a.size(); ++t)
                if (a[t].first != b[t].first || a[t].second * ca != b[t].second * cb)
                    return false;
            return true;
        };
        static const Term kZero;
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                if (!defined(i, j)) continue;
                const Term& ij = tab_[pos(i, j)];
                for (int k = 0; k < n_; ++k) {
                    if (!defined(j, k)) continue;
                    const Term& jk = tab_[pos(j, k)];
                    bool ok;
                    if (ij.size() <= 1 && jk.size() <= 1) {
                        // monomial-valued fast path: both sides are one table row
                        if (!ij.empty() && !defined(ij[0].first, k)) continue;
                        if (!jk.empty() && !defined(i, jk[0].first)) continue;
                        const Term& left = ij.empty() ? kZero : tab_[pos(ij[0].first, k)];
                        const Term& right = jk.empty() ? kZero : tab_[pos(i, jk[0].first)];
                        ok = scaled_equal(left, ij.empty() ? 0 : ij[0].second, right,
                                          jk.empty() ? 0 : jk[0].second);
                    } else {
                        std::optional<Term> left = multiply(ij, Term{{k, 1}});
                        std::optional<Term> right = multiply(Term{{i, 1}}, jk);
                        if (!left || !right) continue;
                        ok = *left == *right;
                    }
                    if (!ok)
                        return CheckResult::fail(id, "( " + c.monomial(i).label + " * " +
                                                         c.monomial(j).label + " ) * " +
                                                         c.monomial(k).label +
                                                         " differs from a(bc)");
                }
            }
        return CheckResult::pass(id);
    }

    // Total degree is always additive. The bigraded refinement only holds for
    // the strictly bigraded products (request it where it applies).
    CheckResult check_degree_additivity(const MonomialComplex& c, bool bigraded,
                                        const std::string& id = "product.degree") const
    {
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                if (!defined(i, j)) continue;
                for (const auto& [k, coef] : tab_[pos(i, j)]) {
                    bool ok =
                        bigraded
                            ? (c.monomial(k).d1 == c.monomial(i).d1 + c.monomial(j).d1 &&
                               c.monomial(k).d2 == c.monomial(i).d2 + c.monomial(j).d2)
                            : (c.monomial(k).total_degree() ==
                               c.monomial(i).total_degree() + c.monomial(j).total_degree());
                    if (!ok)
                        return CheckResult::fail(id, c.monomial(i).label + " * " +
                                                         c.monomial(j).label + " -> " +
                                                         c.monomial(k).label);
                }
            }
        return CheckResult::pass(id);
    }

    CheckResult check_support_union(const MonomialComplex& c,
                                    const std::string& id = "product.support") const
    {
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                if (!defined(i, j)) continue;
                VSet u = c.monomial(i).support | c.monomial(j).support;
                for (const auto& [k, coef] : tab_[pos(i, j)])
                    if (c.monomial(k).support != u)
                        return CheckResult::fail(id, c.monomial(i).label + " * " +
                                                         c.monomial(j).label + " -> " +
                                                         c.monomial(k).label);
            }
        return CheckResult::pass(id);
    }

private:
    size_t pos(int i, int j) const { return static_cast<size_t>(i) * n_ + j; }

    int n_ = 0;
    int unit_ = 0;
    std::vector<Term> tab_;
    std::vector<bool> defined_;
};

// d(a*b) = d(a)*b + (-1)^eps(a) a*d(b) on every defined basis pair.
inline CheckResult check_leibniz(const MonomialComplex& c, const ProductTable& p,
                                 LeibnizSign mode, const std::string& id = "leibniz")
{
    for (int i = 0; i < c.size(); ++i)
        for (int j = 0; j < c.size(); ++j) {
            if (!p.defined(i, j)) continue;
            Term lhs = c.apply_differential(p.product(i, j));
            std::optional<Term> da_b = p.multiply(c.differential_of(i), Term{{j, 1}});
            std::optional<Term> a_db = p.multiply(Term{{i, 1}}, c.differential_of(j));
            if (!da_b || !a_db) continue;  // truncated out of range
            long long sign = leibniz_exponent(c.monomial(i), mode) % 2 == 0 ? 1 : -1;
            Term rhs = *da_b;
            term_axpy(rhs, *a_db, sign);
            if (lhs != rhs)
                return CheckResult::fail(
                    id, "d(" + c.monomial(i).label + " * " + c.monomial(j).label + ") = " +
                            c.term_to_string(lhs) + " but Leibniz gives " +
                            c.term_to_string(rhs));
        }
    return CheckResult::pass(id);
}

}  // namespace polycoh
