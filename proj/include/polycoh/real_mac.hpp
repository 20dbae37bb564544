#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "polycoh/monomial_complex.hpp"
#include "polycoh/product_table.hpp"
#include "polycoh/simplicial.hpp"

namespace polycoh {

// Number of pairs (a, b) with a in A, b in B and b < a; the inversion count
// of the concatenation AB of two increasing sequences.
inline int inversions_between(VSet a, VSet b)
{
    int inv = 0;
    for (VSet t = a; t; t &= t - 1) {
        int v = std::countr_zero(t) + 1;
        inv += vset_count_below(b, v);
    }
    return inv;
}

// Sign of the permutation sorting the concatenation IL of two increasing
// disjoint sequences.
inline int epsilon(VSet i_set, VSet l_set)
{
    if (i_set & l_set)
        throw InputError("epsilon needs disjoint index sets, got " + vset_to_string(i_set) +
                         " and " + vset_to_string(l_set));
    return inversions_between(i_set, l_set) % 2 == 0 ? 1 : -1;
}

// Both finite models share the same combinatorial basis: pairs (I, L) with
// L a simplex of K and I disjoint from L. The enumeration below fixes the
// basis order for everything downstream (and aligns the two models index
// by index, which is what makes the comparison map a signed identity).
struct BasisKey {
    VSet I = 0, L = 0;

    bool operator<(const BasisKey& o) const
    {
        if (vset_size(L) != vset_size(o.L)) return vset_size(L) < vset_size(o.L);
        if (L != o.L) return vset_less(L, o.L);
        if (vset_size(I) != vset_size(o.I)) return vset_size(I) < vset_size(o.I);
        return vset_less(I, o.I);
    }
    bool operator==(const BasisKey& o) const { return I == o.I && L == o.L; }
};

inline std::vector<BasisKey> model_basis_keys(const SimplicialComplex& k)
{
    int m = k.vertex_count();
    std::vector<BasisKey> keys;
    for (VSet l : k.simplices()) {
        VSet comp = full_vset(m) & ~l;
        // enumerate all subsets of the complement
        VSet i = 0;
        for (;;) {
            keys.push_back({i, l});
            if (i == comp) break;
            i = (i - comp) & comp;  // next subset of comp
        }
    }
    std::sort(keys.begin(), keys.end());
    return keys;
}

inline std::string monomial_label(const BasisKey& key, const char* neg_letter,
                                  const char* pos_letter)
{
    if (key.I == 0 && key.L == 0) return "1";
    std::string out;
    for (int v : vset_elements(key.I)) {
        if (!out.empty()) out += " ";
        out += neg_letter + std::to_string(v);
    }
    for (int v : vset_elements(key.L)) {
        if (!out.empty()) out += " ";
        out += pos_letter + std::to_string(v);
    }
    return out;
}

template <class KeyT>
std::map<KeyT, int> index_of_keys(const std::vector<KeyT>& keys)
{
    std::map<KeyT, int> idx;
    for (size_t i = 0; i < keys.size(); ++i) idx.emplace(keys[i], static_cast<int>(i));
    return idx;
}

struct RbarModel {
    MonomialComplex complex;
    std::vector<BasisKey> keys;
    std::map<BasisKey, int> index;
};

struct BkModel {
    MonomialComplex complex;
    ProductTable product;
    std::vector<BasisKey> keys;
    std::map<BasisKey, int> index;
};

// The finite quotient model: basis w_I y_L with L in K, I disjoint from L;
// d(w_I y_L) = sum_k (-1)^{k+1} w_{I minus i_k} y_{L + i_k}, the term dropped
// when L + i_k is not a simplex. The y variables commute strictly, so the
// only signs come from walking d past the w factors.
inline RbarModel build_rbar(const SimplicialComplex& k)
{
    RbarModel model;
    model.keys = model_basis_keys(k);
    model.index = index_of_keys(model.keys);

    std::vector<BasisMonomial> basis;
    basis.reserve(model.keys.size());
    for (const auto& key : model.keys)
        basis.push_back({-vset_size(key.I), vset_size(key.I) + vset_size(key.L),
                         key.I | key.L, monomial_label(key, "w", "y")});

    std::vector<MonomialComplex::DiffTriple> triples;
    for (size_t s = 0; s < model.keys.size(); ++s) {
        const auto& key = model.keys[s];
        int kpos = 0;
        for (int v : vset_elements(key.I)) {
            ++kpos;
            VSet new_l = key.L | vset_bit(v);
            if (!k.contains(new_l)) continue;
            int dst = model.index.at({key.I & ~vset_bit(v), new_l});
            triples.push_back({static_cast<int>(s), dst, kpos % 2 == 1 ? 1 : -1});
        }
    }
    model.complex =
        MonomialComplex(k.vertex_count(), std::move(basis), triples, GradingMode::Bigraded);
    return model;
}

// The Cai-Franz model: basis s_I t_L with the same index combinatorics;
// d(s_I t_L) = sum_k (-1)^{r+1} s_{I minus i_k} t_{L + i_k} where r counts
// the t indices below i_k (d s_i = -t_i plus the t-interchange signs).
//
// The product on two normal forms s_I t_L * s_I' t_L':
//   zero when the t sets meet (t t = 0), when I meets L' (s t = 0), or when
//   the combined t set leaves K; otherwise the surviving word is
//   s_{(I u I') - L''} t_{L u L'} and the only sign is the t-interleaving
//   parity (t's of the right factor passing larger t's of the left one).
inline BkModel build_bk(const SimplicialComplex& k)
{
    BkModel model;
    model.keys = model_basis_keys(k);
    model.index = index_of_keys(model.keys);

    std::vector<BasisMonomial> basis;
    basis.reserve(model.keys.size());
    for (const auto& key : model.keys)
        basis.push_back({-vset_size(key.I), vset_size(key.I) + vset_size(key.L),
                         key.I | key.L, monomial_label(key, "s", "t")});

    std::vector<MonomialComplex::DiffTriple> triples;
    for (size_t s = 0; s < model.keys.size(); ++s) {
        const auto& key = model.keys[s];
        for (int v : vset_elements(key.I)) {
            VSet new_l = key.L | vset_bit(v);
            if (!k.contains(new_l)) continue;
            int dst = model.index.at({key.I & ~vset_bit(v), new_l});
            int r = vset_count_below(key.L, v);
            triples.push_back({static_cast<int>(s), dst, r % 2 == 0 ? -1 : 1});
        }
    }
    model.complex =
        MonomialComplex(k.vertex_count(), std::move(basis), triples, GradingMode::Bigraded);

    int n = static_cast<int>(model.keys.size());
    model.product = ProductTable(n, model.index.at({0, 0}));
    for (int a = 0; a < n; ++a) {
        const auto& x = model.keys[a];
        for (int b = 0; b < n; ++b) {
            const auto& y = model.keys[b];
            if (x.L & y.L) continue;   // t_i t_i = 0
            if (x.I & y.L) continue;   // s_i t_i = 0
            VSet new_l = x.L | y.L;
            if (!k.contains(new_l)) continue;
            VSet new_i = (x.I | y.I) & ~new_l;  // t_i s_i = t_i keeps the t
            int sign = inversions_between(x.L, y.L) % 2 == 0 ? 1 : -1;
            model.product.set_product(a, b, Term{{model.index.at({new_i, new_l}), sign}});
        }
    }
    return model;
}

// The signed comparison between the two models: basis enumeration agrees
// index by index, so f is the identity with coefficient epsilon(I, L).
struct SignedBasisMap {
    std::vector<int> target;
    std::vector<int> sign;

    Term apply(const Term& t) const
    {
        Term out;
        for (const auto& [i, c] : t) term_add(out, target[i], c * sign[i]);
        return out;
    }
};

inline SignedBasisMap map_f(const RbarModel& rbar, const BkModel& bk)
{
    SignedBasisMap f;
    f.target.resize(rbar.keys.size());
    f.sign.resize(rbar.keys.size());
    for (size_t i = 0; i < rbar.keys.size(); ++i) {
        const auto& key = rbar.keys[i];
        f.target[i] = bk.index.at(key);
        f.sign[i] = epsilon(key.I, key.L);
    }
    return f;
}

// f d_R = (-1)^p d_B f, exactly, on every basis element of w-degree p.
inline CheckResult verify_f(const RbarModel& rbar, const BkModel& bk,
                            const std::string& id = "f.sign_chain")
{
    SignedBasisMap f = map_f(rbar, bk);
    for (int i = 0; i < rbar.complex.size(); ++i) {
        Term lhs = f.apply(rbar.complex.differential_of(i));
        Term rhs = bk.complex.apply_differential(Term{{f.target[i], f.sign[i]}});
        int p = vset_size(rbar.keys[i].I);
        if (p % 2 == 1)
            for (auto& [idx, c] : rhs) c = -c;
        if (lhs != rhs)
            return CheckResult::fail(id, "f d(" + rbar.complex.monomial(i).label + ") = " +
                                             bk.complex.term_to_string(lhs) +
                                             " but (-1)^p d f gives " +
                                             bk.complex.term_to_string(rhs));
    }
    return CheckResult::pass(id);
}

// Commutative product on the quotient model: any shared index dies in the
// quotient (w_i^2 = y_i^2 = w_i y_i = 0), the rest is sign bookkeeping on
// the w letters.
inline ProductTable build_rbar_product(const SimplicialComplex& k, const RbarModel& model)
{
    int n = static_cast<int>(model.keys.size());
    ProductTable p(n, model.index.at({0, 0}));
    for (int a = 0; a < n; ++a) {
        const auto& x = model.keys[a];
        for (int b = 0; b < n; ++b) {
            const auto& y = model.keys[b];
            if ((x.I | x.L) & (y.I | y.L)) continue;
            VSet new_l = x.L | y.L;
            if (!k.contains(new_l)) continue;
            int sign = inversions_between(x.I, y.I) % 2 == 0 ? 1 : -1;
            p.set_product(a, b, Term{{model.index.at({x.I | y.I, new_l}), sign}});
        }
    }
    return p;
}

// |basis| = sum over simplices L of 2^(m - |L|); a quick bijection witness.
inline long long expected_basis_size(const SimplicialComplex& k)
{
    long long total = 0;
    for (VSet l : k.simplices()) total += 1LL << (k.vertex_count() - vset_size(l));
    return total;
}

}  // namespace polycoh
