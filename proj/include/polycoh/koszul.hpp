#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "polycoh/monomial_complex.hpp"
#include "polycoh/product_table.hpp"
#include "polycoh/real_mac.hpp"
#include "polycoh/simplicial_cohomology.hpp"

namespace polycoh {

// Exponent vector of a monomial in the y variables.
using ExpVec = std::vector<int>;

inline int expvec_degree(const ExpVec& a)
{
    int d = 0;
    for (int e : a) d += e;
    return d;
}

inline VSet expvec_support(const ExpVec& a)
{
    VSet s = 0;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0) s |= vset_bit(static_cast<int>(i) + 1);
    return s;
}

// All exponent vectors of degree <= cap whose support is a simplex of K,
// grouped by degree. Within a degree the order is lexicographic descending,
// so y1^2 comes before y1 y2 before y2^2.
inline std::vector<std::vector<ExpVec>> sr_basis(const SimplicialComplex& k, int cap)
{
    if (cap < 0) throw InputError("degree cap must be nonnegative");
    int m = k.vertex_count();
    std::vector<std::vector<ExpVec>> by_degree(cap + 1);
    ExpVec a(m, 0);
    // depth-first over positions; prune on support leaving K
    auto rec = [&](auto&& self, int pos, int degree_left) -> void {
        if (pos == m) {
            by_degree[cap - degree_left].push_back(a);
            return;
        }
        for (int e = degree_left; e >= 0; --e) {
            a[pos] = e;
            if (e == 0 || k.contains(expvec_support(a)))
                self(self, pos + 1, degree_left - e);
        }
        a[pos] = 0;
    };
    rec(rec, 0, cap);
    for (auto& list : by_degree)
        std::sort(list.begin(), list.end(), std::greater<ExpVec>());
    return by_degree;
}

struct KoszulKey {
    VSet I = 0;
    ExpVec a;

    bool operator<(const KoszulKey& o) const
    {
        int d2 = vset_size(I) + expvec_degree(a);
        int od2 = vset_size(o.I) + expvec_degree(o.a);
        if (d2 != od2) return d2 < od2;
        if (vset_size(I) != vset_size(o.I)) return vset_size(I) > vset_size(o.I);
        if (I != o.I) return vset_less(I, o.I);
        return a > o.a;
    }
    bool operator==(const KoszulKey& o) const { return I == o.I && a == o.a; }
};

inline std::string koszul_label(const KoszulKey& key)
{
    std::string out;
    for (int v : vset_elements(key.I)) {
        if (!out.empty()) out += " ";
        out += "w" + std::to_string(v);
    }
    for (size_t i = 0; i < key.a.size(); ++i) {
        if (key.a[i] == 0) continue;
        if (!out.empty()) out += " ";
        out += "y" + std::to_string(i + 1);
        if (key.a[i] > 1) out += "^" + std::to_string(key.a[i]);
    }
    return out.empty() ? "1" : out;
}

struct KoszulModel {
    MonomialComplex complex;
    std::vector<KoszulKey> keys;
    std::map<KoszulKey, int> index;
    int cap = 0;
};

// The Koszul complex L(w_1..w_m) (x) SR<K>, truncated at second degree cap.
// Basis w_I (x) y^a with supp(a) a simplex of K and |I| + deg(a) <= cap; no
// disjointness between I and a. The differential multiplies y_i into the
// polynomial part and keeps the second degree, so every truncation slice is
// a complete complex.
inline KoszulModel build_koszul(const SimplicialComplex& k, int cap)
{
    KoszulModel model;
    model.cap = cap;
    int m = k.vertex_count();
    auto sr = sr_basis(k, cap);
    for (VSet i = 0;; ++i) {
        if (vset_size(i) <= cap)
            for (int d = 0; d + vset_size(i) <= cap; ++d)
                for (const auto& a : sr[d]) model.keys.push_back({i, a});
        if (i == full_vset(m)) break;
    }
    std::sort(model.keys.begin(), model.keys.end());
    model.index = index_of_keys(model.keys);

    std::vector<BasisMonomial> basis;
    basis.reserve(model.keys.size());
    for (const auto& key : model.keys)
        basis.push_back({-vset_size(key.I), vset_size(key.I) + expvec_degree(key.a),
                         key.I | expvec_support(key.a), koszul_label(key)});

    std::vector<MonomialComplex::DiffTriple> triples;
    for (size_t s = 0; s < model.keys.size(); ++s) {
        const auto& key = model.keys[s];
        int kpos = 0;
        for (int v : vset_elements(key.I)) {
            ++kpos;
            ExpVec a = key.a;
            a[v - 1] += 1;
            if (!k.contains(expvec_support(a))) continue;
            int dst = model.index.at({key.I & ~vset_bit(v), a});
            triples.push_back({static_cast<int>(s), dst, kpos % 2 == 1 ? 1 : -1});
        }
    }
    model.complex = MonomialComplex(m, std::move(basis), triples, GradingMode::Bigraded);
    return model;
}

// Bigraded Tor: cohomology of the truncated Koszul complex per bidegree.
inline BigradedCohomology tor_bigraded(const SimplicialComplex& k, int cap,
                                       const CoeffRing& coeff)
{
    return build_koszul(k, cap).complex.bigraded_cohomology(coeff);
}

// Partial product table on a truncated Koszul model; pairs whose second
// degrees overflow the cap stay undefined and checks skip them. Only used
// at small sizes (the table is quadratic in the basis).
inline ProductTable build_koszul_product(const SimplicialComplex& k, const KoszulModel& model)
{
    int n = static_cast<int>(model.keys.size());
    ProductTable p(n, model.index.at({0, ExpVec(k.vertex_count(), 0)}));
    for (int x = 0; x < n; ++x) {
        const auto& a = model.keys[x];
        int d2a = vset_size(a.I) + expvec_degree(a.a);
        for (int y = 0; y < n; ++y) {
            const auto& b = model.keys[y];
            if (d2a + vset_size(b.I) + expvec_degree(b.a) > model.cap) {
                p.set_undefined(x, y);
                continue;
            }
            if (a.I & b.I) continue;  // w_i^2 = 0
            ExpVec sum = a.a;
            for (size_t t = 0; t < sum.size(); ++t) sum[t] += b.a[t];
            if (!k.contains(expvec_support(sum))) continue;
            int sign = inversions_between(a.I, b.I) % 2 == 0 ? 1 : -1;
            p.set_product(x, y, Term{{model.index.at({a.I | b.I, sum}), sign}});
        }
    }
    return p;
}

// A linear operator on the basis of a monomial complex.
struct LinearEndo {
    std::vector<Term> map;

    Term apply(const Term& t) const
    {
        Term out;
        for (const auto& [i, c] : t) term_axpy(out, map[i], c);
        return out;
    }
};

// The contracting homotopy of the full Koszul resolution, assembled from the
// one-variable homotopy s(y^j) = w y^{j-1} by tensor induction: on a basis
// monomial, act with s in the least active variable (zero if that variable
// already carries w).
inline LinearEndo homotopy_s(const KoszulModel& e)
{
    LinearEndo s;
    s.map.resize(e.keys.size());
    for (size_t x = 0; x < e.keys.size(); ++x) {
        const auto& key = e.keys[x];
        VSet active = key.I | expvec_support(key.a);
        if (!active) continue;
        int i = std::countr_zero(active) + 1;
        if (vset_contains(key.I, i)) continue;  // w_i w_i = 0
        ExpVec a = key.a;
        a[i - 1] -= 1;
        // i is below every index of I, so no reordering sign
        s.map[x] = Term{{e.index.at({key.I | vset_bit(i), a}), 1}};
    }
    return s;
}

// ds + sd = id - eta eps on the truncated resolution; exact on every basis
// element (both d and s preserve the second degree, so the truncation is
// closed under both).
inline CheckResult verify_e_homotopy(int m, int cap, const std::string& id = "e.homotopy")
{
    SimplicialComplex full = catalog_complex("simplex" + std::to_string(m));
    KoszulModel e = build_koszul(full, cap);
    LinearEndo s = homotopy_s(e);
    int unit = e.index.at({0, ExpVec(m, 0)});
    for (int x = 0; x < e.complex.size(); ++x) {
        Term lhs = e.complex.apply_differential(s.map[x]);
        term_axpy(lhs, s.apply(e.complex.differential_of(x)), 1);
        Term rhs{{x, 1}};
        if (x == unit) term_add(rhs, unit, -1);
        if (lhs != rhs)
            return CheckResult::fail(id, "ds + sd differs from id - eta eps on " +
                                             e.complex.monomial(x).label);
    }
    return CheckResult::pass(id);
}

// The ideal (y_i^2, w_i y_i) inside the truncated Koszul model of K, with
// the contraction s(x) = w_{i(x)} * x / y_{i(x)} taken at the least bad
// index. The homotopy identity it satisfies is ds + sd = id: the leading
// Leibniz term of d(w_i z) recovers x and the trailing term cancels against
// s(d(x)), which both live at the same bad index.
struct IdealHomotopy {
    KoszulModel model;
    std::vector<char> in_ideal;
    LinearEndo s;
};

inline int minimal_bad_index(const KoszulKey& key)
{
    for (size_t i = 0; i < key.a.size(); ++i) {
        if (key.a[i] >= 2) return static_cast<int>(i) + 1;
        if (key.a[i] >= 1 && vset_contains(key.I, static_cast<int>(i) + 1))
            return static_cast<int>(i) + 1;
    }
    return 0;
}

inline IdealHomotopy build_ideal_homotopy(const SimplicialComplex& k, int cap)
{
    IdealHomotopy h;
    h.model = build_koszul(k, cap);
    h.in_ideal.resize(h.model.keys.size(), 0);
    h.s.map.resize(h.model.keys.size());
    for (size_t x = 0; x < h.model.keys.size(); ++x) {
        const auto& key = h.model.keys[x];
        int i = minimal_bad_index(key);
        if (i == 0) continue;
        h.in_ideal[x] = 1;
        if (vset_contains(key.I, i)) continue;  // w_i collision, s(x) = 0
        ExpVec a = key.a;
        a[i - 1] -= 1;
        int sign = vset_count_below(key.I, i) % 2 == 0 ? 1 : -1;
        h.s.map[x] = Term{{h.model.index.at({key.I | vset_bit(i), a}), sign}};
    }
    return h;
}

inline CheckResult verify_ideal_homotopy(const SimplicialComplex& k, int cap,
                                         const std::string& id = "ideal.homotopy")
{
    IdealHomotopy h = build_ideal_homotopy(k, cap);
    for (int x = 0; x < h.model.complex.size(); ++x) {
        if (!h.in_ideal[x]) continue;
        Term dx = h.model.complex.differential_of(x);
        for (const auto& [t, c] : dx)
            if (!h.in_ideal[t])
                return CheckResult::fail(id, "differential leaves the ideal at " +
                                                 h.model.complex.monomial(x).label);
        Term lhs = h.model.complex.apply_differential(h.s.map[x]);
        term_axpy(lhs, h.s.apply(dx), 1);
        if (lhs != Term{{x, 1}})
            return CheckResult::fail(id, "ds + sd differs from id on " +
                                             h.model.complex.monomial(x).label);
    }
    return CheckResult::pass(id);
}

// Second-degree-wise comparison of the truncated Tor with the cohomology of
// the finite quotient model, plus the vanishing band above deg2 = m.
inline Report quotient_quasi_iso_check(const SimplicialComplex& k, int cap,
                                       const std::vector<CoeffRing>& rings,
                                       const std::string& prefix = "tor")
{
    Report report;
    KoszulModel koszul = build_koszul(k, cap);
    RbarModel rbar = build_rbar(k);
    ModelCohomology tor_h(koszul.complex);
    ModelCohomology rbar_h(rbar.complex);
    int m = k.vertex_count();

    for (const auto& coeff : rings) {
        BigradedCohomology tor = tor_h.bigraded(coeff);
        BigradedCohomology ref = rbar_h.bigraded(coeff);
        std::string match_id = prefix + ".match." + coeff.name();
        bool reported = false;
        for (int d2 = 0; d2 <= std::min(cap, m) && !reported; ++d2)
            for (int d1 = -m; d1 <= 0 && !reported; ++d1)
                if (tor.at(d1, d2) != ref.at(d1, d2)) {
                    report.add(CheckResult::fail(
                        match_id, "bidegree (" + std::to_string(d1) + "," + std::to_string(d2) +
                                      "): Tor = " + tor.at(d1, d2).to_string() + ", quotient = " +
                                      ref.at(d1, d2).to_string()));
                    reported = true;
                }
        if (!reported) report.add(CheckResult::pass(match_id));

        std::string vanish_id = prefix + ".vanishing." + coeff.name();
        if (cap <= m) {
            report.add(CheckResult::skip(vanish_id,
                                         "truncated below m: skipped vanishing assertion"));
        } else {
            reported = false;
            for (const auto& [dd, g] : tor.groups)
                if (dd.second > m && !g.trivial()) {
                    report.add(CheckResult::fail(
                        vanish_id, "nonzero group " + g.to_string() + " in bidegree (" +
                                       std::to_string(dd.first) + "," +
                                       std::to_string(dd.second) + ")"));
                    reported = true;
                    break;
                }
            if (!reported) report.add(CheckResult::pass(vanish_id));
        }
    }
    return report;
}

}  // namespace polycoh
