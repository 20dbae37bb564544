#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "polycoh/cochain_complex.hpp"
#include "polycoh/report.hpp"
#include "polycoh/simplicial.hpp"

namespace polycoh {

// Formal integer combination of basis elements, kept sorted by index.
using Term = std::vector<std::pair<int, long long>>;

inline void term_add(Term& t, int idx, long long coef)
{
    if (coef == 0) return;
    auto it = std::lower_bound(t.begin(), t.end(), idx,
                               [](const auto& p, int i) { return p.first < i; });
    if (it != t.end() && it->first == idx) {
        it->second += coef;
        if (it->second == 0) t.erase(it);
    } else {
        t.insert(it, {idx, coef});
    }
}

inline void term_axpy(Term& dst, const Term& src, long long c)
{
    for (const auto& [i, v] : src) term_add(dst, i, c * v);
}

inline Term term_scaled(const Term& t, long long c)
{
    Term out;
    if (c == 0) return out;
    out.reserve(t.size());
    for (const auto& [i, v] : t) out.emplace_back(i, c * v);
    return out;
}

struct BasisMonomial {
    int d1 = 0;        // first degree, <= 0
    int d2 = 0;        // second degree, >= 0
    VSet support = 0;  // variable indices appearing in the monomial
    std::string label;

    int total_degree() const { return d1 + d2; }
};

// How strictly the differential respects the bigrading:
//   Bigraded:  d raises d1 by one and preserves d2 (all Koszul-type models);
//   TotalOnly: d raises d1 + d2 by one (total complexes of tensor models
//              whose coefficient factors carry their own differential).
enum class GradingMode { Bigraded, TotalOnly };

// A finite bigraded free module with an ordered monomial basis and an integer
// differential. This is the carrier for every model in the library.
class MonomialComplex {
public:
    struct DiffTriple {
        int src, dst;
        long long coef;
    };

    MonomialComplex() = default;

    MonomialComplex(int m, std::vector<BasisMonomial> basis, const std::vector<DiffTriple>& d,
                    GradingMode mode = GradingMode::Bigraded)
        : m_(m), mode_(mode), basis_(std::move(basis)), dmap_(basis_.size())
    {
        for (const auto& t : d) {
            if (t.src < 0 || t.src >= size() || t.dst < 0 || t.dst >= size())
                throw StructureError("differential triple index out of range");
            term_add(dmap_[t.src], t.dst, t.coef);
        }
    }

    int size() const { return static_cast<int>(basis_.size()); }
    int ambient_vertices() const { return m_; }
    GradingMode grading_mode() const { return mode_; }
    const BasisMonomial& monomial(int i) const { return basis_[i]; }
    const std::vector<BasisMonomial>& basis() const { return basis_; }
    const Term& differential_of(int i) const { return dmap_[i]; }

    Term apply_differential(const Term& t) const
    {
        Term out;
        for (const auto& [i, c] : t) term_axpy(out, dmap_[i], c);
        return out;
    }

    std::string term_to_string(const Term& t) const
    {
        if (t.empty()) return "0";
        std::string out;
        for (const auto& [i, c] : t) {
            if (!out.empty()) out += c >= 0 ? " + " : " - ";
            else if (c < 0) out += "-";
            long long a = c >= 0 ? c : -c;
            if (a != 1) out += std::to_string(a) + "*";
            out += basis_[i].label;
        }
        return out;
    }

    CheckResult check_d_squared(const std::string& check_id = "d_squared") const
    {
        for (int i = 0; i < size(); ++i) {
            Term dd = apply_differential(dmap_[i]);
            if (!dd.empty())
                return CheckResult::fail(check_id, "d(d(" + basis_[i].label +
                                                       ")) = " + term_to_string(dd));
        }
        return CheckResult::pass(check_id);
    }

    // Degree and support contract of the differential.
    CheckResult check_grading(const std::string& check_id = "grading") const
    {
        for (int i = 0; i < size(); ++i) {
            const BasisMonomial& src = basis_[i];
            for (const auto& [j, c] : dmap_[i]) {
                const BasisMonomial& dst = basis_[j];
                bool ok = mode_ == GradingMode::Bigraded
                              ? (dst.d1 == src.d1 + 1 && dst.d2 == src.d2)
                              : (dst.total_degree() == src.total_degree() + 1);
                if (!ok)
                    return CheckResult::fail(check_id, "degree contract broken on d(" +
                                                           src.label + ") -> " + dst.label);
                if (dst.support != src.support)
                    return CheckResult::fail(check_id, "support not preserved on d(" +
                                                           src.label + ") -> " + dst.label);
            }
        }
        return CheckResult::pass(check_id);
    }

    // Basis indices grouped by total degree, in basis order.
    std::map<int, std::vector<int>> degree_layout() const
    {
        std::map<int, std::vector<int>> by_deg;
        for (int i = 0; i < size(); ++i) by_deg[basis_[i].total_degree()].push_back(i);
        return by_deg;
    }

    // The complex graded by total degree.
    FiniteCochainComplex total_complex() const
    {
        FiniteCochainComplex c;
        if (basis_.empty()) return c;
        auto layout = degree_layout();
        int lo = layout.begin()->first, hi = layout.rbegin()->first;
        c.lowest = lo;
        std::vector<int> position(size(), -1);
        for (auto& [deg, ids] : layout)
            for (size_t p = 0; p < ids.size(); ++p) position[ids[p]] = static_cast<int>(p);
        for (int deg = lo; deg <= hi; ++deg) {
            auto it = layout.find(deg);
            c.ranks.push_back(it == layout.end() ? 0 : static_cast<long>(it->second.size()));
        }
        for (int deg = lo; deg < hi; ++deg) {
            SparseIntMatrix d(c.ranks[deg - lo + 1], c.ranks[deg - lo]);
            auto it = layout.find(deg);
            if (it != layout.end())
                for (size_t col = 0; col < it->second.size(); ++col)
                    for (const auto& [dst, coef] : dmap_[it->second[col]]) {
                        if (basis_[dst].total_degree() != deg + 1)
                            throw StructureError("differential is not of degree one at " +
                                                 basis_[it->second[col]].label);
                        d.add(position[dst], static_cast<int>(col), coef);
                    }
            c.diff.push_back(std::move(d));
        }
        return c;
    }

    // Per-deg2 slices, each a complex in the first degree. Requires the
    // bigraded contract.
    std::map<int, FiniteCochainComplex> deg2_slices() const
    {
        if (mode_ != GradingMode::Bigraded)
            throw StructureError("bigraded slices need a bigraded differential");
        std::map<int, std::map<int, std::vector<int>>> layout;  // d2 -> d1 -> ids
        for (int i = 0; i < size(); ++i) layout[basis_[i].d2][basis_[i].d1].push_back(i);
        std::vector<int> position(size(), -1);
        for (auto& [d2, cols] : layout)
            for (auto& [d1, ids] : cols)
                for (size_t p = 0; p < ids.size(); ++p) position[ids[p]] = static_cast<int>(p);

        std::map<int, FiniteCochainComplex> out;
        for (auto& [d2, cols] : layout) {
            FiniteCochainComplex c;
            int lo = cols.begin()->first, hi = cols.rbegin()->first;
            c.lowest = lo;
            for (int d1 = lo; d1 <= hi; ++d1) {
                auto it = cols.find(d1);
                c.ranks.push_back(it == cols.end() ? 0 : static_cast<long>(it->second.size()));
            }
            for (int d1 = lo; d1 < hi; ++d1) {
                SparseIntMatrix d(c.ranks[d1 - lo + 1], c.ranks[d1 - lo]);
                auto it = cols.find(d1);
                if (it != cols.end())
                    for (size_t col = 0; col < it->second.size(); ++col)
                        for (const auto& [dst, coef] : dmap_[it->second[col]]) {
                            if (basis_[dst].d2 != d2 || basis_[dst].d1 != d1 + 1)
                                throw StructureError("differential breaks the bigrading at " +
                                                     basis_[it->second[col]].label);
                            d.add(position[dst], static_cast<int>(col), coef);
                        }
                c.diff.push_back(std::move(d));
            }
            out.emplace(d2, std::move(c));
        }
        return out;
    }

    CohomologyResult cohomology(const CoeffRing& coeff) const
    {
        return cochain_cohomology(total_complex(), coeff);
    }

    BigradedCohomology bigraded_cohomology(const CoeffRing& coeff) const
    {
        BigradedCohomology out;
        for (auto& [d2, c] : deg2_slices()) {
            CohomologyResult h = cochain_cohomology(std::move(c), coeff);
            for (const auto& [d1, g] : h.groups) out.set(d1, d2, g);
        }
        return out;
    }

    // Decomposition into support components. The differential preserves
    // supports (checked), so each component is itself a complex.
    std::map<VSet, std::vector<int>> support_partition() const
    {
        std::map<VSet, std::vector<int>> parts;
        for (int i = 0; i < size(); ++i) parts[basis_[i].support].push_back(i);
        return parts;
    }

    MonomialComplex support_component(VSet j) const
    {
        std::vector<int> keep;
        for (int i = 0; i < size(); ++i)
            if (basis_[i].support == j) keep.push_back(i);
        std::vector<int> position(size(), -1);
        std::vector<BasisMonomial> sub;
        for (size_t p = 0; p < keep.size(); ++p) {
            position[keep[p]] = static_cast<int>(p);
            sub.push_back(basis_[keep[p]]);
        }
        std::vector<DiffTriple> triples;
        for (int src : keep)
            for (const auto& [dst, coef] : dmap_[src]) {
                if (position[dst] < 0)
                    throw StructureError("differential leaves the support component of " +
                                         basis_[src].label);
                triples.push_back({position[src], position[dst], coef});
            }
        return MonomialComplex(m_, std::move(sub), triples, mode_);
    }

private:
    int m_ = 0;
    GradingMode mode_ = GradingMode::Bigraded;
    std::vector<BasisMonomial> basis_;
    std::vector<Term> dmap_;
};

// Caches the Smith forms behind total and bigraded cohomology so one model
// can be queried over several coefficient rings.
class ModelCohomology {
public:
    explicit ModelCohomology(const MonomialComplex& c)
        : total_(c.total_complex())
    {
        if (c.grading_mode() == GradingMode::Bigraded)
            for (auto& [d2, slice] : c.deg2_slices()) slices_.emplace(d2, std::move(slice));
    }

    CohomologyResult total(const CoeffRing& coeff) const { return total_.compute(coeff); }

    BigradedCohomology bigraded(const CoeffRing& coeff) const
    {
        BigradedCohomology out;
        for (const auto& [d2, an] : slices_) {
            CohomologyResult h = an.compute(coeff);
            for (const auto& [d1, g] : h.groups) out.set(d1, d2, g);
        }
        return out;
    }

private:
    CochainCohomology total_;
    std::map<int, CochainCohomology> slices_;
};

}  // namespace polycoh
