#pragma once

#include <map>
#include <vector>

#include "polycoh/cochain_complex.hpp"
#include "polycoh/simplicial.hpp"

namespace polycoh {

// Reduced simplicial cochain complex. The empty simplex is a genuine basis
// element in degree -1, so the empty complex {{}} gets H^{-1} = k; that
// convention is what makes the J = {} summand of the splitting formulas
// contribute the unit class.
inline FiniteCochainComplex reduced_cochain_complex(const SimplicialComplex& k)
{
    int dim = k.dimension();
    FiniteCochainComplex c;
    c.lowest = -1;
    std::map<VSet, int> index_in_degree;
    std::vector<std::vector<VSet>> by_degree(dim + 2);
    for (VSet s : k.simplices()) by_degree[vset_size(s)].push_back(s);
    // simplices() is (cardinality, lex) sorted, so each degree list is lex sorted
    std::vector<std::map<VSet, int>> idx(dim + 2);
    for (int q = 0; q <= dim + 1; ++q) {
        c.ranks.push_back(static_cast<long>(by_degree[q].size()));
        for (size_t i = 0; i < by_degree[q].size(); ++i)
            idx[q][by_degree[q][i]] = static_cast<int>(i);
    }
    for (int q = 0; q <= dim; ++q) {
        SparseIntMatrix d(c.ranks[q + 1], c.ranks[q]);
        // (delta f)(t) = sum over vertices v of t with sign by position
        for (size_t col_t = 0; col_t < by_degree[q + 1].size(); ++col_t) {
            VSet t = by_degree[q + 1][col_t];
            int pos = 0;
            for (int v : vset_elements(t)) {
                VSet face = t & ~vset_bit(v);
                d.add(static_cast<int>(col_t), idx[q][face], (pos % 2 == 0) ? 1 : -1);
                ++pos;
            }
        }
        c.diff.push_back(std::move(d));
    }
    return c;
}

inline CohomologyResult reduced_cohomology(const SimplicialComplex& k, const CoeffRing& coeff)
{
    return cochain_cohomology(reduced_cochain_complex(k), coeff);
}

// Degree-shift/tensor modes of the stable splitting oracle.
struct OracleMode {
    enum Kind { Real, Sphere, Tensor } kind = Real;
    // Sphere: one degree n_i per vertex.
    std::vector<int> sphere_degrees;
    // Tensor: one generator degree list per vertex (free module H_i).
    std::vector<std::vector<int>> tensor_degrees;

    static OracleMode real() { return {}; }
    static OracleMode spheres(std::vector<int> degs) { return {Sphere, std::move(degs), {}}; }
    static OracleMode tensor(std::vector<std::vector<int>> degs)
    {
        return {Tensor, {}, std::move(degs)};
    }
};

// Ground truth for every model comparison:
//   real:    sum over J of H~^{n-1}(K_J) placed in degree n
//   sphere:  the J summand shifted by 1 + sum_{i in J} n_i
//   tensor:  H~^*(Sigma K_J) tensored with one generator choice per i in J
inline CohomologyResult splitting_oracle(const SimplicialComplex& k, const CoeffRing& coeff,
                                         const OracleMode& mode)
{
    int m = k.vertex_count();
    if (mode.kind == OracleMode::Sphere && static_cast<int>(mode.sphere_degrees.size()) != m)
        throw InputError("sphere mode needs one degree per vertex");
    if (mode.kind == OracleMode::Tensor && static_cast<int>(mode.tensor_degrees.size()) != m)
        throw InputError("tensor mode needs one degree list per vertex");

    CohomologyResult total;
    for (VSet j = 0;; ++j) {
        CohomologyResult hj = reduced_cohomology(k.full_subcomplex(j), coeff);
        if (mode.kind == OracleMode::Real) {
            for (const auto& [deg, g] : hj.groups) total.add(deg + 1, g);
        } else if (mode.kind == OracleMode::Sphere) {
            int shift = 1;
            for (int v : vset_elements(j)) shift += mode.sphere_degrees[v - 1];
            for (const auto& [deg, g] : hj.groups) total.add(deg + shift, g);
        } else {
            // every choice of one generator per vertex of J shifts by its degree
            std::vector<int> verts = vset_elements(j);
            std::vector<size_t> pick(verts.size(), 0);
            for (;;) {
                int shift = 1;
                bool valid = true;
                for (size_t t = 0; t < verts.size(); ++t) {
                    const auto& degs = mode.tensor_degrees[verts[t] - 1];
                    if (degs.empty()) { valid = false; break; }
                    shift += degs[pick[t]];
                }
                if (valid)
                    for (const auto& [deg, g] : hj.groups) total.add(deg + shift, g);
                // advance the multi-index; empty J runs exactly once
                size_t t = 0;
                for (; t < verts.size(); ++t) {
                    if (++pick[t] < mode.tensor_degrees[verts[t] - 1].size()) break;
                    pick[t] = 0;
                }
                if (t == verts.size()) break;
                if (!valid) break;
            }
        }
        if (j == full_vset(m)) break;
    }
    return total;
}

}  // namespace polycoh
