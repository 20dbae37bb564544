#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "polycoh/errors.hpp"

namespace polycoh {

// Vertex subsets of [m] as bitmasks; vertex v (1-based) lives at bit v-1.
// m <= 63 is assumed throughout.
using VSet = std::uint64_t;

inline int vset_size(VSet s) { return std::popcount(s); }

inline VSet vset_bit(int vertex) { return VSet(1) << (vertex - 1); }

inline VSet full_vset(int m) { return m == 0 ? 0 : (VSet(~VSet(0)) >> (64 - m)); }

inline bool vset_contains(VSet s, int vertex) { return (s >> (vertex - 1)) & 1; }

inline std::vector<int> vset_elements(VSet s)
{
    std::vector<int> out;
    while (s) {
        out.push_back(std::countr_zero(s) + 1);
        s &= s - 1;
    }
    return out;
}

inline VSet vset_of(const std::vector<int>& vertices)
{
    VSet s = 0;
    for (int v : vertices) {
        if (v < 1 || v > 63) throw InputError("vertex labels must lie in 1..63");
        s |= vset_bit(v);
    }
    return s;
}

// Number of elements of s strictly below the given vertex.
inline int vset_count_below(VSet s, int vertex)
{
    return std::popcount(s & (vset_bit(vertex) - 1));
}

// Order subsets by (cardinality, lexicographic on the increasing vertex list).
// For equal cardinality the lex-smaller set is the one containing the lowest
// element of the symmetric difference.
inline bool vset_less(VSet a, VSet b)
{
    int ca = vset_size(a), cb = vset_size(b);
    if (ca != cb) return ca < cb;
    if (a == b) return false;
    VSet diff = a ^ b;
    return a & (diff & -diff);
}

inline std::string vset_to_string(VSet s)
{
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (int v : vset_elements(s)) {
        if (!first) out << ",";
        out << v;
        first = false;
    }
    out << "}";
    return out.str();
}

// An abstract simplicial complex on the vertex set [m]. The simplex list is
// downward closed, always contains the empty set, and is kept sorted by
// (cardinality, lex) so every derived basis has one reproducible order.
class SimplicialComplex {
public:
    SimplicialComplex() { insert_closure(0); }

    static SimplicialComplex close_and_validate(int m, const std::vector<VSet>& facets)
    {
        if (m < 0 || m > 63) throw InputError("vertex count must lie in 0..63");
        SimplicialComplex k;
        k.m_ = m;
        for (VSet f : facets) {
            if ((f & ~full_vset(m)) != 0)
                throw InputError("facet " + vset_to_string(f) + " has a vertex outside [" +
                                 std::to_string(m) + "]");
            k.insert_closure(f);
        }
        k.sort_simplices();
        return k;
    }

    int vertex_count() const { return m_; }

    const std::vector<VSet>& simplices() const { return simplices_; }

    bool contains(VSet s) const { return lookup_.count(s) > 0; }

    // Largest simplex cardinality minus one; the empty complex has dim -1.
    int dimension() const
    {
        int d = -1;
        for (VSet s : simplices_) d = std::max(d, vset_size(s) - 1);
        return d;
    }

    std::vector<VSet> facets() const
    {
        std::vector<VSet> out;
        for (VSet s : simplices_) {
            bool maximal = true;
            for (int v = 1; v <= m_ && maximal; ++v)
                if (!vset_contains(s, v) && contains(s | vset_bit(v))) maximal = false;
            if (maximal && s != 0) out.push_back(s);
        }
        if (out.empty()) out.push_back(0);
        return out;
    }

    // K_J = { s in K : s subset J }, re-indexed over J (vertices renumbered
    // 1..|J| in increasing order).
    SimplicialComplex full_subcomplex(VSet j) const
    {
        if ((j & ~full_vset(m_)) != 0) throw InputError("J is not a subset of [m]");
        std::vector<int> verts = vset_elements(j);
        SimplicialComplex sub;
        sub.m_ = static_cast<int>(verts.size());
        for (VSet s : simplices_) {
            if ((s & ~j) != 0) continue;
            VSet re = 0;
            for (size_t i = 0; i < verts.size(); ++i)
                if (vset_contains(s, verts[i])) re |= vset_bit(static_cast<int>(i) + 1);
            sub.insert_closure(re);
        }
        sub.sort_simplices();
        return sub;
    }

    // Relabel vertices: perm[v-1] is the new label of vertex v.
    SimplicialComplex relabeled(const std::vector<int>& perm) const
    {
        if (static_cast<int>(perm.size()) != m_) throw InputError("permutation size mismatch");
        std::vector<VSet> new_facets;
        for (VSet f : facets()) {
            VSet nf = 0;
            for (int v : vset_elements(f)) nf |= vset_bit(perm[v - 1]);
            new_facets.push_back(nf);
        }
        return close_and_validate(m_, new_facets);
    }

    // A cone has a vertex contained in every facet.
    bool is_cone() const
    {
        if (simplices_.size() <= 1) return false;
        VSet common = full_vset(m_);
        for (VSet f : facets()) common &= f;
        return common != 0;
    }

    // Reduced Euler characteristic: sum over all simplices including the
    // empty one of (-1)^(|s|-1).
    long euler_characteristic_reduced() const
    {
        long chi = 0;
        for (VSet s : simplices_) chi += (vset_size(s) % 2 == 0) ? -1 : 1;
        return chi;
    }

    bool operator==(const SimplicialComplex& o) const
    {
        return m_ == o.m_ && simplices_ == o.simplices_;
    }

private:
    void insert_closure(VSet s)
    {
        if (lookup_.count(s)) return;
        lookup_.insert(s);
        simplices_.push_back(s);
        // walk all subsets obtained by dropping one vertex
        for (VSet t = s; t;) {
            VSet low = t & -t;
            insert_closure(s & ~low);
            t &= t - 1;
        }
    }

    void sort_simplices() { std::sort(simplices_.begin(), simplices_.end(), vset_less); }

    int m_ = 0;
    std::vector<VSet> simplices_;
    std::unordered_set<VSet> lookup_;
};

// Built-in complexes used by the test and verification suites. Frozen names:
//   simplex{m}   full simplex on m vertices
//   boundary{m}  boundary of the simplex on m vertices
//   gon{m}       m-cycle, m >= 3
//   points{m}    m disjoint points
//   rp2_6        minimal 6-vertex triangulation of the real projective plane
// plus the aliases square = gon4, pentagon = gon5, hexagon = gon6.
inline SimplicialComplex catalog_complex(const std::string& name)
{
    auto num_suffix = [](const std::string& s, const std::string& prefix) -> int {
        if (s.rfind(prefix, 0) != 0) return -1;
        std::string digits = s.substr(prefix.size());
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            return -1;
        return std::stoi(digits);
    };
    if (name == "square") return catalog_complex("gon4");
    if (name == "pentagon") return catalog_complex("gon5");
    if (name == "hexagon") return catalog_complex("gon6");
    if (name == "rp2_6") {
        std::vector<std::vector<int>> tri = {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6},
                                             {1, 2, 6}, {2, 3, 5}, {2, 4, 5}, {2, 4, 6},
                                             {3, 4, 6}, {3, 5, 6}};
        std::vector<VSet> facets;
        for (const auto& t : tri) facets.push_back(vset_of(t));
        return SimplicialComplex::close_and_validate(6, facets);
    }
    if (int m = num_suffix(name, "simplex"); m >= 1)
        return SimplicialComplex::close_and_validate(m, {full_vset(m)});
    if (int m = num_suffix(name, "boundary"); m >= 1) {
        std::vector<VSet> facets;
        for (int v = 1; v <= m; ++v) facets.push_back(full_vset(m) & ~vset_bit(v));
        return SimplicialComplex::close_and_validate(m, facets);
    }
    if (int m = num_suffix(name, "gon"); m >= 3) {
        std::vector<VSet> facets;
        for (int v = 1; v <= m; ++v)
            facets.push_back(vset_bit(v) | vset_bit(v % m + 1));
        return SimplicialComplex::close_and_validate(m, facets);
    }
    if (int m = num_suffix(name, "points"); m >= 1) {
        std::vector<VSet> facets;
        for (int v = 1; v <= m; ++v) facets.push_back(vset_bit(v));
        return SimplicialComplex::close_and_validate(m, facets);
    }
    throw InputError("unknown catalog complex '" + name + "'");
}

inline std::vector<std::string> catalog_names()
{
    return {"simplex3", "boundary3", "boundary4", "boundary5", "gon4",
            "gon5",     "gon6",      "points2",   "points3",   "points4",
            "rp2_6"};
}

}  // namespace polycoh
