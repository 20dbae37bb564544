#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "polycoh/bigint.hpp"
#include "polycoh/coeff.hpp"
#include "polycoh/errors.hpp"

namespace polycoh {

// Normalises a multiset of torsion coefficients (> 1, arbitrary order) into
// the invariant factor chain d1 | d2 | ... . Needed whenever groups coming
// from different summands are direct-summed: [2] + [3] becomes [6].
inline std::vector<BigInt> invariant_factor_chain(std::vector<BigInt> factors)
{
    // prime -> descending exponents, one per cyclic factor
    std::map<BigInt, std::vector<int>> primary;
    for (BigInt f : factors) {
        if (f <= 1) throw StructureError("torsion coefficient must exceed 1");
        for (BigInt d = 2; d * d <= f; ++d) {
            int e = 0;
            while (f % d == 0) { f /= d; ++e; }
            if (e) primary[d].push_back(e);
        }
        if (f > 1) primary[f].push_back(1);
    }
    size_t chain_len = 0;
    for (auto& [p, es] : primary) {
        std::sort(es.begin(), es.end(), std::greater<int>());
        chain_len = std::max(chain_len, es.size());
    }
    std::vector<BigInt> chain(chain_len, BigInt(1));
    // slot 0 receives the largest prime powers => chain ends up descending;
    // reverse for the ascending d1 | d2 | ... convention.
    for (auto& [p, es] : primary)
        for (size_t k = 0; k < es.size(); ++k) {
            BigInt pw = 1;
            for (int i = 0; i < es[k]; ++i) pw *= p;
            chain[k] *= pw;
        }
    std::reverse(chain.begin(), chain.end());
    return chain;
}

// One graded piece: free rank plus torsion invariant factors (empty over a field).
struct GroupSummary {
    long free_rank = 0;
    std::vector<BigInt> torsion;  // ascending divisibility chain, entries > 1

    bool trivial() const { return free_rank == 0 && torsion.empty(); }

    long p_torsion_count(long p) const
    {
        long c = 0;
        for (const auto& t : torsion)
            if (t % p == 0) ++c;
        return c;
    }

    bool operator==(const GroupSummary& o) const
    {
        return free_rank == o.free_rank && torsion == o.torsion;
    }

    std::string to_string() const
    {
        if (trivial()) return "0";
        std::ostringstream out;
        bool first = true;
        if (free_rank > 0) {
            out << "Z";
            if (free_rank > 1) out << "^" << free_rank;
            first = false;
        }
        for (const auto& t : torsion) {
            if (!first) out << " + ";
            out << "Z/" << t;
            first = false;
        }
        return out.str();
    }
};

inline GroupSummary direct_sum(const GroupSummary& a, const GroupSummary& b)
{
    GroupSummary s;
    s.free_rank = a.free_rank + b.free_rank;
    std::vector<BigInt> all = a.torsion;
    all.insert(all.end(), b.torsion.begin(), b.torsion.end());
    s.torsion = invariant_factor_chain(std::move(all));
    return s;
}

// Cohomology keyed by a single (total) degree. Unset degrees are zero.
struct CohomologyResult {
    std::map<int, GroupSummary> groups;

    GroupSummary at(int degree) const
    {
        auto it = groups.find(degree);
        return it == groups.end() ? GroupSummary{} : it->second;
    }

    void set(int degree, GroupSummary g)
    {
        if (!g.trivial()) groups[degree] = std::move(g);
    }

    void add(int degree, const GroupSummary& g)
    {
        if (g.trivial()) return;
        auto it = groups.find(degree);
        if (it == groups.end())
            groups[degree] = g;
        else
            it->second = direct_sum(it->second, g);
    }

    CohomologyResult shifted(int by) const
    {
        CohomologyResult r;
        for (const auto& [d, g] : groups) r.groups[d + by] = g;
        return r;
    }

    long total_rank() const
    {
        long r = 0;
        for (const auto& [d, g] : groups) r += g.free_rank;
        return r;
    }

    long euler_characteristic() const
    {
        long chi = 0;
        for (const auto& [d, g] : groups) chi += (d % 2 == 0 ? 1 : -1) * g.free_rank;
        return chi;
    }

    bool operator==(const CohomologyResult& o) const { return groups == o.groups; }

    std::string to_string() const
    {
        std::ostringstream out;
        bool first = true;
        for (const auto& [d, g] : groups) {
            if (!first) out << ", ";
            out << "H^" << d << " = " << g.to_string();
            first = false;
        }
        return first ? "0" : out.str();
    }
};

// Cohomology keyed by bidegree (deg1 <= 0, deg2 >= 0).
struct BigradedCohomology {
    std::map<std::pair<int, int>, GroupSummary> groups;

    GroupSummary at(int d1, int d2) const
    {
        auto it = groups.find({d1, d2});
        return it == groups.end() ? GroupSummary{} : it->second;
    }

    void set(int d1, int d2, GroupSummary g)
    {
        if (!g.trivial()) groups[{d1, d2}] = std::move(g);
    }

    CohomologyResult totalize() const
    {
        CohomologyResult r;
        for (const auto& [dd, g] : groups) r.add(dd.first + dd.second, g);
        return r;
    }

    bool operator==(const BigradedCohomology& o) const { return groups == o.groups; }

    std::string to_string() const
    {
        std::ostringstream out;
        bool first = true;
        for (const auto& [dd, g] : groups) {
            if (!first) out << ", ";
            out << "H^{" << dd.first << "," << dd.second << "} = " << g.to_string();
            first = false;
        }
        return first ? "0" : out.str();
    }
};

}  // namespace polycoh
