#pragma once

#include <optional>
#include <vector>

#include "polycoh/cohomology_result.hpp"
#include "polycoh/smith.hpp"

namespace polycoh {

// A finite complex of free modules ... -> C^q -> C^{q+1} -> ... with integer
// differentials. ranks[i] is the rank of C^{lowest+i}; diff[i] maps degree
// lowest+i to lowest+i+1 (so diff has one entry fewer than ranks).
struct FiniteCochainComplex {
    int lowest = 0;
    std::vector<long> ranks;
    std::vector<SparseIntMatrix> diff;

    int degrees() const { return static_cast<int>(ranks.size()); }

    void validate() const
    {
        if (ranks.empty()) return;
        if (diff.size() + 1 != ranks.size())
            throw StructureError("cochain complex needs one differential per degree pair");
        for (size_t i = 0; i < diff.size(); ++i) {
            if (diff[i].cols() != ranks[i] || diff[i].rows() != ranks[i + 1])
                throw StructureError("differential dimensions disagree with module ranks");
            if (i + 1 < diff.size() && !(diff[i + 1] * diff[i]).is_zero())
                throw StructureError("d*d != 0 between degrees " + std::to_string(lowest + (int)i) +
                                     " and " + std::to_string(lowest + (int)i + 2));
        }
    }
};

// Cohomology of a validated complex. One integer SNF is computed per
// differential and then answers all three coefficient rings:
//   Z:    free rank n - rank(out) - rank(in), torsion = invariant factors > 1
//         of the incoming differential (reported in the target degree);
//   Q:    ranks with rank = number of nonzero invariant factors;
//   Z/p:  ranks with rank = number of invariant factors prime to p.
class CochainCohomology {
public:
    explicit CochainCohomology(FiniteCochainComplex complex) : c_(std::move(complex))
    {
        c_.validate();
        snf_.resize(c_.diff.size());
    }

    CochainCohomology(const CochainCohomology&) = delete;
    CochainCohomology& operator=(const CochainCohomology&) = delete;
    CochainCohomology(CochainCohomology&&) = default;
    CochainCohomology& operator=(CochainCohomology&&) = default;

    const FiniteCochainComplex& complex() const { return c_; }

    CohomologyResult compute(const CoeffRing& coeff) const
    {
        CohomologyResult result;
        for (int q = 0; q < c_.degrees(); ++q) {
            long n = c_.ranks[q];
            long rank_out = q < static_cast<int>(c_.diff.size()) ? rank_over(q, coeff) : 0;
            long rank_in = q > 0 ? rank_over(q - 1, coeff) : 0;
            GroupSummary g;
            g.free_rank = n - rank_out - rank_in;
            if (g.free_rank < 0) throw StructureError("negative cohomology rank; complex is corrupt");
            if (coeff.kind == RingKind::Integers && q > 0) g.torsion = snf_of(q - 1).torsion();
            result.set(c_.lowest + q, std::move(g));
        }
        return result;
    }

private:
    long rank_over(int i, const CoeffRing& coeff) const
    {
        const SmithDiagonal& s = snf_of(i);
        return coeff.kind == RingKind::PrimeField ? s.rank_mod(coeff.p) : s.rank();
    }

    const SmithDiagonal& snf_of(int i) const
    {
        if (!snf_[i]) snf_[i] = smith_diagonal(c_.diff[i]);
        return *snf_[i];
    }

    FiniteCochainComplex c_;
    mutable std::vector<std::optional<SmithDiagonal>> snf_;
};

inline CohomologyResult cochain_cohomology(FiniteCochainComplex c, const CoeffRing& coeff)
{
    return CochainCohomology(std::move(c)).compute(coeff);
}

// Solvers for A x = b over the three rings, all driven by one integer SNF:
// with U A V = D, the system becomes D z = U b, x = V z.

inline std::optional<std::vector<BigInt>> solve_in_image_z(const SparseIntMatrix& a,
                                                           const std::vector<BigInt>& b)
{
    SmithResult s = smith_normal_form(a);
    std::vector<BigInt> ub = s.U.apply(b);
    long r = s.diag.rank();
    std::vector<BigInt> z(a.cols(), BigInt(0));
    for (long i = 0; i < static_cast<long>(ub.size()); ++i) {
        if (i < r && i < a.cols()) {
            if (ub[i] % s.diag.d[i] != 0) return std::nullopt;
            z[i] = ub[i] / s.diag.d[i];
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    return s.V.apply(z);
}

inline std::optional<std::vector<Rational>> solve_in_image_q(const SparseIntMatrix& a,
                                                             const std::vector<Rational>& b)
{
    SmithResult s = smith_normal_form(a);
    std::vector<Rational> ub(a.rows(), Rational(0));
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.rows(); ++j)
            if (s.U.at(i, j) != 0) ub[i] += Rational(s.U.at(i, j)) * b[j];
    long r = s.diag.rank();
    std::vector<Rational> z(a.cols(), Rational(0));
    for (long i = 0; i < static_cast<long>(ub.size()); ++i) {
        if (i < r && i < a.cols())
            z[i] = ub[i] / Rational(s.diag.d[i]);
        else if (ub[i] != 0)
            return std::nullopt;
    }
    std::vector<Rational> x(a.cols(), Rational(0));
    for (int i = 0; i < a.cols(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (s.V.at(i, j) != 0) x[i] += Rational(s.V.at(i, j)) * z[j];
    return x;
}

inline std::optional<std::vector<long>> solve_in_image_fp(const SparseIntMatrix& a,
                                                          const std::vector<long>& b, long p)
{
    auto mod = [p](const BigInt& v) {
        long r = static_cast<long>(v % p);
        return r < 0 ? r + p : r;
    };
    auto inv_mod = [p](long x) {
        long t = 0, nt = 1, r = p, nr = x % p;
        if (nr < 0) nr += p;
        while (nr != 0) {
            long q = r / nr;
            std::swap(t -= q * nt, nt);
            std::swap(r -= q * nr, nr);
        }
        return t < 0 ? t + p : t;
    };
    SmithResult s = smith_normal_form(a);
    std::vector<long> ub(a.rows(), 0);
    for (int i = 0; i < a.rows(); ++i) {
        BigInt acc = 0;
        for (int j = 0; j < a.rows(); ++j) acc += s.U.at(i, j) * b[j];
        ub[i] = mod(acc);
    }
    long r = s.diag.rank();
    std::vector<long> z(a.cols(), 0);
    for (long i = 0; i < static_cast<long>(ub.size()); ++i) {
        long di = (i < r && i < a.cols()) ? mod(s.diag.d[i]) : 0;
        if (di != 0)
            z[i] = (ub[i] * inv_mod(di)) % p;
        else if (ub[i] != 0)
            return std::nullopt;
    }
    std::vector<long> x(a.cols(), 0);
    for (int i = 0; i < a.cols(); ++i) {
        BigInt acc = 0;
        for (int j = 0; j < a.cols(); ++j) acc += s.V.at(i, j) * z[j];
        x[i] = mod(acc);
    }
    return x;
}

}  // namespace polycoh
