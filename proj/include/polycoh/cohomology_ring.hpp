#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polycoh/field_linalg.hpp"
#include "polycoh/monomial_complex.hpp"
#include "polycoh/product_table.hpp"

namespace polycoh {

// Cohomology of a monomial complex over a field, with chosen cocycle
// representatives and the induced product as structure constants.
//
// Representatives: per degree, the kernel basis vectors (deterministic
// column order) are folded into the span of the coboundaries; the first
// vectors that enlarge it become the class representatives.
template <class Field>
struct RingStructure {
    using Elem = typename Field::Elem;

    struct ClassInfo {
        int degree = 0;
        std::vector<std::pair<int, Elem>> rep;  // cocycle: (basis index, coefficient)
        std::string name;
    };

    std::vector<ClassInfo> classes;
    std::map<int, std::vector<int>> classes_by_degree;
    // prod[(a, b)] = combination of classes; absent pair = zero product
    std::map<std::pair<int, int>, std::vector<std::pair<int, Elem>>> prod;

    long rank_in_degree(int degree) const
    {
        auto it = classes_by_degree.find(degree);
        return it == classes_by_degree.end() ? 0 : static_cast<long>(it->second.size());
    }
};

namespace detail {

// Bundles the per-degree reduction data used both to pick representatives
// and to express products in class coordinates.
template <class Field>
struct DegreeData {
    std::vector<int> ids;                 // model basis ids of this degree
    std::map<int, int> local_of;          // basis id -> local coordinate
    SpanBuilder<Field> span;              // image columns, then kernel vectors
    std::vector<int> class_ids;           // global class indices
    std::vector<int> class_positions;     // added-vector position of each class rep
};

}  // namespace detail

template <class Field>
class CohomologyRingCalculator {
public:
    using Elem = typename Field::Elem;

    CohomologyRingCalculator(const MonomialComplex& c, const ProductTable& p, Field field)
        : c_(c), p_(p), f_(field)
    {
        build();
    }

    const RingStructure<Field>& ring() const { return ring_; }

    // Class coordinates of an arbitrary cocycle given in model coordinates.
    std::vector<std::pair<int, Elem>> class_of(int degree,
                                               const std::vector<std::pair<int, Elem>>& cocycle)
    {
        auto it = degrees_.find(degree);
        if (it == degrees_.end()) {
            if (cocycle.empty()) return {};
            throw StructureError("cocycle in an empty degree");
        }
        return reduce_to_classes(it->second, cocycle);
    }

    std::vector<std::pair<int, Elem>> multiply_classes(int a, int b)
    {
        const auto& ca = ring_.classes[a];
        const auto& cb = ring_.classes[b];
        std::map<int, Elem> acc;
        for (const auto& [i, ci] : ca.rep)
            for (const auto& [j, cj] : cb.rep) {
                if (!p_.defined(i, j))
                    throw StructureError("ring product hits an undefined table entry");
                for (const auto& [k, coef] : p_.product(i, j)) {
                    Elem add = f_.mul(f_.mul(ci, cj), f_.from_int(BigInt(coef)));
                    auto [pos, inserted] = acc.try_emplace(k, add);
                    if (!inserted) pos->second = f_.add(pos->second, add);
                }
            }
        std::vector<std::pair<int, Elem>> z;
        for (auto& [k, v] : acc)
            if (!f_.is_zero(v)) z.emplace_back(k, v);
        return class_of(ca.degree + cb.degree, z);
    }

private:
    void build()
    {
        auto layout = c_.degree_layout();
        for (const auto& [deg, ids] : layout) {
            detail::DegreeData<Field> data{ids, {}, SpanBuilder<Field>(f_, (int)ids.size()), {}, {}};
            for (size_t p = 0; p < ids.size(); ++p) data.local_of[ids[p]] = static_cast<int>(p);
            degrees_.emplace(deg, std::move(data));
        }
        // coboundary images: the differential of every basis element of the
        // degree below, reduced into the span
        for (auto& [deg, data] : degrees_) {
            auto below = degrees_.find(deg - 1);
            if (below != degrees_.end()) {
                // zero columns are added too, keeping the original-vector
                // indexing aligned with the basis of the degree below
                for (int src : below->second.ids) {
                    std::vector<Elem> col((int)data.ids.size(), f_.zero());
                    for (const auto& [dst, coef] : c_.differential_of(src))
                        col[data.local_of.at(dst)] = f_.from_int(BigInt(coef));
                    data.span.add(col);
                }
            }
        }
        // kernel vectors complete the span; the new ones are the classes
        for (auto& [deg, data] : degrees_) {
            SparseIntMatrix out = degree_differential(deg);
            auto kernel = field_kernel_basis(f_, out);
            for (const auto& vec : kernel) {
                int position = data.span.added();
                if (!data.span.add(vec)) continue;
                data.class_positions.push_back(position);
                typename RingStructure<Field>::ClassInfo info;
                info.degree = deg;
                for (size_t i = 0; i < vec.size(); ++i)
                    if (!f_.is_zero(vec[i])) info.rep.emplace_back(data.ids[i], vec[i]);
                int id = static_cast<int>(ring_.classes.size());
                info.name = "h" + std::to_string(deg) + "_" +
                            std::to_string(ring_.classes_by_degree[deg].size());
                ring_.classes.push_back(std::move(info));
                ring_.classes_by_degree[deg].push_back(id);
                data.class_ids.push_back(id);
            }
        }
        // structure constants
        for (int a = 0; a < static_cast<int>(ring_.classes.size()); ++a)
            for (int b = 0; b < static_cast<int>(ring_.classes.size()); ++b) {
                auto v = multiply_classes(a, b);
                if (!v.empty()) ring_.prod[{a, b}] = std::move(v);
            }
    }

    // The differential out of one total degree as a matrix in local coords.
    SparseIntMatrix degree_differential(int deg)
    {
        auto& data = degrees_.at(deg);
        auto above = degrees_.find(deg + 1);
        int rows = above == degrees_.end() ? 0 : (int)above->second.ids.size();
        SparseIntMatrix d(rows, (int)data.ids.size());
        if (above != degrees_.end())
            for (size_t col = 0; col < data.ids.size(); ++col)
                for (const auto& [dst, coef] : c_.differential_of(data.ids[col]))
                    d.add(above->second.local_of.at(dst), (int)col, coef);
        return d;
    }

    std::vector<std::pair<int, Elem>> reduce_to_classes(
        detail::DegreeData<Field>& data, const std::vector<std::pair<int, Elem>>& cocycle)
    {
        std::vector<Elem> v((int)data.ids.size(), f_.zero());
        for (const auto& [idx, c] : cocycle) v[data.local_of.at(idx)] = c;
        auto expr = data.span.express(v);
        if (!expr)
            throw StructureError("vector is not a cocycle modulo coboundaries");
        std::vector<std::pair<int, Elem>> out;
        for (size_t k = 0; k < data.class_ids.size(); ++k) {
            Elem coef = (*expr)[data.class_positions[k]];
            if (!f_.is_zero(coef)) out.emplace_back(data.class_ids[k], coef);
        }
        return out;
    }

    const MonomialComplex& c_;
    const ProductTable& p_;
    Field f_;
    RingStructure<Field> ring_;
    std::map<int, detail::DegreeData<Field>> degrees_;
};

template <class Field>
RingStructure<Field> compute_cohomology_ring(const MonomialComplex& c, const ProductTable& p,
                                             Field field)
{
    return CohomologyRingCalculator<Field>(c, p, field).ring();
}

// Graded commutativity with respect to total degree; a theorem for every
// model that is quasi-isomorphic to a space's cochains, asserted as a check.
template <class Field>
CheckResult check_graded_commutativity(CohomologyRingCalculator<Field>& calc, Field f,
                                       const std::string& id = "ring.graded_comm")
{
    const auto& ring = calc.ring();
    int n = static_cast<int>(ring.classes.size());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            auto ab = calc.multiply_classes(a, b);
            auto ba = calc.multiply_classes(b, a);
            int sign = (ring.classes[a].degree * ring.classes[b].degree) % 2 == 0 ? 1 : -1;
            if (sign < 0)
                for (auto& [cls, coef] : ba) coef = f.neg(coef);
            if (ab != ba)
                return CheckResult::fail(id, ring.classes[a].name + " * " +
                                                 ring.classes[b].name +
                                                 " is not graded commutative");
        }
    return CheckResult::pass(id);
}

}  // namespace polycoh
