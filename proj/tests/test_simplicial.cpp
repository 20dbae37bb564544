#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "polycoh/simplicial.hpp"
#include "polycoh/simplicial_cohomology.hpp"

using namespace polycoh;

TEST_CASE("vertex set ordering and helpers")
{
    REQUIRE(vset_less(vset_of({3}), vset_of({1, 2})));       // cardinality first
    REQUIRE(vset_less(vset_of({1, 2}), vset_of({1, 3})));    // then lex
    REQUIRE(vset_less(vset_of({1, 4}), vset_of({2, 3})));    // lex on sequences, not masks
    REQUIRE_FALSE(vset_less(vset_of({2, 3}), vset_of({1, 4})));
    REQUIRE(vset_count_below(vset_of({1, 3, 5}), 4) == 2);
    REQUIRE(vset_to_string(vset_of({2, 5})) == "{2,5}");
}

TEST_CASE("close_and_validate")
{
    SECTION("downward closure of two edges")
    {
        auto k = SimplicialComplex::close_and_validate(3, {vset_of({1, 2}), vset_of({2, 3})});
        std::vector<VSet> expect = {0,
                                    vset_of({1}),
                                    vset_of({2}),
                                    vset_of({3}),
                                    vset_of({1, 2}),
                                    vset_of({2, 3})};
        REQUIRE(k.simplices() == expect);
    }
    SECTION("full simplex has the whole power set")
    {
        auto k = SimplicialComplex::close_and_validate(3, {vset_of({1, 2, 3})});
        REQUIRE(k.simplices().size() == 8);
    }
    SECTION("no facets gives the empty complex on ghost vertices")
    {
        auto k = SimplicialComplex::close_and_validate(2, {});
        REQUIRE(k.simplices() == std::vector<VSet>{0});
        REQUIRE(k.vertex_count() == 2);
    }
    SECTION("facet outside [m] is rejected")
    {
        REQUIRE_THROWS_AS(SimplicialComplex::close_and_validate(2, {vset_of({1, 3})}),
                          InputError);
    }
}

TEST_CASE("full subcomplex")
{
    SECTION("edge of a triangle boundary")
    {
        auto k = catalog_complex("boundary3");
        auto sub = k.full_subcomplex(vset_of({1, 2}));
        REQUIRE(sub.vertex_count() == 2);
        REQUIRE(sub.simplices() ==
                std::vector<VSet>{0, vset_of({1}), vset_of({2}), vset_of({1, 2})});
    }
    SECTION("opposite vertices of the square are two points")
    {
        auto k = catalog_complex("gon4");
        auto sub = k.full_subcomplex(vset_of({1, 3}));
        REQUIRE(sub == catalog_complex("points2"));
    }
    SECTION("empty J")
    {
        auto k = catalog_complex("gon4");
        auto sub = k.full_subcomplex(0);
        REQUIRE(sub.simplices() == std::vector<VSet>{0});
    }
    SECTION("J = [m] is the identity; nesting is consistent")
    {
        auto k = catalog_complex("rp2_6");
        REQUIRE(k.full_subcomplex(full_vset(6)) == k);
        auto sub = k.full_subcomplex(vset_of({1, 2, 3, 5}));
        REQUIRE(sub.full_subcomplex(full_vset(4)) == sub);
    }
}

TEST_CASE("catalog sanity")
{
    REQUIRE(catalog_complex("simplex3").simplices().size() == 8);
    REQUIRE(catalog_complex("boundary3").simplices().size() == 7);
    REQUIRE(catalog_complex("points3").simplices().size() == 4);
    REQUIRE(catalog_complex("gon5").simplices().size() == 11);
    REQUIRE(catalog_complex("square") == catalog_complex("gon4"));
    REQUIRE_THROWS_AS(catalog_complex("donut"), InputError);
    // rp2_6: 6 vertices, all 15 edges, 10 triangles, Euler characteristic 1
    auto rp2 = catalog_complex("rp2_6");
    REQUIRE(rp2.simplices().size() == 1 + 6 + 15 + 10);
    REQUIRE(rp2.euler_characteristic_reduced() == 0);  // 1 - chi = 0 for chi = 1... reduced: chi - 1
    REQUIRE(rp2.dimension() == 2);
    // every edge lies in exactly two triangles (closed surface)
    for (VSet s : rp2.simplices()) {
        if (vset_size(s) != 2) continue;
        int count = 0;
        for (int v = 1; v <= 6; ++v)
            if (!vset_contains(s, v) && rp2.contains(s | vset_bit(v))) ++count;
        REQUIRE(count == 2);
    }
}

TEST_CASE("downward closure invariants under subcomplex and relabeling")
{
    std::mt19937_64 rng(31);
    for (const auto& name : catalog_names()) {
        auto k = catalog_complex(name);
        int m = k.vertex_count();
        std::uniform_int_distribution<VSet> pick(0, full_vset(m));
        for (int t = 0; t < 5; ++t) {
            auto sub = k.full_subcomplex(pick(rng) & full_vset(m));
            for (VSet s : sub.simplices())
                for (VSet face = s; face; face &= face - 1)
                    REQUIRE(sub.contains(s & ~(face & -face)));
        }
        std::vector<int> perm(m);
        for (int i = 0; i < m; ++i) perm[i] = i + 1;
        std::shuffle(perm.begin(), perm.end(), rng);
        REQUIRE(k.relabeled(perm).simplices().size() == k.simplices().size());
    }
}

TEST_CASE("reduced cohomology on pinned complexes")
{
    SECTION("two disjoint points")
    {
        auto h = reduced_cohomology(catalog_complex("points2"), CoeffRing::Z());
        REQUIRE(h.at(-1).trivial());
        REQUIRE(h.at(0) == (GroupSummary{1, {}}));
    }
    SECTION("empty complex concentrates in degree -1")
    {
        auto k = SimplicialComplex::close_and_validate(2, {});
        auto h = reduced_cohomology(k, CoeffRing::Z());
        REQUIRE(h.at(-1) == (GroupSummary{1, {}}));
        REQUIRE(h.groups.size() == 1);
    }
    SECTION("4-cycle is a circle")
    {
        auto h = reduced_cohomology(catalog_complex("gon4"), CoeffRing::Z());
        REQUIRE(h.at(0).trivial());
        REQUIRE(h.at(1) == (GroupSummary{1, {}}));
    }
    SECTION("projective plane has 2-torsion in degree 2")
    {
        auto h = reduced_cohomology(catalog_complex("rp2_6"), CoeffRing::Z());
        REQUIRE(h.at(1).trivial());
        REQUIRE(h.at(2) == (GroupSummary{0, {BigInt(2)}}));
        auto h2 = reduced_cohomology(catalog_complex("rp2_6"), CoeffRing::Fp(2));
        REQUIRE(h2.at(1).free_rank == 1);
        REQUIRE(h2.at(2).free_rank == 1);
        auto hq = reduced_cohomology(catalog_complex("rp2_6"), CoeffRing::Q());
        REQUIRE(hq.groups.empty());
    }
    SECTION("boundary of the 4-simplex is a 3-sphere")
    {
        auto h = reduced_cohomology(catalog_complex("boundary5"), CoeffRing::Z());
        REQUIRE(h.at(3) == (GroupSummary{1, {}}));
        REQUIRE(h.groups.size() == 1);
    }
}

TEST_CASE("cones are acyclic")
{
    std::mt19937_64 rng(47);
    std::uniform_int_distribution<VSet> pick;
    for (int trial = 0; trial < 12; ++trial) {
        // random complex on 4 vertices, coned off with vertex 5
        int m = 4;
        std::vector<VSet> facets;
        std::uniform_int_distribution<int> nf(1, 4);
        int count = nf(rng);
        for (int i = 0; i < count; ++i)
            facets.push_back((pick(rng) & full_vset(m)) | vset_bit(5));
        auto cone = SimplicialComplex::close_and_validate(5, facets);
        REQUIRE(cone.is_cone());
        auto h = reduced_cohomology(cone, CoeffRing::Z());
        REQUIRE(h.groups.empty());
    }
    REQUIRE(catalog_complex("simplex3").is_cone());
    REQUIRE_FALSE(catalog_complex("gon4").is_cone());
}

TEST_CASE("euler characteristic and universal coefficients consistency")
{
    for (const auto& name : catalog_names()) {
        auto k = catalog_complex(name);
        auto hz = reduced_cohomology(k, CoeffRing::Z());
        auto hq = reduced_cohomology(k, CoeffRing::Q());
        auto h2 = reduced_cohomology(k, CoeffRing::Fp(2));
        auto h3 = reduced_cohomology(k, CoeffRing::Fp(3));

        long chi_h = 0;
        for (const auto& [d, g] : hq.groups)
            chi_h += ((d % 2) == 0 ? 1 : -1) * g.free_rank;  // d = -1 lands in the odd branch
        REQUIRE(chi_h == k.euler_characteristic_reduced());

        for (int d = -1; d <= k.dimension() + 1; ++d) {
            REQUIRE(hq.at(d).free_rank == hz.at(d).free_rank);
            REQUIRE(hq.at(d).torsion.empty());
            for (long p : {2L, 3L}) {
                const auto& hp = (p == 2 ? h2 : h3);
                long expected = hz.at(d).free_rank + hz.at(d).p_torsion_count(p) +
                                hz.at(d + 1).p_torsion_count(p);
                REQUIRE(hp.at(d).free_rank == expected);
            }
        }
    }
}

TEST_CASE("splitting oracle on pinned complexes")
{
    SECTION("two points, real mode")
    {
        auto h = splitting_oracle(catalog_complex("points2"), CoeffRing::Z(), OracleMode::real());
        REQUIRE(h.at(0) == (GroupSummary{1, {}}));
        REQUIRE(h.at(1) == (GroupSummary{1, {}}));
        REQUIRE(h.groups.size() == 2);
    }
    SECTION("boundary of the triangle, real mode: a 2-sphere")
    {
        auto h =
            splitting_oracle(catalog_complex("boundary3"), CoeffRing::Z(), OracleMode::real());
        REQUIRE(h.at(0) == (GroupSummary{1, {}}));
        REQUIRE(h.at(2) == (GroupSummary{1, {}}));
        REQUIRE(h.groups.size() == 2);
    }
    SECTION("two points, sphere mode (1,1): a 3-sphere")
    {
        auto h = splitting_oracle(catalog_complex("points2"), CoeffRing::Z(),
                                  OracleMode::spheres({1, 1}));
        REQUIRE(h.at(0) == (GroupSummary{1, {}}));
        REQUIRE(h.at(3) == (GroupSummary{1, {}}));
        REQUIRE(h.groups.size() == 2);
    }
    SECTION("tensor mode with rank-one modules matches sphere mode")
    {
        auto k = catalog_complex("gon4");
        auto hs =
            splitting_oracle(k, CoeffRing::Z(), OracleMode::spheres({1, 2, 1, 2}));
        auto ht = splitting_oracle(
            k, CoeffRing::Z(), OracleMode::tensor({{1}, {2}, {1}, {2}}));
        REQUIRE(hs == ht);
    }
    SECTION("real-mode torsion of rp2_6 shows up in degree 3")
    {
        auto h = splitting_oracle(catalog_complex("rp2_6"), CoeffRing::Z(), OracleMode::real());
        REQUIRE(h.at(3).torsion == std::vector<BigInt>{BigInt(2)});
    }
}
