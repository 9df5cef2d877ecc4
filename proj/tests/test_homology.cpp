#include <catch2/catch_amalgamated.hpp>

#include "diagcx/homology.hpp"

using namespace diagcx;

namespace {

SimplicialComplex tetra_boundary() {
    return SimplicialComplex(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

SimplicialComplex cycle(int n, int offset = 0, int total = -1) {
    std::vector<std::vector<int>> facets;
    for (int i = 0; i < n; ++i) facets.push_back({offset + i, offset + (i + 1) % n});
    return SimplicialComplex(total < 0 ? offset + n : total, facets);
}

// minimal 6-vertex triangulation of the projective plane
SimplicialComplex rp2() {
    return SimplicialComplex(6, {{0, 1, 3},
                                 {0, 1, 4},
                                 {0, 2, 3},
                                 {0, 2, 5},
                                 {0, 4, 5},
                                 {1, 2, 4},
                                 {1, 2, 5},
                                 {1, 3, 5},
                                 {2, 3, 4},
                                 {3, 4, 5}});
}

}  // namespace

TEST_CASE("homology of standard spaces") {
    auto s2 = homology(tetra_boundary());
    CHECK(s2.betti == std::vector<long long>{1, 0, 1});
    CHECK(s2.torsion[0].empty());
    CHECK(s2.torsion[1].empty());
    CHECK(s2.euler == 2);

    auto pt = homology(SimplicialComplex(1, {{0}}));
    CHECK(pt.betti == std::vector<long long>{1});
    CHECK(pt.reduced_trivial());

    auto s1 = homology(cycle(6));
    CHECK(s1.betti == std::vector<long long>{1, 1});
    CHECK(s1.euler == 0);
}

TEST_CASE("projective plane has 2-torsion") {
    auto rep = homology(rp2());
    REQUIRE(rep.betti.size() == 3);
    CHECK(rep.betti == std::vector<long long>{1, 0, 0});
    REQUIRE(rep.torsion[1].size() == 1);
    CHECK(rep.torsion[1][0] == 2);
    CHECK(rep.euler == 1);
}

TEST_CASE("boundary operator squares to zero") {
    for (auto K : {tetra_boundary(), rp2()}) {
        auto cc = ChainComplex::from_complex(K);
        CHECK(cc.boundary_squares_to_zero());
    }
}

TEST_CASE("Smith normal form invariant under unimodular shuffles") {
    auto cc = ChainComplex::from_complex(rp2());
    const auto& d2 = cc.boundary[1];
    auto base = smith_normal_form(d2);
    SeededRng rng(777);
    for (int trial = 0; trial < 10; ++trial) {
        SparseIntMatrix m(d2.rows(), d2.cols());
        for (int r = 0; r < d2.rows(); ++r)
            for (auto& [c, v] : d2.row(r)) m.add(r, c, v);
        // random row/col swaps plus a few integer row additions
        for (int t = 0; t < 20; ++t) {
            m.swap_rows(static_cast<int>(rng.below(static_cast<std::uint64_t>(m.rows()))),
                        static_cast<int>(rng.below(static_cast<std::uint64_t>(m.rows()))));
            m.swap_cols(static_cast<int>(rng.below(static_cast<std::uint64_t>(m.cols()))),
                        static_cast<int>(rng.below(static_cast<std::uint64_t>(m.cols()))));
            int a = static_cast<int>(rng.below(static_cast<std::uint64_t>(m.rows())));
            int b = static_cast<int>(rng.below(static_cast<std::uint64_t>(m.rows())));
            if (a != b) m.row_axpy(a, b, BigInt(1 + static_cast<int>(rng.below(3))));
        }
        auto shuffled = smith_normal_form(std::move(m));
        CHECK(shuffled.rank == base.rank);
        CHECK(shuffled.invariant_factors == base.invariant_factors);
    }
}

TEST_CASE("betti numbers add over disjoint unions") {
    SeededRng rng(424242);
    for (int trial = 0; trial < 5; ++trial) {
        // random small complex on 5 vertices + a disjoint 4-cycle
        std::vector<std::vector<int>> facets;
        for (int t = 0; t < 6; ++t) {
            int a = static_cast<int>(rng.below(5)), b = static_cast<int>(rng.below(5)),
                c = static_cast<int>(rng.below(5));
            if (a == b || b == c || a == c) continue;
            facets.push_back({a, b, c});
        }
        if (facets.empty()) facets.push_back({0, 1});
        SimplicialComplex left(5, facets);
        auto right = cycle(4, 5, 9);
        std::vector<std::vector<int>> both = left.facets();
        for (auto& f : right.facets()) both.push_back(f);
        SimplicialComplex uni(9, both);

        auto rl = homology(left), rr = homology(right), ru = homology(uni);
        for (std::size_t k = 0; k < ru.betti.size(); ++k) {
            long long want = (k < rl.betti.size() ? rl.betti[k] : 0) +
                             (k < rr.betti.size() ? rr.betti[k] : 0);
            CHECK(ru.betti[k] == want);
        }
    }
}

TEST_CASE("euler characteristic of cell complexes") {
    CHECK(euler_characteristic(SimplicialComplex(1, {{0}})) == 1);
    CHECK(euler_characteristic(SimplicialComplex(3, {{0, 1}, {1, 2}, {0, 2}})) == 0);
}

TEST_CASE("contractibility certificates") {
    // full simplex: a cone, collapsible
    auto cert = is_contractible_certificate(SimplicialComplex(4, {{0, 1, 2, 3}}));
    CHECK(cert.kind == ContractibilityCertificate::Kind::Collapsible);
    {
        std::map<std::vector<int>, int> id;
        auto cc = CellComplex::from_simplicial(SimplicialComplex(4, {{0, 1, 2, 3}}), id);
        CHECK(check_acyclic(cc, cert.field).acyclic);
        auto col = collapse(cc, cert.field);
        CHECK(col.complete);
        CHECK(col.single_vertex);
    }

    // 6-cycle: fails (betti_1 = 1)
    auto fail = is_contractible_certificate(cycle(6));
    CHECK(fail.kind == ContractibilityCertificate::Kind::Fail);

    // wedge-like contractible but non-cone complex still gets some certificate
    SimplicialComplex tree(4, {{0, 1}, {1, 2}, {1, 3}});
    auto tc = is_contractible_certificate(tree);
    CHECK(tc.kind == ContractibilityCertificate::Kind::Collapsible);
}

TEST_CASE("collapse detects closed paths") {
    // bigon 1-complex: two vertices, two parallel edges, matched head-to-tail
    CellComplex K;
    K.dim = {0, 0, 1, 1};
    K.name = {"x", "y", "a", "b"};
    K.facets_of = {{}, {}, {0, 1}, {0, 1}};
    DiscreteVectorField V(4);
    V.match(0, 2);  // x - a
    V.match(1, 3);  // y - b
    auto res = check_acyclic(K, V);
    CHECK_FALSE(res.acyclic);
    REQUIRE(res.witness.size() >= 5);
    CHECK(res.witness.front() == res.witness.back());
    CHECK(VPath::valid(K, V, res.witness));
    CHECK_THROWS_AS(collapse(K, V), std::invalid_argument);
}
