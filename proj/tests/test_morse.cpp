#include <catch2/catch_amalgamated.hpp>

#include "diagcx/morse.hpp"
#include "diagcx/verify.hpp"

using namespace diagcx;

TEST_CASE("generate_preimage smallest cases") {
    auto i1 = generate_preimage({1}, 1);
    CHECK(i1.cells.size() == 1);
    CHECK(i1.cells[0] == thmhalf_expected_critical(i1));

    auto i2 = generate_preimage({1}, 2);
    // (S1∪{d1,d2}), (S1∪{d1},{d2}), (S1∪{d2},{d1}), (S1∪{d1}), (S1∪{d2})
    CHECK(i2.cells.size() == 5);
    CHECK(i2.find(Label({{0, 1, 2}})) >= 0);
    CHECK(i2.find(Label({{0, 1}, {2}})) >= 0);
    CHECK(i2.find(Label({{0, 2}, {1}})) >= 0);
    // no cell without a new diagonal in block 1
    for (auto& c : i2.cells) {
        bool has_new = false;
        for (int x : c.blocks[0]) has_new |= i2.is_new(x);
        CHECK(has_new);
    }
    CHECK(i2.find(Label({{0}, {1}})) < 0);

    CHECK_THROWS_AS(generate_preimage({1}, 0), std::invalid_argument);
    CHECK_THROWS_AS(generate_preimage({}, 1), std::invalid_argument);
}

TEST_CASE("generate_preimage q=2 direct reading") {
    auto inst = generate_preimage({2}, 2);  // base (S1) with |S1| = 2
    int d1 = inst.new_id(0), d2 = inst.new_id(1);
    CHECK(inst.find(Label({{0, 1, d1}, {d2}})) >= 0);
    CHECK(inst.find(Label({{0, 1, d2}, {d1}})) >= 0);
    CHECK(inst.find(Label({{0, 1, d1, d2}})) >= 0);
}

TEST_CASE("preimage counts match the slow generator") {
    for (auto sizes : std::vector<std::vector<int>>{{1}, {2}, {1, 1}, {2, 1}, {1, 2}})
        for (int q = 1; q <= 3; ++q) {
            auto inst = generate_preimage(sizes, q);
            CHECK(oracle::preimage_cell_count_bruteforce(sizes, q) ==
                  static_cast<long long>(inst.cells.size()));
        }
}

TEST_CASE("thmhalf matching: unmatched shape and unique critical cell") {
    for (auto sizes : std::vector<std::vector<int>>{{1}, {1, 1}, {2, 1}, {1, 1, 1}})
        for (int q = 1; q <= 3; ++q) {
            auto inst = generate_preimage(sizes, q);
            auto V = thmhalf_matching(inst);
            auto crit = V.critical_cells();
            REQUIRE(crit.size() == 1);
            CHECK(inst.cells[static_cast<std::size_t>(crit[0])] == thmhalf_expected_critical(inst));
            CHECK(check_acyclic(inst.complex, V).acyclic);
            auto col = collapse(inst.complex, V);
            CHECK(col.complete);
            CHECK(col.critical == crit);
        }
}

TEST_CASE("paper gradient path is a V-path of the matching") {
    auto inst = generate_preimage({1, 1, 1}, 3);
    auto V = thmhalf_matching(inst);
    int o1 = 0, o2 = 1, o3 = 2;
    int n1 = inst.new_id(0), n2 = inst.new_id(1), n3 = inst.new_id(2);
    auto id = [&](std::vector<IdVec> blocks) {
        int c = inst.find(Label(std::move(blocks)));
        REQUIRE(c >= 0);
        return c;
    };
    int a0 = id({{o1, n3}, {o2, n2}, {o3, n1}});
    int b0 = id({{o1, n3}, {o2, n2}, {n1}, {o3}});
    int a1 = id({{o1, n3}, {o2, n2, n1}, {o3}});
    int b1 = id({{o1, n3}, {n1}, {o2, n2}, {o3}});
    int a2 = id({{o1, n3, n1}, {o2, n2}, {o3}});
    int b2 = id({{o1, n3, n1}, {n2}, {o2}, {o3}});
    CHECK(V.partner[a0] == b0);
    CHECK(V.partner[a1] == b1);
    CHECK(V.partner[a2] == b2);
    int a3 = id({{o1, n3, n1}, {n2}, {o2}});
    CHECK(VPath::valid(inst.complex, V, {a0, b0, a1, b1, a2, b2, a3}));
}

TEST_CASE("check_acyclic accepts the empty matching") {
    auto inst = generate_preimage({1}, 2);
    DiscreteVectorField empty(static_cast<int>(inst.cells.size()));
    CHECK(check_acyclic(inst.complex, empty).acyclic);
}

TEST_CASE("instance homology is that of a point") {
    for (auto sizes : std::vector<std::vector<int>>{{1}, {2, 2}, {1, 2, 1}})
        for (int q = 1; q <= 2; ++q) {
            auto inst = generate_preimage(sizes, q);
            CHECK(homology(preimage_simplicial(inst)).reduced_trivial());
        }
}

TEST_CASE("euler characteristic equals the critical-cell count signed sum") {
    auto inst = generate_preimage({2, 1}, 3);
    auto V = thmhalf_matching(inst);
    auto crit = V.critical_cells();
    long long chi = 0;
    for (int c : crit) chi += (inst.complex.dim[static_cast<std::size_t>(c)] % 2 ? -1 : 1);
    CHECK(chi == inst.complex.euler_characteristic());
}

TEST_CASE("matching axioms hold on every produced field") {
    auto inst = generate_preimage({2, 2}, 3);
    auto V = thmhalf_matching(inst);
    CHECK_NOTHROW(V.validate(inst.complex));
    // each matched pair differs by exactly one chain element
    for (int a = 0; a < static_cast<int>(V.partner.size()); ++a) {
        int b = V.partner[a];
        if (b <= a) continue;
        CHECK(std::abs(inst.complex.dim[static_cast<std::size_t>(a)] -
                       inst.complex.dim[static_cast<std::size_t>(b)]) == 1);
        const Label &la = inst.cells[static_cast<std::size_t>(a)], &lb = inst.cells[static_cast<std::size_t>(b)];
        CHECK((leq_labels(la, lb) || leq_labels(lb, la)));
    }
}
