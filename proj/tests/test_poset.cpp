#include <catch2/catch_amalgamated.hpp>

#include "diagcx/chords.hpp"
#include "diagcx/homology.hpp"
#include "diagcx/labels.hpp"
#include "diagcx/poset.hpp"

using namespace diagcx;

namespace {

Poset chain(int n) {
    std::vector<std::string> pl;
    std::vector<std::pair<int, int>> cv;
    for (int i = 0; i < n; ++i) {
        pl.push_back("c" + std::to_string(i));
        if (i) cv.push_back({i - 1, i});
    }
    return Poset(pl, cv);
}

Poset antichain(int n) {
    std::vector<std::string> pl;
    for (int i = 0; i < n; ++i) pl.push_back("a" + std::to_string(i));
    return Poset(pl, {});
}

// brute-force chain count per length via leq
long long count_chains(const Poset& p, int len) {
    std::function<long long(std::vector<int>&)> grow = [&](std::vector<int>& cur) -> long long {
        if (static_cast<int>(cur.size()) == len) return 1;
        long long total = 0;
        int last = cur.empty() ? -1 : cur.back();
        for (int v = 0; v < p.size(); ++v) {
            if (last != -1 && !(p.leq(last, v) && last != v)) continue;
            if (last == -1) {
                // ensure strictly increasing ids are not required; all starts allowed
            }
            cur.push_back(v);
            total += grow(cur);
            cur.pop_back();
        }
        return total;
    };
    std::vector<int> cur;
    return grow(cur);
}

}  // namespace

TEST_CASE("leq basics") {
    auto c = chain(3);
    CHECK(c.leq(0, 2));      // transitivity
    CHECK(c.leq(1, 1));      // reflexivity
    CHECK_FALSE(c.leq(2, 0));
    auto a = antichain(2);
    CHECK_FALSE(a.leq(0, 1));
    CHECK(a.leq(0, 0));
    CHECK_THROWS_AS(a.leq(0, 5), std::out_of_range);
}

TEST_CASE("covers are transitively reduced") {
    // pass a redundant cover: it must be dropped
    Poset p({"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(p.covers().size() == 2);
    CHECK(p.leq(0, 2));
}

TEST_CASE("cover cycles are rejected") {
    CHECK_THROWS_AS(Poset({"a", "b"}, {{0, 1}, {1, 0}}), std::invalid_argument);
}

TEST_CASE("order complex of small posets") {
    auto oc = order_complex(chain(3));
    REQUIRE(oc.facets().size() == 1);
    CHECK(oc.facets()[0] == std::vector<int>{0, 1, 2});

    auto oa = order_complex(antichain(2));
    CHECK(oa.facets().size() == 2);
    CHECK(oa.dim() == 0);

    // face poset of the boundary of a triangle: 3 vertices + 3 edges
    std::vector<std::string> pl{"v0", "v1", "v2", "e01", "e12", "e02"};
    std::vector<std::pair<int, int>> cv{{0, 3}, {1, 3}, {1, 4}, {2, 4}, {0, 5}, {2, 5}};
    auto hexagon = order_complex(Poset(pl, cv));
    CHECK(hexagon.n_vertices() == 6);
    CHECK(hexagon.facets().size() == 6);
    CHECK(hexagon.dim() == 1);
    auto rep = homology(hexagon);
    CHECK(rep.betti == std::vector<long long>{1, 1});  // a 6-cycle
}

TEST_CASE("euler characteristic equals alternating chain count") {
    auto ap = enumerate_plain(5);
    auto oc = order_complex(ap.poset);
    long long chi = 0;
    for (int len = 1; len <= ap.poset.size(); ++len) {
        long long c = count_chains(ap.poset, len);
        if (c == 0) break;
        chi += (len % 2 ? 1 : -1) * c;
    }
    CHECK(chi == oc.euler_characteristic());
    CHECK(chi == homology(oc).euler);
}

TEST_CASE("graded f-vector") {
    auto ap = enumerate_plain(5);
    CHECK(graded_f_vector(ap.poset, ap.rank) == std::vector<int>{5, 5, 1});

    Poset single({"x"}, {});
    CHECK(graded_f_vector(single, {0}) == std::vector<int>{1});

    // face lattice of a square without the empty face: 4 vertices, 4 edges, 1 cell
    std::vector<std::string> pl{"v0", "v1", "v2", "v3", "e0", "e1", "e2", "e3", "f"};
    std::vector<std::pair<int, int>> cv{{0, 4}, {1, 4}, {1, 5}, {2, 5}, {2, 6}, {3, 6}, {3, 7}, {0, 7},
                                        {4, 8}, {5, 8}, {6, 8}, {7, 8}};
    Poset square(pl, cv);
    CHECK(graded_f_vector(square, {0, 0, 0, 0, 1, 1, 1, 1, 2}) == std::vector<int>{4, 4, 1});

    CHECK_THROWS_AS(graded_f_vector(chain(2), {1, 0}), std::invalid_argument);
}

TEST_CASE("poset isomorphism") {
    CHECK(poset_isomorphism(chain(3), chain(3)).has_value());
    CHECK_FALSE(poset_isomorphism(chain(3), antichain(3)).has_value());

    auto iso = poset_isomorphism(chain(3), chain(3));
    REQUIRE(iso);
    // identity is the only automorphism of a chain
    CHECK(*iso == std::vector<int>{0, 1, 2});
}

TEST_CASE("isomorphism preserves and reflects leq on random pairs") {
    auto p = enumerate_axis_symmetric(4).poset;
    auto q = enumerate_plain(5).poset;
    auto iso = poset_isomorphism(p, q);
    REQUIRE(iso);
    SeededRng rng(12345);
    for (int t = 0; t < 200; ++t) {
        int a = static_cast<int>(rng.below(static_cast<std::uint64_t>(p.size())));
        int b = static_cast<int>(rng.below(static_cast<std::uint64_t>(p.size())));
        CHECK(p.leq(a, b) == q.leq((*iso)[static_cast<std::size_t>(a)], (*iso)[static_cast<std::size_t>(b)]));
    }
}

TEST_CASE("order complexes of isomorphic posets are isomorphic complexes") {
    auto p = enumerate_axis_symmetric(4).poset;
    auto q = enumerate_plain(5).poset;
    auto iso = poset_isomorphism(p, q);
    REQUIRE(iso);
    auto ocp = order_complex(p);
    auto ocq = order_complex(q);
    std::set<std::vector<int>> mapped, target;
    for (auto& f : ocp.facets()) {
        std::vector<int> g;
        for (int v : f) g.push_back((*iso)[static_cast<std::size_t>(v)]);
        mapped.insert(sorted_unique(g));
    }
    for (auto& f : ocq.facets()) target.insert(f);
    CHECK(mapped == target);
}

TEST_CASE("dot export mentions every element") {
    auto p = chain(3);
    auto dot = p.dot("c3");
    for (int i = 0; i < 3; ++i) CHECK(dot.find(p.payload(i)) != std::string::npos);
}
