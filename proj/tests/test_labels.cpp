#include <catch2/catch_amalgamated.hpp>

#include "diagcx/json_io.hpp"
#include "diagcx/labels.hpp"
#include "diagcx/verify.hpp"

using namespace diagcx;

TEST_CASE("incidence rules: the worked comparisons") {
    Label big({{5, 2}, {3}, {1, 6}, {4}, {7}, {8}});
    CHECK(leq_labels(Label({{5, 2}, {3, 1, 6}, {4, 7}}), big));
    CHECK(leq_labels(Label({{5, 2}, {3}, {1, 6}, {4}, {7}}), big));
    CHECK(leq_labels(Label({{5, 2}, {3}, {1, 6}, {4}, {7, 8}}), big));
    CHECK(leq_labels(big, big));
    // not below: a non-consecutive merge
    CHECK_FALSE(leq_labels(Label({{5, 2, 4}, {3}, {1, 6}, {7}, {8}}), big));
    // refinement goes the other way
    CHECK(leq_labels(Label({{5, 2}, {3, 1, 6, 4, 7, 8}}), big));
}

TEST_CASE("label basics") {
    Label l({{0}, {1, 2}});
    CHECK(l.n_blocks() == 2);
    CHECK(l.arrangement() == IdVec{0, 1, 2});
    CHECK(l.chain() == std::vector<IdVec>{{0}, {0, 1, 2}});
    CHECK(Label::from_chain(l.chain()) == l);
    CHECK_THROWS_AS(Label({{0}, {}}).validate_basic(), std::invalid_argument);
    CHECK_THROWS_AS(Label({{0}, {0}}).validate_basic(), std::invalid_argument);
}

TEST_CASE("two-block label has the two expected faces") {
    Label l({{0}, {1}});
    auto fs = faces(l);
    REQUIRE(fs.size() == 2);
    CHECK(std::find(fs.begin(), fs.end(), Label({{0}})) != fs.end());
    CHECK(std::find(fs.begin(), fs.end(), Label({{0, 1}})) != fs.end());
}

TEST_CASE("faces equal the closure of the generating rules") {
    for (int variant = 0; variant < 2; ++variant) {
        auto ap = variant == 0 ? enumerate_plain(5) : enumerate_punctured(3);
        auto bd = bd_complex(ap);
        for (auto& l : bd.labels) {
            auto slow = oracle::faces_by_rule_closure(l);
            auto fast = faces(l);
            CHECK(slow == fast);
        }
    }
}

TEST_CASE("every face of a valid label is valid") {
    auto ap = enumerate_punctured(3);
    auto bd = bd_complex(ap);
    for (auto& l : bd.labels)
        for (auto& f : faces(l)) CHECK_NOTHROW(validate_label(ap, f));
}

TEST_CASE("leq_labels is a partial order on the pentagon corpus") {
    auto bd = bd_complex(enumerate_plain(5));
    for (auto& a : bd.labels)
        for (auto& b : bd.labels) {
            if (leq_labels(a, b) && leq_labels(b, a)) CHECK(a == b);
            for (auto& c : bd.labels)
                if (leq_labels(a, b) && leq_labels(b, c)) CHECK(leq_labels(a, c));
        }
}

TEST_CASE("bd_complex of the pentagon is the subdivided associahedron boundary") {
    auto ap = enumerate_plain(5);
    auto bd = bd_complex(ap);
    // labels: 10 single-block + 10 two-block = the subdivided boundary 10-gon
    CHECK(bd.labels.size() == 20);
    auto rep = homology(bd.support);
    CHECK(rep.betti == std::vector<long long>{1, 1});  // a circle
    // the label poset is the face poset of the support complex
    auto face_poset = simplex_face_poset(bd.support);
    CHECK(poset_isomorphism(bd.label_poset, face_poset).has_value());
}

TEST_CASE("bd_complex support matches the label complex for the punctured triangle") {
    auto ap = enumerate_punctured(3);
    auto bd = bd_complex(ap);
    auto face_poset = simplex_face_poset(bd.support);
    CHECK(poset_isomorphism(bd.label_poset, face_poset).has_value());
    // minimal labels are exactly the single-block labels (the arrangements)
    int singles = 0;
    for (auto& l : bd.labels) singles += l.n_blocks() == 1;
    CHECK(singles == static_cast<int>(bd.label_poset.minimal_elements().size()));
    for (int m : bd.label_poset.minimal_elements())
        CHECK(bd.labels[static_cast<std::size_t>(m)].n_blocks() == 1);
}

TEST_CASE("maximal labels pair maximal arrangements with orderings") {
    // over a triangulated square: the two labels ({02}) and ({13}) are the
    // arrangements; maximal labels have a maximal arrangement and a linear
    // order on the rest
    auto ap = enumerate_plain(4);
    auto bd = bd_complex(ap);
    CHECK(bd.labels.size() == 2);
    for (int m : bd.label_poset.maximal_elements())
        CHECK(bd.labels[static_cast<std::size_t>(m)].n_blocks() == 1);
}

TEST_CASE("label json round trip") {
    Label l({{2, 0}, {1}});
    auto j = label_to_json(l);
    CHECK(label_from_json(j) == l);
}
