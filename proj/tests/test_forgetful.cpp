#include <catch2/catch_amalgamated.hpp>

#include "diagcx/forgetful.hpp"
#include "diagcx/verify.hpp"

using namespace diagcx;

namespace {

int class_of(const PolygonUniverse& u, const std::vector<Chord>& orbit) {
    auto sorted = orbit;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < u.n_classes(); ++i)
        if (u.classes[static_cast<std::size_t>(i)].chords == sorted) return i;
    throw std::runtime_error("class not found");
}

}  // namespace

TEST_CASE("project_pi: a lone loop dies to the empty image") {
    auto punct = PolygonUniverse::punctured(4);
    auto plain = PolygonUniverse::plain(4);
    int loop0 = class_of(punct, {Chord(0, 4)});
    auto res = project_pi(punct, plain, Label({{loop0}}));
    CHECK(res.empty);
    CHECK(res.trace.dropped_contractible == IdVec{loop0});
    CHECK(res.trace.accounts_for({loop0}));
    CHECK(res.trace.removed_empty_blocks == std::vector<int>{0});
}

TEST_CASE("project_pi: the two sides of a chord deduplicate to the earlier block") {
    auto punct = PolygonUniverse::punctured(4);
    auto plain = PolygonUniverse::plain(4);
    int sideA = class_of(punct, {Chord(0, 2), Chord(4, 6)});
    int sideB = class_of(punct, {Chord(2, 4), Chord(0, 6)});
    auto res = project_pi(punct, plain, Label({{sideA}, {sideB}}));
    REQUIRE_FALSE(res.empty);
    CHECK(res.label.n_blocks() == 1);
    int plain02 = class_of(plain, {Chord(0, 2)});
    CHECK(res.label.blocks[0] == IdVec{plain02});
    REQUIRE(res.trace.dedup_groups.size() == 1);
    CHECK(res.trace.dedup_groups[0].first == IdVec{sideA, sideB});
    CHECK(res.trace.dedup_groups[0].second == sideA);
    CHECK(res.trace.removed_empty_blocks == std::vector<int>{1});
    CHECK(res.trace.accounts_for({sideA, sideB}));
}

TEST_CASE("project_pi: labels untouched by the puncture map identically") {
    auto punct = PolygonUniverse::punctured(4);
    auto plain = PolygonUniverse::plain(4);
    int sideA = class_of(punct, {Chord(0, 2), Chord(4, 6)});
    int sideA13 = class_of(punct, {Chord(1, 3), Chord(5, 7)});
    auto res = project_pi(punct, plain, Label({{sideA}, {sideA13}}));
    REQUIRE_FALSE(res.empty);
    CHECK(res.label.n_blocks() == 2);
    CHECK(res.trace.dropped_contractible.empty());
    CHECK(res.trace.dropped_edge_homotopic.empty());
    CHECK(res.trace.dedup_groups.empty());
    CHECK(res.trace.removed_empty_blocks.empty());
}

TEST_CASE("project_pi is monotone over the small corpora") {
    for (int n = 2; n <= 4; ++n) {
        auto punct = PolygonUniverse::punctured(n);
        auto plain = PolygonUniverse::plain(n);
        auto bd = bd_complex(enumerate_punctured(n));
        std::vector<ProjectedLabel> proj;
        for (auto& l : bd.labels) {
            auto p = project_pi(punct, plain, l);
            CHECK(p.trace.accounts_for(l.arrangement()));
            proj.push_back(std::move(p));
        }
        for (std::size_t i = 0; i < bd.labels.size(); ++i)
            for (std::size_t j = 0; j < bd.labels.size(); ++j) {
                if (!leq_labels(bd.labels[i], bd.labels[j])) continue;
                CHECK(leq_projected(proj[i], proj[j]));
            }
    }
}

TEST_CASE("pi is surjective onto the plain corpus") {
    // fibers of the projection over every plain label are non-empty
    int n = 4;
    auto punct = PolygonUniverse::punctured(n);
    auto plain = PolygonUniverse::plain(n);
    auto plain_bd = bd_complex(enumerate_plain(n));
    auto punct_bd = bd_complex(enumerate_punctured(n));
    std::set<std::string> images;
    for (auto& l : punct_bd.labels) {
        auto p = project_pi(punct, plain, l);
        if (!p.empty) images.insert(p.label.key());
    }
    for (auto& b : plain_bd.labels) CHECK(images.count(b.key()));
}

TEST_CASE("half surgery pi1 folds blockwise and reflects the order") {
    for (int k : {3, 4}) {
        auto ax = PolygonUniverse::axial(k);
        auto plain = PolygonUniverse::plain(k + 1);
        auto bd = bd_complex(enumerate_axis_symmetric(k));
        std::vector<Label> images;
        std::set<std::string> keys;
        for (auto& l : bd.labels) {
            auto img = half_surgery_pi1(ax, plain, l);
            CHECK(img.n_blocks() == l.n_blocks());
            CHECK(unfold_pi1(ax, plain, img) == l);
            keys.insert(img.key());
            images.push_back(img);
        }
        CHECK(keys.size() == bd.labels.size());  // injective
        for (std::size_t i = 0; i < bd.labels.size(); ++i)
            for (std::size_t j = 0; j < bd.labels.size(); ++j)
                CHECK(leq_labels(bd.labels[i], bd.labels[j]) == leq_labels(images[i], images[j]));
    }
}

TEST_CASE("pi1 image examples") {
    // k=3: the single self-symmetric chord folds to the chord at v in S1
    auto ax = PolygonUniverse::axial(3);
    auto plain = PolygonUniverse::plain(4);
    int self_id = -1, pair_id = -1;
    for (int i = 0; i < ax.n_classes(); ++i)
        (ax.classes[static_cast<std::size_t>(i)].self_symmetric() ? self_id : pair_id) = i;
    REQUIRE(self_id >= 0);
    REQUIRE(pair_id >= 0);
    auto img_self = half_surgery_pi1(ax, plain, Label({{self_id}}));
    int at_v = class_of(plain, {Chord(1, 3)});  // v = 3 in the 4-gon
    CHECK(img_self == Label({{at_v}}));
    auto img_pair = half_surgery_pi1(ax, plain, Label({{pair_id}}));
    int not_v = class_of(plain, {Chord(0, 2)});
    CHECK(img_pair == Label({{not_v}}));
}

TEST_CASE("in_image_pi1 on polygons is always true") {
    for (int k : {3, 4}) {
        auto plain = PolygonUniverse::plain(k + 1);
        auto bd = bd_complex(enumerate_plain(k + 1));
        for (auto& l : bd.labels) CHECK(in_image_pi1(plain, l));
    }
    // fan at v: every complementary face is a triangle with one corner at v
    auto plain6 = PolygonUniverse::plain(6);
    IdVec fan;
    for (int i = 0; i < plain6.n_classes(); ++i)
        if (plain6.classes[static_cast<std::size_t>(i)].chords[0].b == 5) fan.push_back(i);
    REQUIRE(fan.size() == 3);
    CHECK(in_image_pi1(plain6, Label({fan})));
}

TEST_CASE("in_image_pi1 fails when a disk touches v twice") {
    // the filling 2-loop arrangement of the one-vertex torus: its single
    // complementary square has four corners at v
    auto rg = torus_ribbon(2);
    CHECK_FALSE(in_image_pi1(rg, 0));
    // a lone loop on the sphere bounds two disks that each pass v once
    auto rg1 = torus_ribbon(1);
    CHECK(in_image_pi1(rg1, 0));
}

TEST_CASE("pi2 drops the diagonals at v") {
    auto plain = PolygonUniverse::plain(4);  // k = 3
    auto punct = PolygonUniverse::punctured(3);
    int at_v = class_of(plain, {Chord(1, 3)});
    int not_v = class_of(plain, {Chord(0, 2)});

    auto all_at_v = puncture_v_pi2(plain, punct, Label({{at_v}}));
    CHECK(all_at_v.empty);
    CHECK(all_at_v.dropped_at_v == IdVec{at_v});

    auto kept = puncture_v_pi2(plain, punct, Label({{not_v}}));
    REQUIRE_FALSE(kept.empty);
    int expect = class_of(punct, {Chord(0, 2), Chord(3, 5)});
    CHECK(kept.label == Label({{expect}}));
}

TEST_CASE("pi2 image enumeration for k=3") {
    // the image of pi2 ∘ pi1 consists of the labels supported on the
    // cut-avoiding pair classes; for k=3 that is the single label over the
    // 0-2 class, plus the empty image for the all-at-v label
    auto ax = PolygonUniverse::axial(3);
    auto plain = PolygonUniverse::plain(4);
    auto punct = PolygonUniverse::punctured(3);
    auto bd = bd_complex(enumerate_axis_symmetric(3));
    std::set<std::string> image;
    int empties = 0;
    for (auto& l : bd.labels) {
        auto img = half_surgery_pi1(ax, plain, l);
        REQUIRE(in_image_pi1(plain, img));
        auto res = puncture_v_pi2(plain, punct, img);
        if (res.empty)
        { ++empties; continue; }
        image.insert(res.label.key());
    }
    int expect = class_of(punct, {Chord(0, 2), Chord(3, 5)});
    CHECK(image == std::set<std::string>{Label({{expect}}).key()});
    CHECK(empties == 1);
}

TEST_CASE("pi2 keeps later blocks when the first empties") {
    auto plain = PolygonUniverse::plain(5);  // k = 4
    auto punct = PolygonUniverse::punctured(4);
    int at_v = class_of(plain, {Chord(1, 4)});
    int not_v = class_of(plain, {Chord(1, 3)});
    auto res = puncture_v_pi2(plain, punct, Label({{at_v}, {not_v}}));
    REQUIRE_FALSE(res.empty);
    CHECK(res.label.n_blocks() == 1);
    int expect = class_of(punct, {Chord(1, 3), Chord(5, 7)});
    CHECK(res.label.blocks[0] == IdVec{expect});
}
