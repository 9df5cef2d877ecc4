#include <catch2/catch_amalgamated.hpp>

#include "diagcx/chords.hpp"
#include "diagcx/json_io.hpp"
#include "diagcx/ribbon.hpp"
#include "diagcx/verify.hpp"

using namespace diagcx;

namespace {

MarkedSurfaceSpec disk_spec(int n1, int f = 0) {
    MarkedSurfaceSpec s;
    s.g = 0;
    s.b = 1;
    s.n = 0;
    s.f = f;
    s.n_i = {n1};
    return s;
}

/// Square with two parallel copies of the 0-2 diagonal and a puncture in the
/// bigon between them.
RibbonGraph punctured_square_two_chords(bool puncture_between) {
    RibbonBuilder rb;
    for (int i = 0; i < 4; ++i) rb.add_vertex(std::to_string(i));
    int b01 = rb.add_edge(0, 1, true), b12 = rb.add_edge(1, 2, true), b23 = rb.add_edge(2, 3, true),
        b30 = rb.add_edge(3, 0, true);
    int dA = rb.add_edge(0, 2, false);  // the copy nearer vertex 1
    int dB = rb.add_edge(0, 2, false);  // the copy nearer vertex 3
    // clockwise rotations: [to (i-1), partners descending, to (i+1)]
    rb.set_rotation(0, {rb.half(b30, 0), 2 * dB, 2 * dA, rb.half(b01, 0)});
    rb.set_rotation(1, {rb.half(b01, 1), rb.half(b12, 1)});
    rb.set_rotation(2, {rb.half(b12, 2), 2 * dA + 1, 2 * dB + 1, rb.half(b23, 2)});
    rb.set_rotation(3, {rb.half(b23, 3), rb.half(b30, 3)});
    rb.declare_outer(rb.half(b01, 1));
    // faces: triangle(0,1,2) = {b01@0,b12@1,dA@2}, bigon = {dA@0,dB@2},
    // triangle(0,2,3) = {dB@0,b23@2,b30@3}
    rb.add_puncture("P1", puncture_between ? 2 * dA : 2 * dB);
    return rb.build();
}

/// Triangle with a loop at vertex 0 cutting off a monogon.
RibbonGraph triangle_with_monogon(bool punctured) {
    RibbonBuilder rb;
    for (int i = 0; i < 3; ++i) rb.add_vertex(std::to_string(i));
    int b01 = rb.add_edge(0, 1, true), b12 = rb.add_edge(1, 2, true), b20 = rb.add_edge(2, 0, true);
    int loop = rb.add_edge(0, 0, false);
    rb.set_rotation(0, {rb.half(b20, 0), 2 * loop, 2 * loop + 1, rb.half(b01, 0)});
    rb.set_rotation(1, {rb.half(b01, 1), rb.half(b12, 1)});
    rb.set_rotation(2, {rb.half(b12, 2), rb.half(b20, 2)});
    rb.declare_outer(rb.half(b01, 1));
    if (punctured) rb.add_puncture("P1", 2 * loop + 1);
    return rb.build();
}

}  // namespace

TEST_CASE("validate admissible and inadmissible arrangements") {
    // square with one diagonal, no punctures
    auto rg = polygon_ribbon_graph(4, {Chord(0, 2)});
    auto rep = validate(rg, disk_spec(4));
    CHECK(rep.admissible);

    // unpunctured monogon from a loop: "non-contractible" violated
    auto bad = validate(triangle_with_monogon(false), disk_spec(3));
    CHECK_FALSE(bad.admissible);
    bool names_monogon = false;
    for (auto& v : bad.violations) names_monogon |= v.find("monogon") != std::string::npos;
    CHECK(names_monogon);

    // same loop but the monogon holds the puncture: admissible
    auto good = validate(triangle_with_monogon(true), disk_spec(3, 1));
    CHECK(good.admissible);

    // two parallel chords with the puncture between them: not homotopic
    auto par = validate(punctured_square_two_chords(true), disk_spec(4, 1));
    CHECK(par.admissible);

    // two parallel chords with the puncture elsewhere: homotopic bigon
    auto dup = validate(punctured_square_two_chords(false), disk_spec(4, 1));
    CHECK_FALSE(dup.admissible);
    bool names_bigon = false;
    for (auto& v : dup.violations) names_bigon |= v.find("bigon") != std::string::npos;
    CHECK(names_bigon);
}

TEST_CASE("free vertex must meet a diagonal") {
    // torus with one free vertex and its 2-loop filling arrangement
    auto rg = torus_ribbon(2);
    MarkedSurfaceSpec spec;
    spec.g = 1;
    spec.b = 0;
    spec.n = 1;
    spec.f = 0;
    auto rep = validate(rg, spec);
    CHECK(rep.admissible);
}

TEST_CASE("genus and face counts") {
    auto sc2 = genus_and_faces(torus_ribbon(2));
    CHECK(sc2.genus == 1);
    CHECK(sc2.interior_faces == 1);
    CHECK(sc2.boundary_components == 0);

    auto sc3 = genus_and_faces(torus_ribbon(3));
    CHECK(sc3.genus == 1);
    CHECK(sc3.interior_faces == 2);

    // one loop on the sphere: two faces
    auto rg1 = torus_ribbon(1);
    auto sc1 = genus_and_faces(rg1);
    CHECK(sc1.genus == 0);
    CHECK(sc1.interior_faces == 2);

    // two boundary squares joined by one diagonal: cylinder cut to a disk
    RibbonBuilder rb;
    for (int i = 0; i < 8; ++i) rb.add_vertex("v" + std::to_string(i));
    std::vector<int> e1, e2;
    for (int i = 0; i < 4; ++i) e1.push_back(rb.add_edge(i, (i + 1) % 4, true));
    for (int i = 0; i < 4; ++i) e2.push_back(rb.add_edge(4 + i, 4 + (i + 1) % 4, true));
    int bridge = rb.add_edge(0, 4, false);
    for (int i = 1; i < 4; ++i) rb.set_rotation(i, {rb.half(e1[i - 1], i), rb.half(e1[i], i)});
    for (int i = 1; i < 4; ++i)
        rb.set_rotation(4 + i, {rb.half(e2[i - 1], 4 + i), rb.half(e2[i], 4 + i)});
    rb.set_rotation(0, {rb.half(e1[3], 0), 2 * bridge, rb.half(e1[0], 0)});
    rb.set_rotation(4, {rb.half(e2[3], 4), 2 * bridge + 1, rb.half(e2[0], 4)});
    rb.declare_outer(rb.half(e1[0], 1));
    rb.declare_outer(rb.half(e2[0], 5));
    auto rg = rb.build();
    auto sc = genus_and_faces(rg);
    CHECK(sc.genus == 0);
    CHECK(sc.interior_faces == 1);
    CHECK(sc.boundary_components == 2);
}

TEST_CASE("canonical form is invariant under half-edge relabeling") {
    auto rg = polygon_ribbon_graph(5, {Chord(0, 2), Chord(2, 4)});
    auto base_form = canonical_form(rg);
    SeededRng rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<int> perm(static_cast<std::size_t>(rg.n_halves()));
        std::iota(perm.begin(), perm.end(), 0);
        // relabel within edge pairs: permute edges and flip halves so iota
        // stays 2e <-> 2e+1
        std::vector<int> edges(static_cast<std::size_t>(rg.n_edges()));
        std::iota(edges.begin(), edges.end(), 0);
        rng.shuffle(edges);
        for (int e = 0; e < rg.n_edges(); ++e) {
            bool flip = rng.below(2);
            perm[static_cast<std::size_t>(2 * e)] = 2 * edges[static_cast<std::size_t>(e)] + (flip ? 1 : 0);
            perm[static_cast<std::size_t>(2 * e + 1)] = 2 * edges[static_cast<std::size_t>(e)] + (flip ? 0 : 1);
        }
        RibbonGraph shuffled;
        shuffled.sigma.assign(rg.n_halves(), -1);
        shuffled.iota.assign(rg.n_halves(), -1);
        shuffled.vertex_of.assign(rg.n_halves(), -1);
        shuffled.vertex_labels = rg.vertex_labels;
        shuffled.edge_is_boundary.assign(static_cast<std::size_t>(rg.n_edges()), 0);
        for (int h = 0; h < rg.n_halves(); ++h) {
            shuffled.sigma[perm[static_cast<std::size_t>(h)]] = perm[static_cast<std::size_t>(rg.sigma[h])];
            shuffled.iota[perm[static_cast<std::size_t>(h)]] = perm[static_cast<std::size_t>(rg.iota[h])];
            shuffled.vertex_of[perm[static_cast<std::size_t>(h)]] = rg.vertex_of[h];
        }
        for (int e = 0; e < rg.n_edges(); ++e)
            shuffled.edge_is_boundary[static_cast<std::size_t>(
                perm[static_cast<std::size_t>(2 * e)] / 2)] = rg.edge_is_boundary[static_cast<std::size_t>(e)];
        for (int h : rg.declared_outer) shuffled.declared_outer.push_back(perm[static_cast<std::size_t>(h)]);
        CHECK(canonical_form(shuffled) == base_form);
    }
}

TEST_CASE("canonical form distinguishes puncture sides") {
    auto a = punctured_square_two_chords(true);
    // same map, puncture in a different face
    auto b = punctured_square_two_chords(false);
    CHECK(canonical_form(a) != canonical_form(b));
    // rebuilt identically: equal forms
    auto c = punctured_square_two_chords(true);
    CHECK(canonical_form(a) == canonical_form(c));
}

TEST_CASE("ribbon json round trip") {
    auto rg = punctured_square_two_chords(true);
    auto j = ribbon_to_json(rg);
    auto back = ribbon_from_json(j);
    CHECK(canonical_form(back) == canonical_form(rg));
    auto sc = genus_and_faces(back);
    CHECK(sc.genus == 0);
    CHECK(sc.boundary_components == 1);
}

TEST_CASE("surface spec validation") {
    CHECK_NOTHROW(disk_spec(4).validate());
    MarkedSurfaceSpec monogon = disk_spec(1);
    CHECK_THROWS_AS(monogon.validate(), std::invalid_argument);
    MarkedSurfaceSpec sphere2;
    sphere2.n = 2;
    CHECK_THROWS_AS(sphere2.validate(), std::invalid_argument);
    MarkedSurfaceSpec punctured_bigon = disk_spec(2, 1);
    CHECK_NOTHROW(punctured_bigon.validate());
}
