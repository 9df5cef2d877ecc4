#pragma once

#include "diagcx/labels.hpp"

namespace diagcx {

/// Bookkeeping of the puncture-forgetting projection: every input diagonal
/// is accounted for exactly once (survives, dropped or deduplicated).
struct ProjectionTrace {
    IdVec dropped_contractible;                    // loops around the removed puncture
    IdVec dropped_edge_homotopic;                  // became parallel to a boundary edge
    std::vector<std::pair<IdVec, int>> dedup_groups;  // homotopic group -> surviving id
    std::vector<int> removed_empty_blocks;         // original block positions
    IdVec survivors;                               // punctured-class ids that survive

    bool accounts_for(const IdVec& all_ids) const {
        IdVec seen = survivors;
        for (int d : dropped_contractible) seen.push_back(d);
        for (int d : dropped_edge_homotopic) seen.push_back(d);
        for (auto& [grp, kept] : dedup_groups)
            for (int d : grp)
                if (d != kept) seen.push_back(d);
        return sorted_unique(seen) == all_ids;
    }
};

struct ProjectedLabel {
    Label label;        // over the plain-polygon universe; may be empty
    bool empty = false;  // all diagonals died: the image is the top cell of D
    ProjectionTrace trace;
};

/// Order on projection results: the empty image acts as a formal bottom so
/// that the projection is a poset morphism on the whole label poset.
inline bool leq_projected(const ProjectedLabel& a, const ProjectedLabel& b) {
    if (a.empty) return true;
    if (b.empty) return false;
    return leq_labels(a.label, b.label);
}

/// Fate of one punctured-polygon class under removal of the puncture.
struct ClassFate {
    enum Kind { Contractible, EdgeHomotopic, Survives } kind;
    Chord image{0, 2};  // plain chord for Survives
};

inline ClassFate puncture_class_fate(const PolygonUniverse& punctured, int class_id) {
    if (punctured.symmetry != Symmetry::Central) throw std::invalid_argument("fate: not a punctured universe");
    const int n = punctured.param;
    const auto& cls = punctured.classes[class_id];
    if (cls.self_symmetric()) return {ClassFate::Contractible, Chord(0, 2)};
    const Chord& c = cls.chords[0];
    int a = c.a % n, b = c.b % n;
    if (a == b) return {ClassFate::Contractible, Chord(0, 2)};  // defensive; diameters are self-symmetric
    int d = (b - a + n) % n;
    if (d == 1 || d == n - 1) return {ClassFate::EdgeHomotopic, Chord(0, 2)};
    return {ClassFate::Survives, Chord(a, b)};
}

/// The forgetful projection of Section-3 type for the once-punctured polygon
/// encoding: remove the puncture, drop the diagonals that become
/// contractible or edge-homotopic, keep one diagonal per homotopy class (the
/// one in the block with the smallest index), drop emptied blocks.
inline ProjectedLabel project_pi(const PolygonUniverse& punctured, const PolygonUniverse& plain,
                                 const Label& l) {
    if (plain.symmetry != Symmetry::None || plain.param != punctured.param)
        throw std::invalid_argument("project_pi: plain universe mismatch");
    l.validate_basic();
    ProjectedLabel out;

    // block index of the first appearance of every surviving plain chord
    std::map<Chord, std::pair<int, int>> first;  // chord -> (block, class id)
    std::map<Chord, IdVec> groups;
    for (int bi = 0; bi < l.n_blocks(); ++bi) {
        for (int id : l.blocks[static_cast<std::size_t>(bi)]) {
            auto fate = puncture_class_fate(punctured, id);
            switch (fate.kind) {
                case ClassFate::Contractible:
                    out.trace.dropped_contractible.push_back(id);
                    break;
                case ClassFate::EdgeHomotopic:
                    out.trace.dropped_edge_homotopic.push_back(id);
                    break;
                case ClassFate::Survives:
                    groups[fate.image].push_back(id);
                    if (!first.count(fate.image)) first[fate.image] = {bi, id};
                    break;
            }
        }
    }
    out.trace.dropped_contractible = sorted_unique(out.trace.dropped_contractible);
    out.trace.dropped_edge_homotopic = sorted_unique(out.trace.dropped_edge_homotopic);

    // plain-universe ids of the survivors
    std::map<Chord, int> plain_id;
    for (int i = 0; i < plain.n_classes(); ++i) plain_id[plain.classes[i].chords[0]] = i;

    std::vector<IdVec> new_blocks(static_cast<std::size_t>(l.n_blocks()));
    for (auto& [chord, grp] : groups) {
        auto [bi, kept] = first.at(chord);
        new_blocks[static_cast<std::size_t>(bi)].push_back(plain_id.at(chord));
        out.trace.survivors.push_back(kept);
        if (grp.size() > 1) out.trace.dedup_groups.push_back({sorted_unique(grp), kept});
    }
    out.trace.survivors = sorted_unique(out.trace.survivors);

    std::vector<IdVec> blocks;
    for (int bi = 0; bi < l.n_blocks(); ++bi) {
        if (new_blocks[static_cast<std::size_t>(bi)].empty())
            out.trace.removed_empty_blocks.push_back(bi);
        else
            blocks.push_back(sorted_unique(new_blocks[static_cast<std::size_t>(bi)]));
    }
    if (blocks.empty()) {
        out.empty = true;
    } else {
        out.label = Label(blocks);
    }
    return out;
}

/// Half surgery: fold an axial-symmetric label of the 2k-gon onto the
/// (k+1)-gon with the distinguished vertex v = k.  Blockwise orbit folding;
/// a combinatorial isomorphism onto its image.
inline Label half_surgery_pi1(const PolygonUniverse& axial, const PolygonUniverse& plain_k1,
                              const Label& l) {
    if (axial.symmetry != Symmetry::Axial) throw std::invalid_argument("pi1: not an axial universe");
    if (plain_k1.symmetry != Symmetry::None || plain_k1.param != axial.param + 1)
        throw std::invalid_argument("pi1: target universe is not the (k+1)-gon");
    l.validate_basic();
    std::map<Chord, int> plain_id;
    for (int i = 0; i < plain_k1.n_classes(); ++i) plain_id[plain_k1.classes[i].chords[0]] = i;
    std::vector<IdVec> blocks;
    for (auto& b : l.blocks) {
        IdVec nb;
        for (int id : b) nb.push_back(plain_id.at(fold_axial_class(axial.param, axial.classes[id])));
        blocks.push_back(sorted_unique(nb));
    }
    return Label(blocks);
}

/// Inverse of half_surgery_pi1 on its image.
inline Label unfold_pi1(const PolygonUniverse& axial, const PolygonUniverse& plain_k1, const Label& l) {
    const int k = axial.param;
    std::map<std::vector<Chord>, int> axial_id;
    for (int i = 0; i < axial.n_classes(); ++i) axial_id[axial.classes[i].chords] = i;
    std::vector<IdVec> blocks;
    for (auto& b : l.blocks) {
        IdVec nb;
        for (int id : b) {
            auto lift = unfold_axial_chord(k, plain_k1.classes[id].chords[0]);
            nb.push_back(axial_id.at(lift.chords));
        }
        blocks.push_back(sorted_unique(nb));
    }
    return Label(blocks);
}

/// Membership in Im pi_1: every complementary disk of the first block has at
/// most one corner incident to v.  General ribbon-graph form.
inline bool in_image_pi1(const RibbonGraph& first_block_graph, int v) {
    for (auto& [face, cnt] : face_corner_counts_at(first_block_graph, v))
        if (cnt > 1) return false;
    return true;
}

/// Chord-set form over the (k+1)-gon with v = k.
inline bool in_image_pi1(const PolygonUniverse& plain_k1, const Label& l) {
    const int v = plain_k1.param - 1;  // vertex k of the (k+1)-gon
    std::vector<Chord> chords;
    for (int id : l.blocks.at(0)) chords.push_back(plain_k1.classes[id].chords[0]);
    auto rg = polygon_ribbon_graph(plain_k1.param, chords);
    return in_image_pi1(rg, v);
}

/// pi_2: drop every diagonal incident to v from all blocks, drop emptied
/// blocks, reinterpret the remaining chords over the once-punctured k-gon
/// (doubling encoding, cut placed where v was).  The all-diagonals-at-v
/// corner maps to the top cell of the diagonal poset, reported as empty.
struct Pi2Result {
    Label label;          // over the punctured (k)-gon universe
    bool empty = false;   // image is the empty arrangement = top cell of D
    IdVec dropped_at_v;   // (k+1)-gon class ids removed
};

inline Pi2Result puncture_v_pi2(const PolygonUniverse& plain_k1, const PolygonUniverse& punctured_k,
                                const Label& l) {
    const int v = plain_k1.param - 1;
    const int k = plain_k1.param - 1;
    if (punctured_k.symmetry != Symmetry::Central || punctured_k.param != k)
        throw std::invalid_argument("pi2: target universe is not the punctured k-gon");
    if (!in_image_pi1(plain_k1, l)) throw std::invalid_argument("pi2: label is not in the image of pi1");

    std::map<std::vector<Chord>, int> punc_id;
    for (int i = 0; i < punctured_k.n_classes(); ++i) punc_id[punctured_k.classes[i].chords] = i;

    Pi2Result out;
    std::vector<IdVec> blocks;
    for (auto& b : l.blocks) {
        IdVec nb;
        for (int id : b) {
            Chord c = plain_k1.classes[id].chords[0];
            if (c.b == v) {
                out.dropped_at_v.push_back(id);
                continue;
            }
            // chord avoiding v -> pair orbit {c, c+k} of the doubled 2k-gon
            std::vector<Chord> orbit{Chord(c.a, c.b), Chord(c.a + k, c.b + k)};
            std::sort(orbit.begin(), orbit.end());
            nb.push_back(punc_id.at(orbit));
        }
        if (!nb.empty()) blocks.push_back(sorted_unique(nb));
    }
    out.dropped_at_v = sorted_unique(out.dropped_at_v);
    if (blocks.empty())
        out.empty = true;
    else
        out.label = Label(blocks);
    return out;
}

}  // namespace diagcx
