#pragma once

#include "diagcx/cw.hpp"
#include "diagcx/homology.hpp"
#include "diagcx/labels.hpp"

namespace diagcx {

/// Preimage of a closed base simplex under the puncture-replacement map,
/// generated abstractly from the base block sizes and the corner count q of
/// the minimal polygon around v.  Old diagonals are 0..n_old-1 (blockwise
/// consecutive), new diagonals n_old..n_old+q-1 emanate from v and are
/// pairwise compatible.
struct PreimageInstance {
    std::vector<int> block_sizes;
    int q = 0;
    int n_old = 0;
    Label base;
    std::vector<Label> cells;
    std::map<std::string, int> index;
    CellComplex complex;  // graded by #blocks-1, facets = drop one chain element

    bool is_new(int id) const { return id >= n_old; }
    int new_id(int c) const { return n_old + c; }  // c = 0..q-1, diagonal d_{c+1}

    int find(const Label& l) const {
        auto it = index.find(l.key());
        return it == index.end() ? -1 : it->second;
    }

    IdVec first_base_block() const { return base.blocks[0]; }
};

/// All labels combining a face of the base with a non-empty set of new
/// diagonals distributed into the blocks or as new blocks, at least one new
/// diagonal in block 1.
inline PreimageInstance generate_preimage(const std::vector<int>& block_sizes, int q) {
    if (q < 1) throw std::invalid_argument("generate_preimage: q >= 1 required");
    if (block_sizes.empty()) throw std::invalid_argument("generate_preimage: base needs blocks");
    for (int s : block_sizes)
        if (s < 1) throw std::invalid_argument("generate_preimage: empty base block");

    PreimageInstance inst;
    inst.block_sizes = block_sizes;
    inst.q = q;
    {
        std::vector<IdVec> blocks;
        int next = 0;
        for (int s : block_sizes) {
            IdVec b;
            for (int i = 0; i < s; ++i) b.push_back(next++);
            blocks.push_back(b);
        }
        inst.n_old = next;
        inst.base = Label(blocks);
    }

    IdVec new_ids;
    for (int c = 0; c < q; ++c) new_ids.push_back(inst.new_id(c));

    std::set<std::string> seen;
    auto emit = [&](const Label& l) {
        if (seen.insert(l.key()).second) inst.cells.push_back(l);
    };

    for (auto& face : faces(inst.base, /*with_self=*/true)) {
        const int m = face.n_blocks();
        // choose a placement for every new diagonal: old block 1..m or gap
        // 1..m (gap i = new blocks right after old block i)
        std::vector<int> place(static_cast<std::size_t>(q), 0);
        std::function<void(int)> assign = [&](int c) {
            if (c == q) {
                // at least one new diagonal joins block 1; "none present" is
                // encoded as place = -1
                bool block1 = false;
                std::vector<IdVec> gap_elems(static_cast<std::size_t>(m));
                std::vector<IdVec> into_block(static_cast<std::size_t>(m));
                for (int t = 0; t < q; ++t) {
                    int p = place[static_cast<std::size_t>(t)];
                    if (p == -1) continue;
                    if (p < m) {
                        into_block[static_cast<std::size_t>(p)].push_back(inst.new_id(t));
                        if (p == 0) block1 = true;
                    } else {
                        gap_elems[static_cast<std::size_t>(p - m)].push_back(inst.new_id(t));
                    }
                }
                if (!block1) return;
                // ordered set partitions per gap
                std::vector<std::vector<std::vector<IdVec>>> gap_options(static_cast<std::size_t>(m));
                for (int g = 0; g < m; ++g) {
                    std::vector<std::vector<IdVec>> opts;
                    std::vector<IdVec> acc;
                    std::function<void(IdVec)> split = [&](IdVec rest) {
                        if (rest.empty()) {
                            opts.push_back(acc);
                            return;
                        }
                        const std::size_t mm = rest.size();
                        for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << mm); ++mask) {
                            IdVec blk, rem;
                            for (std::size_t i = 0; i < mm; ++i)
                                (mask & (std::uint64_t(1) << i) ? blk : rem).push_back(rest[i]);
                            acc.push_back(blk);
                            split(rem);
                            acc.pop_back();
                        }
                    };
                    split(gap_elems[g]);
                    gap_options[static_cast<std::size_t>(g)] = std::move(opts);
                }
                std::vector<int> pick(static_cast<std::size_t>(m), 0);
                std::function<void(int)> combine = [&](int g) {
                    if (g == m) {
                        std::vector<IdVec> blocks;
                        for (int i = 0; i < m; ++i) {
                            blocks.push_back(
                                sorted_unique(set_union(face.blocks[static_cast<std::size_t>(i)],
                                                        into_block[static_cast<std::size_t>(i)])));
                            for (auto& nb :
                                 gap_options[static_cast<std::size_t>(i)][static_cast<std::size_t>(
                                     pick[static_cast<std::size_t>(i)])])
                                blocks.push_back(nb);
                        }
                        emit(Label(blocks));
                        return;
                    }
                    for (std::size_t o = 0; o < gap_options[static_cast<std::size_t>(g)].size(); ++o) {
                        pick[static_cast<std::size_t>(g)] = static_cast<int>(o);
                        combine(g + 1);
                    }
                };
                combine(0);
                return;
            }
            for (int p = -1; p < 2 * m; ++p) {
                place[static_cast<std::size_t>(c)] = p;
                assign(c + 1);
            }
        };
        assign(0);
    }

    std::sort(inst.cells.begin(), inst.cells.end());
    for (std::size_t i = 0; i < inst.cells.size(); ++i) inst.index[inst.cells[i].key()] = static_cast<int>(i);

    // graded complex: facets = drop one chain element; the cell family is
    // closed under subchains that keep a new diagonal in block 1
    inst.complex.dim.resize(inst.cells.size());
    inst.complex.facets_of.resize(inst.cells.size());
    inst.complex.name.resize(inst.cells.size());
    for (std::size_t i = 0; i < inst.cells.size(); ++i) {
        inst.complex.dim[i] = inst.cells[i].n_blocks() - 1;
        inst.complex.name[i] = inst.cells[i].key();
        auto ch = inst.cells[i].chain();
        if (ch.size() == 1) continue;
        for (std::size_t k = 0; k < ch.size(); ++k) {
            auto sub = ch;
            sub.erase(sub.begin() + static_cast<long>(k));
            int j = inst.find(Label::from_chain(sub));
            if (j >= 0) inst.complex.facets_of[i].push_back(j);
        }
        if (static_cast<int>(inst.complex.facets_of[i].size()) != inst.cells[i].n_blocks())
            throw std::logic_error("generate_preimage: cell family not closed under subchains");
    }
    return inst;
}

/// The instance as a simplicial complex: vertices = arrangements occurring
/// in cell chains, simplices = the chains themselves.
inline SimplicialComplex preimage_simplicial(const PreimageInstance& inst) {
    std::map<IdVec, int> vid;
    for (auto& c : inst.cells)
        for (auto& u : c.chain())
            if (!vid.count(u)) {
                int next = static_cast<int>(vid.size());
                vid[u] = next;
            }
    std::vector<std::vector<int>> facets;
    for (auto& c : inst.cells) {
        std::vector<int> s;
        for (auto& u : c.chain()) s.push_back(vid.at(u));
        facets.push_back(s);
    }
    return SimplicialComplex(static_cast<int>(vid.size()), facets);
}

namespace detail {

struct UnmatchedShape {
    std::vector<IdVec> body;   // Q_1..Q_m, no new diagonals in Q_2..
    std::vector<int> trail;    // trailing new singleton ids, decreasing paper index
    bool well_formed = false;
};

inline UnmatchedShape analyze_shape(const PreimageInstance& inst, const Label& l) {
    UnmatchedShape s;
    auto blocks = l.blocks;
    // strip trailing new-diagonal singletons
    while (!blocks.empty()) {
        const auto& last = blocks.back();
        if (last.size() == 1 && inst.is_new(last[0])) {
            s.trail.push_back(last[0]);
            blocks.pop_back();
        } else {
            break;
        }
    }
    std::reverse(s.trail.begin(), s.trail.end());  // label order
    for (std::size_t i = 1; i < s.trail.size(); ++i)
        if (s.trail[i - 1] <= s.trail[i]) return s;  // not decreasing
    for (std::size_t i = 1; i < blocks.size(); ++i)
        for (int id : blocks[i])
            if (inst.is_new(id)) return s;  // new diagonal in a middle block
    if (blocks.empty()) return s;
    s.body = blocks;
    s.well_formed = true;
    return s;
}

}  // namespace detail

/// The Steps 1-3 matching from the proof of the half-surgery homotopy
/// equivalence.  Within each step cells are processed in lexicographic
/// canonical-label order, new diagonals in increasing corner index.
inline DiscreteVectorField thmhalf_matching(const PreimageInstance& inst) {
    DiscreteVectorField V(static_cast<int>(inst.cells.size()));
    const int n = static_cast<int>(inst.cells.size());

    auto require_unmatched = [&](int i, const char* step) {
        if (!V.is_critical(i))
            throw std::logic_error(std::string("thmhalf_matching: target already matched in ") + step);
    };

    // Step 1: moving new diagonals with numbers greater than 1.
    for (int c = 0; c < inst.q; ++c) {
        int dc = inst.new_id(c);
        for (int i = 0; i < n; ++i) {
            if (!V.is_critical(i)) continue;
            const Label& l = inst.cells[static_cast<std::size_t>(i)];
            for (int bi = 1; bi < l.n_blocks(); ++bi) {
                const auto& blk = l.blocks[static_cast<std::size_t>(bi)];
                if (!contains(blk, dc) || blk.size() < 2) continue;
                // (Q1,..,Qi∪{dc},..,Qm) -> (Q1,..,{dc},Qi,..,Qm)
                std::vector<IdVec> nb(l.blocks.begin(), l.blocks.begin() + bi);
                nb.push_back({dc});
                nb.push_back(set_difference(blk, {dc}));
                nb.insert(nb.end(), l.blocks.begin() + bi + 1, l.blocks.end());
                int j = inst.find(Label(nb));
                if (j < 0) throw std::logic_error("thmhalf_matching: step 1 target missing");
                require_unmatched(j, "step 1");
                V.match(i, j);
                break;
            }
        }
    }

    // Step 2: getting rid of old diagonals beyond S1 in the leading block.
    IdVec S1 = inst.first_base_block();
    for (int i = 0; i < n; ++i) {
        if (!V.is_critical(i)) continue;
        const Label& l = inst.cells[static_cast<std::size_t>(i)];
        auto shape = detail::analyze_shape(inst, l);
        if (!shape.well_formed) throw std::logic_error("thmhalf_matching: unmatched cell has unexpected shape after step 1");
        IdVec NEW, Q1_old;
        for (int id : shape.body[0]) (inst.is_new(id) ? NEW : Q1_old).push_back(id);
        if (Q1_old == S1) continue;
        // match with (S1∪NEW, Q1\NEW\S1, Q2,..) — the split partner
        std::vector<IdVec> nb;
        nb.push_back(set_union(S1, NEW));
        nb.push_back(set_difference(Q1_old, S1));
        nb.insert(nb.end(), shape.body.begin() + 1, shape.body.end());
        for (int t : shape.trail) nb.push_back({t});
        int j = inst.find(Label(nb));
        if (j < 0) throw std::logic_error("thmhalf_matching: step 2 target missing");
        require_unmatched(j, "step 2");
        V.match(i, j);
    }

    // Step 3: final contractions of trailing new singletons, increasing index.
    for (int c = 0; c < inst.q; ++c) {
        int dc = inst.new_id(c);
        for (int i = 0; i < n; ++i) {
            if (!V.is_critical(i)) continue;
            const Label& l = inst.cells[static_cast<std::size_t>(i)];
            const auto& last = l.blocks.back();
            if (!(last.size() == 1 && last[0] == dc)) continue;
            std::vector<IdVec> nb(l.blocks.begin(), l.blocks.end() - 1);
            int j = inst.find(Label(nb));
            if (j < 0) throw std::logic_error("thmhalf_matching: step 3 target missing");
            require_unmatched(j, "step 3");
            V.match(i, j);
        }
    }
    V.validate(inst.complex);
    return V;
}

/// The expected unique critical cell (S1 ∪ {d_1..d_q}).
inline Label thmhalf_expected_critical(const PreimageInstance& inst) {
    IdVec blk = inst.first_base_block();
    for (int c = 0; c < inst.q; ++c) blk.push_back(inst.new_id(c));
    return Label({sorted_unique(blk)});
}

}  // namespace diagcx
