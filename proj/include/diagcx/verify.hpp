#pragma once

#include <atomic>
#include <sstream>
#include <thread>

#include "diagcx/fiber.hpp"
#include "diagcx/forgetful.hpp"
#include "diagcx/homology.hpp"
#include "diagcx/manifest.hpp"
#include "diagcx/morse.hpp"

namespace diagcx {

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail;
};

struct VerifyOptions {
    int max_k = 3;           // morse sweep: base block count
    int max_block_size = 2;  // morse sweep: block sizes
    int max_q = 4;
    int plain_max_n = 8;
    int punctured_max_n = 5;
    int axis_max_k = 5;
    int fiber_plain_ns[2] = {4, 5};
    std::uint64_t seed = 20240915;
    int threads = 1;
};

inline int env_threads() {
    const char* t = std::getenv("DIAGCX_THREADS");
    if (!t) return 1;
    int v = std::atoi(t);
    return v > 0 ? v : 1;
}

namespace oracle {

/// Independent recursive Catalan numbers.
inline long long catalan(int n) {
    if (n <= 1) return 1;
    long long total = 0;
    for (int i = 0; i < n; ++i) total += catalan(i) * catalan(n - 1 - i);
    return total;
}

/// Subset-filter enumeration of non-crossing chord sets, counted by size.
/// Walks all subsets of all chords with a direct pairwise test.
inline std::vector<long long> plain_f_vector_bruteforce(int n) {
    std::vector<Chord> chords;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (chord_valid(n, Chord(a, b))) chords.push_back(Chord(a, b));
    const std::size_t m = chords.size();
    std::vector<long long> by_size(m + 1, 0);
    std::vector<int> chosen;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == m) {
            by_size[chosen.size()]++;
            return;
        }
        rec(i + 1);
        for (int c : chosen)
            if (chords_cross(n, chords[static_cast<std::size_t>(c)], chords[i])) return;
        chosen.push_back(static_cast<int>(i));
        rec(i + 1);
        chosen.pop_back();
    };
    rec(0);
    while (by_size.size() > 1 && by_size.back() == 0) by_size.pop_back();
    return by_size;
}

/// Closure of the two generating incidence rules by breadth-first search:
/// single consecutive merges and single trailing truncations.
inline std::vector<Label> faces_by_rule_closure(const Label& l) {
    std::map<std::string, Label> seen;
    std::vector<Label> queue{l};
    seen[l.key()] = l;
    while (!queue.empty()) {
        Label cur = queue.back();
        queue.pop_back();
        std::vector<Label> next;
        if (cur.n_blocks() > 1) {
            std::vector<IdVec> trunc(cur.blocks.begin(), cur.blocks.end() - 1);
            next.push_back(Label(trunc));
        }
        for (int i = 0; i + 1 < cur.n_blocks(); ++i) {
            auto nb = cur.blocks;
            nb[static_cast<std::size_t>(i)] =
                set_union(nb[static_cast<std::size_t>(i)], nb[static_cast<std::size_t>(i) + 1]);
            nb.erase(nb.begin() + i + 1);
            next.push_back(Label(nb));
        }
        for (auto& nl : next)
            if (!seen.count(nl.key())) {
                seen[nl.key()] = nl;
                queue.push_back(nl);
            }
    }
    std::vector<Label> out;
    for (auto& [k, lab] : seen)
        if (!(lab == l)) out.push_back(lab);
    std::sort(out.begin(), out.end());
    return out;
}

/// Slow generator of the preimage cells: all ordered set partitions of
/// (face ∪ D) filtered by the two membership invariants.
inline long long preimage_cell_count_bruteforce(const std::vector<int>& block_sizes, int q) {
    PreimageInstance shell;
    shell.block_sizes = block_sizes;
    shell.q = q;
    {
        std::vector<IdVec> blocks;
        int next = 0;
        for (int s : block_sizes) {
            IdVec b;
            for (int i = 0; i < s; ++i) b.push_back(next++);
            blocks.push_back(b);
        }
        shell.n_old = next;
        shell.base = Label(blocks);
    }
    auto face_keys = [&]() {
        std::set<std::string> keys;
        for (auto& f : faces(shell.base, true)) keys.insert(f.key());
        return keys;
    }();

    long long count = 0;
    IdVec new_ids;
    for (int c = 0; c < q; ++c) new_ids.push_back(shell.new_id(c));
    // D over all non-empty subsets of new diagonals, face over all faces
    for (auto& face : faces(shell.base, true)) {
        IdVec old_ids = face.arrangement();
        const std::size_t nq = new_ids.size();
        for (std::uint64_t dmask = 1; dmask < (std::uint64_t(1) << nq); ++dmask) {
            IdVec ground = old_ids;
            for (std::size_t i = 0; i < nq; ++i)
                if (dmask & (std::uint64_t(1) << i)) ground.push_back(new_ids[i]);
            ground = sorted_unique(ground);
            // all ordered set partitions of ground
            std::vector<IdVec> blocks;
            std::function<void(IdVec)> split = [&](IdVec rest) {
                if (rest.empty()) {
                    Label cand(blocks);
                    // invariant 1: old part is exactly the face
                    std::vector<IdVec> old_blocks;
                    for (auto& b : cand.blocks) {
                        IdVec ob;
                        for (int x : b)
                            if (x < shell.n_old) ob.push_back(x);
                        if (!ob.empty()) old_blocks.push_back(ob);
                    }
                    if (!(Label(old_blocks) == face)) return;
                    // old part may not be pushed out of the leading block
                    IdVec first_old;
                    for (int x : cand.blocks[0])
                        if (x < shell.n_old) first_old.push_back(x);
                    if (first_old != face.blocks[0]) return;
                    // invariant 2: block 1 contains a new diagonal
                    bool has_new = false;
                    for (int x : cand.blocks[0]) has_new = has_new || x >= shell.n_old;
                    if (!has_new) return;
                    ++count;
                    return;
                }
                const std::size_t mm = rest.size();
                for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << mm); ++mask) {
                    IdVec blk, rem;
                    for (std::size_t i = 0; i < mm; ++i)
                        (mask & (std::uint64_t(1) << i) ? blk : rem).push_back(rest[i]);
                    blocks.push_back(blk);
                    split(rem);
                    blocks.pop_back();
                }
            };
            split(ground);
        }
    }
    (void)face_keys;
    return count;
}

}  // namespace oracle

namespace verify_detail {

inline void check(std::vector<CheckResult>& out, const std::string& name, bool pass,
                  const std::string& detail = "") {
    out.push_back({name, pass, detail});
}

template <class F>
inline void parallel_for(int n, int threads, F&& body) {
    if (threads <= 1 || n <= 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&]() {
            while (true) {
                int i = next.fetch_add(1);
                if (i >= n) return;
                body(i);
            }
        });
    for (auto& th : pool) th.join();
}

}  // namespace verify_detail

/// Criterion 1: associahedron enumeration against independent oracles plus a
/// collapse certificate for the order complex.
inline std::vector<CheckResult> verify_associahedron(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    for (int n = 4; n <= opt.plain_max_n; ++n) {
        auto ap = enumerate_plain(n);
        // top cells of the ball are maximal arrangements = triangulations,
        // i.e. minimal elements of the reverse-inclusion poset
        long long maximal = static_cast<long long>(ap.poset.minimal_elements().size());
        long long want = oracle::catalan(n - 2);
        verify_detail::check(out, "assoc n=" + std::to_string(n) + " triangulation count",
                             maximal == want,
                             std::to_string(maximal) + " vs catalan " + std::to_string(want));

        auto f_fast = graded_f_vector(ap.poset, ap.rank);
        auto f_slow = oracle::plain_f_vector_bruteforce(n);
        // rank r counts arrangements of size n-3-r; brute force counts by size
        bool fmatch = f_fast.size() == f_slow.size();
        for (std::size_t r = 0; fmatch && r < f_fast.size(); ++r)
            fmatch = f_fast[r] == f_slow[f_slow.size() - 1 - r];
        verify_detail::check(out, "assoc n=" + std::to_string(n) + " f-vector vs subset filter", fmatch);

        auto oc = order_complex(ap.poset);
        auto cert = is_contractible_certificate(oc);
        verify_detail::check(out, "assoc n=" + std::to_string(n) + " order complex collapsible",
                             cert.kind == ContractibilityCertificate::Kind::Collapsible);
    }
    return out;
}

/// Criterion 2: cyclohedron/punctured polygon: ball-style verification.
inline std::vector<CheckResult> verify_cyclohedron(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    for (int n = 2; n <= opt.punctured_max_n; ++n) {
        auto ap = enumerate_punctured(n);
        std::string tag = "cyclo n=" + std::to_string(n);
        auto maxima = ap.poset.maximal_elements();
        verify_detail::check(out, tag + " empty arrangement unique maximum",
                             maxima.size() == 1 && maxima[0] == ap.top);
        int dim = *std::max_element(ap.rank.begin(), ap.rank.end());
        verify_detail::check(out, tag + " dimension n-1", dim == n - 1,
                             "dim=" + std::to_string(dim));

        auto oc = order_complex(ap.poset);
        auto rep = homology(oc);
        verify_detail::check(out, tag + " order complex reduced homology zero", rep.reduced_trivial());

        std::vector<int> keep;
        for (int i = 0; i < ap.poset.size(); ++i)
            if (i != ap.top) keep.push_back(i);
        auto boundary = order_complex(ap.poset.restrict_to(keep));
        auto brep = homology(boundary);
        bool sphere = true;
        // reduced homology of S^{n-2}: one Z in dimension n-2 (n=2: two points)
        for (std::size_t k = 0; k < brep.reduced_betti.size(); ++k) {
            long long want = (static_cast<int>(k) == n - 2) ? 1 : 0;
            if (brep.reduced_betti[k] != want) sphere = false;
            if (!brep.torsion[k].empty()) sphere = false;
        }
        if (static_cast<int>(brep.reduced_betti.size()) <= n - 2) sphere = false;
        verify_detail::check(out, tag + " boundary has S^(n-2) homology", sphere);

        // ridge condition inside the boundary sphere: every rank n-3 element
        // lies under at most two rank n-2 elements
        bool ridges = true;
        for (int i = 0; i < ap.poset.size(); ++i) {
            if (ap.rank[static_cast<std::size_t>(i)] != n - 3) continue;
            int tops = 0;
            for (int j : ap.poset.upper_covers(i))
                if (ap.rank[static_cast<std::size_t>(j)] == n - 2) tops++;
            if (tops > 2) ridges = false;
        }
        verify_detail::check(out, tag + " ridge condition (codim-1 in <=2 facets)", ridges);
    }
    return out;
}

/// Criterion 3: the axial poset is the face poset of As_{k+1}; fold/unfold
/// round-trips the corpus.
inline std::vector<CheckResult> verify_symmetric_associahedron(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    for (int k = 2; k <= opt.axis_max_k; ++k) {
        auto ax = enumerate_axis_symmetric(k);
        auto as = enumerate_plain(k + 1);
        std::string tag = "symm k=" + std::to_string(k);
        auto iso = poset_isomorphism(ax.poset, as.poset);
        verify_detail::check(out, tag + " poset iso with As_" + std::to_string(k + 1), iso.has_value());

        bool roundtrip = true;
        std::set<std::string> images;
        for (auto& arr : ax.arrangements) {
            auto folded = fold_axial(ax.universe, arr);
            images.insert(folded.str());
            for (int id : arr) {
                Chord c = fold_axial_class(k, ax.universe.classes[static_cast<std::size_t>(id)]);
                auto lifted = unfold_axial_chord(k, c);
                if (!(lifted.chords == ax.universe.classes[static_cast<std::size_t>(id)].chords))
                    roundtrip = false;
            }
        }
        verify_detail::check(out, tag + " fold/unfold round-trip", roundtrip);
        verify_detail::check(out, tag + " fold image exhausts As_" + std::to_string(k + 1),
                             images.size() == ax.arrangements.size() &&
                                 static_cast<int>(images.size()) == as.poset.size());
    }
    return out;
}

/// Criterion 4: the worked incidence examples and the closure property of
/// faces() on the pentagon and punctured-triangle corpora.
inline std::vector<CheckResult> verify_incidence_rules() {
    std::vector<CheckResult> out;
    Label big({{5, 2}, {3}, {1, 6}, {4}, {7}, {8}});
    Label ex1({{5, 2}, {3, 1, 6}, {4, 7}});
    Label ex2({{5, 2}, {3}, {1, 6}, {4}, {7}});
    Label ex3({{5, 2}, {3}, {1, 6}, {4}, {7, 8}});
    verify_detail::check(out, "incidence example 1 (merge)", leq_labels(ex1, big) && !(ex1 == big));
    verify_detail::check(out, "incidence example 2 (truncation)", leq_labels(ex2, big));
    verify_detail::check(out, "incidence example 3 (trailing merge)", leq_labels(ex3, big));
    verify_detail::check(out, "incidence reflexive", leq_labels(big, big));

    for (int variant = 0; variant < 2; ++variant) {
        auto ap = variant == 0 ? enumerate_plain(5) : enumerate_punctured(3);
        auto bd = bd_complex(ap);
        bool closure_ok = true, order_ok = true;
        for (auto& l : bd.labels) {
            auto by_rules = oracle::faces_by_rule_closure(l);
            auto by_chains = faces(l);
            if (by_rules.size() != by_chains.size()) closure_ok = false;
            for (std::size_t i = 0; i < std::min(by_rules.size(), by_chains.size()); ++i)
                if (!(by_rules[i] == by_chains[i])) closure_ok = false;
            // faces agree with the global order
            for (auto& m : bd.labels) {
                bool below = leq_labels(m, l) && !(m == l);
                bool listed = std::binary_search(by_chains.begin(), by_chains.end(), m);
                if (below != listed) order_ok = false;
            }
        }
        std::string tag = variant == 0 ? "pentagon" : "punctured triangle";
        verify_detail::check(out, "faces() = rule closure on " + tag, closure_ok);
        verify_detail::check(out, "faces() matches leq_labels on " + tag, order_ok);
    }
    return out;
}

/// Criterion 5: projection monotonicity and trace accounting.
inline std::vector<CheckResult> verify_projection(const VerifyOptions&) {
    std::vector<CheckResult> out;
    for (int n = 2; n <= 4; ++n) {
        auto punct = PolygonUniverse::punctured(n);
        auto plain = PolygonUniverse::plain(n);
        auto ap = enumerate_punctured(n);
        auto bd = bd_complex(ap);
        bool monotone = true, accounted = true;
        std::vector<ProjectedLabel> projected;
        projected.reserve(bd.labels.size());
        for (auto& l : bd.labels) {
            auto p = project_pi(punct, plain, l);
            if (!p.trace.accounts_for(l.arrangement())) accounted = false;
            projected.push_back(std::move(p));
        }
        for (std::size_t i = 0; i < bd.labels.size(); ++i)
            for (std::size_t j = 0; j < bd.labels.size(); ++j) {
                if (i == j) continue;
                if (!leq_labels(bd.labels[i], bd.labels[j])) continue;
                if (!leq_projected(projected[i], projected[j])) monotone = false;
            }
        std::string tag = "projection n=" + std::to_string(n);
        verify_detail::check(out, tag + " monotone", monotone);
        verify_detail::check(out, tag + " trace accounts for every diagonal", accounted);
    }
    return out;
}

/// Helpers shared between criterion 6 and the CLI fiber command.
inline FiberComplex polygon_fiber(const PolygonUniverse& plain_u, const Label& base) {
    std::vector<Chord> chords;
    std::map<int, int> edge_to_diag;
    IdVec arr = base.arrangement();
    for (int id : arr) chords.push_back(plain_u.classes[static_cast<std::size_t>(id)].chords[0]);
    auto rg = polygon_ribbon_graph(plain_u.param, chords);
    // polygon_ribbon_graph adds boundary edges first, then chords in sorted
    // chord order; recover the mapping
    std::vector<std::pair<Chord, int>> sorted_chords;
    for (int id : arr) sorted_chords.push_back({plain_u.classes[static_cast<std::size_t>(id)].chords[0], id});
    std::sort(sorted_chords.begin(), sorted_chords.end(),
              [](auto& a, auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i < sorted_chords.size(); ++i)
        edge_to_diag[plain_u.param + static_cast<int>(i)] = sorted_chords[i].second;
    return fiber_cells(rg, edge_to_diag, base);
}

/// Brute-force fiber oracle: the punctured-polygon labels whose projection
/// is the base with an alive first block, with the chain-drop face relation.
struct FiberOracle {
    std::vector<Label> cells;  // over the punctured universe
    CellComplex complex;
};

inline FiberOracle fiber_oracle(const PolygonUniverse& punct, const PolygonUniverse& plain,
                                const BdComplex& punct_bd, const Label& base) {
    FiberOracle fo;
    std::map<std::string, int> idx;
    for (auto& l : punct_bd.labels) {
        auto p = project_pi(punct, plain, l);
        if (p.empty || !(p.label == base)) continue;
        bool first_alive = false;
        for (int id : l.blocks[0])
            if (puncture_class_fate(punct, id).kind == ClassFate::Survives) first_alive = true;
        if (!first_alive) continue;
        idx[l.key()] = static_cast<int>(fo.cells.size());
        fo.cells.push_back(l);
    }
    const int r = base.n_blocks();
    fo.complex.dim.resize(fo.cells.size());
    fo.complex.facets_of.resize(fo.cells.size());
    fo.complex.name.resize(fo.cells.size());
    for (std::size_t i = 0; i < fo.cells.size(); ++i) {
        fo.complex.dim[i] = fo.cells[i].n_blocks() - r;
        fo.complex.name[i] = fo.cells[i].key();
    }
    for (std::size_t i = 0; i < fo.cells.size(); ++i) {
        auto ch = fo.cells[i].chain();
        if (ch.size() == 1) continue;
        for (std::size_t k = 0; k < ch.size(); ++k) {
            auto sub = ch;
            sub.erase(sub.begin() + static_cast<long>(k));
            auto it = idx.find(Label::from_chain(sub).key());
            if (it != idx.end() && fo.complex.dim[static_cast<std::size_t>(it->second)] == fo.complex.dim[i] - 1)
                fo.complex.facets_of[i].push_back(it->second);
        }
        fo.complex.facets_of[i] = sorted_unique(fo.complex.facets_of[i]);
    }
    return fo;
}

inline Poset cell_poset_of(const CellComplex& K) {
    std::vector<std::string> payloads(static_cast<std::size_t>(K.n_cells()));
    for (int i = 0; i < K.n_cells(); ++i) payloads[static_cast<std::size_t>(i)] = std::to_string(K.dim[i]);
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i < K.n_cells(); ++i)
        for (int f : K.facets_of[i]) covers.push_back({f, i});
    return Poset(payloads, covers);
}

inline RibbonGraph torus_ribbon(int loops) {
    RibbonBuilder rb;
    int v = rb.add_vertex("v");
    std::vector<int> es;
    for (int i = 0; i < loops; ++i) es.push_back(rb.add_edge(v, v, false));
    std::vector<int> rot;
    for (int pass = 0; pass < 2; ++pass)
        for (int i = 0; i < loops; ++i) rot.push_back(pass == 0 ? 2 * es[static_cast<std::size_t>(i)]
                                                                : 2 * es[static_cast<std::size_t>(i)] + 1);
    rb.set_rotation(v, rot);
    return rb.build();
}

/// Criterion 6: fiber surfaces.
inline std::vector<CheckResult> verify_fibers(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    for (int n : opt.fiber_plain_ns) {
        auto plain_ap = enumerate_plain(n);
        auto plain_bd = bd_complex(plain_ap);
        auto punct = PolygonUniverse::punctured(n);
        auto punct_bd = bd_complex(enumerate_punctured(n));
        bool surfaces = true, oracle_match = true;
        for (auto& base : plain_bd.labels) {
            auto fc = polygon_fiber(plain_ap.universe, base);
            auto rep = verify_surface(fc.complex, 1, 1);
            if (!rep.ok) surfaces = false;
            auto fo = fiber_oracle(punct, plain_ap.universe, punct_bd, base);
            // per-dimension counts and cell-poset isomorphism
            std::map<int, int> c1, c2;
            for (int d : fc.complex.dim) c1[d]++;
            for (int d : fo.complex.dim) c2[d]++;
            if (c1 != c2) oracle_match = false;
            else if (!poset_isomorphism(cell_poset_of(fc.complex), cell_poset_of(fo.complex),
                                        /*respect_payloads=*/true))
                oracle_match = false;
        }
        std::string tag = "fiber plain n=" + std::to_string(n);
        verify_detail::check(out, tag + " all fibers are disks (chi=1, one boundary)", surfaces);
        verify_detail::check(out, tag + " rule cells match brute-force BD oracle", oracle_match);
    }

    // torus: r = 1 over the 2-loop graph, r = 2 over the 3-loop graph
    {
        auto rg2 = torus_ribbon(2);
        Label base1({{0, 1}});
        auto fc1 = fiber_cells(rg2, {{0, 0}, {1, 1}}, base1);
        auto rep1 = verify_surface(fc1.complex, -1, 1);
        verify_detail::check(out, "fiber torus r=1 surface chi=-1 one boundary", rep1.ok,
                             rep1.ok ? "" : rep1.failures.front());

        auto rg3 = torus_ribbon(3);
        Label base2({{0, 1}, {2}});
        auto fc2 = fiber_cells(rg3, {{0, 0}, {1, 1}, {2, 2}}, base2);
        auto rep2 = verify_surface(fc2.complex, -1, 1);
        verify_detail::check(out, "fiber torus r=2 surface chi=-1 one boundary", rep2.ok,
                             rep2.ok ? "" : rep2.failures.front());
    }

    // worked example labels (a)-(e) for an r=3 instance with d in S_2
    {
        auto plain6 = PolygonUniverse::plain(6);
        // chords 0-2, 0-3, 0-4: take S1={0-2}, S2={0-3}=d, S3={0-4}
        auto find_class = [&](Chord c) {
            for (int i = 0; i < plain6.n_classes(); ++i)
                if (plain6.classes[static_cast<std::size_t>(i)].chords[0] == c) return i;
            throw std::logic_error("chord class not found");
        };
        int s1 = find_class(Chord(0, 2)), d = find_class(Chord(0, 3)), s3 = find_class(Chord(0, 4));
        Label base({{s1}, {d}, {s3}});
        auto fc = polygon_fiber(plain6, base);

        auto has_pattern = [&](const std::function<bool(const FiberCell&)>& pred) {
            for (auto& c : fc.cells)
                if (pred(c)) return true;
            return false;
        };
        auto is_base_block = [&](const FSymVec& blk, int id) {
            return blk.size() == 1 && blk[0].kind == FSym::Base && blk[0].a == id;
        };
        auto is_loop = [](const FSym& s) { return s.kind == FSym::LoopCorner || s.kind == FSym::LoopGerm; };
        auto is_copy_of = [&](const FSym& s, int id) { return s.kind == FSym::Copy && s.a == id; };

        // (a) (S1, {e_l}, S2, S3)
        bool a = has_pattern([&](const FiberCell& c) {
            return c.blocks.size() == 4 && is_base_block(c.blocks[0], s1) && c.blocks[1].size() == 1 &&
                   is_loop(c.blocks[1][0]) && is_base_block(c.blocks[2], d) && is_base_block(c.blocks[3], s3);
        });
        // (b) (S1, S2∪{d'}, S3): both copies of d in block 2
        bool b = has_pattern([&](const FiberCell& c) {
            return c.blocks.size() == 3 && is_base_block(c.blocks[0], s1) && c.blocks[1].size() == 2 &&
                   is_copy_of(c.blocks[1][0], d) && is_copy_of(c.blocks[1][1], d) &&
                   is_base_block(c.blocks[2], s3);
        });
        // (c) (S1∪{e'}, S2∪{d'}, S3)
        bool cc = has_pattern([&](const FiberCell& c) {
            return c.blocks.size() == 3 && c.blocks[0].size() == 2 && c.blocks[0][0].kind == FSym::Base &&
                   c.blocks[0][0].a == s1 && is_loop(c.blocks[0][1]) && c.blocks[1].size() == 2 &&
                   is_copy_of(c.blocks[1][0], d) && is_copy_of(c.blocks[1][1], d) &&
                   is_base_block(c.blocks[2], s3);
        });
        // (d) (S1, S2, {e_r, d'}, S3): one copy stays in block 2, the other
        // shares a new block with the loop
        bool dd = has_pattern([&](const FiberCell& c) {
            return c.blocks.size() == 4 && is_base_block(c.blocks[0], s1) && c.blocks[1].size() == 1 &&
                   is_copy_of(c.blocks[1][0], d) && c.blocks[2].size() == 2 &&
                   ((is_loop(c.blocks[2][0]) && is_copy_of(c.blocks[2][1], d)) ||
                    (is_loop(c.blocks[2][1]) && is_copy_of(c.blocks[2][0], d))) &&
                   is_base_block(c.blocks[3], s3);
        });
        // (e) (S1, S2, S3, {d'})
        bool ee = has_pattern([&](const FiberCell& c) {
            return c.blocks.size() == 4 && is_base_block(c.blocks[0], s1) && c.blocks[1].size() == 1 &&
                   is_copy_of(c.blocks[1][0], d) && is_base_block(c.blocks[2], s3) &&
                   c.blocks[3].size() == 1 && is_copy_of(c.blocks[3][0], d);
        });
        verify_detail::check(out, "fiber worked-example labels (a)-(e)", a && b && cc && dd && ee,
                             std::string(a ? "" : "a ") + (b ? "" : "b ") + (cc ? "" : "c ") +
                                 (dd ? "" : "d ") + (ee ? "" : "e "));

        // duplicated-diagonal indistinguishability: loop-with-duplication
        // cells carry germ loops, each germ contributing once
        bool merged = true;
        std::set<std::string> germ_cells;
        for (auto& c : fc.cells) {
            bool has_germ_loop = false, corner_loop_with_copies = false, has_copies = false;
            for (auto& blk : c.blocks)
                for (auto& s : blk) {
                    if (s.kind == FSym::LoopGerm) has_germ_loop = true;
                    if (s.kind == FSym::Copy) has_copies = true;
                }
            for (auto& blk : c.blocks)
                for (auto& s : blk)
                    if (s.kind == FSym::LoopCorner && has_copies) corner_loop_with_copies = true;
            if (corner_loop_with_copies) merged = false;  // would double-count left/right
            if (has_germ_loop) germ_cells.insert(c.key());
        }
        verify_detail::check(out, "fiber left/right loops merge when diagonal duplicated",
                             merged && !germ_cells.empty());
    }
    return out;
}

/// Criterion 7: the discrete Morse sweep.
inline std::vector<CheckResult> verify_morse(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    std::vector<std::vector<int>> size_tuples;
    std::function<void(std::vector<int>&)> gen = [&](std::vector<int>& cur) {
        if (!cur.empty()) size_tuples.push_back(cur);
        if (static_cast<int>(cur.size()) == opt.max_k) return;
        for (int s = 1; s <= opt.max_block_size; ++s) {
            cur.push_back(s);
            gen(cur);
            cur.pop_back();
        }
    };
    std::vector<int> cur;
    gen(cur);

    struct InstanceResult {
        std::string tag;
        bool valid = false, acyclic = false, critical_ok = false, collapse_ok = false, homology_ok = false,
             count_ok = false;
    };
    std::vector<std::pair<std::vector<int>, int>> jobs;
    for (auto& sizes : size_tuples)
        for (int q = 1; q <= opt.max_q; ++q) jobs.push_back({sizes, q});
    std::vector<InstanceResult> results(jobs.size());

    verify_detail::parallel_for(static_cast<int>(jobs.size()), opt.threads, [&](int i) {
        auto& [sizes, q] = jobs[static_cast<std::size_t>(i)];
        InstanceResult r;
        std::string tag = "(";
        for (std::size_t t = 0; t < sizes.size(); ++t) tag += (t ? "," : "") + std::to_string(sizes[t]);
        tag += ")/q=" + std::to_string(q);
        r.tag = tag;
        auto inst = generate_preimage(sizes, q);
        auto V = thmhalf_matching(inst);
        r.valid = true;  // thmhalf_matching validates or throws
        r.acyclic = check_acyclic(inst.complex, V).acyclic;
        auto crit = V.critical_cells();
        r.critical_ok = crit.size() == 1 &&
                        inst.cells[static_cast<std::size_t>(crit[0])] == thmhalf_expected_critical(inst);
        if (r.acyclic) {
            auto col = collapse(inst.complex, V);
            // the critical cell has positive dimension, so a full collapse
            // stops at it: complete removal of all matched pairs is required
            r.collapse_ok = col.complete && col.critical == crit;
            long long chi = 0;
            for (int c : crit) chi += (inst.complex.dim[static_cast<std::size_t>(c)] % 2 ? -1 : 1);
            r.collapse_ok = r.collapse_ok && chi == inst.complex.euler_characteristic();
        }
        auto rep = homology(preimage_simplicial(inst));
        r.homology_ok = rep.reduced_trivial();
        r.count_ok = oracle::preimage_cell_count_bruteforce(sizes, q) ==
                     static_cast<long long>(inst.cells.size());
        results[static_cast<std::size_t>(i)] = r;
    });

    bool valid = true, acyclic = true, critical = true, collapse_ok = true, homology_ok = true,
         counts = true;
    std::string bad;
    for (auto& r : results) {
        valid &= r.valid;
        acyclic &= r.acyclic;
        critical &= r.critical_ok;
        collapse_ok &= r.collapse_ok;
        homology_ok &= r.homology_ok;
        counts &= r.count_ok;
        if (!(r.valid && r.acyclic && r.critical_ok && r.collapse_ok && r.homology_ok && r.count_ok))
            bad += r.tag + " ";
    }
    int n_inst = static_cast<int>(jobs.size());
    verify_detail::check(out, "morse sweep matching valid (" + std::to_string(n_inst) + " instances)",
                         valid, bad);
    verify_detail::check(out, "morse sweep acyclic", acyclic, bad);
    verify_detail::check(out, "morse sweep unique critical cell = S1 ∪ new", critical, bad);
    verify_detail::check(out, "morse sweep collapse bookkeeping", collapse_ok, bad);
    verify_detail::check(out, "morse sweep homology of a point", homology_ok, bad);
    verify_detail::check(out, "morse sweep cell counts vs slow generator", counts, bad);

    // the paper's six-cell gradient path on the (1,1,1)/q=3 instance
    {
        auto inst = generate_preimage({1, 1, 1}, 3);
        auto V = thmhalf_matching(inst);
        int o1 = 0, o2 = 1, o3 = 2, n1 = inst.new_id(0), n2 = inst.new_id(1), n3 = inst.new_id(2);
        auto cell = [&](std::vector<IdVec> blocks) {
            int id = inst.find(Label(std::move(blocks)));
            if (id < 0) throw std::logic_error("gradient path cell missing");
            return id;
        };
        std::vector<int> path{
            cell({{o1, n3}, {o2, n2}, {o3, n1}}), cell({{o1, n3}, {o2, n2}, {n1}, {o3}}),
            cell({{o1, n3}, {o2, n2, n1}, {o3}}), cell({{o1, n3}, {n1}, {o2, n2}, {o3}}),
            cell({{o1, n3, n1}, {o2, n2}, {o3}}), cell({{o1, n3, n1}, {n2}, {o2}, {o3}}),
        };
        // close with a final alpha: a facet of the last beta distinct from
        // the previous alpha
        std::vector<int> vp = path;
        vp.push_back(cell({{o1, n3, n1}, {n2}, {o2}}));
        bool pairs_ok = V.partner[path[0]] == path[1] && V.partner[path[2]] == path[3] &&
                        V.partner[path[4]] == path[5];
        verify_detail::check(out, "morse paper gradient path is a V-path",
                             pairs_ok && VPath::valid(inst.complex, V, vp));
    }
    return out;
}

inline std::vector<CheckResult> verify_all(const VerifyOptions& opt) {
    std::vector<CheckResult> all;
    auto add = [&](std::vector<CheckResult> v) {
        for (auto& c : v) all.push_back(std::move(c));
    };
    add(verify_associahedron(opt));
    add(verify_cyclohedron(opt));
    add(verify_symmetric_associahedron(opt));
    add(verify_incidence_rules());
    add(verify_projection(opt));
    add(verify_fibers(opt));
    add(verify_morse(opt));
    return all;
}

}  // namespace diagcx
