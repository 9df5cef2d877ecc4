#pragma once

#include "diagcx/cw.hpp"
#include "diagcx/forgetful.hpp"
#include "diagcx/labels.hpp"
#include "diagcx/ribbon.hpp"

namespace diagcx {

/// Corner blow-up surface of an arrangement: every corner becomes an edge,
/// every free vertex a hole.  Cells keep their origin tags.
struct BlowupComplex {
    RibbonGraph rg;
    std::vector<int> interior_faces;
    std::vector<int> boundary_edge_ids;
    std::vector<int> diagonal_edge_ids;
    std::vector<Corner> corner_list;                // interior corners, keyed by germ_a
    std::vector<std::vector<int>> hole_cycles;      // per free vertex, corner indices in rotation order
    int n_vertices = 0, n_edges = 0, n_faces = 0;   // cells of the blow-up complex
    long long chi = 0;
    int n_boundary_circles = 0;  // original boundary components + holes

    int corner_by_germ_a(int h) const {
        for (std::size_t i = 0; i < corner_list.size(); ++i)
            if (corner_list[i].germ_a == h) return static_cast<int>(i);
        return -1;
    }
};

inline BlowupComplex blowup(const RibbonGraph& rg) {
    BlowupComplex bc;
    bc.rg = rg;
    rg.check_permutations();
    auto outer = rg.outer_faces();
    for (int f = 0; f < rg.n_faces(); ++f)
        if (!outer.count(f)) bc.interior_faces.push_back(f);
    for (int e = 0; e < rg.n_edges(); ++e)
        (rg.edge_is_boundary[e] ? bc.boundary_edge_ids : bc.diagonal_edge_ids).push_back(e);
    bc.corner_list = corners(rg);

    // hole cycle per free vertex: corners in rotation order
    for (int v = 0; v < rg.n_vertices(); ++v) {
        if (rg.vertex_on_boundary(v)) continue;
        std::vector<int> cyc;
        int start = -1;
        for (int h = 0; h < rg.n_halves(); ++h)
            if (rg.vertex_of[h] == v) {
                start = h;
                break;
            }
        if (start < 0) continue;
        int h = start;
        do {
            int ci = bc.corner_by_germ_a(h);
            if (ci < 0) throw std::logic_error("blowup: free vertex corner missing");
            cyc.push_back(ci);
            h = rg.sigma[h];
        } while (h != start);
        bc.hole_cycles.push_back(cyc);
    }

    bc.n_vertices = rg.n_halves();  // one germ tip per half-edge
    bc.n_edges = rg.n_edges() + static_cast<int>(bc.corner_list.size());
    bc.n_faces = static_cast<int>(bc.interior_faces.size());
    bc.chi = bc.n_vertices - bc.n_edges + bc.n_faces;
    bc.n_boundary_circles = static_cast<int>(outer.size() + bc.hole_cycles.size());
    return bc;
}

/// Symbols occurring in fiber labels.  Base diagonals keep their label ids;
/// surgery diagonals are pinned to cells of the blow-up complex.
struct FSym {
    enum Kind { Base = 0, Copy = 1, LoopCorner = 2, LoopGerm = 3, Double = 4 };
    int kind;
    int a;  // Base/Copy: diagonal id; LoopCorner: corner germ_a half; LoopGerm: germ half; Double: edge id
    int b;  // Copy: side 0/1; otherwise 0

    bool operator<(const FSym& o) const {
        if (kind != o.kind) return kind < o.kind;
        if (a != o.a) return a < o.a;
        return b < o.b;
    }
    bool operator==(const FSym& o) const { return kind == o.kind && a == o.a && b == o.b; }

    std::string str() const {
        switch (kind) {
            case Base: return std::to_string(a);
            case Copy: return "c" + std::to_string(a) + (b ? "R" : "L");
            case LoopCorner: return "l@c" + std::to_string(a);
            case LoopGerm: return "l@g" + std::to_string(a);
            default: return "dbl" + std::to_string(a);
        }
    }
};

using FSymVec = std::vector<FSym>;

struct FiberCell {
    std::vector<FSymVec> blocks;  // sorted within blocks
    int region_face = -1;         // for pure-base cells (rule 1)
    int dim = 0;
    std::string provenance;

    std::string key() const {
        std::string s;
        for (auto& b : blocks) {
            s += "(";
            for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + b[i].str();
            s += ")";
        }
        if (region_face >= 0) s += "@F" + std::to_string(region_face);
        return s;
    }
};

/// Fiber of the forgetful projection over an interior point of the base
/// cell, as a regular cell complex of partition labels.
struct FiberComplex {
    Label base;
    std::vector<FiberCell> cells;
    std::map<std::string, int> index;
    CellComplex complex;

    int find(const FiberCell& c) const {
        auto it = index.find(c.key());
        return it == index.end() ? -1 : it->second;
    }
};

namespace fiber_detail {

struct Context {
    const BlowupComplex* bc;
    const RibbonGraph* rg;
    std::map<int, int> edge_to_diag;   // rg edge -> base diagonal id
    std::map<int, int> diag_to_edge;   // inverse
    Label base;
    std::map<int, int> block_of;       // diagonal id -> block index

    int side_face(int diag, int side) const {
        int e = diag_to_edge.at(diag);
        return rg->face_of()[2 * e + side];
    }

    /// Corner flanking germ g on local side s of its edge.
    int corner_on_side(int g, int s) const {
        bool primary = (g % 2 == 0);  // g == 2e
        bool take_prev = primary ? (s == 0) : (s == 1);
        int key;
        if (take_prev) {
            // corner (sigma^{-1}(g), g), keyed by germ_a = sigma^{-1}(g)
            int prev = -1;
            for (int h = 0; h < rg->n_halves(); ++h)
                if (rg->sigma[h] == g) prev = h;
            key = prev;
        } else {
            key = g;
        }
        int ci = bc->corner_by_germ_a(key);
        if (ci < 0) throw std::logic_error("fiber: flanking corner not found");
        return bc->corner_list[static_cast<std::size_t>(ci)].germ_a;
    }
};

/// Projection of a symbolic label: copies collapse to their diagonal
/// (earliest block kept), loop and double symbols die.  Returns whether the
/// image equals the base with block 1 still alive.
inline bool projects_to_base(const Context& ctx, const std::vector<FSymVec>& blocks) {
    std::vector<IdVec> image;
    std::set<int> seen;
    bool first_alive = false;
    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
        IdVec img;
        for (auto& s : blocks[bi]) {
            int d = -1;
            if (s.kind == FSym::Base) d = s.a;
            if (s.kind == FSym::Copy) d = s.a;
            if (d < 0) continue;
            if (bi == 0) first_alive = true;
            if (seen.insert(d).second) img.push_back(d);
        }
        if (!img.empty()) image.push_back(sorted_unique(img));
    }
    if (!first_alive) return false;
    if (image.size() != ctx.base.blocks.size()) return false;
    for (std::size_t i = 0; i < image.size(); ++i)
        if (image[i] != ctx.base.blocks[i]) return false;
    return true;
}

/// Canonical form of a fiber label: a lone copy of a diagonal reverts to the
/// base diagonal (its side pins the puncture), and a germ loop next to a
/// single copy resolves to the corner on that side.  Returns the region face
/// when the result is a pure base label.
inline FiberCell normalize(const Context& ctx, std::vector<FSymVec> blocks, int truncation_face_hint) {
    // copy census per diagonal
    std::map<int, std::vector<std::pair<std::size_t, std::size_t>>> copy_pos;  // diag -> (block, idx)
    for (std::size_t bi = 0; bi < blocks.size(); ++bi)
        for (std::size_t k = 0; k < blocks[bi].size(); ++k)
            if (blocks[bi][k].kind == FSym::Copy) copy_pos[blocks[bi][k].a].push_back({bi, k});

    int region = -1;
    for (auto& [d, pos] : copy_pos) {
        if (pos.size() == 2) continue;  // genuine duplication
        auto [bi, k] = pos[0];
        int side = blocks[bi][k].b;
        blocks[bi][k] = FSym{FSym::Base, d, 0};
        region = ctx.side_face(d, side);
        // loop at a germ of this diagonal resolves to the flanking corner
        for (auto& blk : blocks)
            for (auto& s : blk)
                if (s.kind == FSym::LoopGerm && ctx.edge_to_diag.count(s.a / 2) &&
                    ctx.edge_to_diag.at(s.a / 2) == d)
                    s = FSym{FSym::LoopCorner, ctx.corner_on_side(s.a, side), 0};
    }

    bool pure_base = true;
    for (auto& blk : blocks) {
        std::sort(blk.begin(), blk.end());
        for (auto& s : blk)
            if (s.kind != FSym::Base) pure_base = false;
    }
    FiberCell cell;
    cell.blocks = std::move(blocks);
    cell.dim = static_cast<int>(cell.blocks.size()) - ctx.base.n_blocks();
    if (pure_base) cell.region_face = region >= 0 ? region : truncation_face_hint;
    return cell;
}

/// All placements of the given surgery symbols into the skeleton blocks or
/// as new blocks in any gap (including before block 1; invalid placements
/// are filtered by the projection condition).
inline void place_symbols(const Context& ctx, const std::vector<FSymVec>& skeleton,
                          const std::vector<FSym>& symbols, int face_hint, const std::string& provenance,
                          std::vector<FiberCell>& out) {
    const int m = static_cast<int>(skeleton.size());
    const int t = static_cast<int>(symbols.size());
    std::vector<int> place(static_cast<std::size_t>(t), 0);
    std::function<void(int)> assign = [&](int i) {
        if (i == t) {
            std::vector<FSymVec> into(static_cast<std::size_t>(m));
            std::vector<FSymVec> gaps(static_cast<std::size_t>(m) + 1);
            for (int j = 0; j < t; ++j) {
                int p = place[static_cast<std::size_t>(j)];
                if (p < m)
                    into[static_cast<std::size_t>(p)].push_back(symbols[static_cast<std::size_t>(j)]);
                else
                    gaps[static_cast<std::size_t>(p - m)].push_back(symbols[static_cast<std::size_t>(j)]);
            }
            // ordered set partitions per gap
            std::vector<std::vector<std::vector<FSymVec>>> opts(gaps.size());
            for (std::size_t g = 0; g < gaps.size(); ++g) {
                std::vector<FSymVec> acc;
                std::function<void(FSymVec)> split = [&](FSymVec rest) {
                    if (rest.empty()) {
                        opts[g].push_back(acc);
                        return;
                    }
                    const std::size_t mm = rest.size();
                    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << mm); ++mask) {
                        FSymVec blk, rem;
                        for (std::size_t x = 0; x < mm; ++x)
                            (mask & (std::uint64_t(1) << x) ? blk : rem).push_back(rest[x]);
                        acc.push_back(blk);
                        split(rem);
                        acc.pop_back();
                    }
                };
                split(gaps[g]);
            }
            std::vector<std::size_t> pick(gaps.size(), 0);
            std::function<void(std::size_t)> combine = [&](std::size_t g) {
                if (g == gaps.size()) {
                    std::vector<FSymVec> blocks;
                    for (auto& nb : opts[0][pick[0]]) blocks.push_back(nb);
                    for (int bi = 0; bi < m; ++bi) {
                        FSymVec blk = skeleton[static_cast<std::size_t>(bi)];
                        for (auto& s : into[static_cast<std::size_t>(bi)]) blk.push_back(s);
                        if (!blk.empty()) blocks.push_back(blk);
                        for (auto& nb : opts[static_cast<std::size_t>(bi) + 1][pick[static_cast<std::size_t>(bi) + 1]])
                            blocks.push_back(nb);
                    }
                    if (projects_to_base(ctx, blocks)) {
                        auto cell = normalize(ctx, blocks, face_hint);
                        cell.provenance = provenance;
                        out.push_back(std::move(cell));
                    }
                    return;
                }
                for (std::size_t o = 0; o < opts[g].size(); ++o) {
                    pick[g] = o;
                    combine(g + 1);
                }
            };
            combine(0);
            return;
        }
        for (int p = 0; p < 2 * m + 1; ++p) {
            place[static_cast<std::size_t>(i)] = p;
            assign(i + 1);
        }
    };
    assign(0);
}

/// Region a cell contracts to when truncation strips all its surgery
/// symbols: the face its package is pinned to.
inline int face_hint_of(const Context& ctx, const std::vector<FSymVec>& blocks) {
    auto face_ids = ctx.rg->face_of();
    for (auto& blk : blocks)
        for (auto& s : blk)
            if (s.kind == FSym::LoopCorner) {
                int ci = ctx.bc->corner_by_germ_a(s.a);
                return face_ids[ctx.bc->corner_list[static_cast<std::size_t>(ci)].germ_b];
            }
    for (auto& blk : blocks)
        for (auto& s : blk)
            if (s.kind == FSym::Double) {
                auto outer = ctx.rg->outer_faces();
                for (int h : {2 * s.a, 2 * s.a + 1})
                    if (!outer.count(face_ids[h])) return face_ids[h];
            }
    return -1;
}

}  // namespace fiber_detail

/// Fiber cells over the base label: the Step-2 enumeration, one surgery
/// package per cell of the blow-up complex, with incidence induced from the
/// label order.
inline FiberComplex fiber_cells(const RibbonGraph& rg, const std::map<int, int>& edge_to_diag,
                                const Label& base) {
    base.validate_basic();
    fiber_detail::Context ctx;
    auto bc = blowup(rg);
    ctx.bc = &bc;
    ctx.rg = &rg;
    ctx.edge_to_diag = edge_to_diag;
    ctx.base = base;
    for (auto& [e, d] : edge_to_diag) {
        if (rg.edge_is_boundary[e]) throw std::invalid_argument("fiber: boundary edge mapped to a diagonal");
        ctx.diag_to_edge[d] = e;
    }
    for (int bi = 0; bi < base.n_blocks(); ++bi)
        for (int d : base.blocks[static_cast<std::size_t>(bi)]) {
            if (!ctx.diag_to_edge.count(d)) throw std::invalid_argument("fiber: diagonal without ribbon edge");
            ctx.block_of[d] = bi;
        }
    for (int e : bc.diagonal_edge_ids)
        if (!edge_to_diag.count(e)) throw std::invalid_argument("fiber: ribbon diagonal not in the base label");

    FiberComplex fc;
    fc.base = base;

    auto base_skeleton = [&](int without_diag) {
        std::vector<FSymVec> sk;
        for (auto& blk : base.blocks) {
            FSymVec b;
            for (int d : blk)
                if (d != without_diag) b.push_back(FSym{FSym::Base, d, 0});
            sk.push_back(b);  // possibly empty; dropped when it stays empty
        }
        return sk;
    };
    auto nonempty = [](std::vector<FSymVec> sk) {
        std::vector<FSymVec> out;
        for (auto& b : sk)
            if (!b.empty()) out.push_back(b);
        return out;
    };

    std::vector<FiberCell> raw;
    auto face_ids = rg.face_of();

    // (1) big disks: one 0-cell per interior face
    for (int f : bc.interior_faces) {
        FiberCell cell;
        cell.blocks = base_skeleton(-1);
        cell.region_face = f;
        cell.dim = 0;
        cell.provenance = "face";
        raw.push_back(cell);
    }
    // (2)+(3) boundary edges: double in a block (lines) or in a singleton
    // after it (strips)
    for (int e : bc.boundary_edge_ids) {
        int hint = -1;  // interior face adjacent to e
        auto outer = rg.outer_faces();
        for (int h : {2 * e, 2 * e + 1})
            if (!outer.count(face_ids[h])) hint = face_ids[h];
        fiber_detail::place_symbols(ctx, base_skeleton(-1), {FSym{FSym::Double, e, 0}}, hint,
                                    "edge:" + std::to_string(e), raw);
    }
    // (4) corners: loop diagonals
    for (auto& c : bc.corner_list) {
        int hint = face_ids[c.germ_b];
        fiber_detail::place_symbols(ctx, base_skeleton(-1), {FSym{FSym::LoopCorner, c.germ_a, 0}}, hint,
                                    "corner:" + std::to_string(c.germ_a), raw);
    }
    // (5) diagonals: duplication
    for (int e : bc.diagonal_edge_ids) {
        int d = edge_to_diag.at(e);
        fiber_detail::place_symbols(ctx, nonempty(base_skeleton(d)),
                                    {FSym{FSym::Copy, d, 0}, FSym{FSym::Copy, d, 1}}, -1,
                                    "diag:" + std::to_string(d), raw);
    }
    // (6a) corner + boundary edge junctions
    for (auto& c : bc.corner_list) {
        for (int g : {c.germ_a, c.germ_b}) {
            int e = rg.edge_of(g);
            if (!rg.edge_is_boundary[e]) continue;
            int hint = face_ids[c.germ_b];
            fiber_detail::place_symbols(ctx, base_skeleton(-1),
                                        {FSym{FSym::LoopCorner, c.germ_a, 0}, FSym{FSym::Double, e, 0}},
                                        hint, "corner+edge:" + std::to_string(c.germ_a) + ":" + std::to_string(e),
                                        raw);
        }
    }
    // (6b) diagonal germs: loop + duplication, left and right corners merged
    for (int e : bc.diagonal_edge_ids) {
        int d = edge_to_diag.at(e);
        for (int g : {2 * e, 2 * e + 1}) {
            fiber_detail::place_symbols(ctx, nonempty(base_skeleton(d)),
                                        {FSym{FSym::LoopGerm, g, 0}, FSym{FSym::Copy, d, 0},
                                         FSym{FSym::Copy, d, 1}},
                                        -1, "diag-germ:" + std::to_string(g), raw);
        }
    }

    // dedupe into the cell table (normalization can identify placements)
    for (auto& cell : raw) {
        if (fc.index.count(cell.key())) continue;
        fc.index[cell.key()] = static_cast<int>(fc.cells.size());
        fc.cells.push_back(cell);
    }
    std::sort(fc.cells.begin(), fc.cells.end(),
              [](const FiberCell& a, const FiberCell& b) { return a.key() < b.key(); });
    fc.index.clear();
    for (std::size_t i = 0; i < fc.cells.size(); ++i) fc.index[fc.cells[i].key()] = static_cast<int>(i);

    // incidence: drop one chain element, renormalize, look up
    fc.complex.dim.resize(fc.cells.size());
    fc.complex.facets_of.resize(fc.cells.size());
    fc.complex.name.resize(fc.cells.size());
    for (std::size_t i = 0; i < fc.cells.size(); ++i) {
        fc.complex.dim[i] = fc.cells[i].dim;
        fc.complex.name[i] = fc.cells[i].key();
    }
    for (std::size_t i = 0; i < fc.cells.size(); ++i) {
        const auto& cell = fc.cells[i];
        const auto& blocks = cell.blocks;
        const std::size_t p = blocks.size();
        if (p == 1) continue;
        for (std::size_t k = 0; k < p; ++k) {
            // drop chain element k: merge blocks k,k+1 (k<p-1) or truncate
            std::vector<FSymVec> nb;
            for (std::size_t x = 0; x < p; ++x) {
                if (x == k && k + 1 < p) continue;
                if (x == k + 1 && k + 1 < p) {
                    FSymVec merged = blocks[k];
                    for (auto& s : blocks[x]) merged.push_back(s);
                    nb.push_back(merged);
                } else if (x == k && k + 1 == p) {
                    continue;  // truncation
                } else {
                    nb.push_back(blocks[x]);
                }
            }
            if (!fiber_detail::projects_to_base(ctx, nb)) continue;  // face lies over a face of the base
            auto f = fiber_detail::normalize(ctx, nb, fiber_detail::face_hint_of(ctx, cell.blocks));
            int j = fc.index.count(f.key()) ? fc.index.at(f.key()) : -1;
            if (j < 0) throw std::logic_error("fiber: face cell missing: " + f.key() + " of " + cell.key());
            if (fc.complex.dim[static_cast<std::size_t>(j)] == cell.dim - 1)
                fc.complex.facets_of[i].push_back(j);
        }
        fc.complex.facets_of[i] = sorted_unique(fc.complex.facets_of[i]);
    }
    return fc;
}

/// Structural surface verification of a 2-dimensional regular cell complex:
/// edge-coface bounds, simple 2-cell boundaries, vertex links that are arcs
/// or circles, connectivity, Euler characteristic and boundary-circle count.
struct SurfaceReport {
    bool ok = true;
    long long chi = 0;
    int n_boundary_circles = 0;
    bool connected = false;
    std::vector<std::string> failures;

    void fail(std::string what) {
        ok = false;
        failures.push_back(std::move(what));
    }
};

inline SurfaceReport verify_surface(const CellComplex& K, long long expected_chi, int expected_boundary) {
    SurfaceReport rep;
    K.validate();
    rep.chi = K.euler_characteristic();
    auto co = K.cofacets();
    const int n = K.n_cells();

    // every 1-cell bounds two distinct 0-cells and lies in 1 or 2 two-cells
    std::vector<int> boundary_edges;
    for (int c = 0; c < n; ++c) {
        if (K.dim[c] != 1) continue;
        if (K.facets_of[c].size() != 2 || K.facets_of[c][0] == K.facets_of[c][1])
            rep.fail("1-cell " + K.name[c] + " does not have two distinct endpoints");
        int f2 = 0;
        for (int d : co[c]) f2 += (K.dim[d] == 2);
        if (f2 < 1 || f2 > 2) rep.fail("1-cell " + K.name[c] + " lies in " + std::to_string(f2) + " 2-cells");
        if (f2 == 1) boundary_edges.push_back(c);
    }

    // 2-cell boundaries are simple cycles
    for (int c = 0; c < n; ++c) {
        if (K.dim[c] != 2) continue;
        std::map<int, int> deg;
        for (int e : K.facets_of[c])
            for (int v : K.facets_of[e]) deg[v]++;
        bool good = K.facets_of[c].size() >= 2;
        for (auto& [v, d] : deg) good = good && d == 2;
        if (!good || deg.size() != K.facets_of[c].size())
            rep.fail("2-cell " + K.name[c] + " boundary is not a simple cycle");
    }

    // vertex links
    for (int v = 0; v < n; ++v) {
        if (K.dim[v] != 0) continue;
        std::vector<int> edges_at;
        for (int e : co[v])
            if (K.dim[e] == 1) edges_at.push_back(e);
        std::set<int> twocells_at;
        for (int e : edges_at)
            for (int f : co[e])
                if (K.dim[f] == 2) twocells_at.insert(f);
        std::map<int, std::vector<int>> adj;  // link graph on edges_at
        for (int f : twocells_at) {
            std::vector<int> pair;
            for (int e : K.facets_of[f])
                if (contains(sorted_unique(K.facets_of[e]), v)) pair.push_back(e);
            if (pair.size() != 2) {
                rep.fail("2-cell " + K.name[f] + " touches vertex " + K.name[v] + " in " +
                         std::to_string(pair.size()) + " edges");
                continue;
            }
            adj[pair[0]].push_back(pair[1]);
            adj[pair[1]].push_back(pair[0]);
        }
        if (edges_at.empty()) {
            rep.fail("isolated vertex " + K.name[v]);
            continue;
        }
        // degrees <= 2, connected, path or cycle
        int deg1 = 0;
        bool degree_ok = true;
        for (int e : edges_at) {
            std::size_t d = adj.count(e) ? adj[e].size() : 0;
            if (d > 2) degree_ok = false;
            if (d <= 1) deg1++;
        }
        // connectivity of the link graph
        std::set<int> seen;
        std::vector<int> stack{edges_at[0]};
        while (!stack.empty()) {
            int e = stack.back();
            stack.pop_back();
            if (!seen.insert(e).second) continue;
            if (adj.count(e))
                for (int e2 : adj[e]) stack.push_back(e2);
        }
        bool link_connected = seen.size() == edges_at.size();
        bool arc = degree_ok && link_connected && deg1 == 2;
        bool circle = degree_ok && link_connected && deg1 == 0;
        bool lonely_edge = edges_at.size() == 1 && (!adj.count(edges_at[0]) || adj[edges_at[0]].empty());
        if (!(arc || circle || lonely_edge))
            rep.fail("link of vertex " + K.name[v] + " is neither an arc nor a circle");
    }

    // connectivity of the whole complex via facet incidences
    {
        std::vector<int> comp(n, -1);
        std::vector<int> stack;
        if (n > 0) {
            stack.push_back(0);
            comp[0] = 0;
            while (!stack.empty()) {
                int c = stack.back();
                stack.pop_back();
                for (int d : K.facets_of[c])
                    if (comp[d] == -1) {
                        comp[d] = 0;
                        stack.push_back(d);
                    }
                for (int d : co[c])
                    if (comp[d] == -1) {
                        comp[d] = 0;
                        stack.push_back(d);
                    }
            }
        }
        rep.connected = std::all_of(comp.begin(), comp.end(), [](int x) { return x == 0; });
        if (!rep.connected) rep.fail("complex is not connected");
    }

    // boundary circles: components of the boundary edges; every boundary
    // vertex must have exactly two incident boundary edges
    {
        std::map<int, std::vector<int>> bd_at;  // vertex -> boundary edges
        for (int e : boundary_edges)
            for (int v : K.facets_of[e]) bd_at[v].push_back(e);
        for (auto& [v, es] : bd_at)
            if (es.size() != 2)
                rep.fail("boundary vertex " + K.name[v] + " has " + std::to_string(es.size()) +
                         " boundary edges");
        std::set<int> unvisited(boundary_edges.begin(), boundary_edges.end());
        int circles = 0;
        while (!unvisited.empty() && rep.ok) {
            ++circles;
            std::vector<int> stack{*unvisited.begin()};
            while (!stack.empty()) {
                int e = stack.back();
                stack.pop_back();
                if (!unvisited.erase(e)) continue;
                for (int v : K.facets_of[e])
                    for (int e2 : bd_at[v])
                        if (unvisited.count(e2)) stack.push_back(e2);
            }
        }
        rep.n_boundary_circles = circles;
    }

    if (rep.chi != expected_chi)
        rep.fail("Euler characteristic " + std::to_string(rep.chi) + " != expected " +
                 std::to_string(expected_chi));
    if (rep.ok && rep.n_boundary_circles != expected_boundary)
        rep.fail("boundary circles " + std::to_string(rep.n_boundary_circles) + " != expected " +
                 std::to_string(expected_boundary));
    return rep;
}

}  // namespace diagcx
