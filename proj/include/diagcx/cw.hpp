#pragma once

#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>

#include "diagcx/simplicial.hpp"

namespace diagcx {

/// Regular cell complex as a graded face poset: every cell knows its
/// codimension-1 faces.  Sufficient for discrete Morse theory, Euler counts
/// and the surface checks of the fiber construction.
struct CellComplex {
    std::vector<int> dim;                     // per cell
    std::vector<std::vector<int>> facets_of;  // cell -> codim-1 faces
    std::vector<std::string> name;            // optional, for reports

    int n_cells() const { return static_cast<int>(dim.size()); }

    std::vector<std::vector<int>> cofacets() const {
        std::vector<std::vector<int>> co(n_cells());
        for (int c = 0; c < n_cells(); ++c)
            for (int f : facets_of[c]) co[f].push_back(c);
        return co;
    }

    long long euler_characteristic() const {
        long long chi = 0;
        for (int d : dim) chi += (d % 2 ? -1 : 1);
        return chi;
    }

    int max_dim() const {
        int m = -1;
        for (int d : dim) m = std::max(m, d);
        return m;
    }

    void validate() const {
        for (int c = 0; c < n_cells(); ++c)
            for (int f : facets_of[c]) {
                if (f < 0 || f >= n_cells()) throw std::invalid_argument("cell complex: bad face id");
                if (dim[f] != dim[c] - 1) throw std::invalid_argument("cell complex: face grading broken");
            }
    }

    static CellComplex from_simplicial(const SimplicialComplex& K) {
        std::map<std::vector<int>, int> id;
        return from_simplicial(K, id);
    }

    /// Variant exposing the simplex -> cell id table.
    static CellComplex from_simplicial(const SimplicialComplex& K, std::map<std::vector<int>, int>& id) {
        CellComplex cc;
        auto sims = K.simplices_by_dim();
        id.clear();
        for (auto& level : sims)
            for (auto& s : level) {
                id[s] = cc.n_cells();
                cc.dim.push_back(static_cast<int>(s.size()) - 1);
                std::string nm;
                for (int v : s) nm += (nm.empty() ? "" : " ") + std::to_string(v);
                cc.name.push_back("{" + nm + "}");
                cc.facets_of.push_back({});
            }
        for (auto& [s, c] : id) {
            if (s.size() == 1) continue;
            for (std::size_t i = 0; i < s.size(); ++i) {
                auto t = s;
                t.erase(t.begin() + static_cast<long>(i));
                cc.facets_of[c].push_back(id.at(t));
            }
        }
        return cc;
    }
};

/// Matching on cells: partner[c] = matched cell or -1.  Pairs always point
/// one dimension apart with the lower cell a facet of the upper.
struct DiscreteVectorField {
    std::vector<int> partner;

    explicit DiscreteVectorField(int n = 0) : partner(n, -1) {}

    void match(int a, int b) {
        if (partner[a] != -1 || partner[b] != -1) throw std::invalid_argument("vector field: cell matched twice");
        partner[a] = b;
        partner[b] = a;
    }

    bool is_critical(int c) const { return partner[c] == -1; }

    int n_pairs() const {
        int k = 0;
        for (int p : partner) k += (p != -1);
        return k / 2;
    }

    std::vector<int> critical_cells() const {
        std::vector<int> out;
        for (int c = 0; c < static_cast<int>(partner.size()); ++c)
            if (partner[c] == -1) out.push_back(c);
        return out;
    }

    /// Matching axioms: each cell in at most one pair (by construction) and
    /// each pair (a,b) has a a facet of b with dim b = dim a + 1.
    void validate(const CellComplex& K) const {
        if (static_cast<int>(partner.size()) != K.n_cells())
            throw std::invalid_argument("vector field: size mismatch");
        for (int a = 0; a < K.n_cells(); ++a) {
            int b = partner[a];
            if (b == -1) continue;
            if (partner[b] != a) throw std::invalid_argument("vector field: partner not symmetric");
            if (K.dim[a] + 1 == K.dim[b]) {
                if (std::find(K.facets_of[b].begin(), K.facets_of[b].end(), a) == K.facets_of[b].end())
                    throw std::invalid_argument("vector field: matched cell is not a facet of its partner");
            } else if (K.dim[b] + 1 != K.dim[a]) {
                throw std::invalid_argument("vector field: pair dimensions not adjacent");
            }
        }
    }
};

/// Alternating cell sequence a0,b0,a1,b1,...  Closed iff it returns to a0.
struct VPath {
    std::vector<int> cells;

    /// Appendix-style validity: (a_i,b_i) matched, a_{i+1} a facet of b_i,
    /// a_{i+1} != a_i.
    static bool valid(const CellComplex& K, const DiscreteVectorField& V, const std::vector<int>& cells) {
        if (cells.size() < 3 || cells.size() % 2 == 0) return false;
        for (std::size_t i = 0; i + 2 < cells.size(); i += 2) {
            int a = cells[i], b = cells[i + 1], a2 = cells[i + 2];
            if (V.partner[a] != b) return false;
            if (std::find(K.facets_of[b].begin(), K.facets_of[b].end(), a2) == K.facets_of[b].end()) return false;
            if (a2 == a) return false;
        }
        return true;
    }
};

struct AcyclicityResult {
    bool acyclic = true;
    std::vector<int> witness;  // closed V-path a0,b0,...,a0 when cyclic
};

/// Search for closed V-paths: per dimension, the digraph a -> a' where
/// (a, V(a)) is a pair and a' != a is another facet of V(a).
inline AcyclicityResult check_acyclic(const CellComplex& K, const DiscreteVectorField& V) {
    V.validate(K);
    AcyclicityResult res;
    const int n = K.n_cells();
    std::vector<std::vector<int>> succ(n);
    for (int a = 0; a < n; ++a) {
        int b = V.partner[a];
        if (b == -1 || K.dim[b] != K.dim[a] + 1) continue;
        for (int a2 : K.facets_of[b])
            if (a2 != a) succ[a].push_back(a2);
    }
    // iterative DFS with colors; reconstruct the cycle through parent links
    std::vector<int> color(n, 0), parent(n, -1);
    for (int s = 0; s < n; ++s) {
        if (color[s] != 0) continue;
        std::vector<std::pair<int, std::size_t>> stack{{s, 0}};
        color[s] = 1;
        while (!stack.empty()) {
            auto& [v, it] = stack.back();
            if (it < succ[v].size()) {
                int w = succ[v][it++];
                if (color[w] == 1) {
                    // closed path found: w ... v -> w
                    std::vector<int> alpha{v};
                    for (int x = v; x != w;) {
                        x = parent[x];
                        alpha.push_back(x);
                    }
                    std::reverse(alpha.begin(), alpha.end());
                    std::vector<int> path;
                    for (int a : alpha) {
                        path.push_back(a);
                        path.push_back(V.partner[a]);
                    }
                    path.push_back(alpha.front());
                    res.acyclic = false;
                    res.witness = std::move(path);
                    return res;
                }
                if (color[w] == 0) {
                    color[w] = 1;
                    parent[w] = v;
                    stack.push_back({w, 0});
                }
            } else {
                color[v] = 2;
                stack.pop_back();
            }
        }
    }
    return res;
}

struct CollapseResult {
    bool complete = false;                         // all matched pairs removed
    std::vector<std::pair<int, int>> order;        // elementary collapses performed
    std::vector<int> critical;                     // remaining cells
    bool single_vertex = false;                    // exactly one critical 0-cell
};

/// Perform the elementary collapses encoded by an acyclic matching.  Pairs of
/// each dimension are removed in source-first topological order of the V-path
/// digraph, which keeps every removed lower cell free at its removal time as
/// long as no critical cell sits above a matched one.
inline CollapseResult collapse(const CellComplex& K, const DiscreteVectorField& V) {
    auto acyc = check_acyclic(K, V);
    if (!acyc.acyclic) throw std::invalid_argument("collapse: vector field has a closed path");

    const int n = K.n_cells();
    auto co = K.cofacets();
    std::vector<char> removed(n, 0);
    CollapseResult res;

    for (int p = K.max_dim(); p >= 1; --p) {
        // pairs (a, b) with dim b == p
        std::vector<int> uppers;
        for (int b = 0; b < n; ++b)
            if (K.dim[b] == p && V.partner[b] != -1 && K.dim[V.partner[b]] == p - 1) uppers.push_back(b);
        // topological order of the pair digraph: (a,b) -> (a',b') iff a' facet of b
        std::map<int, int> pair_index;  // upper cell -> index
        for (std::size_t i = 0; i < uppers.size(); ++i) pair_index[uppers[i]] = static_cast<int>(i);
        std::vector<std::vector<int>> succ(uppers.size());
        std::vector<int> indeg(uppers.size(), 0);
        for (std::size_t i = 0; i < uppers.size(); ++i) {
            int b = uppers[i], a = V.partner[b];
            for (int a2 : K.facets_of[b]) {
                if (a2 == a) continue;
                int b2 = V.partner[a2];
                if (b2 != -1 && K.dim[b2] == p && pair_index.count(b2)) {
                    succ[i].push_back(pair_index[b2]);
                    indeg[pair_index[b2]]++;
                }
            }
        }
        std::deque<int> q;
        for (std::size_t i = 0; i < uppers.size(); ++i)
            if (!indeg[i]) q.push_back(static_cast<int>(i));
        std::size_t done = 0;
        while (!q.empty()) {
            int i = q.front();
            q.pop_front();
            ++done;
            int b = uppers[i], a = V.partner[b];
            // freeness check: a has no remaining coface other than b
            for (int c : co[a])
                if (!removed[c] && c != b) return res;  // blocked (critical coface): incomplete
            removed[a] = removed[b] = 1;
            res.order.push_back({a, b});
            for (int j : succ[i])
                if (--indeg[j] == 0) q.push_back(j);
        }
        if (done != uppers.size()) return res;  // cycle among pairs cannot happen (acyclic), defensive
    }
    res.complete = true;
    for (int c = 0; c < n; ++c)
        if (!removed[c]) res.critical.push_back(c);
    res.single_vertex = res.critical.size() == 1 && K.dim[res.critical[0]] == 0;
    return res;
}

/// Greedy collapsing: repeatedly remove a free pair (a facet of exactly one
/// remaining cell).  Lowest-dimension free faces first, lexicographic
/// tie-break over cell ids.  Produces an acyclic matching by construction.
inline std::optional<DiscreteVectorField> greedy_collapse_field(const CellComplex& K) {
    const int n = K.n_cells();
    auto co = K.cofacets();
    std::vector<char> removed(n, 0);
    std::vector<int> live_cofaces(n, 0);
    for (int c = 0; c < n; ++c) live_cofaces[c] = static_cast<int>(co[c].size());
    DiscreteVectorField V(n);

    auto only_live_coface = [&](int a) -> int {
        int found = -1;
        for (int c : co[a])
            if (!removed[c]) {
                if (found != -1) return -1;
                found = c;
            }
        return found;
    };

    int remaining = n;
    std::set<std::pair<int, int>> frees;  // (dim, cell) with exactly one live coface
    for (int a = 0; a < n; ++a)
        if (live_cofaces[a] == 1) frees.insert({K.dim[a], a});

    while (!frees.empty()) {
        auto [d, a] = *frees.begin();
        frees.erase(frees.begin());
        if (removed[a]) continue;
        int b = only_live_coface(a);
        if (b == -1) continue;  // stale entry
        // b must itself be maximal among remaining
        bool b_max = true;
        for (int c : co[b])
            if (!removed[c]) {
                b_max = false;
                break;
            }
        if (!b_max) continue;
        removed[a] = removed[b] = 1;
        remaining -= 2;
        V.match(a, b);
        for (int f : K.facets_of[b]) {
            if (removed[f]) continue;
            if (--live_cofaces[f] == 1) frees.insert({K.dim[f], f});
        }
        for (int f : K.facets_of[a]) {
            if (removed[f]) continue;
            if (--live_cofaces[f] == 1) frees.insert({K.dim[f], f});
        }
    }
    (void)remaining;
    // critical = unmatched; caller decides whether the result is useful
    return V;
}

/// Perfect acyclic matching on a simplicial cone: tau <-> tau ∪ {apex}.
/// Single critical cell {apex}.
inline std::optional<DiscreteVectorField> cone_matching(const SimplicialComplex& K, const CellComplex& cc,
                                                        const std::map<std::vector<int>, int>& cell_id) {
    if (K.facets().empty()) return std::nullopt;
    // apex candidates: vertices in every facet
    std::vector<int> apex_cand = K.facets()[0];
    for (auto& f : K.facets()) {
        IdVec keep;
        std::set_intersection(apex_cand.begin(), apex_cand.end(), f.begin(), f.end(), std::back_inserter(keep));
        apex_cand = keep;
        if (apex_cand.empty()) return std::nullopt;
    }
    int apex = apex_cand[0];
    DiscreteVectorField V(cc.n_cells());
    for (auto& [s, id] : cell_id) {
        if (contains(s, apex)) continue;
        auto t = s;
        t.insert(std::lower_bound(t.begin(), t.end(), apex), apex);
        V.match(id, cell_id.at(t));
    }
    return V;
}

}  // namespace diagcx
