#pragma once

#include <functional>
#include <map>
#include <unordered_map>

#include "diagcx/poset.hpp"
#include "diagcx/ribbon.hpp"

namespace diagcx {

/// Chord {a,b} on an N-gon with vertices 0..N-1 in cyclic order, endpoints
/// non-adjacent.  Canonically a < b.
struct Chord {
    int a, b;
    Chord(int x, int y) : a(std::min(x, y)), b(std::max(x, y)) {}
    bool operator==(const Chord& o) const { return a == o.a && b == o.b; }
    bool operator<(const Chord& o) const { return a != o.a ? a < o.a : b < o.b; }
    std::string str() const { return std::to_string(a) + "-" + std::to_string(b); }
};

inline bool chord_valid(int N, const Chord& c) {
    if (c.a < 0 || c.b >= N || c.a == c.b) return false;
    int d = (c.b - c.a) % N;
    return d != 1 && d != N - 1;
}

/// Strict interleaving around the cycle; chords sharing an endpoint do not
/// cross.
inline bool chords_cross(int N, const Chord& c1, const Chord& c2) {
    auto inside = [&](int x, int lo, int hi) {
        // strictly between lo and hi going cyclically up from lo
        int span = (hi - lo + N) % N;
        int off = (x - lo + N) % N;
        return off > 0 && off < span;
    };
    if (c1.a == c2.a || c1.a == c2.b || c1.b == c2.a || c1.b == c2.b) return false;
    return inside(c2.a, c1.a, c1.b) != inside(c2.b, c1.a, c1.b);
}

enum class Symmetry { None, Central, Axial };

/// Non-crossing chord set with an optional symmetry constraint.
struct ChordSet {
    int N = 0;
    std::vector<Chord> chords;  // sorted
    Symmetry symmetry = Symmetry::None;

    void validate() const {
        for (auto& c : chords)
            if (!chord_valid(N, c)) throw std::invalid_argument("chord set: invalid chord " + c.str());
        for (std::size_t i = 0; i < chords.size(); ++i) {
            for (std::size_t j = i + 1; j < chords.size(); ++j) {
                if (chords[i] == chords[j]) throw std::invalid_argument("chord set: duplicate chord");
                if (chords_cross(N, chords[i], chords[j]))
                    throw std::invalid_argument("chord set: crossing chords " + chords[i].str() + " " +
                                                chords[j].str());
            }
        }
        auto img = [&](const Chord& c) {
            if (symmetry == Symmetry::Central) return Chord((c.a + N / 2) % N, (c.b + N / 2) % N);
            return Chord((N - 1 - c.a + N) % N, (N - 1 - c.b + N) % N);
        };
        if (symmetry != Symmetry::None) {
            for (auto& c : chords) {
                auto m = img(c);
                if (std::find(chords.begin(), chords.end(), m) == chords.end())
                    throw std::invalid_argument("chord set: not closed under the declared symmetry");
            }
        }
    }

    std::string str() const {
        std::string s = "{";
        for (auto& c : chords) s += (s.size() > 1 ? "," : "") + c.str();
        return s + "}";
    }
};

/// One strong-equivalence class of a diagonal in the chosen encoding: a
/// single chord (plain case) or a symmetry orbit of one or two chords.
struct DiagonalClass {
    std::vector<Chord> chords;  // sorted, 1 or 2 entries
    std::string name;
    bool self_symmetric() const { return chords.size() == 1; }
};

/// The chord classes of one polygon case plus their pairwise compatibility
/// (non-crossing) relation.
struct PolygonUniverse {
    int N = 0;          // polygon carrying the chords (n, 2n, or 2k)
    int param = 0;      // the n or k the case was built from
    Symmetry symmetry = Symmetry::None;
    std::vector<DiagonalClass> classes;
    std::vector<std::vector<char>> compatible;

    int n_classes() const { return static_cast<int>(classes.size()); }

    bool compatible_set(const IdVec& ids) const {
        for (std::size_t i = 0; i < ids.size(); ++i)
            for (std::size_t j = i + 1; j < ids.size(); ++j)
                if (!compatible[ids[i]][ids[j]]) return false;
        return true;
    }

    ChordSet chord_set(const IdVec& ids) const {
        ChordSet cs;
        cs.N = N;
        cs.symmetry = symmetry;
        for (int id : ids)
            for (auto& c : classes[id].chords) cs.chords.push_back(c);
        std::sort(cs.chords.begin(), cs.chords.end());
        return cs;
    }

    std::string set_name(const IdVec& ids) const {
        std::string s = "{";
        for (int id : ids) s += (s.size() > 1 ? "," : "") + classes[id].name;
        return s + "}";
    }

    static PolygonUniverse plain(int n) {
        // n = 2 yields the chordless bigon, valid only as a projection target
        if (n < 2) throw std::invalid_argument("plain polygon needs n >= 2");
        PolygonUniverse u;
        u.N = n;
        u.param = n;
        u.symmetry = Symmetry::None;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (chord_valid(n, Chord(a, b))) u.classes.push_back({{Chord(a, b)}, Chord(a, b).str()});
        u.fill_compat();
        return u;
    }

    /// Doubled encoding of the once-punctured n-gon: centrally symmetric
    /// chord classes of the 2n-gon.  Diameters are loops at a vertex
    /// embracing the puncture.
    static PolygonUniverse punctured(int n) {
        if (n < 2) throw std::invalid_argument("punctured polygon needs n >= 2");
        PolygonUniverse u;
        u.N = 2 * n;
        u.param = n;
        u.symmetry = Symmetry::Central;
        std::set<std::vector<Chord>> seen;
        for (int a = 0; a < 2 * n; ++a)
            for (int b = a + 1; b < 2 * n; ++b) {
                Chord c(a, b);
                if (!chord_valid(2 * n, c)) continue;
                Chord m((a + n) % (2 * n), (b + n) % (2 * n));
                std::vector<Chord> orbit{c};
                if (!(m == c)) orbit.push_back(m);
                std::sort(orbit.begin(), orbit.end());
                if (!seen.insert(orbit).second) continue;
                std::string nm;
                if (orbit.size() == 1)
                    nm = "loop@" + std::to_string(c.a % n);
                else
                    nm = orbit[0].str() + "/" + orbit[1].str();
                u.classes.push_back({orbit, nm});
            }
        u.fill_compat();
        return u;
    }

    /// Axis-symmetric classes of the 2k-gon, reflection i -> 2k-1-i (axis
    /// through the midpoints of edges (2k-1,0) and (k-1,k)).  Orbits whose
    /// two chords cross each other can never occur and are omitted.
    static PolygonUniverse axial(int k) {
        if (k < 2) throw std::invalid_argument("axial case needs k >= 2");
        PolygonUniverse u;
        u.N = 2 * k;
        u.param = k;
        u.symmetry = Symmetry::Axial;
        const int N = 2 * k;
        auto refl = [&](int i) { return (N - 1 - i + N) % N; };
        std::set<std::vector<Chord>> seen;
        for (int a = 0; a < N; ++a)
            for (int b = a + 1; b < N; ++b) {
                Chord c(a, b);
                if (!chord_valid(N, c)) continue;
                Chord m(refl(a), refl(b));
                std::vector<Chord> orbit{c};
                if (!(m == c)) orbit.push_back(m);
                std::sort(orbit.begin(), orbit.end());
                if (!seen.insert(orbit).second) continue;
                if (orbit.size() == 2 && chords_cross(N, orbit[0], orbit[1])) continue;
                std::string nm = orbit.size() == 1 ? ("ax:" + c.str()) : (orbit[0].str() + "/" + orbit[1].str());
                u.classes.push_back({orbit, nm});
            }
        u.fill_compat();
        return u;
    }

private:
    void fill_compat() {
        const int m = n_classes();
        compatible.assign(m, std::vector<char>(m, 1));
        for (int i = 0; i < m; ++i)
            for (int j = i; j < m; ++j) {
                bool ok = true;
                for (auto& c1 : classes[i].chords)
                    for (auto& c2 : classes[j].chords) {
                        if (i == j && c1 == c2) continue;
                        if (c1 == c2 || chords_cross(N, c1, c2)) ok = false;
                    }
                compatible[i][j] = compatible[j][i] = ok;
                if (i == j && !ok) throw std::logic_error("class crosses itself");
            }
    }
};

/// An enumerated diagonal poset: arrangements (sets of class ids) ordered by
/// reversed inclusion, the empty arrangement on top.
struct ArrangementPoset {
    PolygonUniverse universe;
    std::vector<IdVec> arrangements;  // index = poset element id, sorted by (size, lex)
    Poset poset;
    std::vector<int> rank;  // cell dimension
    int top = -1;           // id of the empty arrangement

    int find(const IdVec& ids) const {
        auto it = index_.find(ids);
        return it == index_.end() ? -1 : it->second;
    }

    std::map<IdVec, int> index_;
};

namespace detail {

inline ArrangementPoset build_arrangement_poset(PolygonUniverse u, int top_rank) {
    ArrangementPoset ap;
    ap.universe = std::move(u);
    const auto& U = ap.universe;

    // grow all compatible id sets
    std::vector<IdVec> all;
    IdVec cur;
    std::function<void(int)> grow = [&](int from) {
        all.push_back(cur);
        for (int id = from; id < U.n_classes(); ++id) {
            bool ok = true;
            for (int x : cur)
                if (!U.compatible[x][id]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            cur.push_back(id);
            grow(id + 1);
            cur.pop_back();
        }
    };
    grow(0);

    std::sort(all.begin(), all.end(), [](const IdVec& x, const IdVec& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x < y;
    });
    ap.arrangements = std::move(all);
    for (std::size_t i = 0; i < ap.arrangements.size(); ++i)
        ap.index_[ap.arrangements[i]] = static_cast<int>(i);
    ap.top = ap.index_.at({});

    // covers: remove one class (reverse inclusion: bigger set is smaller)
    std::vector<std::string> payloads;
    for (auto& a : ap.arrangements) payloads.push_back(ap.universe.set_name(a));
    std::vector<std::pair<int, int>> covers;
    for (std::size_t i = 0; i < ap.arrangements.size(); ++i) {
        const auto& a = ap.arrangements[i];
        for (std::size_t k = 0; k < a.size(); ++k) {
            IdVec sub = a;
            sub.erase(sub.begin() + static_cast<long>(k));
            covers.push_back({static_cast<int>(i), ap.index_.at(sub)});
        }
    }
    ap.poset = Poset(payloads, covers);
    for (auto& a : ap.arrangements) ap.rank.push_back(top_rank - static_cast<int>(a.size()));
    for (int r : ap.rank)
        if (r < 0) throw std::logic_error("arrangement poset: negative rank");
    return ap;
}

}  // namespace detail

/// All non-crossing chord sets of the n-gon (including empty), reversed
/// inclusion, ranked by n-3-|chords|.
inline ArrangementPoset enumerate_plain(int n) {
    if (n < 3) throw std::invalid_argument("enumerate_plain needs n >= 3");
    return detail::build_arrangement_poset(PolygonUniverse::plain(n), n - 3);
}

/// All centrally symmetric non-crossing chord sets of the 2n-gon, i.e. the
/// once-punctured n-gon classes; rank (n-1) - #orbits.
inline ArrangementPoset enumerate_punctured(int n) {
    return detail::build_arrangement_poset(PolygonUniverse::punctured(n), n - 1);
}

/// All reflection-invariant non-crossing chord sets of the 2k-gon; ranked to
/// match the face poset of As_{k+1}.
inline ArrangementPoset enumerate_axis_symmetric(int k) {
    return detail::build_arrangement_poset(PolygonUniverse::axial(k), k - 2);
}

/// The once-punctured polygon arrangement as carried by its doubling.
struct PuncturedPolygonArrangement {
    int n = 0;
    ChordSet doubled;  // N = 2n, central symmetry
};

/// Half-polygon image of one axial class: pairs of symmetric chords in the
/// side 0..k-1 map to ordinary chords, self-symmetric chords map to chords at
/// the new vertex v (index k of the (k+1)-gon).
inline Chord fold_axial_class(int k, const DiagonalClass& cls) {
    const int N = 2 * k;
    if (cls.self_symmetric()) {
        const Chord& c = cls.chords[0];
        int i = std::min(c.a, c.b) < k ? std::min(c.a, c.b) : std::max(c.a, c.b);
        if (i >= k) throw std::invalid_argument("fold: self-symmetric chord without side-1 endpoint");
        return Chord(i, k);  // chord at v
    }
    for (auto& c : cls.chords)
        if (c.a < k && c.b < k) return c;
    throw std::invalid_argument("fold: axial pair with no representative inside the half polygon");
    (void)N;
}

/// Fold of a full axial chord set onto the (k+1)-gon (vertices 0..k-1 plus
/// v=k).  Returns the chord set together with the class mapping.
inline ChordSet fold_axial(const PolygonUniverse& axial_universe, const IdVec& ids) {
    if (axial_universe.symmetry != Symmetry::Axial) throw std::invalid_argument("fold: not an axial universe");
    int k = axial_universe.param;
    ChordSet out;
    out.N = k + 1;
    out.symmetry = Symmetry::None;
    for (int id : ids) out.chords.push_back(fold_axial_class(k, axial_universe.classes[id]));
    std::sort(out.chords.begin(), out.chords.end());
    out.validate();
    return out;
}

/// Inverse of fold_axial on a single chord of the (k+1)-gon.
inline DiagonalClass unfold_axial_chord(int k, const Chord& c) {
    const int N = 2 * k;
    auto refl = [&](int i) { return (N - 1 - i + N) % N; };
    if (c.b == k) {  // chord at v
        Chord lift(c.a, refl(c.a));
        return {{lift}, "ax:" + lift.str()};
    }
    Chord c1(c.a, c.b), c2(refl(c.a), refl(c.b));
    std::vector<Chord> orbit{c1, c2};
    std::sort(orbit.begin(), orbit.end());
    return {orbit, orbit[0].str() + "/" + orbit[1].str()};
}

/// Central fold: the doubled chord set *is* the punctured-polygon encoding.
inline PuncturedPolygonArrangement fold_central(const PolygonUniverse& central_universe, const IdVec& ids) {
    if (central_universe.symmetry != Symmetry::Central) throw std::invalid_argument("fold: not a central universe");
    PuncturedPolygonArrangement out;
    out.n = central_universe.param;
    out.doubled = central_universe.chord_set(ids);
    out.doubled.validate();
    return out;
}

/// Ribbon graph of the n-gon (counterclockwise boundary 0..n-1) carrying a
/// non-crossing chord set.  Rotations are stored clockwise so faces read off
/// as sigma∘iota orbits; the outer walk is declared.
inline RibbonGraph polygon_ribbon_graph(int n, const std::vector<Chord>& chords,
                                        const std::vector<std::string>& labels = {}) {
    RibbonBuilder rb;
    for (int i = 0; i < n; ++i)
        rb.add_vertex(labels.empty() ? std::to_string(i) : labels[static_cast<std::size_t>(i)]);
    std::vector<int> bd_edge(n);
    for (int i = 0; i < n; ++i) bd_edge[i] = rb.add_edge(i, (i + 1) % n, true);
    std::map<Chord, int> chord_edge;
    for (auto& c : chords) {
        if (!chord_valid(n, c)) throw std::invalid_argument("polygon ribbon: invalid chord " + c.str());
        chord_edge[c] = rb.add_edge(c.a, c.b, false);
    }
    for (int i = 0; i < n; ++i) {
        // clockwise germ order at i: boundary to i-1, partners descending
        // cyclically from i-1 to i+1, boundary to i+1
        std::vector<int> rot;
        rot.push_back(rb.half(bd_edge[(i - 1 + n) % n], i));
        std::vector<int> partners;
        for (auto& [c, e] : chord_edge)
            if (c.a == i || c.b == i) partners.push_back(c.a == i ? c.b : c.a);
        std::sort(partners.begin(), partners.end(), [&](int x, int y) {
            return (i - x + n) % n < (i - y + n) % n;  // descending cyclic order from i-1
        });
        for (int j : partners) rot.push_back(rb.half(chord_edge.at(Chord(i, j)), i));
        rot.push_back(rb.half(bd_edge[i], i));
        rb.set_rotation(i, rot);
    }
    // outer walk traverses boundary edges backwards: half of edge (0,1) at 1
    rb.declare_outer(rb.half(bd_edge[0], 1));
    return rb.build();
}

}  // namespace diagcx
