#pragma once

#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "diagcx/common.hpp"

namespace diagcx {

/// Marked-surface bookkeeping: genus g, b boundary components with marked
/// points, n free marked points, f punctures, n_i marked points per boundary
/// component.
struct MarkedSurfaceSpec {
    int g = 0, b = 0, n = 0, f = 0;
    std::vector<int> n_i;

    int total_marked() const {
        int N = n;
        for (int k : n_i) N += k;
        return N;
    }

    /// Conservative deny-list of "small" cases that admit no triangulation
    /// with vertices at the marked points.  Extendable via config.
    static std::vector<std::array<int, 4>> default_denied() {
        return {{0, 0, 1, 0}, {0, 0, 2, 0}, {0, 0, 1, 1}, {0, 0, 2, 1}};
    }

    void validate(const std::vector<std::array<int, 4>>& denied = default_denied()) const {
        if (g < 0 || b < 0 || n < 0 || f < 0) throw std::invalid_argument("surface spec: negative datum");
        if (static_cast<int>(n_i.size()) != b) throw std::invalid_argument("surface spec: n_i count != b");
        for (int k : n_i)
            if (k <= 0) throw std::invalid_argument("surface spec: boundary component without marked points is a puncture");
        if (total_marked() < 1) throw std::invalid_argument("surface spec: no marked points");
        for (auto& d : denied)
            if (d[0] == g && d[1] == b && d[2] == n && d[3] == f)
                throw std::invalid_argument("surface spec: excluded small case");
        // disk monogon / unpunctured bigon, punctured monogon
        if (g == 0 && b == 1 && n == 0) {
            if (n_i[0] == 1 && f <= 1) throw std::invalid_argument("surface spec: excluded small case (monogon)");
            if (n_i[0] == 2 && f == 0) throw std::invalid_argument("surface spec: excluded small case (bigon)");
        }
    }
};

/// Rotation system with boundary flags and puncture-to-face assignment.
/// Half-edges are 0..2E-1 with iota(2e) = 2e+1.  sigma is stored so that the
/// face walk is h -> sigma[iota[h]]; for a graph drawn in the plane that
/// makes sigma the clockwise rotation.
class RibbonGraph {
public:
    std::vector<int> sigma, iota;
    std::vector<int> vertex_of;                 // half -> vertex
    std::vector<std::string> vertex_labels;     // per vertex
    std::vector<char> edge_is_boundary;         // per edge (half/2)
    std::map<std::string, int> puncture_face;   // puncture label -> face id
    std::vector<int> declared_outer;            // one half per boundary walk (orbit reps)

    int n_halves() const { return static_cast<int>(sigma.size()); }
    int n_edges() const { return n_halves() / 2; }
    int n_vertices() const { return static_cast<int>(vertex_labels.size()); }
    int edge_of(int h) const { return h / 2; }

    void check_permutations() const {
        const int n = n_halves();
        if (static_cast<int>(iota.size()) != n || static_cast<int>(vertex_of.size()) != n)
            throw std::invalid_argument("ribbon: size mismatch");
        std::vector<char> seen(n, 0);
        for (int h = 0; h < n; ++h) {
            if (sigma[h] < 0 || sigma[h] >= n) throw std::invalid_argument("ribbon: sigma out of range");
            seen[sigma[h]]++;
        }
        for (char c : seen)
            if (c != 1) throw std::invalid_argument("ribbon: sigma not a permutation");
        for (int h = 0; h < n; ++h) {
            if (iota[h] == h || iota[iota[h]] != h)
                throw std::invalid_argument("ribbon: iota not a fixed-point-free involution");
            if (vertex_of[sigma[h]] != vertex_of[h]) throw std::invalid_argument("ribbon: sigma leaves a vertex");
        }
    }

    /// Face id per half via the orbit of h -> sigma[iota[h]].
    std::vector<int> face_of() const {
        const int n = n_halves();
        std::vector<int> face(n, -1);
        int next_id = 0;
        for (int h = 0; h < n; ++h) {
            if (face[h] != -1) continue;
            int x = h;
            while (face[x] == -1) {
                face[x] = next_id;
                x = sigma[iota[x]];
            }
            ++next_id;
        }
        return face;
    }

    int n_faces() const {
        auto f = face_of();
        return f.empty() ? 0 : *std::max_element(f.begin(), f.end()) + 1;
    }

    std::vector<std::vector<int>> face_walks() const {
        auto f = face_of();
        std::vector<std::vector<int>> walks(n_faces());
        std::vector<char> seen(n_halves(), 0);
        for (int h = 0; h < n_halves(); ++h) {
            if (seen[h]) continue;
            int x = h;
            while (!seen[x]) {
                seen[x] = 1;
                walks[f[x]].push_back(x);
                x = sigma[iota[x]];
            }
        }
        return walks;
    }

    std::set<int> outer_faces() const {
        auto f = face_of();
        std::set<int> out;
        for (int h : declared_outer) out.insert(f[h]);
        return out;
    }

    /// Rotation list at a vertex starting from a given half.
    std::vector<int> rotation_at(int vertex, int start_half) const {
        std::vector<int> rot;
        int h = start_half;
        do {
            rot.push_back(h);
            h = sigma[h];
        } while (h != start_half);
        for (int x : rot)
            if (vertex_of[x] != vertex) throw std::invalid_argument("ribbon: rotation start not at vertex");
        return rot;
    }

    int degree(int vertex) const {
        int d = 0;
        for (int h = 0; h < n_halves(); ++h) d += (vertex_of[h] == vertex);
        return d;
    }

    bool vertex_on_boundary(int vertex) const {
        for (int h = 0; h < n_halves(); ++h)
            if (vertex_of[h] == vertex && edge_is_boundary[edge_of(h)]) return true;
        return false;
    }
};

/// Incremental construction: add vertices, edges, then rotations per vertex.
/// For boundary vertices the rotation list must start with the incoming
/// boundary germ and end with the outgoing one; the gap between last and
/// first is the outside of the surface.
class RibbonBuilder {
public:
    int add_vertex(std::string label) {
        labels_.push_back(std::move(label));
        return static_cast<int>(labels_.size()) - 1;
    }

    /// Returns edge id; halves are 2e (at u) and 2e+1 (at v).
    int add_edge(int u, int v, bool boundary) {
        ends_.push_back({u, v});
        boundary_.push_back(boundary);
        return static_cast<int>(ends_.size()) - 1;
    }

    int half(int edge, int endpoint_vertex) const {
        if (ends_[edge].first == endpoint_vertex) return 2 * edge;
        if (ends_[edge].second == endpoint_vertex) return 2 * edge + 1;
        throw std::invalid_argument("ribbon builder: edge not at vertex");
    }

    /// Other half when the edge is a loop and both ends sit at the vertex.
    int half_second(int edge) const { return 2 * edge + 1; }

    void set_rotation(int vertex, std::vector<int> halves) { rotations_[vertex] = std::move(halves); }

    void declare_outer(int h) { outer_.push_back(h); }

    void add_puncture(const std::string& label, int face_witness_half) {
        punctures_.push_back({label, face_witness_half});
    }

    RibbonGraph build() const {
        RibbonGraph rg;
        const int H = 2 * static_cast<int>(ends_.size());
        rg.sigma.assign(H, -1);
        rg.iota.resize(H);
        rg.vertex_of.assign(H, -1);
        rg.vertex_labels = labels_;
        rg.edge_is_boundary.assign(ends_.size(), 0);
        for (std::size_t e = 0; e < ends_.size(); ++e) {
            rg.iota[2 * e] = 2 * static_cast<int>(e) + 1;
            rg.iota[2 * e + 1] = 2 * static_cast<int>(e);
            rg.vertex_of[2 * e] = ends_[e].first;
            rg.vertex_of[2 * e + 1] = ends_[e].second;
            rg.edge_is_boundary[e] = boundary_[e];
        }
        for (auto& [v, rot] : rotations_) {
            if (rot.empty()) throw std::invalid_argument("ribbon builder: empty rotation");
            for (std::size_t i = 0; i < rot.size(); ++i) {
                int h = rot[i], h2 = rot[(i + 1) % rot.size()];
                if (rg.vertex_of[h] != v) throw std::invalid_argument("ribbon builder: rotation half not at vertex");
                rg.sigma[h] = h2;
            }
        }
        for (int h = 0; h < H; ++h)
            if (rg.sigma[h] == -1) throw std::invalid_argument("ribbon builder: missing rotation");
        rg.check_permutations();
        rg.declared_outer = outer_;
        auto face = rg.face_of();
        for (auto& [label, h] : punctures_) rg.puncture_face[label] = face[h];
        return rg;
    }

private:
    std::vector<std::string> labels_;
    std::vector<std::pair<int, int>> ends_;
    std::vector<char> boundary_;
    std::map<int, std::vector<int>> rotations_;
    std::vector<int> outer_;
    std::vector<std::pair<std::string, int>> punctures_;
};

struct AdmissibilityReport {
    bool admissible = true;
    std::vector<std::string> violations;  // condition + offending face/diagonal
    std::vector<std::vector<std::string>> face_punctures;  // per interior face

    void fail(std::string what) {
        admissible = false;
        violations.push_back(std::move(what));
    }
};

/// Derived counts: (genus, interior face count, boundary component count).
struct SurfaceCounts {
    int genus = 0;
    int interior_faces = 0;
    int boundary_components = 0;
};

inline SurfaceCounts genus_and_faces(const RibbonGraph& rg) {
    rg.check_permutations();
    SurfaceCounts sc;
    auto outer = rg.outer_faces();
    int V = rg.n_vertices(), E = rg.n_edges(), F = rg.n_faces();
    int chi_capped = V - E + F;  // boundary walks capped by disks
    if ((2 - chi_capped) % 2 != 0) throw std::invalid_argument("genus_and_faces: inconsistent Euler count");
    sc.genus = (2 - chi_capped) / 2;
    if (sc.genus < 0) throw std::invalid_argument("genus_and_faces: negative genus");
    sc.boundary_components = static_cast<int>(outer.size());
    sc.interior_faces = F - sc.boundary_components;
    return sc;
}

/// Admissibility checks of the arrangement carried by the ribbon graph:
/// free vertices covered, no unpunctured monogon, no unpunctured bigon
/// (parallel diagonals / diagonal parallel to a boundary edge).
inline AdmissibilityReport validate(const RibbonGraph& rg, const MarkedSurfaceSpec& spec) {
    AdmissibilityReport rep;
    rg.check_permutations();
    spec.validate();

    auto outer = rg.outer_faces();
    auto walks = rg.face_walks();
    std::map<int, std::vector<std::string>> punctures_by_face;
    for (auto& [label, f] : rg.puncture_face) punctures_by_face[f].push_back(label);
    if (static_cast<int>(rg.puncture_face.size()) != spec.f)
        rep.fail("puncture count does not match the surface datum");

    // free vertices must meet a diagonal
    int free_count = 0;
    for (int v = 0; v < rg.n_vertices(); ++v) {
        if (rg.vertex_on_boundary(v)) continue;
        ++free_count;
        bool covered = false;
        for (int h = 0; h < rg.n_halves(); ++h)
            if (rg.vertex_of[h] == v && !rg.edge_is_boundary[rg.edge_of(h)]) covered = true;
        if (!covered) rep.fail("free vertex " + rg.vertex_labels[v] + " is not an endpoint of any diagonal");
    }
    if (free_count != spec.n) rep.fail("free vertex count does not match the surface datum");

    // boundary structure: each boundary vertex has exactly two boundary germs
    for (int v = 0; v < rg.n_vertices(); ++v) {
        int bd = 0;
        for (int h = 0; h < rg.n_halves(); ++h)
            if (rg.vertex_of[h] == v && rg.edge_is_boundary[rg.edge_of(h)]) bd++;
        if (bd != 0 && bd != 2) rep.fail("vertex " + rg.vertex_labels[v] + " has " + std::to_string(bd) + " boundary germs");
    }

    // face conditions; faces are disks by construction of the encoding
    for (int f = 0; f < static_cast<int>(walks.size()); ++f) {
        if (outer.count(f)) continue;
        const auto& w = walks[f];
        bool punctured = punctures_by_face.count(f) && !punctures_by_face[f].empty();
        if (w.size() == 1 && !punctured)
            rep.fail("diagonal " + std::to_string(rg.edge_of(w[0])) + " bounds an unpunctured monogon: non-contractible violated");
        if (w.size() == 2 && !punctured) {
            int e1 = rg.edge_of(w[0]), e2 = rg.edge_of(w[1]);
            if (e1 != e2) {
                bool b1 = rg.edge_is_boundary[e1], b2 = rg.edge_is_boundary[e2];
                if (!b1 && !b2)
                    rep.fail("diagonals " + std::to_string(e1) + "," + std::to_string(e2) +
                             " bound an unpunctured bigon: homotopic diagonals");
                else if (b1 != b2)
                    rep.fail("diagonal " + std::to_string(b1 ? e2 : e1) +
                             " is parallel to a boundary edge: homotopic to an edge");
            }
        }
    }
    rep.face_punctures.resize(walks.size());
    for (auto& [f, ps] : punctures_by_face) {
        std::sort(ps.begin(), ps.end());
        rep.face_punctures[f] = ps;
    }

    // Euler relation against the spec
    try {
        auto sc = genus_and_faces(rg);
        if (sc.genus != spec.g) rep.fail("genus mismatch: got " + std::to_string(sc.genus));
        if (sc.boundary_components != spec.b)
            rep.fail("boundary component count mismatch: got " + std::to_string(sc.boundary_components));
    } catch (const std::exception& e) {
        rep.fail(std::string("euler relation: ") + e.what());
    }
    return rep;
}

/// Label-respecting canonical byte string: equal iff there is a
/// combinatorial-map isomorphism preserving vertex labels, boundary flags,
/// per-face puncture multisets and the outer flags.  Orientation preserving:
/// the mirror image is not identified.
inline std::string canonical_form(const RibbonGraph& rg,
                                  const std::map<int, std::string>& edge_colors = {}) {
    rg.check_permutations();
    const int H = rg.n_halves();
    auto face = rg.face_of();
    auto outer = rg.outer_faces();
    std::map<int, std::vector<std::string>> punctures_by_face;
    for (auto& [label, f] : rg.puncture_face) punctures_by_face[f].push_back(label);
    for (auto& [f, v] : punctures_by_face) std::sort(v.begin(), v.end());

    auto half_color = [&](int h) {
        std::string c = "v=" + rg.vertex_labels[rg.vertex_of[h]];
        c += rg.edge_is_boundary[rg.edge_of(h)] ? ";b" : ";d";
        auto it = edge_colors.find(rg.edge_of(h));
        if (it != edge_colors.end()) c += ";c=" + it->second;
        c += outer.count(face[h]) ? ";outer" : ";inner";
        auto pit = punctures_by_face.find(face[h]);
        if (pit != punctures_by_face.end()) {
            c += ";p=";
            for (auto& s : pit->second) c += s + ",";
        }
        return c;
    };

    std::string best;
    for (int start = 0; start < H; ++start) {
        // BFS relabeling generated by sigma and iota
        std::vector<int> code(H, -1);
        std::vector<int> order;
        code[start] = 0;
        order.push_back(start);
        for (std::size_t i = 0; i < order.size(); ++i) {
            int h = order[i];
            for (int nh : {rg.sigma[h], rg.iota[h]}) {
                if (code[nh] == -1) {
                    code[nh] = static_cast<int>(order.size());
                    order.push_back(nh);
                }
            }
        }
        if (static_cast<int>(order.size()) != H) continue;  // disconnected: canonical per component not needed here
        std::ostringstream os;
        for (int h : order) os << code[rg.sigma[h]] << "," << code[rg.iota[h]] << ",[" << half_color(h) << "];";
        std::string s = os.str();
        if (best.empty() || s < best) best = s;
    }
    if (best.empty()) throw std::invalid_argument("canonical_form: disconnected ribbon graph");
    return best;
}

/// Corner = two consecutive germs at a vertex (the pair (h, sigma[h])),
/// excluding the outside gap at boundary vertices.  The corner (h, sigma[h])
/// lies in face_of(sigma[h]).
struct Corner {
    int vertex;
    int germ_a, germ_b;  // sigma[germ_a] == germ_b
};

inline std::vector<Corner> corners(const RibbonGraph& rg) {
    auto face = rg.face_of();
    auto outer = rg.outer_faces();
    std::vector<Corner> out;
    for (int h = 0; h < rg.n_halves(); ++h) {
        int h2 = rg.sigma[h];
        // at boundary vertices the gap step lands in an outer face
        if (outer.count(face[h2]) && rg.edge_is_boundary[rg.edge_of(h)] && rg.edge_is_boundary[rg.edge_of(h2)])
            continue;
        out.push_back({rg.vertex_of[h], h, h2});
    }
    return out;
}

/// Corner count at a vertex per interior face: how often each face passes
/// through the vertex.
inline std::map<int, int> face_corner_counts_at(const RibbonGraph& rg, int vertex) {
    auto face = rg.face_of();
    auto outer = rg.outer_faces();
    std::map<int, int> counts;
    for (auto& c : corners(rg)) {
        if (c.vertex != vertex) continue;
        int f = face[c.germ_b];
        if (outer.count(f)) continue;
        counts[f]++;
    }
    return counts;
}

}  // namespace diagcx
