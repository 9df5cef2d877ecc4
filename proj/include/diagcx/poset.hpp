#pragma once

#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "diagcx/common.hpp"
#include "diagcx/simplicial.hpp"

namespace diagcx {

/// Finite poset given by elements with opaque payloads and a transitively
/// reduced cover relation (a,b) = "a is covered by b".  Reachability is
/// cached as bitsets, so leq() is O(1) after construction.
class Poset {
public:
    Poset() = default;

    Poset(std::vector<std::string> payloads, std::vector<std::pair<int, int>> covers)
        : payloads_(std::move(payloads)), covers_(std::move(covers)) {
        const int n = size();
        up_.assign(n, Bitset(words(n)));
        for (auto [a, b] : covers_) {
            check_id(a);
            check_id(b);
            if (a == b) throw std::invalid_argument("poset: cover loop");
        }
        build_reachability();
        reduce_covers();
    }

    int size() const { return static_cast<int>(payloads_.size()); }
    const std::string& payload(int i) const {
        check_id(i);
        return payloads_[i];
    }
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }

    bool leq(int a, int b) const {
        check_id(a);
        check_id(b);
        return a == b || get(up_[a], b);
    }

    std::vector<int> upper_covers(int a) const {
        check_id(a);
        std::vector<int> out;
        for (auto [x, y] : covers_)
            if (x == a) out.push_back(y);
        std::sort(out.begin(), out.end());
        return out;
    }

    std::vector<int> lower_covers(int b) const {
        check_id(b);
        std::vector<int> out;
        for (auto [x, y] : covers_)
            if (y == b) out.push_back(x);
        std::sort(out.begin(), out.end());
        return out;
    }

    std::vector<int> minimal_elements() const {
        std::vector<char> has_lower(size(), 0);
        for (auto [a, b] : covers_) has_lower[b] = 1;
        std::vector<int> out;
        for (int i = 0; i < size(); ++i)
            if (!has_lower[i]) out.push_back(i);
        return out;
    }

    std::vector<int> maximal_elements() const {
        std::vector<char> has_upper(size(), 0);
        for (auto [a, b] : covers_) has_upper[a] = 1;
        std::vector<int> out;
        for (int i = 0; i < size(); ++i)
            if (!has_upper[i]) out.push_back(i);
        return out;
    }

    /// Longest cover-chain ending at each element (height), used as the
    /// default rank for DOT export.
    std::vector<int> heights() const {
        std::vector<int> h(size(), 0);
        for (int v : topo_order()) {
            for (int u : lower_covers(v)) h[v] = std::max(h[v], h[u] + 1);
        }
        return h;
    }

    std::vector<int> topo_order() const {
        const int n = size();
        std::vector<int> indeg(n, 0), order;
        for (auto [a, b] : covers_) indeg[b]++;
        std::vector<int> q;
        for (int i = 0; i < n; ++i)
            if (!indeg[i]) q.push_back(i);
        while (!q.empty()) {
            std::sort(q.begin(), q.end(), std::greater<int>());
            int v = q.back();
            q.pop_back();
            order.push_back(v);
            for (int w : upper_covers(v))
                if (--indeg[w] == 0) q.push_back(w);
        }
        if (static_cast<int>(order.size()) != n) throw std::invalid_argument("poset: cover digraph has a cycle");
        return order;
    }

    /// Induced subposet on the given (sorted) element ids.
    Poset restrict_to(const std::vector<int>& keep) const {
        std::vector<int> idx(size(), -1);
        std::vector<std::string> pl;
        for (std::size_t i = 0; i < keep.size(); ++i) {
            check_id(keep[i]);
            idx[keep[i]] = static_cast<int>(i);
            pl.push_back(payloads_[keep[i]]);
        }
        // covers of the induced order, then re-reduced in the ctor
        std::vector<std::pair<int, int>> cv;
        for (std::size_t i = 0; i < keep.size(); ++i)
            for (std::size_t j = 0; j < keep.size(); ++j) {
                if (i == j) continue;
                if (!leq(keep[i], keep[j])) continue;
                bool covered = true;
                for (std::size_t k = 0; k < keep.size(); ++k) {
                    if (k == i || k == j) continue;
                    if (leq(keep[i], keep[k]) && leq(keep[k], keep[j])) {
                        covered = false;
                        break;
                    }
                }
                if (covered) cv.push_back({static_cast<int>(i), static_cast<int>(j)});
            }
        return Poset(pl, cv);
    }

    std::string dot(const std::string& name = "poset") const {
        auto h = heights();
        std::ostringstream os;
        os << "digraph " << name << " {\n  rankdir=BT;\n";
        std::map<int, std::vector<int>> by_rank;
        for (int i = 0; i < size(); ++i) {
            os << "  n" << i << " [label=\"" << payloads_[i] << "\"];\n";
            by_rank[h[i]].push_back(i);
        }
        for (auto& [r, v] : by_rank) {
            os << "  { rank=same;";
            for (int i : v) os << " n" << i << ";";
            os << " }\n";
        }
        for (auto [a, b] : covers_) os << "  n" << a << " -> n" << b << ";\n";
        os << "}\n";
        return os.str();
    }

private:
    using Bitset = std::vector<std::uint64_t>;
    static std::size_t words(int n) { return static_cast<std::size_t>((n + 63) / 64); }
    static bool get(const Bitset& bs, int i) { return (bs[i >> 6] >> (i & 63)) & 1; }
    static void set(Bitset& bs, int i) { bs[i >> 6] |= std::uint64_t(1) << (i & 63); }

    void check_id(int i) const {
        if (i < 0 || i >= size()) throw std::out_of_range("poset: unknown element id");
    }

    void build_reachability() {
        // reverse topological sweep: up_[a] = union of up_[b] over covers a<b
        auto order = topo_order();
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            int a = *it;
            for (int b : upper_covers(a)) {
                set(up_[a], b);
                for (std::size_t w = 0; w < up_[a].size(); ++w) up_[a][w] |= up_[b][w];
            }
        }
    }

    void reduce_covers() {
        std::vector<std::pair<int, int>> reduced;
        for (auto [a, b] : covers_) {
            bool implied = false;
            for (int c : upper_covers(a)) {
                if (c != b && get(up_[c], b)) {
                    implied = true;
                    break;
                }
            }
            if (!implied) reduced.push_back({a, b});
        }
        std::sort(reduced.begin(), reduced.end());
        reduced.erase(std::unique(reduced.begin(), reduced.end()), reduced.end());
        covers_ = std::move(reduced);
    }

    std::vector<std::string> payloads_;
    std::vector<std::pair<int, int>> covers_;
    std::vector<Bitset> up_;
};

/// Order complex: vertices = poset elements, simplices = chains, facets =
/// maximal chains.  Realizes the barycentric subdivision of the complex the
/// poset describes.
inline SimplicialComplex order_complex(const Poset& p) {
    std::vector<std::vector<int>> facets;
    std::vector<int> chain;
    // DFS over saturated chains from minimal elements
    std::function<void(int)> grow = [&](int v) {
        chain.push_back(v);
        auto up = p.upper_covers(v);
        if (up.empty()) {
            facets.push_back(chain);
        } else {
            for (int w : up) grow(w);
        }
        chain.pop_back();
    };
    for (int m : p.minimal_elements()) grow(m);
    return SimplicialComplex(p.size(), facets);
}

/// Count of elements per rank, low to high.  rank must be monotone along
/// covers and rank values must start at the minimum present.
inline std::vector<int> graded_f_vector(const Poset& p, const std::vector<int>& rank) {
    if (static_cast<int>(rank.size()) != p.size()) throw std::invalid_argument("graded_f_vector: rank size mismatch");
    for (auto [a, b] : p.covers())
        if (rank[a] >= rank[b]) throw std::invalid_argument("graded_f_vector: rank not monotone along covers");
    if (p.size() == 0) return {};
    int lo = *std::min_element(rank.begin(), rank.end());
    int hi = *std::max_element(rank.begin(), rank.end());
    std::vector<int> f(hi - lo + 1, 0);
    for (int r : rank) f[r - lo]++;
    return f;
}

/// Order isomorphism search: iterated invariant refinement on the cover
/// digraph followed by backtracking inside refinement classes.  Payloads are
/// ignored unless respect_payloads is set.
class PosetIsomorphism {
public:
    static std::optional<std::vector<int>> find(const Poset& p, const Poset& q, bool respect_payloads = false) {
        if (p.size() != q.size()) return std::nullopt;
        const int n = p.size();
        if (n == 0) return std::vector<int>{};

        auto colors_p = refine(p, respect_payloads);
        auto colors_q = refine(q, respect_payloads);
        // color histograms must agree
        std::map<std::uint64_t, int> hp, hq;
        for (auto c : colors_p) hp[c]++;
        for (auto c : colors_q) hq[c]++;
        if (hp != hq) return std::nullopt;

        // candidate targets per element, smallest class first
        std::vector<std::vector<int>> cand(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (colors_p[i] == colors_q[j]) cand[i].push_back(j);
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return cand[a].size() < cand[b].size(); });

        std::vector<int> map_pq(n, -1), used(n, 0);
        if (extend(p, q, order, cand, 0, map_pq, used)) return map_pq;
        return std::nullopt;
    }

private:
    static std::vector<std::uint64_t> refine(const Poset& p, bool respect_payloads) {
        const int n = p.size();
        std::vector<std::uint64_t> color(n);
        // initial invariant: (height, depth, up/down cover degree, payload?)
        auto h = p.heights();
        std::vector<int> depth(n, 0);
        {
            auto order = p.topo_order();
            for (auto it = order.rbegin(); it != order.rend(); ++it)
                for (int w : p.upper_covers(*it)) depth[*it] = std::max(depth[*it], depth[w] + 1);
        }
        // up-set / down-set sizes
        std::vector<int> upsz(n, 0), dnsz(n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                if (p.leq(i, j)) {
                    upsz[i]++;
                    dnsz[j]++;
                }
            }
        for (int i = 0; i < n; ++i) {
            std::string key = std::to_string(h[i]) + "|" + std::to_string(depth[i]) + "|" +
                              std::to_string(p.upper_covers(i).size()) + "|" +
                              std::to_string(p.lower_covers(i).size()) + "|" + std::to_string(upsz[i]) +
                              "|" + std::to_string(dnsz[i]);
            if (respect_payloads) key += "|" + p.payload(i);
            color[i] = fnv1a(key);
        }
        // refine by multiset of neighbor colors until stable
        for (int round = 0; round < n; ++round) {
            std::vector<std::uint64_t> next(n);
            bool changed = false;
            for (int i = 0; i < n; ++i) {
                std::vector<std::uint64_t> up, dn;
                for (int w : p.upper_covers(i)) up.push_back(color[w]);
                for (int w : p.lower_covers(i)) dn.push_back(color[w]);
                std::sort(up.begin(), up.end());
                std::sort(dn.begin(), dn.end());
                std::uint64_t hsh = color[i];
                for (auto c : up) hsh = hash_combine(hsh, c ^ 0xabcdef);
                for (auto c : dn) hsh = hash_combine(hsh, c ^ 0x123456);
                next[i] = hsh;
            }
            std::map<std::uint64_t, int> before, after;
            for (auto c : color) before[c]++;
            for (auto c : next) after[c]++;
            changed = before.size() != after.size();
            color = std::move(next);
            if (!changed && round > 1) break;
        }
        return color;
    }

    static bool extend(const Poset& p, const Poset& q, const std::vector<int>& order,
                       const std::vector<std::vector<int>>& cand, std::size_t k, std::vector<int>& map_pq,
                       std::vector<int>& used) {
        if (k == order.size()) return true;
        int a = order[k];
        for (int b : cand[a]) {
            if (used[b]) continue;
            bool ok = true;
            for (std::size_t t = 0; t < k && ok; ++t) {
                int a2 = order[t], b2 = map_pq[a2];
                if (p.leq(a, a2) != q.leq(b, b2) || p.leq(a2, a) != q.leq(b2, b)) ok = false;
            }
            if (!ok) continue;
            map_pq[a] = b;
            used[b] = 1;
            if (extend(p, q, order, cand, k + 1, map_pq, used)) return true;
            map_pq[a] = -1;
            used[b] = 0;
        }
        return false;
    }
};

inline std::optional<std::vector<int>> poset_isomorphism(const Poset& p, const Poset& q,
                                                         bool respect_payloads = false) {
    return PosetIsomorphism::find(p, q, respect_payloads);
}

}  // namespace diagcx
