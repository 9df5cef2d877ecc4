#pragma once

#include <functional>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "diagcx/common.hpp"

namespace diagcx {

/// Simplicial complex stored by facets.  Vertices are 0..n_vertices-1; all
/// simplices are derived as subsets of facets on demand.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    SimplicialComplex(int n_vertices, std::vector<std::vector<int>> facets) : n_vertices_(n_vertices) {
        for (auto& f : facets) {
            auto s = sorted_unique(f);
            for (int v : s)
                if (v < 0 || v >= n_vertices_) throw std::invalid_argument("complex: vertex id out of range");
            facets_.push_back(std::move(s));
        }
        prune_non_maximal();
    }

    int n_vertices() const { return n_vertices_; }
    const std::vector<std::vector<int>>& facets() const { return facets_; }

    int dim() const {
        int d = -1;
        for (auto& f : facets_) d = std::max<int>(d, static_cast<int>(f.size()) - 1);
        return d;
    }

    /// All simplices grouped by dimension, each list sorted lexicographically.
    std::vector<std::vector<std::vector<int>>> simplices_by_dim() const {
        std::set<std::vector<int>> seen;
        for (auto& f : facets_) {
            const std::size_t m = f.size();
            for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << m); ++mask) {
                std::vector<int> s;
                for (std::size_t i = 0; i < m; ++i)
                    if (mask & (std::uint64_t(1) << i)) s.push_back(f[i]);
                seen.insert(std::move(s));
            }
        }
        std::vector<std::vector<std::vector<int>>> out(static_cast<std::size_t>(dim() + 1));
        for (auto& s : seen) out[s.size() - 1].push_back(s);
        return out;
    }

    long long euler_characteristic() const {
        auto sims = simplices_by_dim();
        long long chi = 0;
        for (std::size_t k = 0; k < sims.size(); ++k)
            chi += (k % 2 ? -1 : 1) * static_cast<long long>(sims[k].size());
        return chi;
    }

    bool has_simplex(const std::vector<int>& s) const {
        auto q = sorted_unique(s);
        for (auto& f : facets_)
            if (is_subset(q, f)) return true;
        return false;
    }

    /// Number of connected components of the 1-skeleton (isolated vertices of
    /// the complex count; vertices not in any facet are ignored).
    int n_components() const {
        std::vector<int> parent(n_vertices_);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
        std::vector<char> used(n_vertices_, 0);
        for (auto& f : facets_) {
            for (int v : f) used[v] = 1;
            for (std::size_t i = 1; i < f.size(); ++i) parent[find(f[i])] = find(f[0]);
        }
        std::set<int> roots;
        for (int v = 0; v < n_vertices_; ++v)
            if (used[v]) roots.insert(find(v));
        return static_cast<int>(roots.size());
    }

private:
    void prune_non_maximal() {
        std::sort(facets_.begin(), facets_.end(),
                  [](const auto& a, const auto& b) { return a.size() > b.size(); });
        std::vector<std::vector<int>> keep;
        for (auto& f : facets_) {
            bool contained = false;
            for (auto& g : keep)
                if (is_subset(f, g)) {
                    contained = true;
                    break;
                }
            if (!contained) keep.push_back(f);
        }
        std::sort(keep.begin(), keep.end());
        facets_ = std::move(keep);
    }

    int n_vertices_ = 0;
    std::vector<std::vector<int>> facets_;
};

}  // namespace diagcx
