#pragma once

#include <functional>
#include <map>

#include "diagcx/chords.hpp"
#include "diagcx/poset.hpp"

namespace diagcx {

/// Ordered partition (S_1,...,S_p) of an arrangement into non-empty blocks.
/// The first block is required to be admissible wherever a corpus is
/// available to check against.
struct Label {
    std::vector<IdVec> blocks;  // each sorted

    Label() = default;
    explicit Label(std::vector<IdVec> b) : blocks(std::move(b)) {
        for (auto& blk : blocks) blk = sorted_unique(blk);
    }
    Label(std::initializer_list<IdVec> b) : Label(std::vector<IdVec>(b)) {}

    int n_blocks() const { return static_cast<int>(blocks.size()); }

    IdVec arrangement() const {
        IdVec all;
        for (auto& b : blocks) all = set_union(all, b);
        return all;
    }

    /// Partial unions S_1, S_1∪S_2, ...; the chain in the arrangement poset
    /// this label corresponds to.
    std::vector<IdVec> chain() const {
        std::vector<IdVec> out;
        IdVec acc;
        for (auto& b : blocks) {
            acc = set_union(acc, b);
            out.push_back(acc);
        }
        return out;
    }

    std::string key() const {
        std::string s;
        for (auto& b : blocks) {
            s += "(";
            for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
            s += ")";
        }
        return s;
    }

    bool operator==(const Label& o) const { return blocks == o.blocks; }
    bool operator<(const Label& o) const { return key() < o.key(); }

    void validate_basic() const {
        IdVec seen;
        for (auto& b : blocks) {
            if (b.empty()) throw std::invalid_argument("label: empty block");
            for (int x : b)
                if (contains(seen, x)) throw std::invalid_argument("label: diagonal in two blocks");
            seen = set_union(seen, b);
        }
        if (blocks.empty()) throw std::invalid_argument("label: no blocks");
    }

    /// Reconstruct a label from its chain.
    static Label from_chain(const std::vector<IdVec>& chain) {
        std::vector<IdVec> blocks;
        IdVec prev;
        for (auto& c : chain) {
            blocks.push_back(set_difference(c, prev));
            prev = c;
        }
        return Label(std::move(blocks));
    }
};

/// The generated order of the barycentric complex: L1 <= L2 iff L1 arises
/// from L2 by removing trailing blocks and merging consecutive blocks, i.e.
/// iff the partial-union chain of L1 is a subchain of that of L2.
inline bool leq_labels(const Label& l1, const Label& l2) {
    auto c1 = l1.chain(), c2 = l2.chain();
    std::size_t j = 0;
    for (auto& x : c1) {
        while (j < c2.size() && c2[j] != x) ++j;
        if (j == c2.size()) return false;
        ++j;
    }
    return true;
}

/// All labels strictly below L (plus L itself when with_self): the nonempty
/// subchains of L's chain, i.e. all compositions of trailing truncations and
/// consecutive merges.
inline std::vector<Label> faces(const Label& l, bool with_self = false) {
    auto ch = l.chain();
    const std::size_t p = ch.size();
    std::vector<Label> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << p); ++mask) {
        if (!with_self && mask == (std::uint64_t(1) << p) - 1) continue;
        std::vector<IdVec> sub;
        for (std::size_t i = 0; i < p; ++i)
            if (mask & (std::uint64_t(1) << i)) sub.push_back(ch[i]);
        out.push_back(Label::from_chain(sub));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Validity of a label over an enumerated corpus: every partial union must
/// be an admissible arrangement of the poset (this covers both "S_1 is
/// admissible" and the arrangement itself).
inline void validate_label(const ArrangementPoset& corpus, const Label& l) {
    l.validate_basic();
    for (auto& c : l.chain())
        if (corpus.find(c) < 0) throw std::invalid_argument("label: partial union is not an admissible arrangement");
}

/// The poset of all labels over a diagonal poset together with the
/// simplicial support |BD|.  The empty arrangement never carries a label, so
/// the support is the order complex of the poset minus its empty-arrangement
/// top cell.
struct BdComplex {
    std::vector<Label> labels;
    Poset label_poset;                 // ordered by leq_labels
    SimplicialComplex support;         // = order_complex(D \ {empty})
    std::map<std::string, int> index;  // label key -> id

    int find(const Label& l) const {
        auto it = index.find(l.key());
        return it == index.end() ? -1 : it->second;
    }
};

inline BdComplex bd_complex(const ArrangementPoset& D) {
    BdComplex bd;
    // all ordered set partitions of every non-empty arrangement
    for (const auto& arr : D.arrangements) {
        if (arr.empty()) continue;
        std::vector<IdVec> blocks;
        std::function<void(IdVec)> split = [&](IdVec rest) {
            if (rest.empty()) {
                bd.labels.push_back(Label(blocks));
                return;
            }
            const std::size_t m = rest.size();
            for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << m); ++mask) {
                IdVec blk, rem;
                for (std::size_t i = 0; i < m; ++i)
                    (mask & (std::uint64_t(1) << i) ? blk : rem).push_back(rest[i]);
                blocks.push_back(blk);
                split(rem);
                blocks.pop_back();
            }
        };
        split(arr);
    }
    std::sort(bd.labels.begin(), bd.labels.end());
    for (std::size_t i = 0; i < bd.labels.size(); ++i) bd.index[bd.labels[i].key()] = static_cast<int>(i);

    // covers: drop exactly one chain element
    std::vector<std::pair<int, int>> covers;
    std::vector<std::string> payloads;
    for (auto& l : bd.labels) payloads.push_back(l.key());
    for (std::size_t i = 0; i < bd.labels.size(); ++i) {
        auto ch = bd.labels[i].chain();
        if (ch.size() == 1) continue;
        for (std::size_t k = 0; k < ch.size(); ++k) {
            auto sub = ch;
            sub.erase(sub.begin() + static_cast<long>(k));
            int j = bd.find(Label::from_chain(sub));
            if (j < 0) throw std::logic_error("bd_complex: face of a label is missing");
            covers.push_back({j, static_cast<int>(i)});
        }
    }
    bd.label_poset = Poset(payloads, covers);

    // support: order complex of the poset without the empty-arrangement top
    std::vector<int> keep;
    for (int i = 0; i < D.poset.size(); ++i)
        if (i != D.top) keep.push_back(i);
    bd.support = order_complex(D.poset.restrict_to(keep));
    return bd;
}

/// Face poset of the simplices of a complex, ordered by inclusion; used to
/// compare |BD| with barycentric subdivisions.
inline Poset simplex_face_poset(const SimplicialComplex& K) {
    auto sims = K.simplices_by_dim();
    std::map<std::vector<int>, int> id;
    std::vector<std::string> payloads;
    for (auto& level : sims)
        for (auto& s : level) {
            id[s] = static_cast<int>(payloads.size());
            std::string nm;
            for (int v : s) nm += (nm.empty() ? "" : ",") + std::to_string(v);
            payloads.push_back("{" + nm + "}");
        }
    std::vector<std::pair<int, int>> covers;
    for (auto& [s, i] : id) {
        if (s.size() == 1) continue;
        for (std::size_t k = 0; k < s.size(); ++k) {
            auto t = s;
            t.erase(t.begin() + static_cast<long>(k));
            covers.push_back({id.at(t), i});
        }
    }
    return Poset(payloads, covers);
}

}  // namespace diagcx
