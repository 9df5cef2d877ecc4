#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <variant>

#include "diagcx/cw.hpp"
#include "diagcx/simplicial.hpp"

namespace diagcx {

using BigInt = boost::multiprecision::cpp_int;

/// Sparse integer matrix with row-major storage plus a column index, geared
/// toward Smith reduction of simplicial boundary operators.
class SparseIntMatrix {
public:
    SparseIntMatrix(int rows, int cols) : rows_(rows), cols_(cols), row_(rows), col_rows_(cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void add(int r, int c, const BigInt& v) {
        if (v == 0) return;
        auto it = row_[r].find(c);
        if (it == row_[r].end()) {
            row_[r][c] = v;
            col_rows_[c].insert(r);
        } else {
            it->second += v;
            if (it->second == 0) {
                row_[r].erase(it);
                col_rows_[c].erase(r);
            }
        }
    }

    void set(int r, int c, const BigInt& v) {
        row_[r].erase(c);
        col_rows_[c].erase(r);
        if (v != 0) {
            row_[r][c] = v;
            col_rows_[c].insert(r);
        }
    }

    BigInt get(int r, int c) const {
        auto it = row_[r].find(c);
        return it == row_[r].end() ? BigInt(0) : it->second;
    }

    long long nnz() const {
        long long k = 0;
        for (auto& r : row_) k += static_cast<long long>(r.size());
        return k;
    }

    // row[r2] += f * row[r1]
    void row_axpy(int r2, int r1, const BigInt& f) {
        if (f == 0) return;
        for (auto& [c, v] : row_[r1]) add(r2, c, f * v);
    }

    // col[c2] += f * col[c1]
    void col_axpy(int c2, int c1, const BigInt& f) {
        if (f == 0) return;
        auto rows_c1 = col_rows_[c1];  // copy: add() mutates
        for (int r : rows_c1) add(r, c2, f * row_[r].at(c1));
    }

    void swap_rows(int a, int b) {
        if (a == b) return;
        std::swap(row_[a], row_[b]);
        for (auto& s : col_rows_) {
            bool ia = s.count(a), ib = s.count(b);
            if (ia == ib) continue;
            if (ia) {
                s.erase(a);
                s.insert(b);
            } else {
                s.erase(b);
                s.insert(a);
            }
        }
    }

    void swap_cols(int a, int b) {
        if (a == b) return;
        for (int r = 0; r < rows_; ++r) {
            auto va = get(r, a), vb = get(r, b);
            if (va == vb) continue;
            set(r, a, vb);
            set(r, b, va);
        }
    }

    const std::map<int, BigInt>& row(int r) const { return row_[r]; }
    const std::set<int>& col_rows(int c) const { return col_rows_[c]; }

private:
    int rows_, cols_;
    std::vector<std::map<int, BigInt>> row_;
    std::vector<std::set<int>> col_rows_;
};

struct SmithResult {
    std::vector<BigInt> invariant_factors;  // nonzero diagonal, divisibility-normalized
    int rank = 0;
};

/// Exact Smith normal form by fraction-free elimination.  Unit pivots are
/// taken first with a Markowitz fill heuristic; leftover entries get the
/// classic gcd reduction.  Arbitrary-precision throughout.
inline SmithResult smith_normal_form(SparseIntMatrix m) {
    std::vector<BigInt> diag;
    std::vector<char> row_done(m.rows(), 0), col_done(m.cols(), 0);

    auto eliminate_with_pivot = [&](int pr, int pc) {
        // pivot must divide everything in its row and column at call time
        BigInt p = m.get(pr, pc);
        auto rows_c = m.col_rows(pc);
        for (int r : rows_c) {
            if (r == pr) continue;
            BigInt q = m.get(r, pc) / p;
            m.row_axpy(r, pr, -q);
        }
        auto row_copy = m.row(pr);
        for (auto& [c, v] : row_copy) {
            if (c == pc) continue;
            BigInt q = v / p;
            m.col_axpy(c, pc, -q);
        }
    };

    // phase 1: unit pivots, cheapest fill first
    while (true) {
        int best_r = -1, best_c = -1;
        long long best_cost = -1;
        for (int r = 0; r < m.rows(); ++r) {
            if (row_done[r]) continue;
            for (auto& [c, v] : m.row(r)) {
                if (col_done[c]) continue;
                if (v == 1 || v == -1) {
                    long long cost = static_cast<long long>(m.row(r).size() - 1) *
                                     static_cast<long long>(m.col_rows(c).size() - 1);
                    if (best_cost < 0 || cost < best_cost) {
                        best_cost = cost;
                        best_r = r;
                        best_c = c;
                        if (cost == 0) break;
                    }
                }
            }
            if (best_cost == 0) break;
        }
        if (best_r < 0) break;
        eliminate_with_pivot(best_r, best_c);
        diag.push_back(1);
        row_done[best_r] = 1;
        col_done[best_c] = 1;
        // clear the pivot row/col so later passes skip it
        auto rc = m.row(best_r);
        for (auto& [c, v] : rc) m.set(best_r, c, 0);
    }

    // phase 2: general pivots with gcd reduction
    while (true) {
        int pr = -1, pc = -1;
        BigInt best;
        for (int r = 0; r < m.rows(); ++r) {
            if (row_done[r]) continue;
            for (auto& [c, v] : m.row(r)) {
                if (col_done[c]) continue;
                BigInt a = abs(v);
                if (pr < 0 || a < best) {
                    best = a;
                    pr = r;
                    pc = c;
                }
            }
        }
        if (pr < 0) break;
        // reduce until pivot divides its row and column
        while (true) {
            BigInt p = m.get(pr, pc);
            bool clean = true;
            auto rows_c = m.col_rows(pc);
            for (int r : rows_c) {
                if (r == pr) continue;
                BigInt v = m.get(r, pc);
                BigInt q = v / p;
                m.row_axpy(r, pr, -q);
                if (m.get(r, pc) != 0) clean = false;
            }
            auto row_copy = m.row(pr);
            for (auto& [c, v] : row_copy) {
                if (c == pc) continue;
                BigInt q = v / p;
                m.col_axpy(c, pc, -q);
                if (m.get(pr, c) != 0) clean = false;
            }
            if (clean) break;
            // move a smaller remainder into the pivot slot
            BigInt small = abs(m.get(pr, pc));
            int nr = pr, nc = pc;
            for (int r : m.col_rows(pc)) {
                BigInt a = abs(m.get(r, pc));
                if (a != 0 && a < small) {
                    small = a;
                    nr = r;
                    nc = pc;
                }
            }
            for (auto& [c, v] : m.row(pr)) {
                BigInt a = abs(v);
                if (a != 0 && a < small) {
                    small = a;
                    nr = pr;
                    nc = c;
                }
            }
            pr = nr;
            pc = nc;
        }
        diag.push_back(abs(m.get(pr, pc)));
        row_done[pr] = 1;
        col_done[pc] = 1;
        auto rc = m.row(pr);
        for (auto& [c, v] : rc) m.set(pr, c, 0);
    }

    // divisibility normalization d1 | d2 | ...
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < diag.size(); ++i)
            for (std::size_t j = i + 1; j < diag.size(); ++j) {
                if (diag[j] % diag[i] == 0) continue;
                BigInt g = gcd(diag[i], diag[j]);
                BigInt l = diag[i] / g * diag[j];
                diag[i] = g;
                diag[j] = l;
                changed = true;
            }
    }
    std::sort(diag.begin(), diag.end());
    SmithResult res;
    res.invariant_factors = std::move(diag);
    res.rank = static_cast<int>(res.invariant_factors.size());
    return res;
}

/// Boundary operators of a simplicial complex, columns indexed by
/// k-simplices and rows by (k-1)-simplices, both in lexicographic order.
struct ChainComplex {
    std::vector<std::vector<std::vector<int>>> simplices;  // by dimension
    std::vector<SparseIntMatrix> boundary;                 // boundary[k] = d_k : C_k -> C_{k-1}, k >= 1

    static ChainComplex from_complex(const SimplicialComplex& K) {
        ChainComplex cc;
        cc.simplices = K.simplices_by_dim();
        std::vector<std::map<std::vector<int>, int>> index(cc.simplices.size());
        for (std::size_t k = 0; k < cc.simplices.size(); ++k)
            for (std::size_t i = 0; i < cc.simplices[k].size(); ++i) index[k][cc.simplices[k][i]] = static_cast<int>(i);
        for (std::size_t k = 1; k < cc.simplices.size(); ++k) {
            SparseIntMatrix d(static_cast<int>(cc.simplices[k - 1].size()), static_cast<int>(cc.simplices[k].size()));
            for (std::size_t j = 0; j < cc.simplices[k].size(); ++j) {
                const auto& s = cc.simplices[k][j];
                int sign = 1;
                for (std::size_t i = 0; i < s.size(); ++i) {
                    auto t = s;
                    t.erase(t.begin() + static_cast<long>(i));
                    d.add(index[k - 1].at(t), static_cast<int>(j), sign);
                    sign = -sign;
                }
            }
            cc.boundary.push_back(std::move(d));
        }
        return cc;
    }

    /// d_k ∘ d_{k+1} = 0 for all k.
    bool boundary_squares_to_zero() const {
        for (std::size_t k = 1; k < boundary.size(); ++k) {
            const auto& a = boundary[k - 1];  // d_k : C_k -> C_{k-1}
            const auto& b = boundary[k];      // d_{k+1} : C_{k+1} -> C_k
            for (int j = 0; j < b.cols(); ++j) {
                std::map<int, BigInt> acc;
                for (int r = 0; r < b.rows(); ++r) {
                    BigInt v = b.get(r, j);
                    if (v == 0) continue;
                    for (int rr : a.col_rows(r)) acc[rr] += v * a.get(rr, r);
                }
                for (auto& [rr, vv] : acc)
                    if (vv != 0) return false;
            }
        }
        return true;
    }
};

struct HomologyReport {
    std::vector<long long> betti;             // unreduced
    std::vector<long long> reduced_betti;     // betti with H0 lowered by one component convention
    std::vector<std::vector<BigInt>> torsion;  // invariant factors > 1, per dimension
    long long euler = 0;

    bool reduced_trivial() const {
        for (auto b : reduced_betti)
            if (b != 0) return false;
        for (auto& t : torsion)
            if (!t.empty()) return false;
        return true;
    }
};

inline HomologyReport homology(const SimplicialComplex& K) {
    auto cc = ChainComplex::from_complex(K);
    const int top = static_cast<int>(cc.simplices.size()) - 1;
    HomologyReport rep;
    if (top < 0) return rep;
    std::vector<int> rank(top + 2, 0);  // rank[k] = rank d_k, with d_0 = d_{top+1} = 0
    std::vector<std::vector<BigInt>> factors(top + 2);
    for (int k = 1; k <= top; ++k) {
        auto res = smith_normal_form(cc.boundary[static_cast<std::size_t>(k - 1)]);
        rank[k] = res.rank;
        factors[k] = res.invariant_factors;
    }
    rep.betti.resize(top + 1);
    rep.torsion.resize(top + 1);
    for (int k = 0; k <= top; ++k) {
        long long nk = static_cast<long long>(cc.simplices[k].size());
        rep.betti[k] = nk - rank[k] - rank[k + 1];
        for (auto& f : factors[k + 1])
            if (f > 1) rep.torsion[k].push_back(f);
        rep.euler += (k % 2 ? -1 : 1) * nk;
    }
    rep.reduced_betti = rep.betti;
    if (!rep.reduced_betti.empty()) rep.reduced_betti[0] -= 1;
    return rep;
}

inline long long euler_characteristic(const SimplicialComplex& K) { return K.euler_characteristic(); }
inline long long euler_characteristic(const CellComplex& K) { return K.euler_characteristic(); }

/// Certificate that a complex is contractible.  Strong form: an acyclic
/// matching with a single critical vertex (found via the cone matching when
/// an apex exists, else greedy collapsing).  Weak form: trivial reduced
/// homology.  Fail: neither.
struct ContractibilityCertificate {
    enum class Kind { Collapsible, HomologyPoint, Fail };
    Kind kind = Kind::Fail;
    DiscreteVectorField field;  // meaningful for Collapsible
    HomologyReport report;      // meaningful for HomologyPoint / Fail

    ContractibilityCertificate() : field(0) {}
};

inline ContractibilityCertificate is_contractible_certificate(const SimplicialComplex& K) {
    ContractibilityCertificate cert;
    std::map<std::vector<int>, int> id;
    auto cc = CellComplex::from_simplicial(K, id);

    auto accept = [&](const DiscreteVectorField& V) {
        auto crit = V.critical_cells();
        if (crit.size() != 1 || cc.dim[crit[0]] != 0) return false;
        if (!check_acyclic(cc, V).acyclic) return false;
        return true;
    };

    if (auto cone = cone_matching(K, cc, id); cone && accept(*cone)) {
        cert.kind = ContractibilityCertificate::Kind::Collapsible;
        cert.field = *cone;
        return cert;
    }
    if (auto greedy = greedy_collapse_field(cc); greedy && accept(*greedy)) {
        cert.kind = ContractibilityCertificate::Kind::Collapsible;
        cert.field = *greedy;
        return cert;
    }
    cert.report = homology(K);
    cert.kind = cert.report.reduced_trivial() ? ContractibilityCertificate::Kind::HomologyPoint
                                              : ContractibilityCertificate::Kind::Fail;
    return cert;
}

}  // namespace diagcx
