#pragma once

// Finite posets: cover relations, Möbius functions, characteristic
// polynomials, geometric (semi)lattice recognition, isomorphism search
// and DOT output. Meets and joins are computed by brute force; the
// library targets desk-scale posets (a few hundred elements).

#include "poly.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace arimat {

struct PosetIssue {
    std::string axiom;  // e.g. "lattice", "atomic", "semimodular", "G3", "G4"
    std::string detail;
};

struct PosetReport {
    std::vector<PosetIssue> issues;
    bool ok() const { return issues.empty(); }
    std::string summary() const {
        std::string s;
        for (const auto& i : issues) s += "(" + i.axiom + ") " + i.detail + "\n";
        return s;
    }
};

class FinitePoset {
public:
    struct Node {
        std::string id;
        int rank = -1;
    };

    FinitePoset() = default;
    FinitePoset(std::vector<Node> nodes, const std::vector<std::pair<int, int>>& cover_pairs)
        : nodes_(std::move(nodes)) {
        up_.assign(nodes_.size(), {});
        for (auto [a, b] : cover_pairs) up_[a].push_back(b);
        finalize();
    }

    // Build from an explicit order relation; covers are derived.
    static FinitePoset from_leq(std::vector<Node> nodes,
                                const std::vector<std::vector<bool>>& leq) {
        FinitePoset p;
        p.nodes_ = std::move(nodes);
        int n = int(p.nodes_.size());
        p.leq_ = leq;
        p.up_.assign(n, {});
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (a == b || !leq[a][b]) continue;
                bool cover = true;
                for (int z = 0; z < n && cover; ++z)
                    if (z != a && z != b && leq[a][z] && leq[z][b]) cover = false;
                if (cover) p.up_[a].push_back(b);
            }
        p.derive_ranks();
        return p;
    }

    int size() const { return int(nodes_.size()); }
    const Node& node(int i) const { return nodes_[i]; }
    Node& node(int i) { return nodes_[i]; }
    const std::vector<int>& covers_up(int i) const { return up_[i]; }
    bool leq(int a, int b) const { return leq_[a][b]; }
    bool lt(int a, int b) const { return a != b && leq_[a][b]; }

    int index_of(const std::string& id) const {
        for (int i = 0; i < size(); ++i)
            if (nodes_[i].id == id) return i;
        return -1;
    }

    std::optional<int> bottom() const {
        int b = -1;
        for (int i = 0; i < size(); ++i) {
            bool minimal = true;
            for (int j = 0; j < size(); ++j)
                if (lt(j, i)) { minimal = false; break; }
            if (minimal) {
                if (b >= 0) return std::nullopt;
                b = i;
            }
        }
        if (b < 0) return std::nullopt;
        return b;
    }

    std::vector<int> maximal_elements() const {
        std::vector<int> out;
        for (int i = 0; i < size(); ++i) {
            bool maximal = true;
            for (int j = 0; j < size(); ++j)
                if (lt(i, j)) { maximal = false; break; }
            if (maximal) out.push_back(i);
        }
        return out;
    }

    std::vector<int> atoms() const {
        auto b = bottom();
        if (!b) return {};
        return up_[*b];
    }

    bool is_ranked() const { return ranked_; }
    int max_rank() const {
        int r = 0;
        for (const auto& n : nodes_) r = std::max(r, n.rank);
        return r;
    }

    std::optional<int> meet(int a, int b) const {
        return extremum(a, b, /*lower=*/true);
    }
    std::optional<int> join(int a, int b) const {
        return extremum(a, b, /*lower=*/false);
    }
    std::optional<int> join_all(const std::vector<int>& xs) const {
        if (xs.empty()) return bottom();
        // the join of a set: least common upper bound
        std::vector<int> ub;
        for (int z = 0; z < size(); ++z) {
            bool all = true;
            for (int x : xs)
                if (!leq_[x][z]) { all = false; break; }
            if (all) ub.push_back(z);
        }
        int least = -1;
        for (int z : ub) {
            bool is_least = true;
            for (int w : ub)
                if (!leq_[z][w]) { is_least = false; break; }
            if (is_least) { least = z; break; }
        }
        if (least < 0) return std::nullopt;
        return least;
    }

    // Closed interval [a, b] as a poset.
    FinitePoset interval(int a, int b) const {
        std::vector<int> keep;
        for (int z = 0; z < size(); ++z)
            if (leq_[a][z] && leq_[z][b]) keep.push_back(z);
        return subposet(keep);
    }

    FinitePoset subposet(const std::vector<int>& keep) const {
        std::vector<Node> ns;
        for (int z : keep) ns.push_back(nodes_[z]);
        std::vector<std::vector<bool>> sub(keep.size(), std::vector<bool>(keep.size(), false));
        for (size_t i = 0; i < keep.size(); ++i)
            for (size_t j = 0; j < keep.size(); ++j) sub[i][j] = leq_[keep[i]][keep[j]];
        return from_leq(std::move(ns), sub);
    }

private:
    std::optional<int> extremum(int a, int b, bool lower) const {
        std::vector<int> bounds;
        for (int z = 0; z < size(); ++z) {
            bool ok = lower ? (leq_[z][a] && leq_[z][b]) : (leq_[a][z] && leq_[b][z]);
            if (ok) bounds.push_back(z);
        }
        for (int z : bounds) {
            bool extreme = true;
            for (int w : bounds) {
                bool cmp = lower ? leq_[w][z] : leq_[z][w];
                if (!cmp) { extreme = false; break; }
            }
            if (extreme) return z;
        }
        return std::nullopt;
    }

    void finalize() {
        int n = size();
        leq_.assign(n, std::vector<bool>(n, false));
        // transitive closure by DFS; also detects cycles
        for (int i = 0; i < n; ++i) close_from(i, i);
        if (cycle_) throw std::invalid_argument("cover relation has a cycle");
        for (int i = 0; i < n; ++i) leq_[i][i] = true;
        derive_ranks();
    }

    void close_from(int root, int cur) {
        for (int nxt : up_[cur]) {
            if (nxt == root) { cycle_ = true; return; }
            if (!leq_[root][nxt]) {
                leq_[root][nxt] = true;
                close_from(root, nxt);
            }
        }
    }

    void derive_ranks() {
        // ranks supplied by the caller are validated; otherwise propagated
        // from the minimal elements when consistent (+1 along every cover)
        bool given = false;
        for (const auto& nd : nodes_)
            if (nd.rank >= 0) given = true;
        if (given) {
            ranked_ = true;
            for (int i = 0; i < size(); ++i)
                for (int j : up_[i])
                    if (nodes_[j].rank != nodes_[i].rank + 1) ranked_ = false;
            return;
        }
        std::vector<int> rk(size(), -1);
        for (int i = 0; i < size(); ++i) {
            bool minimal = true;
            for (int z = 0; z < size(); ++z)
                if (lt(z, i)) minimal = false;
            if (minimal) rk[i] = 0;
        }
        bool okr = true;
        for (int rounds = 0; rounds < size(); ++rounds)
            for (int i = 0; i < size(); ++i)
                if (rk[i] >= 0)
                    for (int j : up_[i]) {
                        if (rk[j] >= 0 && rk[j] != rk[i] + 1) okr = false;
                        rk[j] = rk[i] + 1;
                    }
        for (int i = 0; i < size(); ++i)
            if (rk[i] < 0) okr = false;
        if (okr)
            for (int i = 0; i < size(); ++i) nodes_[i].rank = rk[i];
        ranked_ = okr;
    }

    std::vector<Node> nodes_;
    std::vector<std::vector<int>> up_;
    std::vector<std::vector<bool>> leq_;
    bool ranked_ = false;
    bool cycle_ = false;
};

// Möbius function by recursive summation with per-call memoization.
inline Int mobius(const FinitePoset& p, int a, int b) {
    if (!p.leq(a, b)) throw std::invalid_argument("mobius: elements are incomparable");
    std::map<int, Int> memo;  // mu(a, z)
    auto rec = [&](auto&& self, int z) -> Int {
        if (z == a) return 1;
        auto it = memo.find(z);
        if (it != memo.end()) return it->second;
        Int acc = 0;
        for (int w = 0; w < p.size(); ++w)
            if (p.leq(a, w) && p.leq(w, z) && w != z) acc += self(self, w);
        Int v = -acc;
        memo[z] = v;
        return v;
    };
    return rec(rec, b);
}

// characteristic polynomial sum_p mu(0,p) t^(r - rk(p))
inline UniPoly char_poly(const FinitePoset& p, int top_rank) {
    auto b = p.bottom();
    if (!b) throw std::invalid_argument("char_poly: poset is not bounded below");
    if (!p.is_ranked()) throw std::invalid_argument("char_poly: poset is not ranked");
    UniPoly out;
    for (int z = 0; z < p.size(); ++z)
        if (p.leq(*b, z)) out.add_term(top_rank - p.node(z).rank, mobius(p, *b, z));
    return out;
}

inline UniPoly char_poly(const FinitePoset& p) { return char_poly(p, p.max_rank()); }

inline PosetReport check_geometric_lattice(const FinitePoset& p) {
    PosetReport rep;
    if (p.size() == 0) {
        rep.issues.push_back({"lattice", "empty poset"});
        return rep;
    }
    if (!p.is_ranked()) rep.issues.push_back({"ranked", "poset is not ranked"});
    for (int a = 0; a < p.size(); ++a)
        for (int b = a + 1; b < p.size(); ++b) {
            if (!p.meet(a, b))
                rep.issues.push_back({"lattice", "no meet of " + p.node(a).id + " and " + p.node(b).id});
            if (!p.join(a, b))
                rep.issues.push_back({"lattice", "no join of " + p.node(a).id + " and " + p.node(b).id});
        }
    if (!rep.ok()) return rep;
    auto bot = p.bottom();
    if (!bot) {
        rep.issues.push_back({"lattice", "no bottom element"});
        return rep;
    }
    auto at = p.atoms();
    for (int z = 0; z < p.size(); ++z) {
        std::vector<int> below;
        for (int a : at)
            if (p.leq(a, z)) below.push_back(a);
        auto j = p.join_all(below);
        if (!j || *j != z) {
            if (z != *bot) rep.issues.push_back({"atomic", p.node(z).id + " is not a join of atoms"});
        }
    }
    if (p.is_ranked())
        for (int a = 0; a < p.size(); ++a)
            for (int b = a + 1; b < p.size(); ++b) {
                auto m = p.meet(a, b), j = p.join(a, b);
                if (m && j) {
                    if (p.node(*j).rank + p.node(*m).rank > p.node(a).rank + p.node(b).rank)
                        rep.issues.push_back({"semimodular",
                                              "rank inequality fails at " + p.node(a).id + ", " + p.node(b).id});
                }
            }
    return rep;
}

// Independent atom sets: the join exists and has rank equal to the size.
inline bool atoms_independent(const FinitePoset& p, const std::vector<int>& atoms) {
    auto j = p.join_all(atoms);
    return j && p.node(*j).rank == int(atoms.size());
}

inline PosetReport check_geometric_semilattice(const FinitePoset& p) {
    PosetReport rep;
    if (p.size() == 0) {
        rep.issues.push_back({"semilattice", "empty poset"});
        return rep;
    }
    if (!p.is_ranked()) {
        rep.issues.push_back({"ranked", "poset is not ranked"});
        return rep;
    }
    if (!p.bottom()) {
        rep.issues.push_back({"semilattice", "no bottom element"});
        return rep;
    }
    for (int a = 0; a < p.size(); ++a)
        for (int b = a + 1; b < p.size(); ++b)
            if (!p.meet(a, b))
                rep.issues.push_back({"semilattice",
                                      "no meet of " + p.node(a).id + " and " + p.node(b).id});
    if (!rep.ok()) return rep;

    // (G3) every interval below a maximal element is a geometric lattice;
    // subintervals of geometric lattices are geometric, so this suffices.
    // The atom bound N is max over maximal intervals (always finite here).
    int bot = *p.bottom();
    for (int m : p.maximal_elements()) {
        FinitePoset iv = p.interval(bot, m);
        PosetReport sub = check_geometric_lattice(iv);
        for (const auto& issue : sub.issues)
            rep.issues.push_back({"G3", "interval below " + p.node(m).id + ": (" + issue.axiom + ") " + issue.detail});
    }

    // (G4) via enumeration over independent atom sets up to the rank bound
    auto at = p.atoms();
    int rank_bound = p.max_rank();
    std::vector<std::vector<int>> independent_sets;
    std::vector<int> cur;
    auto enumerate = [&](auto&& self, size_t start) -> void {
        if (!cur.empty() && !atoms_independent(p, cur)) return;
        if (!cur.empty()) independent_sets.push_back(cur);
        if (int(cur.size()) >= rank_bound) return;
        for (size_t i = start; i < at.size(); ++i) {
            cur.push_back(at[i]);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    enumerate(enumerate, 0);
    for (const auto& a_set : independent_sets) {
        int join_rank = int(a_set.size());
        for (int x = 0; x < p.size(); ++x) {
            if (p.node(x).rank >= join_rank) continue;
            bool found = false;
            for (int a : a_set) {
                if (p.leq(a, x)) continue;
                if (p.join(x, a)) { found = true; break; }
            }
            if (!found) {
                std::string ids;
                for (int a : a_set) ids += (ids.empty() ? "" : ",") + p.node(a).id;
                rep.issues.push_back({"G4", "fails for atoms {" + ids + "} and " + p.node(x).id});
            }
        }
    }

    // cross-check the finite-case equivalent axioms (G1)+(G2);
    // a discrepancy with (G3)+(G4) is a bug, not an input property
    PosetReport alt;
    for (int z = 0; z < p.size(); ++z) {
        std::vector<int> below;
        for (int a : at)
            if (p.leq(a, z)) below.push_back(a);
        auto j = p.join_all(below);
        if ((!j || *j != z) && z != bot)
            alt.issues.push_back({"G1", p.node(z).id + " is not a join of atoms"});
    }
    // (G2) downward closure is built in; check the exchange property
    for (const auto& a_set : independent_sets)
        for (const auto& b_set : independent_sets) {
            if (a_set.size() >= b_set.size()) continue;
            bool found = false;
            for (int b : b_set) {
                if (std::find(a_set.begin(), a_set.end(), b) != a_set.end()) continue;
                std::vector<int> ext = a_set;
                ext.push_back(b);
                std::sort(ext.begin(), ext.end());
                if (atoms_independent(p, ext)) { found = true; break; }
            }
            if (!found) alt.issues.push_back({"G2", "independence exchange fails"});
        }
    if (alt.ok() != rep.ok())
        rep.issues.push_back({"internal", "(G1)+(G2) and (G3)+(G4) verdicts disagree; this is a bug"});
    return rep;
}

// Exact isomorphism search: backtracking over rank levels with
// down-set fingerprints for pruning. Returns the mapping p -> q.
inline std::optional<std::vector<int>> poset_isomorphism(const FinitePoset& p, const FinitePoset& q) {
    int n = p.size();
    if (n != q.size()) return std::nullopt;
    auto fingerprint = [](const FinitePoset& po, int z) {
        int down = 0, up = 0, cov = int(po.covers_up(z).size());
        for (int w = 0; w < po.size(); ++w) {
            if (po.lt(w, z)) ++down;
            if (po.lt(z, w)) ++up;
        }
        return std::tuple<int, int, int, int>(po.node(z).rank, down, up, cov);
    };
    std::vector<std::tuple<int, int, int, int>> fp(n), fq(n);
    for (int i = 0; i < n; ++i) fp[i] = fingerprint(p, i);
    for (int i = 0; i < n; ++i) fq[i] = fingerprint(q, i);
    {
        auto sp = fp, sq = fq;
        std::sort(sp.begin(), sp.end());
        std::sort(sq.begin(), sq.end());
        if (sp != sq) return std::nullopt;
    }
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return fp[a] < fp[b]; });
    std::vector<int> map(n, -1), used(n, 0);
    auto rec = [&](auto&& self, int k) -> bool {
        if (k == n) return true;
        int a = order[k];
        for (int b = 0; b < n; ++b) {
            if (used[b] || fq[b] != fp[a]) continue;
            bool consistent = true;
            for (int k2 = 0; k2 < k && consistent; ++k2) {
                int a2 = order[k2];
                if (p.leq(a, a2) != q.leq(b, map[a2])) consistent = false;
                if (p.leq(a2, a) != q.leq(map[a2], b)) consistent = false;
            }
            if (!consistent) continue;
            map[a] = b;
            used[b] = 1;
            if (self(self, k + 1)) return true;
            map[a] = -1;
            used[b] = 0;
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    return map;
}

// Verify a claimed isomorphism edge by edge.
inline bool verify_poset_isomorphism(const FinitePoset& p, const FinitePoset& q,
                                     const std::vector<int>& map) {
    int n = p.size();
    if (q.size() != n || int(map.size()) != n) return false;
    std::vector<int> seen(n, 0);
    for (int i = 0; i < n; ++i) {
        if (map[i] < 0 || map[i] >= n || seen[map[i]]) return false;
        seen[map[i]] = 1;
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (p.leq(a, b) != q.leq(map[a], map[b])) return false;
    return true;
}

inline std::string hasse_dot(const FinitePoset& p, const std::string& graph_name = "poset") {
    std::ostringstream out;
    out << "digraph " << graph_name << " {\n";
    out << "  rankdir=BT;\n";
    for (int i = 0; i < p.size(); ++i)
        out << "  n" << i << " [label=\"" << p.node(i).id << "\", rank=" << p.node(i).rank << "];\n";
    for (int i = 0; i < p.size(); ++i)
        for (int j : p.covers_up(i)) out << "  n" << i << " -> n" << j << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace arimat
