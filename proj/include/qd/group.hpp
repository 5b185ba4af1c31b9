#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace qd {

inline constexpr int kDefaultOrderCap = 10000;
inline constexpr int kHardOrderCap = 65535;  // element indices are stored in 16 bits

/// Thrown when a construction would exceed the configured group-order cap.
class OrderCapError : public std::runtime_error {
  public:
    OrderCapError(const std::string& what, long long reached, long long cap)
        : std::runtime_error(what + " (reached order " + std::to_string(reached) +
                             ", cap " + std::to_string(cap) +
                             "; raise the cap to proceed)") {}
};

using Perm = std::vector<int>;

inline Perm perm_compose(const Perm& a, const Perm& b) {
    // (a*b)(i) = a(b(i)): apply b first.
    Perm r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
    return r;
}

inline std::string perm_cycle_str(const Perm& p) {
    std::string s;
    std::vector<bool> seen(p.size(), false);
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == static_cast<int>(i)) continue;
        s += "(";
        size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) s += " ";
            s += std::to_string(j);
            first = false;
            j = static_cast<size_t>(p[j]);
        }
        s += ")";
    }
    return s.empty() ? "e" : s;
}

/// Finite group given by its full multiplication table. Element 0 is always
/// the identity. Conjugacy data is computed once at construction; objects
/// are immutable afterwards and safe to share.
class FiniteGroup {
  public:
    FiniteGroup() = default;

    /// Build from a flat n*n table, table[a*n+b] = a*b. Validates identity,
    /// two-sided inverses, and the Latin-square property (associativity is
    /// exhaustively checkable via check_associativity for small orders).
    static FiniteGroup from_table(int n, std::vector<uint16_t> table,
                                  std::vector<std::string> names = {},
                                  std::vector<int> generators = {}) {
        if (n < 1 || n > kHardOrderCap) throw std::invalid_argument("group: bad order");
        if (static_cast<long long>(table.size()) != static_cast<long long>(n) * n)
            throw std::invalid_argument("group: bad table size");
        FiniteGroup g;
        g.n_ = n;
        g.mul_ = std::move(table);
        g.names_ = std::move(names);
        g.generators_ = std::move(generators);
        g.finish();
        return g;
    }

    int order() const { return n_; }
    int identity() const { return 0; }
    int mul(int a, int b) const { return mul_[static_cast<size_t>(a) * n_ + b]; }
    int inv(int a) const { return inv_[static_cast<size_t>(a)]; }
    int conj(int x, int g) const { return mul(mul(x, g), inv(x)); }  // x g x^{-1}

    int element_order(int a) const { return elt_order_[static_cast<size_t>(a)]; }
    int exponent() const { return exponent_; }
    bool is_abelian() const { return abelian_; }

    const std::vector<int>& generators() const { return generators_; }

    const std::string& name_of(int a) const { return names_[static_cast<size_t>(a)]; }

    // Conjugacy data. Classes are ordered by minimal member; the rep of each
    // class is that minimal member, so class 0 is always {identity}.
    int class_count() const { return static_cast<int>(class_reps_.size()); }
    int class_of(int a) const { return class_of_[static_cast<size_t>(a)]; }
    int class_rep(int c) const { return class_reps_[static_cast<size_t>(c)]; }
    int class_size(int c) const { return static_cast<int>(class_members_[static_cast<size_t>(c)].size()); }
    const std::vector<int>& class_members(int c) const { return class_members_[static_cast<size_t>(c)]; }
    /// Class of the inverses of class c.
    int inverse_class(int c) const { return class_of(inv(class_rep(c))); }

    bool check_associativity() const {
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b)
                for (int c = 0; c < n_; ++c)
                    if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
        return true;
    }

  private:
    void finish() {
        if (names_.empty()) {
            names_.resize(static_cast<size_t>(n_));
            for (int i = 0; i < n_; ++i) names_[static_cast<size_t>(i)] = std::to_string(i);
        }
        if (static_cast<int>(names_.size()) != n_) throw std::invalid_argument("group: bad names size");
        for (int a = 0; a < n_; ++a)
            if (mul(0, a) != a || mul(a, 0) != a)
                throw std::invalid_argument("group: element 0 is not a two-sided identity");
        // Latin square: rows and columns are permutations.
        std::vector<bool> seen(static_cast<size_t>(n_));
        for (int a = 0; a < n_; ++a) {
            std::fill(seen.begin(), seen.end(), false);
            for (int b = 0; b < n_; ++b) {
                int v = mul(a, b);
                if (seen[static_cast<size_t>(v)]) throw std::invalid_argument("group: table row not a permutation");
                seen[static_cast<size_t>(v)] = true;
            }
            std::fill(seen.begin(), seen.end(), false);
            for (int b = 0; b < n_; ++b) {
                int v = mul(b, a);
                if (seen[static_cast<size_t>(v)]) throw std::invalid_argument("group: table column not a permutation");
                seen[static_cast<size_t>(v)] = true;
            }
        }
        inv_.assign(static_cast<size_t>(n_), -1);
        for (int a = 0; a < n_; ++a) {
            for (int b = 0; b < n_; ++b)
                if (mul(a, b) == 0) {
                    if (mul(b, a) != 0) throw std::invalid_argument("group: inverse not two-sided");
                    inv_[static_cast<size_t>(a)] = b;
                    break;
                }
            if (inv_[static_cast<size_t>(a)] < 0) throw std::invalid_argument("group: missing inverse");
        }
        elt_order_.assign(static_cast<size_t>(n_), 1);
        exponent_ = 1;
        for (int a = 0; a < n_; ++a) {
            int x = a, o = 1;
            while (x != 0) { x = mul(x, a); ++o; }
            elt_order_[static_cast<size_t>(a)] = o;
            exponent_ = static_cast<int>(std::lcm(static_cast<long long>(exponent_), static_cast<long long>(o)));
        }
        abelian_ = true;
        for (int a = 0; a < n_ && abelian_; ++a)
            for (int b = a + 1; b < n_; ++b)
                if (mul(a, b) != mul(b, a)) { abelian_ = false; break; }
        // Conjugacy classes, ordered by minimal member.
        class_of_.assign(static_cast<size_t>(n_), -1);
        for (int a = 0; a < n_; ++a) {
            if (class_of_[static_cast<size_t>(a)] >= 0) continue;
            int c = static_cast<int>(class_reps_.size());
            class_reps_.push_back(a);
            std::vector<int> members;
            for (int x = 0; x < n_; ++x) {
                int y = conj(x, a);
                if (class_of_[static_cast<size_t>(y)] < 0) {
                    class_of_[static_cast<size_t>(y)] = c;
                    members.push_back(y);
                }
            }
            std::sort(members.begin(), members.end());
            class_members_.push_back(std::move(members));
        }
        if (generators_.empty() && n_ > 1) generators_ = find_generators();
    }

    std::vector<int> find_generators() const {
        // Greedy deterministic generating set: extend by the smallest element
        // outside the current closure.
        std::vector<int> gens;
        std::vector<bool> in(static_cast<size_t>(n_), false);
        in[0] = true;
        int covered = 1;
        while (covered < n_) {
            int pick = -1;
            for (int a = 1; a < n_; ++a)
                if (!in[static_cast<size_t>(a)]) { pick = a; break; }
            gens.push_back(pick);
            // close up
            std::vector<int> frontier;
            for (int a = 0; a < n_; ++a)
                if (in[static_cast<size_t>(a)]) frontier.push_back(a);
            std::queue<int> q;
            for (int a : frontier) q.push(a);
            if (!in[static_cast<size_t>(pick)]) { in[static_cast<size_t>(pick)] = true; ++covered; q.push(pick); }
            while (!q.empty()) {
                int x = q.front();
                q.pop();
                for (int g : gens) {
                    for (int y : {mul(x, g), mul(g, x)}) {
                        if (!in[static_cast<size_t>(y)]) {
                            in[static_cast<size_t>(y)] = true;
                            ++covered;
                            q.push(y);
                        }
                    }
                }
            }
        }
        return gens;
    }

    int n_ = 1;
    std::vector<uint16_t> mul_ = {0};
    std::vector<int> inv_;
    std::vector<int> generators_;
    std::vector<std::string> names_;
    std::vector<int> class_of_;
    std::vector<int> class_reps_;
    std::vector<std::vector<int>> class_members_;
    std::vector<int> elt_order_;
    int exponent_ = 1;
    bool abelian_ = true;
};

/// Closure of a list of permutations (all on the same number of points)
/// under composition, BFS from the identity with generators applied in
/// input order. Element indices are the BFS discovery order, which makes
/// the numbering reproducible run to run.
inline FiniteGroup closure_from_generators(const std::vector<Perm>& gens,
                                           int cap = kDefaultOrderCap) {
    if (gens.empty()) throw std::invalid_argument("closure: need at least one generator");
    const size_t pts = gens[0].size();
    for (const Perm& g : gens) {
        if (g.size() != pts) throw std::invalid_argument("closure: generators act on different point counts");
        std::vector<bool> seen(pts, false);
        for (int v : g) {
            if (v < 0 || static_cast<size_t>(v) >= pts || seen[static_cast<size_t>(v)])
                throw std::invalid_argument("closure: generator is not a permutation");
            seen[static_cast<size_t>(v)] = true;
        }
    }
    if (cap > kHardOrderCap) cap = kHardOrderCap;
    Perm id(pts);
    std::iota(id.begin(), id.end(), 0);
    std::vector<Perm> elems{id};
    std::map<Perm, int> index{{id, 0}};
    std::queue<int> bfs;
    bfs.push(0);
    while (!bfs.empty()) {
        int i = bfs.front();
        bfs.pop();
        for (const Perm& g : gens) {
            Perm next = perm_compose(elems[static_cast<size_t>(i)], g);
            if (index.emplace(next, static_cast<int>(elems.size())).second) {
                elems.push_back(std::move(next));
                if (static_cast<int>(elems.size()) > cap)
                    throw OrderCapError("closure: group order exceeds cap", static_cast<int>(elems.size()), cap);
                bfs.push(static_cast<int>(elems.size()) - 1);
            }
        }
    }
    const int n = static_cast<int>(elems.size());
    std::vector<uint16_t> table(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            table[static_cast<size_t>(a) * n + b] =
                static_cast<uint16_t>(index.at(perm_compose(elems[static_cast<size_t>(a)], elems[static_cast<size_t>(b)])));
    std::vector<std::string> names(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) names[static_cast<size_t>(i)] = perm_cycle_str(elems[static_cast<size_t>(i)]);
    std::vector<int> gidx;
    for (const Perm& g : gens) gidx.push_back(index.at(g));
    return FiniteGroup::from_table(n, std::move(table), std::move(names), std::move(gidx));
}

inline FiniteGroup cyclic_group(int n, int cap = kDefaultOrderCap) {
    if (n < 1) throw std::invalid_argument("cyclic: order must be positive");
    if (n > cap) throw OrderCapError("cyclic: order exceeds cap", n, cap);
    if (n == 1) return FiniteGroup::from_table(1, {0}, {"e"});
    Perm r(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) r[static_cast<size_t>(i)] = (i + 1) % n;
    return closure_from_generators({r}, cap);
}

inline FiniteGroup dihedral_group(int n, int cap = kDefaultOrderCap) {
    if (n < 3) throw std::invalid_argument("dihedral: need n >= 3");
    if (2 * n > cap) throw OrderCapError("dihedral: order exceeds cap", 2 * n, cap);
    Perm r(static_cast<size_t>(n)), s(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        r[static_cast<size_t>(i)] = (i + 1) % n;
        s[static_cast<size_t>(i)] = (n - i) % n;
    }
    return closure_from_generators({r, s}, cap);
}

inline FiniteGroup symmetric_group(int n, int cap = kDefaultOrderCap) {
    if (n < 2) throw std::invalid_argument("symmetric: need n >= 2");
    Perm t(static_cast<size_t>(n)), c(static_cast<size_t>(n));
    std::iota(t.begin(), t.end(), 0);
    std::swap(t[0], t[1]);
    for (int i = 0; i < n; ++i) c[static_cast<size_t>(i)] = (i + 1) % n;
    if (n == 2) return closure_from_generators({t}, cap);
    return closure_from_generators({t, c}, cap);
}

inline FiniteGroup alternating_group(int n, int cap = kDefaultOrderCap) {
    if (n < 3) throw std::invalid_argument("alternating: need n >= 3");
    Perm three(static_cast<size_t>(n)), c(static_cast<size_t>(n));
    std::iota(three.begin(), three.end(), 0);
    three[0] = 1; three[1] = 2; three[2] = 0;
    std::iota(c.begin(), c.end(), 0);
    if (n % 2 == 1) {
        for (int i = 0; i < n; ++i) c[static_cast<size_t>(i)] = (i + 1) % n;
    } else {
        // fix point 0, cycle the rest
        for (int i = 1; i < n; ++i) c[static_cast<size_t>(i)] = i % (n - 1) + 1;
    }
    if (n == 3) return closure_from_generators({three}, cap);
    return closure_from_generators({three, c}, cap);
}

inline FiniteGroup quaternion_group() {
    // index = sign * 4 + unit, units 1, i, j, k; identity at 0
    static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sgn[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    std::vector<uint16_t> table(64);
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            int s = ((a >> 2) ^ (b >> 2) ^ sgn[a & 3][b & 3]) & 1;
            table[static_cast<size_t>(a) * 8 + b] = static_cast<uint16_t>(s * 4 + unit[a & 3][b & 3]);
        }
    std::vector<std::string> names = {"1", "i", "j", "k", "-1", "-i", "-j", "-k"};
    return FiniteGroup::from_table(8, std::move(table), std::move(names), {1, 2});
}

/// Subgroup of a parent group, stored as the sorted member list plus the
/// parent-index -> position map. The parent must outlive the subgroup.
class Subgroup {
  public:
    Subgroup() = default;
    Subgroup(const FiniteGroup& parent, std::vector<int> members) : parent_(&parent) {
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        members_ = std::move(members);
        pos_.assign(static_cast<size_t>(parent.order()), -1);
        for (size_t i = 0; i < members_.size(); ++i) pos_[static_cast<size_t>(members_[i])] = static_cast<int>(i);
        if (members_.empty() || members_[0] != 0)
            throw std::invalid_argument("subgroup: must contain the identity");
        for (int a : members_)
            for (int b : members_)
                if (!contains(parent.mul(a, b)))
                    throw std::invalid_argument("subgroup: member set not closed under multiplication");
    }

    const FiniteGroup& parent() const { return *parent_; }
    int order() const { return static_cast<int>(members_.size()); }
    const std::vector<int>& members() const { return members_; }
    int member(int i) const { return members_[static_cast<size_t>(i)]; }
    bool contains(int parent_idx) const { return pos_[static_cast<size_t>(parent_idx)] >= 0; }
    int position(int parent_idx) const { return pos_[static_cast<size_t>(parent_idx)]; }

    /// The subgroup as a standalone group; element i is members()[i].
    FiniteGroup as_group() const {
        const int k = order();
        std::vector<uint16_t> table(static_cast<size_t>(k) * k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                int v = position(parent_->mul(member(i), member(j)));
                if (v < 0) throw std::logic_error("subgroup: closure violated");
                table[static_cast<size_t>(i) * k + j] = static_cast<uint16_t>(v);
            }
        std::vector<std::string> names(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) names[static_cast<size_t>(i)] = parent_->name_of(member(i));
        return FiniteGroup::from_table(k, std::move(table), std::move(names));
    }

  private:
    const FiniteGroup* parent_ = nullptr;
    std::vector<int> members_;
    std::vector<int> pos_;
};

/// Smallest subgroup containing the seed elements.
inline Subgroup subgroup_closure(const FiniteGroup& g, const std::vector<int>& seeds) {
    std::vector<bool> in(static_cast<size_t>(g.order()), false);
    std::vector<int> members{0};
    in[0] = true;
    std::queue<int> q;
    q.push(0);
    for (int s : seeds) {
        if (s < 0 || s >= g.order()) throw std::invalid_argument("subgroup_closure: bad seed");
        if (!in[static_cast<size_t>(s)]) {
            in[static_cast<size_t>(s)] = true;
            members.push_back(s);
            q.push(s);
        }
    }
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int s : seeds) {
            for (int y : {g.mul(x, s), g.mul(s, x)}) {
                if (!in[static_cast<size_t>(y)]) {
                    in[static_cast<size_t>(y)] = true;
                    members.push_back(y);
                    q.push(y);
                }
            }
        }
    }
    return Subgroup(g, std::move(members));
}

inline Subgroup centralizer(const FiniteGroup& g, int a) {
    std::vector<int> members;
    for (int x = 0; x < g.order(); ++x)
        if (g.mul(x, a) == g.mul(a, x)) members.push_back(x);
    return Subgroup(g, std::move(members));
}

inline Subgroup center(const FiniteGroup& g) {
    std::vector<int> members;
    for (int x = 0; x < g.order(); ++x) {
        bool central = true;
        for (int y = 0; y < g.order() && central; ++y)
            if (g.mul(x, y) != g.mul(y, x)) central = false;
        if (central) members.push_back(x);
    }
    return Subgroup(g, std::move(members));
}

inline bool is_normal(const FiniteGroup& g, const Subgroup& h) {
    for (int x = 0; x < g.order(); ++x)
        for (int m : h.members())
            if (!h.contains(g.conj(x, m))) return false;
    return true;
}

/// Quotient G/H for normal H: the quotient group plus the projection map
/// from parent indices to quotient indices. Cosets are ordered by their
/// minimal member, so the identity coset is element 0.
struct Quotient {
    FiniteGroup group;
    std::vector<int> projection;
};

inline Quotient quotient_map(const FiniteGroup& g, const Subgroup& h) {
    if (!is_normal(g, h)) throw std::invalid_argument("quotient: subgroup is not normal");
    std::vector<int> coset_of(static_cast<size_t>(g.order()), -1);
    std::vector<int> coset_rep;
    for (int x = 0; x < g.order(); ++x) {
        if (coset_of[static_cast<size_t>(x)] >= 0) continue;
        int c = static_cast<int>(coset_rep.size());
        coset_rep.push_back(x);
        for (int m : h.members()) coset_of[static_cast<size_t>(g.mul(x, m))] = c;
    }
    const int q = static_cast<int>(coset_rep.size());
    std::vector<uint16_t> table(static_cast<size_t>(q) * q);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            table[static_cast<size_t>(a) * q + b] =
                static_cast<uint16_t>(coset_of[static_cast<size_t>(g.mul(coset_rep[static_cast<size_t>(a)], coset_rep[static_cast<size_t>(b)]))]);
    std::vector<std::string> names(static_cast<size_t>(q));
    for (int i = 0; i < q; ++i) names[static_cast<size_t>(i)] = g.name_of(coset_rep[static_cast<size_t>(i)]) + "H";
    return {FiniteGroup::from_table(q, std::move(table), std::move(names)), std::move(coset_of)};
}

/// Direct product with the componentwise index convention
/// (a, b) -> a * |right| + b, so projections are divmod.
struct DirectProduct {
    FiniteGroup group;
    int left_order = 1;
    int right_order = 1;
    int encode(int a, int b) const { return a * right_order + b; }
    std::pair<int, int> decode(int x) const { return {x / right_order, x % right_order}; }
};

inline DirectProduct direct_product(const FiniteGroup& a, const FiniteGroup& b,
                                    int cap = kDefaultOrderCap) {
    long long n = static_cast<long long>(a.order()) * b.order();
    if (cap > kHardOrderCap) cap = kHardOrderCap;
    if (n > cap) throw OrderCapError("direct_product: order exceeds cap", n, cap);
    const int nb = b.order(), nn = static_cast<int>(n);
    std::vector<uint16_t> table(static_cast<size_t>(nn) * nn);
    for (int x = 0; x < nn; ++x) {
        int xa = x / nb, xb = x % nb;
        uint16_t* row = table.data() + static_cast<size_t>(x) * nn;
        for (int y = 0; y < nn; ++y)
            row[y] = static_cast<uint16_t>(a.mul(xa, y / nb) * nb + b.mul(xb, y % nb));
    }
    std::vector<std::string> names(static_cast<size_t>(nn));
    for (int x = 0; x < nn; ++x)
        names[static_cast<size_t>(x)] = "(" + a.name_of(x / nb) + "," + b.name_of(x % nb) + ")";
    std::vector<int> gens;
    for (int g : a.generators()) gens.push_back(g * nb);
    for (int g : b.generators()) gens.push_back(g);
    return {FiniteGroup::from_table(nn, std::move(table), std::move(names), std::move(gens)),
            a.order(), b.order()};
}

namespace detail {

// Expression of every element as a word in the generators: elem i is
// reached as parent * gens[via], discovered by BFS in index-sorted order.
struct WordTree {
    std::vector<int> order_visited;  // BFS order, starts with identity
    std::vector<int> parent;         // -1 for identity
    std::vector<int> via;            // generator index used
};

inline WordTree word_tree(const FiniteGroup& g, const std::vector<int>& gens) {
    WordTree t;
    t.parent.assign(static_cast<size_t>(g.order()), -2);
    t.via.assign(static_cast<size_t>(g.order()), -1);
    t.parent[0] = -1;
    t.order_visited.push_back(0);
    std::queue<int> q;
    q.push(0);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (size_t gi = 0; gi < gens.size(); ++gi) {
            int y = g.mul(x, gens[gi]);
            if (t.parent[static_cast<size_t>(y)] != -2) continue;
            t.parent[static_cast<size_t>(y)] = x;
            t.via[static_cast<size_t>(y)] = static_cast<int>(gi);
            t.order_visited.push_back(y);
            q.push(y);
        }
    }
    if (t.order_visited.size() != static_cast<size_t>(g.order()))
        throw std::logic_error("word_tree: generators do not generate the group");
    return t;
}

}  // namespace detail

/// Isomorphism search. Returns an index map a -> b with
/// map[mul_a(x,y)] = mul_b(map[x], map[y]), or nullopt when no isomorphism
/// exists. Candidate generator images are pruned by (element order,
/// conjugacy class size) fingerprints, then each assignment is extended
/// through the word tree and verified on the full table.
inline std::optional<std::vector<int>> is_isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
    if (a.order() != b.order()) return std::nullopt;
    if (a.order() == 1) return std::vector<int>{0};
    // quick invariants
    auto fingerprint = [](const FiniteGroup& g) {
        std::map<std::pair<int, int>, int> f;
        for (int x = 0; x < g.order(); ++x)
            ++f[{g.element_order(x), g.class_size(g.class_of(x))}];
        return f;
    };
    if (fingerprint(a) != fingerprint(b)) return std::nullopt;

    std::vector<int> gens = a.generators();
    detail::WordTree tree = detail::word_tree(a, gens);

    std::vector<std::vector<int>> candidates(gens.size());
    for (size_t i = 0; i < gens.size(); ++i) {
        int x = gens[i];
        for (int y = 0; y < b.order(); ++y)
            if (a.element_order(x) == b.element_order(y) &&
                a.class_size(a.class_of(x)) == b.class_size(b.class_of(y)))
                candidates[i].push_back(y);
        if (candidates[i].empty()) return std::nullopt;
    }

    std::vector<int> choice(gens.size(), 0);
    std::vector<int> map(static_cast<size_t>(a.order()));
    auto try_assignment = [&]() -> bool {
        std::vector<bool> used(static_cast<size_t>(b.order()), false);
        map[0] = 0;
        used[0] = true;
        for (size_t i = 1; i < tree.order_visited.size(); ++i) {
            int x = tree.order_visited[i];
            int px = tree.parent[static_cast<size_t>(x)];
            int img = b.mul(map[static_cast<size_t>(px)],
                            candidates[static_cast<size_t>(tree.via[static_cast<size_t>(x)])]
                                      [static_cast<size_t>(choice[static_cast<size_t>(tree.via[static_cast<size_t>(x)])])]);
            if (used[static_cast<size_t>(img)]) return false;
            used[static_cast<size_t>(img)] = true;
            map[static_cast<size_t>(x)] = img;
        }
        for (int x = 0; x < a.order(); ++x)
            for (int y = 0; y < a.order(); ++y)
                if (map[static_cast<size_t>(a.mul(x, y))] !=
                    b.mul(map[static_cast<size_t>(x)], map[static_cast<size_t>(y)]))
                    return false;
        return true;
    };

    // odometer over candidate tuples
    while (true) {
        if (try_assignment()) return map;
        size_t k = 0;
        while (k < gens.size()) {
            if (++choice[k] < static_cast<int>(candidates[k].size())) break;
            choice[k] = 0;
            ++k;
        }
        if (k == gens.size()) return std::nullopt;
    }
}

}  // namespace qd
