#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "qd/chartab.hpp"
#include "qd/cyclotomic.hpp"
#include "qd/group.hpp"

namespace qd {

/// Anyon label: conjugacy class index in G plus a row of the character
/// table of the centralizer of that class's canonical representative.
struct AnyonLabel {
    int cls = 0;
    int irrep = 0;
    friend bool operator==(const AnyonLabel& a, const AnyonLabel& b) {
        return a.cls == b.cls && a.irrep == b.irrep;
    }
    friend bool operator!=(const AnyonLabel& a, const AnyonLabel& b) { return !(a == b); }
};

/// Everything needed to evaluate irreducible characters of the quantum
/// double of G: centralizer character tables for each class, canonical
/// conjugators, and the anyon list in its canonical order (classes by
/// minimal representative, irreps in table order). Self-contained copy of
/// the group; immutable after construction.
class DoubleData {
  public:
    explicit DoubleData(const FiniteGroup& group) : g_(group) {
        M_ = g_.exponent();
        const int r = g_.class_count();
        pos_in_class_.assign(static_cast<size_t>(g_.order()), -1);
        for (int c = 0; c < r; ++c) {
            const auto& mem = g_.class_members(c);
            for (size_t i = 0; i < mem.size(); ++i) pos_in_class_[static_cast<size_t>(mem[i])] = static_cast<int>(i);
        }
        gtab_ = character_table(g_);
        cent_.resize(static_cast<size_t>(r));
        anyon_offset_.resize(static_cast<size_t>(r));
        for (int c = 0; c < r; ++c) {
            Cent& z = cent_[static_cast<size_t>(c)];
            const int a = g_.class_rep(c);
            // minimal-index conjugator k_b with k_b a k_b^{-1} = b; k_a = e
            // because the identity is the smallest member of Z(a)
            z.conjugator.resize(g_.class_members(c).size());
            for (size_t i = 0; i < z.conjugator.size(); ++i) {
                int b = g_.class_members(c)[i];
                int k = -1;
                for (int x = 0; x < g_.order(); ++x)
                    if (g_.conj(x, a) == b) { k = x; break; }
                z.conjugator[i] = k;
            }
            std::vector<int> members;
            for (int x = 0; x < g_.order(); ++x)
                if (g_.mul(x, a) == g_.mul(a, x)) members.push_back(x);
            z.order = static_cast<int>(members.size());
            z.pos_in_z.assign(static_cast<size_t>(g_.order()), -1);
            for (size_t i = 0; i < members.size(); ++i) z.pos_in_z[static_cast<size_t>(members[i])] = static_cast<int>(i);
            if (c == 0) {
                z.tab = gtab_;
            } else {
                Subgroup sub(g_, members);
                z.tab = character_table(sub.as_group());
            }
            z.cls_in_z.assign(static_cast<size_t>(g_.order()), -1);
            for (int x = 0; x < g_.order(); ++x)
                if (z.pos_in_z[static_cast<size_t>(x)] >= 0)
                    z.cls_in_z[static_cast<size_t>(x)] = z.tab.class_of(z.pos_in_z[static_cast<size_t>(x)]);
            z.rows_M.resize(static_cast<size_t>(z.tab.irrep_count()));
            for (int i = 0; i < z.tab.irrep_count(); ++i) {
                for (const CycNum& v : z.tab.row(i))
                    z.rows_M[static_cast<size_t>(i)].push_back(v.embedded(M_));
            }
            anyon_offset_[static_cast<size_t>(c)] = static_cast<int>(anyons_.size());
            for (int i = 0; i < z.tab.irrep_count(); ++i) anyons_.push_back({c, i});
        }
    }

    const FiniteGroup& group() const { return g_; }
    const CharacterTable& group_table() const { return gtab_; }
    int modulus() const { return M_; }
    int anyon_count() const { return static_cast<int>(anyons_.size()); }
    const AnyonLabel& anyon(int i) const { return anyons_[static_cast<size_t>(i)]; }
    int anyon_index(const AnyonLabel& x) const { return anyon_offset_[static_cast<size_t>(x.cls)] + x.irrep; }

    const CharacterTable& centralizer_table(int cls) const { return cent_[static_cast<size_t>(cls)].tab; }
    int centralizer_order(int cls) const { return cent_[static_cast<size_t>(cls)].order; }

    long long dim(const AnyonLabel& x) const { return cent_[static_cast<size_t>(x.cls)].tab.degree(x.irrep); }
    long long qdim(const AnyonLabel& x) const { return dim(x) * g_.class_size(x.cls); }
    long long qdim_at(int i) const { return qdim(anyons_[static_cast<size_t>(i)]); }

    /// The vacuum (trivial anyon): class of the identity, trivial irrep.
    int vacuum() const { return 0; }

    /// chi_X(g h^*): zero unless h lies in the class of X and g commutes
    /// with h; otherwise the centralizer character at the conjugated
    /// argument, with the canonical conjugator moving h back to the rep.
    CycNum anyon_character(const AnyonLabel& x, int g, int h) const {
        if (g_.class_of(h) != x.cls) return CycNum(0);
        if (g_.mul(g, h) != g_.mul(h, g)) return CycNum(0);
        const Cent& z = cent_[static_cast<size_t>(x.cls)];
        int k = z.conjugator[static_cast<size_t>(pos_in_class_[static_cast<size_t>(h)])];
        int u = g_.conj(g_.inv(k), g);  // k^{-1} g k
        int cz = z.cls_in_z[static_cast<size_t>(u)];
        if (cz < 0) throw std::logic_error("anyon_character: conjugated argument left the centralizer");
        return z.rows_M[static_cast<size_t>(x.irrep)][static_cast<size_t>(cz)];
    }
    CycNum anyon_character(int i, int g, int h) const { return anyon_character(anyons_[static_cast<size_t>(i)], g, h); }

    /// Topological spin: chi_pi(a) / chi_pi(e), a root of unity.
    CycNum twist(const AnyonLabel& x) const {
        const Cent& z = cent_[static_cast<size_t>(x.cls)];
        int a = g_.class_rep(x.cls);
        CycNum num = z.rows_M[static_cast<size_t>(x.irrep)][static_cast<size_t>(z.cls_in_z[static_cast<size_t>(a)])];
        return num / Rational(dim(x));
    }

    /// Label with the inverse class carrying the transported (and
    /// optionally conjugated) irrep: conjugate_irrep=true gives the charge
    /// conjugate (a^-bar, pi^*), false the partner (a^-bar, pi) used when
    /// pairing Z(G) with its opposite.
    AnyonLabel inverse_partner(const AnyonLabel& x, bool conjugate_irrep) const {
        int c2 = g_.class_of(g_.inv(g_.class_rep(x.cls)));
        const Cent& src = cent_[static_cast<size_t>(x.cls)];
        const Cent& dst = cent_[static_cast<size_t>(c2)];
        // t moves rep(c2) to rep(x.cls)^{-1}; conjugation by t carries
        // Z(rep(c2)) into Z(rep(x.cls)), where the source character lives
        int ainv = g_.inv(g_.class_rep(x.cls));
        int t = dst.conjugator[static_cast<size_t>(pos_in_class_[static_cast<size_t>(ainv)])];
        std::vector<CycNum> values;
        for (int cz = 0; cz < dst.tab.class_count(); ++cz) {
            int u = -1;
            // parent element of the class rep of dst's class cz
            for (int x2 = 0; x2 < g_.order(); ++x2)
                if (dst.pos_in_z[static_cast<size_t>(x2)] == dst.tab.class_rep(cz)) { u = x2; break; }
            int v = g_.conj(t, u);  // t u t^{-1} lies in Z(rep(x.cls))
            int cls_src = src.cls_in_z[static_cast<size_t>(v)];
            if (cls_src < 0) throw std::logic_error("inverse_partner: transport left the centralizer");
            CycNum val = src.tab.value(x.irrep, cls_src);
            values.push_back(conjugate_irrep ? val.conj() : val);
        }
        int row = dst.tab.find_row(values);
        if (row < 0) throw std::logic_error("inverse_partner: transported character is not a table row");
        return {c2, row};
    }

    /// Charge conjugation (a-bar, pi) -> (a-bar^{-1}, pi^*).
    AnyonLabel charge_conjugate(const AnyonLabel& x) const { return inverse_partner(x, true); }

    /// Same class, complex-conjugate irrep: (a-bar, pi) -> (a-bar, pi^*).
    AnyonLabel conjugate_irrep(const AnyonLabel& x) const {
        const Cent& z = cent_[static_cast<size_t>(x.cls)];
        std::vector<CycNum> values;
        for (int c = 0; c < z.tab.class_count(); ++c)
            values.push_back(z.tab.value(x.irrep, c).conj());
        int row = z.tab.find_row(values);
        if (row < 0) throw std::logic_error("conjugate_irrep: conjugate character is not a table row");
        return {x.cls, row};
    }

    /// Charge conjugation as a permutation of anyon indices.
    std::vector<int> conjugation_permutation() const {
        std::vector<int> p;
        for (int i = 0; i < anyon_count(); ++i)
            p.push_back(anyon_index(charge_conjugate(anyons_[static_cast<size_t>(i)])));
        return p;
    }

  private:
    struct Cent {
        int order = 1;
        std::vector<int> pos_in_z, cls_in_z, conjugator;
        CharacterTable tab;
        std::vector<std::vector<CycNum>> rows_M;
    };

    FiniteGroup g_;
    CharacterTable gtab_;
    int M_ = 1;
    std::vector<int> pos_in_class_;
    std::vector<Cent> cent_;
    std::vector<int> anyon_offset_;
    std::vector<AnyonLabel> anyons_;

    friend std::vector<std::vector<CycNum>> s_matrix(const DoubleData&);
};

/// Display names: index-stable, human readable. Groups whose canonical
/// class structure matches the order-6 nonabelian fixture get the
/// traditional letters A..H; everything else gets "(rep, irrep#k)".
inline std::vector<std::string> anyon_display_names(const DoubleData& dd) {
    const FiniteGroup& g = dd.group();
    if (g.order() == 6 && g.class_count() == 3 && g.class_size(1) == 3 && g.class_size(2) == 2 &&
        dd.anyon_count() == 8) {
        return {"A", "B", "C", "D", "E", "F", "G", "H"};
    }
    std::vector<std::string> names;
    for (int i = 0; i < dd.anyon_count(); ++i) {
        const AnyonLabel& x = dd.anyon(i);
        names.push_back("(" + g.name_of(g.class_rep(x.cls)) + ", irrep#" + std::to_string(x.irrep) + ")");
    }
    return names;
}

/// Exact S-matrix, S_{XY} = (1/(|Z(a)||Z(b)|)) sum over h with
/// h b h^{-1} in Z(a) of chi_pi(h b^{-1} h^{-1}) chi_pi'(h^{-1} a^{-1} h).
/// The h-sum depends on the class pair only through the pair of centralizer
/// classes hit, so it is collected once per class pair as a weight matrix.
inline std::vector<std::vector<CycNum>> s_matrix(const DoubleData& dd) {
    const FiniteGroup& g = dd.group();
    const int n = dd.anyon_count();
    const int r = g.class_count();
    std::vector<std::vector<CycNum>> S(static_cast<size_t>(n), std::vector<CycNum>(static_cast<size_t>(n)));
    for (int ca = 0; ca < r; ++ca) {
        const auto& za = dd.cent_[static_cast<size_t>(ca)];
        const int ra = za.tab.class_count();
        const int a_inv = g.inv(g.class_rep(ca));
        for (int cb = 0; cb < r; ++cb) {
            const auto& zb = dd.cent_[static_cast<size_t>(cb)];
            const int rb = zb.tab.class_count();
            const int b_inv = g.inv(g.class_rep(cb));
            std::vector<long long> weight(static_cast<size_t>(ra) * rb, 0);
            for (int h = 0; h < g.order(); ++h) {
                int u = g.conj(h, b_inv);  // h b^{-1} h^{-1}
                int cu = za.cls_in_z[static_cast<size_t>(u)];
                if (cu < 0) continue;
                int v = g.conj(g.inv(h), a_inv);  // h^{-1} a^{-1} h
                int cv = zb.cls_in_z[static_cast<size_t>(v)];
                if (cv < 0) throw std::logic_error("s_matrix: asymmetric centralizer condition");
                ++weight[static_cast<size_t>(cu) * rb + cv];
            }
            Rational scale(1, static_cast<long long>(za.order) * zb.order);
            for (int pa = 0; pa < za.tab.irrep_count(); ++pa)
                for (int pb = 0; pb < zb.tab.irrep_count(); ++pb) {
                    CycNum sum(0);
                    for (int i = 0; i < ra; ++i)
                        for (int j = 0; j < rb; ++j) {
                            long long w = weight[static_cast<size_t>(i) * rb + j];
                            if (!w) continue;
                            sum += CycNum(w) * za.rows_M[static_cast<size_t>(pa)][static_cast<size_t>(i)] *
                                   zb.rows_M[static_cast<size_t>(pb)][static_cast<size_t>(j)];
                        }
                    S[static_cast<size_t>(dd.anyon_index({ca, pa}))][static_cast<size_t>(dd.anyon_index({cb, pb}))] =
                        sum * scale;
                }
        }
    }
    return S;
}

inline std::vector<CycNum> t_vector(const DoubleData& dd) {
    std::vector<CycNum> t;
    for (int i = 0; i < dd.anyon_count(); ++i) t.push_back(dd.twist(dd.anyon(i)));
    return t;
}

/// Fusion multiplicities N_{XY}^Z for one pair (X, Y) through the Verlinde
/// formula; S row 0 is rational so the division happens in Q.
inline std::vector<long long> fusion_row(const DoubleData& dd, const std::vector<std::vector<CycNum>>& S,
                                         int X, int Y) {
    const int n = dd.anyon_count();
    std::vector<CycNum> P(static_cast<size_t>(n));
    for (int u = 0; u < n; ++u) {
        Rational s0 = S[0][static_cast<size_t>(u)].as_rational();
        P[static_cast<size_t>(u)] = S[static_cast<size_t>(X)][static_cast<size_t>(u)] *
                                    S[static_cast<size_t>(Y)][static_cast<size_t>(u)] / s0;
    }
    std::vector<long long> out(static_cast<size_t>(n));
    for (int z = 0; z < n; ++z) {
        CycNum sum(0);
        for (int u = 0; u < n; ++u) sum += P[static_cast<size_t>(u)] * S[static_cast<size_t>(z)][static_cast<size_t>(u)].conj();
        Rational v = sum.as_rational();
        if (!v.is_integer() || v.num() < 0)
            throw std::logic_error("fusion: Verlinde coefficient " + v.str() +
                                   " is not a non-negative integer (S-matrix inconsistency)");
        out[static_cast<size_t>(z)] = v.as_integer();
    }
    return out;
}

/// Dense fusion tensor, N[X][Y][Z]; materialized only up to 64 anyons.
inline std::vector<std::vector<std::vector<long long>>> fusion_tensor(
    const DoubleData& dd, const std::vector<std::vector<CycNum>>& S) {
    const int n = dd.anyon_count();
    if (n > 64)
        throw std::invalid_argument("fusion_tensor: dense tensor limited to 64 anyons; use fusion_row");
    std::vector<std::vector<std::vector<long long>>> N(
        static_cast<size_t>(n), std::vector<std::vector<long long>>(static_cast<size_t>(n)));
    for (int x = 0; x < n; ++x)
        for (int y = x; y < n; ++y) {
            auto row = fusion_row(dd, S, x, y);
            N[static_cast<size_t>(x)][static_cast<size_t>(y)] = row;
            if (y != x) N[static_cast<size_t>(y)][static_cast<size_t>(x)] = std::move(row);
        }
    return N;
}

/// Independent fusion oracle: multiplicities of each Z in X (x) Y computed
/// from the coproduct character sum and the inner product on characters of
/// the double, with no reference to the S-matrix.
inline std::vector<long long> fusion_oracle(const DoubleData& dd, int X, int Y) {
    const FiniteGroup& g = dd.group();
    const int n = g.order();
    // chi_{X(x)Y}(g h^*) = sum_{h1 h2 = h} chi_X(g h1^*) chi_Y(g h2^*)
    std::vector<std::pair<int, int>> pairs;
    std::vector<CycNum> prod_vals;
    for (int a = 0; a < n; ++a)
        for (int h = 0; h < n; ++h) {
            if (g.mul(a, h) != g.mul(h, a)) continue;
            CycNum s(0);
            for (int h1 = 0; h1 < n; ++h1) {
                if (g.mul(a, h1) != g.mul(h1, a)) continue;
                CycNum c1 = dd.anyon_character(X, a, h1);
                if (c1.is_zero()) continue;
                s += c1 * dd.anyon_character(Y, a, g.mul(g.inv(h1), h));
            }
            pairs.push_back({a, h});
            prod_vals.push_back(std::move(s));
        }
    std::vector<long long> out;
    for (int z = 0; z < dd.anyon_count(); ++z) {
        CycNum ip(0);
        for (size_t i = 0; i < pairs.size(); ++i) {
            CycNum cz = dd.anyon_character(z, pairs[i].first, pairs[i].second);
            if (!cz.is_zero()) ip += prod_vals[i] * cz.conj();
        }
        Rational v = (ip / Rational(n)).as_rational();
        if (!v.is_integer() || v.num() < 0)
            throw std::logic_error("fusion_oracle: non-integral multiplicity " + v.str());
        out.push_back(v.as_integer());
    }
    return out;
}

/// Full modular data bundle used by the invariant search and the CLI.
struct ModularData {
    DoubleData dd;
    std::vector<std::vector<CycNum>> S;
    std::vector<CycNum> T;
    std::vector<int> conj_perm;

    explicit ModularData(const FiniteGroup& g)
        : dd(g), S(s_matrix(dd)), T(t_vector(dd)), conj_perm(dd.conjugation_permutation()) {}
};

}  // namespace qd
