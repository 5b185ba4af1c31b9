#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qd/cyclotomic.hpp"
#include "qd/gf.hpp"
#include "qd/group.hpp"
#include "qd/qdouble.hpp"
#include "qd/rational.hpp"

namespace qd {

/// Orbits of commuting ordered pairs (g, h) under simultaneous
/// conjugation. Anyon characters and twisted-algebra characters are
/// constant on these orbits, so expensive evaluations happen once per
/// orbit; the orbit count equals the anyon count.
struct CommutingOrbits {
    int count = 0;
    std::vector<std::pair<int, int>> rep;  // lex-minimal member of each orbit
    std::vector<long long> size;
    std::vector<int> orbit_of;  // g * order + h, -1 when g and h do not commute
};

inline CommutingOrbits commuting_orbits(const FiniteGroup& g) {
    const int n = g.order();
    CommutingOrbits o;
    o.orbit_of.assign(static_cast<size_t>(n) * n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (g.mul(a, b) != g.mul(b, a)) continue;
            if (o.orbit_of[static_cast<size_t>(a) * n + b] >= 0) continue;
            o.rep.push_back({a, b});
            long long members = 0;
            for (int k = 0; k < n; ++k) {
                size_t j = static_cast<size_t>(g.conj(k, a)) * n + g.conj(k, b);
                if (o.orbit_of[j] < 0) {
                    o.orbit_of[j] = o.count;
                    ++members;
                }
            }
            o.size.push_back(members);
            ++o.count;
        }
    return o;
}

/// 2-cocycle on a subgroup of an ambient group, tabulated over positions
/// in the sorted member list. When every value is a power of a single
/// root of unity only the exponent table is stored; consumers then work
/// on integer exponents and build a cyclotomic number once per sum.
struct Cocycle2 {
    std::vector<int> members;    // sorted ambient element indices
    int root = 1;                // values lie among the root-th roots of unity
    std::vector<uint16_t> expo;  // exponent table (monomial form)
    std::vector<CycNum> vals;    // value table (general form, expo empty)

    int size() const { return static_cast<int>(members.size()); }
    bool monomial() const { return !expo.empty(); }
    CycNum value(int i, int j) const {
        size_t idx = static_cast<size_t>(i) * members.size() + static_cast<size_t>(j);
        return monomial() ? CycNum::zeta(root, expo[idx]) : vals[idx];
    }
};

inline Cocycle2 trivial_cocycle(std::vector<int> members) {
    Cocycle2 c;
    c.members = std::move(members);
    c.expo.assign(c.members.size() * c.members.size(), 0);
    return c;
}

/// The diagonal {(g, g)} of a product of a group with itself, with the
/// trivial cocycle.
inline Cocycle2 diagonal_cocycle(const DirectProduct& p) {
    if (p.left_order != p.right_order)
        throw std::invalid_argument("diagonal cocycle: factors differ");
    std::vector<int> m;
    for (int x = 0; x < p.left_order; ++x) m.push_back(p.encode(x, x));
    return trivial_cocycle(std::move(m));
}

inline std::vector<int> member_positions(const FiniteGroup& g, const std::vector<int>& members) {
    std::vector<int> pos(static_cast<size_t>(g.order()), -1);
    for (size_t i = 0; i < members.size(); ++i)
        pos[static_cast<size_t>(members[i])] = static_cast<int>(i);
    return pos;
}

struct CocycleCheck {
    bool ok = true;
    std::array<int, 3> witness{-1, -1, -1};  // ambient f, g, h at the first failure
    std::string detail;
};

/// Exhaustive check that the member list is a subgroup containing the
/// identity and that phi(fg, h) phi(f, g) == phi(f, gh) phi(g, h) on K^3.
inline CocycleCheck validate_cocycle(const FiniteGroup& g, const Cocycle2& c) {
    CocycleCheck r;
    const int k = c.size();
    if (k == 0 || c.members[0] != 0) {
        r.ok = false;
        r.detail = "subgroup does not contain the identity";
        return r;
    }
    for (size_t i = 0; i < c.members.size(); ++i) {
        int m = c.members[i];
        if (m < 0 || m >= g.order() || (i > 0 && m <= c.members[i - 1])) {
            r.ok = false;
            r.detail = "member list is not sorted and in range";
            return r;
        }
    }
    const size_t cells = static_cast<size_t>(k) * k;
    if ((c.monomial() ? c.expo.size() : c.vals.size()) != cells || c.root < 1) {
        r.ok = false;
        r.detail = "value table does not match the subgroup size";
        return r;
    }
    std::vector<int> pos = member_positions(g, c.members);
    std::vector<int> ptab(cells);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            int p = pos[static_cast<size_t>(g.mul(c.members[i], c.members[j]))];
            if (p < 0) {
                r.ok = false;
                r.witness = {c.members[i], c.members[j], -1};
                r.detail = "member list is not closed under multiplication";
                return r;
            }
            ptab[static_cast<size_t>(i) * k + j] = p;
        }
    if (c.monomial()) {
        const uint16_t* e = c.expo.data();
        for (int f = 0; f < k; ++f)
            for (int a = 0; a < k; ++a) {
                const int fa = ptab[static_cast<size_t>(f) * k + a];
                const int efa = e[static_cast<size_t>(f) * k + a];
                for (int b = 0; b < k; ++b) {
                    int ab = ptab[static_cast<size_t>(a) * k + b];
                    int lhs = e[static_cast<size_t>(fa) * k + b] + efa;
                    int rhs = e[static_cast<size_t>(f) * k + ab] + e[static_cast<size_t>(a) * k + b];
                    if ((lhs - rhs) % c.root != 0) {
                        r.ok = false;
                        r.witness = {c.members[f], c.members[a], c.members[b]};
                        r.detail = "cocycle identity fails";
                        return r;
                    }
                }
            }
    } else {
        for (int f = 0; f < k; ++f)
            for (int a = 0; a < k; ++a) {
                const int fa = ptab[static_cast<size_t>(f) * k + a];
                for (int b = 0; b < k; ++b) {
                    int ab = ptab[static_cast<size_t>(a) * k + b];
                    CycNum lhs = c.vals[static_cast<size_t>(fa) * k + b] * c.vals[static_cast<size_t>(f) * k + a];
                    CycNum rhs = c.vals[static_cast<size_t>(f) * k + ab] * c.vals[static_cast<size_t>(a) * k + b];
                    if (!(lhs == rhs)) {
                        r.ok = false;
                        r.witness = {c.members[f], c.members[a], c.members[b]};
                        r.detail = "cocycle identity fails";
                        return r;
                    }
                }
            }
    }
    return r;
}

/// Conjugation-twisted values phi(g | h) = phi(g, h) phi(g h g^{-1}, g)^{-1}
/// over subgroup positions: the weight each conjugate contributes to the
/// algebra character.
struct PhiBar {
    int k = 0;
    int root = 1;
    std::vector<uint16_t> expo;
    std::vector<CycNum> vals;

    bool monomial() const { return !expo.empty(); }
    CycNum value(int i, int j) const {
        size_t idx = static_cast<size_t>(i) * k + j;
        return monomial() ? CycNum::zeta(root, expo[idx]) : vals[idx];
    }
};

inline PhiBar phi_bar(const FiniteGroup& g, const Cocycle2& c) {
    const int k = c.size();
    std::vector<int> pos = member_positions(g, c.members);
    PhiBar b;
    b.k = k;
    b.root = c.root;
    if (c.monomial()) b.expo.resize(static_cast<size_t>(k) * k);
    else b.vals.resize(static_cast<size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            int t = pos[static_cast<size_t>(g.conj(c.members[i], c.members[j]))];
            if (t < 0) throw std::logic_error("phi_bar: subgroup is not closed under conjugation");
            size_t idx = static_cast<size_t>(i) * k + j;
            size_t tw = static_cast<size_t>(t) * k + i;
            if (c.monomial())
                b.expo[idx] = static_cast<uint16_t>(((c.expo[idx] - c.expo[tw]) % c.root + c.root) % c.root);
            else {
                if (c.vals[tw].is_zero())
                    throw std::domain_error("phi_bar: cocycle value is not invertible");
                b.vals[idx] = c.vals[idx] * c.vals[tw].inverse();
            }
        }
    return b;
}

/// Character of the twisted algebra on subgroup K with cocycle phi, as a
/// representation of the double of the ambient group:
///   chi(g h^*) = (1/|K|) [gh = hg] sum over x with x g x^{-1} and
///                x h x^{-1} in K of phi(x g x^{-1} | x h x^{-1}).
/// The cocycle is validated on construction. Evaluation is a class
/// function on commuting pairs; when K is normal, membership of g and h
/// short-circuits the sum.
class AlgebraCharacter {
  public:
    AlgebraCharacter(const FiniteGroup& g, const Cocycle2& c)
        : g_(&g), k_(c.size()), root_(c.root) {
        CocycleCheck chk = validate_cocycle(g, c);
        if (!chk.ok) throw std::invalid_argument("algebra character: " + chk.detail);
        pos_ = member_positions(g, c.members);
        PhiBar b = phi_bar(g, c);
        expo_ = std::move(b.expo);
        vals_ = std::move(b.vals);
        normal_ = true;
        for (int m : c.members) {
            for (int x = 0; x < g.order(); ++x)
                if (pos_[static_cast<size_t>(g.conj(x, m))] < 0) {
                    normal_ = false;
                    break;
                }
            if (!normal_) break;
        }
    }

    int subgroup_order() const { return k_; }
    bool subgroup_is_normal() const { return normal_; }

    CycNum operator()(int g, int h) const {
        const FiniteGroup& gr = *g_;
        if (gr.mul(g, h) != gr.mul(h, g)) return CycNum(0);
        if (normal_ && (pos_[static_cast<size_t>(g)] < 0 || pos_[static_cast<size_t>(h)] < 0))
            return CycNum(0);
        if (!expo_.empty()) {
            std::vector<long long> counts(static_cast<size_t>(root_), 0);
            for (int x = 0; x < gr.order(); ++x) {
                int pg = pos_[static_cast<size_t>(gr.conj(x, g))];
                if (pg < 0) continue;
                int ph = pos_[static_cast<size_t>(gr.conj(x, h))];
                if (ph < 0) continue;
                ++counts[expo_[static_cast<size_t>(pg) * k_ + ph]];
            }
            CycNum s(0);
            for (int e = 0; e < root_; ++e)
                if (counts[static_cast<size_t>(e)])
                    s = s + CycNum::zeta(root_, e) * Rational(counts[static_cast<size_t>(e)]);
            return s / Rational(k_);
        }
        CycNum s(0);
        for (int x = 0; x < gr.order(); ++x) {
            int pg = pos_[static_cast<size_t>(gr.conj(x, g))];
            if (pg < 0) continue;
            int ph = pos_[static_cast<size_t>(gr.conj(x, h))];
            if (ph < 0) continue;
            s = s + vals_[static_cast<size_t>(pg) * k_ + ph];
        }
        return s / Rational(k_);
    }

  private:
    const FiniteGroup* g_;
    int k_;
    int root_;
    bool normal_ = false;
    std::vector<int> pos_;
    std::vector<uint16_t> expo_;
    std::vector<CycNum> vals_;
};

/// For a cocycle on a subgroup of a direct product: the matrix of
/// twisted values pairing K meet (G x e) against K meet (e x G'),
/// tested for exact invertibility by Gaussian elimination over the
/// cyclotomic field. Invertibility is what makes the algebra character
/// decompose as a permutation rather than a general multiplicity matrix.
inline bool check_nondegenerate(const FiniteGroup& prod, int right_order, const Cocycle2& c) {
    std::vector<int> k1, k2;
    for (int i = 0; i < c.size(); ++i) {
        if (c.members[i] % right_order == 0) k1.push_back(i);
        if (c.members[i] / right_order == 0) k2.push_back(i);
    }
    if (k1.empty() || k1.size() != k2.size()) return false;
    const int n = static_cast<int>(k1.size());
    PhiBar b = phi_bar(prod, c);
    std::vector<std::vector<CycNum>> a(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a[static_cast<size_t>(i)].push_back(b.value(k1[static_cast<size_t>(i)], k2[static_cast<size_t>(j)]));
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int row = col; row < n; ++row)
            if (!a[static_cast<size_t>(row)][static_cast<size_t>(col)].is_zero()) {
                piv = row;
                break;
            }
        if (piv < 0) return false;
        std::swap(a[static_cast<size_t>(col)], a[static_cast<size_t>(piv)]);
        for (int row = col + 1; row < n; ++row) {
            if (a[static_cast<size_t>(row)][static_cast<size_t>(col)].is_zero()) continue;
            CycNum f = a[static_cast<size_t>(row)][static_cast<size_t>(col)] /
                       a[static_cast<size_t>(col)][static_cast<size_t>(col)];
            for (int cc = col; cc < n; ++cc)
                a[static_cast<size_t>(row)][static_cast<size_t>(cc)] =
                    a[static_cast<size_t>(row)][static_cast<size_t>(cc)] -
                    f * a[static_cast<size_t>(col)][static_cast<size_t>(cc)];
        }
    }
    return true;
}

/// Multiplicities of a character of the double of G x G' against the
/// product anyon basis. The product double is never materialized: each
/// entry <chi, chi_X chi_X'> is contracted factor by factor over
/// commuting-pair orbits, with chi evaluated once per orbit pair.
struct EquivalenceReport {
    std::vector<std::vector<long long>> multiplicity;  // [left anyon][right anyon]
    bool is_permutation = false;
    std::vector<int> permutation;  // left anyon -> right anyon when is_permutation
    Rational residual;             // <chi, chi> minus the sum of squared multiplicities
    long long dim_total = 0;       // sum of multiplicity times qdim(X) qdim(X')
};

/// chi(gl, gr, hl, hr) is the character value at the product pair
/// g = (gl, gr), h = (hl, hr); it must be a class function on commuting
/// pairs of the product. Throws when a multiplicity fails to be a
/// non-negative integer. residual == 0 certifies that chi equals the sum
/// of the found anyon pairs exactly.
inline EquivalenceReport decompose_over_double(
        const DoubleData& left, const DoubleData& right,
        const std::function<CycNum(int, int, int, int)>& chi) {
    CommutingOrbits ol = commuting_orbits(left.group());
    CommutingOrbits orr = commuting_orbits(right.group());
    const int nl = left.anyon_count(), nr = right.anyon_count();
    auto char_table = [](const DoubleData& dd, const CommutingOrbits& o) {
        std::vector<std::vector<CycNum>> t(static_cast<size_t>(dd.anyon_count()));
        for (int x = 0; x < dd.anyon_count(); ++x)
            for (int i = 0; i < o.count; ++i)
                t[static_cast<size_t>(x)].push_back(
                    dd.anyon_character(x, o.rep[static_cast<size_t>(i)].first,
                                       o.rep[static_cast<size_t>(i)].second).conj());
        return t;
    };
    auto tl = char_table(left, ol);
    auto tr = char_table(right, orr);

    std::vector<std::vector<CycNum>> v(static_cast<size_t>(ol.count));
    CycNum norm(0);
    for (int i = 0; i < ol.count; ++i)
        for (int j = 0; j < orr.count; ++j) {
            CycNum x = chi(ol.rep[static_cast<size_t>(i)].first, orr.rep[static_cast<size_t>(j)].first,
                           ol.rep[static_cast<size_t>(i)].second, orr.rep[static_cast<size_t>(j)].second);
            if (!x.is_zero())
                norm = norm + x * x.conj() *
                              Rational(ol.size[static_cast<size_t>(i)] * orr.size[static_cast<size_t>(j)]);
            v[static_cast<size_t>(i)].push_back(std::move(x));
        }

    // fold the right factor first, then the left
    std::vector<std::vector<CycNum>> fold(static_cast<size_t>(ol.count),
                                          std::vector<CycNum>(static_cast<size_t>(nr), CycNum(0)));
    for (int i = 0; i < ol.count; ++i)
        for (int j = 0; j < orr.count; ++j) {
            const CycNum& x = v[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (x.is_zero()) continue;
            CycNum w = x * Rational(orr.size[static_cast<size_t>(j)]);
            for (int xr = 0; xr < nr; ++xr) {
                const CycNum& t = tr[static_cast<size_t>(xr)][static_cast<size_t>(j)];
                if (!t.is_zero())
                    fold[static_cast<size_t>(i)][static_cast<size_t>(xr)] =
                        fold[static_cast<size_t>(i)][static_cast<size_t>(xr)] + w * t;
            }
        }
    std::vector<std::vector<CycNum>> acc(static_cast<size_t>(nl),
                                         std::vector<CycNum>(static_cast<size_t>(nr), CycNum(0)));
    for (int i = 0; i < ol.count; ++i) {
        bool live = false;
        for (int xr = 0; xr < nr && !live; ++xr)
            live = !fold[static_cast<size_t>(i)][static_cast<size_t>(xr)].is_zero();
        if (!live) continue;
        for (int xl = 0; xl < nl; ++xl) {
            const CycNum& t = tl[static_cast<size_t>(xl)][static_cast<size_t>(i)];
            if (t.is_zero()) continue;
            CycNum w = t * Rational(ol.size[static_cast<size_t>(i)]);
            for (int xr = 0; xr < nr; ++xr) {
                const CycNum& f = fold[static_cast<size_t>(i)][static_cast<size_t>(xr)];
                if (!f.is_zero())
                    acc[static_cast<size_t>(xl)][static_cast<size_t>(xr)] =
                        acc[static_cast<size_t>(xl)][static_cast<size_t>(xr)] + w * f;
            }
        }
    }

    const Rational scale(1, static_cast<long long>(left.group().order()) * right.group().order());
    EquivalenceReport rep;
    rep.multiplicity.assign(static_cast<size_t>(nl), std::vector<long long>(static_cast<size_t>(nr), 0));
    long long squares = 0;
    for (int xl = 0; xl < nl; ++xl)
        for (int xr = 0; xr < nr; ++xr) {
            CycNum m = acc[static_cast<size_t>(xl)][static_cast<size_t>(xr)] * scale;
            if (!m.is_rational())
                throw std::logic_error("decompose: multiplicity is not rational");
            Rational q = m.as_rational();
            if (!q.is_integer() || q.num() < 0)
                throw std::logic_error("decompose: multiplicity is not a non-negative integer");
            rep.multiplicity[static_cast<size_t>(xl)][static_cast<size_t>(xr)] = q.num();
            squares += q.num() * q.num();
            rep.dim_total += q.num() * left.qdim_at(xl) * right.qdim_at(xr);
        }
    CycNum nn = norm * scale;
    if (!nn.is_rational()) throw std::logic_error("decompose: character norm is not rational");
    rep.residual = nn.as_rational() - Rational(squares);

    rep.is_permutation = (nl == nr);
    rep.permutation.assign(static_cast<size_t>(nl), -1);
    for (int xl = 0; xl < nl && rep.is_permutation; ++xl) {
        int hit = -1;
        for (int xr = 0; xr < nr; ++xr) {
            long long m = rep.multiplicity[static_cast<size_t>(xl)][static_cast<size_t>(xr)];
            if (m == 0) continue;
            if (m != 1 || hit >= 0) {
                hit = -2;
                break;
            }
            hit = xr;
        }
        if (hit < 0) rep.is_permutation = false;
        else rep.permutation[static_cast<size_t>(xl)] = hit;
    }
    if (rep.is_permutation) {
        std::vector<char> seen(static_cast<size_t>(nr), 0);
        for (int x : rep.permutation)
            if (seen[static_cast<size_t>(x)]++) {
                rep.is_permutation = false;
                break;
            }
    }
    if (!rep.is_permutation) rep.permutation.clear();
    return rep;
}

/// The pure-flux anyon at a: (class of a, trivial character).
inline AnyonLabel fluxion_label(const DoubleData& dd, int a) {
    return {dd.group().class_of(a), 0};
}

/// The pure-charge partner of the flux at a: the anyon (e, pi) whose
/// character is |class of a| at the identity, -1 on the class of a and
/// zero elsewhere. Throws when no irreducible has that character.
inline AnyonLabel chargeon_label(const DoubleData& dd, int a) {
    const int fc = dd.group().class_of(a);
    if (fc == 0) throw std::invalid_argument("chargeon: flux element is the identity");
    const CharacterTable& t = dd.group_table();
    std::vector<CycNum> want;
    for (int c = 0; c < t.class_count(); ++c)
        want.push_back(CycNum(c == 0 ? dd.group().class_size(fc) : (c == fc ? -1 : 0)));
    int row = t.find_row(want);
    if (row < 0) throw std::logic_error("chargeon: no irreducible with the required character");
    return {0, row};
}

/// The affine group a x + b over F_q paired with itself, the subgroup
/// U = {((a1, t), (a2, t^{-1}))} of order q^2 (q - 1), and the cocycle
/// phi(g, h) = zeta_p ^ Tr(t a2 b1) for g = ((a1, t), (a2, t^{-1})) and
/// h = ((b1, s), (b2, s^{-1})), Tr the field trace to F_p. omega_power
/// picks a different primitive p-th root; the induced permutation does
/// not depend on that choice.
struct AffinePair {
    GaloisField field;
    FiniteGroup factor;
    std::shared_ptr<const FiniteGroup> product;
    int factor_order = 0;
    Cocycle2 phi;

    int encode_affine(int a, int alpha) const { return a * (field.q() - 1) + (alpha - 1); }
    int encode_pair(int l, int r) const { return l * factor_order + r; }
};

inline AffinePair affine_U_and_phi(int q, int omega_power = 1) {
    AffineGroup ag = affine_group(q);
    const int p = ag.field.p();
    if (omega_power % p == 0)
        throw std::invalid_argument("affine pair: omega power must be a unit mod p");
    DirectProduct dp = direct_product(ag.group, ag.group);
    Cocycle2 c;
    c.root = p;
    for (int a1 = 0; a1 < q; ++a1)
        for (int t = 1; t < q; ++t)
            for (int a2 = 0; a2 < q; ++a2)
                c.members.push_back(dp.encode(ag.encode(a1, t), ag.encode(a2, ag.field.inv(t))));
    std::sort(c.members.begin(), c.members.end());
    const int k = static_cast<int>(c.members.size());
    c.expo.resize(static_cast<size_t>(k) * k);
    for (int i = 0; i < k; ++i) {
        auto left = ag.decode(dp.decode(c.members[static_cast<size_t>(i)]).first);
        auto a2 = ag.decode(dp.decode(c.members[static_cast<size_t>(i)]).second).first;
        int ta2 = ag.field.mul(left.second, a2);
        for (int j = 0; j < k; ++j) {
            int b1 = ag.decode(dp.decode(c.members[static_cast<size_t>(j)]).first).first;
            int tr = ag.field.trace(ag.field.mul(ta2, b1));
            c.expo[static_cast<size_t>(i) * k + j] = static_cast<uint16_t>((tr * omega_power) % p);
        }
    }
    AffinePair r;
    r.field = ag.field;
    r.factor_order = ag.group.order();
    r.phi = std::move(c);
    r.factor = std::move(ag.group);
    r.product = std::make_shared<const FiniteGroup>(std::move(dp.group));
    return r;
}

/// Decomposing the affine pair's algebra character and composing with
/// the irrep-conjugation equivalence X -> (x-bar, rho^*) of the
/// diagonal pairing yields a permutation of the anyons of one affine
/// factor. The result is verified to be the dual map X -> X^dual
/// composed with the transposition of the chargeon (e, pi) and the
/// fluxion (class of (1, 1), 1); when every centralizer character of
/// the factor is real the dual map is the identity and the permutation
/// is exactly that transposition.
struct Theorem34Result {
    int q = 0;
    int chargeon = -1;
    int fluxion = -1;
    EquivalenceReport pairing;     // raw decomposition of the algebra character
    std::vector<int> permutation;  // composed with irrep conjugation
    bool transposition_times_dual = false;
    bool dual_is_identity = false;
};

inline Theorem34Result theorem34_permutation(int q, int omega_power = 1) {
    AffinePair ap = affine_U_and_phi(q, omega_power);
    if (!check_nondegenerate(*ap.product, ap.factor_order, ap.phi))
        throw std::logic_error("theorem34: pairing of the edge subgroups is degenerate");
    AlgebraCharacter chi(*ap.product, ap.phi);
    DoubleData dd(ap.factor);
    EquivalenceReport rep = decompose_over_double(
        dd, dd, [&](int gl, int gr, int hl, int hr) {
            return chi(ap.encode_pair(gl, gr), ap.encode_pair(hl, hr));
        });
    if (rep.residual != Rational(0))
        throw std::logic_error("theorem34: algebra character does not decompose exactly");
    if (!rep.is_permutation)
        throw std::logic_error("theorem34: multiplicity matrix is not a permutation");
    if (rep.dim_total != static_cast<long long>(ap.factor_order) * ap.factor_order)
        throw std::logic_error("theorem34: dimension count does not match the ambient order");

    Theorem34Result r;
    r.q = q;
    const int n = dd.anyon_count();
    r.permutation.resize(static_cast<size_t>(n));
    for (int x = 0; x < n; ++x)
        r.permutation[static_cast<size_t>(x)] = dd.anyon_index(
            dd.conjugate_irrep(dd.anyon(rep.permutation[static_cast<size_t>(x)])));
    r.chargeon = dd.anyon_index(chargeon_label(dd, ap.encode_affine(1, 1)));
    r.fluxion = dd.anyon_index(fluxion_label(dd, ap.encode_affine(1, 1)));

    std::vector<int> dual = dd.conjugation_permutation();
    r.dual_is_identity = true;
    for (int x = 0; x < n; ++x)
        if (dual[static_cast<size_t>(x)] != x) {
            r.dual_is_identity = false;
            break;
        }
    r.transposition_times_dual = true;
    for (int x = 0; x < n; ++x) {
        int y = dual[static_cast<size_t>(x)];
        if (y == r.chargeon) y = r.fluxion;
        else if (y == r.fluxion) y = r.chargeon;
        if (r.permutation[static_cast<size_t>(x)] != y) {
            r.transposition_times_dual = false;
            break;
        }
    }
    if (!r.transposition_times_dual)
        throw std::logic_error("theorem34: permutation is not the chargeon-fluxion transposition times the dual map");
    r.pairing = std::move(rep);
    return r;
}

/// Pointwise identity behind the pairing: the algebra character equals
/// the sum over all anyons X of chi_X boxtimes chi_{(x-bar^{-1}, rho)}
/// minus the cross term (chi_C - chi_F) boxtimes (chi_C - chi_F) built
/// from the chargeon and the fluxion, on every commuting pair of the
/// product. This is the identity that forces the permutation form.
struct PairingIdentityCheck {
    bool ok = true;
    int g = -1, h = -1;  // product elements at the first failure
};

inline PairingIdentityCheck verify_pairing_identity(int q, int omega_power = 1) {
    AffinePair ap = affine_U_and_phi(q, omega_power);
    AlgebraCharacter chi(*ap.product, ap.phi);
    DoubleData dd(ap.factor);
    const int n = dd.anyon_count(), fo = ap.factor_order;
    std::vector<int> partner(static_cast<size_t>(n));
    for (int x = 0; x < n; ++x)
        partner[static_cast<size_t>(x)] = dd.anyon_index(dd.inverse_partner(dd.anyon(x), false));
    AnyonLabel cl = chargeon_label(dd, ap.encode_affine(1, 1));
    AnyonLabel fl = fluxion_label(dd, ap.encode_affine(1, 1));
    const FiniteGroup& pg = *ap.product;
    PairingIdentityCheck r;
    for (int g = 0; g < pg.order(); ++g)
        for (int h = 0; h < pg.order(); ++h) {
            if (pg.mul(g, h) != pg.mul(h, g)) continue;
            int gl = g / fo, gr = g % fo, hl = h / fo, hr = h % fo;
            CycNum psi(0);
            for (int x = 0; x < n; ++x) {
                CycNum a = dd.anyon_character(x, gl, hl);
                if (a.is_zero()) continue;
                psi = psi + a * dd.anyon_character(partner[static_cast<size_t>(x)], gr, hr);
            }
            CycNum cross =
                (dd.anyon_character(cl, gl, hl) - dd.anyon_character(fl, gl, hl)) *
                (dd.anyon_character(cl, gr, hr) - dd.anyon_character(fl, gr, hr));
            if (!(chi(g, h) == psi - cross)) {
                r.ok = false;
                r.g = g;
                r.h = h;
                return r;
            }
        }
    return r;
}

}  // namespace qd
