#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qd/gf.hpp"
#include "qd/group.hpp"

namespace qd {

/// Finite near-field on digits 0..q-1: abelian addition with zero 0, a group
/// on the nonzero digits with identity 1, zero absorbing, and multiplication
/// distributing over addition from the left only. Validity is established by
/// check_nearfield_axioms, not assumed.
struct NearField {
    int q = 0;
    std::vector<int> add, mul;  // flat q*q tables
    std::vector<std::string> names;
    std::string label;

    int plus(int a, int b) const { return add[static_cast<size_t>(a) * q + b]; }
    int times(int a, int b) const { return mul[static_cast<size_t>(a) * q + b]; }
    const std::string& name_of(int a) const { return names[static_cast<size_t>(a)]; }
};

/// Outcome of the axiom scan. axiom 0 means all hold; 1 = additive abelian
/// group with zero 0, 2 = zero absorbs, 3 = nonzero digits form a group with
/// identity 1, 4 = left distributivity. right_distributive is informational:
/// false for proper near-fields, true for fields.
struct AxiomCheck {
    bool ok = false;
    int axiom = 0;
    std::array<int, 3> witness{-1, -1, -1};
    std::string detail;
    bool right_distributive = false;
};

inline AxiomCheck check_nearfield_axioms(const NearField& f) {
    AxiomCheck r;
    const int q = f.q;
    auto fail = [&](int axiom, int a, int b, int c, std::string d) {
        r.ok = false;
        r.axiom = axiom;
        r.witness = {a, b, c};
        r.detail = std::move(d);
        return r;
    };
    if (q < 2 || static_cast<int>(f.add.size()) != q * q || static_cast<int>(f.mul.size()) != q * q)
        return fail(1, -1, -1, -1, "malformed tables");
    for (int a = 0; a < q; ++a) {
        if (f.plus(0, a) != a || f.plus(a, 0) != a) return fail(1, a, -1, -1, "0 is not the additive identity");
        bool has_neg = false;
        for (int b = 0; b < q; ++b)
            if (f.plus(a, b) == 0) has_neg = true;
        if (!has_neg) return fail(1, a, -1, -1, "missing additive inverse");
        for (int b = 0; b < q; ++b) {
            if (f.plus(a, b) != f.plus(b, a)) return fail(1, a, b, -1, "addition not commutative");
            if (f.plus(a, b) < 0 || f.plus(a, b) >= q) return fail(1, a, b, -1, "addition leaves the carrier");
            for (int c = 0; c < q; ++c)
                if (f.plus(f.plus(a, b), c) != f.plus(a, f.plus(b, c)))
                    return fail(1, a, b, c, "addition not associative");
        }
    }
    for (int a = 0; a < q; ++a)
        if (f.times(0, a) != 0 || f.times(a, 0) != 0) return fail(2, a, -1, -1, "zero does not absorb");
    // nonzero digits under multiplication: identity 1, closure, inverses,
    // associativity
    for (int a = 1; a < q; ++a) {
        if (f.times(1, a) != a || f.times(a, 1) != a) return fail(3, a, -1, -1, "1 is not the multiplicative identity");
        bool has_inv = false;
        for (int b = 1; b < q; ++b) {
            int p = f.times(a, b);
            if (p < 1 || p >= q) return fail(3, a, b, -1, "nonzero product is zero or out of range");
            if (p == 1) has_inv = true;
        }
        if (!has_inv) return fail(3, a, -1, -1, "missing multiplicative inverse");
        for (int b = 1; b < q; ++b)
            for (int c = 1; c < q; ++c)
                if (f.times(f.times(a, b), c) != f.times(a, f.times(b, c)))
                    return fail(3, a, b, c, "multiplication not associative");
    }
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            for (int c = 0; c < q; ++c)
                if (f.times(a, f.plus(b, c)) != f.plus(f.times(a, b), f.times(a, c)))
                    return fail(4, a, b, c, "left distributivity fails");
    r.ok = true;
    r.axiom = 0;
    r.right_distributive = true;
    for (int a = 0; a < q && r.right_distributive; ++a)
        for (int b = 0; b < q && r.right_distributive; ++b)
            for (int c = 0; c < q; ++c)
                if (f.times(f.plus(a, b), c) != f.plus(f.times(a, c), f.times(b, c))) {
                    r.right_distributive = false;
                    break;
                }
    return r;
}

inline NearField nearfield_from_field(const GaloisField& gf) {
    NearField f;
    f.q = gf.q();
    f.add.resize(static_cast<size_t>(f.q) * f.q);
    f.mul.resize(static_cast<size_t>(f.q) * f.q);
    for (int a = 0; a < f.q; ++a)
        for (int b = 0; b < f.q; ++b) {
            f.add[static_cast<size_t>(a) * f.q + b] = gf.add(a, b);
            f.mul[static_cast<size_t>(a) * f.q + b] = gf.mul(a, b);
        }
    for (int a = 0; a < f.q; ++a) f.names.push_back(gf.name_of(a));
    f.label = "GF(" + std::to_string(f.q) + ")";
    return f;
}

/// The proper near-field of order 9 (the smallest one): addition of GF(9),
/// multiplication x*y twisted by the Frobenius on the right factor whenever
/// the left factor is a non-square of GF(9)^x. Twisting by the left factor
/// keeps left distributivity, which the affine construction needs; the
/// mirror-image twist would satisfy the right-hand law instead. The nonzero
/// digits form the quaternion group, not a cyclic one.
inline NearField build_dickson_j9() {
    GaloisField gf = GaloisField::make(9);
    NearField f;
    f.q = 9;
    f.add.resize(81);
    f.mul.resize(81);
    for (int a = 0; a < 9; ++a)
        for (int b = 0; b < 9; ++b) {
            f.add[static_cast<size_t>(a) * 9 + b] = gf.add(a, b);
            int p;
            if (a == 0 || b == 0)
                p = 0;
            else if (gf.is_square(a))
                p = gf.mul(a, b);
            else
                p = gf.mul(a, gf.frobenius(b));
            f.mul[static_cast<size_t>(a) * 9 + b] = p;
        }
    for (int a = 0; a < 9; ++a) f.names.push_back(gf.name_of(a));
    f.label = "J9";
    AxiomCheck chk = check_nearfield_axioms(f);
    if (!chk.ok) throw std::logic_error("J9 construction violates axiom " + std::to_string(chk.axiom));
    return f;
}

/// One-dimensional affine group over a near-field: pairs (a, alpha) with
/// alpha nonzero and (a, alpha)(b, beta) = (a + alpha b, alpha beta).
/// Identity (0, 1) sits at index 0 under the encoding a*(q-1) + (alpha-1).
inline FiniteGroup affine_group_from_nearfield(const NearField& f) {
    AxiomCheck chk = check_nearfield_axioms(f);
    if (!chk.ok)
        throw std::invalid_argument("affine construction needs a near-field (axiom " + std::to_string(chk.axiom) +
                                    " fails: " + chk.detail + ")");
    const int q = f.q;
    const int n = q * (q - 1);
    auto encode = [q](int a, int alpha) { return a * (q - 1) + (alpha - 1); };
    std::vector<uint16_t> table(static_cast<size_t>(n) * n);
    std::vector<std::string> names(static_cast<size_t>(n));
    for (int a = 0; a < q; ++a)
        for (int alpha = 1; alpha < q; ++alpha) {
            int x = encode(a, alpha);
            names[static_cast<size_t>(x)] = "(" + f.name_of(a) + "," + f.name_of(alpha) + ")";
            for (int b = 0; b < q; ++b)
                for (int beta = 1; beta < q; ++beta)
                    table[static_cast<size_t>(x) * n + encode(b, beta)] =
                        static_cast<uint16_t>(encode(f.plus(a, f.times(alpha, b)), f.times(alpha, beta)));
        }
    return FiniteGroup::from_table(n, std::move(table), std::move(names));
}

/// Result of trying to read a near-field off a group element: either the
/// near-field plus its carrier inside G, or a human-readable refusal with a
/// witness.
struct NearFieldExtraction {
    bool ok = false;
    NearField field;
    std::vector<int> carrier;  // group element of digit i (carrier[0] = e, carrier[1] = a)
    std::vector<int> conjugator;  // x_b per digit (digit >= 1), x_b a x_b^{-1} = carrier[digit]
    std::string reason;
    std::array<int, 3> witness{-1, -1, -1};
};

/// Reconstruct a near-field from (G, a): carrier H = Z(a), which must be
/// exactly {e} plus the class of a; addition is the group operation of Z(a);
/// b x c = x_b x_c a x_c^{-1} x_b^{-1} with canonical conjugators (minimal
/// index, x_a = e). Well-definedness of x over the rep choice is equivalent
/// to Z(a) being abelian, which is checked with a witness first.
inline NearFieldExtraction nearfield_from_group(const FiniteGroup& g, int a) {
    NearFieldExtraction out;
    if (a == 0) {
        out.reason = "a must not be the identity";
        return out;
    }
    std::vector<int> z;
    for (int x = 0; x < g.order(); ++x)
        if (g.mul(x, a) == g.mul(a, x)) z.push_back(x);
    const auto& cls = g.class_members(g.class_of(a));
    // Z(a) = {e} + class of a, as sorted sets
    std::vector<int> want(cls.begin(), cls.end());
    want.insert(want.begin(), 0);
    if (z != want) {
        out.reason = "Z(a) is not {e} together with the class of a";
        return out;
    }
    for (int x : z)
        for (int y : z)
            if (g.mul(x, y) != g.mul(y, x)) {
                out.reason = "Z(a) is not abelian, so the conjugation product is ill-defined";
                out.witness = {x, y, -1};
                return out;
            }
    const int q = static_cast<int>(z.size());
    // digits: 0 = e, 1 = a, then remaining class members in element order
    out.carrier = {0, a};
    for (int x : cls)
        if (x != a) out.carrier.push_back(x);
    std::vector<int> digit_of(static_cast<size_t>(g.order()), -1);
    for (int i = 0; i < q; ++i) digit_of[static_cast<size_t>(out.carrier[static_cast<size_t>(i)])] = i;
    out.conjugator.assign(static_cast<size_t>(q), -1);
    for (int i = 1; i < q; ++i) {
        for (int x = 0; x < g.order(); ++x)
            if (g.conj(x, a) == out.carrier[static_cast<size_t>(i)]) { out.conjugator[static_cast<size_t>(i)] = x; break; }
    }
    NearField f;
    f.q = q;
    f.add.resize(static_cast<size_t>(q) * q);
    f.mul.resize(static_cast<size_t>(q) * q);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) {
            int s = g.mul(out.carrier[static_cast<size_t>(i)], out.carrier[static_cast<size_t>(j)]);
            f.add[static_cast<size_t>(i) * q + j] = digit_of[static_cast<size_t>(s)];
            int p;
            if (i == 0 || j == 0)
                p = 0;
            else {
                int xb = out.conjugator[static_cast<size_t>(i)];
                p = digit_of[static_cast<size_t>(g.conj(xb, out.carrier[static_cast<size_t>(j)]))];
            }
            f.mul[static_cast<size_t>(i) * q + j] = p;
        }
    for (int i = 0; i < q; ++i) f.names.push_back(g.name_of(out.carrier[static_cast<size_t>(i)]));
    f.label = "from " + g.name_of(a);
    AxiomCheck chk = check_nearfield_axioms(f);
    if (!chk.ok) {
        out.reason = "extracted tables violate axiom " + std::to_string(chk.axiom) + " (" + chk.detail + ")";
        out.witness = chk.witness;
        return out;
    }
    out.ok = true;
    out.field = std::move(f);
    return out;
}

/// Explicit isomorphism from G to the affine group of the extracted
/// near-field, or a refusal. iso[x] is the image of x under the encoding of
/// affine_group_from_nearfield.
struct SemidirectSplit {
    bool ok = false;
    int complement_anchor = -1;  // the g found with |Z(g)| = q - 1
    std::vector<int> iso;
    std::string reason;
};

/// Factor G as H Z(g): find g outside H with |Z(g)| = q - 1 and
/// H intersect Z(g) = {e}, decompose every element as b k (b in H,
/// k in Z(g)), and map b k to (b, k a k^{-1}). The map is verified to be a
/// bijective homomorphism onto affine_group_from_nearfield(extraction).
inline SemidirectSplit split_as_semidirect(const FiniteGroup& g, const NearFieldExtraction& ex) {
    SemidirectSplit out;
    if (!ex.ok) {
        out.reason = "extraction was not successful";
        return out;
    }
    const int q = ex.field.q;
    if (g.order() != q * (q - 1)) {
        out.reason = "group order is not q(q-1)";
        return out;
    }
    std::vector<int> digit_of(static_cast<size_t>(g.order()), -1);
    for (int i = 0; i < q; ++i) digit_of[static_cast<size_t>(ex.carrier[static_cast<size_t>(i)])] = i;
    const int a = ex.carrier[1];
    FiniteGroup target = affine_group_from_nearfield(ex.field);
    // unique factorization x = b k over H x Z(anchor), then exhaustive
    // verification of b k -> (b, k a k^{-1}) as a bijective homomorphism
    auto try_complement = [&](int anchor, const std::vector<int>& zg) {
        std::vector<int> iso(static_cast<size_t>(g.order()), -1);
        for (int b = 0; b < q; ++b)
            for (int k : zg) {
                int x = g.mul(ex.carrier[static_cast<size_t>(b)], k);
                if (iso[static_cast<size_t>(x)] >= 0) return false;
                int alpha = digit_of[static_cast<size_t>(g.conj(k, a))];
                if (alpha < 1) return false;
                iso[static_cast<size_t>(x)] = b * (q - 1) + (alpha - 1);
            }
        for (int x = 0; x < g.order(); ++x)
            if (iso[static_cast<size_t>(x)] < 0) return false;
        for (int x = 0; x < g.order(); ++x)
            for (int y = 0; y < g.order(); ++y)
                if (iso[static_cast<size_t>(g.mul(x, y))] !=
                    target.mul(iso[static_cast<size_t>(x)], iso[static_cast<size_t>(y)]))
                    return false;
        out.ok = true;
        out.complement_anchor = anchor;
        out.iso = std::move(iso);
        return true;
    };
    if (q == 2) {
        // the multiplicative part is trivial, so H is all of G and the
        // complement is the identity alone
        if (try_complement(0, {0})) return out;
        out.reason = "the identity complement does not factor the group";
        return out;
    }
    for (int cand = 1; cand < g.order(); ++cand) {
        if (digit_of[static_cast<size_t>(cand)] >= 0) continue;
        std::vector<int> zg;
        for (int x = 0; x < g.order(); ++x)
            if (g.mul(x, cand) == g.mul(cand, x)) zg.push_back(x);
        if (static_cast<int>(zg.size()) != q - 1) continue;
        bool trivial_meet = true;
        for (int x : zg)
            if (x != 0 && digit_of[static_cast<size_t>(x)] >= 0) { trivial_meet = false; break; }
        if (!trivial_meet) continue;
        if (try_complement(cand, zg)) return out;
    }
    out.reason = "no complement element with centralizer of order q-1 factors the group";
    return out;
}

}  // namespace qd
