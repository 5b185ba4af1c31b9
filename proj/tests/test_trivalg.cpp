#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "qd/gf.hpp"
#include "qd/qdouble.hpp"
#include "qd/trivalg.hpp"

using namespace qd;

TEST_CASE("commuting-pair orbits of the order-6 group") {
    FiniteGroup s3 = symmetric_group(3);
    CommutingOrbits o = commuting_orbits(s3);
    REQUIRE(o.count == 8);  // as many as anyons
    long long total = 0;
    for (long long s : o.size) total += s;
    long long pairs = 0;
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
            if (s3.mul(a, b) == s3.mul(b, a)) ++pairs;
    REQUIRE(total == pairs);
    REQUIRE(o.rep[0].first == 0);
    REQUIRE(o.rep[0].second == 0);
    // orbit ids are constant along simultaneous conjugation
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            if (s3.mul(a, b) != s3.mul(b, a)) continue;
            for (int k = 0; k < 6; ++k)
                REQUIRE(o.orbit_of[static_cast<size_t>(s3.conj(k, a)) * 6 + s3.conj(k, b)] ==
                        o.orbit_of[static_cast<size_t>(a) * 6 + b]);
        }
}

TEST_CASE("diagonal subalgebra decomposes as irrep conjugation") {
    FiniteGroup s3 = symmetric_group(3);
    DirectProduct dp = direct_product(s3, s3);
    Cocycle2 dia = diagonal_cocycle(dp);
    REQUIRE(validate_cocycle(dp.group, dia).ok);
    AlgebraCharacter chi(dp.group, dia);
    REQUIRE_FALSE(chi.subgroup_is_normal());

    SECTION("character matches the simultaneous-conjugacy closed form") {
        for (int g = 0; g < 36; ++g)
            for (int h = 0; h < 36; ++h) {
                int g1 = g / 6, g2 = g % 6, h1 = h / 6, h2 = h % 6;
                CycNum got = chi(g, h);
                if (dp.group.mul(g, h) != dp.group.mul(h, g)) {
                    REQUIRE(got.is_zero());
                    continue;
                }
                long long n = 0;
                for (int k = 0; k < 6; ++k)
                    if (s3.conj(k, g1) == g2 && s3.conj(k, h1) == h2) ++n;
                long long zz = 0;
                if (n > 0)
                    for (int k = 0; k < 6; ++k)
                        if (s3.mul(k, g1) == s3.mul(g1, k) && s3.mul(k, h1) == s3.mul(h1, k)) ++zz;
                REQUIRE(got == CycNum(zz));
            }
    }

    SECTION("decomposition over the double is the conjugation permutation") {
        DoubleData dd(s3);
        EquivalenceReport rep = decompose_over_double(
            dd, dd, [&](int gl, int gr, int hl, int hr) {
                return chi(dp.encode(gl, gr), dp.encode(hl, hr));
            });
        REQUIRE(rep.is_permutation);
        REQUIRE(rep.residual == Rational(0));
        REQUIRE(rep.dim_total == 36);
        for (int x = 0; x < dd.anyon_count(); ++x)
            REQUIRE(rep.permutation[static_cast<size_t>(x)] ==
                    dd.anyon_index(dd.conjugate_irrep(dd.anyon(x))));
        REQUIRE(rep.permutation[0] == 0);
        int moved = 0;
        for (int x = 0; x < 8; ++x)
            if (rep.permutation[static_cast<size_t>(x)] != x) ++moved;
        REQUIRE(moved == 2);  // only the conjugate pair of twists swaps
    }
}

TEST_CASE("cocycle validation flags corrupted data with a witness") {
    FiniteGroup z4 = cyclic_group(4);
    DirectProduct dp = direct_product(z4, z4);
    Cocycle2 dia = diagonal_cocycle(dp);
    dia.expo[5] = 1;
    dia.root = 3;
    CocycleCheck cc = validate_cocycle(dp.group, dia);
    REQUIRE_FALSE(cc.ok);
    REQUIRE(cc.detail == "cocycle identity fails");
    REQUIRE(cc.witness[0] >= 0);
    REQUIRE_THROWS_AS(AlgebraCharacter(dp.group, dia), std::invalid_argument);

    Cocycle2 notsub = trivial_cocycle({0, 1});
    REQUIRE_FALSE(validate_cocycle(z4, notsub).ok);
}

TEST_CASE("the twisted-pair subalgebra at q=3") {
    AffinePair ap = affine_U_and_phi(3);
    REQUIRE(ap.phi.size() == 18);  // |U| = q^2 (q-1)
    REQUIRE(ap.phi.root == 3);
    REQUIRE(validate_cocycle(*ap.product, ap.phi).ok);
    REQUIRE(check_nondegenerate(*ap.product, ap.factor_order, ap.phi));
    AlgebraCharacter chi(*ap.product, ap.phi);
    REQUIRE(chi.subgroup_is_normal());

    SECTION("character is a class function on commuting pairs") {
        const FiniteGroup& pg = *ap.product;
        for (int g = 0; g < pg.order(); g += 7)
            for (int h = 0; h < pg.order(); h += 5) {
                if (pg.mul(g, h) != pg.mul(h, g)) continue;
                CycNum base = chi(g, h);
                for (int k = 0; k < pg.order(); k += 3)
                    REQUIRE(chi(pg.conj(k, g), pg.conj(k, h)) == base);
            }
    }

    SECTION("character matches the membership closed form") {
        const FiniteGroup& pg = *ap.product;
        const int q = 3, fo = ap.factor_order;
        std::vector<int> pos = member_positions(pg, ap.phi.members);
        for (int g = 0; g < pg.order(); ++g)
            for (int h = 0; h < pg.order(); ++h) {
                if (pg.mul(g, h) != pg.mul(h, g)) continue;
                CycNum got = chi(g, h);
                if (pos[static_cast<size_t>(g)] < 0 || pos[static_cast<size_t>(h)] < 0) {
                    REQUIRE(got.is_zero());
                    continue;
                }
                int gl = g / fo, grr = g % fo, hl = h / fo, hrr = h % fo;
                int a1 = gl / (q - 1), al = gl % (q - 1) + 1;
                int a2 = grr / (q - 1);
                int b1 = hl / (q - 1), be = hl % (q - 1) + 1;
                int b2 = hrr / (q - 1);
                long long want;
                if (al != 1 || be != 1)
                    want = q - 1;
                else
                    want = (ap.field.mul(a1, b2) == ap.field.mul(a2, b1)) ? (q - 1) : -1;
                REQUIRE(got == CycNum(want));
            }
    }
}

TEST_CASE("charge-flux transposition at q=2") {
    Theorem34Result r = theorem34_permutation(2);
    REQUIRE(r.transposition_times_dual);
    REQUIRE(r.dual_is_identity);
    REQUIRE(r.chargeon == 1);
    REQUIRE(r.fluxion == 2);
    REQUIRE(r.permutation == std::vector<int>{0, 2, 1, 3});
}

TEST_CASE("charge-flux transposition at q=3") {
    Theorem34Result r = theorem34_permutation(3);
    REQUIRE(r.transposition_times_dual);
    REQUIRE(r.dual_is_identity);
    DoubleData dd(affine_group(3).group);
    AffinePair ap = affine_U_and_phi(3);
    REQUIRE(r.chargeon == dd.anyon_index(chargeon_label(dd, ap.encode_affine(1, 1))));
    for (int x = 0; x < dd.anyon_count(); ++x) {
        int want = x;
        if (x == r.chargeon) want = r.fluxion;
        else if (x == r.fluxion) want = r.chargeon;
        REQUIRE(r.permutation[static_cast<size_t>(x)] == want);
    }
    // the choice of root of unity does not move the permutation
    Theorem34Result r2 = theorem34_permutation(3, 2);
    REQUIRE(r2.permutation == r.permutation);
}

TEST_CASE("charge-flux transposition at q=4 composes with a nontrivial dual") {
    Theorem34Result r = theorem34_permutation(4);
    REQUIRE(r.transposition_times_dual);
    REQUIRE_FALSE(r.dual_is_identity);
    REQUIRE(r.permutation[0] == 0);
    REQUIRE(r.pairing.dim_total == 144);
}

TEST_CASE("pairing identity at small sizes") {
    REQUIRE(verify_pairing_identity(2).ok);
    REQUIRE(verify_pairing_identity(3).ok);
}
