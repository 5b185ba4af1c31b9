#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <utility>
#include <vector>

#include "qd/gf.hpp"
#include "qd/modinv.hpp"
#include "qd/nearfield.hpp"

using namespace qd;

namespace {

/// No invariant transposition joins two chargeons, and a non-chargeon
/// pair always shares its flux class.
void check_pair_shape(const ModularData& md, const std::vector<std::pair<int, int>>& pairs) {
    for (auto [x, y] : pairs) {
        AnyonLabel lx = md.dd.anyon(x), ly = md.dd.anyon(y);
        REQUIRE_FALSE((lx.cls == 0 && ly.cls == 0));
        if (lx.cls != 0 && ly.cls != 0) REQUIRE(lx.cls == ly.cls);
    }
}

}  // namespace

TEST_CASE("the order-6 group has exactly one invariant transposition") {
    FiniteGroup g = symmetric_group(3);
    ModularData md(g);
    auto cf = chargeon_fluxion_pairs(md);
    REQUIRE(cf.size() == 1);
    REQUIRE(cf[0] == std::pair<int, int>(2, 5));
    auto all_p = find_transposition_invariants(md, false);
    auto all_pj = find_transposition_invariants(md, true);
    REQUIRE(all_p == all_pj);
    REQUIRE(all_p.size() == 1);
    REQUIRE(all_p[0] == cf[0]);
    check_pair_shape(md, all_p);

    SECTION("matrix path agrees with the permutation path") {
        std::vector<int> p(8);
        for (int i = 0; i < 8; ++i) p[i] = i;
        p[2] = 5;
        p[5] = 2;
        REQUIRE(is_permutation_invariant(p, md));
        REQUIRE(is_modular_invariant(permutation_matrix(p), md.S, md.T));
        std::vector<int> idp(8);
        for (int i = 0; i < 8; ++i) idp[i] = i;
        REQUIRE(is_modular_invariant(permutation_matrix(idp), md.S, md.T));
        REQUIRE(is_modular_invariant(permutation_matrix(md.conj_perm), md.S, md.T));
    }

    SECTION("a swap preserving S but not T is rejected") {
        std::vector<int> gh(8);
        for (int i = 0; i < 8; ++i) gh[i] = i;
        gh[6] = 7;
        gh[7] = 6;
        REQUIRE_FALSE(is_permutation_invariant(gh, md));
        REQUIRE_FALSE(is_modular_invariant(permutation_matrix(gh), md.S, md.T));
    }

    SECTION("vacuum and negativity guards") {
        std::vector<int> idp(8);
        for (int i = 0; i < 8; ++i) idp[i] = i;
        auto m = permutation_matrix(idp);
        m[0][0] = 2;
        REQUIRE_FALSE(is_modular_invariant(m, md.S, md.T));
        m[0][0] = 1;
        m[3][4] = -1;
        REQUIRE_FALSE(is_modular_invariant(m, md.S, md.T));
    }

    SECTION("necessary conditions all hold for the pair") {
        auto lad = necessary_condition_ladder(md.dd, md.dd.anyon(2), md.dd.anyon(5));
        REQUIRE(lad.all_ok);
        for (auto& r : lad.rungs) REQUIRE(r.ok);
    }

    SECTION("classification recovers the order-3 field") {
        auto v = classify_group(g);
        REQUIRE(v.applicable);
        REQUIRE(v.classified);
        REQUIRE(v.pairs.size() == 1);
        const auto& e = v.pairs[0];
        REQUIRE(e.chargeon == 2);
        REQUIRE(e.fluxion == 5);
        REQUIRE(e.ladder.all_ok);
        REQUIRE(e.extraction.ok);
        REQUIRE(e.split.ok);
        REQUIRE(e.roundtrip);
        REQUIRE(e.extraction.field.q == 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                REQUIRE(e.extraction.field.times(i, j) == e.extraction.field.times(j, i));
    }
}

TEST_CASE("the order-2 double swaps charge and flux") {
    FiniteGroup g = cyclic_group(2);
    ModularData md(g);
    auto cf = chargeon_fluxion_pairs(md);
    REQUIRE(cf.size() == 1);
    AnyonLabel lc = md.dd.anyon(cf[0].first), lf = md.dd.anyon(cf[0].second);
    REQUIRE(lc.cls == 0);
    REQUIRE(lc.irrep == 1);
    REQUIRE(lf.cls == 1);
    REQUIRE(lf.irrep == 0);
    auto v = classify_group(g);
    REQUIRE(v.applicable);
    REQUIRE(v.classified);
    REQUIRE(v.pairs[0].extraction.field.q == 2);
}

TEST_CASE("groups without a chargeon-fluxion invariant are inapplicable") {
    for (auto* make : {+[] { return cyclic_group(3); }, +[] { return cyclic_group(4); },
                       +[] { return cyclic_group(6); }, +[] { return dihedral_group(4); },
                       +[] { return quaternion_group(); }}) {
        FiniteGroup g = make();
        ModularData md(g);
        REQUIRE(chargeon_fluxion_pairs(md).empty());
        auto v = classify_group(g);
        REQUIRE_FALSE(v.applicable);
        REQUIRE_FALSE(v.classified);
        REQUIRE(v.pairs.empty());
        REQUIRE_FALSE(v.note.empty());
        // the dual map is always an invariant, and composing with it does
        // not change the transposition search
        REQUIRE(is_permutation_invariant(md.conj_perm, md));
        auto all_p = find_transposition_invariants(md, false);
        REQUIRE(all_p == find_transposition_invariants(md, true));
        check_pair_shape(md, all_p);
    }
}

TEST_CASE("the quaternion candidate fails the dimension condition") {
    FiniteGroup g = quaternion_group();
    DoubleData dd(g);
    const CharacterTable& t = dd.group_table();
    int pi = -1;
    for (int r = 0; r < t.irrep_count(); ++r)
        if (t.degree(r) == 2) pi = r;
    REQUIRE(pi >= 0);
    int ca = -1;
    for (int c = 1; c < g.class_count(); ++c)
        if (g.class_size(c) == 1) ca = c;
    REQUIRE(ca >= 0);
    auto lad = necessary_condition_ladder(dd, {0, pi}, {ca, 0});
    REQUIRE(lad.rungs[0].ok);
    REQUIRE_FALSE(lad.rungs[1].ok);
    REQUIRE_FALSE(lad.all_ok);
    REQUIRE_FALSE(lad.rungs[1].detail.empty());

    SECTION("shape guards reject non-candidates outright") {
        REQUIRE_FALSE(necessary_condition_ladder(dd, {0, 0}, {ca, 0}).rungs[0].ok);
        REQUIRE_FALSE(necessary_condition_ladder(dd, {0, pi}, {0, 0}).rungs[0].ok);
        REQUIRE_FALSE(necessary_condition_ladder(dd, {ca, 0}, {ca, 0}).rungs[0].ok);
    }
}

TEST_CASE("affine groups classify back to their field") {
    struct Case { const char* name; FiniteGroup g; int q; };
    Case cases[] = {{"A4", alternating_group(4), 4},
                    {"AGL1:4", affine_group(4).group, 4},
                    {"AGL1:5", affine_group(5).group, 5},
                    {"AGL1:8", affine_group(8).group, 8}};
    for (auto& cs : cases) {
        INFO(cs.name);
        ModularData md(cs.g);
        auto cf = chargeon_fluxion_pairs(md);
        REQUIRE_FALSE(cf.empty());
        for (auto [ci, fi] : cf)
            REQUIRE(necessary_condition_ladder(md.dd, md.dd.anyon(ci), md.dd.anyon(fi)).all_ok);
        REQUIRE(is_permutation_invariant(md.conj_perm, md));
        auto v = classify_group(cs.g);
        REQUIRE(v.applicable);
        REQUIRE(v.classified);
        bool found_q = false;
        for (auto& e : v.pairs)
            if (e.roundtrip && e.extraction.field.q == cs.q) found_q = true;
        REQUIRE(found_q);
        check_pair_shape(md, find_transposition_invariants(md, false));
    }
}

TEST_CASE("the proper near-field group classifies to a proper near-field") {
    FiniteGroup g = affine_group_from_nearfield(build_dickson_j9());
    ModularData md(g);
    REQUIRE_FALSE(chargeon_fluxion_pairs(md).empty());
    auto v = classify_group(g);
    REQUIRE(v.applicable);
    REQUIRE(v.classified);
    bool proper = false;
    for (auto& e : v.pairs)
        if (e.roundtrip) {
            REQUIRE(e.extraction.field.q == 9);
            AxiomCheck chk = check_nearfield_axioms(e.extraction.field);
            REQUIRE(chk.ok);
            bool commutative = true;
            for (int i = 0; i < 9; ++i)
                for (int j = 0; j < 9; ++j)
                    if (e.extraction.field.times(i, j) != e.extraction.field.times(j, i))
                        commutative = false;
            if (!commutative && !chk.right_distributive) proper = true;
        }
    REQUIRE(proper);
}

TEST_CASE("the degree-six alternating group has two invariant transpositions") {
    FiniteGroup g = alternating_group(6);
    ModularData md(g);

    int cls_a = -1;
    for (int c = 0; c < g.class_count(); ++c)
        if (c != 0 && g.element_order(g.class_rep(c)) == 2) cls_a = c;
    REQUIRE(cls_a >= 0);
    REQUIRE(g.class_size(cls_a) == 45);
    const CharacterTable& zt = md.dd.centralizer_table(cls_a);
    REQUIRE(zt.class_count() == 5);
    REQUIRE(zt.irrep_count() == 5);
    REQUIRE(zt.group_order() == 8);

    // centralizer degrees 1,1,1,1,2; the 2-dim row takes -2 on the flux
    // class and vanishes on the size-2 classes
    int mu = -1, ca_local = -1;
    std::vector<int> linears;
    for (int r = 0; r < 5; ++r) {
        if (zt.degree(r) == 2) mu = r;
        else linears.push_back(r);
    }
    REQUIRE(mu >= 0);
    REQUIRE(linears.size() == 4);
    for (int c = 0; c < 5; ++c)
        if (zt.class_size(c) == 1 && !(zt.value(mu, c) == CycNum(2))) ca_local = c;
    REQUIRE(ca_local >= 0);
    REQUIRE(zt.value(mu, ca_local) == CycNum(-2));
    for (int c = 0; c < 5; ++c)
        if (zt.class_size(c) == 2) REQUIRE(zt.value(mu, c).is_zero());

    // the order-4 class of the centralizer separates the two pairings
    FiniteGroup zg = centralizer(g, g.class_rep(cls_a)).as_group();
    REQUIRE(zg.order() == 8);
    int c4 = -1;
    for (int c = 0; c < 5; ++c)
        if (zg.element_order(zt.class_rep(c)) == 4) c4 = c;
    REQUIRE(c4 >= 0);
    REQUIRE(zt.class_size(c4) == 2);

    auto p = find_transposition_invariants(md, false);
    check_pair_shape(md, p);
    std::vector<std::pair<int, int>> class_pairs;
    for (auto [x, y] : p) {
        AnyonLabel lx = md.dd.anyon(x), ly = md.dd.anyon(y);
        if (lx.cls == cls_a && ly.cls == cls_a && lx.irrep != mu && ly.irrep != mu)
            class_pairs.push_back({lx.irrep, ly.irrep});
    }
    REQUIRE(p.size() == 2);
    REQUIRE(class_pairs.size() == 2);

    // the four linear rows are partitioned into the two pairs, each pair
    // agreeing exactly at the identity, the flux class, and the order-4
    // class, where one pair reads +1 and the other -1
    std::set<int> seen;
    for (auto [r1, r2] : class_pairs) { seen.insert(r1); seen.insert(r2); }
    REQUIRE(seen.size() == 4);
    for (int r : linears) REQUIRE(seen.count(r) == 1);
    std::set<long long> c4_values;
    for (auto [r1, r2] : class_pairs) {
        int agree = 0;
        for (int c = 0; c < 5; ++c)
            if (zt.value(r1, c) == zt.value(r2, c)) ++agree;
        REQUIRE(agree == 3);
        REQUIRE(zt.value(r1, c4) == zt.value(r2, c4));
        REQUIRE(zt.value(r1, c4).is_rational());
        c4_values.insert(zt.value(r1, c4).as_rational().num());
    }
    REQUIRE(c4_values == std::set<long long>({-1, 1}));

    // matrix path confirms the first pair; dual composition changes nothing
    auto [x0, y0] = p.front();
    std::vector<int> perm(md.T.size());
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    perm[static_cast<size_t>(x0)] = y0;
    perm[static_cast<size_t>(y0)] = x0;
    REQUIRE(is_modular_invariant(permutation_matrix(perm), md.S, md.T));
    REQUIRE(is_permutation_invariant(md.conj_perm, md));
    REQUIRE(find_transposition_invariants(md, true) == p);
}
