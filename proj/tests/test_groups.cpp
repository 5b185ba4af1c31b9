#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include "qd/gf.hpp"
#include "qd/group.hpp"
#include "qd/groupspec.hpp"

using namespace qd;

TEST_CASE("symmetric group of degree three") {
    FiniteGroup s3 = symmetric_group(3);
    REQUIRE(s3.order() == 6);
    REQUIRE(s3.class_count() == 3);
    std::vector<int> sizes;
    for (int c = 0; c < 3; ++c) sizes.push_back(s3.class_size(c));
    REQUIRE(sizes == std::vector<int>{1, 3, 2});
    REQUIRE(s3.check_associativity());
    REQUIRE_FALSE(s3.is_abelian());
    REQUIRE(s3.exponent() == 6);
    // identity is element 0 and its own class
    REQUIRE(s3.class_of(0) == 0);
    REQUIRE(s3.class_rep(0) == 0);
    for (int x = 0; x < 6; ++x) {
        REQUIRE(s3.mul(x, s3.inv(x)) == 0);
        REQUIRE(s3.conj(x, 0) == 0);
    }
    // class members partition the group
    std::vector<int> seen(6, 0);
    for (int c = 0; c < 3; ++c)
        for (int m : s3.class_members(c)) ++seen[static_cast<size_t>(m)];
    REQUIRE(std::all_of(seen.begin(), seen.end(), [](int k) { return k == 1; }));
}

TEST_CASE("alternating group of degree six") {
    FiniteGroup a6 = alternating_group(6);
    REQUIRE(a6.order() == 360);
    REQUIRE(a6.class_count() == 7);
    REQUIRE(a6.exponent() == 60);
    // unique involution class, with centralizer of order 8
    int dt = -1;
    for (int c = 0; c < 7; ++c)
        if (a6.class_size(c) == 45) dt = a6.class_rep(c);
    REQUIRE(dt > 0);
    REQUIRE(a6.element_order(dt) == 2);
    REQUIRE(centralizer(a6, dt).order() == 8);
}

TEST_CASE("inverse classes pair up") {
    for (FiniteGroup g : {cyclic_group(5), symmetric_group(4), quaternion_group()}) {
        for (int c = 0; c < g.class_count(); ++c) {
            int ic = g.inverse_class(c);
            REQUIRE(g.inverse_class(ic) == c);
            REQUIRE(g.class_of(g.inv(g.class_rep(c))) == ic);
        }
    }
}

TEST_CASE("galois fields exist exactly at prime powers") {
    GaloisField f4 = GaloisField::make(4);
    REQUIRE((f4.defining_poly() == detail::FpPoly{1, 1, 1}));
    GaloisField f9 = GaloisField::make(9);
    REQUIRE((f9.defining_poly() == detail::FpPoly{1, 0, 1}));
    REQUIRE(f9.trace(0) == 0);
    REQUIRE_THROWS_AS(GaloisField::make(6), std::invalid_argument);
    REQUIRE_THROWS_AS(GaloisField::make(1), std::invalid_argument);
    // field axioms spot check at q=8
    GaloisField f8 = GaloisField::make(8);
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            REQUIRE(f8.add(a, b) == f8.add(b, a));
            REQUIRE(f8.mul(a, b) == f8.mul(b, a));
            for (int c = 0; c < 8; ++c)
                REQUIRE(f8.mul(a, f8.add(b, c)) == f8.add(f8.mul(a, b), f8.mul(a, c)));
        }
}

TEST_CASE("affine groups over small fields") {
    AffineGroup ag3 = affine_group(3);
    REQUIRE(ag3.group.order() == 6);
    REQUIRE(is_isomorphic(ag3.group, symmetric_group(3)).has_value());

    AffineGroup ag4 = affine_group(4);
    REQUIRE(ag4.group.order() == 12);
    std::vector<int> cs;
    for (int c = 0; c < ag4.group.class_count(); ++c) cs.push_back(ag4.group.class_size(c));
    std::sort(cs.begin(), cs.end());
    REQUIRE(cs == std::vector<int>{1, 3, 4, 4});
    REQUIRE(is_isomorphic(ag4.group, alternating_group(4)).has_value());
    REQUIRE_FALSE(is_isomorphic(ag4.group, cyclic_group(12)).has_value());

    AffineGroup ag9 = affine_group(9);
    REQUIRE(ag9.group.order() == 72);
    REQUIRE(ag9.group.exponent() == 24);
    REQUIRE(ag9.group.class_count() == 9);
}

TEST_CASE("subgroups, quotients, centralizers") {
    FiniteGroup s3 = symmetric_group(3);
    Subgroup a3 = subgroup_closure(s3, {s3.class_rep(2)});
    REQUIRE(a3.order() == 3);
    REQUIRE(is_normal(s3, a3));
    Quotient q = quotient_map(s3, a3);
    REQUIRE(q.group.order() == 2);

    Subgroup z = centralizer(s3, s3.class_rep(1));
    REQUIRE(z.order() == 2);
    REQUIRE_FALSE(is_normal(s3, z));
    REQUIRE_THROWS_AS(quotient_map(s3, z), std::invalid_argument);

    // rebuilt subgroup is a group of the right order
    FiniteGroup a3g = a3.as_group();
    REQUIRE(a3g.order() == 3);
    REQUIRE(a3g.is_abelian());
    REQUIRE(center(s3).order() == 1);
}

TEST_CASE("order caps stop runaway constructions") {
    FiniteGroup a6 = alternating_group(6);
    REQUIRE_THROWS_AS(direct_product(a6, a6), OrderCapError);
    REQUIRE_THROWS_AS(cyclic_group(101, 100), OrderCapError);
    DirectProduct p = direct_product(symmetric_group(3), symmetric_group(3));
    REQUIRE(p.group.order() == 36);
    REQUIRE(p.group.mul(p.encode(1, 2), p.encode(3, 4)) ==
            p.encode(symmetric_group(3).mul(1, 3), symmetric_group(3).mul(2, 4)));
}

TEST_CASE("closure from generators validates its input") {
    // Q8 from its regular representation
    FiniteGroup q8 = closure_from_generators({{2, 3, 1, 0, 6, 7, 5, 4}, {4, 5, 7, 6, 1, 0, 2, 3}});
    REQUIRE(q8.order() == 8);
    REQUIRE(is_isomorphic(q8, quaternion_group()).has_value());
    REQUIRE_THROWS_AS(closure_from_generators({}), std::invalid_argument);
    REQUIRE_THROWS_AS(closure_from_generators({{0, 0, 1}}), std::invalid_argument);
    REQUIRE_THROWS_AS(closure_from_generators({{1, 0}, {0, 1, 2}}), std::invalid_argument);
}

TEST_CASE("isomorphism testing distinguishes the order-8 groups") {
    FiniteGroup d4 = dihedral_group(4);
    FiniteGroup q8 = quaternion_group();
    FiniteGroup z8 = cyclic_group(8);
    REQUIRE_FALSE(is_isomorphic(d4, q8).has_value());
    REQUIRE_FALSE(is_isomorphic(d4, z8).has_value());
    REQUIRE_FALSE(is_isomorphic(q8, z8).has_value());
    auto self = is_isomorphic(d4, d4);
    REQUIRE(self.has_value());
    // returned map is a homomorphism
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b)
            REQUIRE((*self)[static_cast<size_t>(d4.mul(a, b))] ==
                    d4.mul((*self)[static_cast<size_t>(a)], (*self)[static_cast<size_t>(b)]));
}

TEST_CASE("group specs build the advertised groups") {
    REQUIRE(group_from_spec("Z:6").order() == 6);
    REQUIRE(group_from_spec("Z:6").is_abelian());
    REQUIRE(group_from_spec("D:4").order() == 8);
    REQUIRE(group_from_spec("S:4").order() == 24);
    REQUIRE(group_from_spec("A:5").order() == 60);
    REQUIRE(is_isomorphic(group_from_spec("Q:8"), quaternion_group()).has_value());
    REQUIRE(group_from_spec("AGL1:9").order() == 72);
    REQUIRE(group_from_spec("NF:J9").order() == 72);
    REQUIRE_FALSE(is_isomorphic(group_from_spec("AGL1:9"), group_from_spec("NF:J9")).has_value());
    FiniteGroup g = group_from_spec("perm:[[1,2,0],[1,0,2]]");
    REQUIRE(is_isomorphic(g, symmetric_group(3)).has_value());
    REQUIRE(group_from_spec("perm:[[0]]").order() == 1);
}

TEST_CASE("group specs reject malformed tokens") {
    for (const char* bad : {"Z:x", "Z:", "Z:-3", "Z:999999999", "W:3", "nocolon", "D:2", "A:2",
                            "Q:16", "NF:J8", "perm:[[1,2]]", "perm:[]", "perm:[[0],", "perm:[[0]]x"})
        REQUIRE_THROWS_AS(group_from_spec(bad), std::invalid_argument);
    REQUIRE_THROWS_AS(group_from_spec("S:8", 100), OrderCapError);
}
