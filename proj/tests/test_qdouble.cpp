#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <string>
#include <vector>

#include "qd/fixtures.hpp"
#include "qd/gf.hpp"
#include "qd/qdouble.hpp"
#include "qd/render.hpp"

using namespace qd;

TEST_CASE("the order-2 double is the toric code") {
    ModularData md(cyclic_group(2));
    REQUIRE(md.dd.anyon_count() == 4);
    const auto& s2 = toric_smatrix_times2();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            REQUIRE(md.S[i][j] == CycNum(Rational(s2[static_cast<size_t>(i)][static_cast<size_t>(j)], 2)));
    REQUIRE(md.T == toric_t_fixture());
}

TEST_CASE("the order-6 nonabelian double matches its reference tables") {
    ModularData md(symmetric_group(3));
    auto names = anyon_display_names(md.dd);
    REQUIRE(names == std::vector<std::string>({"A", "B", "C", "D", "E", "F", "G", "H"}));

    SECTION("S-matrix") {
        const auto& s6 = s3_smatrix_times6();
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j)
                REQUIRE(md.S[i][j] ==
                        CycNum(Rational(s6[static_cast<size_t>(i)][static_cast<size_t>(j)], 6)));
        long long sum = 0;
        for (int i = 0; i < 8; ++i) sum += md.dd.qdim_at(i) * md.dd.qdim_at(i);
        REQUIRE(sum == 36);
    }

    SECTION("twists") {
        REQUIRE(md.T == s3_t_fixture());
    }

    SECTION("full fusion table") {
        auto N = fusion_tensor(md.dd, md.S);
        const auto& tab = s3_fusion_sums();
        for (int x = 0; x < 8; ++x)
            for (int y = 0; y < 8; ++y)
                REQUIRE(fusion_sum(N[static_cast<size_t>(x)][static_cast<size_t>(y)], names) ==
                        tab[static_cast<size_t>(x)][static_cast<size_t>(y)]);
        // independent counting oracle agrees everywhere
        for (int x = 0; x < 8; ++x)
            for (int y = x; y < 8; ++y)
                REQUIRE(fusion_oracle(md.dd, x, y) == N[static_cast<size_t>(x)][static_cast<size_t>(y)]);
    }

    SECTION("every anyon is self-dual") {
        for (int i = 0; i < 8; ++i) REQUIRE(md.conj_perm[i] == i);
    }
}

TEST_CASE("anyon bookkeeping round-trips") {
    DoubleData dd(symmetric_group(3));
    for (int i = 0; i < dd.anyon_count(); ++i) {
        AnyonLabel l = dd.anyon(i);
        REQUIRE(dd.anyon_index(l) == i);
        REQUIRE(dd.qdim_at(i) == dd.group().class_size(l.cls) * dd.centralizer_table(l.cls).degree(l.irrep));
    }
    REQUIRE(dd.vacuum() == 0);
    REQUIRE(dd.anyon(0).cls == 0);
    REQUIRE(dd.anyon(0).irrep == 0);
}

TEST_CASE("modular relations hold on a spread of groups") {
    for (auto* make : {+[] { return cyclic_group(4); }, +[] { return dihedral_group(4); },
                       +[] { return alternating_group(4); }, +[] { return affine_group(5).group; }}) {
        FiniteGroup g = make();
        ModularData md(g);
        int n = md.dd.anyon_count();
        long long sum = 0;
        for (int i = 0; i < n; ++i) sum += md.dd.qdim_at(i) * md.dd.qdim_at(i);
        REQUIRE(sum == static_cast<long long>(g.order()) * g.order());
        for (int i = 0; i < n; ++i) {
            REQUIRE(md.S[0][static_cast<size_t>(i)] == CycNum(Rational(md.dd.qdim_at(i), g.order())));
            for (int j = 0; j < n; ++j) {
                REQUIRE(md.S[static_cast<size_t>(i)][static_cast<size_t>(j)] ==
                        md.S[static_cast<size_t>(j)][static_cast<size_t>(i)]);
                CycNum u(0), s2(0);
                for (int k = 0; k < n; ++k) {
                    u += md.S[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                         md.S[static_cast<size_t>(j)][static_cast<size_t>(k)].conj();
                    s2 += md.S[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                          md.S[static_cast<size_t>(k)][static_cast<size_t>(j)];
                }
                REQUIRE(u == CycNum(i == j ? 1 : 0));
                REQUIRE(s2 == CycNum(md.conj_perm[static_cast<size_t>(i)] == j ? 1 : 0));
            }
        }
        auto N = fusion_tensor(md.dd, md.S);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                REQUIRE(N[static_cast<size_t>(x)][static_cast<size_t>(y)][0] ==
                        (md.conj_perm[static_cast<size_t>(x)] == y ? 1 : 0));
        for (int x : {0, n / 2, n - 1})
            REQUIRE(fusion_oracle(md.dd, x, n - 1) == N[static_cast<size_t>(x)][static_cast<size_t>(n - 1)]);
        for (int i = 0; i < n; ++i) {
            REQUIRE(md.conj_perm[static_cast<size_t>(md.conj_perm[static_cast<size_t>(i)])] == i);
            REQUIRE(md.T[static_cast<size_t>(md.conj_perm[static_cast<size_t>(i)])] == md.T[static_cast<size_t>(i)]);
        }
    }
}

TEST_CASE("anyon characters restrict to the flux class") {
    DoubleData dd(symmetric_group(3));
    const FiniteGroup& g = dd.group();
    for (int i = 0; i < dd.anyon_count(); ++i) {
        AnyonLabel l = dd.anyon(i);
        int a = g.class_rep(l.cls);
        // the value at the identity charge and the class representative is
        // the centralizer-irrep degree; any flux outside the class gives 0
        REQUIRE(dd.anyon_character(i, 0, a) == CycNum(dd.centralizer_table(l.cls).degree(l.irrep)));
        for (int h = 0; h < g.order(); ++h)
            if (g.class_of(h) != l.cls) REQUIRE(dd.anyon_character(i, 0, h).is_zero());
    }
}

TEST_CASE("fusion tensor refuses oversized doubles") {
    // the dense tensor caps at 64 anyons; row-wise access has no cap
    DoubleData dd(alternating_group(6));
    REQUIRE(dd.anyon_count() == 44);
    auto S = s_matrix(dd);
    auto row = fusion_row(dd, S, 1, 1);
    REQUIRE(static_cast<int>(row.size()) == 44);
    long long total = 0;
    for (long long v : row) total += v;
    REQUIRE(total > 0);
}

TEST_CASE("display names fall back to labeled pairs") {
    DoubleData dd(cyclic_group(4));
    auto names = anyon_display_names(dd);
    REQUIRE(static_cast<int>(names.size()) == dd.anyon_count());
    // no A..H aliasing outside the order-6 shape
    REQUIRE(names[0] != "A");
}
