#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "qd/cyclotomic.hpp"

using namespace qd;

TEST_CASE("rationals normalize and stay exact") {
    Rational a(6, 4);
    REQUIRE(a.num() == 3);
    REQUIRE(a.den() == 2);
    REQUIRE(Rational(-2, 4) == Rational(1, -2));
    REQUIRE(a + Rational(1, 2) == Rational(2));
    REQUIRE(Rational(1, 3) * Rational(3, 5) == Rational(1, 5));
    REQUIRE(Rational(7, 3) / Rational(7, 3) == Rational(1));
    REQUIRE(Rational(2, 3) < Rational(3, 4));
    REQUIRE(Rational(5).is_integer());
    REQUIRE(Rational(5).as_integer() == 5);
    REQUIRE_THROWS_AS(Rational(1, 0), std::domain_error);
    REQUIRE_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    REQUIRE(Rational(-7, 2).str() == "-7/2");
}

TEST_CASE("rational overflow is detected, never wrapped") {
    Rational big(INT64_MAX / 2, 1);
    REQUIRE_THROWS_AS(big * big, std::overflow_error);
}

TEST_CASE("roots of unity satisfy their minimal relations") {
    CycNum a = zeta(3) + zeta(3, 2) + CycNum(1);
    REQUIRE(a.is_zero());
    REQUIRE(zeta(4).pow(2) == CycNum(-1));
    REQUIRE(zeta(6).pow(3) == CycNum(-1));
    // vanishing sum over all fifth roots
    CycNum s = CycNum(1) + zeta(5) + zeta(5, 2) + zeta(5, 3) + zeta(5, 4);
    REQUIRE(s.is_zero());
}

TEST_CASE("equality holds across different moduli") {
    REQUIRE(zeta(3) == zeta(6, 2));
    REQUIRE(zeta(2) == CycNum(-1));
    REQUIRE(zeta(12, 4) == zeta(3));
    REQUIRE(zeta(5) != zeta(7));
}

TEST_CASE("conjugation and norms agree with floating point") {
    CycNum b = CycNum(1) + zeta(5);
    CycNum p = b * b.conj();
    auto z = p.to_complex();
    REQUIRE(std::abs(z.imag()) < 1e-12);
    double expect = std::norm(std::complex<double>(1, 0) + std::exp(std::complex<double>(0, 2 * M_PI / 5)));
    REQUIRE(std::abs(z.real() - expect) < 1e-12);
}

TEST_CASE("inverses and division round-trip") {
    CycNum c = CycNum(2) + zeta(12, 5) - zeta(12, 2);
    REQUIRE((c * c.inverse()) == CycNum(1));
    CycNum q = (zeta(7) + CycNum(3)) / (zeta(7, 3) - CycNum(2));
    REQUIRE(q * (zeta(7, 3) - CycNum(2)) == zeta(7) + CycNum(3));
    REQUIRE_THROWS_AS(CycNum(0).inverse(), std::domain_error);
}

TEST_CASE("rational values are recognized inside cyclotomic fields") {
    CycNum s = zeta(5) + zeta(5, 2) + zeta(5, 3) + zeta(5, 4);
    REQUIRE(s.is_rational());
    REQUIRE(s.as_rational() == Rational(-1));
    REQUIRE(CycNum(Rational(3, 4)).is_rational());
    REQUIRE_FALSE(zeta(8).is_rational());
}

TEST_CASE("basis size is the totient of the modulus") {
    REQUIRE(zeta(60).coeffs().size() == 16);
    REQUIRE(zeta(7).coeffs().size() == 6);
    REQUIRE(zeta(8).coeffs().size() == 4);
}

TEST_CASE("string form names the root with its order") {
    REQUIRE(CycNum(Rational(1, 2)).str() == "1/2");
    REQUIRE(zeta(6).str() == "z6");
    REQUIRE(zeta(3, 2).str() == "(-1 - z3)");
    REQUIRE(zeta(8).str() == "z8");
    REQUIRE((zeta(8) * Rational(2)).str() == "2*z8");
    CycNum m = CycNum(1) - zeta(8, 3) * Rational(2);
    REQUIRE(m.str() == "(1 - 2*z8^3)");
}

TEST_CASE("canonical comparison is a total order") {
    REQUIRE(CycNum::compare(CycNum(0), CycNum(1)) < 0);
    REQUIRE(CycNum::compare(CycNum(1), CycNum(0)) > 0);
    REQUIRE(CycNum::compare(zeta(5), zeta(5)) == 0);
    // antisymmetry on a mixed pair
    int ab = CycNum::compare(zeta(3), zeta(4));
    int ba = CycNum::compare(zeta(4), zeta(3));
    REQUIRE(ab == -ba);
    REQUIRE(ab != 0);
}

TEST_CASE("twist-sized powers stay exact") {
    // orders seen in centralizer tables: compose many small roots
    CycNum x = zeta(24, 7);
    CycNum acc(1);
    for (int i = 0; i < 24; ++i) acc = acc * x;
    REQUIRE(acc == CycNum(1));
}
