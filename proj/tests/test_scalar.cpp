#include "doctest.h"

#include "octig/scalar.hpp"

#include <random>

using namespace octig;

namespace {

Scalar random_scalar(std::mt19937& rng, bool nonzero = false) {
    std::uniform_int_distribution<int> coeff(-4, 4), expo(0, 2), nterms(1, 3);
    auto random_poly = [&](bool force_nonzero) {
        Poly p;
        int n = nterms(rng);
        for (int t = 0; t < n; ++t) {
            GaussianRational c{Rational(coeff(rng)), Rational(coeff(rng))};
            p.add_term({expo(rng), expo(rng)}, c);
        }
        if (force_nonzero && p.is_zero()) p.add_term({0, 0}, GaussianRational(1));
        return p;
    };
    Poly num = random_poly(nonzero);
    Poly den = random_poly(true);
    return Scalar(num, den);
}

}  // namespace

TEST_CASE("scalar field basics") {
    Scalar half_over_pi = Scalar::monomial(GaussianRational(Rational(1, 2)), -1, 0);
    CHECK(half_over_pi + half_over_pi == Scalar::pi_pow(-1));

    std::mt19937 rng(7);
    Scalar x = random_scalar(rng);
    CHECK(x + Scalar(0) == x);

    Scalar a = Scalar(2) / Scalar::pi_pow(1);
    Scalar b = Scalar(3) * Scalar::s_pow(1) / Scalar::pi_pow(2);
    Poly expected_num;
    expected_num.add_term({1, 0}, GaussianRational(2));
    expected_num.add_term({0, 1}, GaussianRational(3));
    CHECK(a + b == Scalar(expected_num, Poly::monomial(GaussianRational(1), 2, 0)));
}

TEST_CASE("scalar multiplication and inversion") {
    Scalar u = Scalar(18) * Scalar::s_pow(2) * Scalar::pi_pow(-3);
    CHECK(u * u.inverse() == Scalar(1));
    CHECK(u.inverse() == Scalar::pi_pow(3) / (Scalar(18) * Scalar::s_pow(2)));

    CHECK(Scalar(-15).inverse() * Scalar::pi_pow(-1) ==
          (Scalar(-15) * Scalar::pi_pow(1)).inverse());

    Scalar is = Scalar::i() * Scalar::s_pow(1);
    CHECK(is * is == -Scalar::s_pow(2));

    CHECK_THROWS_AS(Scalar(0).inverse(), std::domain_error);
}

TEST_CASE("conjugation") {
    Scalar is = Scalar::i() * Scalar::s_pow(1);
    CHECK(is.conj() == -is);
    Scalar real = Scalar(2) / Scalar::pi_pow(1);
    CHECK(real.conj() == real);

    std::mt19937 rng(11);
    for (int k = 0; k < 20; ++k) {
        Scalar x = random_scalar(rng);
        CHECK(x.conj().conj() == x);
    }
}

TEST_CASE("substitution") {
    Scalar a = Scalar(2) / Scalar::pi_pow(1) + Scalar(3) * Scalar::s_pow(1) / Scalar::pi_pow(2);
    CHECK(a.substitute(0) == Scalar(2) / Scalar::pi_pow(1));
    CHECK(Scalar::s_pow(2).substitute(1) == Scalar(1));
    Scalar pole = Scalar::pi_pow(3) / (Scalar(18) * Scalar::s_pow(2));
    CHECK_THROWS_AS(pole.substitute(0), std::domain_error);

    // substitute and conjugate commute
    std::mt19937 rng(13);
    for (int k = 0; k < 20; ++k) {
        Scalar x = random_scalar(rng);
        try {
            Scalar lhs = x.conj().substitute(2);
            Scalar rhs = x.substitute(2).conj();
            CHECK(lhs == rhs);
        } catch (const std::domain_error&) {
            CHECK_THROWS_AS(x.substitute(2), std::domain_error);
        }
    }

    // lambda substitution keeps odd powers of s
    Scalar odd = Scalar::s_pow(3);
    CHECK(odd.substitute_lambda(4) == Scalar(4) * Scalar::s_pow(1));
}

TEST_CASE("field axioms on random elements") {
    std::mt19937 rng(3);
    for (int k = 0; k < 12; ++k) {
        Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        Scalar nz = random_scalar(rng, true);
        CHECK(nz * nz.inverse() == Scalar(1));
    }
}

TEST_CASE("normalization is canonical") {
    // same value built two ways must be structurally identical
    Poly n1, d1;
    n1.add_term({1, 0}, GaussianRational(2));
    n1.add_term({0, 1}, GaussianRational(2));
    d1.add_term({2, 0}, GaussianRational(4));
    Scalar a(n1, d1);  // (2pi + 2s)/(4pi^2)

    Poly n2, d2;
    n2.add_term({1, 0}, GaussianRational(1));
    n2.add_term({0, 1}, GaussianRational(1));
    d2.add_term({2, 0}, GaussianRational(2));
    Scalar b(n2, d2);
    CHECK(a == b);
    CHECK(a.den().lead_coeff() == GaussianRational(1));

    // gcd cancellation: (pi^2 - s^2)/(pi - s) = pi + s
    Poly num, den, expect;
    num.add_term({2, 0}, GaussianRational(1));
    num.add_term({0, 2}, GaussianRational(-1));
    den.add_term({1, 0}, GaussianRational(1));
    den.add_term({0, 1}, GaussianRational(-1));
    expect.add_term({1, 0}, GaussianRational(1));
    expect.add_term({0, 1}, GaussianRational(1));
    CHECK(Scalar(num, den) == Scalar(expect, Poly(GaussianRational(1))));
}

TEST_CASE("ball and sphere volumes") {
    CHECK(unit_ball_volume(4) == Scalar::pi_pow(2) * Scalar::fraction(1, 2));
    CHECK(sphere_volume(5) == Scalar::pi_pow(3));
    CHECK(unit_ball_volume(0) == Scalar(1));
    CHECK(unit_ball_volume(6) == Scalar::pi_pow(3) * Scalar::fraction(1, 6));
    CHECK(unit_ball_volume(7) == Scalar::pi_pow(3) * Scalar::fraction(16, 105));
    CHECK(sphere_volume(6) == Scalar::pi_pow(3) * Scalar::fraction(16, 15));
    CHECK(sphere_volume(7) == Scalar::pi_pow(4) * Scalar::fraction(1, 3));
    CHECK_THROWS_AS(unit_ball_volume(8), std::domain_error);
    CHECK_THROWS_AS(sphere_volume(-1), std::domain_error);
}

TEST_CASE("textual round trip") {
    std::mt19937 rng(17);
    for (int k = 0; k < 25; ++k) {
        Scalar x = random_scalar(rng);
        CHECK(Scalar::parse(x.str()) == x);
    }
    Scalar z(0);
    CHECK(Scalar::parse(z.str()) == z);
}
