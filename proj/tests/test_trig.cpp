#include "doctest.h"

#include "octig/trig.hpp"

using namespace octig;

TEST_CASE("canonical form eliminates cos squares") {
    TrigPoly c = TrigPoly::cos(Angle::T);
    TrigPoly c2 = c * c;
    TrigPoly expected = TrigPoly(Scalar(1)) - TrigPoly::sin(Angle::T, 2);
    CHECK(c2 == expected);

    // sin^2 + cos^2 = 1
    TrigPoly s = TrigPoly::sin(Angle::T);
    CHECK(s * s + c * c == TrigPoly(Scalar(1)));
}

TEST_CASE("definite integrals") {
    // int_0^pi sin^3 = 4/3
    TrigPoly s3 = TrigPoly::sin(Angle::T, 3);
    CHECK(s3.integrate_definite(Angle::T, TrigPoly::Interval::ZeroToPi) ==
          TrigPoly(Scalar::fraction(4, 3)));

    // int_0^pi sin^2 = pi/2
    TrigPoly s2 = TrigPoly::sin(Angle::T, 2);
    CHECK(s2.integrate_definite(Angle::T, TrigPoly::Interval::ZeroToPi) ==
          TrigPoly(Scalar::pi_pow(1) * Scalar::fraction(1, 2)));

    // int_0^{pi/2} sin = 1; int_0^{2pi} sin^2 = pi
    CHECK(TrigPoly::sin(Angle::Phi).integrate_definite(Angle::Phi,
                                                       TrigPoly::Interval::ZeroToHalfPi) ==
          TrigPoly(Scalar(1)));
    CHECK(TrigPoly::sin(Angle::Theta, 2)
              .integrate_definite(Angle::Theta, TrigPoly::Interval::ZeroToTwoPi) ==
          TrigPoly(Scalar::pi_pow(1)));

    // sin^a cos over symmetric intervals vanishes
    TrigPoly sc = TrigPoly::sin(Angle::T, 2) * TrigPoly::cos(Angle::T);
    CHECK(sc.integrate_definite(Angle::T, TrigPoly::Interval::ZeroToPi).is_zero());
}

TEST_CASE("symbolic upper bound") {
    // int_0^rho sin^2 cos = sin^3(rho)/3
    TrigPoly p = TrigPoly::sin(Angle::T, 2) * TrigPoly::cos(Angle::T);
    CHECK(p.integrate_to_symbolic(Angle::T, Angle::Rho) ==
          TrigPoly::sin(Angle::Rho, 3).scaled(Scalar::fraction(1, 3)));

    // int_0^rho sin^3 = 2/3 - cos(rho) + cos^3(rho)/3, canonicalized
    TrigPoly s3 = TrigPoly::sin(Angle::T, 3);
    TrigPoly integral = s3.integrate_to_symbolic(Angle::T, Angle::Rho);
    // check by differentiating back and by the value at rho = pi
    CHECK(integral.derivative(Angle::Rho) == TrigPoly::sin(Angle::Rho, 3));
    CHECK(integral.substitute_angle(Angle::Rho, Scalar(0), Scalar(-1)) ==
          TrigPoly(Scalar::fraction(4, 3)));

    // even sine powers are not trig-integrable in closed trig form
    CHECK_THROWS_AS(TrigPoly::sin(Angle::T, 2).integrate_to_symbolic(Angle::T, Angle::Rho),
                    std::domain_error);
}

TEST_CASE("derivative is inverse to symbolic integration") {
    TrigPoly f = TrigPoly::sin(Angle::T, 5) - TrigPoly::sin(Angle::T, 3) * TrigPoly::cos(Angle::T);
    TrigPoly integral = f.integrate_to_symbolic(Angle::T, Angle::Rho);
    // rename: the derivative in rho must equal f with t renamed to rho
    TrigPoly expected =
        TrigPoly::sin(Angle::Rho, 5) - TrigPoly::sin(Angle::Rho, 3) * TrigPoly::cos(Angle::Rho);
    CHECK(integral.derivative(Angle::Rho) == expected);
    // and the antiderivative vanishes at 0
    CHECK(integral.substitute_angle(Angle::Rho, Scalar(0), Scalar(1)).is_zero());
}

TEST_CASE("angle substitution") {
    TrigPoly p = TrigPoly::sin(Angle::T, 2) * TrigPoly::cos(Angle::Phi) + TrigPoly::cos(Angle::T);
    TrigPoly at_half_pi = p.substitute_angle(Angle::T, Scalar(1), Scalar(0));
    CHECK(at_half_pi == TrigPoly::cos(Angle::Phi));
}
