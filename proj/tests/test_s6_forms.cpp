#include "doctest.h"

#include "octig/s6.hpp"

using namespace octig;

namespace {

const S6Model& M() { return S6Model::instance(); }

Scalar half() { return Scalar::fraction(1, 2); }

}  // namespace

TEST_CASE("expansion of named generators") {
    const auto& cf = M().coframe();
    FormElement w1 = FormElement::generator(&cf, 0);
    CHECK(M().expand(M().alpha()) == w1);

    FormElement theta2 = wedge(FormElement::generator(&cf, 2), FormElement::generator(&cf, 3)) +
                         wedge(FormElement::generator(&cf, 4), FormElement::generator(&cf, 5));
    CHECK(M().expand(M().theta2()) == theta2);

    CHECK(M().expand(M().chi(1) * M().theta1() * M().thetaS()).is_zero());
}

TEST_CASE("derivative table basics") {
    CHECK(M().d(M().alpha()) == -(M().beta() * M().gamma()) - M().thetaS());
    CHECK(M().d(NamedPoly::constant(&M().real_algebra(), Scalar(5))).is_zero());

    NamedPoly ab = M().alpha() * M().beta();
    NamedPoly leibniz = M().d(M().alpha()) * M().beta() - M().alpha() * M().d(M().beta());
    CHECK(M().d(ab) == leibniz);
}

TEST_CASE("d squared vanishes on every generator") {
    for (int g = 0; g < M().real_algebra().size(); ++g) {
        NamedPoly gen = NamedPoly::generator(&M().real_algebra(), g);
        FormElement ddg = M().expand(M().d(M().d(gen)));
        INFO("generator ", M().real_algebra().gen(g).name);
        CHECK(ddg.is_zero());
    }
}

TEST_CASE("printed algebraic relations hold under expansion") {
    NamedPoly t0 = M().theta0(), t1 = M().theta1(), t2 = M().theta2(), ts = M().thetaS();

    CHECK(M().expand(M().chi(1) * t1 * ts).is_zero());
    CHECK(M().expand(M().chi(1) * (ts * ts - t1 * t1)).is_zero());

    NamedPoly lhs1 = t2 * M().chiI(0);
    NamedPoly rhs1 = (t1 * M().chiI(1)).scaled(-half()) + (ts * M().chiR(1)).scaled(half());
    CHECK(M().expand(lhs1 - rhs1).is_zero());

    NamedPoly lhs2 = t0 * M().chiI(2);
    NamedPoly rhs2 = (t1 * M().chiI(1)).scaled(-half()) - (ts * M().chiR(1)).scaled(half());
    CHECK(M().expand(lhs2 - rhs2).is_zero());

    CHECK(M().expand(t0 * t0 * t2 + t0 * ts * ts).is_zero());

    // solve_linear recognizes the zero combination in an empty span
    auto sol = solve_linear({M().expand(M().chi(1) * t1 * ts)}, {});
    CHECK(sol.has_value());
}

TEST_CASE("top-form ratios against the bundle volume") {
    NamedPoly base = M().alpha() * M().beta() * M().gamma();
    NamedPoly t0 = M().theta0(), t2 = M().theta2();
    const FormElement& dvol = M().dvol_ss6();

    auto ratio = [&](const NamedPoly& p) { return top_coefficient(M().expand(p), dvol); };

    CHECK(ratio(base * t0 * t2 * M().chiR(1) * M().chiR(1)) == Scalar(4));
    CHECK(ratio(base * t0 * t2 * M().chiI(1) * M().chiI(1)) == Scalar(4));
    CHECK(ratio(base * t0 * t0 * t2 * t2) == Scalar(4));
    CHECK(ratio(base * t0 * t2 * M().theta1() * M().theta1()) == Scalar(-4));
    CHECK(ratio(base * t0 * t2 * M().thetaS() * M().thetaS()) == Scalar(-4));
}

TEST_CASE("euler-verdier pullback") {
    CHECK(M().euler_verdier_pullback(M().theta1()) == -M().theta1());
    CHECK(M().euler_verdier_pullback(M().chi(0)) == -M().chi(0));
    CHECK(M().euler_verdier_pullback(M().chi(1)) == M().chi(1));
    CHECK(M().euler_verdier_pullback(M().gamma()) == M().gamma());

    // involution and wedge homomorphism
    NamedPoly p = M().theta1() * M().chi(2) + M().alpha() * M().gamma() * M().thetaS();
    CHECK(M().euler_verdier_pullback(M().euler_verdier_pullback(p)) == p);
    NamedPoly q = M().beta() * M().chiR(0);
    CHECK(M().euler_verdier_pullback(p * q) ==
          M().euler_verdier_pullback(p) * M().euler_verdier_pullback(q));
}

TEST_CASE("antipodal pullback") {
    CHECK(M().antipodal_pullback(M().chi(2)) == -M().chibar(2));
    CHECK(M().antipodal_pullback(M().chi(0)) == -M().chibar(0));
    CHECK(M().antipodal_pullback(M().beta()) == -M().beta());
    CHECK(M().antipodal_pullback(M().gamma()) == -M().gamma());
    CHECK(M().antipodal_pullback(M().theta1()) == -M().theta1());

    NamedPoly p = M().theta0() * M().chi(1) + M().beta() * M().gamma() * M().theta2();
    CHECK(M().antipodal_pullback(M().antipodal_pullback(p)) == p);
}

TEST_CASE("named involutions match coframe-level sign maps") {
    for (int g = 0; g < M().real_algebra().size(); ++g) {
        NamedPoly gen = NamedPoly::generator(&M().real_algebra(), g);
        CHECK(M().expand(M().euler_verdier_pullback(gen)) ==
              M().euler_verdier_coframe(M().expand(gen)));
        CHECK(M().expand(M().antipodal_pullback(gen)) == M().antipodal_coframe(M().expand(gen)));
    }
}

TEST_CASE("real and complex presentations are inverse") {
    for (int g = 0; g < M().real_algebra().size(); ++g) {
        NamedPoly gen = NamedPoly::generator(&M().real_algebra(), g);
        CHECK(M().to_real(M().to_complex(gen)) == gen);
    }
    for (int g = 0; g < M().complex_algebra().size(); ++g) {
        NamedPoly gen = NamedPoly::generator(&M().complex_algebra(), g);
        CHECK(M().to_complex(M().to_real(gen)) == gen);
    }
}

TEST_CASE("bidegree and weight pattern of the differential") {
    // For a complex generator of bidegree (k, v) and weight e, d = eta1 + s
    // eta2 + s^2 eta3 with eta1 in (k, v+1) weight e, eta2 in (k+1, v)
    // weights e +- 1, eta3 in (k+2, v-1) weight e and divisible by alpha.
    const NamedAlgebra& ca = M().complex_algebra();
    int alpha_slot = ca.odd_slot(ca.index_of("alpha"));

    for (int g = 0; g < ca.size(); ++g) {
        NamedPoly gen = NamedPoly::generator(&ca, g);
        const auto& meta = ca.gen(g);
        NamedPoly dg = M().to_complex(M().d(M().to_real(gen)));
        int k = meta.bideg_h, v = meta.bideg_v, e = meta.weight;
        INFO("generator ", meta.name);

        for (int spow = 0; spow <= 2; ++spow) {
            NamedPoly part = dg.coeff_s(spow);
            for (const auto& [mono, c] : part.terms()) {
                auto [h, vv] = part.monomial_bidegree(mono);
                int w = part.monomial_weight(mono);
                if (spow == 0) {
                    CHECK(std::pair{h, vv} == std::pair{k, v + 1});
                    CHECK(w == e);
                } else if (spow == 1) {
                    CHECK(std::pair{h, vv} == std::pair{k + 1, v});
                    CHECK(std::abs(w - e) == 1);
                } else {
                    CHECK(std::pair{h, vv} == std::pair{k + 2, v - 1});
                    CHECK(w == e);
                    CHECK((mono.odd_mask & (1u << alpha_slot)) != 0);
                }
            }
        }
    }
}

TEST_CASE("fiber integral") {
    // Delta_{0,0} form: (c_{0,0}/2) gamma theta0^2 with c_{0,0} = 1/pi^3.
    NamedPoly d00 = (M().gamma() * M().theta0() * M().theta0())
                        .scaled(Scalar::pi_pow(-3) * half());
    CHECK(M().fiber_integral(d00) == Scalar(1));

    NamedPoly horizontal = M().beta() * M().theta1() * M().theta2();
    CHECK(M().fiber_integral(horizontal) == Scalar(0));
    CHECK(M().fiber_integral(NamedPoly(&M().real_algebra())) == Scalar(0));
}
