#include "doctest.h"

#include "octig/s7.hpp"

using namespace octig;

namespace {
const S7Model& M7() { return S7Model::instance(); }
}

TEST_CASE("epsilon tables") {
    const EpsilonTables& eps = M7().epsilon();
    CHECK(eps.eps3(1, 2, 3) == 1);
    CHECK(eps.eps3(1, 4, 5) == 1);
    CHECK(eps.eps3(2, 5, 7) == -1);
    CHECK(eps.eps3(3, 5, 6) == -1);
    CHECK(eps.eps3(2, 1, 3) == -1);
    CHECK(eps.eps3(1, 1, 2) == 0);
    CHECK(eps.eps3(1, 2, 4) == 0);

    CHECK(eps.eps4(4, 5, 6, 7) == 1);
    CHECK(eps.eps4(2, 3, 4, 5) == 1);
    CHECK(eps.eps4(1, 2, 4, 7) == -1);
    CHECK(eps.eps4(5, 4, 6, 7) == -1);
    CHECK(eps.eps4(1, 1, 2, 3) == 0);
    CHECK_THROWS_AS(eps.eps3(0, 1, 2), std::domain_error);
}

TEST_CASE("theta2 expansion matches the phi triples containing index 1") {
    const Coframe& cf = M7().coframe();
    auto w = [&cf](int i) { return FormElement::generator(&cf, i - 1); };
    FormElement expected = wedge(w(2), w(3)) + wedge(w(4), w(5)) + wedge(w(6), w(7));
    CHECK(M7().expand(M7().theta2()) == expected);
}

TEST_CASE("chi products vanish unless degrees are complementary") {
    for (int i = 0; i <= 3; ++i) {
        for (int j = 0; j <= 3; ++j) {
            FormElement prod = M7().expand(M7().chi(i) * M7().chi(j));
            INFO("i=", i, " j=", j);
            if (i + j == 3)
                CHECK(!prod.is_zero());
            else
                CHECK(prod.is_zero());
            // conjugate pairs vanish in the same pattern
            FormElement prodb = M7().expand(M7().chibar(i) * M7().chibar(j));
            if (i + j == 3)
                CHECK(!prodb.is_zero());
            else
                CHECK(prodb.is_zero());
        }
    }
}

TEST_CASE("the complementary chi products are proportional") {
    FormElement base = M7().expand(M7().chi(0) * M7().chi(3));
    FormElement other = M7().expand(M7().chi(1) * M7().chi(2));
    auto sol = solve_linear({other}, {base});
    REQUIRE(sol.has_value());
    CHECK(!(*sol)[0][0].is_zero());
    // and the reversed order, for all i
    FormElement third = M7().expand(M7().chi(2) * M7().chi(1));
    auto sol2 = solve_linear({third}, {base});
    REQUIRE(sol2.has_value());
}

TEST_CASE("chi wedge chibar lies in the theta span") {
    std::vector<FormElement> theta_span;
    for (const NamedPoly& mono : M7().invariant_monomials(6, true)) {
        // keep pure theta monomials
        bool pure = true;
        for (const auto& [m, c] : mono.terms())
            if (m.odd_mask != 0) pure = false;
        if (pure) theta_span.push_back(M7().expand(mono));
    }
    REQUIRE(theta_span.size() == 20);

    for (int i = 0; i <= 3; ++i) {
        for (int j = 0; j <= 3; ++j) {
            FormElement prod = M7().expand(M7().chi(i) * M7().chibar(j));
            if (prod.is_zero()) continue;
            INFO("i=", i, " j=", j);
            CHECK(solve_linear({prod}, theta_span).has_value());
        }
    }
}

TEST_CASE("euler-verdier pullback on the 7-sphere") {
    CHECK(M7().euler_verdier_pullback(M7().theta2()) == -M7().theta2());
    CHECK(M7().euler_verdier_pullback(M7().theta1()) == M7().theta1());
    CHECK(M7().euler_verdier_pullback(M7().chi(3)) == M7().chibar(3));
    CHECK(M7().euler_verdier_pullback(M7().chi(0)) == -M7().chibar(0));

    // Theta_{6,3} form is theta2^3/12; a* gives -itself, so the measure-level
    // involution (-1)^7 a* fixes it, consistent with sigma Theta_{k,p} = (-1)^k.
    NamedPoly t63 = (M7().theta2() * M7().theta2() * M7().theta2()).scaled(Scalar::fraction(1, 12));
    CHECK(M7().euler_verdier_pullback(t63) == -t63);

    NamedPoly p = M7().theta0() * M7().chi(1) + M7().alpha() * M7().theta1() * M7().chi(2);
    CHECK(M7().euler_verdier_pullback(M7().euler_verdier_pullback(p)) == p);

    for (int g = 0; g < M7().real_algebra().size(); ++g) {
        NamedPoly gen = NamedPoly::generator(&M7().real_algebra(), g);
        CHECK(M7().expand(M7().euler_verdier_pullback(gen)) ==
              M7().euler_verdier_coframe(M7().expand(gen)));
    }
}

TEST_CASE("degree-6 invariant spans match the measure counts") {
    // alpha-free, thetaS-free weight-0 monomials of degree 6 span the
    // 10-dimensional Theta_{k,p} space; adding the chi0 chi3 products gives 12.
    const NamedAlgebra& ra = M7().real_algebra();
    int ts = ra.even_slot(ra.index_of("thetaS"));

    std::vector<FormElement> theta_forms;
    for (const NamedPoly& mono : M7().invariant_monomials(6, true)) {
        bool ok = true;
        for (const auto& [m, c] : mono.terms()) {
            if (m.odd_mask != 0 || m.even_exp[ts] != 0) ok = false;
        }
        if (ok) theta_forms.push_back(M7().expand(mono));
    }
    auto [cols, masks] = form_columns(theta_forms);
    CHECK(rank(ScalarMatrix(cols.begin(), cols.end())) == 10);

    theta_forms.push_back(M7().expand(M7().chiR(0) * M7().chiR(3) - M7().chiI(0) * M7().chiI(3)));
    theta_forms.push_back(M7().expand(M7().chiR(0) * M7().chiI(3) + M7().chiI(0) * M7().chiR(3)));
    auto [cols2, masks2] = form_columns(theta_forms);
    CHECK(rank(ScalarMatrix(cols2.begin(), cols2.end())) == 12);
}

TEST_CASE("real and complex presentations are inverse on the 7-sphere") {
    for (int g = 0; g < M7().real_algebra().size(); ++g) {
        NamedPoly gen = NamedPoly::generator(&M7().real_algebra(), g);
        CHECK(M7().to_real(M7().to_complex(gen)) == gen);
    }
}
