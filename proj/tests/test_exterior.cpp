#include "doctest.h"

#include "octig/exterior.hpp"
#include "octig/s6.hpp"

#include <random>

using namespace octig;

namespace {

const Coframe& s6_frame() { return S6Model::instance().coframe(); }

FormElement gen(int i) { return FormElement::generator(&s6_frame(), i); }

FormElement random_homogeneous(std::mt19937& rng, int degree) {
    const Coframe& cf = s6_frame();
    std::uniform_int_distribution<int> coeff(-3, 3), pick(0, cf.size() - 1);
    FormElement f(&cf);
    for (int t = 0; t < 4; ++t) {
        uint32_t mask = 0;
        while (std::popcount(mask) < degree) mask |= 1u << pick(rng);
        f.add_term(mask, Scalar(coeff(rng)));
    }
    return f;
}

}  // namespace

TEST_CASE("wedge basics") {
    const S6Model& m = S6Model::instance();
    FormElement w2 = gen(2), w2b = gen(3), w3 = gen(4);

    CHECK(wedge(wedge(w2, w2b), w2).is_zero());
    CHECK(wedge(w2, w3) == -wedge(w3, w2));

    FormElement theta2 = m.expand(m.theta2());
    FormElement sq = wedge(theta2, theta2);
    FormElement expected = wedge(wedge(gen(2), gen(3)), wedge(gen(4), gen(5))).scaled(Scalar(2));
    CHECK(sq == expected);
}

TEST_CASE("wedge rejects mixed coframes") {
    Coframe other({{"x", GenKind::Horizontal, 0}, {"y", GenKind::Horizontal, 0}});
    FormElement a = FormElement::generator(&other, 0);
    CHECK_THROWS_AS(wedge(a, gen(0)), std::invalid_argument);
}

TEST_CASE("grade_part") {
    const S6Model& m = S6Model::instance();
    FormElement ab = m.expand(m.alpha() * m.beta());          // bidegree (2,0)
    FormElement gth = m.expand(m.gamma() * m.theta0());       // (0,3)
    FormElement mixed = ab + gth;
    CHECK(mixed.grade_part(2, 0) == ab);
    CHECK(mixed.grade_part(0, 3) == gth);
    CHECK(mixed.grade_part(3, 0).is_zero());
}

TEST_CASE("top_coefficient") {
    const S6Model& m = S6Model::instance();
    const FormElement& dvol = m.dvol_ss6();
    CHECK(top_coefficient(dvol, dvol) == Scalar(1));
    CHECK(top_coefficient(dvol.scaled(Scalar(-7)), dvol) == Scalar(-7));
    CHECK_THROWS(top_coefficient(dvol, FormElement(&s6_frame())));
}

TEST_CASE("solve_linear") {
    FormElement x = gen(2) + gen(4).scaled(Scalar(3));
    auto sol = solve_linear({x.scaled(Scalar(2))}, {x});
    REQUIRE(sol.has_value());
    CHECK((*sol)[0][0] == Scalar(2));

    CHECK(!solve_linear({gen(2)}, {gen(4)}).has_value());

    // zero target: empty combination succeeds
    auto zero = solve_linear({FormElement(&s6_frame())}, {});
    CHECK(zero.has_value());
}

TEST_CASE("graded commutativity and associativity") {
    std::mt19937 rng(5);
    for (int da = 1; da <= 3; ++da) {
        for (int db = 1; db <= 3; ++db) {
            FormElement a = random_homogeneous(rng, da);
            FormElement b = random_homogeneous(rng, db);
            FormElement ab = wedge(a, b);
            FormElement ba = wedge(b, a);
            if ((da * db) % 2 == 1)
                CHECK(ab == -ba);
            else
                CHECK(ab == ba);

            FormElement c = random_homogeneous(rng, 1);
            CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
        }
    }
}

TEST_CASE("degree, bidegree and weight additivity") {
    Coframe weighted({{"p", GenKind::Horizontal, 1},
                      {"q", GenKind::Horizontal, -1},
                      {"r", GenKind::Vertical, 2},
                      {"t", GenKind::Vertical, 0}});
    FormElement p = FormElement::generator(&weighted, 0);
    FormElement r = FormElement::generator(&weighted, 2);
    FormElement pr = wedge(p, r);
    for (const auto& [mask, c] : pr.terms()) {
        CHECK(weighted.bidegree_of(mask) == std::pair{1, 1});
        CHECK(weighted.weight_of(mask) == 3);
    }

    std::mt19937 rng(9);
    FormElement a = random_homogeneous(rng, 2), b = random_homogeneous(rng, 3);
    const Coframe& cf = s6_frame();
    FormElement ab = wedge(a, b);
    for (const auto& [mask, c] : ab.terms()) {
        CHECK(std::popcount(mask) == 5);
        auto [h, v] = cf.bidegree_of(mask);
        CHECK(h + v == 5);
    }
}
