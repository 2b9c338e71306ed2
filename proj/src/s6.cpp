#include "octig/s6.hpp"

namespace octig {

namespace {

std::vector<CoframeGenerator> s6_coframe_generators() {
    // Solder forms first, then connection forms; gamma is phi_{1bar,1}.
    return {
        {"w1", GenKind::Horizontal, 0},  {"w1b", GenKind::Horizontal, 0},
        {"w2", GenKind::Horizontal, 0},  {"w2b", GenKind::Horizontal, 0},
        {"w3", GenKind::Horizontal, 0},  {"w3b", GenKind::Horizontal, 0},
        {"g", GenKind::Vertical, 0},     {"f2", GenKind::Vertical, 0},
        {"f2b", GenKind::Vertical, 0},   {"f3", GenKind::Vertical, 0},
        {"f3b", GenKind::Vertical, 0},
    };
}

std::vector<NamedGenerator> s6_real_generators() {
    return {
        {"alpha", 1, 1, 0, 0}, {"beta", 1, 1, 0, 0},  {"gamma", 1, 0, 1, 0},
        {"theta0", 2, 0, 2, 0}, {"theta1", 2, 1, 1, 0}, {"theta2", 2, 2, 0, 0},
        {"thetaS", 2, 1, 1, 0},
        {"chi0R", 2, 0, 2, 0}, {"chi0I", 2, 0, 2, 0},
        {"chi1R", 2, 1, 1, 0}, {"chi1I", 2, 1, 1, 0},
        {"chi2R", 2, 2, 0, 0}, {"chi2I", 2, 2, 0, 0},
    };
}

std::vector<NamedGenerator> s6_complex_generators() {
    return {
        {"alpha", 1, 1, 0, 0}, {"beta", 1, 1, 0, 0},  {"gamma", 1, 0, 1, 0},
        {"theta0", 2, 0, 2, 0}, {"theta1", 2, 1, 1, 0}, {"theta2", 2, 2, 0, 0},
        {"thetaS", 2, 1, 1, 0},
        {"chi0", 2, 0, 2, 1},  {"chi1", 2, 1, 1, 1},  {"chi2", 2, 2, 0, 1},
        {"chi0b", 2, 0, 2, -1}, {"chi1b", 2, 1, 1, -1}, {"chi2b", 2, 2, 0, -1},
    };
}

}  // namespace

const S6Model& S6Model::instance() {
    static const S6Model model;
    return model;
}

S6Model::S6Model()
    : coframe_(s6_coframe_generators()),
      real_alg_(s6_real_generators()),
      complex_alg_(s6_complex_generators()) {
    const Coframe* cf = &coframe_;
    auto pair = [cf](int i, int j) {
        return wedge(FormElement::generator(cf, i), FormElement::generator(cf, j));
    };

    // Coframe indices: 0 w1, 1 w1b, 2 w2, 3 w2b, 4 w3, 5 w3b,
    //                  6 g, 7 f2, 8 f2b, 9 f3, 10 f3b.
    expand_images_.resize(real_alg_.size());
    expand_images_[real_alg_.index_of("alpha")] = FormElement::generator(cf, 0);
    expand_images_[real_alg_.index_of("beta")] = FormElement::generator(cf, 1);
    expand_images_[real_alg_.index_of("gamma")] = FormElement::generator(cf, 6);
    expand_images_[real_alg_.index_of("theta0")] = pair(7, 8) + pair(9, 10);
    expand_images_[real_alg_.index_of("theta1")] = pair(2, 8) - pair(3, 7) + pair(4, 10) - pair(5, 9);
    expand_images_[real_alg_.index_of("theta2")] = pair(2, 3) + pair(4, 5);
    expand_images_[real_alg_.index_of("thetaS")] = pair(2, 7) + pair(3, 8) + pair(4, 9) + pair(5, 10);
    expand_images_[real_alg_.index_of("chi0R")] = pair(7, 9) - pair(8, 10);
    expand_images_[real_alg_.index_of("chi0I")] = pair(7, 10) + pair(8, 9);
    expand_images_[real_alg_.index_of("chi1R")] = pair(2, 9) - pair(3, 10) - pair(4, 7) + pair(5, 8);
    expand_images_[real_alg_.index_of("chi1I")] = pair(3, 9) + pair(2, 10) - pair(4, 8) - pair(5, 7);
    expand_images_[real_alg_.index_of("chi2R")] = pair(2, 4) - pair(3, 5);
    expand_images_[real_alg_.index_of("chi2I")] = pair(2, 5) + pair(3, 4);

    // Real <-> complex generator substitutions.
    const NamedAlgebra* ra = &real_alg_;
    const NamedAlgebra* ca = &complex_alg_;
    Scalar i = Scalar::i();
    Scalar half = Scalar::fraction(1, 2);

    to_complex_images_.resize(real_alg_.size());
    for (const char* n : {"alpha", "beta", "gamma", "theta0", "theta1", "theta2", "thetaS"})
        to_complex_images_[real_alg_.index_of(n)] = NamedPoly::generator(ca, n);
    for (int k = 0; k < 3; ++k) {
        NamedPoly ck = NamedPoly::generator(ca, "chi" + std::to_string(k));
        NamedPoly ckb = NamedPoly::generator(ca, "chi" + std::to_string(k) + "b");
        to_complex_images_[real_alg_.index_of("chi" + std::to_string(k) + "R")] =
            (ck + ckb).scaled(half);
        to_complex_images_[real_alg_.index_of("chi" + std::to_string(k) + "I")] =
            (ck - ckb).scaled(-(i * half));
    }

    to_real_images_.resize(complex_alg_.size());
    for (const char* n : {"alpha", "beta", "gamma", "theta0", "theta1", "theta2", "thetaS"})
        to_real_images_[complex_alg_.index_of(n)] = NamedPoly::generator(ra, n);
    for (int k = 0; k < 3; ++k) {
        NamedPoly r = NamedPoly::generator(ra, "chi" + std::to_string(k) + "R");
        NamedPoly im = NamedPoly::generator(ra, "chi" + std::to_string(k) + "I");
        to_real_images_[complex_alg_.index_of("chi" + std::to_string(k))] = r + im.scaled(i);
        to_real_images_[complex_alg_.index_of("chi" + std::to_string(k) + "b")] = r - im.scaled(i);
    }

    // Derivative table on the complex presentation.
    auto cg = [ca](const std::string& n) { return NamedPoly::generator(ca, n); };
    Scalar sq = Scalar::s_pow(1);       // sqrt(lambda)
    Scalar lam = Scalar::lambda_pow(1);  // lambda
    NamedPoly al = cg("alpha"), be = cg("beta"), ga = cg("gamma");
    NamedPoly t0 = cg("theta0"), t1 = cg("theta1"), t2 = cg("theta2"), ts = cg("thetaS");
    NamedPoly x0 = cg("chi0"), x1 = cg("chi1"), x2 = cg("chi2");
    NamedPoly x0b = cg("chi0b"), x1b = cg("chi1b"), x2b = cg("chi2b");
    auto re_of = [&](const NamedPoly& a, const NamedPoly& ab) { return (a + ab).scaled(half); };
    auto im_of = [&](const NamedPoly& a, const NamedPoly& ab) { return (a - ab).scaled(-(i * half)); };
    NamedPoly x0R = re_of(x0, x0b), x0I = im_of(x0, x0b);
    NamedPoly x1R = re_of(x1, x1b), x1I = im_of(x1, x1b);
    NamedPoly x2R = re_of(x2, x2b), x2I = im_of(x2, x2b);

    std::vector<NamedPoly> dC(complex_alg_.size(), NamedPoly(ca));
    dC[ca->index_of("alpha")] = -(be * ga) - ts;
    dC[ca->index_of("beta")] = al * ga + t1 - x2R.scaled(Scalar(2) * sq);
    dC[ca->index_of("gamma")] = t0.scaled(Scalar(2)) - x1R.scaled(sq) - (al * be).scaled(lam);
    dC[ca->index_of("theta0")] =
        -((-(al * x0R) + be * x0I + ga * x1I).scaled(sq)) - (al * t1).scaled(lam);
    dC[ca->index_of("theta1")] = (al * t0).scaled(Scalar(2)) + ga * ts -
                                 (-(al * x1R) + (be * x1I).scaled(Scalar(2)) +
                                  (ga * x2I).scaled(Scalar(2)))
                                     .scaled(sq) -
                                 (al * t2).scaled(Scalar(2) * lam);
    dC[ca->index_of("theta2")] =
        al * t1 + be * ts + (al * x2R - (be * x2I).scaled(Scalar(3))).scaled(sq);
    dC[ca->index_of("thetaS")] = (be * t0).scaled(Scalar(2)) - ga * t1 -
                                 (be * x1R - (ga * x2R).scaled(Scalar(2))).scaled(sq);
    dC[ca->index_of("chi0")] = (ga * x0).scaled(Scalar(3) * i) +
                               ((-al + be.scaled(i)) * t0 + ga * (ts + t1.scaled(i))).scaled(sq) -
                               (al * x1).scaled(lam);
    dC[ca->index_of("chi1")] =
        ((al + be.scaled(i)) * x0).scaled(Scalar(2)) + (ga * x1).scaled(Scalar(2) * i) +
        ((-al + be.scaled(Scalar(2) * i)) * t1 + be * ts + (ga * t2).scaled(Scalar(2) * i))
            .scaled(sq) -
        (al * x2).scaled(Scalar(2) * lam);
    dC[ca->index_of("chi2")] = (al + be.scaled(i)) * x1 + (ga * x2).scaled(i) -
                               ((al - be.scaled(Scalar(3) * i)) * t2).scaled(sq);

    // bar: conjugate coefficients and swap chi_k <-> chibar_k.
    std::vector<NamedPoly> bar_images(complex_alg_.size());
    for (const char* n : {"alpha", "beta", "gamma", "theta0", "theta1", "theta2", "thetaS"})
        bar_images[ca->index_of(n)] = NamedPoly::generator(ca, n);
    for (int k = 0; k < 3; ++k) {
        bar_images[ca->index_of("chi" + std::to_string(k))] =
            NamedPoly::generator(ca, "chi" + std::to_string(k) + "b");
        bar_images[ca->index_of("chi" + std::to_string(k) + "b")] =
            NamedPoly::generator(ca, "chi" + std::to_string(k));
    }
    auto bar = [&](const NamedPoly& p) { return apply_generator_signs(p, bar_images, true); };
    dC[ca->index_of("chi0b")] = bar(dC[ca->index_of("chi0")]);
    dC[ca->index_of("chi1b")] = bar(dC[ca->index_of("chi1")]);
    dC[ca->index_of("chi2b")] = bar(dC[ca->index_of("chi2")]);

    // Real-generator derivative table, derived from the complex one.
    d_table_.resize(real_alg_.size());
    for (const char* n : {"alpha", "beta", "gamma", "theta0", "theta1", "theta2", "thetaS"})
        d_table_[real_alg_.index_of(n)] = to_real(dC[ca->index_of(n)]);
    for (int k = 0; k < 3; ++k) {
        const NamedPoly& dchi = dC[ca->index_of("chi" + std::to_string(k))];
        const NamedPoly& dchib = dC[ca->index_of("chi" + std::to_string(k) + "b")];
        d_table_[real_alg_.index_of("chi" + std::to_string(k) + "R")] =
            to_real((dchi + dchib).scaled(half));
        d_table_[real_alg_.index_of("chi" + std::to_string(k) + "I")] =
            to_real((dchi - dchib).scaled(-(i * half)));
    }

    // Euler-Verdier (fiberwise antipodal) pullback on generators:
    // a* w_i = (-1)^i w_i, a* phi_{i1} = (-1)^{i+1} phi_{i1}, same for bars.
    auto signed_gen = [ra](const std::string& n, int sign) {
        return NamedPoly::generator(ra, n).scaled(Scalar(sign));
    };
    ev_images_.resize(real_alg_.size());
    ev_images_[real_alg_.index_of("alpha")] = signed_gen("alpha", -1);
    ev_images_[real_alg_.index_of("beta")] = signed_gen("beta", -1);
    ev_images_[real_alg_.index_of("gamma")] = signed_gen("gamma", 1);
    ev_images_[real_alg_.index_of("theta0")] = signed_gen("theta0", 1);
    ev_images_[real_alg_.index_of("theta1")] = signed_gen("theta1", -1);
    ev_images_[real_alg_.index_of("theta2")] = signed_gen("theta2", 1);
    ev_images_[real_alg_.index_of("thetaS")] = signed_gen("thetaS", -1);
    for (int k = 0; k < 3; ++k) {
        int sign = (k % 2 == 0) ? -1 : 1;  // (-1)^{k+1}
        ev_images_[real_alg_.index_of("chi" + std::to_string(k) + "R")] =
            signed_gen("chi" + std::to_string(k) + "R", sign);
        ev_images_[real_alg_.index_of("chi" + std::to_string(k) + "I")] =
            signed_gen("chi" + std::to_string(k) + "I", sign);
    }
    ev_coframe_signs_ = {-1, -1, 1, 1, -1, -1, 1, -1, -1, 1, 1};

    // Antipodal map: A* w_i = (-1)^{i+1} w_i, A* w_ibar = (-1)^i w_ibar,
    // A* phi_{i1} = (-1)^{i+1} phi_{i1}, A* phi_{ibar,1} = (-1)^i phi_{ibar,1}.
    antipodal_images_.resize(real_alg_.size());
    antipodal_images_[real_alg_.index_of("alpha")] = signed_gen("alpha", 1);
    antipodal_images_[real_alg_.index_of("beta")] = signed_gen("beta", -1);
    antipodal_images_[real_alg_.index_of("gamma")] = signed_gen("gamma", -1);
    antipodal_images_[real_alg_.index_of("theta0")] = signed_gen("theta0", -1);
    antipodal_images_[real_alg_.index_of("theta1")] = signed_gen("theta1", -1);
    antipodal_images_[real_alg_.index_of("theta2")] = signed_gen("theta2", -1);
    antipodal_images_[real_alg_.index_of("thetaS")] = signed_gen("thetaS", 1);
    for (int k = 0; k < 3; ++k) {
        antipodal_images_[real_alg_.index_of("chi" + std::to_string(k) + "R")] =
            signed_gen("chi" + std::to_string(k) + "R", -1);
        antipodal_images_[real_alg_.index_of("chi" + std::to_string(k) + "I")] =
            signed_gen("chi" + std::to_string(k) + "I", 1);
    }
    antipodal_coframe_signs_ = {1, -1, -1, 1, 1, -1, -1, -1, 1, 1, -1};

    dvol_ss6_ = expand(
        (alpha() * beta() * gamma() * theta0() * theta0() * theta2() * theta2()).scaled(
            Scalar::fraction(1, 4)));
}

NamedPoly S6Model::chi(int k) const {
    return chiR(k) + chiI(k).scaled(Scalar::i());
}

NamedPoly S6Model::chibar(int k) const {
    return chiR(k) - chiI(k).scaled(Scalar::i());
}

FormElement S6Model::expand(const NamedPoly& p) const {
    FormElement unit = FormElement::constant(&coframe_, Scalar(1));
    return substitute_generators(p, unit, expand_images_);
}

NamedPoly S6Model::d(const NamedPoly& p) const { return apply_derivation(p, d_table_); }

NamedPoly S6Model::to_complex(const NamedPoly& real_poly) const {
    return substitute_generators(real_poly, NamedPoly::one(&complex_alg_), to_complex_images_);
}

NamedPoly S6Model::to_real(const NamedPoly& complex_poly) const {
    return substitute_generators(complex_poly, NamedPoly::one(&real_alg_), to_real_images_);
}

NamedPoly S6Model::euler_verdier_pullback(const NamedPoly& p) const {
    return apply_generator_signs(p, ev_images_, false);
}

NamedPoly S6Model::antipodal_pullback(const NamedPoly& p) const {
    return apply_generator_signs(p, antipodal_images_, false);
}

namespace {

FormElement apply_coframe_signs(const FormElement& f, const std::vector<int>& signs) {
    FormElement r(f.frame());
    for (const auto& [mask, c] : f.terms()) {
        int sign = 1;
        for (size_t i = 0; i < signs.size(); ++i)
            if (mask & (1u << i)) sign *= signs[i];
        r.add_term(mask, sign < 0 ? -c : c);
    }
    return r;
}

}  // namespace

FormElement S6Model::euler_verdier_coframe(const FormElement& f) const {
    return apply_coframe_signs(f, ev_coframe_signs_);
}

FormElement S6Model::antipodal_coframe(const FormElement& f) const {
    return apply_coframe_signs(f, antipodal_coframe_signs_);
}

Scalar S6Model::fiber_integral(const NamedPoly& p) const {
    FormElement f = expand(p);
    // dvol_{S^5} = (1/2) gamma theta0^2 expands to +g^f2^f2b^f3^f3b.
    uint32_t fiber_mask = 0;
    for (int i = 6; i <= 10; ++i) fiber_mask |= 1u << i;
    return sphere_volume(5) * f.coefficient(fiber_mask);
}

std::vector<NamedPoly> S6Model::invariant_monomials(int degree, bool alpha_free) const {
    uint32_t forbidden = 0;
    if (alpha_free) forbidden = 1u << real_alg_.odd_slot(real_alg_.index_of("alpha"));
    return algebra_monomials(&real_alg_, degree, forbidden);
}

}  // namespace octig
