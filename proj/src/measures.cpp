#include "octig/measures.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace octig {

namespace {

Scalar c_kq(int k, int q) {
    auto fact = [](int n) {
        long f = 1;
        for (int j = 2; j <= n; ++j) f *= j;
        return f;
    };
    Scalar denom = Scalar(fact(q)) * Scalar(fact(3 - k + q)) * Scalar(fact(k - 2 * q)) *
                   unit_ball_volume(6 - k);
    return denom.inverse();
}

void check_su3_indices(int k, int q) {
    if (k < 0 || k > 6 || q < std::max(0, k - 3) || 2 * q > k)
        throw std::domain_error("curvature measure indices out of range");
}

NamedPoly theta_power(const S6Model& m, int a, int b, int c) {
    NamedPoly p = NamedPoly::one(&m.real_algebra());
    for (int j = 0; j < a; ++j) p *= m.theta0();
    for (int j = 0; j < b; ++j) p *= m.theta1();
    for (int j = 0; j < c; ++j) p *= m.theta2();
    return p;
}

// B_{k,q} = c_{k,q} beta theta0^{3-k+q} theta1^{k-2q-1} theta2^q
NamedPoly b_form(int k, int q) {
    const S6Model& m = S6Model::instance();
    if (k - 2 * q - 1 < 0) throw std::domain_error("B_{k,q} undefined");
    return (m.beta() * theta_power(m, 3 - k + q, k - 2 * q - 1, q)).scaled(c_kq(k, q));
}

// Gamma_{k,q} = (c_{k,q}/2) gamma theta0^{2-k+q} theta1^{k-2q} theta2^q
NamedPoly gamma_form(int k, int q) {
    const S6Model& m = S6Model::instance();
    if (2 - k + q < 0) throw std::domain_error("Gamma_{k,q} undefined");
    return (m.gamma() * theta_power(m, 2 - k + q, k - 2 * q, q))
        .scaled(c_kq(k, q) * Scalar::fraction(1, 2));
}

}  // namespace

CurvatureMeasure build_delta(int k, int q) {
    check_su3_indices(k, q);
    if (k == 6) {
        CurvatureMeasure vol{"D63", 6, 0, NamedPoly(&S6Model::instance().real_algebra()), true};
        return vol;
    }
    NamedPoly form(&S6Model::instance().real_algebra());
    if (3 - k + q > 0) form += gamma_form(k, q).scaled(Scalar(2 * (3 - k + q)));
    if (k - 2 * q > 0) form += b_form(k, q).scaled(Scalar(k - 2 * q));
    form = form.scaled(Scalar::fraction(1, 6 - k));
    return {"D" + std::to_string(k) + std::to_string(q), k, 0, form, false};
}

CurvatureMeasure build_N(int k, int q) {
    check_su3_indices(k, q);
    if (k == 6 || 3 - k + q == 0 || k - 2 * q == 0)
        throw std::domain_error("N_{k,q} undefined for these indices");
    NamedPoly form = (gamma_form(k, q) - b_form(k, q))
                         .scaled(Scalar::fraction(2 * (3 - k + q), 6 - k));
    return {"N" + std::to_string(k) + std::to_string(q), k, 0, form, false};
}

CurvatureMeasure build_theta7(int k, int p) {
    if (k < 0 || k > 6 || p < std::max(0, k - 3) || 2 * p > k)
        throw std::domain_error("Theta_{k,p} indices out of range");
    const S7Model& m = S7Model::instance();
    auto fact = [](int n) {
        long f = 1;
        for (int j = 2; j <= n; ++j) f *= j;
        return f;
    };
    Scalar norm = (Scalar(fact(3 + p - k)) * Scalar(fact(k - 2 * p)) * Scalar(fact(p)) *
                   sphere_volume(6 - k))
                      .inverse();
    NamedPoly form = NamedPoly::one(&m.real_algebra());
    for (int j = 0; j < 3 + p - k; ++j) form *= m.theta0();
    for (int j = 0; j < k - 2 * p; ++j) form *= m.theta1();
    for (int j = 0; j < p; ++j) form *= m.theta2();
    return {"T" + std::to_string(k) + std::to_string(p), k, 0, form.scaled(norm), false};
}

const MeasureRegistry& MeasureRegistry::su3() {
    static const MeasureRegistry reg(Space::S6);
    return reg;
}

const MeasureRegistry& MeasureRegistry::g2() {
    static const MeasureRegistry reg(Space::S7);
    return reg;
}

int MeasureRegistry::index_of(const std::string& label) const {
    for (int i = 0; i < size(); ++i)
        if (basis_[i].label == label) return i;
    throw std::invalid_argument("unknown curvature measure " + label);
}

ScalarVec MeasureRegistry::unit(const std::string& label) const {
    ScalarVec v(size(), Scalar(0));
    v[index_of(label)] = Scalar(1);
    return v;
}

FormElement MeasureRegistry::expand_form(const NamedPoly& p) const {
    return space_ == Space::S6 ? S6Model::instance().expand(p) : S7Model::instance().expand(p);
}

NamedPoly MeasureRegistry::combination_form(const ScalarVec& combo) const {
    const NamedAlgebra* alg = space_ == Space::S6 ? &S6Model::instance().real_algebra()
                                                  : &S7Model::instance().real_algebra();
    NamedPoly form(alg);
    for (int i = 0; i < size(); ++i)
        if (!combo[i].is_zero()) form += basis_[i].form.scaled(combo[i]);
    return form;
}

Scalar MeasureRegistry::combination_volume_part(const ScalarVec& combo) const {
    Scalar c(0);
    for (int i = 0; i < size(); ++i)
        if (basis_[i].volume_part) c += combo[i];
    return c;
}

ScalarVec MeasureRegistry::euler_verdier(const ScalarVec& combo) const {
    ScalarVec out(size(), Scalar(0));
    for (int i = 0; i < size(); ++i) {
        if (combo[i].is_zero()) continue;
        for (int j = 0; j < size(); ++j) out[j] += sigma_[j][i] * combo[i];
    }
    return out;
}

ScalarVec MeasureRegistry::antipodal(const ScalarVec& combo) const {
    if (space_ != Space::S6) throw std::domain_error("antipodal action stored for SU(3) only");
    ScalarVec out(size(), Scalar(0));
    for (int i = 0; i < size(); ++i) {
        if (combo[i].is_zero()) continue;
        for (int j = 0; j < size(); ++j) out[j] += antipodal_[j][i] * combo[i].conj();
    }
    return out;
}

ScalarVec MeasureRegistry::globalize(const ScalarVec& combo) const {
    ScalarVec out(val_labels_.size(), Scalar(0));
    for (int i = 0; i < size(); ++i) {
        if (combo[i].is_zero()) continue;
        for (size_t j = 0; j < val_labels_.size(); ++j) out[j] += glob_[j][i] * combo[i];
    }
    return out;
}

ScalarVec MeasureRegistry::recognize_form(const FormElement& expanded) const {
    std::vector<FormElement> candidates;
    for (int idx : form_indices_) candidates.push_back(expanded_forms_[idx]);
    auto sol = solve_linear({expanded}, candidates);
    if (!sol) throw std::domain_error("form is not a combination of basis measures");
    ScalarVec out(size(), Scalar(0));
    for (size_t c = 0; c < form_indices_.size(); ++c) out[form_indices_[c]] = (*sol)[0][c];
    return out;
}

const KlainDatum& MeasureRegistry::klain(const std::string& label) const {
    for (const auto& k : klain_)
        if (k.label == label) return k;
    throw std::invalid_argument("no stored Klain datum for " + label);
}

MeasureRegistry::MeasureRegistry(Space space) : space_(space) {
    Scalar zero(0), one(1);
    if (space == Space::S6) {
        const S6Model& m = S6Model::instance();
        auto add = [&](CurvatureMeasure cm) { basis_.push_back(std::move(cm)); };
        add(build_delta(0, 0));
        add(build_delta(1, 0));
        add(build_N(1, 0));
        add(build_delta(2, 0));
        add(build_delta(2, 1));
        add(build_N(2, 0));
        Scalar c2 = Scalar::fraction(1, 2) * Scalar::pi_pow(-2);
        NamedPoly psi2 = (m.gamma() * m.theta1() * m.chi(1)).scaled(c2);
        add({"Psi2", 2, 1, psi2, false});
        add({"Psi2b", 2, -1, psi2.conj_coefficients(), false});
        NamedPoly phi2 = (m.gamma() * m.chi(0) * m.chi(2)).scaled(c2);
        add({"Phi2", 2, 2, phi2, false});
        add({"Phi2b", 2, -2, phi2.conj_coefficients(), false});
        add(build_delta(3, 0));
        add(build_delta(3, 1));
        add(build_N(3, 1));
        Scalar c3 = Scalar::fraction(1, 4) * Scalar::pi_pow(-1);
        NamedPoly psi3 = (m.beta() * m.theta1() * m.chi(1)).scaled(c3);
        add({"Psi3", 3, 1, psi3, false});
        add({"Psi3b", 3, -1, psi3.conj_coefficients(), false});
        NamedPoly phi3 = (m.beta() * m.chi(0) * m.chi(2)).scaled(-c3);
        add({"Phi3", 3, 2, phi3, false});
        add({"Phi3b", 3, -2, phi3.conj_coefficients(), false});
        add(build_delta(4, 1));
        add(build_delta(4, 2));
        add(build_delta(5, 2));
        add(build_delta(6, 3));

        val_labels_ = {"mu00", "mu10", "mu20", "mu21", "mu30", "mu31",
                       "phi3", "phi3b", "mu41", "mu42", "mu52", "mu63"};
    } else {
        auto add = [&](CurvatureMeasure cm) { basis_.push_back(std::move(cm)); };
        auto delta7 = [&](int k, const char* label) {
            const S7Model& m = S7Model::instance();
            NamedPoly form(&m.real_algebra());
            for (int p = std::max(0, k - 3); 2 * p <= k; ++p) form += build_theta7(k, p).form;
            return CurvatureMeasure{label, k, 0, form, false};
        };
        add(delta7(0, "D0"));
        add(delta7(1, "D1"));
        add(delta7(2, "D2"));
        {
            NamedPoly n2 = build_theta7(2, 1).form.scaled(Scalar(4)) - build_theta7(2, 0).form;
            add({"N2", 2, 0, n2, false});
        }
        add(delta7(3, "D3"));
        {
            NamedPoly n3 = build_theta7(3, 0).form.scaled(Scalar(4)) -
                           build_theta7(3, 1).form.scaled(Scalar::fraction(8, 3));
            add({"N3", 3, 0, n3, false});
        }
        {
            const S7Model& m = S7Model::instance();
            NamedPoly phi = (m.chi(0) * m.chi(3))
                                .scaled(-(Scalar::i() * Scalar::fraction(1, 2) * Scalar::pi_pow(-2)));
            add({"Phi", 3, 2, phi, false});
            add({"Phib", 3, -2, phi.conj_coefficients(), false});
        }
        add(delta7(4, "D4"));
        {
            NamedPoly n4 = build_theta7(4, 2).form.scaled(Scalar(4)) - build_theta7(4, 1).form;
            add({"N4", 4, 0, n4, false});
        }
        add(delta7(5, "D5"));
        add(delta7(6, "D6"));
        add({"D7", 7, 0, NamedPoly(&S7Model::instance().real_algebra()), true});

        val_labels_ = {"mu0", "mu1", "mu2", "mu3", "mu4", "mu5", "mu6", "mu7", "nu3", "nu4"};
    }

    for (int i = 0; i < size(); ++i) {
        expanded_forms_.push_back(expand_form(basis_[i].form));
        if (!basis_[i].form.is_zero()) form_indices_.push_back(i);
    }

    // Euler-Verdier: sigma [omega, eta] = (-1)^n [a* omega, eta].
    int n = (space == Space::S6) ? 6 : 7;
    Scalar dim_sign = (n % 2 == 0) ? one : -one;
    sigma_ = ScalarMatrix(size(), ScalarVec(size(), zero));
    for (int i = 0; i < size(); ++i) {
        if (basis_[i].volume_part) {
            sigma_[i][i] = dim_sign;
            continue;
        }
        NamedPoly pulled = (space == Space::S6)
                               ? S6Model::instance().euler_verdier_pullback(basis_[i].form)
                               : S7Model::instance().euler_verdier_pullback(basis_[i].form);
        ScalarVec coords = recognize_form(expand_form(pulled));
        for (int j = 0; j < size(); ++j) sigma_[j][i] = dim_sign * coords[j];
    }

    // Antipodal action, S6 only: orientation reversal contributes a sign.
    if (space == Space::S6) {
        antipodal_ = ScalarMatrix(size(), ScalarVec(size(), zero));
        for (int i = 0; i < size(); ++i) {
            if (basis_[i].volume_part) {
                antipodal_[i][i] = one;
                continue;
            }
            NamedPoly pulled = S6Model::instance().antipodal_pullback(basis_[i].form);
            ScalarVec coords = recognize_form(expand_form(pulled));
            for (int j = 0; j < size(); ++j) antipodal_[j][i] = -coords[j];
        }
    }

    // Globalization over the valuation labels; lambda-parametric rows of the
    // kernel relations.
    glob_ = ScalarMatrix(val_labels_.size(), ScalarVec(size(), zero));
    auto vrow = [&](const std::string& vl) -> ScalarVec& {
        for (size_t j = 0; j < val_labels_.size(); ++j)
            if (val_labels_[j] == vl) return glob_[j];
        throw std::logic_error("bad valuation label");
    };
    Scalar s = Scalar::s_pow(1);
    Scalar lam = Scalar::lambda_pow(1);
    Scalar inv_pi = Scalar::pi_pow(-1);
    if (space == Space::S6) {
        for (auto [mlabel, vlabel] :
             std::initializer_list<std::pair<const char*, const char*>>{
                 {"D00", "mu00"}, {"D10", "mu10"}, {"D20", "mu20"}, {"D21", "mu21"},
                 {"D30", "mu30"}, {"D31", "mu31"}, {"D41", "mu41"}, {"D42", "mu42"},
                 {"D52", "mu52"}, {"D63", "mu63"}, {"Phi3", "phi3"}, {"Phi3b", "phi3b"}})
            vrow(vlabel)[index_of(mlabel)] = one;

        int n10 = index_of("N10");
        vrow("mu30")[n10] = Scalar::fraction(3, 2) * lam * inv_pi;
        vrow("mu31")[n10] = -lam * inv_pi;
        vrow("phi3")[n10] = Scalar::fraction(3, 4) * lam * inv_pi;
        vrow("phi3b")[n10] = Scalar::fraction(3, 4) * lam * inv_pi;

        int n20 = index_of("N20");
        vrow("mu41")[n20] = Scalar::fraction(1, 2) * lam * inv_pi;
        vrow("mu42")[n20] = Scalar(-2) * lam * inv_pi;

        for (const char* lbl : {"Phi2", "Phi2b"}) {
            int idx = index_of(lbl);
            vrow("mu41")[idx] = -Scalar::fraction(1, 2) * lam * inv_pi;
            vrow("mu42")[idx] = Scalar(2) * lam * inv_pi;
        }
        for (const char* lbl : {"Psi3", "Psi3b"}) {
            int idx = index_of(lbl);
            vrow("mu41")[idx] = -Scalar::fraction(1, 2) * s;
            vrow("mu42")[idx] = Scalar(2) * s;
        }
        int p2 = index_of("Psi2");
        vrow("mu30")[p2] = Scalar(-2) * s * inv_pi;
        vrow("mu31")[p2] = Scalar::fraction(4, 3) * s * inv_pi;
        vrow("phi3")[p2] = Scalar(-2) * s * inv_pi;
        int p2b = index_of("Psi2b");
        vrow("mu30")[p2b] = Scalar(-2) * s * inv_pi;
        vrow("mu31")[p2b] = Scalar::fraction(4, 3) * s * inv_pi;
        vrow("phi3b")[p2b] = Scalar(-2) * s * inv_pi;
        // N31 globalizes to zero.

        klain_ = {
            {"D30", zero, one, zero, zero, zero, zero},
            {"D31", zero, zero, one, zero, zero, zero},
            {"D41", zero, one, zero, zero, zero, zero},
            {"D42", zero, zero, one, zero, zero, zero},
            {"Phi3", zero, zero, zero, one, zero, zero},
        };
    } else {
        for (auto [mlabel, vlabel] : std::initializer_list<std::pair<const char*, const char*>>{
                 {"D0", "mu0"}, {"D1", "mu1"}, {"D2", "mu2"}, {"D3", "mu3"}, {"D4", "mu4"},
                 {"D5", "mu5"}, {"D6", "mu6"}, {"D7", "mu7"}, {"N3", "nu3"}, {"N4", "nu4"}})
            vrow(vlabel)[index_of(mlabel)] = one;

        vrow("nu4")[index_of("N2")] = -Scalar::fraction(3, 2) * lam * inv_pi;
        int ph = index_of("Phi");
        vrow("nu3")[ph] = Scalar::fraction(1, 4);
        vrow("nu4")[ph] = Scalar::i() * Scalar::fraction(4, 3) * s * inv_pi;
        int phb = index_of("Phib");
        vrow("nu3")[phb] = Scalar::fraction(1, 4);
        vrow("nu4")[phb] = -Scalar::i() * Scalar::fraction(4, 3) * s * inv_pi;

        klain_ = {
            {"nu3", -one, zero, zero, zero, Scalar(5), zero},
            {"nu4", -one, zero, zero, zero, zero, Scalar(5)},
        };
    }
}

namespace {

/// G2 basis coordinates of the stored restriction rows over the SU(3) basis.
ScalarMatrix build_restriction_table() {
    const MeasureRegistry& su3 = MeasureRegistry::su3();
    const MeasureRegistry& g2 = MeasureRegistry::g2();
    ScalarMatrix table(g2.size(), ScalarVec(su3.size(), Scalar(0)));

    auto set = [&](const char* g2l, std::initializer_list<std::pair<const char*, Scalar>> terms) {
        ScalarVec& row = table[g2.index_of(g2l)];
        for (const auto& [l, c] : terms) row[su3.index_of(l)] = c;
    };
    Scalar one(1);
    set("D0", {{"D00", one}});
    set("D1", {{"D10", one}});
    set("D2", {{"D20", one}, {"D21", one}});
    set("N2", {{"N20", one}, {"Phi2", Scalar(-1)}, {"Phi2b", Scalar(-1)}});
    set("D3", {{"D30", one}, {"D31", one}});
    set("N3", {{"D30", Scalar::fraction(3, 2)},
               {"D31", Scalar(-1)},
               {"N31", Scalar::fraction(-5, 3)},
               {"Phi3", Scalar::fraction(-5, 4)},
               {"Phi3b", Scalar::fraction(-5, 4)}});
    // iota*(Re Phi) and iota*(Im Phi) combined into the complex basis rows.
    Scalar i = Scalar::i();
    Scalar im_coeff = Scalar::fraction(4, 3) * Scalar::pi_pow(-1);
    set("Phi", {{"D30", Scalar::fraction(3, 8)},
                {"D31", Scalar::fraction(-1, 4)},
                {"N31", Scalar::fraction(1, 4)},
                {"Phi3", Scalar::fraction(-5, 16)},
                {"Phi3b", Scalar::fraction(-5, 16)},
                {"Psi3", i * im_coeff},
                {"Psi3b", i * im_coeff}});
    set("Phib", {{"D30", Scalar::fraction(3, 8)},
                 {"D31", Scalar::fraction(-1, 4)},
                 {"N31", Scalar::fraction(1, 4)},
                 {"Phi3", Scalar::fraction(-5, 16)},
                 {"Phi3b", Scalar::fraction(-5, 16)},
                 {"Psi3", -(i * im_coeff)},
                 {"Psi3b", -(i * im_coeff)}});
    set("D4", {{"D41", one}, {"D42", one}});
    set("N4", {{"D41", Scalar(-1)}, {"D42", Scalar(4)}});
    set("D5", {{"D52", one}});
    set("D6", {{"D63", one}});
    // D7 restricts to zero.
    return table;
}

}  // namespace

const ScalarMatrix& restriction_table_stored() {
    static const ScalarMatrix table = build_restriction_table();
    return table;
}

ScalarVec restriction_recomputed(int g2_index) {
    const MeasureRegistry& su3 = MeasureRegistry::su3();
    const MeasureRegistry& g2 = MeasureRegistry::g2();
    const CurvatureMeasure& m = g2.at(g2_index);

    if (m.volume_part) {
        // the ambient volume measure restricts to zero on a hypersurface
        return ScalarVec(su3.size(), Scalar(0));
    }

    const S6Model& s6 = S6Model::instance();
    const S7Model& s7 = S7Model::instance();

    // Extended coframe: the 11 S6 generators plus the inclusion angle dt.
    static const Coframe ext = [] {
        std::vector<CoframeGenerator> gens;
        for (int i = 0; i < S6Model::instance().coframe().size(); ++i)
            gens.push_back(S6Model::instance().coframe().gen(i));
        gens.push_back({"dt", GenKind::Vertical, 0});
        return Coframe(gens);
    }();
    constexpr int kDt = 11;

    using TrigForm = BasicForm<TrigPoly>;
    auto cgen = [&](int idx, TrigPoly c) {
        TrigForm f(&ext);
        f.add_term(1u << idx, std::move(c));
        return f;
    };
    TrigPoly sin_t = TrigPoly::sin(Angle::T);
    TrigPoly cos_t = TrigPoly::cos(Angle::T);
    TrigPoly one_t{Scalar(1)};

    // Frame pullback of the inclusion S6 -> S7, from the proof of the
    // restriction lemma. S7 coframe indices: 0..6 w1..w7, 7..12 f2..f7.
    // S6 indices: 0 w1, 1 w1b, 2 w2, 3 w2b, 4 w3, 5 w3b, 6 g, 7 f2,
    // 8 f2b, 9 f3, 10 f3b.
    std::vector<TrigForm> image(13, TrigForm(&ext));
    image[1] = cgen(0, cos_t);                                  // w2 -> cos t alpha
    image[2] = cgen(1, one_t);                                  // w3 -> beta
    image[3] = cgen(2, one_t);                                  // w4 -> w2
    image[4] = cgen(5, -sin_t) + cgen(3, cos_t);                // w5
    image[5] = cgen(5, -cos_t) + cgen(3, -sin_t);               // w6
    image[6] = cgen(4, one_t);                                  // w7 -> w3
    image[7] = cgen(kDt, -one_t);                               // f2 -> -dt
    image[8] = cgen(6, sin_t);                                  // f3 -> sin t gamma
    image[9] = cgen(7, sin_t);                                  // f4 -> sin t f2
    image[10] = cgen(10, -(sin_t * sin_t)) + cgen(8, sin_t * cos_t);   // f5
    image[11] = cgen(10, -(sin_t * cos_t)) + cgen(8, -(sin_t * sin_t)); // f6
    image[12] = cgen(9, sin_t);                                 // f7 -> sin t f3

    FormElement f7 = s7.expand(m.form);
    TrigForm pulled(&ext);
    for (const auto& [mask, c] : f7.terms()) {
        TrigForm acc = TrigForm::constant(&ext, TrigPoly(c));
        for (int b = 0; b < 13; ++b)
            if (mask & (1u << b)) acc = wedge(acc, image[b]);
        pulled += acc;
    }

    // Fiber integration over t in (0, pi): keep dt terms, move dt to front.
    FormElement p_star(&s6.coframe());
    for (const auto& [mask, tc] : pulled.terms()) {
        if (!(mask & (1u << kDt))) continue;
        uint32_t rest = mask & ~(1u << kDt);
        TrigPoly integrated = tc.integrate_definite(Angle::T, TrigPoly::Interval::ZeroToPi);
        if (integrated.is_zero()) continue;
        if (integrated.depends_on(Angle::T)) throw std::logic_error("t survived fiber integration");
        Scalar val(0);
        for (const auto& [mono, c] : integrated.terms()) {
            if (!mono.empty()) throw std::logic_error("angle survived fiber integration");
            val = c;
        }
        if (std::popcount(rest) % 2 == 1) val = -val;
        p_star.add_term(rest, val);
    }

    ScalarVec coords = su3.recognize_form(p_star);

    // Volume part: restriction of the purely horizontal component to the two
    // unit normals of the hypersurface.
    uint32_t horizontal_mask = 0;
    for (int b = 1; b <= 6; ++b) horizontal_mask |= 1u << b;  // w2..w7
    Scalar eta = Scalar(2) * f7.coefficient(horizontal_mask);
    if (!eta.is_zero()) coords[su3.index_of("D63")] += eta;
    return coords;
}

std::vector<ScalarVec> restriction_kernel() {
    const ScalarMatrix& table = restriction_table_stored();
    std::vector<ScalarVec> columns;
    for (const auto& row : table) columns.push_back(row);
    return kernel_of_columns(columns);
}

}  // namespace octig
