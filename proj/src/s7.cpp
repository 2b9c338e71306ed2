#include "octig/s7.hpp"

#include <algorithm>

namespace octig {

namespace {

// phi = e123 + e145 + e167 + e246 - e257 - e347 - e356
constexpr int kTriples[7][4] = {
    {1, 2, 3, 1}, {1, 4, 5, 1}, {1, 6, 7, 1}, {2, 4, 6, 1},
    {2, 5, 7, -1}, {3, 4, 7, -1}, {3, 5, 6, -1},
};

// psi = e4567 + e2367 + e2345 + e1357 - e1346 - e1256 - e1247
constexpr int kQuads[7][5] = {
    {4, 5, 6, 7, 1}, {2, 3, 6, 7, 1}, {2, 3, 4, 5, 1}, {1, 3, 5, 7, 1},
    {1, 3, 4, 6, -1}, {1, 2, 5, 6, -1}, {1, 2, 4, 7, -1},
};

template <size_t N>
int sort_sign(std::array<int, N>& idx) {
    int sign = 1;
    for (size_t i = 0; i < N; ++i) {
        for (size_t j = i + 1; j < N; ++j) {
            if (idx[i] == idx[j]) return 0;
            if (idx[i] > idx[j]) {
                std::swap(idx[i], idx[j]);
                sign = -sign;
            }
        }
    }
    return sign;
}

std::vector<CoframeGenerator> s7_coframe_generators() {
    std::vector<CoframeGenerator> gens;
    for (int i = 1; i <= 7; ++i) gens.push_back({"w" + std::to_string(i), GenKind::Horizontal, 0});
    for (int i = 2; i <= 7; ++i) gens.push_back({"f" + std::to_string(i), GenKind::Vertical, 0});
    return gens;
}

std::vector<NamedGenerator> s7_real_generators() {
    std::vector<NamedGenerator> gens = {
        {"alpha", 1, 1, 0, 0},
        {"theta0", 2, 0, 2, 0}, {"theta1", 2, 1, 1, 0}, {"theta2", 2, 2, 0, 0},
        {"thetaS", 2, 1, 1, 0},
    };
    for (int k = 0; k <= 3; ++k) {
        gens.push_back({"chi" + std::to_string(k) + "R", 3, k, 3 - k, 0});
        gens.push_back({"chi" + std::to_string(k) + "I", 3, k, 3 - k, 0});
    }
    return gens;
}

std::vector<NamedGenerator> s7_complex_generators() {
    std::vector<NamedGenerator> gens = {
        {"alpha", 1, 1, 0, 0},
        {"theta0", 2, 0, 2, 0}, {"theta1", 2, 1, 1, 0}, {"theta2", 2, 2, 0, 0},
        {"thetaS", 2, 1, 1, 0},
    };
    for (int k = 0; k <= 3; ++k) gens.push_back({"chi" + std::to_string(k), 3, k, 3 - k, 1});
    for (int k = 0; k <= 3; ++k) gens.push_back({"chi" + std::to_string(k) + "b", 3, k, 3 - k, -1});
    return gens;
}

}  // namespace

EpsilonTables::EpsilonTables() {
    for (const auto& t : kTriples) {
        std::array<int, 3> base{t[0], t[1], t[2]};
        // fill all permutations with signs
        std::array<int, 3> idx = base;
        std::sort(idx.begin(), idx.end());
        do {
            std::array<int, 3> probe = idx;
            int sign = sort_sign(probe);
            if (probe == base) e3_[idx[0]][idx[1]][idx[2]] = sign * t[3];
        } while (std::next_permutation(idx.begin(), idx.end()));
    }
    for (const auto& q : kQuads) {
        std::array<int, 4> base{q[0], q[1], q[2], q[3]};
        std::array<int, 4> idx = base;
        std::sort(idx.begin(), idx.end());
        do {
            std::array<int, 4> probe = idx;
            int sign = sort_sign(probe);
            if (probe == base) e4_[idx[0]][idx[1]][idx[2]][idx[3]] = sign * q[4];
        } while (std::next_permutation(idx.begin(), idx.end()));
    }
}

int EpsilonTables::eps3(int i, int j, int k) const {
    if (i < 1 || i > 7 || j < 1 || j > 7 || k < 1 || k > 7)
        throw std::domain_error("eps3: index out of range");
    std::array<int, 3> idx{i, j, k};
    int sign = sort_sign(idx);
    return sign == 0 ? 0 : sign * e3_[idx[0]][idx[1]][idx[2]];
}

int EpsilonTables::eps4(int i, int j, int k, int l) const {
    if (i < 1 || i > 7 || j < 1 || j > 7 || k < 1 || k > 7 || l < 1 || l > 7)
        throw std::domain_error("eps4: index out of range");
    std::array<int, 4> idx{i, j, k, l};
    int sign = sort_sign(idx);
    return sign == 0 ? 0 : sign * e4_[idx[0]][idx[1]][idx[2]][idx[3]];
}

const S7Model& S7Model::instance() {
    static const S7Model model;
    return model;
}

S7Model::S7Model()
    : coframe_(s7_coframe_generators()),
      real_alg_(s7_real_generators()),
      complex_alg_(s7_complex_generators()) {
    const Coframe* cf = &coframe_;
    // indices: 0..6 = w1..w7, 7..12 = f2..f7
    auto w = [cf](int i) { return FormElement::generator(cf, i - 1); };
    auto f = [cf](int i) { return FormElement::generator(cf, 5 + i); };

    FormElement theta0(cf), theta1(cf), theta2(cf), thetaS(cf);
    Scalar half = Scalar::fraction(1, 2);
    for (int j = 2; j <= 7; ++j) {
        thetaS += wedge(w(j), f(j));
        for (int k = 2; k <= 7; ++k) {
            int e = eps_.eps3(1, j, k);
            if (e == 0) continue;
            theta0 += wedge(f(j), f(k)).scaled(half * Scalar(e));
            theta1 += wedge(w(j), f(k)).scaled(Scalar(e));
            theta2 += wedge(w(j), w(k)).scaled(half * Scalar(e));
        }
    }

    // chi_m: m omega-legs and 3-m phi-legs; real part from eps3, imaginary
    // part from eps4(1, i, j, k).
    std::array<FormElement, 4> chiR{FormElement(cf), FormElement(cf), FormElement(cf),
                                    FormElement(cf)};
    std::array<FormElement, 4> chiI = chiR;
    std::array<Scalar, 4> norm{Scalar::fraction(1, 6), half, half, Scalar::fraction(1, 6)};
    for (int i = 2; i <= 7; ++i) {
        for (int j = 2; j <= 7; ++j) {
            for (int k = 2; k <= 7; ++k) {
                int e3 = eps_.eps3(i, j, k);
                int e4 = eps_.eps4(1, i, j, k);
                if (e3 == 0 && e4 == 0) continue;
                std::array<FormElement, 4> legs{
                    wedge(wedge(f(i), f(j)), f(k)), wedge(wedge(w(i), f(j)), f(k)),
                    wedge(wedge(w(i), w(j)), f(k)), wedge(wedge(w(i), w(j)), w(k))};
                for (int m = 0; m <= 3; ++m) {
                    if (e3 != 0) chiR[m] += legs[m].scaled(norm[m] * Scalar(e3));
                    if (e4 != 0) chiI[m] += legs[m].scaled(norm[m] * Scalar(e4));
                }
            }
        }
    }

    expand_images_.resize(real_alg_.size());
    expand_images_[real_alg_.index_of("alpha")] = w(1);
    expand_images_[real_alg_.index_of("theta0")] = theta0;
    expand_images_[real_alg_.index_of("theta1")] = theta1;
    expand_images_[real_alg_.index_of("theta2")] = theta2;
    expand_images_[real_alg_.index_of("thetaS")] = thetaS;
    for (int m = 0; m <= 3; ++m) {
        expand_images_[real_alg_.index_of("chi" + std::to_string(m) + "R")] = chiR[m];
        expand_images_[real_alg_.index_of("chi" + std::to_string(m) + "I")] = chiI[m];
    }

    // real <-> complex substitutions
    const NamedAlgebra* ra = &real_alg_;
    const NamedAlgebra* ca = &complex_alg_;
    Scalar i_unit = Scalar::i();

    to_complex_images_.resize(real_alg_.size());
    to_real_images_.resize(complex_alg_.size());
    for (const char* n : {"alpha", "theta0", "theta1", "theta2", "thetaS"}) {
        to_complex_images_[real_alg_.index_of(n)] = NamedPoly::generator(ca, n);
        to_real_images_[complex_alg_.index_of(n)] = NamedPoly::generator(ra, n);
    }
    for (int k = 0; k <= 3; ++k) {
        std::string kk = std::to_string(k);
        NamedPoly ck = NamedPoly::generator(ca, "chi" + kk);
        NamedPoly ckb = NamedPoly::generator(ca, "chi" + kk + "b");
        to_complex_images_[real_alg_.index_of("chi" + kk + "R")] = (ck + ckb).scaled(half);
        to_complex_images_[real_alg_.index_of("chi" + kk + "I")] =
            (ck - ckb).scaled(-(i_unit * half));
        NamedPoly r = NamedPoly::generator(ra, "chi" + kk + "R");
        NamedPoly im = NamedPoly::generator(ra, "chi" + kk + "I");
        to_real_images_[complex_alg_.index_of("chi" + kk)] = r + im.scaled(i_unit);
        to_real_images_[complex_alg_.index_of("chi" + kk + "b")] = r - im.scaled(i_unit);
    }

    // a* w_i = (-1)^i w_i, a* phi_{i1} = (-1)^{i+1} phi_{i1}:
    // theta_i -> (-1)^{i+1} theta_i, thetaS -> -thetaS, chi_m -> (-1)^{m+1} chibar_m.
    auto signed_gen = [ra](const std::string& n, int sign) {
        return NamedPoly::generator(ra, n).scaled(Scalar(sign));
    };
    ev_images_.resize(real_alg_.size());
    ev_images_[real_alg_.index_of("alpha")] = signed_gen("alpha", -1);
    ev_images_[real_alg_.index_of("theta0")] = signed_gen("theta0", -1);
    ev_images_[real_alg_.index_of("theta1")] = signed_gen("theta1", 1);
    ev_images_[real_alg_.index_of("theta2")] = signed_gen("theta2", -1);
    ev_images_[real_alg_.index_of("thetaS")] = signed_gen("thetaS", -1);
    for (int m = 0; m <= 3; ++m) {
        int sr = (m % 2 == 0) ? -1 : 1;  // (-1)^{m+1}
        ev_images_[real_alg_.index_of("chi" + std::to_string(m) + "R")] =
            signed_gen("chi" + std::to_string(m) + "R", sr);
        ev_images_[real_alg_.index_of("chi" + std::to_string(m) + "I")] =
            signed_gen("chi" + std::to_string(m) + "I", -sr);
    }
    ev_coframe_signs_.clear();
    for (int i = 1; i <= 7; ++i) ev_coframe_signs_.push_back(i % 2 == 0 ? 1 : -1);
    for (int i = 2; i <= 7; ++i) ev_coframe_signs_.push_back(i % 2 == 0 ? -1 : 1);
}

FormElement S7Model::expand(const NamedPoly& p) const {
    FormElement unit = FormElement::constant(&coframe_, Scalar(1));
    return substitute_generators(p, unit, expand_images_);
}

NamedPoly S7Model::to_complex(const NamedPoly& real_poly) const {
    return substitute_generators(real_poly, NamedPoly::one(&complex_alg_), to_complex_images_);
}

NamedPoly S7Model::to_real(const NamedPoly& complex_poly) const {
    return substitute_generators(complex_poly, NamedPoly::one(&real_alg_), to_real_images_);
}

NamedPoly S7Model::euler_verdier_pullback(const NamedPoly& p) const {
    return apply_generator_signs(p, ev_images_, false);
}

FormElement S7Model::euler_verdier_coframe(const FormElement& f) const {
    FormElement r(f.frame());
    for (const auto& [mask, c] : f.terms()) {
        int sign = 1;
        for (size_t i = 0; i < ev_coframe_signs_.size(); ++i)
            if (mask & (1u << i)) sign *= ev_coframe_signs_[i];
        r.add_term(mask, sign < 0 ? -c : c);
    }
    return r;
}

std::vector<NamedPoly> S7Model::invariant_monomials(int degree, bool alpha_free) const {
    uint32_t forbidden = 0;
    if (alpha_free) forbidden = 1u << real_alg_.odd_slot(real_alg_.index_of("alpha"));
    return algebra_monomials(&real_alg_, degree, forbidden);
}

}  // namespace octig
