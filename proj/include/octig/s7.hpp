#pragma once

#include "octig/exterior.hpp"
#include "octig/named_form.hpp"

#include <array>

namespace octig {

/// Epsilon symbols of the octonionic associative 3-form and its Hodge dual,
/// totally antisymmetric with indices in 1..7.
class EpsilonTables {
public:
    EpsilonTables();

    int eps3(int i, int j, int k) const;
    int eps4(int i, int j, int k, int l) const;

private:
    std::array<std::array<std::array<int, 8>, 8>, 8> e3_{};
    int e4_[8][8][8][8] = {};
};

/// Invariant-form model of the sphere bundle of the round 7-sphere under the
/// G2-structure frame bundle, evaluated at one point. The chi generators are
/// 3-forms here; no derivative table exists at this level.
class S7Model {
public:
    static const S7Model& instance();

    const EpsilonTables& epsilon() const { return eps_; }
    const Coframe& coframe() const { return coframe_; }
    const NamedAlgebra& real_algebra() const { return real_alg_; }
    const NamedAlgebra& complex_algebra() const { return complex_alg_; }

    NamedPoly alpha() const { return rgen("alpha"); }
    NamedPoly theta0() const { return rgen("theta0"); }
    NamedPoly theta1() const { return rgen("theta1"); }
    NamedPoly theta2() const { return rgen("theta2"); }
    NamedPoly thetaS() const { return rgen("thetaS"); }
    NamedPoly chiR(int k) const { return rgen("chi" + std::to_string(k) + "R"); }
    NamedPoly chiI(int k) const { return rgen("chi" + std::to_string(k) + "I"); }
    NamedPoly chi(int k) const { return chiR(k) + chiI(k).scaled(Scalar::i()); }
    NamedPoly chibar(int k) const { return chiR(k) - chiI(k).scaled(Scalar::i()); }

    NamedPoly rgen(const std::string& name) const {
        return NamedPoly::generator(&real_alg_, name);
    }

    FormElement expand(const NamedPoly& p) const;

    NamedPoly to_complex(const NamedPoly& real_poly) const;
    NamedPoly to_real(const NamedPoly& complex_poly) const;

    /// Pullback under the fiberwise antipodal map a.
    NamedPoly euler_verdier_pullback(const NamedPoly& p) const;
    FormElement euler_verdier_coframe(const FormElement& f) const;

    std::vector<NamedPoly> invariant_monomials(int degree, bool alpha_free = false) const;

private:
    S7Model();

    EpsilonTables eps_;
    Coframe coframe_;
    NamedAlgebra real_alg_;
    NamedAlgebra complex_alg_;
    std::vector<FormElement> expand_images_;
    std::vector<NamedPoly> to_complex_images_;
    std::vector<NamedPoly> to_real_images_;
    std::vector<NamedPoly> ev_images_;
    std::vector<int> ev_coframe_signs_;
};

}  // namespace octig
