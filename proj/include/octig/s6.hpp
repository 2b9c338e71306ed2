#pragma once

#include "octig/exterior.hpp"
#include "octig/named_form.hpp"

#include <vector>

namespace octig {

/// Invariant-form model of the sphere bundle of the round 6-sphere, evaluated
/// at one point of the SU(3)-frame bundle. The curvature parameter lambda is
/// kept symbolic as s^2.
///
/// Real generators: alpha, beta, gamma, theta0, theta1, theta2, thetaS and the
/// real/imaginary parts chi{0,1,2}{R,I}. The complex presentation replaces the
/// R/I pairs by chi_k and chibar_k, which carry weight +1 / -1.
class S6Model {
public:
    static const S6Model& instance();

    const Coframe& coframe() const { return coframe_; }
    const NamedAlgebra& real_algebra() const { return real_alg_; }
    const NamedAlgebra& complex_algebra() const { return complex_alg_; }

    // Real-algebra generator polynomials.
    NamedPoly alpha() const { return rgen("alpha"); }
    NamedPoly beta() const { return rgen("beta"); }
    NamedPoly gamma() const { return rgen("gamma"); }
    NamedPoly theta0() const { return rgen("theta0"); }
    NamedPoly theta1() const { return rgen("theta1"); }
    NamedPoly theta2() const { return rgen("theta2"); }
    NamedPoly thetaS() const { return rgen("thetaS"); }
    NamedPoly chiR(int k) const { return rgen("chi" + std::to_string(k) + "R"); }
    NamedPoly chiI(int k) const { return rgen("chi" + std::to_string(k) + "I"); }
    /// chi_k = chi_kR + i chi_kI as a real-algebra element.
    NamedPoly chi(int k) const;
    NamedPoly chibar(int k) const;

    NamedPoly rgen(const std::string& name) const {
        return NamedPoly::generator(&real_alg_, name);
    }

    /// Coframe expansion of a real-algebra polynomial.
    FormElement expand(const NamedPoly& p) const;

    /// Exterior derivative via the invariant-form derivative table.
    NamedPoly d(const NamedPoly& p) const;

    /// Conversions between the real and the weight-graded presentation.
    NamedPoly to_complex(const NamedPoly& real_poly) const;
    NamedPoly to_real(const NamedPoly& complex_poly) const;

    /// Pullback under the fiberwise antipodal map a.
    NamedPoly euler_verdier_pullback(const NamedPoly& p) const;
    /// Pullback under the antipodal map A of the sphere (complex-linear).
    NamedPoly antipodal_pullback(const NamedPoly& p) const;

    /// Coframe-level generator sign action, for cross-checks of the two maps.
    FormElement euler_verdier_coframe(const FormElement& f) const;
    FormElement antipodal_coframe(const FormElement& f) const;

    /// Integral over the fiber sphere S^5: vol(S^5) times the coefficient of
    /// the fiber volume form in the (0,5)-bidegree part.
    Scalar fiber_integral(const NamedPoly& p) const;

    /// Volume form of the sphere bundle, (1/4) alpha beta theta2^2 gamma theta0^2.
    const FormElement& dvol_ss6() const { return dvol_ss6_; }

    /// Monomials of the real algebra of the given total degree (alpha-free
    /// variants are used when building Rumin correction candidates).
    std::vector<NamedPoly> invariant_monomials(int degree, bool alpha_free = false) const;

private:
    S6Model();

    FormElement expand_gen(int gen_index) const;

    Coframe coframe_;
    NamedAlgebra real_alg_;
    NamedAlgebra complex_alg_;
    std::vector<FormElement> expand_images_;
    std::vector<NamedPoly> d_table_;
    std::vector<NamedPoly> to_complex_images_;
    std::vector<NamedPoly> to_real_images_;
    std::vector<NamedPoly> ev_images_;
    std::vector<NamedPoly> antipodal_images_;
    std::vector<int> ev_coframe_signs_;
    std::vector<int> antipodal_coframe_signs_;
    FormElement dvol_ss6_;
};

}  // namespace octig
