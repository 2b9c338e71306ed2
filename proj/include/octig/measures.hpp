#pragma once

#include "octig/named_form.hpp"
#include "octig/s6.hpp"
#include "octig/s7.hpp"
#include "octig/trig.hpp"

#include <string>
#include <vector>

namespace octig {

enum class Space { S6, S7 };

/// Basis element of the space of invariant curvature measures. The optional
/// volume part is the Lebesgue measure of the ambient sphere; only the two
/// top-degree elements carry it.
struct CurvatureMeasure {
    std::string label;
    int degree = 0;
    int weight = 0;
    NamedPoly form;
    bool volume_part = false;
};

/// The SU(3) curvature-measure builders.
CurvatureMeasure build_delta(int k, int q);
CurvatureMeasure build_N(int k, int q);
/// The G2 curvature-measure builders (on the 7-sphere model).
CurvatureMeasure build_theta7(int k, int p);

/// Printed Klain function of a globalized basis measure, stored as an affine
/// expression in the plane invariants sin^2/cos^2 of the Kaehler angle, the
/// complex determinant square, and the two calibration norms.
struct KlainDatum {
    std::string label;
    Scalar c1, c_sin2, c_cos2, c_ups2, c_phi2, c_psi2;

    Scalar eval(const Scalar& sin2, const Scalar& cos2, const Scalar& ups2, const Scalar& phi2,
                const Scalar& psi2) const {
        return c1 + c_sin2 * sin2 + c_cos2 * cos2 + c_ups2 * ups2 + c_phi2 * phi2 + c_psi2 * psi2;
    }
};

/// Registry of one space's invariant curvature measures, with the involution
/// and globalization tables. Measure combinations are coordinate vectors over
/// the basis order of `at`.
class MeasureRegistry {
public:
    static const MeasureRegistry& su3();
    static const MeasureRegistry& g2();

    Space space() const { return space_; }
    int size() const { return static_cast<int>(basis_.size()); }
    const CurvatureMeasure& at(int i) const { return basis_[i]; }
    int index_of(const std::string& label) const;
    ScalarVec unit(const std::string& label) const;

    /// Representing form of a combination (volume parts excluded).
    NamedPoly combination_form(const ScalarVec& combo) const;
    /// Coefficient of the ambient volume measure in a combination.
    Scalar combination_volume_part(const ScalarVec& combo) const;

    /// Euler-Verdier involution, computed from the fiberwise antipodal
    /// pullback of the representing forms.
    ScalarVec euler_verdier(const ScalarVec& combo) const;
    /// Antipodal-map action (6-sphere only).
    ScalarVec antipodal(const ScalarVec& combo) const;

    /// Valuation coordinate labels of the globalization target.
    const std::vector<std::string>& valuation_labels() const { return val_labels_; }
    /// Lambda-parametric globalization.
    ScalarVec globalize(const ScalarVec& combo) const;

    /// Express a degree-5 (respectively 6) invariant form in the basis of
    /// representing forms; throws std::domain_error if impossible.
    ScalarVec recognize_form(const FormElement& expanded) const;

    const std::vector<KlainDatum>& klain_data() const { return klain_; }
    const KlainDatum& klain(const std::string& label) const;

private:
    MeasureRegistry(Space space);

    FormElement expand_form(const NamedPoly& p) const;

    Space space_;
    std::vector<CurvatureMeasure> basis_;
    std::vector<FormElement> expanded_forms_;
    std::vector<int> form_indices_;  // basis indices with nonzero form
    ScalarMatrix sigma_;             // euler-verdier matrix
    ScalarMatrix antipodal_;         // S6 only
    std::vector<std::string> val_labels_;
    ScalarMatrix glob_;  // val_labels x basis
    std::vector<KlainDatum> klain_;
};

/// Stored restriction table Curv^{G2} -> Curv^{SU(3)} of the totally geodesic
/// inclusion, one column per G2 basis measure.
const ScalarMatrix& restriction_table_stored();

/// Restriction recomputed by fiber integration over the inclusion angle,
/// using the frame pullback table; returns SU(3) coordinates.
ScalarVec restriction_recomputed(int g2_index);

/// Kernel of the stored restriction map (expected: the span of Delta_7).
std::vector<ScalarVec> restriction_kernel();

}  // namespace octig
