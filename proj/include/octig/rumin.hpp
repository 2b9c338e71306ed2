#pragma once

#include "octig/s6.hpp"

#include <optional>

namespace octig {

/// A degree's worth of invariant forms: the monomial list together with the
/// expanded coframe columns, plus rank bookkeeping.
class InvariantSpan {
public:
    InvariantSpan(int degree, bool alpha_free);

    int degree() const { return degree_; }
    const std::vector<NamedPoly>& monomials() const { return monomials_; }
    const std::vector<FormElement>& expanded() const { return expanded_; }
    int rank() const { return rank_; }

    /// Coordinates of an expanded form in the monomial span, if representable.
    std::optional<ScalarVec> express(const FormElement& target) const;

private:
    int degree_;
    std::vector<NamedPoly> monomials_;
    std::vector<FormElement> expanded_;
    int rank_;
};

struct RuminResult {
    NamedPoly xi;  // correction with d(omega + alpha xi) a multiple of alpha
    NamedPoly D;   // the Rumin differential
};

/// The Rumin differential on invariant 5-forms of the 6-sphere bundle, and
/// the globalization-kernel certificate built on it.
class RuminOperator {
public:
    static const RuminOperator& instance();

    /// Solve the mod-alpha correction problem and return (xi, D omega).
    /// Throws std::domain_error if the linear system is unsolvable, which
    /// cannot happen for invariant forms.
    RuminResult differential(const NamedPoly& omega) const;

    /// Basis of corrections h with d(alpha ^ h) free of alpha-terms; the
    /// uniqueness of D means d(alpha ^ h) = 0 for each of them.
    const std::vector<NamedPoly>& correction_kernel() const { return kernel_; }

    /// Bernig-Broecker criterion for a measure-representing 5-form with no
    /// volume part: glob = 0 iff D omega = 0 and the fiber integral vanishes.
    bool glob_zero_certificate(const NamedPoly& omega) const;

    /// Decomposition report of D omega by powers of sqrt(lambda), bidegree
    /// and weight, for audits against the predicted pattern.
    struct WeightAudit {
        // entries: (s-power, horizontal, vertical, weight) for each nonzero part
        std::vector<std::tuple<int, int, int, int>> parts;
    };
    WeightAudit weight_bidegree_audit(const NamedPoly& omega) const;

private:
    RuminOperator();

    const S6Model* model_;
    std::vector<NamedPoly> candidates_;        // alpha-free degree-4 monomials
    std::vector<FormElement> columns_;         // non-alpha part of d(alpha m)
    std::vector<NamedPoly> kernel_;
};

}  // namespace octig
