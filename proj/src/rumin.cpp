#include "octig/rumin.hpp"

namespace octig {

namespace {

// terms whose coframe mask does not involve the contact direction w1
FormElement non_alpha_part(const FormElement& f) {
    FormElement r(f.frame());
    for (const auto& [mask, c] : f.terms())
        if (!(mask & 1u)) r.add_term(mask, c);
    return r;
}

}  // namespace

InvariantSpan::InvariantSpan(int degree, bool alpha_free) : degree_(degree) {
    const S6Model& m = S6Model::instance();
    monomials_ = m.invariant_monomials(degree, alpha_free);
    for (const NamedPoly& p : monomials_) expanded_.push_back(m.expand(p));
    auto [cols, masks] = form_columns(expanded_);
    rank_ = octig::rank(ScalarMatrix(cols.begin(), cols.end()));
}

std::optional<ScalarVec> InvariantSpan::express(const FormElement& target) const {
    auto sol = solve_linear({target}, expanded_);
    if (!sol) return std::nullopt;
    return (*sol)[0];
}

const RuminOperator& RuminOperator::instance() {
    static const RuminOperator op;
    return op;
}

RuminOperator::RuminOperator() : model_(&S6Model::instance()) {
    candidates_ = model_->invariant_monomials(4, /*alpha_free=*/true);
    std::vector<ScalarVec> cols;
    std::vector<FormElement> raw;
    for (const NamedPoly& m : candidates_) {
        NamedPoly am = model_->alpha() * m;
        raw.push_back(non_alpha_part(model_->expand(model_->d(am))));
        columns_.push_back(raw.back());
    }
    auto [columns, masks] = form_columns(raw);
    for (const ScalarVec& h : kernel_of_columns(columns)) {
        NamedPoly combo(&model_->real_algebra());
        for (size_t j = 0; j < candidates_.size(); ++j)
            if (!h[j].is_zero()) combo += candidates_[j].scaled(h[j]);
        kernel_.push_back(std::move(combo));
    }
}

RuminResult RuminOperator::differential(const NamedPoly& omega) const {
    FormElement target = non_alpha_part(model_->expand(model_->d(omega)));

    std::optional<ScalarMatrix> sol = solve_linear({-target}, columns_);
    if (!sol) throw std::domain_error("Rumin correction system unsolvable");

    NamedPoly xi(&model_->real_algebra());
    for (size_t j = 0; j < candidates_.size(); ++j)
        if (!(*sol)[0][j].is_zero()) xi += candidates_[j].scaled((*sol)[0][j]);

    NamedPoly D = model_->d(omega + model_->alpha() * xi);
    return {std::move(xi), std::move(D)};
}

bool RuminOperator::glob_zero_certificate(const NamedPoly& omega) const {
    RuminResult r = differential(omega);
    if (!model_->expand(r.D).is_zero()) return false;
    return model_->fiber_integral(omega).is_zero();
}

RuminOperator::WeightAudit RuminOperator::weight_bidegree_audit(const NamedPoly& omega) const {
    RuminResult r = differential(omega);
    NamedPoly complex_D = model_->to_complex(r.D);
    WeightAudit audit;
    int smax = complex_D.max_coeff_s_degree();
    for (int spow = 0; spow <= smax; ++spow) {
        NamedPoly part = complex_D.coeff_s(spow);
        // group by (bidegree, weight); a graded component is reported only if
        // it survives expansion, since representatives are not unique
        std::map<std::tuple<int, int, int>, NamedPoly> graded;
        for (const auto& [mono, c] : part.terms()) {
            auto [h, v] = part.monomial_bidegree(mono);
            int w = part.monomial_weight(mono);
            auto key = std::make_tuple(h, v, w);
            auto it = graded.find(key);
            if (it == graded.end()) it = graded.emplace(key, NamedPoly(part.algebra())).first;
            it->second.add_term(mono, c);
        }
        for (const auto& [key, poly] : graded) {
            if (model_->expand(model_->to_real(poly)).is_zero()) continue;
            auto [h, v, w] = key;
            audit.parts.emplace_back(spow, h, v, w);
        }
    }
    return audit;
}

}  // namespace octig
