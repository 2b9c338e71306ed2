#include "octig/exterior.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace octig {

std::string Coframe::mask_str(uint32_t mask) const {
    std::string s;
    for (int i = 0; i < size(); ++i) {
        if (!(mask & (1u << i))) continue;
        if (!s.empty()) s += "^";
        s += gens_[i].name;
    }
    return s.empty() ? "1" : s;
}

Scalar top_coefficient(const FormElement& a, const FormElement& reference) {
    if (reference.terms().size() != 1)
        throw std::invalid_argument("top_coefficient: reference must be a single term");
    const auto& [mask, c] = *reference.terms().begin();
    if (a.is_zero()) return Scalar(0);
    for (const auto& [m, coeff] : a.terms())
        if (m != mask) throw std::invalid_argument("top_coefficient: forms are not proportional");
    return a.coefficient(mask) / c;
}

std::pair<std::vector<ScalarVec>, std::vector<uint32_t>> form_columns(
    const std::vector<FormElement>& forms) {
    std::set<uint32_t> mask_set;
    for (const auto& f : forms)
        for (const auto& [m, c] : f.terms()) mask_set.insert(m);
    std::vector<uint32_t> masks(mask_set.begin(), mask_set.end());

    std::vector<ScalarVec> columns;
    columns.reserve(forms.size());
    for (const auto& f : forms) {
        ScalarVec col(masks.size(), Scalar(0));
        for (size_t i = 0; i < masks.size(); ++i) col[i] = f.coefficient(masks[i]);
        columns.push_back(std::move(col));
    }
    return {columns, masks};
}

std::optional<ScalarMatrix> solve_linear(const std::vector<FormElement>& targets,
                                         const std::vector<FormElement>& candidates) {
    std::vector<FormElement> all = candidates;
    all.insert(all.end(), targets.begin(), targets.end());
    auto [columns, masks] = form_columns(all);

    std::vector<ScalarVec> cand_cols(columns.begin(), columns.begin() + candidates.size());
    ScalarMatrix result;
    for (size_t t = 0; t < targets.size(); ++t) {
        auto x = solve_in_span(cand_cols, columns[candidates.size() + t]);
        if (!x) return std::nullopt;
        result.push_back(std::move(*x));
    }
    return result;
}

std::string form_str(const FormElement& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*" << f.frame()->mask_str(m);
    }
    return os.str();
}

}  // namespace octig
