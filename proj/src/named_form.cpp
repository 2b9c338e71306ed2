#include "octig/named_form.hpp"

#include <functional>
#include <sstream>

namespace octig {

std::string NamedPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (auto [gen, exp] : monomial_factors(m)) {
            os << "*" << alg_->gen(gen).name;
            if (exp > 1) os << "^" << exp;
        }
    }
    return os.str();
}

NamedPoly apply_derivation(const NamedPoly& p, const std::vector<NamedPoly>& d_table) {
    const NamedAlgebra* alg = p.algebra();
    NamedPoly result(alg);
    for (const auto& [m, c] : p.terms()) {
        auto factors = p.monomial_factors(m);
        // d(f1 f2 ... fk) = sum_j (-1)^{deg(f1..f_{j-1})} f1.. d(fj) ..fk,
        // with d(g^e) = e g^{e-1} dg for even g.
        for (size_t j = 0; j < factors.size(); ++j) {
            NamedPoly term = NamedPoly::one(alg);
            int left_degree = 0;
            for (size_t l = 0; l < j; ++l) {
                auto [gen, exp] = factors[l];
                for (int e = 0; e < exp; ++e) term *= NamedPoly::generator(alg, gen);
                left_degree += exp * alg->gen(gen).degree;
            }
            auto [gen_j, exp_j] = factors[j];
            Scalar mult(1);
            if (exp_j > 1) {
                mult = Scalar(exp_j);
                for (int e = 0; e < exp_j - 1; ++e) term *= NamedPoly::generator(alg, gen_j);
            }
            term *= d_table[gen_j];
            for (size_t r = j + 1; r < factors.size(); ++r) {
                auto [gen, exp] = factors[r];
                for (int e = 0; e < exp; ++e) term *= NamedPoly::generator(alg, gen);
            }
            Scalar coeff = c * mult;
            if (left_degree % 2 == 1) coeff = -coeff;
            result += term.scaled(coeff);
        }
    }
    return result;
}

NamedPoly apply_generator_signs(const NamedPoly& p, const std::vector<NamedPoly>& images,
                                bool conjugate_coefficients) {
    NamedPoly source = conjugate_coefficients ? p.conj_coefficients() : p;
    return substitute_generators(source, NamedPoly::one(p.algebra()), images);
}

std::vector<NamedPoly> algebra_monomials(const NamedAlgebra* alg, int degree,
                                         uint32_t forbidden_odd_mask) {
    std::vector<NamedPoly> out;
    int n_even = alg->even_count();

    for (uint32_t mask = 0; mask < (1u << alg->odd_count()); ++mask) {
        if (mask & forbidden_odd_mask) continue;
        int odd_deg = 0;
        for (int s = 0; s < alg->odd_count(); ++s)
            if (mask & (1u << s)) odd_deg += alg->gen(alg->odd_gen(s)).degree;
        if (odd_deg > degree) continue;

        std::vector<uint8_t> exp(n_even, 0);
        std::function<void(int, int)> rec = [&](int slot, int remaining) {
            if (slot == n_even) {
                if (remaining == 0) {
                    NamedPoly p(alg);
                    p.add_term(NamedMonomial{mask, exp}, Scalar(1));
                    out.push_back(std::move(p));
                }
                return;
            }
            int d = alg->gen(alg->even_gen(slot)).degree;
            for (int e = 0; e * d <= remaining; ++e) {
                exp[slot] = static_cast<uint8_t>(e);
                rec(slot + 1, remaining - e * d);
            }
            exp[slot] = 0;
        };
        rec(0, degree - odd_deg);
    }
    return out;
}

}  // namespace octig
