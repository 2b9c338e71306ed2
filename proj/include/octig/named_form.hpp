#pragma once

#include "octig/exterior.hpp"
#include "octig/scalar.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace octig {

struct NamedGenerator {
    std::string name;
    int degree = 1;
    int bideg_h = 0;
    int bideg_v = 0;
    int weight = 0;
};

/// Free graded-commutative algebra on named generators. Odd-degree generators
/// square to zero and anticommute; even ones are polynomial variables.
class NamedAlgebra {
public:
    explicit NamedAlgebra(std::vector<NamedGenerator> gens) : gens_(std::move(gens)) {
        for (size_t i = 0; i < gens_.size(); ++i) {
            if (gens_[i].degree % 2 == 1) {
                odd_slot_.push_back(static_cast<int>(odd_ids_.size()));
                odd_ids_.push_back(static_cast<int>(i));
                even_slot_.push_back(-1);
            } else {
                even_slot_.push_back(static_cast<int>(even_ids_.size()));
                even_ids_.push_back(static_cast<int>(i));
                odd_slot_.push_back(-1);
            }
        }
        if (odd_ids_.size() > 31) throw std::invalid_argument("NamedAlgebra: too many odd generators");
    }

    int size() const { return static_cast<int>(gens_.size()); }
    const NamedGenerator& gen(int i) const { return gens_[i]; }
    int index_of(const std::string& name) const {
        for (size_t i = 0; i < gens_.size(); ++i)
            if (gens_[i].name == name) return static_cast<int>(i);
        throw std::invalid_argument("NamedAlgebra: unknown generator " + name);
    }

    int odd_count() const { return static_cast<int>(odd_ids_.size()); }
    int even_count() const { return static_cast<int>(even_ids_.size()); }
    int odd_gen(int slot) const { return odd_ids_[slot]; }
    int even_gen(int slot) const { return even_ids_[slot]; }
    int odd_slot(int gen) const { return odd_slot_[gen]; }
    int even_slot(int gen) const { return even_slot_[gen]; }

private:
    std::vector<NamedGenerator> gens_;
    std::vector<int> odd_ids_, even_ids_;
    std::vector<int> odd_slot_, even_slot_;
};

struct NamedMonomial {
    uint32_t odd_mask = 0;
    std::vector<uint8_t> even_exp;

    friend bool operator<(const NamedMonomial& a, const NamedMonomial& b) {
        if (a.odd_mask != b.odd_mask) return a.odd_mask < b.odd_mask;
        return a.even_exp < b.even_exp;
    }
    friend bool operator==(const NamedMonomial& a, const NamedMonomial& b) {
        return a.odd_mask == b.odd_mask && a.even_exp == b.even_exp;
    }
};

/// Polynomial in the named generators with Scalar coefficients.
class NamedPoly {
public:
    using Terms = std::map<NamedMonomial, Scalar>;

    NamedPoly() : alg_(nullptr) {}
    explicit NamedPoly(const NamedAlgebra* alg) : alg_(alg) {}

    static NamedPoly constant(const NamedAlgebra* alg, Scalar c) {
        NamedPoly p(alg);
        p.add_term(NamedMonomial{0, std::vector<uint8_t>(alg->even_count(), 0)}, std::move(c));
        return p;
    }
    static NamedPoly one(const NamedAlgebra* alg) { return constant(alg, Scalar(1)); }
    static NamedPoly generator(const NamedAlgebra* alg, int gen, Scalar c = Scalar(1)) {
        NamedMonomial m{0, std::vector<uint8_t>(alg->even_count(), 0)};
        if (alg->odd_slot(gen) >= 0)
            m.odd_mask = 1u << alg->odd_slot(gen);
        else
            m.even_exp[alg->even_slot(gen)] = 1;
        NamedPoly p(alg);
        p.add_term(std::move(m), std::move(c));
        return p;
    }
    static NamedPoly generator(const NamedAlgebra* alg, const std::string& name) {
        return generator(alg, alg->index_of(name));
    }

    const NamedAlgebra* algebra() const { return alg_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(NamedMonomial m, Scalar c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(std::move(m), std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    int monomial_degree(const NamedMonomial& m) const {
        int d = 0;
        for (int s = 0; s < alg_->odd_count(); ++s)
            if (m.odd_mask & (1u << s)) d += alg_->gen(alg_->odd_gen(s)).degree;
        for (int s = 0; s < alg_->even_count(); ++s) d += m.even_exp[s] * alg_->gen(alg_->even_gen(s)).degree;
        return d;
    }
    std::pair<int, int> monomial_bidegree(const NamedMonomial& m) const {
        int h = 0, v = 0;
        for (int s = 0; s < alg_->odd_count(); ++s)
            if (m.odd_mask & (1u << s)) {
                h += alg_->gen(alg_->odd_gen(s)).bideg_h;
                v += alg_->gen(alg_->odd_gen(s)).bideg_v;
            }
        for (int s = 0; s < alg_->even_count(); ++s) {
            h += m.even_exp[s] * alg_->gen(alg_->even_gen(s)).bideg_h;
            v += m.even_exp[s] * alg_->gen(alg_->even_gen(s)).bideg_v;
        }
        return {h, v};
    }
    int monomial_weight(const NamedMonomial& m) const {
        int w = 0;
        for (int s = 0; s < alg_->odd_count(); ++s)
            if (m.odd_mask & (1u << s)) w += alg_->gen(alg_->odd_gen(s)).weight;
        for (int s = 0; s < alg_->even_count(); ++s) w += m.even_exp[s] * alg_->gen(alg_->even_gen(s)).weight;
        return w;
    }

    bool is_homogeneous(int degree) const {
        for (const auto& [m, c] : terms_)
            if (monomial_degree(m) != degree) return false;
        return true;
    }
    int max_degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, monomial_degree(m));
        return d;
    }

    NamedPoly operator-() const {
        NamedPoly r(alg_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }
    NamedPoly& operator+=(const NamedPoly& o) {
        if (!alg_) alg_ = o.alg_;
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    NamedPoly& operator-=(const NamedPoly& o) {
        if (!alg_) alg_ = o.alg_;
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend NamedPoly operator+(NamedPoly a, const NamedPoly& b) { return a += b; }
    friend NamedPoly operator-(NamedPoly a, const NamedPoly& b) { return a -= b; }

    NamedPoly scaled(const Scalar& c) const {
        NamedPoly r(alg_);
        for (const auto& [m, coeff] : terms_) r.add_term(m, coeff * c);
        return r;
    }

    friend NamedPoly operator*(const NamedPoly& a, const NamedPoly& b) {
        const NamedAlgebra* alg = a.alg_ ? a.alg_ : b.alg_;
        NamedPoly r(alg);
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                if (ma.odd_mask & mb.odd_mask) continue;
                NamedMonomial m{ma.odd_mask | mb.odd_mask, ma.even_exp};
                for (size_t i = 0; i < m.even_exp.size(); ++i) m.even_exp[i] += mb.even_exp[i];
                Scalar c = ca * cb;
                if (merge_sign(ma.odd_mask, mb.odd_mask) < 0) c = -c;
                r.add_term(std::move(m), std::move(c));
            }
        }
        return r;
    }
    NamedPoly& operator*=(const NamedPoly& o) { return *this = *this * o; }

    friend bool operator==(const NamedPoly& a, const NamedPoly& b) { return (a - b).is_zero(); }
    friend bool operator!=(const NamedPoly& a, const NamedPoly& b) { return !(a == b); }

    /// Coefficient-wise extraction of the s^k part (coefficients must have
    /// s-free denominators).
    NamedPoly coeff_s(int k) const {
        NamedPoly r(alg_);
        for (const auto& [m, c] : terms_) r.add_term(m, c.coeff_s(k));
        return r;
    }
    int max_coeff_s_degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, c.max_s_degree());
        return d;
    }

    /// Terms whose monomial weight equals w (meaningful in algebras whose
    /// generators carry pure weights).
    NamedPoly weight_part(int w) const {
        NamedPoly r(alg_);
        for (const auto& [m, c] : terms_)
            if (monomial_weight(m) == w) r.terms_.emplace(m, c);
        return r;
    }

    NamedPoly bidegree_part(int h, int v) const {
        NamedPoly r(alg_);
        for (const auto& [m, c] : terms_)
            if (monomial_bidegree(m) == std::pair{h, v}) r.terms_.emplace(m, c);
        return r;
    }

    NamedPoly conj_coefficients() const {
        NamedPoly r(alg_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, c.conj());
        return r;
    }

    std::string str() const;

    /// Ordered factor list (generator id, exponent) of a monomial; odd factors
    /// first in slot order, matching the sign convention of the product.
    std::vector<std::pair<int, int>> monomial_factors(const NamedMonomial& m) const {
        std::vector<std::pair<int, int>> fs;
        for (int s = 0; s < alg_->odd_count(); ++s)
            if (m.odd_mask & (1u << s)) fs.push_back({alg_->odd_gen(s), 1});
        for (int s = 0; s < alg_->even_count(); ++s)
            if (m.even_exp[s] > 0) fs.push_back({alg_->even_gen(s), m.even_exp[s]});
        return fs;
    }

private:
    const NamedAlgebra* alg_;
    Terms terms_;
};

/// Substitute generator images into p. Images must live in a common algebra T
/// supporting alg_mul, addition and scaling by Scalar.
template <typename T>
T substitute_generators(const NamedPoly& p, const T& unit, const std::vector<T>& images) {
    auto alg_mul = [](const T& a, const T& b) {
        if constexpr (std::is_same_v<T, FormElement>)
            return wedge(a, b);
        else
            return a * b;
    };
    T result = unit.scaled(Scalar(0));
    for (const auto& [m, c] : p.terms()) {
        T acc = unit;
        for (auto [gen, exp] : p.monomial_factors(m))
            for (int e = 0; e < exp; ++e) acc = alg_mul(acc, images[gen]);
        result += acc.scaled(c);
    }
    return result;
}

/// Degree-(+1) derivation determined by a table of generator differentials.
NamedPoly apply_derivation(const NamedPoly& p, const std::vector<NamedPoly>& d_table);

/// All monomials of the given total degree, optionally avoiding some odd
/// generators (mask over odd slots).
std::vector<NamedPoly> algebra_monomials(const NamedAlgebra* alg, int degree,
                                         uint32_t forbidden_odd_mask = 0);

/// Algebra map sending each generator to a signed generator (optionally with
/// coefficient conjugation applied first), e.g. pullback under an involution.
NamedPoly apply_generator_signs(const NamedPoly& p, const std::vector<NamedPoly>& images,
                                bool conjugate_coefficients);

}  // namespace octig
