#pragma once

#include "octig/linalg.hpp"
#include "octig/scalar.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace octig {

enum class GenKind { Horizontal, Vertical };

struct CoframeGenerator {
    std::string name;
    GenKind kind = GenKind::Horizontal;
    int weight = 0;
};

/// Ordered list of degree-1 generators of a sphere-bundle coframe.
class Coframe {
public:
    explicit Coframe(std::vector<CoframeGenerator> gens) : gens_(std::move(gens)) {
        if (gens_.size() > 31) throw std::invalid_argument("Coframe: too many generators");
        for (size_t i = 0; i < gens_.size(); ++i)
            for (size_t j = i + 1; j < gens_.size(); ++j)
                if (gens_[i].name == gens_[j].name)
                    throw std::invalid_argument("Coframe: duplicate generator name");
    }

    int size() const { return static_cast<int>(gens_.size()); }
    const CoframeGenerator& gen(int i) const { return gens_[i]; }

    int index_of(const std::string& name) const {
        for (size_t i = 0; i < gens_.size(); ++i)
            if (gens_[i].name == name) return static_cast<int>(i);
        throw std::invalid_argument("Coframe: unknown generator " + name);
    }

    std::pair<int, int> bidegree_of(uint32_t mask) const {
        int h = 0, v = 0;
        for (int i = 0; i < size(); ++i)
            if (mask & (1u << i)) (gens_[i].kind == GenKind::Horizontal ? h : v)++;
        return {h, v};
    }

    int weight_of(uint32_t mask) const {
        int w = 0;
        for (int i = 0; i < size(); ++i)
            if (mask & (1u << i)) w += gens_[i].weight;
        return w;
    }

    std::string mask_str(uint32_t mask) const;

private:
    std::vector<CoframeGenerator> gens_;
};

/// Sign of moving every generator of mask b across the larger generators of
/// mask a when concatenating and re-sorting a strictly increasing product.
inline int merge_sign(uint32_t a, uint32_t b) {
    int inversions = 0;
    while (b) {
        uint32_t lowest = b & (~b + 1);
        uint32_t above = a & ~(lowest | (lowest - 1));
        inversions += std::popcount(above);
        b &= b - 1;
    }
    return (inversions % 2 == 0) ? 1 : -1;
}

/// Sparse exterior-algebra element over a coframe. Coefficients live in any
/// commutative ring with is_zero(), +=, *, unary minus and ==.
template <typename Coeff>
class BasicForm {
public:
    using Terms = std::map<uint32_t, Coeff>;

    BasicForm() : frame_(nullptr) {}
    explicit BasicForm(const Coframe* frame) : frame_(frame) {}

    static BasicForm generator(const Coframe* frame, int index, Coeff c = Coeff(1)) {
        BasicForm f(frame);
        f.add_term(1u << index, std::move(c));
        return f;
    }
    static BasicForm constant(const Coframe* frame, Coeff c) {
        BasicForm f(frame);
        f.add_term(0, std::move(c));
        return f;
    }

    const Coframe* frame() const { return frame_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(uint32_t mask, Coeff c) {
        if (c.is_zero()) return;
        auto it = terms_.find(mask);
        if (it == terms_.end()) {
            terms_.emplace(mask, std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Coeff coefficient(uint32_t mask) const {
        auto it = terms_.find(mask);
        return it == terms_.end() ? Coeff(0) : it->second;
    }

    BasicForm operator-() const {
        BasicForm r(frame_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    BasicForm& operator+=(const BasicForm& o) {
        check_frame(o);
        if (!frame_) frame_ = o.frame_;
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    BasicForm& operator-=(const BasicForm& o) {
        check_frame(o);
        if (!frame_) frame_ = o.frame_;
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend BasicForm operator+(BasicForm a, const BasicForm& b) { return a += b; }
    friend BasicForm operator-(BasicForm a, const BasicForm& b) { return a -= b; }

    BasicForm scaled(const Coeff& c) const {
        BasicForm r(frame_);
        for (const auto& [m, coeff] : terms_) r.add_term(m, coeff * c);
        return r;
    }

    friend BasicForm wedge(const BasicForm& a, const BasicForm& b) {
        a.check_frame(b);
        BasicForm r(a.frame_ ? a.frame_ : b.frame_);
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                if (ma & mb) continue;  // repeated generator
                Coeff c = ca * cb;
                if (merge_sign(ma, mb) < 0) c = -c;
                r.add_term(ma | mb, std::move(c));
            }
        }
        return r;
    }

    friend bool operator==(const BasicForm& a, const BasicForm& b) {
        return (a - b).is_zero();
    }
    friend bool operator!=(const BasicForm& a, const BasicForm& b) { return !(a == b); }

    /// Terms of the requested (horizontal, vertical) bidegree.
    BasicForm grade_part(int horizontal, int vertical) const {
        BasicForm r(frame_);
        for (const auto& [m, c] : terms_)
            if (frame_->bidegree_of(m) == std::pair{horizontal, vertical}) r.terms_.emplace(m, c);
        return r;
    }

    /// True when every term has total degree d.
    bool is_homogeneous(int d) const {
        for (const auto& [m, c] : terms_)
            if (std::popcount(m) != d) return false;
        return true;
    }

    int max_degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, std::popcount(m));
        return d;
    }

private:
    void check_frame(const BasicForm& o) const {
        if (frame_ && o.frame_ && frame_ != o.frame_)
            throw std::invalid_argument("BasicForm: coframe mismatch");
    }

    const Coframe* frame_;
    Terms terms_;
};

using FormElement = BasicForm<Scalar>;

/// Ratio a / reference for top-degree forms, where reference has a single term.
Scalar top_coefficient(const FormElement& a, const FormElement& reference);

/// Express each target in the span of the candidates; nullopt if any target
/// falls outside the span.
std::optional<ScalarMatrix> solve_linear(const std::vector<FormElement>& targets,
                                         const std::vector<FormElement>& candidates);

/// Column vectors of the candidates over the union of occurring masks, plus
/// that mask list. Used by rank and kernel computations on spans of forms.
std::pair<std::vector<ScalarVec>, std::vector<uint32_t>> form_columns(
    const std::vector<FormElement>& forms);

std::string form_str(const FormElement& f);

}  // namespace octig
