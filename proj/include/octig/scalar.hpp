#pragma once

#include "octig/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace octig {

/// Monomial pi^p * s^s in the two transcendental symbols. Graded-lex order
/// with pi > s: compare total degree first, then the pi exponent.
struct Mono {
    int pi = 0;
    int s = 0;

    int total() const { return pi + s; }

    friend bool operator<(const Mono& a, const Mono& b) {
        if (a.total() != b.total()) return a.total() < b.total();
        return a.pi < b.pi;
    }
    friend bool operator==(const Mono& a, const Mono& b) { return a.pi == b.pi && a.s == b.s; }
};

/// Polynomial in {pi, s} over Q(i). Sparse, sorted by graded-lex; no zero
/// coefficients stored.
class Poly {
public:
    using Terms = std::map<Mono, GaussianRational>;

    Poly() = default;
    explicit Poly(GaussianRational c) {
        if (!c.is_zero()) terms_[{0, 0}] = std::move(c);
    }
    static Poly monomial(GaussianRational c, int pi_exp, int s_exp);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Mono{0, 0}); }

    /// Leading (greatest) monomial under graded-lex. Requires nonzero.
    const Mono& lead_mono() const { return terms_.rbegin()->first; }
    const GaussianRational& lead_coeff() const { return terms_.rbegin()->second; }

    int degree_pi() const;
    int degree_s() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    void scale(const GaussianRational& c);
    Poly scaled(const GaussianRational& c) const;

    Poly conj() const;

    /// Coefficient of pi^k viewed as a polynomial in pi (result depends on s only).
    Poly coeff_pi(int k) const;
    /// Parts of fixed s-exponent... coefficient of s^k (result depends on pi only).
    Poly coeff_s(int k) const;

    /// s := value (exact). Throws nothing; use Scalar::substitute for pole checks.
    Poly substitute_s(const Rational& value) const;
    /// s^2 := value, keeping a single residual power of s for odd exponents.
    Poly substitute_s_squared(const Rational& value) const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
    friend bool operator<(const Poly& a, const Poly& b) { return a.terms_ < b.terms_; }

    void add_term(const Mono& m, const GaussianRational& c);

    std::string str() const;

private:
    Terms terms_;
};

Poly gcd(const Poly& a, const Poly& b);
/// Exact division; throws std::domain_error if b does not divide a.
Poly div_exact(const Poly& a, const Poly& b);

/// Element of Q(i)(pi, s), stored as a reduced fraction of polynomials.
/// Canonical form: gcd(num, den) = 1, den monic under graded-lex, zero is 0/1.
class Scalar {
public:
    Scalar() : den_(GaussianRational(1)) {}
    Scalar(long n) : num_(GaussianRational(n)), den_(GaussianRational(1)) {}
    Scalar(const GaussianRational& c) : num_(c), den_(GaussianRational(1)) {}
    Scalar(Poly num, Poly den);

    static Scalar fraction(long num, long den);
    static Scalar i() { return Scalar(GaussianRational::i()); }
    /// c * pi^a * s^b with integer exponents of either sign.
    static Scalar monomial(const GaussianRational& c, int pi_exp, int s_exp);
    static Scalar pi_pow(int k) { return monomial(GaussianRational(1), k, 0); }
    static Scalar s_pow(int k) { return monomial(GaussianRational(1), 0, k); }
    /// lambda = s^2.
    static Scalar lambda_pow(int k) { return s_pow(2 * k); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    Scalar inverse() const;
    Scalar conj() const;

    /// s := value; throws std::domain_error on a pole.
    Scalar substitute(const Rational& s_value) const;
    /// lambda = s^2 := value; odd powers of s keep one factor of s.
    Scalar substitute_lambda(const Rational& lambda_value) const;

    /// Coefficient of s^k, defined when the denominator is s-free.
    Scalar coeff_s(int k) const;
    int max_s_degree() const { return num_.degree_s(); }
    bool den_is_s_free() const { return den_.degree_s() == 0; }

    /// If *this == q * pi^a * s^b for a single rational q, returns (q, a, b).
    std::optional<std::tuple<Rational, int, int>> as_rational_monomial() const;

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    friend bool operator<(const Scalar& a, const Scalar& b) {
        if (!(a.num_ == b.num_)) return a.num_ < b.num_;
        return a.den_ < b.den_;
    }

    std::string str() const;
    static Scalar parse(const std::string& text);

private:
    void normalize();

    Poly num_;
    Poly den_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& x);

/// Volume of the k-dimensional unit ball, exact in pi; 0 <= k <= 7.
Scalar unit_ball_volume(int k);
/// Volume of the unit k-sphere, exact in pi; 0 <= k <= 7.
Scalar sphere_volume(int k);

}  // namespace octig
