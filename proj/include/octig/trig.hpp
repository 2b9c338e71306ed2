#pragma once

#include "octig/scalar.hpp"

#include <map>
#include <string>

namespace octig {

/// Named angle variables appearing in the ball and restriction integrals.
enum class Angle : int { Rho = 0, Phi = 1, T = 2, Theta = 3 };

const char* angle_name(Angle a);

/// Polynomial in sin/cos of angle variables with Scalar coefficients.
/// Canonical form keeps cosine exponents in {0, 1} via cos^2 = 1 - sin^2,
/// so structural equality decides equality of functions.
class TrigPoly {
public:
    // var -> (sin power, cos power in {0,1})
    using Monomial = std::map<int, std::pair<int, int>>;
    using Terms = std::map<Monomial, Scalar>;

    TrigPoly() = default;
    explicit TrigPoly(Scalar c) {
        if (!c.is_zero()) terms_[{}] = std::move(c);
    }
    TrigPoly(long n) : TrigPoly(Scalar(n)) {}

    static TrigPoly sin(Angle v, int power = 1);
    static TrigPoly cos(Angle v);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    TrigPoly operator-() const;
    TrigPoly& operator+=(const TrigPoly& o);
    TrigPoly& operator-=(const TrigPoly& o);
    friend TrigPoly operator+(TrigPoly a, const TrigPoly& b) { return a += b; }
    friend TrigPoly operator-(TrigPoly a, const TrigPoly& b) { return a -= b; }
    friend TrigPoly operator*(const TrigPoly& a, const TrigPoly& b);
    TrigPoly& operator*=(const TrigPoly& o) { return *this = *this * o; }
    TrigPoly scaled(const Scalar& c) const;

    friend bool operator==(const TrigPoly& a, const TrigPoly& b) { return (a - b).is_zero(); }
    friend bool operator!=(const TrigPoly& a, const TrigPoly& b) { return !(a == b); }

    bool depends_on(Angle v) const;

    /// Replace the variable by exact values of its sine and cosine.
    TrigPoly substitute_angle(Angle v, const Scalar& sin_value, const Scalar& cos_value) const;

    enum class Interval { ZeroToHalfPi, ZeroToPi, ZeroToTwoPi };
    /// Definite integral over the variable; exact, may introduce pi.
    TrigPoly integrate_definite(Angle v, Interval interval) const;

    /// Antiderivative in v evaluated from 0 to the symbolic angle `upper`.
    /// Requires every monomial to be trig-integrable in closed trig form
    /// (odd sine power or a cosine factor); throws std::domain_error otherwise.
    TrigPoly integrate_to_symbolic(Angle v, Angle upper) const;

    /// Partial derivative with respect to the variable.
    TrigPoly derivative(Angle v) const;

    std::string str() const;

private:
    void add_term(Monomial m, Scalar c);
    static void canonicalize_into(TrigPoly& out, Monomial m, const Scalar& c);

    Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const TrigPoly& p);

}  // namespace octig
