#include "octig/trig.hpp"

#include <ostream>
#include <sstream>

namespace octig {

const char* angle_name(Angle a) {
    switch (a) {
        case Angle::Rho: return "rho";
        case Angle::Phi: return "phi";
        case Angle::T: return "t";
        case Angle::Theta: return "theta";
    }
    return "?";
}

TrigPoly TrigPoly::sin(Angle v, int power) {
    TrigPoly p;
    if (power == 0) return TrigPoly(Scalar(1));
    p.terms_[{{static_cast<int>(v), {power, 0}}}] = Scalar(1);
    return p;
}

TrigPoly TrigPoly::cos(Angle v) {
    TrigPoly p;
    p.terms_[{{static_cast<int>(v), {0, 1}}}] = Scalar(1);
    return p;
}

void TrigPoly::canonicalize_into(TrigPoly& out, Monomial m, const Scalar& c) {
    // reduce any cos power >= 2 via cos^2 = 1 - sin^2
    for (auto it = m.begin(); it != m.end(); ++it) {
        auto [sp, cp] = it->second;
        if (cp >= 2) {
            Monomial lower = m, higher = m;
            lower[it->first] = {sp, cp - 2};
            higher[it->first] = {sp + 2, cp - 2};
            canonicalize_into(out, std::move(lower), c);
            canonicalize_into(out, std::move(higher), -c);
            return;
        }
    }
    for (auto it = m.begin(); it != m.end();) {
        if (it->second == std::pair{0, 0})
            it = m.erase(it);
        else
            ++it;
    }
    out.add_term(std::move(m), c);
}

void TrigPoly::add_term(Monomial m, Scalar c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(std::move(m), std::move(c));
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TrigPoly TrigPoly::operator-() const {
    TrigPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

TrigPoly& TrigPoly::operator+=(const TrigPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

TrigPoly& TrigPoly::operator-=(const TrigPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

TrigPoly operator*(const TrigPoly& a, const TrigPoly& b) {
    TrigPoly r;
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            TrigPoly::Monomial m = ma;
            for (const auto& [v, pw] : mb) {
                auto& slot = m[v];
                slot.first += pw.first;
                slot.second += pw.second;
            }
            TrigPoly::canonicalize_into(r, std::move(m), ca * cb);
        }
    }
    return r;
}

TrigPoly TrigPoly::scaled(const Scalar& c) const {
    TrigPoly r;
    for (const auto& [m, coeff] : terms_) r.add_term(m, coeff * c);
    return r;
}

bool TrigPoly::depends_on(Angle v) const {
    for (const auto& [m, c] : terms_)
        if (m.count(static_cast<int>(v))) return true;
    return false;
}

TrigPoly TrigPoly::substitute_angle(Angle v, const Scalar& sin_value, const Scalar& cos_value) const {
    TrigPoly r;
    int vi = static_cast<int>(v);
    for (const auto& [m, c] : terms_) {
        Monomial rest = m;
        Scalar factor = c;
        auto it = rest.find(vi);
        if (it != rest.end()) {
            auto [sp, cp] = it->second;
            for (int k = 0; k < sp; ++k) factor *= sin_value;
            for (int k = 0; k < cp; ++k) factor *= cos_value;
            rest.erase(it);
        }
        r.add_term(std::move(rest), factor);
    }
    return r;
}

namespace {

// int_0^{pi/2} sin^a cos^b, b in {0,1}; exact.
Scalar wallis_quarter(int a, int b) {
    if (b == 1) return Scalar::fraction(1, a + 1);
    // (a-1)!!/a!! with a pi/2 factor when a is even
    Rational v = 1;
    for (int k = a; k >= 2; k -= 2) v *= Rational(k - 1, k);
    Scalar r{GaussianRational(v)};
    if (a % 2 == 0) r *= Scalar::pi_pow(1) * Scalar::fraction(1, 2);
    return r;
}

}  // namespace

TrigPoly TrigPoly::integrate_definite(Angle v, Interval interval) const {
    TrigPoly r;
    int vi = static_cast<int>(v);
    for (const auto& [m, c] : terms_) {
        Monomial rest = m;
        int a = 0, b = 0;
        auto it = rest.find(vi);
        if (it != rest.end()) {
            a = it->second.first;
            b = it->second.second;
            rest.erase(it);
        }
        Scalar value(0);
        switch (interval) {
            case Interval::ZeroToHalfPi:
                value = wallis_quarter(a, b);
                break;
            case Interval::ZeroToPi:
                // sin^a cos integrates to zero over [0, pi]
                value = (b == 1) ? Scalar(0) : Scalar(2) * wallis_quarter(a, 0);
                break;
            case Interval::ZeroToTwoPi:
                if (b == 0 && a % 2 == 0)
                    value = Scalar(4) * wallis_quarter(a, 0);
                else
                    value = Scalar(0);
                break;
        }
        r.add_term(std::move(rest), c * value);
    }
    return r;
}

TrigPoly TrigPoly::integrate_to_symbolic(Angle v, Angle upper) const {
    TrigPoly r;
    int vi = static_cast<int>(v);
    for (const auto& [m, c] : terms_) {
        Monomial rest = m;
        int a = 0, b = 0;
        auto it = rest.find(vi);
        if (it != rest.end()) {
            a = it->second.first;
            b = it->second.second;
            rest.erase(it);
        }
        TrigPoly tail;
        tail.add_term(rest, c);
        if (b == 1) {
            // int_0^U sin^a cos = sin^{a+1}(U)/(a+1)
            r += (tail * TrigPoly::sin(upper, a + 1)).scaled(Scalar::fraction(1, a + 1));
        } else if (a % 2 == 1) {
            // int_0^U sin^a = -int_{1}^{cos U} (1-x^2)^{(a-1)/2} dx
            // expand the binomial and integrate term by term
            int n = (a - 1) / 2;
            Rational binom = 1;
            for (int j = 0; j <= n; ++j) {
                if (j > 0) binom = binom * Rational(n - j + 1) / Rational(j);
                Rational coeff = binom / Rational(2 * j + 1);
                if (j % 2 == 1) coeff = -coeff;
                // term: -coeff * (cos^{2j+1}(U) - 1)
                TrigPoly cos_pow(Scalar(1));
                for (int k = 0; k < 2 * j + 1; ++k) cos_pow *= TrigPoly::cos(upper);
                TrigPoly piece = TrigPoly(Scalar(1)) - cos_pow;
                r += (tail * piece).scaled(Scalar(GaussianRational(coeff)));
            }
        } else if (a == 0 && b == 0) {
            throw std::domain_error("TrigPoly: constant term has no trig antiderivative");
        } else {
            throw std::domain_error("TrigPoly: even sine power has no trig antiderivative");
        }
    }
    return r;
}

TrigPoly TrigPoly::derivative(Angle v) const {
    TrigPoly r;
    int vi = static_cast<int>(v);
    for (const auto& [m, c] : terms_) {
        auto it = m.find(vi);
        if (it == m.end()) continue;
        auto [a, b] = it->second;
        if (a > 0) {
            Monomial down = m;
            down[vi] = {a - 1, b + 1};
            canonicalize_into(r, std::move(down), c * Scalar(a));
        }
        if (b == 1) {
            Monomial up = m;
            up[vi] = {a + 1, 0};
            canonicalize_into(r, std::move(up), -c);
        }
    }
    return r;
}

std::string TrigPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (const auto& [v, pw] : m) {
            Angle a = static_cast<Angle>(v);
            if (pw.first > 0) {
                os << "*sin(" << angle_name(a) << ")";
                if (pw.first > 1) os << "^" << pw.first;
            }
            if (pw.second > 0) os << "*cos(" << angle_name(a) << ")";
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const TrigPoly& p) { return os << p.str(); }

}  // namespace octig
