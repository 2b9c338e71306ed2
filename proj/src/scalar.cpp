#include "octig/scalar.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace octig {

std::string GaussianRational::str() const {
    std::ostringstream os;
    if (im_ == 0) {
        os << re_;
    } else {
        os << "(" << re_ << (im_ < 0 ? "-" : "+") << boost::multiprecision::abs(im_) << "*i)";
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& q) { return os << q.str(); }

Poly Poly::monomial(GaussianRational c, int pi_exp, int s_exp) {
    Poly p;
    if (!c.is_zero()) p.terms_[{pi_exp, s_exp}] = std::move(c);
    return p;
}

bool Poly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Mono{0, 0} &&
           terms_.begin()->second == GaussianRational(1);
}

int Poly::degree_pi() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.pi);
    return d;
}

int Poly::degree_s() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.s);
    return d;
}

void Poly::add_term(const Mono& m, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_[m] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms())
            r.add_term({ma.pi + mb.pi, ma.s + mb.s}, ca * cb);
    return r;
}

void Poly::scale(const GaussianRational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
}

Poly Poly::scaled(const GaussianRational& c) const {
    Poly r = *this;
    r.scale(c);
    return r;
}

Poly Poly::conj() const {
    Poly r;
    for (const auto& [m, c] : terms_) r.terms_[m] = c.conj();
    return r;
}

Poly Poly::coeff_pi(int k) const {
    Poly r;
    for (const auto& [m, c] : terms_)
        if (m.pi == k) r.terms_[{0, m.s}] = c;
    return r;
}

Poly Poly::coeff_s(int k) const {
    Poly r;
    for (const auto& [m, c] : terms_)
        if (m.s == k) r.terms_[{m.pi, 0}] = c;
    return r;
}

Poly Poly::substitute_s(const Rational& value) const {
    Poly r;
    for (const auto& [m, c] : terms_) {
        Rational f = 1;
        for (int j = 0; j < m.s; ++j) f *= value;
        r.add_term({m.pi, 0}, c * GaussianRational(f));
    }
    return r;
}

Poly Poly::substitute_s_squared(const Rational& value) const {
    Poly r;
    for (const auto& [m, c] : terms_) {
        Rational f = 1;
        for (int j = 0; j < m.s / 2; ++j) f *= value;
        r.add_term({m.pi, m.s % 2}, c * GaussianRational(f));
    }
    return r;
}

namespace {

Rational rational_gcd(const Rational& a, const Rational& b) {
    if (a == 0) return b < 0 ? Rational(-b) : b;
    if (b == 0) return a < 0 ? Rational(-a) : a;
    Integer na = boost::multiprecision::abs(numerator(a));
    Integer nb = boost::multiprecision::abs(numerator(b));
    return Rational(boost::multiprecision::gcd(na, nb),
                    boost::multiprecision::lcm(denominator(a), denominator(b)));
}

// Common rational factor of all coefficient components; 1 for the zero poly.
Rational rational_content(const Poly& p) {
    Rational c = 0;
    for (const auto& [m, coeff] : p.terms()) {
        c = rational_gcd(c, coeff.real());
        c = rational_gcd(c, coeff.imag());
    }
    return c == 0 ? Rational(1) : c;
}

// Divide out the numeric content to keep coefficient growth in check inside
// gcd computations (gcds are only defined up to units anyway).
void strip_rational_content(Poly& p) {
    Rational c = rational_content(p);
    if (c != 1) p.scale(GaussianRational(Rational(1) / c));
}

// Univariate Euclidean gcd in s (all pi exponents must be zero); monic result.
Poly gcd_univariate_s(Poly a, Poly b) {
    auto deg = [](const Poly& p) { return p.is_zero() ? -1 : p.lead_mono().s; };
    while (!b.is_zero()) {
        // remainder of a by b
        while (!a.is_zero() && deg(a) >= deg(b)) {
            GaussianRational q = a.lead_coeff() / b.lead_coeff();
            int shift = deg(a) - deg(b);
            a -= b * Poly::monomial(q, 0, shift);
        }
        strip_rational_content(a);
        std::swap(a, b);
    }
    if (!a.is_zero()) a.scale(a.lead_coeff().inverse());
    return a;
}

int deg_pi_of(const Poly& p) {
    int d = -1;
    for (const auto& [m, c] : p.terms()) d = std::max(d, m.pi);
    return d;
}

// Content of p with respect to pi: gcd in s of the pi-coefficients.
Poly content_pi(const Poly& p) {
    Poly c;
    for (int k = 0; k <= deg_pi_of(p); ++k) {
        Poly ck = p.coeff_pi(k);
        if (!ck.is_zero()) c = gcd_univariate_s(c, ck);
    }
    return c;
}

// Subresultant PRS (Collins) on primitive inputs with deg_pi(A) >= deg_pi(B):
// controls coefficient growth by exact division with the predicted factors.
Poly gcd_primitive_parts(Poly A, Poly B) {
    if (deg_pi_of(B) == 0) return Poly(GaussianRational(1));
    Poly g(GaussianRational(1)), h(GaussianRational(1));
    while (true) {
        int dA = deg_pi_of(A), dB = deg_pi_of(B);
        int delta = dA - dB;
        Poly lb = B.coeff_pi(dB);

        // exact pseudo-remainder lc(B)^{delta+1} * A mod B
        Poly R = A;
        int mults = 0;
        while (!R.is_zero() && deg_pi_of(R) >= dB) {
            int dR = deg_pi_of(R);
            Poly lr = R.coeff_pi(dR);
            R = R * lb - B * Poly::monomial(GaussianRational(1), dR - dB, 0) * lr;
            ++mults;
        }
        for (; mults < delta + 1; ++mults) R = R * lb;

        if (R.is_zero()) break;
        A = B;
        Poly divisor = g;
        for (int j = 0; j < delta; ++j) divisor = divisor * h;
        B = div_exact(R, divisor);
        if (deg_pi_of(B) == 0) return Poly(GaussianRational(1));
        g = A.coeff_pi(deg_pi_of(A));
        if (delta >= 1) {
            Poly gd = g;
            for (int j = 1; j < delta; ++j) gd = gd * g;
            Poly hd(GaussianRational(1));
            for (int j = 0; j < delta - 1; ++j) hd = hd * h;
            h = div_exact(gd, hd);
        }
    }
    Poly content = content_pi(B);
    Poly prim = div_exact(B, content);
    strip_rational_content(prim);
    return prim;
}

}  // namespace

Poly div_exact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("Poly: division by zero");
    Poly rem = a, q;
    while (!rem.is_zero()) {
        const Mono& ma = rem.lead_mono();
        const Mono& mb = b.lead_mono();
        if (ma.pi < mb.pi || ma.s < mb.s) throw std::domain_error("Poly: division not exact");
        Poly t = Poly::monomial(rem.lead_coeff() / b.lead_coeff(), ma.pi - mb.pi, ma.s - mb.s);
        rem -= t * b;
        q += t;
    }
    return q;
}

namespace {

Mono common_monomial(const Poly& p) {
    Mono m{INT32_MAX, INT32_MAX};
    for (const auto& [mono, c] : p.terms()) {
        m.pi = std::min(m.pi, mono.pi);
        m.s = std::min(m.s, mono.s);
    }
    return m;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) return Poly();
    auto monic = [](Poly p) {
        if (!p.is_zero()) p.scale(p.lead_coeff().inverse());
        return p;
    };
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    if (a.is_constant() || b.is_constant()) return Poly(GaussianRational(1));

    // single-term operands only share a monomial factor
    if (a.terms().size() == 1 || b.terms().size() == 1) {
        Mono ma = common_monomial(a), mb = common_monomial(b);
        return Poly::monomial(GaussianRational(1), std::min(ma.pi, mb.pi), std::min(ma.s, mb.s));
    }

    Poly ca = content_pi(a), cb = content_pi(b);
    Poly cg = gcd_univariate_s(ca, cb);
    Poly pa = div_exact(a, ca), pb = div_exact(b, cb);
    strip_rational_content(pa);
    strip_rational_content(pb);
    if (deg_pi_of(pa) < deg_pi_of(pb)) std::swap(pa, pb);
    return monic(cg * gcd_primitive_parts(std::move(pa), std::move(pb)));
}

Scalar::Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("Scalar: zero denominator");
    normalize();
}

Scalar Scalar::fraction(long num, long den) {
    return Scalar(GaussianRational(Rational(num, den)));
}

Scalar Scalar::monomial(const GaussianRational& c, int pi_exp, int s_exp) {
    Poly num = Poly::monomial(c, std::max(pi_exp, 0), std::max(s_exp, 0));
    Poly den = Poly::monomial(GaussianRational(1), std::max(-pi_exp, 0), std::max(-s_exp, 0));
    return Scalar(std::move(num), std::move(den));
}

void Scalar::normalize() {
    if (num_.is_zero()) {
        den_ = Poly(GaussianRational(1));
        return;
    }
    if (num_.terms().size() == 1 || den_.terms().size() == 1) {
        // only a monomial can cancel; strip the common part directly
        Mono mn = common_monomial(num_), md = common_monomial(den_);
        Mono shift{std::min(mn.pi, md.pi), std::min(mn.s, md.s)};
        if (shift.pi > 0 || shift.s > 0) {
            Poly n2, d2;
            for (const auto& [m, c] : num_.terms()) n2.add_term({m.pi - shift.pi, m.s - shift.s}, c);
            for (const auto& [m, c] : den_.terms()) d2.add_term({m.pi - shift.pi, m.s - shift.s}, c);
            num_ = std::move(n2);
            den_ = std::move(d2);
        }
    } else {
        Poly g = gcd(num_, den_);
        if (!g.is_one()) {
            num_ = div_exact(num_, g);
            den_ = div_exact(den_, g);
        }
    }
    GaussianRational lc = den_.lead_coeff();
    if (lc != GaussianRational(1)) {
        GaussianRational inv = lc.inverse();
        num_.scale(inv);
        den_.scale(inv);
    }
}

Scalar Scalar::operator-() const {
    Scalar r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("Scalar: inverse of zero");
    Scalar r;
    r.num_ = den_;
    r.den_ = num_;
    r.normalize();
    return r;
}

Scalar Scalar::conj() const {
    Scalar r;
    r.num_ = num_.conj();
    r.den_ = den_.conj();
    r.normalize();
    return r;
}

Scalar Scalar::substitute(const Rational& s_value) const {
    Poly d = den_.substitute_s(s_value);
    if (d.is_zero()) throw std::domain_error("Scalar: pole at substituted value");
    return Scalar(num_.substitute_s(s_value), std::move(d));
}

Scalar Scalar::substitute_lambda(const Rational& lambda_value) const {
    Poly d = den_.substitute_s_squared(lambda_value);
    if (d.is_zero()) throw std::domain_error("Scalar: pole at substituted value");
    return Scalar(num_.substitute_s_squared(lambda_value), std::move(d));
}

Scalar Scalar::coeff_s(int k) const {
    if (!den_is_s_free()) throw std::domain_error("Scalar: coeff_s needs s-free denominator");
    return Scalar(num_.coeff_s(k) * Poly::monomial(GaussianRational(1), 0, 0), den_);
}

std::optional<std::tuple<Rational, int, int>> Scalar::as_rational_monomial() const {
    if (is_zero()) return std::make_tuple(Rational(0), 0, 0);
    if (num_.terms().size() != 1 || den_.terms().size() != 1) return std::nullopt;
    const auto& [mn, cn] = *num_.terms().begin();
    const auto& [md, cd] = *den_.terms().begin();
    GaussianRational c = cn / cd;
    if (!c.is_real()) return std::nullopt;
    return std::make_tuple(c.real(), mn.pi - md.pi, mn.s - md.s);
}

namespace {

std::string poly_str(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // descending graded-lex
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        std::string cs = c.str();
        if (!first) {
            if (c.is_real() && c.real() < 0) {
                os << " - ";
                cs = (-c).str();
            } else {
                os << " + ";
            }
        }
        first = false;
        os << cs;
        if (m.pi > 0) os << "*pi^" << m.pi;
        if (m.s > 0) os << "*s^" << m.s;
    }
    return os.str();
}

struct Parser {
    const std::string& text;
    size_t pos = 0;

    explicit Parser(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    Rational parse_rational() {
        skip_ws();
        size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos < text.size() && text[pos] == '/') {
            ++pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        }
        return Rational(text.substr(start, pos - start));
    }

    int parse_int() {
        skip_ws();
        size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        return std::stoi(text.substr(start, pos - start));
    }

    GaussianRational parse_coeff() {
        if (peek() == '(') {
            eat('(');
            Rational re = parse_rational();
            skip_ws();
            char sign = text[pos];
            ++pos;  // '+' or '-'
            Rational im = parse_rational();
            if (!eat('*') || !eat('i')) throw std::domain_error("Scalar::parse: bad complex coefficient");
            if (!eat(')')) throw std::domain_error("Scalar::parse: expected ')'");
            return {re, sign == '-' ? -im : im};
        }
        return GaussianRational(parse_rational());
    }

    Poly parse_poly() {
        Poly p;
        bool neg = false;
        if (eat('-')) neg = true;
        while (true) {
            GaussianRational c = parse_coeff();
            if (neg) c = -c;
            int pi_exp = 0, s_exp = 0;
            while (eat('*')) {
                skip_ws();
                if (text.compare(pos, 2, "pi") == 0) {
                    pos += 2;
                    if (!eat('^')) throw std::domain_error("Scalar::parse: expected '^'");
                    pi_exp = parse_int();
                } else if (text[pos] == 's') {
                    ++pos;
                    if (!eat('^')) throw std::domain_error("Scalar::parse: expected '^'");
                    s_exp = parse_int();
                } else {
                    throw std::domain_error("Scalar::parse: unknown symbol");
                }
            }
            p.add_term({pi_exp, s_exp}, c);
            skip_ws();
            if (eat('+')) {
                neg = false;
            } else if (eat('-')) {
                neg = true;
            } else {
                break;
            }
        }
        return p;
    }
};

}  // namespace

std::string Poly::str() const { return poly_str(*this); }

std::string Scalar::str() const {
    if (den_.is_one()) return poly_str(num_);
    return "(" + poly_str(num_) + ")/(" + poly_str(den_) + ")";
}

Scalar Scalar::parse(const std::string& text) {
    Parser p(text);
    if (p.peek() == '(') {
        // could be "(num)/(den)" or a complex coefficient; try fraction form
        size_t depth = 0, split = std::string::npos;
        for (size_t k = 0; k < text.size(); ++k) {
            if (text[k] == '(') ++depth;
            if (text[k] == ')') {
                --depth;
                if (depth == 0 && k + 1 < text.size() && text[k + 1] == '/') {
                    split = k + 1;
                    break;
                }
            }
        }
        if (split != std::string::npos) {
            std::string ns = text.substr(1, split - 2);
            std::string ds = text.substr(split + 2, text.size() - split - 3);
            Parser np(ns), dp(ds);
            return Scalar(np.parse_poly(), dp.parse_poly());
        }
    }
    return Scalar(p.parse_poly(), Poly(GaussianRational(1)));
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.str(); }

Scalar unit_ball_volume(int k) {
    if (k < 0 || k > 7) throw std::domain_error("unit_ball_volume: k out of range");
    // omega_k = pi^(k/2) / Gamma(k/2 + 1)
    static const std::pair<Rational, int> table[8] = {
        {Rational(1), 0},        // 1
        {Rational(2), 0},        // 2
        {Rational(1), 1},        // pi
        {Rational(4, 3), 1},     // 4pi/3
        {Rational(1, 2), 2},     // pi^2/2
        {Rational(8, 15), 2},    // 8pi^2/15
        {Rational(1, 6), 3},     // pi^3/6
        {Rational(16, 105), 3},  // 16pi^3/105
    };
    return Scalar::monomial(GaussianRational(table[k].first), table[k].second, 0);
}

Scalar sphere_volume(int k) {
    if (k < 0 || k > 7) throw std::domain_error("sphere_volume: k out of range");
    // alpha_k = (k+1) * omega_{k+1}
    static const std::pair<Rational, int> table[8] = {
        {Rational(2), 0},       // 2
        {Rational(2), 1},       // 2pi
        {Rational(4), 1},       // 4pi
        {Rational(2), 2},       // 2pi^2
        {Rational(8, 3), 2},    // 8pi^2/3
        {Rational(1), 3},       // pi^3
        {Rational(16, 15), 3},  // 16pi^3/15
        {Rational(1, 3), 4},    // pi^4/3
    };
    return Scalar::monomial(GaussianRational(table[k].first), table[k].second, 0);
}

}  // namespace octig
