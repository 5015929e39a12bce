#include "qcat/exact.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

#include "qcat/errors.hpp"

namespace qcat {

namespace {

std::string strip_spaces(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
    });
}

// Unsigned decimal integer or decimal fraction, e.g. "12", "0.25".
Rational parse_unsigned_decimal(std::string_view s, std::string_view whole) {
    auto dot = s.find('.');
    if (dot == std::string_view::npos) {
        if (!all_digits(s)) throw InputError("malformed number '" + std::string(whole) + "'");
        return Rational(Integer(std::string(s)));
    }
    auto ip = s.substr(0, dot);
    auto fp = s.substr(dot + 1);
    if ((!ip.empty() && !all_digits(ip)) || !all_digits(fp))
        throw InputError("malformed number '" + std::string(whole) + "'");
    Integer num(std::string(ip.empty() ? "0" : ip) + std::string(fp));
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, fp.size());
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Squarefree decomposition n = f^2 * m for n > 0.
std::pair<Integer, Integer> square_part(Integer n) {
    Integer f = 1, m = 1;
    for (unsigned long p = 2; p <= 1000000 && Integer(p) * p <= n; p += (p == 2 ? 1 : 2)) {
        unsigned e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            ++e;
        }
        for (unsigned k = 0; k < e / 2; ++k) f *= p;
        if (e % 2) m *= p;
    }
    if (n > 1) {
        if (mpz_perfect_square_p(n.get_mpz_t())) {
            Integer r;
            mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
            f *= r;
        } else {
            m *= n;
        }
    }
    return {f, m};
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::string s = strip_spaces(text);
    if (s.empty()) throw InputError("empty number");
    bool neg = false;
    std::string_view body = s;
    if (body.front() == '+' || body.front() == '-') {
        neg = body.front() == '-';
        body.remove_prefix(1);
    }
    Rational q;
    auto slash = body.find('/');
    if (slash == std::string_view::npos) {
        q = parse_unsigned_decimal(body, text);
    } else {
        Rational num = parse_unsigned_decimal(body.substr(0, slash), text);
        Rational den = parse_unsigned_decimal(body.substr(slash + 1), text);
        if (sgn(den) == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
        q = num / den;
    }
    return neg ? Rational(-q) : q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

double to_double(const Rational& q) { return q.get_d(); }

GaussRat GaussRat::inverse() const {
    Rational n = norm();
    if (sgn(n) == 0) throw ComputationError("division by zero in Q(i)");
    return {re_ / n, -im_ / n};
}

GaussRat& GaussRat::operator+=(const GaussRat& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

GaussRat& GaussRat::operator/=(const GaussRat& o) {
    if (sgn(o.im_) == 0) {
        if (sgn(o.re_) == 0) throw ComputationError("division by zero in Q(i)");
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

GaussRat GaussRat::parse(std::string_view text) {
    std::string s = strip_spaces(text);
    if (s.empty()) throw InputError("empty complex number");
    // Split into signed terms at '+'/'-' that do not start the string and do
    // not follow '/' or '*'.
    std::vector<std::string> terms;
    std::string cur;
    for (std::size_t k = 0; k < s.size(); ++k) {
        char c = s[k];
        if ((c == '+' || c == '-') && k > 0 && s[k - 1] != '/' && s[k - 1] != '*') {
            terms.push_back(cur);
            cur.clear();
        }
        cur.push_back(c);
    }
    terms.push_back(cur);
    GaussRat out;
    for (std::string t : terms) {
        bool imag = !t.empty() && t.back() == 'i';
        if (imag) {
            t.pop_back();
            if (!t.empty() && t.back() == '*') t.pop_back();
            if (t.empty() || t == "+") t += "1";
            else if (t == "-") t = "-1";
            out.im_ += parse_rational(t);
        } else {
            out.re_ += parse_rational(t);
        }
    }
    return out;
}

std::string GaussRat::str() const {
    if (sgn(im_) == 0) return re_.get_str();
    std::string im = im_.get_str() + " i";
    if (sgn(re_) == 0) return im;
    return re_.get_str() + (sgn(im_) > 0 ? "+" : "") + im;
}

std::ostream& operator<<(std::ostream& os, const GaussRat& z) { return os << z.str(); }

// --- AlgebraicNumber -------------------------------------------------------

AlgebraicNumber::AlgebraicNumber(const GaussRat& v) {
    if (!v.is_zero()) terms_.emplace(Integer(1), v);
}

AlgebraicNumber AlgebraicNumber::sqrt_of(const Rational& q) {
    if (sgn(q) == 0) return {};
    Rational a = abs(q);
    // sqrt(p/d) = sqrt(p*d)/d
    Integer n = a.get_num() * a.get_den();
    auto [f, m] = square_part(n);
    Rational coef(f, a.get_den());
    coef.canonicalize();
    AlgebraicNumber out;
    out.terms_.emplace(m, sgn(q) > 0 ? GaussRat(coef) : GaussRat(Rational(0), coef));
    return out;
}

AlgebraicNumber AlgebraicNumber::parse(std::string_view text) {
    std::string s = strip_spaces(text);
    auto pos = s.find("sqrt(");
    if (pos == std::string::npos) return AlgebraicNumber(GaussRat::parse(s));
    if (s.back() != ')') throw InputError("malformed sqrt expression '" + s + "'");
    std::string coef = s.substr(0, pos);
    std::string arg = s.substr(pos + 5, s.size() - pos - 6);
    if (!coef.empty() && coef.back() == '*') coef.pop_back();
    GaussRat c(1);
    if (coef == "-") c = GaussRat(-1);
    else if (!coef.empty() && coef != "+") {
        if (coef.front() == '(' && coef.back() == ')') coef = coef.substr(1, coef.size() - 2);
        c = GaussRat::parse(coef);
    }
    return AlgebraicNumber(c) * sqrt_of(parse_rational(arg));
}

std::string AlgebraicNumber::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [rad, c] : terms_) {
        std::string piece;
        if (rad == 1) {
            piece = c.str();
        } else {
            std::string cs = c.str();
            bool simple = c.is_real() || sgn(c.re()) == 0;
            if (c.is_one()) piece = "sqrt(" + rad.get_str() + ")";
            else if (c == GaussRat(-1)) piece = "-sqrt(" + rad.get_str() + ")";
            else piece = (simple ? cs : "(" + cs + ")") + "*sqrt(" + rad.get_str() + ")";
        }
        if (!out.empty() && piece.front() != '-') out += "+";
        out += piece;
    }
    return out;
}

bool AlgebraicNumber::is_gauss_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

GaussRat AlgebraicNumber::gauss_value() const {
    if (!is_gauss_rational()) throw InputError("value " + str() + " is not a Gaussian rational");
    return terms_.empty() ? GaussRat() : terms_.begin()->second;
}

AlgebraicNumber AlgebraicNumber::conj() const {
    AlgebraicNumber out;
    for (const auto& [rad, c] : terms_) out.terms_.emplace(rad, c.conj());
    return out;
}

AlgebraicNumber AlgebraicNumber::operator-() const {
    AlgebraicNumber out;
    for (const auto& [rad, c] : terms_) out.terms_.emplace(rad, -c);
    return out;
}

AlgebraicNumber& AlgebraicNumber::operator+=(const AlgebraicNumber& o) {
    for (const auto& [rad, c] : o.terms_) {
        auto [it, inserted] = terms_.emplace(rad, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

AlgebraicNumber& AlgebraicNumber::operator-=(const AlgebraicNumber& o) { return *this += -o; }

AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    AlgebraicNumber out;
    for (const auto& [ra, ca] : a.terms_) {
        for (const auto& [rb, cb] : b.terms_) {
            // sqrt(ra)*sqrt(rb) = g*sqrt(ra*rb/g^2), g = gcd(ra, rb)
            Integer g = gcd(ra, rb);
            Integer rad = (ra / g) * (rb / g);
            AlgebraicNumber term;
            term.terms_.emplace(rad, ca * cb * GaussRat(Rational(g)));
            out += term;
        }
    }
    return out;
}

std::complex<double> AlgebraicNumber::to_complex() const {
    auto [re, im] = value<double>();
    return {re, im};
}

std::ostream& operator<<(std::ostream& os, const AlgebraicNumber& a) { return os << a.str(); }

} // namespace qcat
