#pragma once

#include <complex>
#include <map>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qcat {

using Integer = mpz_class;
using Rational = mpq_class;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
double to_double(const Rational& q);
/// num/den in lowest terms.
inline Rational fraction(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Element of Q(i): re + im*i with arbitrary-precision rational parts.
class GaussRat {
public:
    GaussRat() = default;
    GaussRat(long v) : re_(v) {}
    GaussRat(const Rational& re) : re_(re) {}
    GaussRat(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussRat i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

    GaussRat conj() const { return {re_, -im_}; }
    Rational norm() const { return re_ * re_ + im_ * im_; }
    GaussRat inverse() const;

    GaussRat operator-() const { return {-re_, -im_}; }
    GaussRat& operator+=(const GaussRat& o);
    GaussRat& operator-=(const GaussRat& o);
    GaussRat& operator*=(const GaussRat& o);
    GaussRat& operator/=(const GaussRat& o);

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    std::complex<double> to_complex() const { return {to_double(re_), to_double(im_)}; }

    /// Parses "p/q", "p/q+r/s i", "-i", "3/2*i", "0.25"; whitespace ignored.
    static GaussRat parse(std::string_view text);
    /// Canonical text form "p/q", "r/s i" or "p/q+r/s i".
    std::string str() const;

private:
    Rational re_{0};
    Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussRat& z);

/// Finite sum  sum_k c_k * sqrt(r_k)  with c_k in Q(i) and r_k distinct
/// squarefree positive integers. Square roots of distinct squarefree
/// integers are linearly independent over Q(i), so the representation is
/// canonical and zero tests are exact.
class AlgebraicNumber {
public:
    AlgebraicNumber() = default;
    AlgebraicNumber(long v) : AlgebraicNumber(GaussRat(v)) {}
    AlgebraicNumber(const Rational& v) : AlgebraicNumber(GaussRat(v)) {}
    AlgebraicNumber(const GaussRat& v);

    /// sqrt(q) for rational q; negative q gives i*sqrt(|q|).
    static AlgebraicNumber sqrt_of(const Rational& q);

    /// Accepts a Gaussian rational or "[c*]sqrt(q)" with c a Gaussian rational.
    static AlgebraicNumber parse(std::string_view text);
    std::string str() const;

    bool is_zero() const { return terms_.empty(); }
    bool is_gauss_rational() const;
    /// Value when is_gauss_rational(); throws InputError otherwise.
    GaussRat gauss_value() const;
    AlgebraicNumber conj() const;

    AlgebraicNumber operator-() const;
    AlgebraicNumber& operator+=(const AlgebraicNumber& o);
    AlgebraicNumber& operator-=(const AlgebraicNumber& o);
    friend AlgebraicNumber operator+(AlgebraicNumber a, const AlgebraicNumber& b) { return a += b; }
    friend AlgebraicNumber operator-(AlgebraicNumber a, const AlgebraicNumber& b) { return a -= b; }
    friend AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b);
    friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) {
        return a.terms_ == b.terms_;
    }

    const std::map<Integer, GaussRat>& terms() const { return terms_; }

    /// Numeric value in any real type T that supports sqrt via ADL.
    template <class T>
    std::pair<T, T> value() const;

    std::complex<double> to_complex() const;

private:
    std::map<Integer, GaussRat> terms_;
};

std::ostream& operator<<(std::ostream& os, const AlgebraicNumber& a);

/// Exact rational converted into an arbitrary real type through its
/// numerator/denominator strings (exact for mpfr, correctly rounded for
/// builtin floating types up to the final division).
template <class T>
T rational_to(const Rational& q) {
    if constexpr (std::is_floating_point_v<T>) {
        return static_cast<T>(q.get_d());
    } else {
        return T(q.get_num().get_str()) / T(q.get_den().get_str());
    }
}

template <class T>
std::pair<T, T> AlgebraicNumber::value() const {
    using std::sqrt;
    T re(0), im(0);
    for (const auto& [rad, c] : terms_) {
        T root = rad == 1 ? T(1) : sqrt(rational_to<T>(Rational(rad)));
        re += rational_to<T>(c.re()) * root;
        im += rational_to<T>(c.im()) * root;
    }
    return {re, im};
}

} // namespace qcat
