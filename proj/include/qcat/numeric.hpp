#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/float128.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include "qcat/errors.hpp"
#include "qcat/exact.hpp"
#include "qcat/multipoly.hpp"

namespace qcat {

/// ~113-bit binary floating point (about twice double precision).
using Quad = boost::multiprecision::float128;
/// 70 decimal digits (about four times double precision).
using MpReal = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<70>,
                                             boost::multiprecision::et_off>;

/// Minimal complex arithmetic over any real type with sqrt/abs/hypot found
/// by ADL; std::complex is only specified for the builtin float types.
template <class T>
struct Cx {
    T re{0};
    T im{0};

    Cx() = default;
    Cx(T r) : re(std::move(r)) {}
    Cx(T r, T i) : re(std::move(r)), im(std::move(i)) {}

    Cx operator-() const { return {-re, -im}; }
    Cx& operator+=(const Cx& o) { re += o.re; im += o.im; return *this; }
    Cx& operator-=(const Cx& o) { re -= o.re; im -= o.im; return *this; }
    Cx& operator*=(const Cx& o) {
        T r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    Cx& operator/=(const Cx& o) {
        // Smith's algorithm
        using std::abs;
        if (abs(o.re) >= abs(o.im)) {
            T r = o.im / o.re, d = o.re + o.im * r;
            T nr = (re + im * r) / d;
            im = (im - re * r) / d;
            re = std::move(nr);
        } else {
            T r = o.re / o.im, d = o.re * r + o.im;
            T nr = (re * r + im) / d;
            im = (im * r - re) / d;
            re = std::move(nr);
        }
        return *this;
    }
    friend Cx operator+(Cx a, const Cx& b) { return a += b; }
    friend Cx operator-(Cx a, const Cx& b) { return a -= b; }
    friend Cx operator*(Cx a, const Cx& b) { return a *= b; }
    friend Cx operator/(Cx a, const Cx& b) { return a /= b; }

    Cx conj() const { return {re, -im}; }
    T norm() const { return re * re + im * im; }
    T abs() const {
        using std::hypot;
        return hypot(re, im);
    }
    std::complex<double> to_complex() const {
        return {static_cast<double>(re), static_cast<double>(im)};
    }
};

/// Principal square root.
template <class T>
Cx<T> sqrt(const Cx<T>& z) {
    using std::abs;
    using std::sqrt;
    T m = z.abs();
    if (m == 0) return {};
    T r = sqrt((m + abs(z.re)) / 2);
    if (z.re >= 0) return {r, z.im / (2 * r)};
    T i = z.im >= 0 ? r : T(-r);
    return {abs(z.im) / (2 * r), i};
}

template <class T>
Cx<T> to_cx(const GaussRat& z) {
    return {rational_to<T>(z.re()), rational_to<T>(z.im())};
}

template <class T>
Cx<T> to_cx(const AlgebraicNumber& a) {
    auto [re, im] = a.template value<T>();
    return {re, im};
}

template <class T>
using CxMap = std::map<std::string, Cx<T>>;

/// Numeric evaluation of an exact polynomial; every variable must be bound.
template <class T>
Cx<T> evaluate_numeric(const MultiPoly& p, const CxMap<T>& values);

/// Exact polynomial pre-converted to a numeric term list for repeated
/// evaluation (parameter scans).
template <class T>
class CompiledPoly {
public:
    CompiledPoly() = default;
    CompiledPoly(const MultiPoly& p, const std::vector<std::string>& order);
    /// `x` holds values in the order passed to the constructor.
    Cx<T> operator()(const std::vector<Cx<T>>& x) const;

private:
    struct Term {
        Cx<T> coef;
        std::vector<std::pair<std::size_t, unsigned>> powers;
    };
    std::vector<Term> terms_;
};

template <class T>
Cx<T> ipow(Cx<T> base, unsigned n) {
    Cx<T> r(T(1));
    while (n) {
        if (n & 1u) r *= base;
        n >>= 1u;
        if (n) base *= base;
    }
    return r;
}

template <class T>
Cx<T> evaluate_numeric(const MultiPoly& p, const CxMap<T>& values) {
    std::vector<Cx<T>> x;
    for (const auto& v : p.variables()) {
        auto it = values.find(v);
        if (it == values.end()) throw InputError("unbound variable: " + v);
        x.push_back(it->second);
    }
    return CompiledPoly<T>(p, p.variables())(x);
}

template <class T>
CompiledPoly<T>::CompiledPoly(const MultiPoly& p, const std::vector<std::string>& order) {
    std::vector<std::size_t> pos;
    for (const auto& v : p.variables()) {
        std::size_t k = 0;
        while (k < order.size() && order[k] != v) ++k;
        if (k == order.size()) throw InputError("unbound variable: " + v);
        pos.push_back(k);
    }
    for (const auto& [e, c] : p.terms()) {
        Term t{to_cx<T>(c), {}};
        for (std::size_t k = 0; k < e.size(); ++k)
            if (e[k]) t.powers.emplace_back(pos[k], e[k]);
        terms_.push_back(std::move(t));
    }
}

template <class T>
Cx<T> CompiledPoly<T>::operator()(const std::vector<Cx<T>>& x) const {
    Cx<T> acc;
    for (const auto& t : terms_) {
        Cx<T> m = t.coef;
        for (const auto& [k, n] : t.powers) m *= ipow(x[k], n);
        acc += m;
    }
    return acc;
}

} // namespace qcat
