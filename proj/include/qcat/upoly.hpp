#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qcat/errors.hpp"
#include "qcat/exact.hpp"

namespace qcat {

namespace detail {
inline bool field_is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool field_is_zero(const GaussRat& z) { return z.is_zero(); }
inline Rational field_inverse(const Rational& q) { return 1 / q; }
inline GaussRat field_inverse(const GaussRat& z) { return z.inverse(); }
} // namespace detail

/// Dense univariate polynomial over an exact field (Rational or GaussRat),
/// coefficients in ascending powers. The zero polynomial has no coefficients.
template <class F>
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
    UPoly(const F& constant) : c_{constant} { trim(); }

    static UPoly monomial(const F& c, std::size_t power) {
        std::vector<F> v(power + 1, F(0));
        v[power] = c;
        return UPoly(std::move(v));
    }

    const std::vector<F>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const F& leading() const { return c_.back(); }
    F coeff(std::size_t k) const { return k < c_.size() ? c_[k] : F(0); }

    UPoly operator-() const {
        UPoly out = *this;
        for (auto& x : out.c_) x = -x;
        return out;
    }
    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        std::vector<F> v(std::max(a.c_.size(), b.c_.size()), F(0));
        for (std::size_t k = 0; k < a.c_.size(); ++k) v[k] += a.c_[k];
        for (std::size_t k = 0; k < b.c_.size(); ++k) v[k] += b.c_[k];
        return UPoly(std::move(v));
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<F> v(a.c_.size() + b.c_.size() - 1, F(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (detail::field_is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        }
        return UPoly(std::move(v));
    }
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    UPoly scaled(const F& s) const {
        std::vector<F> v = c_;
        for (auto& x : v) x *= s;
        return UPoly(std::move(v));
    }

    F operator()(const F& x) const {
        F acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    UPoly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<F> v(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) v[k - 1] = c_[k] * F(static_cast<long>(k));
        return UPoly(std::move(v));
    }

    UPoly monic() const {
        if (is_zero()) return {};
        return scaled(detail::field_inverse(leading()));
    }

    /// Euclidean division a = q*b + r.
    friend std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
        if (b.is_zero()) throw ComputationError("univariate division by zero");
        if (a.degree() < b.degree()) return {UPoly(), a};
        std::vector<F> r = a.c_;
        std::vector<F> q(a.c_.size() - b.c_.size() + 1, F(0));
        F inv = detail::field_inverse(b.leading());
        for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
            F f = r[k + b.c_.size() - 1] * inv;
            q[k] = f;
            if (detail::field_is_zero(f)) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[k + j] -= f * b.c_[j];
        }
        r.resize(b.c_.size() - 1);
        return {UPoly(std::move(q)), UPoly(std::move(r))};
    }
    friend UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }
    friend UPoly operator/(const UPoly& a, const UPoly& b) { return divmod(a, b).first; }

    /// Monic greatest common divisor (zero if both are zero).
    friend UPoly gcd(UPoly a, UPoly b) {
        while (!b.is_zero()) {
            UPoly r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    /// Squarefree part p / gcd(p, p'), monic.
    UPoly squarefree() const {
        if (degree() <= 0) return monic();
        return (*this / gcd(*this, derivative())).monic();
    }

    /// Yun's squarefree decomposition: pairs (factor, multiplicity) with
    /// pairwise coprime monic squarefree factors whose product (with
    /// multiplicities) equals the monic part of this polynomial.
    std::vector<std::pair<UPoly, int>> squarefree_decomposition() const {
        std::vector<std::pair<UPoly, int>> out;
        if (degree() <= 0) return out;
        UPoly f = monic();
        UPoly d = f.derivative();
        UPoly a = gcd(f, d);
        UPoly b = f / a;
        UPoly c = d / a;
        UPoly e = c - b.derivative();
        int k = 1;
        while (b.degree() > 0) {
            UPoly g = gcd(b, e);
            if (g.degree() > 0) out.emplace_back(g, k);
            b = b / g;
            c = e / g;
            e = c - b.derivative();
            ++k;
        }
        return out;
    }

    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string out;
        for (int k = degree(); k >= 0; --k) {
            const F& a = c_[k];
            if (detail::field_is_zero(a)) continue;
            std::string cs;
            if constexpr (std::is_same_v<F, Rational>) cs = a.get_str();
            else cs = "(" + a.str() + ")";
            if (!out.empty()) out += " + ";
            out += cs;
            if (k > 0) out += "*" + var + (k > 1 ? "^" + std::to_string(k) : "");
        }
        return out;
    }

private:
    std::vector<F> c_;
    void trim() {
        while (!c_.empty() && detail::field_is_zero(c_.back())) c_.pop_back();
    }
};

using RatPoly = UPoly<Rational>;
using GaussPoly = UPoly<GaussRat>;

} // namespace qcat
