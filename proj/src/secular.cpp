#include "qcat/secular.hpp"

#include <sstream>

#include "qcat/errors.hpp"

namespace qcat {

namespace {

using Coeffs = std::vector<MultiPoly>;

void trim(Coeffs& c) {
    while (c.size() > 1 && c.back().is_zero()) c.pop_back();
}

// sum_k a_k x^k times (b0 + b1 x)
Coeffs times_linear(const Coeffs& a, const MultiPoly& b0, const MultiPoly& b1) {
    Coeffs out(a.size() + 1);
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k].is_zero()) continue;
        out[k] += a[k] * b0;
        out[k + 1] += a[k] * b1;
    }
    return out;
}

Coeffs minus_scaled(Coeffs a, const Coeffs& b, const MultiPoly& f) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t k = 0; k < b.size(); ++k)
        if (!b[k].is_zero()) a[k] -= b[k] * f;
    return a;
}

bool is_gauss_binding(const AlgebraicNumber& a) { return a.is_gauss_rational(); }

std::string coefficient_block(const MultiPoly& c) {
    if (c.terms().size() <= 1) return c.str();
    return "(" + c.str() + ")";
}

} // namespace

std::vector<std::string> SecularPoly::parameters() const {
    std::vector<std::string> v;
    for (const auto& c : coeffs) v = merge_variables(v, c.variables());
    return v;
}

bool SecularPoly::is_real() const {
    for (const auto& c : coeffs)
        if (!c.is_real()) return false;
    return true;
}

MultiPoly SecularPoly::as_multipoly() const { return MultiPoly::from_coefficients(var, coeffs); }

std::string SecularPoly::str() const {
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const MultiPoly& c = coeffs[k];
        if (c.is_zero()) continue;
        std::string power = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
        std::string text;
        bool negative = false;
        if (k > 0 && c == MultiPoly(1)) {
            text = power;
        } else if (k > 0 && c == MultiPoly(-1)) {
            text = power;
            negative = true;
        } else if (c.is_constant() && c.constant_term().is_real()) {
            negative = sgn(c.constant_term().re()) < 0;
            text = Rational(abs(c.constant_term().re())).get_str() + (k > 0 ? "*" + power : "");
        } else {
            text = coefficient_block(c) + (k > 0 ? "*" + power : "");
        }
        if (out.empty()) out = (negative ? "-" : "") + text;
        else out += (negative ? " - " : " + ") + text;
    }
    return out.empty() ? "0" : out;
}

SecularPoly char_poly(const TriMatrix& h) {
    const int n = h.dim();
    const MultiPoly minus_one(-1);
    Coeffs prev2{MultiPoly(1)};
    Coeffs prev = times_linear(prev2, h.diag()[0], minus_one);
    for (int k = 1; k < n; ++k) {
        Coeffs next = times_linear(prev, h.diag()[k], minus_one);
        next = minus_scaled(std::move(next), prev2, h.coupling_product(k - 1));
        prev2 = std::move(prev);
        prev = std::move(next);
    }
    trim(prev);
    SecularPoly p;
    p.coeffs = std::move(prev);
    return p;
}

SecularPoly char_poly(const TriMatrix& h, const ParamMap& values) {
    std::map<std::string, MultiPoly> subst;
    for (const auto& [name, v] : values)
        if (is_gauss_binding(v)) subst[name] = MultiPoly(v.gauss_value());
    if (subst.empty()) return char_poly(h);
    std::vector<MultiPoly> diag;
    for (const auto& d : h.diag()) diag.push_back(d.substitute(subst));
    std::vector<Surd> sub, sup;
    for (const auto& s : h.sub()) sub.emplace_back(s.coef.substitute(subst), s.radicand.substitute(subst));
    for (const auto& s : h.sup()) sup.emplace_back(s.coef.substitute(subst), s.radicand.substitute(subst));
    return char_poly(TriMatrix(h.family(), h.parity(), std::move(diag), std::move(sub), std::move(sup)));
}

SecularPoly shift(const SecularPoly& p, const GaussRat& c) {
    if (p.var != "E") throw InputError("shift applies to a polynomial in E");
    const int n = p.degree();
    // binomial expansion of sum_k a_k (E + c)^k
    Coeffs out(n + 1);
    std::vector<GaussRat> cpow{GaussRat(1)};
    for (int k = 1; k <= n; ++k) cpow.push_back(cpow.back() * c);
    for (int k = 0; k <= n; ++k) {
        if (p.coeffs[k].is_zero()) continue;
        Integer binom = 1;
        for (int j = 0; j <= k; ++j) {
            // (E + c)^k contributes binom(k, j) c^(k-j) E^j
            out[j] += p.coeffs[k].scaled(GaussRat(Rational(binom)) * cpow[k - j]);
            binom = binom * (k - j) / (j + 1);
        }
    }
    trim(out);
    SecularPoly q;
    q.var = "E";
    q.coeffs = std::move(out);
    q.shift = p.shift + c;
    return q;
}

SecularPoly to_even_var(const SecularPoly& p) {
    if (p.var != "E") throw InputError("to_even_var applies to a polynomial in E");
    Coeffs out;
    for (int k = 0; k <= p.degree(); ++k) {
        if (k % 2) {
            if (!p.coeffs[k].is_zero())
                throw OddTermError("coefficient of E^" + std::to_string(k) + " is " + p.coeffs[k].str() +
                                   "; the spectrum is not symmetric about the shift");
        } else {
            out.push_back(p.coeffs[k]);
        }
    }
    SecularPoly q;
    q.var = "s";
    q.coeffs = std::move(out);
    q.shift = p.shift;
    return q;
}

std::vector<AlgebraicNumber> specialize(const SecularPoly& p, const ParamMap& params) {
    std::vector<AlgebraicNumber> out;
    for (const auto& c : p.coeffs) out.push_back(c.evaluate(params));
    return out;
}

AlgebraicNumber evaluate(const SecularPoly& p, const ParamMap& params, const AlgebraicNumber& at) {
    auto c = specialize(p, params);
    AlgebraicNumber acc;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * at + *it;
    return acc;
}

std::complex<double> evaluate(const SecularPoly& p, const ParamMap& params, std::complex<double> at) {
    auto c = specialize(p, params);
    std::complex<double> acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * at + it->to_complex();
    return acc;
}

GaussPoly specialize_gaussian(const SecularPoly& p, const ParamMap& params) {
    std::vector<GaussRat> c;
    Integer den = 1, num = 0;
    for (const auto& a : specialize(p, params)) {
        if (!a.is_gauss_rational())
            throw InputError("specialized coefficient " + a.str() + " is not a Gaussian rational");
        c.push_back(a.gauss_value());
        for (const Rational* q : {&c.back().re(), &c.back().im()}) {
            if (sgn(*q) == 0) continue;
            den = lcm(den, Integer(q->get_den()));
            num = gcd(num, Integer(q->get_num()));
        }
    }
    if (num == 0) return GaussPoly();
    Rational scale(den, num);
    scale.canonicalize();
    for (auto& z : c) z *= GaussRat(scale);
    return GaussPoly(std::move(c));
}

} // namespace qcat
