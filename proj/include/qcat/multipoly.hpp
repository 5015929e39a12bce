#pragma once

#include <map>
#include <string>
#include <vector>

#include "qcat/exact.hpp"

namespace qcat {

/// Sparse multivariate polynomial with Gaussian-rational coefficients.
///
/// Variables are kept sorted by name and unused variables are dropped after
/// every operation, so structurally equal polynomials compare equal. Terms
/// are ordered by descending total degree, ties broken lexicographically
/// (graded lex); the first term is the leading term.
class MultiPoly {
public:
    using Exponents = std::vector<unsigned>;

    struct GradedOrder {
        bool operator()(const Exponents& a, const Exponents& b) const;
    };
    using TermMap = std::map<Exponents, GaussRat, GradedOrder>;

    MultiPoly() = default;
    MultiPoly(long c) : MultiPoly(GaussRat(c)) {}
    MultiPoly(const Rational& c) : MultiPoly(GaussRat(c)) {}
    MultiPoly(const GaussRat& c);

    static MultiPoly variable(const std::string& name);
    /// Builds sum_k coeffs[k] * var^k.
    static MultiPoly from_coefficients(const std::string& var, const std::vector<MultiPoly>& coeffs);

    const std::vector<std::string>& variables() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return vars_.empty(); }
    GaussRat constant_term() const;
    /// Value of a constant polynomial; throws InputError naming the free
    /// variables otherwise.
    GaussRat constant_value() const;
    bool has_variable(const std::string& var) const;

    unsigned degree(const std::string& var) const;
    unsigned total_degree() const;

    /// Coefficients w.r.t. one variable, index = power.
    std::vector<MultiPoly> coefficients_in(const std::string& var) const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    MultiPoly pow(unsigned n) const;

    MultiPoly scaled(const GaussRat& c) const;
    /// Coefficientwise conjugate (variables are taken real).
    MultiPoly conj() const;
    bool is_real() const;
    MultiPoly real_part() const;
    MultiPoly imag_part() const;

    /// Partial derivative.
    MultiPoly derivative(const std::string& var) const;

    /// Simultaneous substitution of polynomials for variables.
    MultiPoly substitute(const std::map<std::string, MultiPoly>& values) const;
    /// Exact evaluation; every variable must be bound (InputError otherwise).
    AlgebraicNumber evaluate(const std::map<std::string, AlgebraicNumber>& values) const;

    /// Quotient of an exact division; ComputationError if b does not divide.
    MultiPoly exact_divide(const MultiPoly& b) const;
    /// Divides out the positive rational content and makes the leading
    /// coefficient's first nonzero part positive.
    MultiPoly primitive_part() const;

    /// True when every term has the same total-degree parity, i.e. the
    /// polynomial is even or odd under flipping the sign of all variables.
    bool has_sign_flip_parity() const;

    /// Max |coefficient| as a double (0 for the zero polynomial).
    double max_abs_coefficient() const;

    std::string str() const;

private:
    std::vector<std::string> vars_;
    TermMap terms_;

    MultiPoly(std::vector<std::string> vars, TermMap terms);
    TermMap aligned_terms(const std::vector<std::string>& vars) const;
    void normalize();
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

/// Union of sorted variable lists.
std::vector<std::string> merge_variables(const std::vector<std::string>& a,
                                         const std::vector<std::string>& b);

} // namespace qcat
