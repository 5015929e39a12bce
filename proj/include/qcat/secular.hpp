#pragma once

#include <complex>
#include <string>
#include <vector>

#include "qcat/exact.hpp"
#include "qcat/model_zoo.hpp"
#include "qcat/multipoly.hpp"
#include "qcat/upoly.hpp"

namespace qcat {

/// det(H - E) as a polynomial in the spectral variable with coefficients in
/// the model parameters. `var` is "E" or, after to_even_var, "s" with
/// s = (E_phys - shift)^2.
struct SecularPoly {
    std::string var = "E";
    std::vector<MultiPoly> coeffs;  // index = power of var
    GaussRat shift;                 // E_phys = E + shift

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    const MultiPoly& leading() const { return coeffs.back(); }
    std::vector<std::string> parameters() const;
    bool is_real() const;
    /// The whole polynomial as one MultiPoly in var and the parameters.
    MultiPoly as_multipoly() const;
    /// Descending powers, e.g. "s^2 + (alpha^2 + beta^2 - 3)*s + ...".
    std::string str() const;
    friend bool operator==(const SecularPoly& a, const SecularPoly& b) {
        return a.var == b.var && a.coeffs == b.coeffs && a.shift == b.shift;
    }
};

SecularPoly char_poly(const TriMatrix& h);
/// Substitutes the Gaussian-rational entries of `values` into the matrix
/// before the recurrence (cheap for concrete points); algebraic values stay
/// symbolic and are applied by specialize.
SecularPoly char_poly(const TriMatrix& h, const ParamMap& values);

/// E -> E + c; the absorbed constant accumulates in `shift`.
SecularPoly shift(const SecularPoly& p, const GaussRat& c);
/// Polynomial in s = E^2; OddTermError if any odd coefficient is nonzero.
SecularPoly to_even_var(const SecularPoly& p);

AlgebraicNumber evaluate(const SecularPoly& p, const ParamMap& params, const AlgebraicNumber& at);
std::complex<double> evaluate(const SecularPoly& p, const ParamMap& params, std::complex<double> at);

/// Exact coefficients (ascending) with every parameter bound.
std::vector<AlgebraicNumber> specialize(const SecularPoly& p, const ParamMap& params);
/// Coefficients scaled to Gaussian integers with unit content; InputError
/// when a coefficient is not a Gaussian rational.
GaussPoly specialize_gaussian(const SecularPoly& p, const ParamMap& params);

} // namespace qcat
