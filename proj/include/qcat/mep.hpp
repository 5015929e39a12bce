#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qcat/model_zoo.hpp"
#include "qcat/multipoly.hpp"
#include "qcat/numeric.hpp"
#include "qcat/secular.hpp"
#include "qcat/upoly.hpp"

namespace qcat {

struct PolySystem {
    std::vector<MultiPoly> equations;
    std::vector<std::string> unknowns;
};

/// All coefficients below the leading one, divided by the leading constant
/// and split into real and imaginary parts; zero equations are dropped.
PolySystem mep_system(const SecularPoly& p);

/// Sylvester resultant in `var`, determinant by fraction-free elimination.
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, const std::string& var);

/// Univariate polynomial in `keep` vanishing at the keep-coordinate of every
/// solution (may carry extraneous factors). ComponentError when every
/// resultant vanishes identically.
RatPoly eliminate(const PolySystem& sys, const std::string& keep);
RatPoly to_ratpoly(const MultiPoly& p, const std::string& var);

/// Half-open interval (lo, hi] holding exactly one real root, or the exact
/// root when lo == hi.
struct RootInterval {
    Rational lo, hi;
    bool exact() const { return lo == hi; }
};

/// Number of distinct real roots in (a, b].
int sturm_count(const RatPoly& q, const Rational& a, const Rational& b);
int real_root_count(const RatPoly& q);
/// Disjoint isolating intervals of the distinct real roots, ascending,
/// each narrower than `width`.
std::vector<RootInterval> isolate_real_roots(const RatPoly& q, const Rational& width = Rational(1, 1000000000000));
/// Root in the interval to working precision (Newton with bisection guard).
MpReal refine_root(const RatPoly& q, const RootInterval& iv);

struct Degeneracy {
    std::complex<double> center;
    /// Bound on max |E - center| from the centred secular coefficients at the
    /// high-precision point.
    double cluster_radius = 0;
    /// Same quantity measured with a dense double eigensolve.
    double oracle_radius = 0;
    double matrix_norm = 0;
    /// rank((H - center)^k), k = 1..N
    std::vector<int> jordan_rank_profile;
};

struct MepSolution {
    std::vector<std::string> names;
    std::vector<MpReal> values;
    std::vector<std::optional<Rational>> exact;
    std::vector<double> residuals;
    Degeneracy degeneracy;

    double value(const std::string& name) const;
    double max_residual() const;
};

struct MepOptions {
    /// Newton starting points, used when more unknowns remain than
    /// elimination handles.
    std::vector<std::map<std::string, double>> seeds;
    int max_elimination_unknowns = 3;
    double certify_radius = 1e-4;
};

/// The secular polynomial centred at trace/N, in s when it is even.
SecularPoly centred_secular(const TriMatrix& h, const ParamMap& bound);

std::vector<MepSolution> solve_mep(const ModelSpec& spec, const MepOptions& opts = {});

/// Certificate at a parameter point (values in `names` order).
Degeneracy degeneracy_certificate(const TriMatrix& h, const ParamMap& bound, const std::vector<std::string>& names,
                                  const std::vector<MpReal>& values);

} // namespace qcat
