#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "qcat/exact.hpp"
#include "qcat/multipoly.hpp"

namespace qcat {

/// Grid-point, boundary-interaction, nearest-neighbour-interaction and
/// anharmonic-oscillator families.
enum class Family { GPM, BIM, NNIM, AOM };

/// NNIM mirror pattern of the couplings.
///  A: mirror-equal, H(a,b) = H(N+1-b, N+1-a); the pattern of the N=4 two
///     coupling model and of the N=10 alternating-sign chain.
///  B: mirror-flipped, H(a,b) = H(N+1-a, N+1-b); V is parity-even, so for
///     even N the central coupling must vanish.
enum class Variant { A, B };

/// Parity used in the pseudo-Hermiticity check H^dagger P = P H.
/// Lattice families use index reversal; the oscillator family is written in
/// the oscillator eigenbasis where parity is diag(+1, -1, +1, ...).
enum class ParityKind { Reversal, Alternating };

enum class AomMode { Coupling, Time, Squared };

std::string to_string(Family f);
Family parse_family(const std::string& s);

using ParamMap = std::map<std::string, AlgebraicNumber>;

/// Off-diagonal entry coef * sqrt(radicand). Oscillator couplings are only
/// known through their squares, so the square root stays symbolic and only
/// sub*sup products enter exact computations.
struct Surd {
    MultiPoly coef;
    MultiPoly radicand{1};

    Surd() = default;
    Surd(MultiPoly c) : coef(std::move(c)) {}
    Surd(MultiPoly c, MultiPoly r);

    bool is_plain() const { return radicand == MultiPoly(1); }
    Surd conj() const { return {coef.conj(), radicand}; }
    std::string str() const;
    friend bool operator==(const Surd& a, const Surd& b) {
        return a.coef == b.coef && a.radicand == b.radicand;
    }
};

struct ComplexTri;

/// Exact tridiagonal matrix whose entries are polynomials in the model
/// parameters. Indices are 0-based: sub[k] = H(k+1,k), sup[k] = H(k,k+1).
class TriMatrix {
public:
    TriMatrix(Family family, ParityKind parity, std::vector<MultiPoly> diag,
              std::vector<Surd> sub, std::vector<Surd> sup);

    int dim() const { return static_cast<int>(diag_.size()); }
    Family family() const { return family_; }
    ParityKind parity() const { return parity_; }
    const std::vector<MultiPoly>& diag() const { return diag_; }
    const std::vector<Surd>& sub() const { return sub_; }
    const std::vector<Surd>& sup() const { return sup_; }

    /// sub[k] * sup[k]; requires matching radicands.
    MultiPoly coupling_product(int k) const;
    MultiPoly trace() const;
    std::vector<std::string> variables() const;

    TriMatrix with_sub(int k, Surd s) const;
    TriMatrix with_sup(int k, Surd s) const;

    /// Double-precision matrix at concrete parameter values.
    ComplexTri evaluate(const ParamMap& params) const;

    std::string str() const;
    friend bool operator==(const TriMatrix& a, const TriMatrix& b) {
        return a.diag_ == b.diag_ && a.sub_ == b.sub_ && a.sup_ == b.sup_;
    }

private:
    Family family_;
    ParityKind parity_;
    std::vector<MultiPoly> diag_;
    std::vector<Surd> sub_;
    std::vector<Surd> sup_;
};

/// Float-complex tridiagonal matrix.
struct ComplexTri {
    Family family = Family::GPM;
    ParityKind parity = ParityKind::Reversal;
    std::vector<std::complex<double>> diag, sub, sup;

    int dim() const { return static_cast<int>(diag.size()); }
    Eigen::MatrixXcd dense() const;
};

/// Parity operator, stored as its dimension and kind and applied without
/// forming the matrix. P^2 = I, P real symmetric.
class ParityMatrix {
public:
    ParityMatrix(int dim, ParityKind kind = ParityKind::Reversal);
    int dim() const { return dim_; }
    ParityKind kind() const { return kind_; }
    Eigen::VectorXcd apply(const Eigen::VectorXcd& v) const;
    Eigen::MatrixXd dense() const;

private:
    int dim_;
    ParityKind kind_;
};

ParityMatrix parity_matrix(int dim, ParityKind kind = ParityKind::Reversal);

/// max-abs entry of H^dagger P - P H. Exactly 0.0 iff the exact matrix is
/// pseudo-Hermitian for real parameter values; for symbolic nonzero
/// differences the largest difference coefficient is reported.
double pt_residual(const TriMatrix& h);
double pt_residual(const ComplexTri& h);
double pt_residual(const Eigen::MatrixXcd& h, const ParityMatrix& p);

// --- builders ------------------------------------------------------------

/// diag_k = 2 + h^2 V_k, off-diagonals -1.
TriMatrix build_gpm(int n, const std::vector<MultiPoly>& potential, const Rational& h = 1);
/// Shifted form with h^2 V folded in: diag = offset + (-i p1, -i p2, ..., [0], ..., i p2, i p1).
/// Fewer than floor(n/2) values leave the inner diagonal at offset.
TriMatrix build_gpm_folded(int n, const std::vector<MultiPoly>& params, const GaussRat& offset = GaussRat());
/// V(x) = i x^3 on x_j = x0 + h j (j = 1..n); default x0 centres the lattice.
TriMatrix build_gpm_cubic(int n, const Rational& h, std::optional<Rational> x0 = std::nullopt);
/// N = 2 gives the two-level seed; N = 3 is unsupported.
TriMatrix build_bim(int n, const MultiPoly& lambda);
TriMatrix build_nnim(int n, const std::vector<MultiPoly>& couplings, Variant variant = Variant::A);
/// diag (1,3,...,2n-1), couplings g*sqrt(k(n-k)).
TriMatrix build_aom(int n, const MultiPoly& g);
/// Same ladder with g = sqrt(1 - t).
TriMatrix build_aom_time(int n, const MultiPoly& t);
/// Squared couplings listed from the centre pair outward.
TriMatrix build_aom_squared(int n, const std::vector<MultiPoly>& squared);

// --- model specification ---------------------------------------------------

struct Param {
    std::string name;
    std::optional<AlgebraicNumber> value;  // nullopt = free
};

struct Lattice {
    Rational h{1};
    std::optional<Rational> x0;
};

struct CubicPotential {};

struct ModelSpec {
    Family family = Family::GPM;
    int dim = 2;
    Variant variant = Variant::A;
    std::vector<Param> params;
    std::optional<Lattice> lattice;
    std::variant<std::monostate, std::vector<GaussRat>, CubicPotential> potential;
    GaussRat offset;
    std::optional<AomMode> aom_mode;

    void validate() const;
    std::vector<std::string> free_parameters() const;
    ParamMap bound_values() const;
    bool has_param(const std::string& name) const;
    /// Copy with `name` bound (or freed when value is nullopt).
    ModelSpec with(const std::string& name, std::optional<AlgebraicNumber> value) const;
    AomMode resolved_aom_mode() const;
    /// An NNIM spec whose only parameter is named "t" couples every pair
    /// with the same t (the uniform alternating chain); otherwise the
    /// parameters are the couplings from the ends inward.
    bool uniform_nnim() const;
};

/// Symbolic matrix: every parameter (bound or free) is a variable named by
/// the parameter; bound values are applied by the consumers.
TriMatrix build(const ModelSpec& spec);

} // namespace qcat
