#include "qcat/model_zoo.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qcat/errors.hpp"

namespace qcat {

namespace {

MultiPoly gauss(const GaussRat& z) { return MultiPoly(z); }

int ceil_half(int n) { return n / 2 + n % 2; }

std::complex<double> value_of(const MultiPoly& p, const ParamMap& params) {
    return p.evaluate(params).to_complex();
}

std::complex<double> value_of(const Surd& s, const ParamMap& params) {
    auto c = value_of(s.coef, params);
    if (s.is_plain()) return c;
    return c * std::sqrt(value_of(s.radicand, params));
}

double difference_size(const MultiPoly& a, const MultiPoly& b) {
    return (a - b).max_abs_coefficient();
}

double difference_size(const Surd& a, const Surd& b) {
    if (a.radicand == b.radicand) return difference_size(a.coef, b.coef);
    return std::max({1.0, a.coef.max_abs_coefficient(), b.coef.max_abs_coefficient()});
}

} // namespace

std::string to_string(Family f) {
    switch (f) {
    case Family::GPM: return "gpm";
    case Family::BIM: return "bim";
    case Family::NNIM: return "nnim";
    case Family::AOM: return "aom";
    }
    return "?";
}

Family parse_family(const std::string& s) {
    std::string l = s;
    std::transform(l.begin(), l.end(), l.begin(), [](unsigned char c) { return std::tolower(c); });
    if (l == "gpm") return Family::GPM;
    if (l == "bim") return Family::BIM;
    if (l == "nnim") return Family::NNIM;
    if (l == "aom") return Family::AOM;
    throw InputError("unknown family: " + s);
}

Surd::Surd(MultiPoly c, MultiPoly r) : coef(std::move(c)), radicand(std::move(r)) {
    if (radicand.is_zero()) coef = MultiPoly();
    if (coef.is_zero()) radicand = MultiPoly(1);
}

std::string Surd::str() const {
    if (is_plain()) return coef.str();
    std::string c = coef.str();
    std::string r = "sqrt(" + radicand.str() + ")";
    if (c == "1") return r;
    if (c == "-1") return "-" + r;
    return "(" + c + ")*" + r;
}

// --- TriMatrix ---------------------------------------------------------------

TriMatrix::TriMatrix(Family family, ParityKind parity, std::vector<MultiPoly> diag,
                     std::vector<Surd> sub, std::vector<Surd> sup)
    : family_(family), parity_(parity), diag_(std::move(diag)), sub_(std::move(sub)), sup_(std::move(sup)) {
    if (diag_.empty()) throw InputError("matrix dimension must be positive");
    if (sub_.size() + 1 != diag_.size() || sup_.size() + 1 != diag_.size())
        throw InputError("tridiagonal length mismatch");
}

MultiPoly TriMatrix::coupling_product(int k) const {
    const Surd& a = sub_.at(k);
    const Surd& b = sup_.at(k);
    if (a.coef.is_zero() || b.coef.is_zero()) return {};
    if (a.radicand == b.radicand) return a.coef * b.coef * a.radicand;
    if (a.is_plain() || b.is_plain())
        throw ComputationError("coupling product needs matching radicands at pair " + std::to_string(k));
    throw ComputationError("mixed radicands at pair " + std::to_string(k));
}

MultiPoly TriMatrix::trace() const {
    MultiPoly t;
    for (const auto& d : diag_) t += d;
    return t;
}

std::vector<std::string> TriMatrix::variables() const {
    std::vector<std::string> v;
    for (const auto& d : diag_) v = merge_variables(v, d.variables());
    for (const auto* side : {&sub_, &sup_})
        for (const auto& s : *side) {
            v = merge_variables(v, s.coef.variables());
            v = merge_variables(v, s.radicand.variables());
        }
    return v;
}

TriMatrix TriMatrix::with_sub(int k, Surd s) const {
    TriMatrix m = *this;
    m.sub_.at(k) = std::move(s);
    return m;
}

TriMatrix TriMatrix::with_sup(int k, Surd s) const {
    TriMatrix m = *this;
    m.sup_.at(k) = std::move(s);
    return m;
}

ComplexTri TriMatrix::evaluate(const ParamMap& params) const {
    ComplexTri c;
    c.family = family_;
    c.parity = parity_;
    for (const auto& d : diag_) c.diag.push_back(value_of(d, params));
    for (const auto& s : sub_) c.sub.push_back(value_of(s, params));
    for (const auto& s : sup_) c.sup.push_back(value_of(s, params));
    return c;
}

std::string TriMatrix::str() const {
    const int n = dim();
    std::vector<std::vector<std::string>> cells(n, std::vector<std::string>(n, "0"));
    std::size_t width = 1;
    for (int k = 0; k < n; ++k) {
        cells[k][k] = diag_[k].str();
        if (k + 1 < n) {
            cells[k][k + 1] = sup_[k].str();
            cells[k + 1][k] = sub_[k].str();
        }
    }
    for (const auto& row : cells)
        for (const auto& c : row) width = std::max(width, c.size());
    std::ostringstream os;
    for (const auto& row : cells) {
        os << "[";
        for (int j = 0; j < n; ++j) {
            if (j) os << "  ";
            os << std::string(width - row[j].size(), ' ') << row[j];
        }
        os << "]\n";
    }
    return os.str();
}

Eigen::MatrixXcd ComplexTri::dense() const {
    const int n = dim();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (int k = 0; k < n; ++k) {
        m(k, k) = diag[k];
        if (k + 1 < n) {
            m(k, k + 1) = sup[k];
            m(k + 1, k) = sub[k];
        }
    }
    return m;
}

// --- parity ------------------------------------------------------------------

ParityMatrix::ParityMatrix(int dim, ParityKind kind) : dim_(dim), kind_(kind) {
    if (dim < 1) throw InputError("parity dimension must be positive");
}

Eigen::VectorXcd ParityMatrix::apply(const Eigen::VectorXcd& v) const {
    if (v.size() != dim_) throw InputError("parity dimension mismatch");
    Eigen::VectorXcd out(dim_);
    for (int k = 0; k < dim_; ++k) {
        if (kind_ == ParityKind::Reversal) out(k) = v(dim_ - 1 - k);
        else out(k) = (k % 2 ? -1.0 : 1.0) * v(k);
    }
    return out;
}

Eigen::MatrixXd ParityMatrix::dense() const {
    Eigen::MatrixXd p = Eigen::MatrixXd::Zero(dim_, dim_);
    for (int k = 0; k < dim_; ++k) {
        if (kind_ == ParityKind::Reversal) p(k, dim_ - 1 - k) = 1;
        else p(k, k) = k % 2 ? -1 : 1;
    }
    return p;
}

ParityMatrix parity_matrix(int dim, ParityKind kind) { return ParityMatrix(dim, kind); }

double pt_residual(const TriMatrix& h) {
    const int n = h.dim();
    double r = 0;
    if (h.parity() == ParityKind::Reversal) {
        for (int k = 0; k < n; ++k) r = std::max(r, difference_size(h.diag()[k], h.diag()[n - 1 - k].conj()));
        for (int k = 0; k + 1 < n; ++k) {
            r = std::max(r, difference_size(h.sup()[k], h.sup()[n - 2 - k].conj()));
            r = std::max(r, difference_size(h.sub()[k], h.sub()[n - 2 - k].conj()));
        }
    } else {
        for (int k = 0; k < n; ++k) r = std::max(r, h.diag()[k].imag_part().max_abs_coefficient());
        for (int k = 0; k + 1 < n; ++k) {
            Surd flipped{-h.sub()[k].coef.conj(), h.sub()[k].radicand};
            r = std::max(r, difference_size(h.sup()[k], flipped));
        }
    }
    return r;
}

double pt_residual(const Eigen::MatrixXcd& h, const ParityMatrix& p) {
    if (h.rows() != h.cols() || h.rows() != p.dim()) throw InputError("pt_residual: dimension mismatch");
    Eigen::MatrixXcd pd = p.dense().cast<std::complex<double>>();
    Eigen::MatrixXcd d = h.adjoint() * pd - pd * h;
    return d.cwiseAbs().maxCoeff();
}

double pt_residual(const ComplexTri& h) {
    return pt_residual(h.dense(), ParityMatrix(h.dim(), h.parity));
}

// --- builders ----------------------------------------------------------------

TriMatrix build_gpm(int n, const std::vector<MultiPoly>& potential, const Rational& h) {
    if (n < 2) throw InputError("GPM needs N >= 2");
    if (static_cast<int>(potential.size()) != n)
        throw InputError("GPM potential table has " + std::to_string(potential.size()) +
                         " values, expected " + std::to_string(n));
    if (sgn(h) <= 0) throw InputError("lattice spacing must be positive");
    std::vector<MultiPoly> diag;
    for (const auto& v : potential) diag.push_back(MultiPoly(2) + v.scaled(GaussRat(Rational(h * h))));
    return TriMatrix(Family::GPM, ParityKind::Reversal, std::move(diag),
                     std::vector<Surd>(n - 1, Surd(MultiPoly(-1))), std::vector<Surd>(n - 1, Surd(MultiPoly(-1))));
}

TriMatrix build_gpm_folded(int n, const std::vector<MultiPoly>& params, const GaussRat& offset) {
    if (n < 2) throw InputError("GPM needs N >= 2");
    if (static_cast<int>(params.size()) > n / 2)
        throw InputError("GPM with N=" + std::to_string(n) + " takes at most " + std::to_string(n / 2) +
                         " parameters");
    std::vector<MultiPoly> diag(n, gauss(offset));
    const MultiPoly i = gauss(GaussRat::i());
    for (std::size_t k = 0; k < params.size(); ++k) {
        diag[k] = diag[k] - i * params[k];
        diag[n - 1 - k] = diag[n - 1 - k] + i * params[k];
    }
    return TriMatrix(Family::GPM, ParityKind::Reversal, std::move(diag),
                     std::vector<Surd>(n - 1, Surd(MultiPoly(-1))), std::vector<Surd>(n - 1, Surd(MultiPoly(-1))));
}

TriMatrix build_gpm_cubic(int n, const Rational& h, std::optional<Rational> x0) {
    if (sgn(h) <= 0) throw InputError("lattice spacing must be positive");
    Rational origin = x0 ? *x0 : Rational(-h * (n + 1) / 2);
    std::vector<MultiPoly> v;
    for (int j = 1; j <= n; ++j) {
        Rational x = origin + h * j;
        v.push_back(MultiPoly(GaussRat(Rational(0), x * x * x)));
    }
    return build_gpm(n, v, h);
}

TriMatrix build_bim(int n, const MultiPoly& lambda) {
    if (n == 2) {
        // the two-level seed: couplings -1 + lambda above, -1 - lambda below
        return TriMatrix(Family::BIM, ParityKind::Reversal, {MultiPoly(2), MultiPoly(2)},
                         {Surd(MultiPoly(-1) - lambda)}, {Surd(MultiPoly(-1) + lambda)});
    }
    if (n < 4) throw UnsupportedError("BIM needs N = 2 or N >= 4 (the edge partitions need two rows each)");
    std::vector<Surd> sub(n - 1, Surd(MultiPoly(-1))), sup(n - 1, Surd(MultiPoly(-1)));
    sup[0] = Surd(MultiPoly(-1) - lambda);
    sub[0] = Surd(MultiPoly(-1) + lambda);
    sup[n - 2] = Surd(MultiPoly(-1) - lambda);
    sub[n - 2] = Surd(MultiPoly(-1) + lambda);
    return TriMatrix(Family::BIM, ParityKind::Reversal, std::vector<MultiPoly>(n, MultiPoly(2)), std::move(sub),
                     std::move(sup));
}

TriMatrix build_nnim(int n, const std::vector<MultiPoly>& couplings, Variant variant) {
    if (n < 2) throw InputError("NNIM needs N >= 2");
    const int pairs = ceil_half(n - 1);
    if (static_cast<int>(couplings.size()) > pairs)
        throw InputError("NNIM with N=" + std::to_string(n) + " takes at most " + std::to_string(pairs) +
                         " couplings");
    std::vector<Surd> sub(n - 1), sup(n - 1);
    for (int k = 1; k <= n - 1; ++k) {
        const int j = std::min(k, n - k);
        MultiPoly c = j - 1 < static_cast<int>(couplings.size()) ? couplings[j - 1] : MultiPoly();
        const bool mirrored = k > n - k;
        if (variant == Variant::B && k == n - k && !c.is_zero())
            throw InputError("variant B forces the central coupling to vanish for even N");
        MultiPoly up = j % 2 ? MultiPoly(-1) - c : MultiPoly(-1) + c;
        MultiPoly down = j % 2 ? MultiPoly(-1) + c : MultiPoly(-1) - c;
        if (variant == Variant::B && mirrored) std::swap(up, down);
        sup[k - 1] = Surd(up);
        sub[k - 1] = Surd(down);
    }
    return TriMatrix(Family::NNIM, ParityKind::Reversal, std::vector<MultiPoly>(n, MultiPoly(2)), std::move(sub),
                     std::move(sup));
}

namespace {

TriMatrix aom_ladder(int n, const std::vector<Surd>& c) {
    std::vector<MultiPoly> diag;
    for (int k = 0; k < n; ++k) diag.push_back(MultiPoly(2 * k + 1));
    std::vector<Surd> sub, sup;
    for (const auto& s : c) {
        sup.push_back(s);
        sub.push_back(Surd(-s.coef, s.radicand));
    }
    return TriMatrix(Family::AOM, ParityKind::Alternating, std::move(diag), std::move(sub), std::move(sup));
}

} // namespace

TriMatrix build_aom(int n, const MultiPoly& g) {
    if (n < 2) throw InputError("AOM needs N >= 2");
    std::vector<Surd> c;
    for (int k = 1; k < n; ++k) c.emplace_back(g, MultiPoly(k * (n - k)));
    return aom_ladder(n, c);
}

TriMatrix build_aom_time(int n, const MultiPoly& t) {
    if (n < 2) throw InputError("AOM needs N >= 2");
    std::vector<Surd> c;
    for (int k = 1; k < n; ++k) c.emplace_back(MultiPoly(1), (MultiPoly(1) - t) * MultiPoly(k * (n - k)));
    return aom_ladder(n, c);
}

TriMatrix build_aom_squared(int n, const std::vector<MultiPoly>& squared) {
    if (n < 2) throw InputError("AOM needs N >= 2");
    const int pairs = ceil_half(n - 1);
    if (static_cast<int>(squared.size()) != pairs)
        throw InputError("AOM with N=" + std::to_string(n) + " takes " + std::to_string(pairs) +
                         " squared couplings");
    for (const auto& q : squared)
        if (q.is_constant() && (!q.constant_term().is_real() || sgn(q.constant_term().re()) < 0))
            throw InputError("squared coupling must be a nonnegative real: " + q.str());
    std::vector<Surd> c;
    for (int k = 1; k < n; ++k) {
        const int idx = pairs - std::min(k, n - k);
        c.emplace_back(MultiPoly(1), squared[idx]);
    }
    return aom_ladder(n, c);
}

// --- ModelSpec ---------------------------------------------------------------

bool ModelSpec::uniform_nnim() const {
    return family == Family::NNIM && params.size() == 1 && params[0].name == "t";
}

AomMode ModelSpec::resolved_aom_mode() const {
    if (aom_mode) return *aom_mode;
    if (params.size() == 1 && params[0].name == "g") return AomMode::Coupling;
    if (params.size() == 1 && params[0].name == "t") return AomMode::Time;
    return AomMode::Squared;
}

void ModelSpec::validate() const {
    if (dim < 2) throw InputError("dim must be >= 2");
    for (std::size_t a = 0; a < params.size(); ++a) {
        if (params[a].name.empty()) throw InputError("empty parameter name");
        for (std::size_t b = a + 1; b < params.size(); ++b)
            if (params[a].name == params[b].name) throw InputError("duplicate parameter " + params[a].name);
    }
    if (family != Family::GPM && (lattice || potential.index() != 0))
        throw InputError("lattice and potential apply to GPM only");
    if (family != Family::AOM && aom_mode) throw InputError("mode applies to AOM only");
    const int np = static_cast<int>(params.size());
    switch (family) {
    case Family::GPM:
        if (std::holds_alternative<std::vector<GaussRat>>(potential)) {
            if (static_cast<int>(std::get<std::vector<GaussRat>>(potential).size()) != dim)
                throw InputError("potential table length must equal dim");
            if (np) throw InputError("a tabulated GPM potential takes no parameters");
        } else if (std::holds_alternative<CubicPotential>(potential)) {
            if (np) throw InputError("the ix^3 GPM potential takes no parameters");
        } else if (np > dim / 2) {
            throw InputError("GPM with dim " + std::to_string(dim) + " takes at most " + std::to_string(dim / 2) +
                             " parameters");
        }
        if (lattice && sgn(lattice->h) <= 0) throw InputError("lattice h must be positive");
        break;
    case Family::BIM:
        if (dim != 2 && dim < 4) throw UnsupportedError("BIM needs dim 2 or dim >= 4");
        if (np != 1) throw InputError("BIM takes exactly one parameter");
        break;
    case Family::NNIM:
        if (np > ceil_half(dim - 1))
            throw InputError("NNIM with dim " + std::to_string(dim) + " takes at most " +
                             std::to_string(ceil_half(dim - 1)) + " couplings");
        break;
    case Family::AOM:
        switch (resolved_aom_mode()) {
        case AomMode::Coupling:
        case AomMode::Time:
            if (np != 1) throw InputError("AOM coupling/time mode takes one parameter");
            break;
        case AomMode::Squared:
            if (np != ceil_half(dim - 1))
                throw InputError("AOM squared mode with dim " + std::to_string(dim) + " takes " +
                                 std::to_string(ceil_half(dim - 1)) + " parameters");
            for (const auto& p : params)
                if (p.value) {
                    if (!p.value->is_gauss_rational()) throw InputError("squared coupling must be rational");
                    GaussRat v = p.value->gauss_value();
                    if (!v.is_real() || sgn(v.re()) < 0)
                        throw InputError("squared coupling " + p.name + " must be nonnegative");
                }
            break;
        }
        break;
    }
}

std::vector<std::string> ModelSpec::free_parameters() const {
    std::vector<std::string> out;
    for (const auto& p : params)
        if (!p.value) out.push_back(p.name);
    return out;
}

ParamMap ModelSpec::bound_values() const {
    ParamMap out;
    for (const auto& p : params)
        if (p.value) out[p.name] = *p.value;
    return out;
}

bool ModelSpec::has_param(const std::string& name) const {
    return std::any_of(params.begin(), params.end(), [&](const Param& p) { return p.name == name; });
}

ModelSpec ModelSpec::with(const std::string& name, std::optional<AlgebraicNumber> value) const {
    ModelSpec s = *this;
    for (auto& p : s.params)
        if (p.name == name) {
            p.value = std::move(value);
            return s;
        }
    s.params.push_back({name, std::move(value)});
    return s;
}

TriMatrix build(const ModelSpec& spec) {
    spec.validate();
    std::vector<MultiPoly> vars;
    for (const auto& p : spec.params) vars.push_back(MultiPoly::variable(p.name));
    const int n = spec.dim;
    switch (spec.family) {
    case Family::GPM: {
        Rational h = spec.lattice ? spec.lattice->h : Rational(1);
        if (std::holds_alternative<CubicPotential>(spec.potential))
            return build_gpm_cubic(n, h, spec.lattice ? spec.lattice->x0 : std::nullopt);
        if (std::holds_alternative<std::vector<GaussRat>>(spec.potential)) {
            std::vector<MultiPoly> v;
            for (const auto& z : std::get<std::vector<GaussRat>>(spec.potential)) v.emplace_back(z);
            return build_gpm(n, v, h);
        }
        return build_gpm_folded(n, vars, spec.offset);
    }
    case Family::BIM: return build_bim(n, vars.at(0));
    case Family::NNIM:
        if (spec.uniform_nnim()) return build_nnim(n, std::vector<MultiPoly>(ceil_half(n - 1), vars[0]), spec.variant);
        return build_nnim(n, vars, spec.variant);
    case Family::AOM:
        switch (spec.resolved_aom_mode()) {
        case AomMode::Coupling: return build_aom(n, vars.at(0));
        case AomMode::Time: return build_aom_time(n, vars.at(0));
        case AomMode::Squared: return build_aom_squared(n, vars);
        }
    }
    throw InputError("unknown family");
}

} // namespace qcat
