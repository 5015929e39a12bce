#include "qcat/metric.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "qcat/errors.hpp"

namespace qcat {

namespace {

using cd = std::complex<double>;
using Eigen::MatrixXcd;
using Eigen::MatrixXd;

// Frobenius-orthonormal real basis of Hermitian N x N matrices, restricted to
// |i - j| <= band: E_ii, (E_ij + E_ji)/sqrt2, i(E_ij - E_ji)/sqrt2.
std::vector<MatrixXcd> hermitian_basis(int n, int band) {
    const double r = 1 / std::sqrt(2.0);
    std::vector<MatrixXcd> out;
    for (int i = 0; i < n; ++i) {
        MatrixXcd e = MatrixXcd::Zero(n, n);
        e(i, i) = 1;
        out.push_back(e);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n && j - i <= band; ++j) {
            MatrixXcd s = MatrixXcd::Zero(n, n), a = MatrixXcd::Zero(n, n);
            s(i, j) = s(j, i) = r;
            a(i, j) = cd(0, r);
            a(j, i) = cd(0, -r);
            out.push_back(s);
            out.push_back(a);
        }
    return out;
}

MatrixXd dieudonne_system(const MatrixXcd& h, const std::vector<MatrixXcd>& basis) {
    const int n = static_cast<int>(h.rows());
    MatrixXd a(2 * n * n, basis.size());
    const MatrixXcd ha = h.adjoint();
    for (std::size_t m = 0; m < basis.size(); ++m) {
        MatrixXcd l = ha * basis[m] - basis[m] * h;
        for (int k = 0; k < n * n; ++k) {
            a(2 * k, m) = l(k % n, k / n).real();
            a(2 * k + 1, m) = l(k % n, k / n).imag();
        }
    }
    return a;
}

// Coordinate vectors of the null space, columns.
MatrixXd null_coordinates(const MatrixXd& a) {
    Eigen::BDCSVD<MatrixXd> svd(a, Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    const double threshold = 1e-10 * (s.size() ? s(0) : 0.0);
    int rank = 0;
    for (int k = 0; k < s.size(); ++k)
        if (s(k) > threshold) ++rank;
    return svd.matrixV().rightCols(a.cols() - rank);
}

MatrixXcd assemble(const std::vector<MatrixXcd>& basis, const Eigen::VectorXd& x) {
    MatrixXcd t = MatrixXcd::Zero(basis[0].rows(), basis[0].cols());
    for (std::size_t m = 0; m < basis.size(); ++m) t += x(m) * basis[m];
    return t;
}

MatrixXcd normalized(MatrixXcd t) {
    t /= t.norm();
    if (t.trace().real() < 0) t = -t;
    return t;
}

MetricCandidate candidate(const MatrixXcd& h, MatrixXcd theta, Provenance p, std::vector<double> weights, int band) {
    MetricCandidate c;
    // clean rounding asymmetry
    c.theta = (theta + theta.adjoint()) / 2.0;
    c.provenance = p;
    c.weights = std::move(weights);
    c.bandwidth = band;
    c.positivity = positivity(c.theta);
    c.dieudonne_residual = dieudonne_residual(h, c.theta);
    return c;
}

} // namespace

PositivityReport positivity(const MatrixXcd& theta) {
    PositivityReport r;
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(theta, Eigen::EigenvaluesOnly);
    r.min_eigenvalue = es.eigenvalues().minCoeff();
    r.max_eigenvalue = es.eigenvalues().maxCoeff();
    Eigen::LLT<MatrixXcd> llt(theta);
    r.cholesky_ok = llt.info() == Eigen::Success;
    r.positive_definite = r.max_eigenvalue > 0 && r.min_eigenvalue > 1e-12 * r.max_eigenvalue && r.cholesky_ok;
    return r;
}

std::string provenance_name(Provenance p, int bandwidth) {
    switch (p) {
    case Provenance::NullspaceCombination: return "nullspace-combination";
    case Provenance::Spectral: return "spectral";
    case Provenance::BandedAnsatz: return bandwidth == 0 ? "diagonal-ansatz" : "banded-ansatz";
    }
    return "";
}

std::vector<cd> require_real_simple_spectrum(const MatrixXcd& h) {
    Eigen::ComplexEigenSolver<MatrixXcd> es(h, false);
    if (es.info() != Eigen::Success) throw NumericalError("dense eigensolver failed");
    std::vector<cd> ev(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    double max_imag = 0, diam = 0, gap = INFINITY;
    for (std::size_t i = 0; i < ev.size(); ++i) {
        max_imag = std::max(max_imag, std::abs(ev[i].imag()));
        for (std::size_t j = i + 1; j < ev.size(); ++j) {
            diam = std::max(diam, std::abs(ev[i] - ev[j]));
            gap = std::min(gap, std::abs(ev[i] - ev[j]));
        }
    }
    if (max_imag > std::max(1e-10 * diam, 1e-12)) throw SpectrumError("the spectrum is not real");
    if (gap < 1e-8 * std::max(1.0, diam)) throw SpectrumError("the spectrum is degenerate");
    std::sort(ev.begin(), ev.end(), [](cd a, cd b) { return a.real() < b.real(); });
    return ev;
}

std::vector<MatrixXcd> dieudonne_nullspace(const MatrixXcd& h) {
    require_real_simple_spectrum(h);
    const int n = static_cast<int>(h.rows());
    auto basis = hermitian_basis(n, n);
    MatrixXd z = null_coordinates(dieudonne_system(h, basis));
    std::vector<MatrixXcd> out;
    for (int k = 0; k < z.cols(); ++k) out.push_back(assemble(basis, z.col(k)));
    return out;
}

EigenbasisDual dual_eigenbasis(const MatrixXcd& h) {
    auto ev = require_real_simple_spectrum(h);
    Eigen::ComplexEigenSolver<MatrixXcd> es(h.adjoint());
    const int n = static_cast<int>(h.rows());
    EigenbasisDual d;
    d.kets.resize(n, n);
    d.eigenvalues = ev;
    d.normalization = "component 2 = 1";
    MatrixXcd unit(n, n);
    for (int j = 0; j < n; ++j) {
        // the eigenvalue of H^+ nearest to conj(E_j)
        Eigen::Index best = 0;
        (es.eigenvalues().array() - std::conj(ev[j])).abs().minCoeff(&best);
        Eigen::VectorXcd v = es.eigenvectors().col(best);
        unit.col(j) = v.normalized();
        if (n >= 2 && std::abs(v(1)) > 1e-12 * v.norm()) {
            v /= v(1);
        } else {
            v.normalize();
            d.normalization = "component 2 = 1 where nonzero, else unit norm";
        }
        d.kets.col(j) = v;
    }
    Eigen::JacobiSVD<MatrixXcd> svd(unit);
    const auto& s = svd.singularValues();
    d.condition = s(n - 1) > 0 ? s(0) / s(n - 1) : INFINITY;
    if (!(d.condition <= 1e10))
        throw ConditioningError("dual eigenbasis condition number " + std::to_string(d.condition) + " exceeds 1e10");
    return d;
}

MetricCandidate spectral_metric(const MatrixXcd& h, const std::vector<double>& kappa_in) {
    const int n = static_cast<int>(h.rows());
    std::vector<double> kappa = kappa_in.empty() ? std::vector<double>(n, 1.0) : kappa_in;
    if (static_cast<int>(kappa.size()) != n) throw InputError("kappa needs " + std::to_string(n) + " weights");
    for (double k : kappa)
        if (!(k > 0)) throw InputError("kappa weights must be positive");
    // unit kets, so that a Hermitian H with kappa = 1 gives the identity
    auto d = dual_eigenbasis(h);
    MatrixXcd theta = MatrixXcd::Zero(n, n);
    for (int j = 0; j < n; ++j) {
        Eigen::VectorXcd v = d.kets.col(j).normalized();
        theta += kappa[j] * v * v.adjoint();
    }
    return candidate(h, theta, Provenance::Spectral, kappa, -1);
}

MetricCandidate combine_nullspace(const MatrixXcd& h, const std::vector<MatrixXcd>& basis,
                                  const std::vector<double>& coefficients) {
    if (basis.empty() || coefficients.size() != basis.size())
        throw InputError("need one coefficient per nullspace basis element");
    MatrixXcd t = MatrixXcd::Zero(h.rows(), h.cols());
    for (std::size_t k = 0; k < basis.size(); ++k) t += coefficients[k] * basis[k];
    if (t.norm() == 0) throw InputError("the combination vanishes");
    return candidate(h, normalized(t), Provenance::NullspaceCombination, coefficients, -1);
}

std::optional<MetricCandidate> banded_metric(const MatrixXcd& h, int bandwidth) {
    if (bandwidth < 0) throw InputError("bandwidth must be nonnegative");
    const int n = static_cast<int>(h.rows());
    auto basis = hermitian_basis(n, bandwidth);
    MatrixXd z = null_coordinates(dieudonne_system(h, basis));
    if (z.cols() == 0) return std::nullopt;
    if (z.cols() > 1)
        throw AmbiguityError("banded solutions form a " + std::to_string(z.cols()) +
                             "-dimensional family; pick a combination of the nullspace instead");
    return candidate(h, normalized(assemble(basis, z.col(0))), Provenance::BandedAnsatz, {}, bandwidth);
}

double dieudonne_residual(const MatrixXcd& h, const MatrixXcd& theta) {
    double scale = h.norm() * theta.norm();
    return scale > 0 ? (h.adjoint() * theta - theta * h).norm() / scale : 0.0;
}

double quasi_hermiticity_defect(const MatrixXcd& h, const MatrixXcd& theta) {
    Eigen::LLT<MatrixXcd> llt(theta);
    if (llt.info() != Eigen::Success) throw InputError("metric is not positive definite");
    // theta = L L^+, Omega = L^+
    MatrixXcd omega = llt.matrixU();
    MatrixXcd x = omega * h * omega.inverse();
    return (x - x.adjoint()).norm() / x.norm();
}

std::pair<std::vector<double>, double> project_onto(const MatrixXcd& theta, const std::vector<MatrixXcd>& basis) {
    std::vector<double> c;
    MatrixXcd rebuilt = MatrixXcd::Zero(theta.rows(), theta.cols());
    for (const auto& b : basis) {
        double x = (b.adjoint() * theta).trace().real();
        c.push_back(x);
        rebuilt += x * b;
    }
    return {c, (theta - rebuilt).norm() / theta.norm()};
}

} // namespace qcat
