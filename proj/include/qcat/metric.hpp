#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qcat/model_zoo.hpp"

namespace qcat {

struct PositivityReport {
    bool positive_definite = false;
    double min_eigenvalue = 0;
    double max_eigenvalue = 0;
    /// LLT succeeded; cross-checked against the eigenvalues.
    bool cholesky_ok = false;
};

PositivityReport positivity(const Eigen::MatrixXcd& theta);

enum class Provenance { NullspaceCombination, Spectral, BandedAnsatz };
/// "nullspace-combination", "spectral", "diagonal-ansatz" (bandwidth 0) or
/// "banded-ansatz".
std::string provenance_name(Provenance p, int bandwidth = 0);

struct MetricCandidate {
    Eigen::MatrixXcd theta;
    Provenance provenance = Provenance::Spectral;
    /// Coefficients over the nullspace basis, or the kappa weights.
    std::vector<double> weights;
    int bandwidth = -1;
    PositivityReport positivity;
    /// ||H^+ Theta - Theta H||_F / (||H||_F ||Theta||_F)
    double dieudonne_residual = 0;
};

struct EigenbasisDual {
    Eigen::MatrixXcd kets;  // columns are eigenvectors of H^+
    std::vector<std::complex<double>> eigenvalues;  // of H, ascending real part; column j belongs to conj(E_j)
    std::string normalization;
    double condition = 0;  // 2-norm condition number of the unit-column basis
};

/// Checks the dense spectrum of `h`: real (tolerance rule of the spectra
/// module) and simple. SpectrumError otherwise.
std::vector<std::complex<double>> require_real_simple_spectrum(const Eigen::MatrixXcd& h);

/// Frobenius-orthonormal real basis of the Hermitian solutions of
/// H^+ Theta = Theta H.
std::vector<Eigen::MatrixXcd> dieudonne_nullspace(const Eigen::MatrixXcd& h);

EigenbasisDual dual_eigenbasis(const Eigen::MatrixXcd& h);

/// Sum_j kappa_j Xi_j Xi_j^+ over unit-norm dual kets; not rescaled, so it
/// is linear in kappa.
MetricCandidate spectral_metric(const Eigen::MatrixXcd& h, const std::vector<double>& kappa = {});

/// Combination of a nullspace basis, unit Frobenius norm, positive trace.
MetricCandidate combine_nullspace(const Eigen::MatrixXcd& h, const std::vector<Eigen::MatrixXcd>& basis,
                                  const std::vector<double>& coefficients);

/// Hermitian solutions with Theta_ij = 0 for |i - j| > bandwidth. Absent when
/// only zero solves it, AmbiguityError when the solution space is larger
/// than one-dimensional; otherwise unit Frobenius norm, positive trace.
std::optional<MetricCandidate> banded_metric(const Eigen::MatrixXcd& h, int bandwidth);

double dieudonne_residual(const Eigen::MatrixXcd& h, const Eigen::MatrixXcd& theta);

/// For PD theta = Omega^+ Omega: ||X - X^+||_F / ||X||_F with
/// X = Omega H Omega^{-1}.
double quasi_hermiticity_defect(const Eigen::MatrixXcd& h, const Eigen::MatrixXcd& theta);

/// Coefficients of theta over an orthonormal Hermitian basis and the
/// relative Frobenius error of the reconstruction.
std::pair<std::vector<double>, double> project_onto(const Eigen::MatrixXcd& theta,
                                                    const std::vector<Eigen::MatrixXcd>& basis);

} // namespace qcat
