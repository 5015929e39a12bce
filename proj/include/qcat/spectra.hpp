#pragma once

#include <complex>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qcat/model_zoo.hpp"
#include "qcat/secular.hpp"

namespace qcat {

struct SpectrumOptions {
    double tol_rel = 1e-10;
    double tol_abs = 1e-12;
    int max_sweeps = 500;
};

struct SpectrumResult {
    std::vector<std::complex<double>> eigenvalues;  // sorted by (re, im)
    bool reality = false;
    double max_imag = 0;
    double diameter = 0;
    ParamMap params;
};

/// Roots of the exact secular polynomial (squarefree factors over Q(i),
/// Aberth-Ehrlich in 113-bit precision, 70 digits near clusters); real
/// roots are fixed exactly by a Sturm count on real factors.
SpectrumResult eigenvalues(const TriMatrix& h, const ParamMap& params, const SpectrumOptions& opts = {});
SpectrumResult eigenvalues(const ModelSpec& spec, const SpectrumOptions& opts = {});

/// Independent oracle: dense double eigensolve, sorted by (re, im).
std::vector<std::complex<double>> dense_eigenvalues(const ComplexTri& h);

struct Eigenpair {
    std::complex<double> value;
    Eigen::VectorXcd vector;  // unit 2-norm
};
/// Eigenvalues from `eigenvalues`, eigenvectors by inverse iteration on the
/// dense matrix.
std::vector<Eigenpair> eigenpairs(const TriMatrix& h, const ParamMap& params);

struct Axis {
    std::string name;
    Rational lo, hi;
    int cells = 16;
    /// Centre of cell i.
    Rational center(int i) const;
};

struct DomainScan {
    Axis x, y;
    std::vector<std::uint8_t> mask;  // row-major, index iy * x.cells + ix; 1 = real spectrum
    std::vector<std::pair<int, int>> boundary_cells;  // (ix, iy)

    bool real_at(int ix, int iy) const { return mask[static_cast<std::size_t>(iy) * x.cells + ix] != 0; }
};

/// Two axes; every free parameter of `spec` must be one of them, an axis
/// that names no model parameter is a dummy.
DomainScan domain_scan(const ModelSpec& spec, const Axis& x, const Axis& y, int threads = 1,
                       const SpectrumOptions& opts = {});
/// Columns x, y, real (1/0); rows ordered by iy then ix.
void write_scan_csv(const DomainScan& scan, std::ostream& os);
/// Binary P5, width x.cells, first row = largest y; 0 (black) = real.
void write_scan_ppm(const DomainScan& scan, std::ostream& os);

struct CollisionEvent {
    std::size_t index;
    Rational value;
    double min_gap;
};

struct SweepResult {
    std::string name;
    std::vector<Rational> path;
    std::vector<SpectrumResult> spectra;
    std::vector<CollisionEvent> collision_events;
};

SweepResult sweep(const ModelSpec& spec, const Rational& lo, const Rational& hi, int steps, int threads = 1,
                  double gap_threshold = 1e-6, const SpectrumOptions& opts = {});
/// Columns t, re_1..re_N, im_1..im_N (named after the swept parameter).
void write_sweep_csv(const SweepResult& s, std::ostream& os);

struct RobinCheck {
    std::complex<double> energy;
    std::complex<double> delta_psi;  // psi_1 - psi_2
    /// |(1-E)(-Lap - E) psi_2 - (-lambda^2 psi_2 + lambda delta_psi)|
    double identity_residual = 0;
    /// |lambda psi_2 - delta_psi|, the discrete Robin defect
    double robin_residual = 0;
    double psi_norm = 0;
};

/// Edge rows of a boundary-interaction matrix (N >= 6); `lambda` is the
/// coupling value.
RobinCheck robin_identity_check(const TriMatrix& h, const ParamMap& params, const std::string& lambda,
                                const Eigenpair& pair);

} // namespace qcat
