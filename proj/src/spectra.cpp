#include "qcat/spectra.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

#include <Eigen/Eigenvalues>

#include "qcat/errors.hpp"
#include "qcat/mep.hpp"
#include "qcat/roots.hpp"

namespace qcat {

namespace {

using cd = std::complex<double>;

bool by_re_im(const cd& a, const cd& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

double min_pair_distance(const std::vector<cd>& z) {
    double m = INFINITY;
    for (std::size_t i = 0; i < z.size(); ++i)
        for (std::size_t j = i + 1; j < z.size(); ++j) m = std::min(m, std::abs(z[i] - z[j]));
    return m;
}

template <class T>
std::vector<cd> to_doubles(const std::vector<Cx<T>>& z) {
    std::vector<cd> out;
    for (const auto& x : z) out.push_back(x.to_complex());
    return out;
}

[[noreturn]] void not_converged(const std::vector<cd>& partial, int sweeps) {
    std::ostringstream os;
    os << "Aberth iteration did not converge after " << sweeps << " sweeps; partial roots:";
    for (const auto& z : partial) os << " (" << z.real() << "," << z.imag() << ")";
    throw NumericalError(os.str());
}

// Roots of one exact squarefree factor.
std::vector<cd> factor_roots(const GaussPoly& f, int max_sweeps) {
    if (f.degree() == 1) {
        GaussRat r = -f.coeff(0) / f.coeff(1);
        return {r.to_complex()};
    }
    // double iterates as the starting point, then polish in 113 bits
    std::vector<Cx<double>> ad;
    std::vector<Cx<Quad>> a, warm;
    for (const auto& c : f.coeffs()) {
        a.push_back(to_cx<Quad>(c));
        ad.push_back(to_cx<double>(c));
    }
    for (const auto& z : aberth<double>(ad, max_sweeps).roots) warm.emplace_back(Quad(z.re), Quad(z.im));
    auto res = aberth<Quad>(a, max_sweeps, &warm);
    std::vector<cd> roots = to_doubles(res.roots);
    double scale = 1;
    for (const auto& z : roots) scale = std::max(scale, std::abs(z));
    if (!res.converged || min_pair_distance(roots) < 1e-6 * scale) {
        // close roots: continue in 70-digit arithmetic from the current iterates
        std::vector<Cx<MpReal>> am, start;
        for (const auto& c : f.coeffs()) am.push_back(to_cx<MpReal>(c));
        for (const auto& z : res.roots) start.emplace_back(MpReal(z.re), MpReal(z.im));
        auto mp = aberth<MpReal>(am, max_sweeps, &start);
        if (!mp.converged) not_converged(to_doubles(mp.roots), mp.sweeps);
        roots = to_doubles(mp.roots);
    }
    bool real = std::all_of(f.coeffs().begin(), f.coeffs().end(), [](const GaussRat& z) { return z.is_real(); });
    if (real) {
        std::vector<Rational> rc;
        for (const auto& c : f.coeffs()) rc.push_back(c.re());
        int nreal = real_root_count(RatPoly(rc));
        std::vector<std::size_t> order(roots.size());
        for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t i, std::size_t j) { return std::abs(roots[i].imag()) < std::abs(roots[j].imag()); });
        for (int k = 0; k < nreal; ++k) roots[order[k]].imag(0.0);
    }
    return roots;
}

// Fast path for simple, well-separated roots: double Aberth, two Newton
// steps in 113 bits. A root of a real polynomial closer to the axis than half
// the minimal gap is real, since its conjugate would be a closer root
// (a quarter is used for margin).
bool separated_roots(const std::vector<GaussRat>& g, int max_sweeps, std::vector<cd>& out) {
    std::vector<Cx<double>> ad;
    std::vector<Cx<Quad>> a;
    for (const auto& c : g) {
        ad.push_back(to_cx<double>(c));
        a.push_back(to_cx<Quad>(c));
    }
    auto res = aberth<double>(ad, max_sweeps);
    if (!res.converged) return false;
    std::vector<cd> roots = to_doubles(res.roots);
    double scale = 1;
    for (const auto& z : roots) scale = std::max(scale, std::abs(z));
    const double gap = min_pair_distance(roots);
    if (!(gap > 1e-6 * scale)) return false;
    for (auto& z : roots) {
        Cx<Quad> x(Quad(z.real()), Quad(z.imag())), p, dp;
        Quad bound;
        double moved = 0;
        for (int it = 0; it < 2; ++it) {
            detail::horner2(a, x, p, dp, bound);
            if (dp.abs() == 0) return false;
            Cx<Quad> step = p / dp;
            moved += static_cast<double>(step.abs());
            x -= step;
        }
        if (moved > gap / 8) return false;
        z = x.to_complex();
    }
    if (std::all_of(g.begin(), g.end(), [](const GaussRat& c) { return c.is_real(); }))
        for (auto& z : roots)
            if (std::abs(z.imag()) < gap / 4) z.imag(0.0);
    out.insert(out.end(), roots.begin(), roots.end());
    return true;
}

SpectrumResult finish(std::vector<cd> ev, const GaussRat& shift, const ParamMap& params, const SpectrumOptions& opts) {
    const cd c = shift.to_complex();
    for (auto& z : ev) z += c;
    std::sort(ev.begin(), ev.end(), by_re_im);
    SpectrumResult r;
    r.params = params;
    for (const auto& z : ev) r.max_imag = std::max(r.max_imag, std::abs(z.imag()));
    for (std::size_t i = 0; i < ev.size(); ++i)
        for (std::size_t j = i + 1; j < ev.size(); ++j) r.diameter = std::max(r.diameter, std::abs(ev[i] - ev[j]));
    r.reality = r.max_imag <= std::max(opts.tol_rel * r.diameter, opts.tol_abs);
    r.eigenvalues = std::move(ev);
    return r;
}

// `p` is centred (p.shift applied) and may still contain parameters bound in `params`.
SpectrumResult spectrum_of(const SecularPoly& p, const ParamMap& params, const SpectrumOptions& opts) {
    auto coeffs = specialize(p, params);
    while (coeffs.size() > 1 && coeffs.back().is_zero()) coeffs.pop_back();
    bool gaussian = std::all_of(coeffs.begin(), coeffs.end(), [](const AlgebraicNumber& a) { return a.is_gauss_rational(); });
    std::vector<cd> ev;
    if (gaussian) {
        std::vector<GaussRat> g;
        for (const auto& a : coeffs) g.push_back(a.gauss_value());
        if (!separated_roots(g, opts.max_sweeps, ev))
            for (const auto& [f, m] : GaussPoly(g).squarefree_decomposition()) {
                auto r = factor_roots(f, opts.max_sweeps);
                for (int k = 0; k < m; ++k) ev.insert(ev.end(), r.begin(), r.end());
            }
    } else {
        std::vector<Cx<MpReal>> a;
        for (const auto& c : coeffs) a.push_back(to_cx<MpReal>(c));
        auto res = aberth<MpReal>(a, opts.max_sweeps);
        if (!res.converged) not_converged(to_doubles(res.roots), res.sweeps);
        ev = to_doubles(res.roots);
    }
    return finish(std::move(ev), p.shift, params, opts);
}

GaussRat centre_of(const TriMatrix& h, const ParamMap& params) {
    std::map<std::string, MultiPoly> subst;
    for (const auto& [name, v] : params)
        if (v.is_gauss_rational()) subst[name] = MultiPoly(v.gauss_value());
    MultiPoly t = h.trace().substitute(subst);
    if (!t.is_constant()) return GaussRat();
    return t.constant_term() / GaussRat(h.dim());
}

void check_bound(const TriMatrix& h, const ParamMap& params) {
    for (const auto& v : h.variables())
        if (!params.count(v)) throw InputError("parameter " + v + " is not bound");
}

template <class Work>
void parallel_for(int count, int threads, Work work) {
    threads = std::max(1, std::min(threads, count));
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_lock;
    auto run = [&] {
        for (int i; (i = next.fetch_add(1)) < count;) {
            try {
                work(i);
            } catch (...) {
                std::lock_guard<std::mutex> g(error_lock);
                if (!error) error = std::current_exception();
                next = count;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(run);
    run();
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

std::string decimal(const Rational& q) {
    std::ostringstream os;
    os << std::setprecision(12) << to_double(q);
    return os.str();
}

} // namespace

SpectrumResult eigenvalues(const TriMatrix& h, const ParamMap& params, const SpectrumOptions& opts) {
    check_bound(h, params);
    GaussRat c = centre_of(h, params);
    SecularPoly p = char_poly(h, params);
    if (!c.is_zero()) p = shift(p, c);
    return spectrum_of(p, params, opts);
}

SpectrumResult eigenvalues(const ModelSpec& spec, const SpectrumOptions& opts) {
    auto free = spec.free_parameters();
    if (!free.empty()) throw InputError("parameter " + free[0] + " has no value");
    return eigenvalues(build(spec), spec.bound_values(), opts);
}

std::vector<std::complex<double>> dense_eigenvalues(const ComplexTri& h) {
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(h.dense(), false);
    if (es.info() != Eigen::Success) throw NumericalError("dense eigensolver failed");
    std::vector<cd> ev(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    std::sort(ev.begin(), ev.end(), by_re_im);
    return ev;
}

std::vector<Eigenpair> eigenpairs(const TriMatrix& h, const ParamMap& params) {
    auto spec = eigenvalues(h, params);
    Eigen::MatrixXcd m = h.evaluate(params).dense();
    const int n = h.dim();
    const double norm = m.cwiseAbs().rowwise().sum().maxCoeff();
    std::vector<Eigenpair> out;
    for (std::size_t k = 0; k < spec.eigenvalues.size(); ++k) {
        cd e = spec.eigenvalues[k];
        // slightly perturbed shift keeps the factorization finite
        cd sigma = e + cd(1e-13 * std::max(1.0, norm), 0);
        Eigen::PartialPivLU<Eigen::MatrixXcd> lu(m - sigma * Eigen::MatrixXcd::Identity(n, n));
        Eigen::VectorXcd v(n);
        for (int i = 0; i < n; ++i) v(i) = cd(1.0 + 0.1 * i, 0.01 * static_cast<double>(k));
        v.normalize();
        for (int it = 0; it < 3; ++it) {
            v = lu.solve(v);
            v.normalize();
        }
        out.push_back({e, v});
    }
    return out;
}

// --- scans and sweeps ------------------------------------------------------------------

Rational Axis::center(int i) const { return lo + (hi - lo) * fraction(2 * i + 1, 2 * cells); }

DomainScan domain_scan(const ModelSpec& spec, const Axis& x, const Axis& y, int threads, const SpectrumOptions& opts) {
    if (x.name == y.name) throw InputError("scan axes must differ");
    if (x.cells < 16 || y.cells < 16) throw InputError("scan resolution must be at least 16 per axis");
    if (!(x.lo < x.hi) || !(y.lo < y.hi)) throw InputError("scan box bounds must satisfy lo < hi");
    auto free = spec.free_parameters();
    for (const auto& f : free)
        if (f != x.name && f != y.name)
            throw UnsupportedError("free parameter " + f + " is not a scan axis; fix it with a value");
    const TriMatrix h = build(spec);
    const ParamMap bound = spec.bound_values();
    GaussRat c = centre_of(h, bound);
    SecularPoly p = char_poly(h, bound);
    if (!c.is_zero()) p = shift(p, c);
    const bool use_x = spec.has_param(x.name), use_y = spec.has_param(y.name);

    DomainScan scan{x, y, std::vector<std::uint8_t>(static_cast<std::size_t>(x.cells) * y.cells, 0), {}};
    parallel_for(y.cells, threads, [&](int iy) {
        ParamMap at = bound;
        if (use_y) at[y.name] = AlgebraicNumber(y.center(iy));
        for (int ix = 0; ix < x.cells; ++ix) {
            if (use_x) at[x.name] = AlgebraicNumber(x.center(ix));
            scan.mask[static_cast<std::size_t>(iy) * x.cells + ix] = spectrum_of(p, at, opts).reality ? 1 : 0;
        }
    });
    for (int iy = 0; iy < y.cells; ++iy)
        for (int ix = 0; ix < x.cells; ++ix) {
            bool v = scan.real_at(ix, iy);
            bool edge = (ix > 0 && scan.real_at(ix - 1, iy) != v) || (ix + 1 < x.cells && scan.real_at(ix + 1, iy) != v) ||
                        (iy > 0 && scan.real_at(ix, iy - 1) != v) || (iy + 1 < y.cells && scan.real_at(ix, iy + 1) != v);
            if (edge) scan.boundary_cells.emplace_back(ix, iy);
        }
    return scan;
}

void write_scan_csv(const DomainScan& scan, std::ostream& os) {
    os << scan.x.name << "," << scan.y.name << ",real\n";
    for (int iy = 0; iy < scan.y.cells; ++iy) {
        std::string yv = decimal(scan.y.center(iy));
        for (int ix = 0; ix < scan.x.cells; ++ix)
            os << decimal(scan.x.center(ix)) << "," << yv << "," << (scan.real_at(ix, iy) ? 1 : 0) << "\n";
    }
}

void write_scan_ppm(const DomainScan& scan, std::ostream& os) {
    os << "P5\n" << scan.x.cells << " " << scan.y.cells << "\n255\n";
    for (int iy = scan.y.cells - 1; iy >= 0; --iy)
        for (int ix = 0; ix < scan.x.cells; ++ix) os.put(static_cast<char>(scan.real_at(ix, iy) ? 0 : 255));
}

SweepResult sweep(const ModelSpec& spec, const Rational& lo, const Rational& hi, int steps, int threads,
                  double gap_threshold, const SpectrumOptions& opts) {
    auto free = spec.free_parameters();
    if (free.size() != 1) throw InputError("sweep needs exactly one free parameter");
    if (steps < 2) throw InputError("sweep needs at least two steps");
    if (!(lo < hi)) throw InputError("sweep bounds must satisfy lo < hi");
    const TriMatrix h = build(spec);
    const ParamMap bound = spec.bound_values();
    GaussRat c = centre_of(h, bound);
    SecularPoly p = char_poly(h, bound);
    if (!c.is_zero()) p = shift(p, c);

    SweepResult s;
    s.name = free[0];
    for (int k = 0; k < steps; ++k) s.path.push_back(lo + (hi - lo) * fraction(k, steps - 1));
    s.spectra.resize(steps);
    parallel_for(steps, threads, [&](int k) {
        ParamMap at = bound;
        at[s.name] = AlgebraicNumber(s.path[k]);
        s.spectra[k] = spectrum_of(p, at, opts);
    });
    for (int k = 0; k < steps; ++k) {
        const auto& ev = s.spectra[k].eigenvalues;
        double gap = min_pair_distance(ev);
        if (gap < gap_threshold) s.collision_events.push_back({static_cast<std::size_t>(k), s.path[k], gap});
    }
    return s;
}

void write_sweep_csv(const SweepResult& s, std::ostream& os) {
    const std::size_t n = s.spectra.empty() ? 0 : s.spectra[0].eigenvalues.size();
    os << s.name;
    for (std::size_t k = 1; k <= n; ++k) os << ",re_" << k;
    for (std::size_t k = 1; k <= n; ++k) os << ",im_" << k;
    os << "\n" << std::setprecision(15);
    for (std::size_t i = 0; i < s.path.size(); ++i) {
        os << to_double(s.path[i]);
        for (const auto& z : s.spectra[i].eigenvalues) os << "," << z.real();
        for (const auto& z : s.spectra[i].eigenvalues) os << "," << z.imag();
        os << "\n";
    }
}

RobinCheck robin_identity_check(const TriMatrix& h, const ParamMap& params, const std::string& lambda,
                                const Eigenpair& pair) {
    if (h.family() != Family::BIM) throw InputError("the Robin check applies to boundary-interaction matrices");
    if (h.dim() < 6) throw InputError("the Robin check needs N >= 6");
    auto it = params.find(lambda);
    if (it == params.end()) throw InputError("parameter " + lambda + " is not bound");
    const cd l = it->second.to_complex();
    const auto& psi = pair.vector;
    if (psi.size() != h.dim()) throw InputError("eigenvector length mismatch");
    const cd e = pair.value;
    RobinCheck r;
    r.energy = e;
    r.delta_psi = psi(0) - psi(1);
    cd lap = -psi(0) + 2.0 * psi(1) - psi(2);
    cd lhs = (1.0 - e) * (lap - e * psi(1));
    cd rhs = -l * l * psi(1) + l * r.delta_psi;
    r.identity_residual = std::abs(lhs - rhs);
    r.robin_residual = std::abs(l * psi(1) - r.delta_psi);
    r.psi_norm = psi.norm();
    return r;
}

} // namespace qcat
