#include "qcat/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <memory>
#include <sstream>

#include "CLI11.hpp"

#include "qcat/errors.hpp"
#include "qcat/mep.hpp"
#include "qcat/metric.hpp"
#include "qcat/serialize.hpp"
#include "qcat/spectra.hpp"

namespace qcat {

namespace {

struct Options {
    std::string model;
    std::vector<std::string> set;
    std::string format;
    std::string output;
    double tol = 1e-10;
    // secular
    std::string shift;
    bool even = false;
    // sweep
    std::string lo = "-1", hi = "1";
    int steps = 101;
    int threads = 1;
    // scan
    std::string box = "-2:2,-2:2";
    std::string axes;
    int res = 100;
    // metric
    std::vector<double> kappa;
    int bandwidth = -1;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(cur);
    return out;
}

ModelSpec load(const Options& o) {
    if (o.model.empty()) throw InputError("--model is required");
    ModelSpec spec = load_model(o.model);
    for (const auto& kv : o.set) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) throw InputError("--set expects name=value, got '" + kv + "'");
        std::string name = kv.substr(0, eq);
        if (!spec.has_param(name)) throw InputError("model has no parameter " + name);
        spec = spec.with(name, AlgebraicNumber::parse(kv.substr(eq + 1)));
    }
    spec.validate();
    return spec;
}

std::string format_or(const Options& o, const std::string& fallback, std::initializer_list<const char*> allowed) {
    std::string f = o.format.empty() ? fallback : o.format;
    for (const char* a : allowed)
        if (f == a) return f;
    std::string list;
    for (const char* a : allowed) list += std::string(list.empty() ? "" : ", ") + a;
    throw InputError("format " + f + " is not available here (use " + list + ")");
}

SpectrumOptions spectrum_options(const Options& o) {
    if (!(o.tol > 0)) throw InputError("--tol must be positive");
    SpectrumOptions s;
    s.tol_rel = o.tol;
    return s;
}

std::string cx(std::complex<double> z, int digits = 12) {
    std::ostringstream os;
    os << std::setprecision(digits) << z.real();
    if (z.imag() != 0) os << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
    return os.str();
}

void param_line(const ModelSpec& spec, std::ostream& os) {
    os << to_string(spec.family) << " N=" << spec.dim;
    if (spec.family == Family::NNIM) os << " variant " << (spec.variant == Variant::A ? "A" : "B");
    for (const auto& p : spec.params) os << ", " << p.name << (p.value ? " = " + p.value->str() : " free");
    os << "\n";
}

void cmd_build(const Options& o, std::ostream& os) {
    auto spec = load(o);
    auto f = format_or(o, "pretty", {"pretty", "json"});
    TriMatrix h = build(spec);
    if (f == "json") {
        Json j = to_json(h);
        j["model"] = to_json(spec);
        if (spec.free_parameters().empty()) {
            auto c = h.evaluate(spec.bound_values());
            j["pt_residual"] = pt_residual(c);
        }
        os << j.dump(2) << "\n";
        return;
    }
    param_line(spec, os);
    os << h.str();
}

void cmd_secular(const Options& o, std::ostream& os) {
    auto spec = load(o);
    auto f = format_or(o, "pretty", {"pretty", "json"});
    SecularPoly p = char_poly(build(spec), spec.bound_values());
    if (!o.shift.empty()) p = shift(p, GaussRat::parse(o.shift));
    if (f == "json") {
        Json j = to_json(p);
        if (o.even) j["even_form"] = to_json(to_even_var(p));
        os << j.dump(2) << "\n";
        return;
    }
    // --even only certifies the parity; the polynomial stays in E
    if (o.even) to_even_var(p);
    os << p.str() << "\n";
}

void cmd_spectrum(const Options& o, std::ostream& os) {
    auto spec = load(o);
    auto f = format_or(o, "pretty", {"pretty", "json", "csv"});
    auto r = eigenvalues(spec, spectrum_options(o));
    if (f == "json") {
        os << to_json(r).dump(2) << "\n";
    } else if (f == "csv") {
        os << "re,im\n" << std::setprecision(17);
        for (const auto& z : r.eigenvalues) os << z.real() << "," << z.imag() << "\n";
    } else {
        param_line(spec, os);
        for (const auto& z : r.eigenvalues) os << "  " << cx(z) << "\n";
        os << (r.reality ? "real spectrum" : "complex spectrum") << " (max |Im E| = " << std::setprecision(3)
           << r.max_imag << ")\n";
    }
}

void cmd_sweep(const Options& o, std::ostream& os) {
    auto spec = load(o);
    auto f = format_or(o, "csv", {"csv", "json", "pretty"});
    auto s = sweep(spec, parse_rational(o.lo), parse_rational(o.hi), o.steps, o.threads, 1e-6, spectrum_options(o));
    if (f == "csv") {
        write_sweep_csv(s, os);
        return;
    }
    if (f == "json") {
        Json j;
        j["parameter"] = s.name;
        Json pts = Json::array();
        for (std::size_t k = 0; k < s.path.size(); ++k) {
            Json p = to_json(s.spectra[k]);
            p.erase("params");
            p["value"] = to_string(s.path[k]);
            pts.push_back(p);
        }
        j["points"] = pts;
        Json ev = Json::array();
        for (const auto& e : s.collision_events) ev.push_back({{"value", to_string(e.value)}, {"min_gap", e.min_gap}});
        j["collisions"] = ev;
        os << j.dump(2) << "\n";
        return;
    }
    std::size_t real = 0;
    for (const auto& r : s.spectra) real += r.reality;
    os << s.name << " in [" << o.lo << ", " << o.hi << "], " << s.path.size() << " steps, " << real
       << " with real spectrum\n";
    for (const auto& e : s.collision_events)
        os << "  collision at " << s.name << " = " << to_string(e.value) << " (gap " << std::setprecision(3) << e.min_gap
           << ")\n";
}

void cmd_scan(const Options& o, std::ostream& os) {
    auto spec = load(o);
    auto f = format_or(o, "ppm", {"ppm", "csv", "json"});
    auto ranges = split(o.box, ',');
    if (ranges.size() != 2) throw InputError("--box expects lo:hi,lo:hi");
    std::vector<std::string> names = o.axes.empty() ? spec.free_parameters() : split(o.axes, ',');
    if (names.size() > 2) throw UnsupportedError("scan handles two free parameters; bind the rest with --set");
    // missing axes are dummies
    if (names.empty()) names = {"x", "y"};
    if (names.size() == 1) names.push_back(names[0] == "y" ? "x" : "y");
    Axis ax[2];
    for (int k = 0; k < 2; ++k) {
        auto lh = split(ranges[k], ':');
        if (lh.size() != 2) throw InputError("--box expects lo:hi,lo:hi");
        ax[k] = Axis{names[k], parse_rational(lh[0]), parse_rational(lh[1]), o.res};
    }
    auto scan = domain_scan(spec, ax[0], ax[1], o.threads, spectrum_options(o));
    if (f == "ppm") {
        write_scan_ppm(scan, os);
    } else if (f == "csv") {
        write_scan_csv(scan, os);
    } else {
        Json j;
        j["x"] = {{"name", ax[0].name}, {"lo", to_string(ax[0].lo)}, {"hi", to_string(ax[0].hi)}, {"cells", o.res}};
        j["y"] = {{"name", ax[1].name}, {"lo", to_string(ax[1].lo)}, {"hi", to_string(ax[1].hi)}, {"cells", o.res}};
        std::size_t real = std::count(scan.mask.begin(), scan.mask.end(), 1);
        j["real_cells"] = real;
        Json b = Json::array();
        for (const auto& [ix, iy] : scan.boundary_cells) b.push_back({ix, iy});
        j["boundary_cells"] = b;
        os << j.dump() << "\n";
    }
}

void cmd_mep(const Options& o, std::ostream& os) {
    auto spec = load(o);
    auto f = format_or(o, "pretty", {"pretty", "json"});
    auto sols = solve_mep(spec);
    if (f == "json") {
        Json a = Json::array();
        for (const auto& s : sols) a.push_back(to_json(s));
        os << a.dump(2) << "\n";
        return;
    }
    os << sols.size() << (sols.size() == 1 ? " point" : " points") << " of maximal degeneracy\n";
    for (const auto& s : sols) {
        for (std::size_t k = 0; k < s.names.size(); ++k) {
            os << (k ? "  " : "") << s.names[k] << " = ";
            if (s.exact[k])
                os << to_string(*s.exact[k]);
            else
                os << s.values[k].str(10);
        }
        const auto& d = s.degeneracy;
        os << "  E = " << cx(d.center, 10) << "  residual " << std::setprecision(2) << std::scientific
           << s.max_residual() << "  cluster radius " << d.cluster_radius << std::defaultfloat << "  ranks";
        for (std::size_t k = 0; k < d.jordan_rank_profile.size(); ++k)
            os << (k ? "," : " ") << d.jordan_rank_profile[k];
        os << "\n";
    }
}

Eigen::MatrixXcd numeric_matrix(const ModelSpec& spec, const Options& o) {
    auto r = eigenvalues(spec, spectrum_options(o));
    if (!r.reality) throw SpectrumError("the spectrum is complex; no metric exists");
    return build(spec).evaluate(spec.bound_values()).dense();
}

void cmd_metric(const Options& o, std::ostream& os) {
    auto spec = load(o);
    auto f = format_or(o, "pretty", {"pretty", "json"});
    Eigen::MatrixXcd h = numeric_matrix(spec, o);
    std::optional<MetricCandidate> m;
    if (o.bandwidth >= 0)
        m = banded_metric(h, o.bandwidth);
    else
        m = spectral_metric(h, o.kappa);
    auto dual = dual_eigenbasis(h);
    auto ns = dieudonne_nullspace(h);
    if (f == "json") {
        Json j;
        j["nullspace_dimension"] = ns.size();
        j["dual_eigenbasis"] = to_json(dual);
        j["metric"] = m ? to_json(*m) : Json(nullptr);
        os << j.dump(2) << "\n";
        return;
    }
    param_line(spec, os);
    os << "Hermitian solutions of H^+ Theta = Theta H: " << ns.size() << "-dimensional family\n";
    os << "dual eigenbasis (" << dual.normalization << "), condition " << std::setprecision(4) << dual.condition << "\n";
    for (Eigen::Index j = 0; j < dual.kets.cols(); ++j) {
        os << "  E = " << cx(dual.eigenvalues[j], 10) << ":";
        for (Eigen::Index i = 0; i < dual.kets.rows(); ++i) os << "  " << cx(dual.kets(i, j), 10);
        os << "\n";
    }
    if (!m) {
        os << "no nonzero Hermitian solution of bandwidth " << o.bandwidth << "\n";
        return;
    }
    os << provenance_name(m->provenance, m->bandwidth) << " metric:\n";
    for (Eigen::Index i = 0; i < m->theta.rows(); ++i) {
        os << " ";
        for (Eigen::Index j = 0; j < m->theta.cols(); ++j) os << "  " << std::setw(24) << cx(m->theta(i, j), 8);
        os << "\n";
    }
    os << (m->positivity.positive_definite ? "positive definite" : "not positive definite") << ", eigenvalues in ["
       << std::setprecision(6) << m->positivity.min_eigenvalue << ", " << m->positivity.max_eigenvalue << "]\n";
}

void cmd_robin(const Options& o, std::ostream& os) {
    auto spec = load(o);
    auto f = format_or(o, "pretty", {"pretty", "json"});
    if (spec.family != Family::BIM) throw InputError("robin applies to the bim family");
    auto free = spec.free_parameters();
    if (!free.empty()) throw InputError("parameter " + free[0] + " has no value");
    TriMatrix h = build(spec);
    ParamMap p = spec.bound_values();
    const std::string lambda = spec.params.at(0).name;
    Json rows = Json::array();
    double worst = 0;
    std::ostringstream text;
    text << "E, |(1-E)(-Lap-E)psi_2 - (-l^2 psi_2 + l dpsi)|, |l psi_2 - dpsi|\n";
    for (const auto& e : eigenpairs(h, p)) {
        auto r = robin_identity_check(h, p, lambda, e);
        worst = std::max(worst, r.identity_residual / r.psi_norm);
        rows.push_back({{"energy", complex_text(r.energy)},
                        {"identity_residual", r.identity_residual},
                        {"robin_residual", r.robin_residual}});
        text << "  " << cx(r.energy) << ", " << std::setprecision(2) << std::scientific << r.identity_residual << ", "
             << r.robin_residual << std::defaultfloat << "\n";
    }
    if (f == "json") {
        os << Json{{"pairs", rows}, {"max_relative_identity_residual", worst}}.dump(2) << "\n";
        return;
    }
    param_line(spec, os);
    os << text.str();
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"qcat: exact spectra, degeneracies and metrics of tridiagonal PT-symmetric matrices", "qcat"};
    app.require_subcommand(1, 1);
    Options o;

    auto common = [&](CLI::App* c) {
        c->add_option("--model", o.model, "model JSON, inline or a file path")->required();
        c->add_option("--set", o.set, "bind a parameter, name=value (repeatable)");
        c->add_option("--format", o.format, "output format");
        c->add_option("--output", o.output, "write data to this file instead of stdout");
        c->add_option("--tol", o.tol, "relative reality tolerance");
    };
    auto* build_c = app.add_subcommand("build", "print the matrix");
    auto* secular_c = app.add_subcommand("secular", "exact secular polynomial");
    secular_c->add_option("--shift", o.shift, "substitute E -> E + c");
    secular_c->add_flag("--even", o.even, "require a polynomial even in E (after --shift)");
    auto* spectrum_c = app.add_subcommand("spectrum", "eigenvalues at a parameter point");
    auto* sweep_c = app.add_subcommand("sweep", "spectra along one free parameter");
    sweep_c->add_option("--lo", o.lo, "first value");
    sweep_c->add_option("--hi", o.hi, "last value");
    sweep_c->add_option("--steps", o.steps, "number of points");
    sweep_c->add_option("--threads", o.threads, "worker threads");
    auto* scan_c = app.add_subcommand("scan", "reality domain over two parameters");
    scan_c->add_option("--box", o.box, "lo:hi,lo:hi");
    scan_c->add_option("--axes", o.axes, "x,y parameter names (default: the free parameters)");
    scan_c->add_option("--res", o.res, "cells per axis (>= 16)");
    scan_c->add_option("--threads", o.threads, "worker threads");
    auto* mep_c = app.add_subcommand("mep", "points of maximal degeneracy");
    auto* metric_c = app.add_subcommand("metric", "Hilbert-space metrics");
    metric_c->add_option("--kappa", o.kappa, "positive spectral weights")->delimiter(',');
    metric_c->add_option("--bandwidth", o.bandwidth, "banded ansatz (0 = diagonal)");
    auto* robin_c = app.add_subcommand("robin", "edge-row identity on bim eigenvectors");
    for (auto* c : {build_c, secular_c, spectrum_c, sweep_c, scan_c, mep_c, metric_c, robin_c}) common(c);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    try {
        std::unique_ptr<std::ofstream> file;
        std::ostream* os = &out;
        if (!o.output.empty()) {
            file = std::make_unique<std::ofstream>(o.output, std::ios::binary);
            if (!*file) throw InputError("cannot write " + o.output);
            os = file.get();
        }
        if (!o.format.empty() && o.format == "ppm" && !scan_c->parsed())
            throw InputError("ppm output is only available for scan");
        if (build_c->parsed()) cmd_build(o, *os);
        if (secular_c->parsed()) cmd_secular(o, *os);
        if (spectrum_c->parsed()) cmd_spectrum(o, *os);
        if (sweep_c->parsed()) cmd_sweep(o, *os);
        if (scan_c->parsed()) cmd_scan(o, *os);
        if (mep_c->parsed()) cmd_mep(o, *os);
        if (metric_c->parsed()) cmd_metric(o, *os);
        if (robin_c->parsed()) cmd_robin(o, *os);
        os->flush();
    } catch (const InputError& e) {
        err << "qcat: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        err << "qcat: bad model JSON: " << e.what() << "\n";
        return 2;
    } catch (const ComputationError& e) {
        err << "qcat: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "qcat: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

} // namespace qcat
