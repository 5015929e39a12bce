#include "qcat/serialize.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "qcat/errors.hpp"

namespace qcat {

namespace {

std::string scalar_text(const Json& v, const std::string& what) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    if (v.is_number_float()) return v.dump();
    throw InputError(what + ": expected a string or number");
}

Rational rational_field(const Json& v, const std::string& what) {
    return parse_rational(scalar_text(v, what));
}

GaussRat gauss_field(const Json& v, const std::string& what) {
    return GaussRat::parse(scalar_text(v, what));
}

} // namespace

ModelSpec model_from_json(const Json& j) {
    if (!j.is_object()) throw InputError("model: expected a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        static const char* known[] = {"family", "dim", "variant", "params", "lattice", "potential", "offset", "mode"};
        if (std::find(std::begin(known), std::end(known), it.key()) == std::end(known))
            throw InputError("model: unknown field '" + it.key() + "'");
    }
    ModelSpec s;
    if (!j.contains("family") || !j["family"].is_string()) throw InputError("model: missing 'family'");
    s.family = parse_family(j["family"].get<std::string>());
    if (!j.contains("dim") || !j["dim"].is_number_integer()) throw InputError("model: missing integer 'dim'");
    s.dim = j["dim"].get<int>();
    if (j.contains("variant")) {
        std::string v = scalar_text(j["variant"], "variant");
        if (v == "A" || v == "a") s.variant = Variant::A;
        else if (v == "B" || v == "b") s.variant = Variant::B;
        else throw InputError("model: variant must be A or B");
    }
    if (j.contains("params")) {
        if (!j["params"].is_object()) throw InputError("model: 'params' must be an object");
        for (auto it = j["params"].begin(); it != j["params"].end(); ++it) {
            Param p{it.key(), std::nullopt};
            if (!it.value().is_null()) p.value = AlgebraicNumber::parse(scalar_text(it.value(), it.key()));
            s.params.push_back(std::move(p));
        }
    }
    if (j.contains("lattice")) {
        const Json& l = j["lattice"];
        if (!l.is_object()) throw InputError("model: 'lattice' must be an object");
        Lattice lat;
        if (l.contains("h")) lat.h = rational_field(l["h"], "lattice.h");
        if (l.contains("x0")) lat.x0 = rational_field(l["x0"], "lattice.x0");
        s.lattice = lat;
    }
    if (j.contains("potential")) {
        const Json& p = j["potential"];
        if (p.is_string()) {
            if (p.get<std::string>() != "ix3") throw InputError("model: unknown potential '" + p.get<std::string>() + "'");
            s.potential = CubicPotential{};
        } else if (p.is_array()) {
            std::vector<GaussRat> v;
            for (const auto& x : p) v.push_back(gauss_field(x, "potential"));
            s.potential = std::move(v);
        } else {
            throw InputError("model: 'potential' must be an array or \"ix3\"");
        }
    }
    if (j.contains("offset")) s.offset = gauss_field(j["offset"], "offset");
    if (j.contains("mode")) {
        std::string m = scalar_text(j["mode"], "mode");
        if (m == "g" || m == "coupling") s.aom_mode = AomMode::Coupling;
        else if (m == "t" || m == "time") s.aom_mode = AomMode::Time;
        else if (m == "squared") s.aom_mode = AomMode::Squared;
        else throw InputError("model: unknown AOM mode '" + m + "'");
    }
    s.validate();
    return s;
}

Json to_json(const ModelSpec& s) {
    Json j;
    j["family"] = to_string(s.family);
    j["dim"] = s.dim;
    if (s.family == Family::NNIM) j["variant"] = s.variant == Variant::A ? "A" : "B";
    Json params = Json::object();
    for (const auto& p : s.params) params[p.name] = p.value ? Json(p.value->str()) : Json(nullptr);
    j["params"] = params;
    if (s.lattice) {
        Json l;
        l["h"] = to_string(s.lattice->h);
        if (s.lattice->x0) l["x0"] = to_string(*s.lattice->x0);
        j["lattice"] = l;
    }
    if (std::holds_alternative<CubicPotential>(s.potential)) {
        j["potential"] = "ix3";
    } else if (std::holds_alternative<std::vector<GaussRat>>(s.potential)) {
        Json a = Json::array();
        for (const auto& z : std::get<std::vector<GaussRat>>(s.potential)) a.push_back(z.str());
        j["potential"] = a;
    }
    if (!s.offset.is_zero()) j["offset"] = s.offset.str();
    if (s.aom_mode) {
        switch (*s.aom_mode) {
        case AomMode::Coupling: j["mode"] = "g"; break;
        case AomMode::Time: j["mode"] = "t"; break;
        case AomMode::Squared: j["mode"] = "squared"; break;
        }
    }
    return j;
}

ModelSpec load_model(const std::string& text_or_path) {
    std::string text = text_or_path;
    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos || text[first] != '{') {
        std::ifstream in(text_or_path);
        if (!in) throw InputError("cannot open model file: " + text_or_path);
        std::ostringstream os;
        os << in.rdbuf();
        text = os.str();
    }
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("model JSON: ") + e.what());
    }
    return model_from_json(j);
}

namespace {

Json complex_list(const std::vector<std::complex<double>>& z) {
    Json a = Json::array();
    for (const auto& x : z) a.push_back(complex_text(x));
    return a;
}

Json matrix_json(const Eigen::MatrixXcd& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_text(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

} // namespace

std::string complex_text(std::complex<double> z) {
    std::ostringstream os;
    os << std::setprecision(17) << z.real() << std::showpos << z.imag() << "i";
    return os.str();
}

Json to_json(const TriMatrix& h) {
    Json j;
    j["family"] = to_string(h.family());
    j["dim"] = h.dim();
    j["matrix"] = h.str();
    return j;
}

Json to_json(const SecularPoly& p) {
    Json j;
    j["variable"] = p.var;
    j["shift"] = p.shift.str();
    j["degree"] = p.degree();
    Json c = Json::array();
    for (const auto& m : p.coeffs) c.push_back(m.str());
    j["coefficients"] = c;
    j["polynomial"] = p.str();
    return j;
}

Json to_json(const SpectrumResult& r) {
    Json j;
    Json params = Json::object();
    for (const auto& [k, v] : r.params) params[k] = v.str();
    j["params"] = params;
    j["eigenvalues"] = complex_list(r.eigenvalues);
    j["real"] = r.reality;
    j["max_imag"] = r.max_imag;
    j["diameter"] = r.diameter;
    return j;
}

Json to_json(const MepSolution& s) {
    Json j;
    Json values = Json::object(), exact = Json::object(), res = Json::object();
    for (std::size_t k = 0; k < s.names.size(); ++k) {
        values[s.names[k]] = s.values[k].str(20);
        exact[s.names[k]] = s.exact[k] ? Json(to_string(*s.exact[k])) : Json(nullptr);
        res[s.names[k]] = s.residuals.size() > k ? s.residuals[k] : 0.0;
    }
    j["values"] = values;
    j["exact"] = exact;
    j["max_residual"] = s.max_residual();
    const auto& d = s.degeneracy;
    Json g;
    g["center"] = complex_text(d.center);
    g["cluster_radius"] = d.cluster_radius;
    g["oracle_radius"] = d.oracle_radius;
    g["matrix_norm"] = d.matrix_norm;
    g["jordan_rank_profile"] = d.jordan_rank_profile;
    j["degeneracy"] = g;
    return j;
}

Json to_json(const MetricCandidate& m) {
    Json j;
    j["provenance"] = provenance_name(m.provenance, m.bandwidth);
    if (m.provenance == Provenance::Spectral) j["kappa"] = m.weights;
    if (m.provenance == Provenance::NullspaceCombination) j["coefficients"] = m.weights;
    if (m.provenance == Provenance::BandedAnsatz) j["bandwidth"] = m.bandwidth;
    j["theta"] = matrix_json(m.theta);
    Json p;
    p["positive_definite"] = m.positivity.positive_definite;
    p["min_eigenvalue"] = m.positivity.min_eigenvalue;
    p["max_eigenvalue"] = m.positivity.max_eigenvalue;
    p["cholesky"] = m.positivity.cholesky_ok;
    j["positivity"] = p;
    j["dieudonne_residual"] = m.dieudonne_residual;
    return j;
}

Json to_json(const EigenbasisDual& d) {
    Json j;
    j["eigenvalues"] = complex_list(d.eigenvalues);
    j["normalization"] = d.normalization;
    j["condition"] = d.condition;
    Json kets = Json::array();
    for (Eigen::Index c = 0; c < d.kets.cols(); ++c) {
        std::vector<std::complex<double>> v(d.kets.col(c).data(), d.kets.col(c).data() + d.kets.rows());
        kets.push_back(complex_list(v));
    }
    j["kets"] = kets;
    return j;
}

} // namespace qcat
