#pragma once

#include <string>

#include "json.hpp"

#include "qcat/mep.hpp"
#include "qcat/metric.hpp"
#include "qcat/model_zoo.hpp"
#include "qcat/secular.hpp"
#include "qcat/spectra.hpp"

namespace qcat {

using Json = nlohmann::ordered_json;

/// {"family":"nnim","dim":10,"variant":"A","params":{"t":"1/2"}}
/// Parameter values are strings ("p/q", "p/q+r/s i", "sqrt(2)", "3/4*sqrt(2)"),
/// integers, or null for a free parameter. GPM also accepts "potential"
/// (array of values or "ix3"), "lattice" {"h","x0"} and "offset"; AOM accepts
/// "mode" ("g", "t" or "squared").
ModelSpec model_from_json(const Json& j);
Json to_json(const ModelSpec& spec);
/// Inline JSON text, or a path to a file holding it.
ModelSpec load_model(const std::string& text_or_path);

/// "re+imi" with 17 significant digits per part.
std::string complex_text(std::complex<double> z);

Json to_json(const TriMatrix& h);
/// Coefficients ascending, as exact polynomial strings.
Json to_json(const SecularPoly& p);
Json to_json(const SpectrumResult& r);
/// Values at 20 significant digits, exact rationals where recovered.
Json to_json(const MepSolution& s);
Json to_json(const MetricCandidate& m);
Json to_json(const EigenbasisDual& d);

} // namespace qcat
