#include "qcat/mep.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "qcat/errors.hpp"

namespace qcat {

namespace {

using std::abs;
using MpCx = Cx<MpReal>;
using MpMatrix = std::vector<std::vector<MpCx>>;

// --- univariate helpers -----------------------------------------------------------

int sign_at(const RatPoly& p, const Rational& x) { return sgn(p(x)); }

std::vector<RatPoly> sturm_chain(const RatPoly& q) {
    std::vector<RatPoly> chain{q, q.derivative()};
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        RatPoly r = -(chain[chain.size() - 2] % chain.back());
        if (r.is_zero()) break;
        chain.push_back(std::move(r));
    }
    if (chain.back().is_zero()) chain.pop_back();
    return chain;
}

int variations(const std::vector<int>& signs) {
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

int variations_at(const std::vector<RatPoly>& chain, const Rational& x) {
    std::vector<int> s;
    for (const auto& p : chain) s.push_back(sign_at(p, x));
    return variations(s);
}

int variations_at_infinity(const std::vector<RatPoly>& chain, bool positive) {
    std::vector<int> s;
    for (const auto& p : chain) {
        int lead = sgn(p.leading());
        if (!positive && p.degree() % 2) lead = -lead;
        s.push_back(lead);
    }
    return variations(s);
}

Rational cauchy_bound(const RatPoly& monic) {
    Rational m = 0;
    for (int k = 0; k < monic.degree(); ++k) m = std::max(m, Rational(abs(monic.coeff(k))));
    return m + 1;
}

std::vector<MpReal> mp_coeffs(const RatPoly& q) {
    std::vector<MpReal> c;
    for (const auto& x : q.coeffs()) c.push_back(rational_to<MpReal>(x));
    return c;
}

std::pair<MpReal, MpReal> horner_with_derivative(const std::vector<MpReal>& c, const MpReal& x) {
    MpReal f = 0, d = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        d = d * x + f;
        f = f * x + *it;
    }
    return {f, d};
}

// --- dense high-precision linear algebra ----------------------------------------------

MpReal max_abs(const MpMatrix& a) {
    MpReal m = 0;
    for (const auto& row : a)
        for (const auto& z : row) m = std::max(m, z.abs());
    return m;
}

int rank_of(MpMatrix a, const MpReal& tol) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    int rank = 0;
    for (int k = 0; k < std::min(rows, cols); ++k) {
        int pr = -1, pc = -1;
        MpReal best = tol;
        for (int i = k; i < rows; ++i)
            for (int j = k; j < cols; ++j) {
                MpReal m = a[i][j].abs();
                if (m > best) {
                    best = m;
                    pr = i;
                    pc = j;
                }
            }
        if (pr < 0) break;
        std::swap(a[k], a[pr]);
        for (auto& row : a) std::swap(row[k], row[pc]);
        for (int i = k + 1; i < rows; ++i) {
            MpCx f = a[i][k] / a[k][k];
            for (int j = k; j < cols; ++j) a[i][j] -= f * a[k][j];
        }
        ++rank;
    }
    return rank;
}

MpMatrix multiply(const MpMatrix& a, const MpMatrix& b) {
    const std::size_t n = a.size();
    MpMatrix c(n, std::vector<MpCx>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k].re == 0 && a[i][k].im == 0) continue;
            for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

// Solves the square real system a x = b by partial pivoting; false when singular.
bool solve_real(std::vector<std::vector<MpReal>> a, std::vector<MpReal> b, std::vector<MpReal>& x) {
    const std::size_t n = b.size();
    MpReal scale = 0;
    for (const auto& row : a)
        for (const auto& v : row) scale = std::max(scale, MpReal(abs(v)));
    if (scale == 0) return false;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (abs(a[i][k]) > abs(a[p][k])) p = i;
        if (abs(a[p][k]) <= scale * MpReal("1e-50")) return false;
        std::swap(a[k], a[p]);
        std::swap(b[k], b[p]);
        for (std::size_t i = k + 1; i < n; ++i) {
            MpReal f = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
            b[i] -= f * b[k];
        }
    }
    x.assign(n, MpReal(0));
    for (std::size_t k = n; k-- > 0;) {
        MpReal s = b[k];
        for (std::size_t j = k + 1; j < n; ++j) s -= a[k][j] * x[j];
        x[k] = s / a[k][k];
    }
    return true;
}

// --- system helpers ----------------------------------------------------------------------

struct CompiledSystem {
    std::vector<std::string> names;
    std::vector<CompiledPoly<MpReal>> f;
    std::vector<std::vector<CompiledPoly<MpReal>>> jac;

    CompiledSystem(const std::vector<MultiPoly>& eqs, const std::vector<std::string>& vars) : names(vars) {
        for (const auto& e : eqs) {
            f.emplace_back(e, names);
            std::vector<CompiledPoly<MpReal>> row;
            for (const auto& v : names) row.emplace_back(e.derivative(v), names);
            jac.push_back(std::move(row));
        }
    }

    std::vector<MpCx> point(const std::vector<MpReal>& x) const {
        std::vector<MpCx> p;
        for (const auto& v : x) p.emplace_back(v);
        return p;
    }

    std::vector<MpReal> residuals(const std::vector<MpReal>& x) const {
        auto p = point(x);
        std::vector<MpReal> r;
        for (const auto& e : f) r.push_back(e(p).abs());
        return r;
    }
};

MpReal poly_scale(const MultiPoly& e, const std::vector<std::string>& names, const std::vector<MpReal>& x) {
    MpReal s = 0;
    for (const auto& [exp, c] : e.terms()) {
        MpReal m = rational_to<MpReal>(Rational(abs(c.re()) + abs(c.im())));
        for (std::size_t k = 0; k < exp.size(); ++k) {
            auto pos = std::find(names.begin(), names.end(), e.variables()[k]) - names.begin();
            m *= pow(abs(x[pos]), static_cast<int>(exp[k]));
        }
        s += m;
    }
    return s;
}

bool satisfies(const std::vector<MultiPoly>& eqs, const std::vector<std::string>& names,
               const std::vector<MpReal>& x, const MpReal& rel) {
    CompiledSystem sys(eqs, names);
    auto r = sys.residuals(x);
    for (std::size_t k = 0; k < eqs.size(); ++k)
        if (r[k] > rel * std::max(MpReal(1), poly_scale(eqs[k], names, x))) return false;
    return true;
}

// Gauss-Newton on an (over)determined real system; keeps the best iterate.
std::vector<MpReal> polish(const std::vector<MultiPoly>& eqs, const std::vector<std::string>& names,
                           std::vector<MpReal> x, int iterations = 40) {
    if (names.empty() || eqs.empty()) return x;
    CompiledSystem sys(eqs, names);
    auto norm = [&](const std::vector<MpReal>& v) {
        MpReal s = 0;
        for (const auto& r : sys.residuals(v)) s = std::max(s, r);
        return s;
    };
    MpReal best = norm(x);
    const std::size_t n = names.size();
    for (int it = 0; it < iterations && best > MpReal("1e-65"); ++it) {
        auto p = sys.point(x);
        std::vector<MpReal> r;
        std::vector<std::vector<MpReal>> j;
        for (std::size_t e = 0; e < eqs.size(); ++e) {
            r.push_back(sys.f[e](p).re);
            std::vector<MpReal> row;
            for (std::size_t v = 0; v < n; ++v) row.push_back(sys.jac[e][v](p).re);
            j.push_back(std::move(row));
        }
        std::vector<std::vector<MpReal>> a(n, std::vector<MpReal>(n, MpReal(0)));
        std::vector<MpReal> b(n, MpReal(0));
        for (std::size_t e = 0; e < eqs.size(); ++e)
            for (std::size_t u = 0; u < n; ++u) {
                b[u] += j[e][u] * r[e];
                for (std::size_t v = 0; v < n; ++v) a[u][v] += j[e][u] * j[e][v];
            }
        std::vector<MpReal> d;
        if (!solve_real(a, b, d)) break;
        std::vector<MpReal> y = x;
        for (std::size_t u = 0; u < n; ++u) y[u] -= d[u];
        MpReal ny = norm(y);
        if (!(ny < best)) break;
        best = ny;
        x = std::move(y);
    }
    return x;
}

std::optional<Rational> reconstruct(const MpReal& x) {
    // continued fraction with denominators up to 10^6
    if (abs(x) > MpReal("1e15")) return std::nullopt;
    MpReal y = x;
    Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    for (int k = 0; k < 40; ++k) {
        MpReal a = floor(y);
        Integer ai(static_cast<long>(a.convert_to<long long>()));
        Integer p2 = ai * p1 + p0, q2 = ai * q1 + q0;
        if (q2 > 1000000) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        Rational r(p1, q1);
        r.canonicalize();
        if (abs(x - rational_to<MpReal>(r)) <= MpReal("1e-45") * std::max(MpReal(1), MpReal(abs(x)))) return r;
        MpReal frac = y - a;
        if (frac < MpReal("1e-15")) break;
        y = 1 / frac;
    }
    return std::nullopt;
}

// x = expr(remaining unknowns), solved from an equation linear in x with a
// constant coefficient.
struct LinearReduction {
    std::vector<MultiPoly> equations;
    std::vector<std::string> remaining;
    std::vector<std::pair<std::string, MultiPoly>> solved;
};

LinearReduction reduce_linear(const PolySystem& sys) {
    LinearReduction red{sys.equations, sys.unknowns, {}};
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t e = 0; e < red.equations.size() && !progress; ++e) {
            // copies: red.equations is replaced inside the loop
            const MultiPoly eq = red.equations[e];
            for (const std::string& v : eq.variables()) {
                if (eq.degree(v) != 1) continue;
                auto c = eq.coefficients_in(v);
                if (!c[1].is_constant()) continue;
                MultiPoly expr = (-c[0]).scaled(c[1].constant_term().inverse());
                std::map<std::string, MultiPoly> sub{{v, expr}};
                std::vector<MultiPoly> rest;
                for (std::size_t k = 0; k < red.equations.size(); ++k) {
                    if (k == e) continue;
                    MultiPoly r = red.equations[k].substitute(sub);
                    if (!r.is_zero()) rest.push_back(r.primitive_part());
                }
                for (auto& [name, ex] : red.solved) ex = ex.substitute(sub);
                red.solved.emplace_back(v, expr);
                red.equations = std::move(rest);
                red.remaining.erase(std::remove(red.remaining.begin(), red.remaining.end(), v), red.remaining.end());
                progress = true;
                break;
            }
        }
    }
    return red;
}

bool same_point(const std::vector<MpReal>& a, const std::vector<MpReal>& b, double tol) {
    for (std::size_t k = 0; k < a.size(); ++k)
        if (abs(a[k] - b[k]) > tol) return false;
    return true;
}

bool flip_symmetric(const std::vector<MultiPoly>& eqs) {
    return std::all_of(eqs.begin(), eqs.end(), [](const MultiPoly& e) { return e.has_sign_flip_parity(); });
}

std::map<std::string, MpCx> point_map(const ParamMap& bound, const std::vector<std::string>& names,
                                      const std::vector<MpReal>& values) {
    std::map<std::string, MpCx> m;
    for (const auto& [k, v] : bound) m[k] = to_cx<MpReal>(v);
    for (std::size_t k = 0; k < names.size(); ++k) m[names[k]] = MpCx(values[k]);
    return m;
}

MpCx eval_at(const MultiPoly& p, const std::map<std::string, MpCx>& at) { return evaluate_numeric<MpReal>(p, at); }

} // namespace

// --- public API ------------------------------------------------------------------------------

PolySystem mep_system(const SecularPoly& p) {
    if (p.degree() < 1) throw InputError("secular polynomial has no spectral variable");
    if (!p.leading().is_constant() || p.leading().is_zero())
        throw InputError("leading secular coefficient is not a nonzero constant");
    GaussRat inv = p.leading().constant_term().inverse();
    PolySystem sys;
    sys.unknowns = p.parameters();
    for (int k = 0; k < p.degree(); ++k) {
        MultiPoly c = p.coeffs[k].scaled(inv);
        for (MultiPoly part : {c.real_part(), c.imag_part()})
            if (!part.is_zero()) sys.equations.push_back(std::move(part));
    }
    return sys;
}

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, const std::string& var) {
    if (f.is_zero() || g.is_zero()) return {};
    auto a = f.coefficients_in(var);
    auto b = g.coefficients_in(var);
    const int m = static_cast<int>(a.size()) - 1, n = static_cast<int>(b.size()) - 1;
    if (m == 0) return a[0].pow(n);
    if (n == 0) return b[0].pow(m);
    const int s = m + n;
    std::vector<std::vector<MultiPoly>> mat(s, std::vector<MultiPoly>(s));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k <= m; ++k) mat[i][i + m - k] = a[k];
    for (int i = 0; i < m; ++i)
        for (int k = 0; k <= n; ++k) mat[n + i][i + n - k] = b[k];
    // Bareiss fraction-free elimination
    MultiPoly prev(1);
    bool negate = false;
    for (int k = 0; k + 1 < s; ++k) {
        if (mat[k][k].is_zero()) {
            int p = -1;
            std::size_t best = 0;
            for (int i = k + 1; i < s; ++i)
                if (!mat[i][k].is_zero() && (p < 0 || mat[i][k].terms().size() < best)) {
                    p = i;
                    best = mat[i][k].terms().size();
                }
            if (p < 0) return {};
            std::swap(mat[k], mat[p]);
            negate = !negate;
        }
        for (int i = k + 1; i < s; ++i) {
            for (int j = k + 1; j < s; ++j) {
                MultiPoly t = mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j];
                mat[i][j] = t.exact_divide(prev);
            }
            mat[i][k] = MultiPoly();
        }
        prev = mat[k][k];
    }
    return negate ? -mat[s - 1][s - 1] : mat[s - 1][s - 1];
}

RatPoly to_ratpoly(const MultiPoly& p, const std::string& var) {
    for (const auto& v : p.variables())
        if (v != var) throw ComputationError("polynomial still depends on " + v);
    std::vector<Rational> c;
    for (const auto& x : p.coefficients_in(var)) {
        GaussRat z = x.constant_term();
        if (!z.is_real()) throw ComputationError("elimination polynomial has complex coefficients");
        c.push_back(z.re());
    }
    return RatPoly(std::move(c));
}

RatPoly eliminate(const PolySystem& sys, const std::string& keep) {
    auto dedupe = [](std::vector<MultiPoly> in) {
        std::vector<MultiPoly> out;
        for (auto& e : in) {
            if (e.is_zero()) continue;
            MultiPoly p = e.primitive_part();
            if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
        }
        return out;
    };
    std::vector<MultiPoly> eqs = dedupe(sys.equations);
    std::vector<std::string> others;
    for (const auto& v : sys.unknowns)
        if (v != keep) others.push_back(v);
    for (const auto& e : eqs)
        for (const auto& v : e.variables())
            if (v != keep && std::find(others.begin(), others.end(), v) == others.end()) others.push_back(v);

    while (!others.empty()) {
        // eliminate the variable of lowest maximal degree first
        auto pick = std::min_element(others.begin(), others.end(), [&](const std::string& x, const std::string& y) {
            unsigned dx = 0, dy = 0;
            for (const auto& e : eqs) {
                dx = std::max(dx, e.degree(x));
                dy = std::max(dy, e.degree(y));
            }
            return dx < dy;
        });
        std::string x = *pick;
        others.erase(pick);
        std::vector<MultiPoly> with, next;
        for (auto& e : eqs) (e.has_variable(x) ? with : next).push_back(e);
        std::sort(with.begin(), with.end(), [](const MultiPoly& a, const MultiPoly& b) {
            return a.total_degree() < b.total_degree() ||
                   (a.total_degree() == b.total_degree() && a.terms().size() < b.terms().size());
        });
        if (with.size() > 4) with.resize(4);
        bool any = false;
        for (std::size_t i = 0; i < with.size(); ++i)
            for (std::size_t j = i + 1; j < with.size(); ++j) {
                MultiPoly r = resultant(with[i], with[j], x);
                if (!r.is_zero()) {
                    any = true;
                    next.push_back(std::move(r));
                }
            }
        if (with.size() >= 2 && !any)
            throw ComponentError("every resultant in " + x + " vanishes: the solution set is positive-dimensional");
        eqs = dedupe(std::move(next));
    }
    if (eqs.empty()) throw ComponentError("no equation constrains " + keep);
    RatPoly g;
    for (const auto& e : eqs) g = gcd(g, to_ratpoly(e, keep));
    // integer primitive form
    Integer den = 1, num = 0;
    for (const auto& c : g.coeffs()) {
        if (sgn(c) == 0) continue;
        den = lcm(den, Integer(c.get_den()));
        num = gcd(num, Integer(c.get_num()));
    }
    Rational scale(den, num);
    scale.canonicalize();
    return g.scaled(scale);
}

int sturm_count(const RatPoly& q, const Rational& a, const Rational& b) {
    auto chain = sturm_chain(q.squarefree());
    return variations_at(chain, a) - variations_at(chain, b);
}

int real_root_count(const RatPoly& q) {
    if (q.degree() <= 0) return 0;
    auto chain = sturm_chain(q.squarefree());
    return variations_at_infinity(chain, false) - variations_at_infinity(chain, true);
}

std::vector<RootInterval> isolate_real_roots(const RatPoly& q, const Rational& width) {
    std::vector<RootInterval> out;
    if (q.degree() <= 0) return out;
    const RatPoly p = q.squarefree();
    if (p.degree() <= 0) return out;
    const auto chain = sturm_chain(p);
    auto count = [&](const Rational& a, const Rational& b) {
        return variations_at(chain, a) - variations_at(chain, b);
    };
    const Rational bound = cauchy_bound(p);

    struct Task {
        Rational a, b;
        int n;
    };
    std::vector<Task> stack{{-bound, bound, count(-bound, bound)}};
    while (!stack.empty()) {
        Task t = stack.back();
        stack.pop_back();
        if (t.n == 0) continue;
        if (t.n == 1 && t.b - t.a < width) {
            out.push_back({t.a, t.b});
            continue;
        }
        Rational mid = (t.a + t.b) / 2;
        if (sgn(p(mid)) == 0) {
            // exact root at the midpoint: peel it off with a root-free margin
            Rational d = (t.b - t.a) / 4;
            while (count(mid - d, mid) != 1 || count(mid, mid + d) != 0) d /= 2;
            stack.push_back({mid + d, t.b, count(mid + d, t.b)});
            out.push_back({mid, mid});
            stack.push_back({t.a, mid - d, count(t.a, mid - d)});
            continue;
        }
        int left = count(t.a, mid);
        stack.push_back({mid, t.b, t.n - left});
        stack.push_back({t.a, mid, left});
    }
    std::sort(out.begin(), out.end(), [](const RootInterval& x, const RootInterval& y) { return x.hi < y.hi; });
    return out;
}

MpReal refine_root(const RatPoly& q, const RootInterval& iv) {
    if (iv.exact()) return rational_to<MpReal>(iv.lo);
    const auto c = mp_coeffs(q);
    MpReal lo = rational_to<MpReal>(iv.lo), hi = rational_to<MpReal>(iv.hi);
    MpReal fhi = horner_with_derivative(c, hi).first;
    if (fhi == 0) return hi;
    const int shi = fhi > 0 ? 1 : -1;
    MpReal x = (lo + hi) / 2;
    const MpReal eps("1e-66");
    for (int it = 0; it < 400; ++it) {
        auto [f, d] = horner_with_derivative(c, x);
        if (f == 0) return x;
        if ((f > 0 ? 1 : -1) == shi) hi = x;
        else lo = x;
        MpReal y = d != 0 ? MpReal(x - f / d) : MpReal((lo + hi) / 2);
        if (!(y > lo && y < hi)) y = (lo + hi) / 2;
        if (abs(y - x) <= eps * std::max(MpReal(1), MpReal(abs(x))) || hi - lo <= eps) return y;
        x = y;
    }
    return x;
}

double MepSolution::value(const std::string& name) const {
    for (std::size_t k = 0; k < names.size(); ++k)
        if (names[k] == name) return static_cast<double>(values[k]);
    throw InputError("no coordinate named " + name);
}

double MepSolution::max_residual() const {
    double m = 0;
    for (double r : residuals) m = std::max(m, r);
    return m;
}

SecularPoly centred_secular(const TriMatrix& h, const ParamMap& bound) {
    std::map<std::string, MultiPoly> subst;
    for (const auto& [name, v] : bound)
        if (v.is_gauss_rational()) subst[name] = MultiPoly(v.gauss_value());
    MultiPoly trace = h.trace().substitute(subst);
    if (!trace.is_constant())
        throw UnsupportedError("the trace depends on free parameters (" + trace.str() +
                               "); an N-fold eigenvalue has no fixed centre");
    GaussRat c = trace.constant_term() / GaussRat(h.dim());
    SecularPoly p = shift(char_poly(h, bound), c);
    for (const auto& v : p.parameters())
        if (bound.count(v)) throw UnsupportedError("bound parameter " + v + " must be a Gaussian rational here");
    try {
        return to_even_var(p);
    } catch (const OddTermError&) {
        return p;
    }
}

Degeneracy degeneracy_certificate(const TriMatrix& h, const ParamMap& bound, const std::vector<std::string>& names,
                                  const std::vector<MpReal>& values) {
    const int n = h.dim();
    auto at = point_map(bound, names, values);
    MpMatrix a(n, std::vector<MpCx>(n));
    MpCx trace;
    for (int k = 0; k < n; ++k) {
        a[k][k] = eval_at(h.diag()[k], at);
        trace += a[k][k];
    }
    auto surd = [&](const Surd& s) {
        MpCx c = eval_at(s.coef, at);
        return s.is_plain() ? c : c * sqrt(eval_at(s.radicand, at));
    };
    for (int k = 0; k + 1 < n; ++k) {
        a[k][k + 1] = surd(h.sup()[k]);
        a[k + 1][k] = surd(h.sub()[k]);
    }
    MpCx center = trace / MpCx(MpReal(n));
    Degeneracy d;
    d.center = center.to_complex();

    // centred characteristic polynomial by the three-term recurrence
    std::vector<MpCx> prev2{MpCx(MpReal(1))}, prev;
    for (int k = 0; k < n; ++k) {
        MpCx diag = a[k][k] - center;
        std::vector<MpCx> next(k + 2);
        for (std::size_t j = 0; j < (k == 0 ? prev2 : prev).size(); ++j) {
            const MpCx& c = (k == 0 ? prev2 : prev)[j];
            next[j] += c * diag;
            next[j + 1] -= c;
        }
        if (k > 0) {
            MpCx prod = a[k][k - 1] * a[k - 1][k];
            for (std::size_t j = 0; j < prev2.size(); ++j) next[j] -= prod * prev2[j];
            prev2 = prev;
        }
        prev = std::move(next);
    }
    MpReal lead = prev[n].abs();
    MpReal radius = 0;
    for (int k = 1; k <= n; ++k) {
        MpReal m = prev[n - k].abs() / lead;
        if (m > 0) radius = std::max(radius, MpReal(pow(m, MpReal(1) / k)));
    }
    d.cluster_radius = static_cast<double>(2 * radius);

    MpMatrix shifted = a;
    for (int k = 0; k < n; ++k) shifted[k][k] -= center;
    const MpReal scale = std::max(MpReal(1), max_abs(shifted));
    MpMatrix power = shifted;
    for (int k = 1; k <= n; ++k) {
        if (k > 1) power = multiply(power, shifted);
        d.jordan_rank_profile.push_back(rank_of(power, MpReal("1e-30") * pow(scale, k)));
    }

    Eigen::MatrixXcd m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = a[i][j].to_complex();
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, false);
    for (int k = 0; k < n; ++k) d.oracle_radius = std::max(d.oracle_radius, std::abs(es.eigenvalues()(k) - d.center));
    d.matrix_norm = Eigen::JacobiSVD<Eigen::MatrixXcd>(m).singularValues()(0);
    return d;
}

std::vector<MepSolution> solve_mep(const ModelSpec& spec, const MepOptions& opts) {
    spec.validate();
    const TriMatrix h = build(spec);
    const ParamMap bound = spec.bound_values();
    const std::vector<std::string> names = spec.free_parameters();
    const SecularPoly p = centred_secular(h, bound);
    PolySystem sys = mep_system(p);
    for (const auto& v : sys.unknowns)
        if (std::find(names.begin(), names.end(), v) == names.end())
            throw UnsupportedError("parameter " + v + " is neither free nor bound to a Gaussian rational");
    sys.unknowns = names;
    const MpReal accept("1e-40");

    std::vector<std::vector<MpReal>> points;
    const LinearReduction red = reduce_linear(sys);
    const auto& rem = red.remaining;
    std::vector<std::vector<MpReal>> reduced_points;
    if (static_cast<int>(rem.size()) <= opts.max_elimination_unknowns) {
        std::vector<std::vector<MpReal>> roots;
        for (const auto& u : rem) {
            PolySystem sub{red.equations, rem};
            RatPoly q = eliminate(sub, u).squarefree();
            std::vector<MpReal> r;
            for (const auto& iv : isolate_real_roots(q)) r.push_back(refine_root(q, iv));
            roots.push_back(std::move(r));
        }
        // Cartesian product of coordinate candidates, filtered by the residual
        std::vector<std::size_t> idx(rem.size(), 0);
        bool done = std::any_of(roots.begin(), roots.end(), [](const auto& r) { return r.empty(); });
        while (!done) {
            std::vector<MpReal> x;
            for (std::size_t k = 0; k < rem.size(); ++k) x.push_back(roots[k][idx[k]]);
            if (satisfies(red.equations, rem, x, accept)) reduced_points.push_back(x);
            std::size_t k = 0;
            for (; k < rem.size(); ++k) {
                if (++idx[k] < roots[k].size()) break;
                idx[k] = 0;
            }
            done = k == rem.size();
        }
    } else {
        if (opts.seeds.empty())
            throw UnsupportedError(std::to_string(rem.size()) +
                                   " unknowns remain after linear elimination; supply Newton seeds");
        for (const auto& seed : opts.seeds) {
            std::vector<MpReal> x;
            for (const auto& u : rem) {
                auto it = seed.find(u);
                if (it == seed.end()) throw InputError("seed lacks a value for " + u);
                x.push_back(MpReal(it->second));
            }
            x = polish(red.equations, rem, x, 200);
            if (satisfies(red.equations, rem, x, accept)) reduced_points.push_back(x);
        }
    }

    for (auto& x : reduced_points) {
        x = polish(red.equations, rem, x);
        std::map<std::string, MpCx> at;
        for (std::size_t k = 0; k < rem.size(); ++k) at[rem[k]] = MpCx(x[k]);
        std::vector<MpReal> full;
        for (const auto& name : names) {
            auto it = std::find(rem.begin(), rem.end(), name);
            if (it != rem.end()) {
                full.push_back(x[it - rem.begin()]);
                continue;
            }
            for (const auto& [v, expr] : red.solved)
                if (v == name) full.push_back(evaluate_numeric<MpReal>(expr, at).re);
        }
        points.push_back(std::move(full));
    }

    if (flip_symmetric(sys.equations)) {
        const std::size_t found = points.size();
        for (std::size_t k = 0; k < found; ++k) {
            std::vector<MpReal> y = points[k];
            for (auto& v : y) v = -v;
            points.push_back(std::move(y));
        }
    }
    std::vector<std::vector<MpReal>> unique;
    for (auto& x : points)
        if (std::none_of(unique.begin(), unique.end(), [&](const auto& u) { return same_point(u, x, 1e-10); }))
            unique.push_back(std::move(x));
    std::sort(unique.begin(), unique.end(), [](const auto& a, const auto& b) {
        for (std::size_t k = 0; k < a.size(); ++k)
            if (abs(a[k] - b[k]) > MpReal("1e-30")) return a[k] > b[k];
        return false;
    });

    std::vector<MepSolution> out;
    CompiledSystem full_sys(sys.equations, names);
    for (auto& x : unique) {
        MepSolution s;
        s.names = names;
        s.values = x;
        for (const auto& v : x) s.exact.push_back(reconstruct(v));
        bool all_exact = std::all_of(s.exact.begin(), s.exact.end(), [](const auto& e) { return e.has_value(); });
        if (all_exact) {
            ParamMap exact_at;
            for (std::size_t k = 0; k < names.size(); ++k) exact_at[names[k]] = AlgebraicNumber(*s.exact[k]);
            bool ok = std::all_of(sys.equations.begin(), sys.equations.end(),
                                  [&](const MultiPoly& e) { return e.evaluate(exact_at).is_zero(); });
            if (ok) s.values.clear();
            for (std::size_t k = 0; k < names.size(); ++k) {
                if (ok) s.values.push_back(rational_to<MpReal>(*s.exact[k]));
                else s.exact[k].reset();
            }
        } else {
            for (auto& e : s.exact) e.reset();
        }
        for (const auto& r : full_sys.residuals(s.values)) s.residuals.push_back(static_cast<double>(r));
        s.degeneracy = degeneracy_certificate(h, bound, names, s.values);
        if (s.degeneracy.cluster_radius > opts.certify_radius)
            throw CertificationError("eigenvalue cluster radius " + std::to_string(s.degeneracy.cluster_radius) +
                                     " at a polished elimination root");
        out.push_back(std::move(s));
    }
    return out;
}

} // namespace qcat
