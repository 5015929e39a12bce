#include "qcat/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qcat/errors.hpp"

namespace qcat {

namespace {

unsigned total(const MultiPoly::Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

void add_term(MultiPoly::TermMap& m, const MultiPoly::Exponents& e, const GaussRat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = m.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) m.erase(it);
    }
}

std::string coefficient_text(const Rational& q) { return q.get_str(); }

} // namespace

bool MultiPoly::GradedOrder::operator()(const Exponents& a, const Exponents& b) const {
    unsigned ta = total(a), tb = total(b);
    if (ta != tb) return ta > tb;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<std::string> merge_variables(const std::vector<std::string>& a,
                                         const std::vector<std::string>& b) {
    std::vector<std::string> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

MultiPoly::MultiPoly(const GaussRat& c) {
    if (!c.is_zero()) terms_.emplace(Exponents{}, c);
}

MultiPoly::MultiPoly(std::vector<std::string> vars, TermMap terms)
    : vars_(std::move(vars)), terms_(std::move(terms)) {
    normalize();
}

MultiPoly MultiPoly::variable(const std::string& name) {
    TermMap t;
    t.emplace(Exponents{1}, GaussRat(1));
    return MultiPoly({name}, std::move(t));
}

MultiPoly MultiPoly::from_coefficients(const std::string& var, const std::vector<MultiPoly>& coeffs) {
    MultiPoly out;
    MultiPoly x = variable(var);
    MultiPoly xp(1);
    for (const auto& c : coeffs) {
        out += c * xp;
        xp *= x;
    }
    return out;
}

MultiPoly::TermMap MultiPoly::aligned_terms(const std::vector<std::string>& vars) const {
    if (vars == vars_) return terms_;
    std::vector<std::size_t> pos(vars_.size());
    for (std::size_t k = 0; k < vars_.size(); ++k)
        pos[k] = std::lower_bound(vars.begin(), vars.end(), vars_[k]) - vars.begin();
    TermMap out;
    for (const auto& [e, c] : terms_) {
        Exponents ne(vars.size(), 0);
        for (std::size_t k = 0; k < e.size(); ++k) ne[pos[k]] = e[k];
        out.emplace(std::move(ne), c);
    }
    return out;
}

void MultiPoly::normalize() {
    std::vector<bool> used(vars_.size(), false);
    for (const auto& [e, c] : terms_)
        for (std::size_t k = 0; k < e.size(); ++k)
            if (e[k]) used[k] = true;
    if (std::all_of(used.begin(), used.end(), [](bool u) { return u; })) return;
    std::vector<std::string> nv;
    for (std::size_t k = 0; k < vars_.size(); ++k)
        if (used[k]) nv.push_back(vars_[k]);
    TermMap nt;
    for (const auto& [e, c] : terms_) {
        Exponents ne;
        for (std::size_t k = 0; k < e.size(); ++k)
            if (used[k]) ne.push_back(e[k]);
        nt.emplace(std::move(ne), c);
    }
    vars_ = std::move(nv);
    terms_ = std::move(nt);
}

GaussRat MultiPoly::constant_term() const {
    Exponents zero(vars_.size(), 0);
    auto it = terms_.find(zero);
    return it == terms_.end() ? GaussRat() : it->second;
}

GaussRat MultiPoly::constant_value() const {
    if (!is_constant()) {
        std::string names;
        for (const auto& v : vars_) names += (names.empty() ? "" : ", ") + v;
        throw InputError("unbound variable(s): " + names);
    }
    return constant_term();
}

bool MultiPoly::has_variable(const std::string& var) const {
    return std::binary_search(vars_.begin(), vars_.end(), var);
}

unsigned MultiPoly::degree(const std::string& var) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    if (it == vars_.end() || *it != var) return 0;
    std::size_t k = it - vars_.begin();
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[k]);
    return d;
}

unsigned MultiPoly::total_degree() const { return terms_.empty() ? 0 : total(terms_.begin()->first); }

std::vector<MultiPoly> MultiPoly::coefficients_in(const std::string& var) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    if (it == vars_.end() || *it != var) return {*this};
    std::size_t k = it - vars_.begin();
    std::vector<TermMap> parts(degree(var) + 1);
    for (const auto& [e, c] : terms_) {
        Exponents ne = e;
        ne[k] = 0;
        parts[e[k]].emplace(std::move(ne), c);
    }
    std::vector<MultiPoly> out;
    out.reserve(parts.size());
    for (auto& p : parts) out.push_back(MultiPoly(vars_, std::move(p)));
    return out;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (o.terms_.empty()) return *this;
    auto vars = merge_variables(vars_, o.vars_);
    TermMap mine = aligned_terms(vars);
    TermMap theirs = o.aligned_terms(vars);
    for (const auto& [e, c] : theirs) add_term(mine, e, c);
    vars_ = std::move(vars);
    terms_ = std::move(mine);
    normalize();
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    auto vars = merge_variables(a.vars_, b.vars_);
    auto ta = a.aligned_terms(vars);
    auto tb = b.aligned_terms(vars);
    MultiPoly::TermMap out;
    MultiPoly::Exponents e(vars.size());
    for (const auto& [ea, ca] : ta) {
        for (const auto& [eb, cb] : tb) {
            for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
            add_term(out, e, ca * cb);
        }
    }
    return MultiPoly(std::move(vars), std::move(out));
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly MultiPoly::pow(unsigned n) const {
    MultiPoly result(1), base = *this;
    while (n) {
        if (n & 1u) result *= base;
        n >>= 1u;
        if (n) base *= base;
    }
    return result;
}

MultiPoly MultiPoly::scaled(const GaussRat& c) const {
    if (c.is_zero()) return {};
    MultiPoly out = *this;
    for (auto& [e, v] : out.terms_) v *= c;
    return out;
}

MultiPoly MultiPoly::conj() const {
    MultiPoly out = *this;
    for (auto& [e, c] : out.terms_) c = c.conj();
    return out;
}

bool MultiPoly::is_real() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_real(); });
}

MultiPoly MultiPoly::real_part() const {
    TermMap t;
    for (const auto& [e, c] : terms_) add_term(t, e, GaussRat(c.re()));
    return MultiPoly(vars_, std::move(t));
}

MultiPoly MultiPoly::imag_part() const {
    TermMap t;
    for (const auto& [e, c] : terms_) add_term(t, e, GaussRat(c.im()));
    return MultiPoly(vars_, std::move(t));
}

MultiPoly MultiPoly::derivative(const std::string& var) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    if (it == vars_.end() || *it != var) return {};
    const std::size_t k = it - vars_.begin();
    TermMap out;
    for (const auto& [e, c] : terms_) {
        if (!e[k]) continue;
        Exponents ne = e;
        --ne[k];
        add_term(out, ne, c * GaussRat(static_cast<long>(e[k])));
    }
    return MultiPoly(vars_, std::move(out));
}

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly>& values) const {
    // Per-variable replacement (the variable itself when unbound) and a power cache.
    std::vector<MultiPoly> repl;
    for (const auto& v : vars_) {
        auto it = values.find(v);
        repl.push_back(it == values.end() ? variable(v) : it->second);
    }
    std::vector<std::vector<MultiPoly>> powers(vars_.size(), std::vector<MultiPoly>{MultiPoly(1)});
    auto power = [&](std::size_t k, unsigned n) -> const MultiPoly& {
        auto& cache = powers[k];
        while (cache.size() <= n) cache.push_back(cache.back() * repl[k]);
        return cache[n];
    };
    MultiPoly out;
    for (const auto& [e, c] : terms_) {
        MultiPoly term(c);
        for (std::size_t k = 0; k < e.size(); ++k)
            if (e[k]) term *= power(k, e[k]);
        out += term;
    }
    return out;
}

AlgebraicNumber MultiPoly::evaluate(const std::map<std::string, AlgebraicNumber>& values) const {
    std::vector<const AlgebraicNumber*> val;
    for (const auto& v : vars_) {
        auto it = values.find(v);
        if (it == values.end()) throw InputError("unbound variable: " + v);
        val.push_back(&it->second);
    }
    std::vector<std::vector<AlgebraicNumber>> powers(vars_.size(), std::vector<AlgebraicNumber>{AlgebraicNumber(1)});
    AlgebraicNumber out;
    for (const auto& [e, c] : terms_) {
        AlgebraicNumber term(c);
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (!e[k]) continue;
            auto& cache = powers[k];
            while (cache.size() <= e[k]) cache.push_back(cache.back() * *val[k]);
            term = term * cache[e[k]];
        }
        out += term;
    }
    return out;
}

MultiPoly MultiPoly::exact_divide(const MultiPoly& b) const {
    if (b.is_zero()) throw ComputationError("polynomial division by zero");
    if (is_zero()) return {};
    auto vars = merge_variables(vars_, b.vars_);
    TermMap rem = aligned_terms(vars);
    TermMap div = b.aligned_terms(vars);
    const auto& [lead_e, lead_c] = *div.begin();
    GaussRat lead_inv = lead_c.inverse();
    TermMap quot;
    Exponents qe(vars.size()), pe(vars.size());
    while (!rem.empty()) {
        const auto [re, rc] = *rem.begin();
        for (std::size_t k = 0; k < vars.size(); ++k) {
            if (re[k] < lead_e[k]) throw ComputationError("inexact polynomial division");
            qe[k] = re[k] - lead_e[k];
        }
        GaussRat qc = rc * lead_inv;
        add_term(quot, qe, qc);
        for (const auto& [de, dc] : div) {
            for (std::size_t k = 0; k < vars.size(); ++k) pe[k] = de[k] + qe[k];
            add_term(rem, pe, -(dc * qc));
        }
    }
    return MultiPoly(std::move(vars), std::move(quot));
}

MultiPoly MultiPoly::primitive_part() const {
    if (is_zero()) return {};
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto& [e, c] : terms_) {
        for (const Rational* q : {&c.re(), &c.im()}) {
            if (sgn(*q) == 0) continue;
            num_gcd = gcd(num_gcd, Integer(q->get_num()));
            den_lcm = lcm(den_lcm, Integer(q->get_den()));
        }
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    const GaussRat& lead = terms_.begin()->second;
    int s = sgn(lead.re()) != 0 ? sgn(lead.re()) : sgn(lead.im());
    if (s < 0) scale = -scale;
    return scaled(GaussRat(scale));
}

bool MultiPoly::has_sign_flip_parity() const {
    if (terms_.empty()) return true;
    unsigned p = total(terms_.begin()->first) % 2;
    return std::all_of(terms_.begin(), terms_.end(), [p](const auto& t) { return total(t.first) % 2 == p; });
}

double MultiPoly::max_abs_coefficient() const {
    double m = 0;
    for (const auto& [e, c] : terms_) m = std::max(m, std::abs(c.to_complex()));
    return m;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string mono;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (!e[k]) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[k];
            if (e[k] > 1) mono += "^" + std::to_string(e[k]);
        }
        bool negative = false;
        std::string coef;
        if (c.is_real()) {
            negative = sgn(c.re()) < 0;
            Rational a = abs(c.re());
            if (a != 1 || mono.empty()) coef = coefficient_text(a);
        } else if (sgn(c.re()) == 0) {
            negative = sgn(c.im()) < 0;
            Rational a = abs(c.im());
            coef = (a == 1 ? std::string() : coefficient_text(a) + "*") + "i";
        } else {
            coef = "(" + c.str() + ")";
        }
        if (first) os << (negative ? "-" : "");
        else os << (negative ? " - " : " + ");
        first = false;
        os << coef;
        if (!coef.empty() && !mono.empty()) os << "*";
        os << mono;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.str(); }

} // namespace qcat
