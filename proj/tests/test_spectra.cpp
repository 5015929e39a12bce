#include "doctest.h"

#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qcat/errors.hpp"
#include "qcat/spectra.hpp"

using namespace qcat;

namespace {

MultiPoly var(const char* n) { return MultiPoly::variable(n); }

ModelSpec spec_of(Family f, int n, std::vector<std::pair<std::string, std::optional<AlgebraicNumber>>> ps) {
    ModelSpec s;
    s.family = f;
    s.dim = n;
    for (auto& [name, v] : ps) s.params.push_back({name, v});
    return s;
}

double max_distance(const std::vector<std::complex<double>>& a, const std::vector<std::complex<double>>& b) {
    // greedy nearest matching; conjugate pairs may be ordered differently
    REQUIRE(a.size() == b.size());
    std::vector<bool> used(b.size(), false);
    double m = 0;
    for (const auto& z : a) {
        std::size_t best = 0;
        double d = INFINITY;
        for (std::size_t k = 0; k < b.size(); ++k)
            if (!used[k] && std::abs(z - b[k]) < d) d = std::abs(z - b[k]), best = k;
        used[best] = true;
        m = std::max(m, d);
    }
    return m;
}

} // namespace

TEST_CASE("GPM N=3 at alpha=1") {
    auto h = build_gpm_folded(3, {var("alpha")});
    auto r = eigenvalues(h, {{"alpha", AlgebraicNumber(1)}});
    REQUIRE(r.eigenvalues.size() == 3);
    CHECK(r.reality);
    CHECK(r.max_imag == 0.0);
    CHECK(r.eigenvalues[0].real() == doctest::Approx(-1).epsilon(1e-14));
    CHECK(std::abs(r.eigenvalues[1]) < 1e-14);
    CHECK(r.eigenvalues[2].real() == doctest::Approx(1).epsilon(1e-14));
}

TEST_CASE("two-level seeds") {
    const double s = std::sqrt(3.0) / 2;
    auto g = eigenvalues(build_gpm_folded(2, {var("alpha")}, GaussRat(2)), {{"alpha", AlgebraicNumber(Rational(1, 2))}});
    auto n = eigenvalues(build_nnim(2, {-var("lambda")}), {{"lambda", AlgebraicNumber(Rational(1, 2))}});
    for (const auto* r : {&g, &n}) {
        REQUIRE(r->eigenvalues.size() == 2);
        CHECK(r->reality);
        CHECK(r->eigenvalues[0].real() == doctest::Approx(2 - s).epsilon(1e-14));
        CHECK(r->eigenvalues[1].real() == doctest::Approx(2 + s).epsilon(1e-14));
    }
    // beyond the exceptional point the pair is complex
    auto c = eigenvalues(build_nnim(2, {-var("lambda")}), {{"lambda", AlgebraicNumber(2)}});
    CHECK_FALSE(c.reality);
    CHECK(c.max_imag == doctest::Approx(std::sqrt(3.0)));
}

TEST_CASE("uniform chain at t=0 is the free Laplacian") {
    auto spec = spec_of(Family::NNIM, 10, {{"t", AlgebraicNumber(0)}});
    auto r = eigenvalues(spec);
    REQUIRE(r.eigenvalues.size() == 10);
    CHECK(r.reality);
    for (int k = 1; k <= 10; ++k)
        CHECK(r.eigenvalues[k - 1].real() == doctest::Approx(2 - 2 * std::cos(k * std::numbers::pi / 11)).epsilon(1e-13));
}

TEST_CASE("secular roots agree with a dense eigensolve") {
    std::vector<std::pair<TriMatrix, ParamMap>> cases = {
        {build_gpm_folded(4, {var("alpha"), var("beta")}), {{"alpha", AlgebraicNumber(Rational(1, 3))}, {"beta", AlgebraicNumber(Rational(7, 5))}}},
        {build_bim(12, var("lambda")), {{"lambda", AlgebraicNumber(Rational(3, 4))}}},
        {build_aom(6, var("g")), {{"g", AlgebraicNumber::sqrt_of(Rational(1, 2))}}},
        {build_gpm_cubic(8, Rational(1, 2)), {}},
    };
    for (const auto& [h, p] : cases) {
        auto r = eigenvalues(h, p);
        auto d = dense_eigenvalues(h.evaluate(p));
        CHECK(max_distance(r.eigenvalues, d) < 1e-9);
    }
}

TEST_CASE("AOM time law") {
    // eigenvalues 4 + {+-1, +-3} sqrt(t) for N = 4
    auto h = build_aom_time(4, var("t"));
    auto r = eigenvalues(h, {{"t", AlgebraicNumber(Rational(1, 4))}});
    REQUIRE(r.eigenvalues.size() == 4);
    CHECK(r.reality);
    const double w = 0.5;
    std::vector<double> want = {4 - 3 * w, 4 - w, 4 + w, 4 + 3 * w};
    for (int k = 0; k < 4; ++k) CHECK(r.eigenvalues[k].real() == doctest::Approx(want[k]).epsilon(1e-13));
    // at t=0 the spectrum collapses to a fourfold root
    auto ep = eigenvalues(h, {{"t", AlgebraicNumber(0)}});
    for (const auto& z : ep.eigenvalues) CHECK(std::abs(z - 4.0) < 1e-14);
}

TEST_CASE("multiple roots come from the squarefree decomposition") {
    // zaklad point t=1: a tenfold eigenvalue
    auto r = eigenvalues(spec_of(Family::NNIM, 10, {{"t", AlgebraicNumber(1)}}));
    REQUIRE(r.eigenvalues.size() == 10);
    for (const auto& z : r.eigenvalues) CHECK(std::abs(z - 2.0) < 1e-14);
    CHECK(r.reality);
}

TEST_CASE("unbound parameters are rejected") {
    CHECK_THROWS_AS(eigenvalues(build_bim(6, var("lambda")), {}), InputError);
    CHECK_THROWS_AS(eigenvalues(spec_of(Family::BIM, 6, {{"lambda", std::nullopt}})), InputError);
}

TEST_CASE("domain scan of GPM N=2") {
    // real iff |alpha| <= 1; y is a dummy axis
    auto spec = spec_of(Family::GPM, 2, {{"alpha", std::nullopt}});
    Axis x{"alpha", Rational(-2), Rational(2), 16}, y{"y", Rational(0), Rational(1), 16};
    auto scan = domain_scan(spec, x, y, 4);
    for (int iy = 0; iy < 16; ++iy)
        for (int ix = 0; ix < 16; ++ix) CHECK(scan.real_at(ix, iy) == (abs(x.center(ix)) <= 1));
    CHECK(scan.boundary_cells.size() == 4 * 16);
    std::ostringstream csv, ppm;
    write_scan_csv(scan, csv);
    write_scan_ppm(scan, ppm);
    CHECK(csv.str().rfind("alpha,y,real\n", 0) == 0);
    CHECK(ppm.str().size() == std::string("P5\n16 16\n255\n").size() + 256);
    CHECK_THROWS_AS(domain_scan(spec, Axis{"alpha", Rational(-1), Rational(1), 8}, y), InputError);
    auto two = spec_of(Family::GPM, 4, {{"alpha", std::nullopt}, {"beta", std::nullopt}});
    CHECK_THROWS_AS(domain_scan(two, x, y), UnsupportedError);
}

TEST_CASE("scan is independent of the thread count") {
    auto spec = spec_of(Family::GPM, 4, {{"alpha", std::nullopt}, {"beta", std::nullopt}});
    Axis x{"alpha", Rational(-2), Rational(2), 24}, y{"beta", Rational(-2), Rational(2), 20};
    auto a = domain_scan(spec, x, y, 1), b = domain_scan(spec, x, y, 6);
    CHECK(a.mask == b.mask);
    CHECK(a.boundary_cells == b.boundary_cells);
}

TEST_CASE("sweep records the exceptional point") {
    auto spec = spec_of(Family::NNIM, 2, {{"c", std::nullopt}});
    auto s = sweep(spec, Rational(0), Rational(2), 5, 2);
    REQUIRE(s.spectra.size() == 5);
    CHECK(s.path[2] == Rational(1));
    REQUIRE(s.collision_events.size() == 1);
    CHECK(s.collision_events[0].index == 2);
    std::ostringstream os;
    write_sweep_csv(s, os);
    CHECK(os.str().rfind("c,re_1,re_2,im_1,im_2\n", 0) == 0);
    CHECK_THROWS_AS(sweep(spec_of(Family::NNIM, 2, {{"c", AlgebraicNumber(0)}}), Rational(0), Rational(1), 3), InputError);
}

TEST_CASE("eigenpairs satisfy the eigen-equation") {
    auto h = build_bim(8, var("lambda"));
    ParamMap p{{"lambda", AlgebraicNumber(Rational(1, 3))}};
    Eigen::MatrixXcd m = h.evaluate(p).dense();
    for (const auto& e : eigenpairs(h, p)) {
        CHECK(e.vector.norm() == doctest::Approx(1));
        CHECK((m * e.vector - e.value * e.vector).norm() < 1e-10);
    }
}

TEST_CASE("Robin identity on boundary-interaction eigenvectors") {
    auto h = build_bim(10, var("lambda"));
    ParamMap p{{"lambda", AlgebraicNumber(Rational(2, 5))}};
    for (const auto& e : eigenpairs(h, p)) {
        auto r = robin_identity_check(h, p, "lambda", e);
        CHECK(r.identity_residual < 1e-10);
    }
    CHECK_THROWS_AS(robin_identity_check(build_nnim(6, {var("c")}), {{"c", AlgebraicNumber(0)}}, "c",
                                         Eigenpair{0.0, Eigen::VectorXcd::Zero(6)}),
                    InputError);
}
