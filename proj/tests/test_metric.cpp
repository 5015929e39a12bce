#include "doctest.h"

#include <cmath>

#include "qcat/errors.hpp"
#include "qcat/metric.hpp"

using namespace qcat;
using Eigen::MatrixXcd;

namespace {

MultiPoly var(const char* n) { return MultiPoly::variable(n); }

MatrixXcd hamal(const AlgebraicNumber& alpha, const AlgebraicNumber& beta) {
    return build_nnim(4, {-var("beta"), var("alpha")}).evaluate({{"alpha", alpha}, {"beta", beta}}).dense();
}

const AlgebraicNumber half(Rational(1, 2));
const AlgebraicNumber beta0 = AlgebraicNumber::sqrt_of(2) * AlgebraicNumber(Rational(3, 4));

} // namespace

TEST_CASE("Hermitian input: identity in the nullspace, identity metric") {
    MatrixXcd h = build_gpm(4, {MultiPoly(), MultiPoly(1), MultiPoly(-1), MultiPoly()}).evaluate({}).dense();
    auto ns = dieudonne_nullspace(h);
    CHECK(ns.size() == 4);
    auto [c, err] = project_onto(MatrixXcd::Identity(4, 4), ns);
    CHECK(err < 1e-12);
    auto sm = spectral_metric(h);
    CHECK((sm.theta - MatrixXcd::Identity(4, 4)).norm() < 1e-12);
    auto diag = banded_metric(h, 0);
    REQUIRE(diag);
    CHECK((diag->theta - MatrixXcd::Identity(4, 4) / 2.0).norm() < 1e-12);
    CHECK(provenance_name(diag->provenance, diag->bandwidth) == "diagonal-ansatz");
}

TEST_CASE("two-level seed") {
    // H = [[2, -1 + l], [-1 - l, 2]], l = 1/2: Hermitian solutions are
    // Theta = [[a, b], [b, c]] with real b and (1 + l) c = (1 - l) a
    MatrixXcd h = build_nnim(2, {-var("l")}).evaluate({{"l", half}}).dense();
    auto ns = dieudonne_nullspace(h);
    CHECK(ns.size() == 2);
    for (const auto& t : ns) {
        CHECK(dieudonne_residual(h, t) < 1e-14);
        CHECK(std::abs(t(1, 1) * 1.5 - t(0, 0) * 0.5) < 1e-14);
        CHECK(std::abs(t(0, 1).imag()) < 1e-14);
    }
    auto d = dual_eigenbasis(h);
    for (int j = 0; j < 2; ++j) {
        CHECK(d.kets(1, j) == std::complex<double>(1));
        CHECK((h.adjoint() * d.kets.col(j) - std::conj(d.eigenvalues[j]) * d.kets.col(j)).norm() < 1e-12);
    }
}

TEST_CASE("hamal at small parameters: a unique positive diagonal metric") {
    MatrixXcd h = hamal(half, half);
    CHECK(dieudonne_nullspace(h).size() == 4);
    auto diag = banded_metric(h, 0);
    REQUIRE(diag);
    CHECK(diag->positivity.positive_definite);
    CHECK(diag->dieudonne_residual < 1e-12);
    CHECK_THROWS_AS(banded_metric(h, 3), AmbiguityError);
}

TEST_CASE("hamal paradox point") {
    MatrixXcd h = hamal(half, beta0);
    auto diag = banded_metric(h, 0);
    REQUIRE(diag);
    CHECK_FALSE(diag->positivity.positive_definite);
    CHECK(diag->positivity.min_eigenvalue < 0);
    auto sm = spectral_metric(h);
    CHECK(sm.positivity.positive_definite);
    CHECK(sm.dieudonne_residual < 1e-10);
    CHECK(quasi_hermiticity_defect(h, sm.theta) < 1e-8);
    auto ns = dieudonne_nullspace(h);
    CHECK(project_onto(sm.theta, ns).second < 1e-9);
}

TEST_CASE("spectral metric is linear in kappa") {
    MatrixXcd h = hamal(half, half);
    std::vector<double> k{1, 2, 3, 4}, k2{2, 4, 6, 8};
    auto a = spectral_metric(h, k), b = spectral_metric(h, k2);
    CHECK((b.theta - 2.0 * a.theta).norm() <= 1e-14 * b.theta.norm());
    CHECK_THROWS_AS(spectral_metric(h, {1, 1, 0, 1}), InputError);
    CHECK_THROWS_AS(spectral_metric(h, {1, 1}), InputError);
}

TEST_CASE("diagonal metric loses positivity as beta crosses 1") {
    double last = 0;
    for (int k = 0; k <= 10; ++k) {
        Rational b = Rational(9, 10) + Rational(k, 50);
        auto m = banded_metric(hamal(half, AlgebraicNumber(b)), 0);
        REQUIRE(m);
        double e = m->positivity.min_eigenvalue;
        if (b < 1) CHECK(e > 0);
        if (b > 1) CHECK(e < 0);
        last = e;
    }
    CHECK(last < 0);
}

TEST_CASE("complex or degenerate spectra are refused") {
    CHECK_THROWS_AS(dieudonne_nullspace(hamal(half, AlgebraicNumber(2))), SpectrumError);
    MatrixXcd jordan = build_nnim(2, {-var("l")}).evaluate({{"l", AlgebraicNumber(1)}}).dense();
    CHECK_THROWS_AS(spectral_metric(jordan), SpectrumError);
}

TEST_CASE("nullspace combination") {
    MatrixXcd h = hamal(half, half);
    auto ns = dieudonne_nullspace(h);
    auto c = combine_nullspace(h, ns, {1, 0, 0, 0});
    CHECK(c.theta.norm() == doctest::Approx(1));
    CHECK(c.theta.trace().real() > 0);
    CHECK(c.dieudonne_residual < 1e-12);
    CHECK_THROWS_AS(combine_nullspace(h, ns, {1}), InputError);
}
