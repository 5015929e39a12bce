#include "doctest.h"

#include "qcat/errors.hpp"
#include "qcat/secular.hpp"

using namespace qcat;

namespace {

MultiPoly var(const char* n) { return MultiPoly::variable(n); }

SecularPoly reduced(const TriMatrix& h, const GaussRat& c) { return to_even_var(shift(char_poly(h), c)); }

} // namespace

TEST_CASE("diagonal matrix gives product of linear factors") {
    TriMatrix h(Family::AOM, ParityKind::Alternating, {MultiPoly(1), MultiPoly(3)}, {Surd()}, {Surd()});
    auto p = char_poly(h);
    CHECK(p.degree() == 2);
    CHECK(p.coeffs[0] == MultiPoly(3));
    CHECK(p.coeffs[1] == MultiPoly(-4));
    CHECK(p.coeffs[2] == MultiPoly(1));
    CHECK(p.str() == "E^2 - 4*E + 3");
}

TEST_CASE("GPM N=4 folded diagonal reduces to the quadratic in s") {
    auto a = var("alpha"), b = var("beta");
    auto p = reduced(build_gpm_folded(4, {a, b}), GaussRat());
    REQUIRE(p.degree() == 2);
    CHECK(p.coeffs[2] == MultiPoly(1));
    CHECK(p.coeffs[1] == a * a + b * b - MultiPoly(3));
    CHECK(p.coeffs[0] == a * a * b * b + MultiPoly(2) * a * b - a * a + MultiPoly(1));
    CHECK(p.is_real());
}

TEST_CASE("NNIM N=4 shifted quartic") {
    auto a = var("alpha"), b = var("beta");
    auto p = shift(char_poly(build_nnim(4, {-b, a})), GaussRat(2));
    REQUIRE(p.degree() == 4);
    CHECK(p.coeffs[4] == MultiPoly(1));
    CHECK(p.coeffs[3].is_zero());
    CHECK(p.coeffs[2] == a * a - MultiPoly(3) + MultiPoly(2) * b * b);
    CHECK(p.coeffs[1].is_zero());
    CHECK(p.coeffs[0] == MultiPoly(1) - MultiPoly(2) * b * b + b.pow(4));
    CHECK(p.shift == GaussRat(2));
}

TEST_CASE("AOM squared mode secular equations") {
    auto a = var("alpha"), b = var("beta"), g = var("gamma");
    SUBCASE("K=1") {
        auto p = reduced(build_aom_squared(2, {a}), GaussRat(2));
        CHECK(p.coeffs[1] == MultiPoly(1));
        CHECK(p.coeffs[0] == a - MultiPoly(1));
    }
    SUBCASE("N=4 quadratic") {
        auto p = reduced(build_aom_squared(4, {a, b}), GaussRat(4));
        CHECK(p.coeffs[2] == MultiPoly(1));
        CHECK(p.coeffs[1] == MultiPoly(-10) + MultiPoly(2) * b + a);
        CHECK(p.coeffs[0] == MultiPoly(9) + MultiPoly(6) * b - MultiPoly(9) * a + b * b);
    }
    SUBCASE("K=3 cubic") {
        auto p = reduced(build_aom_squared(6, {a, b, g}), GaussRat(6));
        REQUIRE(p.degree() == 3);
        CHECK(p.coeffs[2] == MultiPoly(-35) + MultiPoly(2) * g + a + MultiPoly(2) * b);
    }
    SUBCASE("odd terms are rejected without the centring shift") {
        CHECK_THROWS_AS(to_even_var(char_poly(build_aom_squared(4, {a, b}))), OddTermError);
    }
}

TEST_CASE("leading coefficient and degree") {
    for (int n = 2; n <= 7; ++n) {
        auto p = char_poly(build_nnim(n, {var("t")}));
        CHECK(p.degree() == n);
        CHECK(p.leading() == MultiPoly(n % 2 ? -1 : 1));
    }
}

TEST_CASE("evaluate and specialize") {
    auto a = var("alpha"), b = var("beta");
    auto p = reduced(build_gpm_folded(4, {a, b}), GaussRat());
    ParamMap zero{{"alpha", AlgebraicNumber(0)}, {"beta", AlgebraicNumber(0)}};
    CHECK(evaluate(p, zero, AlgebraicNumber(1)) == AlgebraicNumber(-1));
    CHECK_THROWS_AS(specialize(p, {{"alpha", AlgebraicNumber(1)}}), InputError);

    ParamMap at{{"alpha", AlgebraicNumber(1)}, {"beta", AlgebraicNumber(2)}};
    auto q = specialize_gaussian(p, at);
    CHECK(q.degree() == 2);
    CHECK(q.coeff(2) == GaussRat(1));
    CHECK(q.coeff(1) == GaussRat(2));
    CHECK(q.coeff(0) == GaussRat(8));
}

TEST_CASE("specialize_gaussian clears denominators") {
    auto t = var("t");
    auto p = char_poly(build_nnim(2, {t}));
    auto q = specialize_gaussian(p, {{"t", AlgebraicNumber(Rational(1, 2))}});
    // (2-E)^2 - (1 - t^2) at t=1/2: E^2 - 4E + 13/4 -> 4E^2 - 16E + 13
    CHECK(q.coeff(2) == GaussRat(4));
    CHECK(q.coeff(1) == GaussRat(-16));
    CHECK(q.coeff(0) == GaussRat(13));
}

TEST_CASE("partial binding keeps algebraic values symbolic") {
    auto p = char_poly(build_aom(4, var("g")), {{"g", AlgebraicNumber::sqrt_of(Rational(15, 16))}});
    CHECK(p.parameters() == std::vector<std::string>{"g"});
    auto c = specialize(p, {{"g", AlgebraicNumber::sqrt_of(Rational(15, 16))}});
    for (const auto& x : c) CHECK(x.is_gauss_rational());
}
