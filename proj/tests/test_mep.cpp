#include "doctest.h"

#include <chrono>
#include <cmath>

#include "qcat/errors.hpp"
#include "qcat/mep.hpp"

using namespace qcat;

namespace {

MultiPoly var(const char* n) { return MultiPoly::variable(n); }

ModelSpec spec_of(Family f, int n, std::vector<std::string> free_names) {
    ModelSpec s;
    s.family = f;
    s.dim = n;
    for (auto& name : free_names) s.params.push_back({name, std::nullopt});
    return s;
}

} // namespace

TEST_CASE("MEP system of the GPM N=4 quadratic") {
    auto a = var("alpha"), b = var("beta");
    auto sys = mep_system(to_even_var(char_poly(build_gpm_folded(4, {a, b}))));
    REQUIRE(sys.equations.size() == 2);
    CHECK(sys.equations[0] == a * a * b * b + MultiPoly(2) * a * b - a * a + MultiPoly(1));
    CHECK(sys.equations[1] == a * a + b * b - MultiPoly(3));
}

TEST_CASE("resultant of two linear polynomials") {
    auto x = var("x"), y = var("y");
    // Res_x(x - y, x + y - 2) = 2 - 2y (up to sign)
    auto r = resultant(x - y, x + y - MultiPoly(2), "x");
    CHECK((r == MultiPoly(2) * y - MultiPoly(2) || r == MultiPoly(2) - MultiPoly(2) * y));
}

TEST_CASE("elimination yields the quartic factor") {
    auto a = var("alpha"), b = var("beta");
    auto sys = mep_system(to_even_var(char_poly(build_gpm_folded(4, {a, b}))));
    RatPoly q = eliminate(sys, "beta");
    RatPoly quartic(std::vector<Rational>{2, -6, 2, 2, -1});
    CHECK((q % quartic).is_zero());
}

TEST_CASE("AOM N=4 elimination") {
    auto a = var("alpha"), b = var("beta");
    auto sys = mep_system(to_even_var(shift(char_poly(build_aom_squared(4, {a, b})), GaussRat(4))));
    RatPoly q = eliminate(sys, "beta");
    RatPoly expected(std::vector<Rational>{-81, 24, 1});
    CHECK((q % expected).is_zero());
    auto roots = isolate_real_roots(expected);
    REQUIRE(roots.size() == 2);
    CHECK(static_cast<double>(refine_root(expected, roots[0])) == doctest::Approx(-27));
    CHECK(static_cast<double>(refine_root(expected, roots[1])) == doctest::Approx(3));
}

TEST_CASE("real root isolation") {
    RatPoly quartic(std::vector<Rational>{2, -6, 2, 2, -1});
    auto iv = isolate_real_roots(quartic);
    REQUIRE(iv.size() == 2);
    CHECK(real_root_count(quartic) == 2);
    for (const auto& r : iv) CHECK(to_double(r.hi - r.lo) < 1e-12);
    CHECK(static_cast<double>(refine_root(quartic, iv[0])) == doctest::Approx(-1.691739510).epsilon(1e-9));
    CHECK(static_cast<double>(refine_root(quartic, iv[1])) == doctest::Approx(0.4060952085).epsilon(1e-9));

    RatPoly linear(std::vector<Rational>{-1, 1});
    auto one = isolate_real_roots(linear);
    REQUIRE(one.size() == 1);
    CHECK(static_cast<double>(refine_root(linear, one[0])) == 1.0);

    CHECK(isolate_real_roots(RatPoly(std::vector<Rational>{1, 0, 1})).empty());
    // repeated and exact dyadic roots
    RatPoly rep = RatPoly(std::vector<Rational>{0, 1}) * RatPoly(std::vector<Rational>{0, 1}) *
                  RatPoly(std::vector<Rational>{Rational(-1, 2), 1});
    auto r2 = isolate_real_roots(rep);
    REQUIRE(r2.size() == 2);
    CHECK(sturm_count(rep, -1, 1) == 2);
}

TEST_CASE("solve_mep: GPM N=4 spikes") {
    auto t0 = std::chrono::steady_clock::now();
    auto sols = solve_mep(spec_of(Family::GPM, 4, {"alpha", "beta"}));
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CHECK(secs < 5);
    REQUIRE(sols.size() == 4);
    for (const auto& s : sols) {
        CHECK(s.max_residual() < 1e-12);
        CHECK(s.degeneracy.cluster_radius < 1e-6);
        CHECK(s.degeneracy.jordan_rank_profile == std::vector<int>{3, 2, 1, 0});
    }
}

TEST_CASE("solve_mep: AOM") {
    SUBCASE("N=4") {
        auto sols = solve_mep(spec_of(Family::AOM, 4, {"alpha", "beta"}));
        int positive = 0;
        for (const auto& s : sols)
            if (s.value("alpha") > 0 && s.value("beta") > 0) {
                ++positive;
                CHECK(s.exact[0] == Rational(4));
                CHECK(s.exact[1] == Rational(3));
                CHECK(s.max_residual() == 0);
            }
        CHECK(positive == 1);
    }
    SUBCASE("N=6") {
        auto sols = solve_mep(spec_of(Family::AOM, 6, {"alpha", "beta", "gamma"}));
        int positive = 0;
        for (const auto& s : sols)
            if (s.value("alpha") > 0 && s.value("beta") > 0 && s.value("gamma") > 0) {
                ++positive;
                CHECK(s.exact[0] == Rational(9));
                CHECK(s.exact[1] == Rational(8));
                CHECK(s.exact[2] == Rational(5));
            }
        CHECK(positive == 1);
    }
    SUBCASE("K=1") {
        auto sols = solve_mep(spec_of(Family::AOM, 2, {"alpha"}));
        REQUIRE(sols.size() == 1);
        CHECK(sols[0].exact[0] == Rational(1));
    }
}

TEST_CASE("solve_mep: uniform NNIM chain") {
    auto sols = solve_mep(spec_of(Family::NNIM, 10, {"t"}));
    REQUIRE(sols.size() == 2);
    CHECK(sols[0].exact[0] == Rational(1));
    CHECK(sols[1].exact[0] == Rational(-1));
}
