#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "maglat/unipoly.hpp"

using namespace maglat;

namespace {

UniPoly from_ints(std::initializer_list<long> coeffs) {
    std::vector<Rational> c;
    for (long v : coeffs) c.emplace_back(v);
    return UniPoly(std::move(c));
}

UniPoly linear_factor(const Rational& root) {
    return UniPoly({-root, Rational(1)});  // x - root
}

}  // namespace

TEST_CASE("arithmetic and evaluation") {
    UniPoly p = from_ints({1, 0, -3, 2});  // 2x^3 - 3x^2 + 1
    CHECK(p.degree() == 3);
    CHECK(p(Rational(1)) == 0);
    CHECK(p(Rational(2)) == 5);
    CHECK(p(2.0) == doctest::Approx(5.0));
    UniPoly q = from_ints({-1, 1});
    CHECK((p + q)(Rational(2)) == 6);
    CHECK((p * q)(Rational(2)) == 5);
    CHECK(p.derivative() == from_ints({0, -6, 6}));
}

TEST_CASE("divmod reconstructs the dividend") {
    std::mt19937 rng(314);
    std::uniform_int_distribution<int> coef(-5, 5);
    for (int iter = 0; iter < 80; ++iter) {
        std::vector<Rational> ac(1 + rng() % 6), bc(1 + rng() % 4);
        for (auto& x : ac) x = Rational(coef(rng));
        for (auto& x : bc) x = Rational(coef(rng));
        UniPoly a{std::vector<Rational>(ac)}, b{std::vector<Rational>(bc)};
        if (b.is_zero()) continue;
        auto [qt, rem] = a.divmod(b);
        CHECK(qt * b + rem == a);
        CHECK(rem.degree() < b.degree());
    }
}

TEST_CASE("gcd of constructed products") {
    UniPoly g = from_ints({1, 2, 1});          // (x+1)^2
    UniPoly a = g * from_ints({-3, 1});        // (x+1)^2 (x-3)
    UniPoly b = g * from_ints({5, 1, 0, 1});   // (x+1)^2 (x^3+x+5)
    UniPoly d = gcd(a, b);
    CHECK(d == g.monic());
    CHECK(gcd(a, UniPoly()) == a.monic());
}

TEST_CASE("squarefree decomposition recovers multiplicities") {
    // f = (x-1)(x+2)^2(x-3)^3
    UniPoly f = linear_factor(Rational(1));
    UniPoly sq = linear_factor(Rational(-2));
    UniPoly cb = linear_factor(Rational(3));
    f = f * sq * sq * cb * cb * cb;
    auto parts = squarefree_decomposition(f);
    REQUIRE(parts.size() == 3);
    CHECK(parts[0] == linear_factor(Rational(1)));
    CHECK(parts[1] == linear_factor(Rational(-2)));
    CHECK(parts[2] == linear_factor(Rational(3)));
}

TEST_CASE("real root isolation on a polynomial with known roots") {
    // roots: -3/2 (simple), 1/3 (double), 2 (simple)
    UniPoly f = linear_factor(make_rational(Int(-3), Int(2)));
    UniPoly d = linear_factor(make_rational(Int(1), Int(3)));
    f = f * d * d * linear_factor(Rational(2));
    auto roots = real_roots(f, Rational(-10), Rational(10), make_rational(Int(1), Int(1) << 30));
    REQUIRE(roots.size() == 3);
    CHECK(roots[0].multiplicity == 1);
    CHECK(roots[1].multiplicity == 2);
    CHECK(roots[2].multiplicity == 1);
    CHECK(roots[0].midpoint() == doctest::Approx(-1.5).epsilon(1e-8));
    CHECK(roots[1].midpoint() == doctest::Approx(1.0 / 3).epsilon(1e-8));
    CHECK(roots[2].midpoint() == doctest::Approx(2.0).epsilon(1e-8));
    for (const auto& r : roots) {
        CHECK(r.lo <= r.hi);
        CHECK(r.hi - r.lo <= make_rational(Int(1), Int(1) << 30));
    }
}

TEST_CASE("root isolation separates close roots") {
    // x(x - 1/1024)(x + 1) : two roots 2^-10 apart
    UniPoly f = UniPoly({Rational(0), Rational(1)}) *
                linear_factor(make_rational(Int(1), Int(1024))) * linear_factor(Rational(-1));
    auto roots = real_roots(f, Rational(-2), Rational(2), make_rational(Int(1), Int(1) << 40));
    REQUIRE(roots.size() == 3);
    CHECK(roots[0].midpoint() == doctest::Approx(-1.0));
    CHECK(std::abs(roots[1].midpoint()) < 1e-9);
    CHECK(roots[2].midpoint() == doctest::Approx(1.0 / 1024).epsilon(1e-6));
}

TEST_CASE("roots found exactly when they are dyadic") {
    // (x - 1/2)(x - 5) with a bisection grid that lands on 1/2
    UniPoly f = linear_factor(make_rational(Int(1), Int(2))) * linear_factor(Rational(5));
    auto roots = real_roots(f, Rational(-8), Rational(8), make_rational(Int(1), Int(1) << 20));
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].midpoint() == doctest::Approx(0.5));
    CHECK(roots[1].midpoint() == doctest::Approx(5.0));
}

TEST_CASE("no spurious roots outside the interval") {
    UniPoly f = linear_factor(Rational(50));
    auto roots = real_roots(f, Rational(-1), Rational(1), make_rational(Int(1), Int(1024)));
    CHECK(roots.empty());
}
