#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "maglat/harper.hpp"

using namespace maglat;

TEST_CASE("flux reduction") {
    Flux f(2, 4);
    CHECK(f.p == 1);
    CHECK(f.q == 2);
    Flux g(-1, 3);
    CHECK(g.p == 2);
    CHECK(g.q == 3);
    Flux h(7, 3);
    CHECK(h.p == 1);
    CHECK(h.q == 3);
    CHECK_THROWS_AS(Flux(1, 0), std::invalid_argument);
    CHECK(Flux(1, 4).field() == doctest::Approx(std::numbers::pi / 2));
}

TEST_CASE("Bloch matrix is Hermitian") {
    Eigen::MatrixXcd h = bloch_matrix(Flux(2, 5), 0.3, 1.1, 0.8);
    CHECK((h - h.adjoint()).norm() < 1e-14);
}

TEST_CASE("zero flux reproduces the free dispersion") {
    for (double k1 : {0.0, 0.7}) {
        for (double k2 : {0.0, -1.3}) {
            Eigen::VectorXd e = bloch_spectrum(Flux(0, 1), k1, k2, 1.0);
            REQUIRE(e.size() == 1);
            CHECK(e[0] == doctest::Approx(-2 * std::cos(k1) - 2 * std::cos(k2)).epsilon(1e-13));
        }
    }
}

TEST_CASE("spectrum lies within the hopping bound") {
    for (double tau : {1.0, 0.5}) {
        Eigen::VectorXd e = bloch_spectrum(Flux(2, 7), 0.2, 0.4, tau);
        for (int i = 0; i < e.size(); ++i) CHECK(std::abs(e[i]) <= 2 + 2 * tau + 1e-12);
    }
}

TEST_CASE("half flux closed form: E^2 = 4 + 2cos(2k1) + 2cos(2k2)") {
    for (double k1 : {0.0, 0.4, 1.0}) {
        for (double k2 : {0.1, 0.9}) {
            Eigen::VectorXd e = bloch_spectrum(Flux(1, 2), k1, k2, 1.0);
            REQUIRE(e.size() == 2);
            double target = 4 + 2 * std::cos(2 * k1) + 2 * std::cos(2 * k2);
            CHECK(e[0] == doctest::Approx(-std::sqrt(target)).epsilon(1e-12));
            CHECK(e[1] == doctest::Approx(std::sqrt(target)).epsilon(1e-12));
        }
    }
}

TEST_CASE("the spectrum as a set is symmetric under E -> -E") {
    // bipartite lattice: eigenvalues at (k1, k2) flip sign at (k1+pi, k2+pi)
    Flux f(1, 5);
    for (double k1 : {0.0, 0.3}) {
        for (double k2 : {0.2, 1.7}) {
            Eigen::VectorXd a = bloch_spectrum(f, k1, k2, 0.9);
            Eigen::VectorXd b =
                bloch_spectrum(f, k1 + std::numbers::pi, k2 + std::numbers::pi, 0.9);
            for (int i = 0; i < a.size(); ++i)
                CHECK(a[i] == doctest::Approx(-b[b.size() - 1 - i]).epsilon(1e-11));
        }
    }
}

TEST_CASE("band edges sit at the extremal quasimomenta") {
    // Chambers: the j-th eigenvalue is monotone in 2cos(q k1) + 2 tau^q cos(q k2),
    // so a k-grid scan cannot exceed the two extremal points.
    Flux f(1, 4);
    auto bands = numeric_bands(f, 1.0);
    const int grid = 9;
    for (int a = 0; a < grid; ++a) {
        for (int b = 0; b < grid; ++b) {
            double k1 = 2 * std::numbers::pi * a / (grid * f.q);
            double k2 = 2 * std::numbers::pi * b / (grid * f.q);
            Eigen::VectorXd e = bloch_spectrum(f, k1, k2, 1.0);
            for (unsigned j = 0; j < f.q; ++j) {
                CHECK(e[j] >= bands[j].lo - 1e-10);
                CHECK(e[j] <= bands[j].hi + 1e-10);
            }
        }
    }
}

TEST_CASE("bands are ascending and within the norm bound") {
    for (unsigned q : {3u, 5u, 8u}) {
        auto bands = numeric_bands(Flux(1, q), 1.0);
        REQUIRE(bands.size() == q);
        for (unsigned j = 0; j < q; ++j) {
            CHECK(bands[j].lo <= bands[j].hi + 1e-15);
            if (j) CHECK(bands[j - 1].hi <= bands[j].lo + 1e-10);
            CHECK(std::abs(bands[j].lo) <= 4 + 1e-12);
            CHECK(std::abs(bands[j].hi) <= 4 + 1e-12);
        }
    }
}

TEST_CASE("flux p and q-p give the same spectrum") {
    for (unsigned q : {5u, 7u}) {
        auto a = numeric_bands(Flux(1, q), 1.0);
        auto b = numeric_bands(Flux(static_cast<long>(q) - 1, q), 1.0);
        for (unsigned j = 0; j < q; ++j) {
            CHECK(a[j].lo == doctest::Approx(b[j].lo).epsilon(1e-11));
            CHECK(a[j].hi == doctest::Approx(b[j].hi).epsilon(1e-11));
        }
    }
}

TEST_CASE("anisotropy scaling: spec(tau) = tau * spec(1/tau) with axes swapped") {
    double tau = 0.6;
    auto a = numeric_bands(Flux(1, 3), tau);
    auto b = numeric_bands(Flux(1, 3), 1.0 / tau);
    for (unsigned j = 0; j < 3; ++j) {
        CHECK(a[j].lo == doctest::Approx(tau * b[j].lo).epsilon(1e-11));
        CHECK(a[j].hi == doctest::Approx(tau * b[j].hi).epsilon(1e-11));
    }
}

TEST_CASE("butterfly enumerates reduced fluxes") {
    auto pts = butterfly(5);
    // 0/1; q=2: 1; q=3: 2; q=4: 2; q=5: 4  -> 10 points
    CHECK(pts.size() == 10);
    for (const auto& pt : pts) {
        CHECK(pt.bands.size() == pt.q);
        unsigned g = std::gcd(pt.p == 0 ? pt.q : pt.p, pt.q);
        CHECK(g == 1);
    }
}
