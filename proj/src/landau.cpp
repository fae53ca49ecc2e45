#include "maglat/landau.hpp"

#include <stdexcept>
#include <vector>

#include "maglat/oscillator.hpp"

namespace maglat {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

Matrix zero_matrix(unsigned n) {
    return Matrix(n, std::vector<Rational>(n, Rational(0)));
}

}  // namespace

LandauSeries landau_level_series(unsigned level, unsigned order, const Rational& u) {
    if (u <= 0) throw std::invalid_argument("landau_level_series: u must be positive");
    const Rational shift = -2 * (Rational(1) + u * u);

    LandauSeries out;
    out.level = level;
    out.u = u;
    out.energy = RatSeries(order);
    out.energy.at(0) = shift;
    if (order == 0) return out;

    // Offsets reachable at reduced order m are bounded by 4m, so this basis
    // provably captures every contribution through B^order.
    const unsigned size = level + 4 * order + 5;
    const unsigned red_order = order - 1;  // K is expanded through B^(order-1)
    OscillatorMatrixSeries osc = lattice_in_landau_basis(size, order, u);

    // K_j[i][l] = [B^(j+1)] H[i][l]  (after removing the constant shift)
    std::vector<Matrix> k(red_order + 1, zero_matrix(size));
    for (unsigned i = 0; i < size; ++i) {
        for (unsigned l = 0; l < size; ++l) {
            const RatSeries& h = osc.entry(i, l);
            Rational expect = (i == l) ? shift : Rational(0);
            if (h[0] != expect)
                throw std::logic_error("landau_level_series: unexpected constant term in H");
            for (unsigned j = 0; j <= red_order; ++j) k[j][i][l] = h[j + 1];
        }
    }
    // leading part must be the diagonal u(2i+1)
    for (unsigned i = 0; i < size; ++i) {
        for (unsigned l = 0; l < size; ++l) {
            Rational expect = (i == l) ? u * Rational(2 * static_cast<long>(i) + 1) : Rational(0);
            if (k[0][i][l] != expect)
                throw std::logic_error("landau_level_series: K0 is not the harmonic diagonal");
        }
    }

    // Rayleigh-Schrodinger recursion on K(B), eigenvalue branch at `level`
    const Rational lambda0 = u * Rational(2 * static_cast<long>(level) + 1);
    std::vector<Rational> lambda(red_order + 1, Rational(0));
    lambda[0] = lambda0;
    std::vector<std::vector<Rational>> psi(red_order + 1,
                                           std::vector<Rational>(size, Rational(0)));
    psi[0][level] = 1;

    for (unsigned m = 1; m <= red_order; ++m) {
        std::vector<Rational> r(size, Rational(0));
        for (unsigned j = 1; j <= m; ++j) {
            const Matrix& kj = k[j];
            const auto& pv = psi[m - j];
            for (unsigned i = 0; i < size; ++i) {
                Rational acc(0);
                for (unsigned l = 0; l < size; ++l) {
                    if (pv[l] == 0 || kj[i][l] == 0) continue;
                    acc += kj[i][l] * pv[l];
                }
                r[i] += acc;
            }
        }
        for (unsigned j = 1; j < m; ++j) {
            if (lambda[j] == 0) continue;
            const auto& pv = psi[m - j];
            for (unsigned i = 0; i < size; ++i)
                if (pv[i] != 0) r[i] -= lambda[j] * pv[i];
        }
        lambda[m] = r[level];
        for (unsigned i = 0; i < size; ++i) {
            if (i == level) continue;
            Rational den = lambda0 - u * Rational(2 * static_cast<long>(i) + 1);
            psi[m][i] = r[i] / den;
        }
    }

    for (unsigned m = 0; m <= red_order; ++m) out.energy.at(m + 1) = lambda[m];
    return out;
}

std::vector<UniPoly> landau_coefficients_in_nu(unsigned order, const Rational& u,
                                               unsigned verify_levels) {
    // coefficients for levels 0 .. order + verify_levels
    const unsigned top = order + verify_levels;
    std::vector<RatSeries> series;
    series.reserve(top + 1);
    for (unsigned n = 0; n <= top; ++n)
        series.push_back(landau_level_series(n, order, u).energy);

    std::vector<UniPoly> out;
    for (unsigned m = 0; m <= order; ++m) {
        // exact Lagrange interpolation of c_m over nu_n = 2n+1, n = 0..m
        UniPoly fit;
        for (unsigned i = 0; i <= m; ++i) {
            Rational nu_i(2 * static_cast<long>(i) + 1);
            UniPoly basis = UniPoly::constant(Rational(1));
            Rational denom(1);
            for (unsigned j = 0; j <= m; ++j) {
                if (j == i) continue;
                Rational nu_j(2 * static_cast<long>(j) + 1);
                basis = basis * UniPoly({-nu_j, Rational(1)});
                denom *= nu_i - nu_j;
            }
            fit += (series[i][m] / denom) * basis;
        }
        for (unsigned n = 0; n <= top; ++n) {
            Rational nu(2 * static_cast<long>(n) + 1);
            if (fit(nu) != series[n][m])
                throw std::logic_error(
                    "landau_coefficients_in_nu: coefficient is not polynomial in 2n+1");
        }
        out.push_back(std::move(fit));
    }
    return out;
}

}  // namespace maglat
