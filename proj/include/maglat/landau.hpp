#pragma once
// Exact small-field expansion of the lattice Landau levels. The n-th level
// of -2cos k1 - 2 tau cos k2 (with [k1,k2] = iB, u = sqrt(tau)) is expanded
// as
//   E_n(B) = -2(1 + tau) + sum_{m>=1} c_m B^m,   c_m rational,
// by nondegenerate Rayleigh-Schrodinger recursion on the reduced operator
// K(B) = (H(B) + 2(1+tau)) / B, whose leading part is the diagonal
// u(2n+1). All arithmetic is exact; coefficients are frozen rationals.

#include <vector>

#include "maglat/rational.hpp"
#include "maglat/series.hpp"
#include "maglat/unipoly.hpp"

namespace maglat {

struct LandauSeries {
    unsigned level = 0;   // n
    Rational u{1};        // sqrt(tau)
    RatSeries energy;     // coefficients of B^0 .. B^order

    double evaluate(double field) const { return energy.evaluate(field); }
    Rational evaluate_exact(const Rational& field) const { return energy.evaluate(field); }
};

/// E_n(B) through B^order, exactly.
LandauSeries landau_level_series(unsigned level, unsigned order, const Rational& u_sqrt_tau);

/// The same coefficients as polynomials in nu = 2n+1: coefficient m of the
/// field expansion equals result[m](nu). Fitted by exact interpolation on
/// levels 0..m and verified on `verify_levels` further levels; throws if the
/// polynomial structure fails to hold.
std::vector<UniPoly> landau_coefficients_in_nu(unsigned order, const Rational& u_sqrt_tau,
                                               unsigned verify_levels = 3);

}  // namespace maglat
