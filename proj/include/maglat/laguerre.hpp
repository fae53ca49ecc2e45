#pragma once
// Generalized Laguerre polynomials L_n^(alpha) evaluated by the three-term
// recurrence
//   (n+1) L_{n+1}^(a)(x) = (2n+1+a-x) L_n^(a)(x) - (n+a) L_{n-1}^(a)(x)
// in double, exact rational, polynomial, and truncated-series arithmetic.
// The recurrence is the single source of truth here; closed-form sums are
// used only as independent oracles in the tests.

#include <vector>

#include "maglat/polynomial.hpp"
#include "maglat/rational.hpp"
#include "maglat/series.hpp"

namespace maglat::laguerre {

double value(unsigned n, double alpha, double x);

/// L_0 .. L_nmax at fixed alpha and x.
std::vector<double> values_through(unsigned nmax, double alpha, double x);

Rational value_exact(unsigned n, const Rational& alpha, const Rational& x);

/// L_n^(alpha) as an exact polynomial in the given variable.
Polynomial coefficient_polynomial(unsigned n, const Rational& alpha, unsigned var = 0);

/// L_n^(alpha)(scale * B) as a truncated series in B.
RatSeries series(unsigned n, const Rational& alpha, const Rational& scale, unsigned order);

}  // namespace maglat::laguerre
