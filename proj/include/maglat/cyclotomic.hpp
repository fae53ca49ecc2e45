#pragma once
// Cyclotomic polynomials and reduction into Q(zeta_q), used to carry exact
// root-of-unity arithmetic on top of the multivariate polynomial type.
// Products are accumulated in Q[z]/(z^q - 1) (exponents mod q, no division);
// a final remainder mod Phi_q pins the value in Q(zeta_q).

#include "maglat/polynomial.hpp"

namespace maglat {

/// Phi_q in the given variable, computed by the divisor recursion
/// x^q - 1 = prod_{d | q} Phi_d(x). Results are cached per (q, var).
const Polynomial& cyclotomic_polynomial(unsigned q, unsigned var);

/// Remainder of p modulo Phi_q(z_var).
Polynomial reduce_mod_cyclotomic(const Polynomial& p, unsigned q, unsigned var);

/// Reduces every exponent of z_var modulo q (valid in Q[z]/(z^q - 1)).
Polynomial reduce_exponents_mod(const Polynomial& p, unsigned q, unsigned var);

/// z^(a mod q) + z^(-a mod q), the exact stand-in for 2*cos(2*pi*a/q).
Polynomial two_cos_as_zeta(long a, unsigned q, unsigned var);

}  // namespace maglat
