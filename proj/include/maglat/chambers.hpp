#pragma once
// Exact route to the spectrum at rational flux: the Chambers polynomial
// Delta(E), computed symbolically from the transfer-matrix trace with
// root-of-unity arithmetic carried in Q[z]/(z^q - 1). The determinant
// identity (pinned numerically by the tests against the Bloch route) is
//
//   det(E I - H(k)) = Delta(E) - (-1)^q [ 2 cos(q k1) + 2 tau^q cos(q k2) ]
//
// with Delta monic of degree q in E and the spectrum equal to
// { E : |Delta(E)| <= 2 + 2 tau^q }.
//
// Delta's coefficients live in the real cyclotomic field Q(zeta_q)^+, not
// generally in Q: the Galois action zeta -> zeta^a maps the flux class p to
// a*p, so numerator classes {+-a p} carry conjugate polynomials. They are
// rational exactly when the class group is trivial (q = 1, 2, 3, 4, 6).
// The Galois norm across classes always lands in Q[E] (integers at tau = 1).
//
// Band edges are roots of Delta(E) = +-(2 + 2 tau^q). In the rational case
// they are isolated by Sturm sequences; otherwise by bisection with
// certified cyclotomic signs. Either way every edge carries an exact
// rational enclosure.

#include <vector>

#include "maglat/harper.hpp"
#include "maglat/polynomial.hpp"
#include "maglat/rational.hpp"
#include "maglat/unipoly.hpp"

namespace maglat {

struct ChambersData {
    unsigned p = 0, q = 1;
    Rational tau{1};
    /// Delta in variable 0 (= E) with coefficients represented in variable 1
    /// (= z, the primitive q-th root of unity), reduced mod Phi_q.
    Polynomial delta;
    Rational edge_bound;  // 2 + 2 tau^q

    /// True when every coefficient is rational (class group trivial).
    bool rational() const { return delta.degree(1) <= 0; }
    /// Delta as a rational univariate polynomial; throws when !rational().
    UniPoly rational_polynomial() const;
    /// Coefficient of E^k as a z-representative.
    Polynomial coefficient(unsigned k) const { return delta.coefficient_of(0, k); }

    double evaluate(double e) const;                       // embedded numerically
    Polynomial evaluate_exact(const Rational& e) const;    // z-representative
    /// Certified sign of Delta(e) - offset.
    int sign_at(const Rational& e, const Rational& offset) const;
};

/// Exact Chambers polynomial at flux p/q and rational anisotropy tau.
ChambersData chambers_polynomial(const Flux& flux, const Rational& tau = Rational(1));

/// Delta(E, t, z) with the anisotropy kept symbolic: variable 0 is E,
/// variable 1 is t, variable 2 is z (absent whenever the coefficients are
/// rational). Specialising t must reproduce chambers_polynomial.
Polynomial chambers_polynomial_symbolic_tau(const Flux& flux);

/// Galois norm prod_a sigma_a(Delta) over the numerator classes; always has
/// rational coefficients, integer ones at tau = 1.
UniPoly chambers_norm(const ChambersData& data);

struct CertifiedBand {
    IsolatedRoot lo, hi;
    Band approximate() const { return Band{lo.midpoint(), hi.midpoint()}; }
    /// True if this band shares its lower edge with the previous one.
    bool touches_below = false;
};

/// The q bands as certified intervals, ascending; edge enclosures have
/// width <= width_tol.
std::vector<CertifiedBand> chambers_bands(const ChambersData& data,
                                          const Rational& width_tol = make_rational(1, Int(1) << 40));

}  // namespace maglat
