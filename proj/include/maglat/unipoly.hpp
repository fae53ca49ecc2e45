#pragma once
// Dense univariate polynomials over the rationals, with the exact machinery
// the band computations need: Euclidean gcd, Yun squarefree decomposition,
// and certified real-root isolation (every reported enclosure carries exact
// rational endpoints with verified signs).

#include <string>
#include <utility>
#include <vector>

#include "maglat/rational.hpp"

namespace maglat {

class UniPoly {
  public:
    UniPoly() = default;
    /// Coefficients in ascending degree order.
    explicit UniPoly(std::vector<Rational> coeffs);

    static UniPoly zero() { return UniPoly(); }
    static UniPoly constant(const Rational& c);

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return c_; }
    Rational leading_coefficient() const;

    Rational operator()(const Rational& x) const;  // exact Horner
    double operator()(double x) const;
    /// Exact sign of the value at x: -1, 0, +1.
    int sign_at(const Rational& x) const;

    UniPoly derivative() const;
    /// Multiplies by the inverse of the leading coefficient.
    UniPoly monic() const;

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const Rational& s, UniPoly p);
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

    /// Quotient and remainder; divisor need not be monic.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;

    std::string to_string(const std::string& var = "x") const;

  private:
    void normalize();
    std::vector<Rational> c_;
};

/// Monic gcd via the Euclidean algorithm.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// Yun's algorithm: f = c * prod_i factor[i]^(i+1) with squarefree, pairwise
/// coprime factors (entries may be constant 1 when a multiplicity is absent).
std::vector<UniPoly> squarefree_decomposition(const UniPoly& f);

/// A real root bracketed by exact rationals: f has the recorded multiplicity
/// at some point of [lo, hi], and [lo, hi] contains exactly that one root.
struct IsolatedRoot {
    Rational lo, hi;
    unsigned multiplicity = 1;
    double midpoint() const { return (to_double(lo) + to_double(hi)) / 2.0; }
};

/// All real roots of f in [lo, hi], each enclosed to width <= width_tol,
/// sorted ascending. Handles multiple roots via squarefree decomposition.
std::vector<IsolatedRoot> real_roots(const UniPoly& f, const Rational& lo,
                                     const Rational& hi, const Rational& width_tol);

}  // namespace maglat
