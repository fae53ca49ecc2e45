#pragma once
// The lattice operator -2 cos(k1) - 2 tau cos(k2), with [k1, k2] = iB,
// written in the number basis of its small-field harmonic approximation.
// With u = sqrt(tau) the squeezed ladder operators give
//   exp(i k1) = D(i sqrt(uB/2)),   exp(i k2) = D(-sqrt(B/(2u))),
// and displacement matrix elements reduce to generalized Laguerre values:
//   <n+2d| -2cos k1 - 2 tau cos k2 |n> = sqrt(n!/(n+2d)!) * C_{d,n}(B),
//   C_{d,n}(B) = -2 [ (-1)^d (uB/2)^d e^{-uB/4} L_n^{(2d)}(uB/2)
//                     + tau (B/(2u))^d e^{-B/(4u)} L_n^{(2d)}(B/(2u)) ].
// Odd offsets vanish. Conjugating by diag(sqrt(n!)) removes the square
// roots, leaving a similar matrix with entries in Q[[B]]:
//   R[n+2d][n] = C_{d,n},   R[n][n+2d] = (n!/(n+2d)!) C_{d,n}.
// The exact series accessor below returns R; the numeric helper builds the
// symmetric matrix directly in doubles as an independent evaluation path.

#include <Eigen/Dense>

#include <vector>

#include "maglat/rational.hpp"
#include "maglat/series.hpp"

namespace maglat {

class OscillatorMatrixSeries {
  public:
    OscillatorMatrixSeries(unsigned size, unsigned order, Rational u_sqrt_tau);

    unsigned size() const { return size_; }
    unsigned order() const { return order_; }
    const Rational& u() const { return u_; }
    Rational tau() const { return u_ * u_; }

    /// Scaled entry R[row][col] as a truncated series in B.
    const RatSeries& entry(unsigned row, unsigned col) const;

  private:
    unsigned size_, order_;
    Rational u_;
    RatSeries zero_;
    std::vector<RatSeries> flat_;  // row-major
};

/// Exact series form of the operator on levels 0..size-1.
OscillatorMatrixSeries lattice_in_landau_basis(unsigned size, unsigned order,
                                               const Rational& u_sqrt_tau);

/// Symmetric matrix evaluated directly in doubles at field B (independent of
/// the series path; used as a numeric oracle).
Eigen::MatrixXd lattice_in_landau_basis_numeric(unsigned size, double field, double u_sqrt_tau);

}  // namespace maglat
