#pragma once
// Numeric route to the spectrum of the discrete magnetic Schrodinger operator
// on the square lattice (Harper/Hofstadter model). At rational flux p/q the
// magnetic Bloch reduction yields a q x q Hermitian matrix per quasimomentum;
// eigenvalues come from Eigen. This path is kept independent of the exact
// characteristic-polynomial route so the two can cross-validate.
//
// Conventions (pinned by the tests):
//   H(k)_{jj}     = -2 tau cos(k2 + 2 pi (p/q) j)
//   H(k)_{j,j+1}  = -exp(i k1)   (cyclically, uniform phase)
//   H(k)_{j,j-1}  = -exp(-i k1)
// so tau is the ratio of the y-hopping to the x-hopping, and
//   det(E I - H(k)) = (-1)^q [ 2 cos(q k1) + 2 tau^q cos(q k2) - Delta(E) ]
// with Delta the Chambers polynomial. Band extrema over k sit at
// k = (0, 0) and k = (pi/q, pi/q).

#include <Eigen/Dense>

#include <vector>

namespace maglat {

/// Flux p/q reduced to lowest terms with 0 <= p < q.
struct Flux {
    unsigned p, q;
    Flux(long num, long den);
    double value() const { return static_cast<double>(p) / q; }
    /// B = 2 pi p / q, the flux per plaquette in radians.
    double field() const;
};

Eigen::MatrixXcd bloch_matrix(const Flux& flux, double k1, double k2, double tau = 1.0);

/// Ascending eigenvalues of the Bloch matrix.
Eigen::VectorXd bloch_spectrum(const Flux& flux, double k1, double k2, double tau = 1.0);

struct Band {
    double lo, hi;
    double width() const { return hi - lo; }
};

/// The q bands at flux p/q from the two extremal quasimomenta.
std::vector<Band> numeric_bands(const Flux& flux, double tau = 1.0);

struct ButterflyPoint {
    unsigned p, q;
    std::vector<Band> bands;
};

/// All reduced fluxes p/q with q <= qmax (0/1 included once).
std::vector<ButterflyPoint> butterfly(unsigned qmax, double tau = 1.0);

}  // namespace maglat
