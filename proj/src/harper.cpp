#include "maglat/harper.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace maglat {

Flux::Flux(long num, long den) {
    if (den <= 0) throw std::invalid_argument("Flux: denominator must be positive");
    long g = std::gcd(num, den);
    num /= g;
    den /= g;
    num %= den;
    if (num < 0) num += den;
    p = static_cast<unsigned>(num);
    q = static_cast<unsigned>(den);
}

double Flux::field() const { return 2.0 * std::numbers::pi * p / q; }

Eigen::MatrixXcd bloch_matrix(const Flux& flux, double k1, double k2, double tau) {
    const unsigned q = flux.q;
    const double phi = flux.value();
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(q, q);
    const std::complex<double> hop = -std::exp(std::complex<double>(0.0, k1));
    for (unsigned j = 0; j < q; ++j) {
        h(j, j) = -2.0 * tau * std::cos(k2 + 2.0 * std::numbers::pi * phi * j);
        if (q == 1) {
            // single site: both x-neighbours wrap to itself
            h(0, 0) += hop + std::conj(hop);
        } else {
            unsigned jn = (j + 1) % q;
            h(j, jn) += hop;
            h(jn, j) += std::conj(hop);
        }
    }
    return h;
}

Eigen::VectorXd bloch_spectrum(const Flux& flux, double k1, double k2, double tau) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(bloch_matrix(flux, k1, k2, tau));
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("bloch_spectrum: eigensolver failed");
    return solver.eigenvalues();
}

std::vector<Band> numeric_bands(const Flux& flux, double tau) {
    const unsigned q = flux.q;
    const double kc = std::numbers::pi / q;
    Eigen::VectorXd a = bloch_spectrum(flux, 0.0, 0.0, tau);
    Eigen::VectorXd b = bloch_spectrum(flux, kc, kc, tau);
    std::vector<Band> bands(q);
    for (unsigned j = 0; j < q; ++j)
        bands[j] = Band{std::min(a[j], b[j]), std::max(a[j], b[j])};
    return bands;
}

std::vector<ButterflyPoint> butterfly(unsigned qmax, double tau) {
    std::vector<ButterflyPoint> out;
    out.push_back({0, 1, numeric_bands(Flux(0, 1), tau)});
    for (unsigned q = 2; q <= qmax; ++q)
        for (unsigned p = 1; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            out.push_back({p, q, numeric_bands(Flux(p, q), tau)});
        }
    return out;
}

}  // namespace maglat
