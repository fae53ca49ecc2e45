#include "maglat/oscillator.hpp"

#include <cmath>
#include <stdexcept>

#include "maglat/laguerre.hpp"

namespace maglat {

namespace {

// C_{d,n}(B) as a truncated series; see the header for the formula.
RatSeries entry_series(unsigned d, unsigned n, const Rational& u, unsigned order) {
    const Rational half_u = u / 2;                  // argument scale of the k1 part
    const Rational half_over_u = Rational(1) / (2 * u);
    const Rational alpha(static_cast<long>(2 * d));

    RatSeries part1 = RatSeries::exp_linear(-u / 4, order) *
                      laguerre::series(n, alpha, half_u, order);
    part1 = (rat_pow(half_u, d) * ((d % 2) ? Rational(-1) : Rational(1))) * part1;

    RatSeries part2 = RatSeries::exp_linear(-half_over_u / 2, order) *
                      laguerre::series(n, alpha, half_over_u, order);
    part2 = (u * u * rat_pow(half_over_u, d)) * part2;

    RatSeries sum = part1 + part2;
    sum = Rational(-2) * sum;
    return sum.shifted_up(d);  // the (B)^d factor
}

}  // namespace

OscillatorMatrixSeries::OscillatorMatrixSeries(unsigned size, unsigned order, Rational u_sqrt_tau)
    : size_(size), order_(order), u_(std::move(u_sqrt_tau)), zero_(order) {
    if (u_ <= 0) throw std::invalid_argument("OscillatorMatrixSeries: u must be positive");
    flat_.assign(static_cast<std::size_t>(size_) * size_, zero_);
    for (unsigned n = 0; n < size_; ++n) {
        for (unsigned d = 0; n + 2 * d < size_; ++d) {
            if (d > order_) break;  // entries are O(B^d): nothing survives truncation
            RatSeries c = entry_series(d, n, u_, order_);
            unsigned m = n + 2 * d;
            flat_[static_cast<std::size_t>(m) * size_ + n] = c;
            if (d > 0) {
                Rational ratio = make_rational(factorial(n), factorial(m));  // n!/m!
                flat_[static_cast<std::size_t>(n) * size_ + m] = ratio * c;
            }
        }
    }
}

const RatSeries& OscillatorMatrixSeries::entry(unsigned row, unsigned col) const {
    if (row >= size_ || col >= size_) throw std::out_of_range("OscillatorMatrixSeries::entry");
    return flat_[static_cast<std::size_t>(row) * size_ + col];
}

OscillatorMatrixSeries lattice_in_landau_basis(unsigned size, unsigned order,
                                               const Rational& u_sqrt_tau) {
    return OscillatorMatrixSeries(size, order, u_sqrt_tau);
}

Eigen::MatrixXd lattice_in_landau_basis_numeric(unsigned size, double field, double u_sqrt_tau) {
    const double u = u_sqrt_tau;
    const double tau = u * u;
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(size, size);
    for (unsigned n = 0; n < size; ++n) {
        for (unsigned d = 0; n + 2 * d < size; ++d) {
            unsigned m = n + 2 * d;
            double x1 = u * field / 2.0, x2 = field / (2.0 * u);
            double c = -2.0 * ((d % 2 ? -1.0 : 1.0) * std::pow(x1, d) * std::exp(-x1 / 2.0) *
                                   laguerre::value(n, 2.0 * d, x1) +
                               tau * std::pow(x2, d) * std::exp(-x2 / 2.0) *
                                   laguerre::value(n, 2.0 * d, x2));
            // sqrt(n!/m!) via lgamma to dodge overflow
            double scale = std::exp(0.5 * (std::lgamma(n + 1.0) - std::lgamma(m + 1.0)));
            h(m, n) = scale * c;
            h(n, m) = h(m, n);
        }
    }
    return h;
}

}  // namespace maglat
