#include "maglat/laguerre.hpp"

namespace maglat::laguerre {

double value(unsigned n, double alpha, double x) {
    double p0 = 1.0;
    if (n == 0) return p0;
    double p1 = 1.0 + alpha - x;
    for (unsigned k = 1; k < n; ++k) {
        double p2 = ((2.0 * k + 1.0 + alpha - x) * p1 - (k + alpha) * p0) / (k + 1.0);
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

std::vector<double> values_through(unsigned nmax, double alpha, double x) {
    std::vector<double> out(nmax + 1);
    out[0] = 1.0;
    if (nmax == 0) return out;
    out[1] = 1.0 + alpha - x;
    for (unsigned k = 1; k < nmax; ++k)
        out[k + 1] = ((2.0 * k + 1.0 + alpha - x) * out[k] - (k + alpha) * out[k - 1]) / (k + 1.0);
    return out;
}

Rational value_exact(unsigned n, const Rational& alpha, const Rational& x) {
    Rational p0(1);
    if (n == 0) return p0;
    Rational p1 = Rational(1) + alpha - x;
    for (unsigned k = 1; k < n; ++k) {
        Rational kr(static_cast<long>(k));
        Rational p2 = ((2 * kr + 1 + alpha - x) * p1 - (kr + alpha) * p0) / (kr + 1);
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

Polynomial coefficient_polynomial(unsigned n, const Rational& alpha, unsigned var) {
    Polynomial x = Polynomial::variable(var);
    Polynomial p0(Rational(1));
    if (n == 0) return p0;
    Polynomial p1 = Polynomial(Rational(1) + alpha) - x;
    for (unsigned k = 1; k < n; ++k) {
        Rational kr(static_cast<long>(k));
        Polynomial p2 = (Polynomial(2 * kr + 1 + alpha) - x) * p1 - Polynomial(kr + alpha) * p0;
        p2 *= Rational(1) / (kr + 1);
        p0 = std::move(p1);
        p1 = std::move(p2);
    }
    return p1;
}

RatSeries series(unsigned n, const Rational& alpha, const Rational& scale, unsigned order) {
    RatSeries x(order);
    if (order >= 1) x.at(1) = scale;
    RatSeries p0 = RatSeries::constant(Rational(1), order);
    if (n == 0) return p0;
    RatSeries p1 = RatSeries::constant(Rational(1) + alpha, order) - x;
    for (unsigned k = 1; k < n; ++k) {
        Rational kr(static_cast<long>(k));
        RatSeries p2 = (RatSeries::constant(2 * kr + 1 + alpha, order) - x) * p1
                       - (kr + alpha) * p0;
        p2 = (Rational(1) / (kr + 1)) * p2;
        p0 = std::move(p1);
        p1 = std::move(p2);
    }
    return p1;
}

}  // namespace maglat::laguerre
