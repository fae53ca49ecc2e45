#pragma once
// Truncated power series over the rationals. A series of order N keeps the
// coefficients of B^0 .. B^N exactly and drops everything above; mixing
// orders takes the smaller truncation.

#include <cassert>
#include <stdexcept>
#include <vector>

#include "maglat/rational.hpp"

namespace maglat {

class RatSeries {
  public:
    RatSeries() : c_(1, Rational(0)) {}
    explicit RatSeries(unsigned order) : c_(order + 1, Rational(0)) {}
    RatSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) c_.push_back(Rational(0));
    }

    static RatSeries constant(const Rational& v, unsigned order) {
        RatSeries s(order);
        s.c_[0] = v;
        return s;
    }
    /// The series of exp(a*B) truncated at the given order.
    static RatSeries exp_linear(const Rational& a, unsigned order) {
        RatSeries s(order);
        Rational t(1);
        s.c_[0] = t;
        for (unsigned k = 1; k <= order; ++k) {
            t *= a;
            t /= Rational(static_cast<long>(k));
            s.c_[k] = t;
        }
        return s;
    }

    unsigned order() const { return static_cast<unsigned>(c_.size()) - 1; }
    const Rational& operator[](unsigned k) const {
        static const Rational zero(0);
        return k < c_.size() ? c_[k] : zero;
    }
    Rational& at(unsigned k) {
        if (k >= c_.size()) throw std::out_of_range("RatSeries::at");
        return c_[k];
    }
    const std::vector<Rational>& coefficients() const { return c_; }

    bool is_zero() const {
        for (const auto& x : c_) if (x != 0) return false;
        return true;
    }

    RatSeries truncated(unsigned order) const {
        std::vector<Rational> d(order + 1, Rational(0));
        for (unsigned k = 0; k <= order && k < c_.size(); ++k) d[k] = c_[k];
        return RatSeries(std::move(d));
    }

    RatSeries& operator+=(const RatSeries& o) {
        unsigned n = std::min(order(), o.order());
        c_.resize(n + 1);
        for (unsigned k = 0; k <= n; ++k) c_[k] += o.c_[k];
        return *this;
    }
    RatSeries& operator-=(const RatSeries& o) {
        unsigned n = std::min(order(), o.order());
        c_.resize(n + 1);
        for (unsigned k = 0; k <= n; ++k) c_[k] -= o.c_[k];
        return *this;
    }
    friend RatSeries operator+(RatSeries a, const RatSeries& b) { return a += b; }
    friend RatSeries operator-(RatSeries a, const RatSeries& b) { return a -= b; }

    friend RatSeries operator*(const RatSeries& a, const RatSeries& b) {
        unsigned n = std::min(a.order(), b.order());
        RatSeries out(n);
        for (unsigned i = 0; i <= n; ++i) {
            if (a[i] == 0) continue;
            for (unsigned j = 0; i + j <= n; ++j) {
                if (b[j] == 0) continue;
                out.c_[i + j] += a[i] * b[j];
            }
        }
        return out;
    }
    RatSeries& operator*=(const RatSeries& o) { return *this = *this * o; }

    friend RatSeries operator*(const Rational& s, RatSeries a) {
        for (auto& x : a.c_) x *= s;
        return a;
    }

    /// Multiplies by B^k (shifting up, truncation fixed).
    RatSeries shifted_up(unsigned k) const {
        RatSeries out(order());
        for (unsigned i = 0; i + k <= order(); ++i) out.c_[i + k] = c_[i];
        return out;
    }
    /// Divides by B; requires a vanishing constant term. Order drops by one.
    RatSeries shifted_down() const {
        if (c_[0] != 0) throw std::domain_error("RatSeries::shifted_down: constant term nonzero");
        if (order() == 0) return RatSeries(0u);
        std::vector<Rational> d(c_.begin() + 1, c_.end());
        return RatSeries(std::move(d));
    }

    Rational evaluate(const Rational& x) const {
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }
    double evaluate(double x) const {
        double acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + to_double(*it);
        return acc;
    }

    bool operator==(const RatSeries& o) const { return c_ == o.c_; }

  private:
    std::vector<Rational> c_;
};

}  // namespace maglat
