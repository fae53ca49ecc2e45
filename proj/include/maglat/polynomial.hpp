#pragma once
// Sparse multivariate polynomials with exact rational coefficients.
//
// Variables are indexed 0, 1, 2, ...; a monomial stores one exponent per
// variable index with trailing zeros trimmed, so x0 constructed in a
// three-variable context equals x0 constructed in a one-variable context.
// Term order is graded lex (total degree first, then lex), which is what
// exact division and leading-term queries assume.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "maglat/rational.hpp"

namespace maglat {

using Monomial = std::vector<unsigned>;

/// Graded lex on zero-padded exponent vectors.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

class Polynomial {
  public:
    using TermMap = std::map<Monomial, Rational, MonomialOrder>;

    Polynomial() = default;
    explicit Polynomial(const Rational& c);
    explicit Polynomial(long c) : Polynomial(Rational(c)) {}

    static Polynomial variable(unsigned index, unsigned power = 1);
    /// Single term c * prod_i x_i^{mono[i]}.
    static Polynomial term(const Rational& c, Monomial mono);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term (the coefficient of the empty monomial).
    Rational constant_value() const;

    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Highest variable index used, plus one (0 for constants).
    unsigned variable_count() const;
    long degree(unsigned var) const;   // -1 for the zero polynomial
    long total_degree() const;         // -1 for the zero polynomial

    Rational coefficient(const Monomial& mono) const;
    /// Coefficient of var^k, collected as a polynomial in the remaining variables.
    Polynomial coefficient_of(unsigned var, unsigned k) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);
    Polynomial operator-() const;

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial pow(unsigned e) const;
    Polynomial derivative(unsigned var) const;

    /// Replaces variable `var` by `replacement` everywhere.
    Polynomial substitute(unsigned var, const Polynomial& replacement) const;

    Rational evaluate(const std::vector<Rational>& point) const;
    double evaluate(const std::vector<double>& point) const;

    /// Exact quotient; throws std::domain_error if the division is not exact.
    Polynomial divide_exact(const Polynomial& divisor) const;

    /// Remainder of *this modulo a divisor that is univariate in `var` and
    /// monic in it (e.g. a cyclotomic polynomial). Quotient is discarded.
    Polynomial remainder_mod_monic(const Polynomial& divisor, unsigned var) const;

    /// Leading term in graded lex order.
    std::pair<Monomial, Rational> leading_term() const;

    /// Dense coefficient vector (degree ascending) when the polynomial only
    /// involves `var`; throws otherwise.
    std::vector<Rational> univariate_coefficients(unsigned var) const;

    std::string to_string(const std::vector<std::string>& names = {}) const;

  private:
    void strip_zeros();
    TermMap terms_;
};

}  // namespace maglat
