#include "maglat/embedding.hpp"

#include <mpfr.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "maglat/cyclotomic.hpp"

namespace maglat {

namespace {

unsigned exponent_of(const Monomial& m, unsigned var) {
    return var < m.size() ? m[var] : 0u;
}

void require_univariate(const Polynomial& p, unsigned var, const char* who) {
    for (const auto& [m, c] : p.terms())
        for (std::size_t i = 0; i < m.size(); ++i)
            if (i != var && m[i] != 0)
                throw std::invalid_argument(std::string(who) + ": extra variable present");
}

// One MPFR interval [lo, hi]; all operations round outward.
class Interval {
  public:
    explicit Interval(mpfr_prec_t prec) {
        mpfr_init2(lo_, prec);
        mpfr_init2(hi_, prec);
        mpfr_set_zero(lo_, 1);
        mpfr_set_zero(hi_, 1);
    }
    ~Interval() {
        mpfr_clear(lo_);
        mpfr_clear(hi_);
    }
    Interval(const Interval&) = delete;
    Interval& operator=(const Interval&) = delete;

    void set_rational(const Rational& r) {
        mpfr_set_q(lo_, r.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(hi_, r.get_mpq_t(), MPFR_RNDU);
    }

    // this += c * other, with c exact rational
    void add_scaled(const Rational& c, const Interval& o, mpfr_prec_t prec) {
        mpfr_t cl, cu, t1, t2, prod_lo, prod_hi;
        mpfr_inits2(prec, cl, cu, t1, t2, prod_lo, prod_hi, static_cast<mpfr_ptr>(nullptr));
        mpfr_set_q(cl, c.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(cu, c.get_mpq_t(), MPFR_RNDU);
        // four candidate products, outward rounded
        mpfr_mul(t1, cl, o.lo_, MPFR_RNDD);
        mpfr_mul(t2, cl, o.hi_, MPFR_RNDD);
        mpfr_min(prod_lo, t1, t2, MPFR_RNDD);
        mpfr_mul(t1, cu, o.lo_, MPFR_RNDD);
        mpfr_min(prod_lo, prod_lo, t1, MPFR_RNDD);
        mpfr_mul(t1, cu, o.hi_, MPFR_RNDD);
        mpfr_min(prod_lo, prod_lo, t1, MPFR_RNDD);

        mpfr_mul(t1, cl, o.lo_, MPFR_RNDU);
        mpfr_mul(t2, cl, o.hi_, MPFR_RNDU);
        mpfr_max(prod_hi, t1, t2, MPFR_RNDU);
        mpfr_mul(t1, cu, o.lo_, MPFR_RNDU);
        mpfr_max(prod_hi, prod_hi, t1, MPFR_RNDU);
        mpfr_mul(t1, cu, o.hi_, MPFR_RNDU);
        mpfr_max(prod_hi, prod_hi, t1, MPFR_RNDU);

        mpfr_add(lo_, lo_, prod_lo, MPFR_RNDD);
        mpfr_add(hi_, hi_, prod_hi, MPFR_RNDU);
        mpfr_clears(cl, cu, t1, t2, prod_lo, prod_hi, static_cast<mpfr_ptr>(nullptr));
    }

    // enclosure of cos(2 pi e / q) or sin(2 pi e / q)
    void set_circular(bool cosine, unsigned e, unsigned q, mpfr_prec_t prec) {
        mpfr_t pl, ph, mid, width, val_lo, val_hi;
        mpfr_inits2(prec, pl, ph, mid, width, val_lo, val_hi, static_cast<mpfr_ptr>(nullptr));
        mpfr_const_pi(pl, MPFR_RNDD);
        mpfr_const_pi(ph, MPFR_RNDU);
        mpfr_mul_ui(pl, pl, 2u * e, MPFR_RNDD);
        mpfr_mul_ui(ph, ph, 2u * e, MPFR_RNDU);
        mpfr_div_ui(pl, pl, q, MPFR_RNDD);
        mpfr_div_ui(ph, ph, q, MPFR_RNDU);
        // |x - mid| <= width: the angle enclosure is tight, cos/sin are 1-Lipschitz
        mpfr_sub(width, ph, pl, MPFR_RNDU);
        mpfr_add(mid, pl, ph, MPFR_RNDN);
        mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
        mpfr_nextabove(width);  // absorb the midpoint rounding
        if (cosine) {
            mpfr_cos(val_lo, mid, MPFR_RNDD);
            mpfr_cos(val_hi, mid, MPFR_RNDU);
        } else {
            mpfr_sin(val_lo, mid, MPFR_RNDD);
            mpfr_sin(val_hi, mid, MPFR_RNDU);
        }
        mpfr_sub(lo_, val_lo, width, MPFR_RNDD);
        mpfr_add(hi_, val_hi, width, MPFR_RNDU);
        mpfr_clears(pl, ph, mid, width, val_lo, val_hi, static_cast<mpfr_ptr>(nullptr));
    }

    bool positive() const { return mpfr_sgn(lo_) > 0; }
    bool negative() const { return mpfr_sgn(hi_) < 0; }
    bool contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

  private:
    mpfr_t lo_, hi_;
};

}  // namespace

double cyclotomic_embedding(const Polynomial& zrep, unsigned q, unsigned var) {
    require_univariate(zrep, var, "cyclotomic_embedding");
    std::complex<double> acc(0.0, 0.0);
    double scale = 1.0;
    for (const auto& [m, c] : zrep.terms()) {
        double angle = 2.0 * std::numbers::pi * exponent_of(m, var) / q;
        double cd = to_double(c);
        acc += cd * std::exp(std::complex<double>(0.0, angle));
        scale = std::max(scale, std::abs(cd));
    }
    if (std::abs(acc.imag()) > 1e-7 * scale)
        throw std::logic_error("cyclotomic_embedding: value is not real");
    return acc.real();
}

int cyclotomic_sign(const Polynomial& zrep, unsigned q, unsigned var, unsigned max_bits) {
    require_univariate(zrep, var, "cyclotomic_sign");
    Polynomial reduced = reduce_mod_cyclotomic(reduce_exponents_mod(zrep, q, var), q, var);
    if (reduced.is_zero()) return 0;
    if (reduced.is_constant()) return sgn(reduced.constant_value());

    for (mpfr_prec_t prec = 128; prec <= static_cast<mpfr_prec_t>(max_bits); prec *= 2) {
        Interval real_part(prec), imag_part(prec), basis(prec);
        for (const auto& [m, c] : reduced.terms()) {
            unsigned e = exponent_of(m, var);
            basis.set_circular(true, e, q, prec);
            real_part.add_scaled(c, basis, prec);
            basis.set_circular(false, e, q, prec);
            imag_part.add_scaled(c, basis, prec);
        }
        if (!imag_part.contains_zero())
            throw std::logic_error("cyclotomic_sign: value is not real");
        if (real_part.positive()) return 1;
        if (real_part.negative()) return -1;
    }
    throw std::runtime_error("cyclotomic_sign: sign not separable at maximum precision");
}

}  // namespace maglat
