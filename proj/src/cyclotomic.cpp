#include "maglat/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace maglat {

const Polynomial& cyclotomic_polynomial(unsigned q, unsigned var) {
    if (q == 0) throw std::invalid_argument("cyclotomic_polynomial: q must be positive");
    static std::map<std::pair<unsigned, unsigned>, Polynomial> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);

    // fill the cache for every divisor of q, smallest first
    for (unsigned d = 1; d <= q; ++d) {
        if (q % d != 0) continue;
        auto key = std::make_pair(d, var);
        if (cache.count(key)) continue;
        Polynomial num = Polynomial::variable(var, d) - Polynomial(Rational(1));
        if (d == 1) {
            cache.emplace(key, std::move(num));
            continue;
        }
        Polynomial den(Rational(1));
        for (unsigned e = 1; e < d; ++e)
            if (d % e == 0) den *= cache.at(std::make_pair(e, var));
        cache.emplace(key, num.divide_exact(den));
    }
    return cache.at(std::make_pair(q, var));
}

Polynomial reduce_mod_cyclotomic(const Polynomial& p, unsigned q, unsigned var) {
    if (q == 1) {
        // Phi_1 = z - 1: substitute z = 1
        return p.substitute(var, Polynomial(Rational(1)));
    }
    return p.remainder_mod_monic(cyclotomic_polynomial(q, var), var);
}

Polynomial reduce_exponents_mod(const Polynomial& p, unsigned q, unsigned var) {
    Polynomial out;
    for (const auto& [mono, coeff] : p.terms()) {
        Monomial m = mono;
        if (var < m.size()) m[var] %= q;
        out += Polynomial::term(coeff, std::move(m));
    }
    return out;
}

Polynomial two_cos_as_zeta(long a, unsigned q, unsigned var) {
    long r = a % static_cast<long>(q);
    if (r < 0) r += q;
    unsigned e1 = static_cast<unsigned>(r);
    unsigned e2 = (q - e1) % q;
    return Polynomial::variable(var, e1) + Polynomial::variable(var, e2);
}

}  // namespace maglat
