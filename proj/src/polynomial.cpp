#include "maglat/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace maglat {

namespace {

unsigned exponent_at(const Monomial& m, std::size_t i) {
    return i < m.size() ? m[i] : 0u;
}

unsigned long mono_degree(const Monomial& m) {
    unsigned long d = 0;
    for (unsigned e : m) d += e;
    return d;
}

void trim(Monomial& m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = exponent_at(a, i) + exponent_at(b, i);
    return r;
}

// a / b, or nullopt-like failure via bool
bool mono_div(const Monomial& a, const Monomial& b, Monomial& out) {
    out.assign(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        unsigned ea = exponent_at(a, i), eb = exponent_at(b, i);
        if (eb > ea) return false;
        out[i] = ea - eb;
    }
    trim(out);
    return true;
}

}  // namespace

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    unsigned long da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da < db;
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        unsigned ea = exponent_at(a, i), eb = exponent_at(b, i);
        if (ea != eb) return ea < eb;
    }
    return false;
}

Polynomial::Polynomial(const Rational& c) {
    if (c != 0) terms_.emplace(Monomial{}, c);
}

Polynomial Polynomial::variable(unsigned index, unsigned power) {
    if (power == 0) return Polynomial(Rational(1));
    Monomial m(index + 1, 0);
    m[index] = power;
    Polynomial p;
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
}

Polynomial Polynomial::term(const Rational& c, Monomial mono) {
    Polynomial p;
    if (c != 0) {
        trim(mono);
        p.terms_.emplace(std::move(mono), c);
    }
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational Polynomial::constant_value() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
}

unsigned Polynomial::variable_count() const {
    std::size_t n = 0;
    for (const auto& [m, c] : terms_) n = std::max(n, m.size());
    return static_cast<unsigned>(n);
}

long Polynomial::degree(unsigned var) const {
    long d = -1;
    for (const auto& [m, c] : terms_)
        d = std::max(d, static_cast<long>(exponent_at(m, var)));
    return terms_.empty() ? -1 : d;
}

long Polynomial::total_degree() const {
    if (terms_.empty()) return -1;
    // graded order: last term has maximal total degree
    return static_cast<long>(mono_degree(terms_.rbegin()->first));
}

Rational Polynomial::coefficient(const Monomial& mono) const {
    Monomial key = mono;
    trim(key);
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
}

Polynomial Polynomial::coefficient_of(unsigned var, unsigned k) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
        if (exponent_at(m, var) != k) continue;
        Monomial rest = m;
        if (var < rest.size()) rest[var] = 0;
        trim(rest);
        out.terms_[rest] += c;
    }
    out.strip_zeros();
    return out;
}

void Polynomial::strip_zeros() {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = (it->second == 0) ? terms_.erase(it) : std::next(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) {
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) {
        auto [it, inserted] = terms_.emplace(m, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    if (a.is_zero() || b.is_zero()) return out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m = mono_mul(ma, mb);
            auto [it, inserted] = out.terms_.emplace(std::move(m), ca * cb);
            if (!inserted) {
                it->second += ca * cb;
                if (it->second == 0) out.terms_.erase(it);
            }
        }
    }
    return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial p = *this;
    for (auto& [m, c] : p.terms_) c = -c;
    return p;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial acc(Rational(1));
    Polynomial base = *this;
    while (e) {
        if (e & 1) acc *= base;
        if (e >>= 1) base *= base;
    }
    return acc;
}

Polynomial Polynomial::derivative(unsigned var) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
        unsigned e = exponent_at(m, var);
        if (e == 0) continue;
        Monomial dm = m;
        dm[var] -= 1;
        trim(dm);
        out.terms_[dm] += c * Rational(e);
    }
    out.strip_zeros();
    return out;
}

Polynomial Polynomial::substitute(unsigned var, const Polynomial& replacement) const {
    // cache replacement^e for the exponents that occur
    std::map<unsigned, Polynomial> powers;
    powers[0] = Polynomial(Rational(1));
    Polynomial out;
    for (const auto& [m, c] : terms_) {
        unsigned e = exponent_at(m, var);
        auto it = powers.find(e);
        if (it == powers.end())
            it = powers.emplace(e, replacement.pow(e)).first;
        Monomial rest = m;
        if (var < rest.size()) rest[var] = 0;
        trim(rest);
        out += Polynomial::term(c, rest) * it->second;
    }
    return out;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (i >= point.size())
                throw std::invalid_argument("Polynomial::evaluate: point has too few coordinates");
            t *= rat_pow(point[i], m[i]);
        }
        acc += t;
    }
    return acc;
}

double Polynomial::evaluate(const std::vector<double>& point) const {
    double acc = 0;
    for (const auto& [m, c] : terms_) {
        double t = to_double(c);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (i >= point.size())
                throw std::invalid_argument("Polynomial::evaluate: point has too few coordinates");
            for (unsigned e = 0; e < m[i]; ++e) t *= point[i];
        }
        acc += t;
    }
    return acc;
}

std::pair<Monomial, Rational> Polynomial::leading_term() const {
    if (terms_.empty()) throw std::domain_error("leading_term of zero polynomial");
    auto it = terms_.rbegin();
    return {it->first, it->second};
}

Polynomial Polynomial::divide_exact(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("divide_exact: division by zero");
    Polynomial rem = *this;
    Polynomial quot;
    const auto [dm, dc] = divisor.leading_term();
    while (!rem.is_zero()) {
        const auto [rm, rc] = rem.leading_term();
        Monomial qm;
        if (!mono_div(rm, dm, qm))
            throw std::domain_error("divide_exact: not divisible");
        Polynomial t = Polynomial::term(rc / dc, std::move(qm));
        quot += t;
        rem -= t * divisor;
    }
    return quot;
}

Polynomial Polynomial::remainder_mod_monic(const Polynomial& divisor, unsigned var) const {
    long d = divisor.degree(var);
    if (d <= 0) throw std::invalid_argument("remainder_mod_monic: divisor must have positive degree");
    if (divisor.variable_count() > var + 1)
        for (unsigned v = 0; v < divisor.variable_count(); ++v)
            if (v != var && divisor.degree(v) > 0)
                throw std::invalid_argument("remainder_mod_monic: divisor must be univariate");
    if (divisor.coefficient_of(var, static_cast<unsigned>(d)) != Polynomial(Rational(1)))
        throw std::invalid_argument("remainder_mod_monic: divisor must be monic");

    Polynomial rem = *this;
    while (true) {
        long rd = rem.degree(var);
        if (rd < d) break;
        Polynomial lead = rem.coefficient_of(var, static_cast<unsigned>(rd));
        // rem -= lead * var^(rd-d) * divisor
        Polynomial shift = Polynomial::variable(var, static_cast<unsigned>(rd - d));
        rem -= lead * shift * divisor;
    }
    return rem;
}

std::vector<Rational> Polynomial::univariate_coefficients(unsigned var) const {
    long d = degree(var);
    std::vector<Rational> out(static_cast<std::size_t>(std::max(0L, d + 1)), Rational(0));
    for (const auto& [m, c] : terms_) {
        for (std::size_t i = 0; i < m.size(); ++i)
            if (i != var && m[i] != 0)
                throw std::domain_error("univariate_coefficients: polynomial involves other variables");
        out[exponent_at(m, var)] = c;
    }
    if (out.empty()) out.push_back(Rational(0));
    return out;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print highest terms first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool has_vars = !m.empty();
        if (a != 1 || !has_vars) os << a.get_str();
        bool printed = (a != 1 || !has_vars);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (printed) os << "*";
            if (i < names.size()) os << names[i];
            else os << "x" << i;
            if (m[i] > 1) os << "^" << m[i];
            printed = true;
        }
    }
    return os.str();
}

}  // namespace maglat
