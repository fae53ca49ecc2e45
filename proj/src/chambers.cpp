#include "maglat/chambers.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "maglat/cyclotomic.hpp"
#include "maglat/embedding.hpp"

namespace maglat {

namespace {

constexpr unsigned kVarE = 0;
constexpr unsigned kVarZ = 1;
constexpr unsigned kVarT = 2;

using Mat2 = std::array<Polynomial, 4>;  // row-major 2x2

Mat2 multiply(const Mat2& a, const Mat2& b, unsigned q) {
    Mat2 r{a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
           a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
    for (auto& e : r) e = reduce_exponents_mod(e, q, kVarZ);
    return r;
}

// tr prod_{j=q..1} [[-(E + tau * 2cos(2 pi p j / q)), -1], [1, 0]]
// with 2cos carried as zeta powers; `tau` is a constant or the variable t.
Polynomial transfer_trace(unsigned p, unsigned q, const Polynomial& tau) {
    const Polynomial e = Polynomial::variable(kVarE);
    const Polynomial one(Rational(1));
    Mat2 acc{one, Polynomial(), Polynomial(), one};  // identity
    for (unsigned j = 1; j <= q; ++j) {
        Polynomial cos_term = tau * two_cos_as_zeta(static_cast<long>(p) * j, q, kVarZ);
        Mat2 a{-(e + cos_term), -one, one, Polynomial()};
        acc = multiply(a, acc, q);
    }
    Polynomial tr = acc[0] + acc[3];
    return reduce_mod_cyclotomic(reduce_exponents_mod(tr, q, kVarZ), q, kVarZ);
}

Rational sign_factor(unsigned q) { return (q % 2 == 0) ? Rational(1) : Rational(-1); }

// sigma_a: z -> z^a followed by canonical reduction.
Polynomial galois_map(const Polynomial& rep, unsigned a, unsigned q) {
    Polynomial out;
    for (const auto& [m, c] : rep.terms()) {
        Monomial nm = m;
        if (kVarZ < nm.size()) nm[kVarZ] = (nm[kVarZ] * a) % q;
        out += Polynomial::term(c, std::move(nm));
    }
    return reduce_mod_cyclotomic(out, q, kVarZ);
}

IsolatedRoot refine_certified(const ChambersData& data, const Rational& side,
                              Rational a, Rational b, int sa, const Rational& tol) {
    while (b - a > tol) {
        Rational m = (a + b) / 2;
        int sm = data.sign_at(m, side);
        if (sm == 0) return IsolatedRoot{m, m, 1};
        if (sm == sa) a = m;
        else b = m;
    }
    return IsolatedRoot{a, b, 1};
}

// Band certification when the coefficients are genuinely cyclotomic: numeric
// brackets from the Bloch route, then bisection with certified signs.
std::vector<CertifiedBand> bands_cyclotomic(const ChambersData& data, const Rational& tol) {
    const unsigned q = data.q;
    auto nb = numeric_bands(Flux(data.p, q), to_double(data.tau));
    const double bound_d = to_double(data.edge_bound);

    auto certify_edge = [&](double x) -> IsolatedRoot {
        // which boundary value this edge solves
        double v = data.evaluate(x);
        Rational side = (std::abs(v - bound_d) <= std::abs(v + bound_d))
                            ? data.edge_bound
                            : -data.edge_bound;
        // exact touching at E = 0 (central gap closing)
        if (std::abs(x) < 1e-9 && data.sign_at(Rational(0), side) == 0)
            return IsolatedRoot{Rational(0), Rational(0), 2};
        // dyadic bracket around the numeric edge
        const long scale = 1L << 22;
        for (Rational w = make_rational(1, Int(1) << 16); w <= Rational(1, 4); w *= 16) {
            Rational c = make_rational(Int(static_cast<long>(std::llround(x * scale))), Int(scale));
            Rational a = c - w, b = c + w;
            int sa = data.sign_at(a, side), sb = data.sign_at(b, side);
            if (sa == 0) return IsolatedRoot{a, a, 1};
            if (sb == 0) return IsolatedRoot{b, b, 1};
            if (sa != sb) return refine_certified(data, side, a, b, sa, tol);
        }
        throw std::logic_error("chambers_bands: could not certify an edge bracket");
    };

    std::vector<CertifiedBand> out(q);
    for (unsigned j = 0; j < q; ++j) {
        out[j].lo = certify_edge(nb[j].lo);
        out[j].hi = certify_edge(nb[j].hi);
        out[j].touches_below =
            j > 0 && out[j].lo.lo == out[j - 1].hi.lo && out[j].lo.hi == out[j - 1].hi.hi &&
            out[j].lo.multiplicity > 1;
    }
    return out;
}

// Full Sturm-based certification for rational coefficients.
std::vector<CertifiedBand> bands_rational(const ChambersData& data, const Rational& tol) {
    const Rational bound = Rational(2) + 2 * data.tau + 1;
    UniPoly delta = data.rational_polynomial();
    UniPoly upper = delta - UniPoly::constant(data.edge_bound);
    UniPoly lower = delta + UniPoly::constant(data.edge_bound);

    std::vector<IsolatedRoot> roots = real_roots(upper, -bound, bound, tol);
    std::vector<IsolatedRoot> more = real_roots(lower, -bound, bound, tol);
    roots.insert(roots.end(), more.begin(), more.end());
    std::sort(roots.begin(), roots.end(), [](const IsolatedRoot& a, const IsolatedRoot& b) {
        return a.lo + a.hi < b.lo + b.hi;
    });

    std::vector<const IsolatedRoot*> slots;
    for (const auto& r : roots)
        for (unsigned i = 0; i < r.multiplicity; ++i) slots.push_back(&r);
    if (slots.size() != 2 * data.q)
        throw std::logic_error("chambers_bands: expected 2q band-edge slots");

    std::vector<CertifiedBand> bands(data.q);
    for (unsigned j = 0; j < data.q; ++j) {
        bands[j].lo = *slots[2 * j];
        bands[j].hi = *slots[2 * j + 1];
        bands[j].touches_below = j > 0 && slots[2 * j] == slots[2 * j - 1];
    }
    return bands;
}

}  // namespace

UniPoly ChambersData::rational_polynomial() const {
    if (!rational())
        throw std::domain_error("ChambersData: coefficients are not rational at q=" +
                                std::to_string(q));
    return UniPoly(delta.univariate_coefficients(kVarE));
}

double ChambersData::evaluate(double e) const {
    double acc = 0;
    long deg = delta.degree(kVarE);
    for (long k = deg; k >= 0; --k)
        acc = acc * e + cyclotomic_embedding(delta.coefficient_of(kVarE, static_cast<unsigned>(k)),
                                             q, kVarZ);
    return acc;
}

Polynomial ChambersData::evaluate_exact(const Rational& e) const {
    return delta.substitute(kVarE, Polynomial(e));
}

int ChambersData::sign_at(const Rational& e, const Rational& offset) const {
    Polynomial value = evaluate_exact(e) - Polynomial(offset);
    return cyclotomic_sign(value, q, kVarZ);
}

ChambersData chambers_polynomial(const Flux& flux, const Rational& tau) {
    const unsigned q = flux.q;
    Polynomial tr = transfer_trace(flux.p, q, Polynomial(tau));
    Polynomial delta = (tr + Polynomial(2 * rat_pow(tau, static_cast<long>(q)))) * sign_factor(q);

    ChambersData out;
    out.p = flux.p;
    out.q = q;
    out.tau = tau;
    out.delta = std::move(delta);
    out.edge_bound = Rational(2) + 2 * rat_pow(tau, static_cast<long>(q));

    if (out.delta.degree(kVarE) != static_cast<long>(q) ||
        out.delta.coefficient_of(kVarE, q) != Polynomial(Rational(1)))
        throw std::logic_error("chambers_polynomial: Delta is not monic of degree q");
    if (tau == 1 && out.rational()) {
        UniPoly rp = out.rational_polynomial();
        for (const auto& c : rp.coefficients())
            if (c.get_den() != 1)
                throw std::logic_error("chambers_polynomial: rational Delta must be integral at tau=1");
    }
    return out;
}

Polynomial chambers_polynomial_symbolic_tau(const Flux& flux) {
    const unsigned q = flux.q;
    Polynomial tr = transfer_trace(flux.p, q, Polynomial::variable(kVarT));
    Polynomial delta = (tr + Rational(2) * Polynomial::variable(kVarT).pow(q)) * sign_factor(q);
    // present as (E, t, z): swap the internal z and t slots
    Polynomial out;
    for (const auto& [m, c] : delta.terms()) {
        Monomial nm(3, 0);
        if (!m.empty()) nm[0] = m[0];
        if (m.size() > kVarZ) nm[2] = m[kVarZ];
        if (m.size() > kVarT) nm[1] = m[kVarT];
        out += Polynomial::term(c, std::move(nm));
    }
    return out;
}

UniPoly chambers_norm(const ChambersData& data) {
    const unsigned q = data.q;
    Polynomial prod(Rational(1));
    unsigned classes = 0;
    for (unsigned a = 1; a <= std::max(1u, q / 2); ++a) {
        if (std::gcd(a, q) != 1) continue;
        ++classes;
        prod = reduce_exponents_mod(prod * galois_map(data.delta, a, q), q, kVarZ);
    }
    prod = reduce_mod_cyclotomic(prod, q, kVarZ);
    if (prod.degree(kVarZ) > 0)
        throw std::logic_error("chambers_norm: norm did not land in Q");
    UniPoly norm(prod.univariate_coefficients(kVarE));
    if (norm.degree() != static_cast<long>(classes * q))
        throw std::logic_error("chambers_norm: unexpected degree");
    if (data.tau == 1)
        for (const auto& c : norm.coefficients())
            if (c.get_den() != 1)
                throw std::logic_error("chambers_norm: non-integer coefficient at tau=1");
    return norm;
}

std::vector<CertifiedBand> chambers_bands(const ChambersData& data, const Rational& width_tol) {
    return data.rational() ? bands_rational(data, width_tol) : bands_cyclotomic(data, width_tol);
}

}  // namespace maglat
