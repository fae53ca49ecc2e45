#include "maglat/unipoly.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace maglat {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

UniPoly UniPoly::constant(const Rational& c) {
    UniPoly p;
    if (c != 0) p.c_ = {c};
    return p;
}

void UniPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UniPoly::leading_coefficient() const {
    if (c_.empty()) return Rational(0);
    return c_.back();
}

Rational UniPoly::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double UniPoly::operator()(double x) const {
    double acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + to_double(*it);
    return acc;
}

int UniPoly::sign_at(const Rational& x) const {
    Rational v = (*this)(x);
    return sgn(v);
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = Rational(static_cast<long>(i)) * c_[i];
    return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    Rational inv = Rational(1) / c_.back();
    std::vector<Rational> d = c_;
    for (auto& x : d) x *= inv;
    return UniPoly(std::move(d));
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            out[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(out));
}

UniPoly operator*(const Rational& s, UniPoly p) {
    for (auto& x : p.c_) x *= s;
    p.normalize();
    return p;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("UniPoly::divmod: division by zero");
    UniPoly rem = *this;
    long dd = divisor.degree();
    if (degree() < dd) return {UniPoly(), rem};
    std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd + 1), Rational(0));
    const Rational& lead = divisor.c_.back();
    while (rem.degree() >= dd) {
        long shift = rem.degree() - dd;
        Rational q = rem.c_.back() / lead;
        quot[static_cast<std::size_t>(shift)] = q;
        for (std::size_t i = 0; i < divisor.c_.size(); ++i)
            rem.c_[static_cast<std::size_t>(shift) + i] -= q * divisor.c_[i];
        rem.normalize();
    }
    return {UniPoly(std::move(quot)), rem};
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        if (c_[k] == 0) continue;
        Rational a = c_[k];
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (a != 1 || k == 0) os << a.get_str();
        if (k > 0) {
            if (a != 1) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly r0 = a.monic(), r1 = b.monic();
    if (r0.is_zero()) return r1;
    if (r1.is_zero()) return r0;
    while (!r1.is_zero()) {
        UniPoly r2 = r0.divmod(r1).second;
        r0 = std::move(r1);
        r1 = r2.monic();
    }
    return r0;
}

std::vector<UniPoly> squarefree_decomposition(const UniPoly& f) {
    if (f.is_zero()) throw std::domain_error("squarefree_decomposition of zero");
    UniPoly fm = f.monic();
    if (fm.degree() == 0) return {};
    // Yun's algorithm
    UniPoly fp = fm.derivative();
    UniPoly g = gcd(fm, fp);
    std::vector<UniPoly> out;
    if (g.degree() == 0) {
        out.push_back(fm);
        return out;
    }
    UniPoly c = fm.divmod(g).first;
    UniPoly d = fp.divmod(g).first - c.derivative();
    while (c.degree() > 0) {
        UniPoly a = gcd(c, d);
        out.push_back(a);
        c = c.divmod(a).first;
        d = d.divmod(a).first - c.derivative();
    }
    return out;
}

namespace {

// Sturm chain: p0 = f, p1 = f', p_{i+1} = -rem(p_{i-1}, p_i).
std::vector<UniPoly> sturm_chain(const UniPoly& f) {
    std::vector<UniPoly> chain;
    chain.push_back(f);
    chain.push_back(f.derivative());
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        const UniPoly& a = chain[chain.size() - 2];
        const UniPoly& b = chain.back();
        UniPoly r = Rational(-1) * a.divmod(b).second;
        if (r.is_zero()) break;
        chain.push_back(r.monic());  // positive rescale keeps signs consistent
    }
    return chain;
}

int sign_variations(const std::vector<UniPoly>& chain, const Rational& x) {
    int count = 0, prev = 0;
    for (const auto& p : chain) {
        int s = p.sign_at(x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

// Number of distinct real roots in (a, b] for squarefree f.
int roots_in(const std::vector<UniPoly>& chain, const Rational& a, const Rational& b) {
    return sign_variations(chain, a) - sign_variations(chain, b);
}

// Shrinks a bracket around the single simple root of f in (a, b),
// where sign(f(a)) != sign(f(b)), both nonzero.
IsolatedRoot refine_simple(const UniPoly& f, Rational a, Rational b, const Rational& tol) {
    int sa = f.sign_at(a);
    while (b - a > tol) {
        Rational m = (a + b) / 2;
        int sm = f.sign_at(m);
        if (sm == 0) return IsolatedRoot{m, m, 1};
        if (sm == sa) a = m;
        else b = m;
    }
    return IsolatedRoot{a, b, 1};
}

// Real roots of a squarefree polynomial in (lo, hi), endpoints assumed nonroots.
void isolate_squarefree(const UniPoly& f, const std::vector<UniPoly>& chain,
                        const Rational& lo, const Rational& hi, const Rational& tol,
                        std::vector<IsolatedRoot>& out) {
    struct Seg { Rational a, b; int count; };
    std::deque<Seg> work;
    work.push_back({lo, hi, roots_in(chain, lo, hi)});
    while (!work.empty()) {
        Seg s = work.front();
        work.pop_front();
        if (s.count <= 0) continue;
        if (s.count == 1) {
            // counts use (a, b], so an exact root at b is the counted one
            if (f.sign_at(s.b) == 0) {
                out.push_back(IsolatedRoot{s.b, s.b, 1});
                continue;
            }
            int sa = f.sign_at(s.a), sb = f.sign_at(s.b);
            if (sa != 0 && sb != 0 && sa != sb) {
                out.push_back(refine_simple(f, s.a, s.b, tol));
                continue;
            }
            // single root without a sign change cannot happen for a simple
            // root with nonroot endpoints; fall through to splitting
        }
        Rational m = (s.a + s.b) / 2;
        if (f.sign_at(m) == 0) {
            out.push_back(IsolatedRoot{m, m, 1});
            // peel off a neighborhood of m that contains no other root
            Rational delta = (s.b - s.a) / 4;
            while (roots_in(chain, m - delta, m + delta) != 1) delta /= 2;
            work.push_back({s.a, m - delta, roots_in(chain, s.a, m - delta)});
            work.push_back({m + delta, s.b, roots_in(chain, m + delta, s.b)});
        } else {
            work.push_back({s.a, m, roots_in(chain, s.a, m)});
            work.push_back({m, s.b, roots_in(chain, m, s.b)});
        }
    }
}

}  // namespace

std::vector<IsolatedRoot> real_roots(const UniPoly& f, const Rational& lo,
                                     const Rational& hi, const Rational& width_tol) {
    if (f.is_zero()) throw std::domain_error("real_roots of zero polynomial");
    if (!(lo < hi)) throw std::invalid_argument("real_roots: empty interval");
    std::vector<IsolatedRoot> out;
    if (f.degree() == 0) return out;

    auto factors = squarefree_decomposition(f);
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const UniPoly& g = factors[i];
        if (g.degree() < 1) continue;
        Rational a = lo, b = hi;
        // nudge endpoints off exact roots
        Rational step = (hi - lo) / 1024;
        while (g.sign_at(a) == 0) a -= step;
        while (g.sign_at(b) == 0) b += step;
        std::vector<IsolatedRoot> roots;
        if (g.degree() == 1) {
            Rational r = -g.coefficients()[0] / g.coefficients()[1];
            if (a < r && r <= b) roots.push_back(IsolatedRoot{r, r, 1});
        } else {
            auto chain = sturm_chain(g);
            isolate_squarefree(g, chain, a, b, width_tol, roots);
        }
        for (auto& r : roots) {
            r.multiplicity = static_cast<unsigned>(i + 1);
            // clip reporting to the requested interval
            if (r.hi < lo || r.lo > hi) continue;
            out.push_back(r);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const IsolatedRoot& x, const IsolatedRoot& y) { return x.lo + x.hi < y.lo + y.hi; });
    return out;
}

}  // namespace maglat
