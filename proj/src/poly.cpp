#include "ident/poly.hpp"

#include <sstream>

namespace ident {

MPoly mpoly_var(const RingPtr& r, int i) { return MPoly::var(r, i, Rational(1)); }
MPoly mpoly_const(const RingPtr& r, const Rational& c) { return MPoly(r, c); }

Rational integer_scale(const MPoly& p) {
    if (p.is_zero()) return Rational(1);
    mpz_class g = 0, l = 1;
    for (const auto& t : p.terms()) {
        g = gcd(g, t.second.num());
        l = lcm(l, t.second.den());
    }
    Rational s(g, l);
    if (p.lead_coeff().sgn() < 0) s = -s;
    return s;
}

MPoly integer_normal(const MPoly& p) {
    if (p.is_zero()) return p;
    return p.divided(integer_scale(p));
}

// ---- exact division --------------------------------------------------------

bool try_divexact(const MPoly& a, const MPoly& b, MPoly& quot) {
    a.check(b);
    if (b.is_zero()) throw std::domain_error("divexact: division by zero");
    MPoly rem = a;
    MPoly q(a.ring());
    const Monomial& lb = b.lead_mono();
    const Rational& cb = b.lead_coeff();
    while (!rem.is_zero()) {
        const Monomial& lr = rem.lead_mono();
        if (!mono_divides(lb, lr)) return false;
        Monomial m = mono_div(lr, lb);
        Rational c = rem.lead_coeff() / cb;
        MPoly step = MPoly::from_terms(a.ring(), {{m, c}});
        q += step;
        rem -= b.mono_scaled(m, c);
    }
    quot = q;
    return true;
}

MPoly divexact(const MPoly& a, const MPoly& b) {
    MPoly q;
    if (!try_divexact(a, b, q)) throw std::domain_error("divexact: not divisible");
    return q;
}

// ---- gcd: primitive PRS on the highest occurring variable ------------------

namespace {

int main_variable(const MPoly& a, const MPoly& b) {
    for (int v = (int)a.ring()->nvars() - 1; v >= 0; --v)
        if (a.contains_var(v) || b.contains_var(v)) return v;
    return -1;
}

// content of p w.r.t. a single variable v (gcd of the v-coefficients)
MPoly content_in_var(const MPoly& p, int v) {
    MPoly c(p.ring());
    long d = p.degree_in(v);
    for (long k = d; k >= 0; --k) {
        MPoly ck = p.coeff_of(v, (unsigned)k);
        if (ck.is_zero()) continue;
        c = c.is_zero() ? integer_normal(ck) : gcd(c, ck);
        if (c.is_constant()) break;
    }
    return c;
}

// pseudo-remainder of f by g w.r.t. v (up to lc(g)^k scaling)
MPoly prem(MPoly f, const MPoly& g, int v) {
    long dg = g.degree_in(v);
    MPoly lg = g.coeff_of(v, (unsigned)dg);
    while (!f.is_zero()) {
        long df = f.degree_in(v);
        if (df < dg) break;
        MPoly lf = f.coeff_of(v, (unsigned)df);
        Monomial shift = mono_one(f.ring()->nvars());
        shift[v] = (unsigned)(df - dg);
        MPoly shifted = MPoly::from_terms(f.ring(), {{shift, Rational(1)}});
        f = f * lg - g * (lf * shifted);
    }
    return f;
}

}  // namespace

MPoly gcd(const MPoly& a, const MPoly& b) {
    if (a.is_zero()) return integer_normal(b);
    if (b.is_zero()) return integer_normal(a);
    if (a.is_constant() || b.is_constant()) {
        // over a field the gcd with a constant is 1; keep integer-content info
        // out of it: rational coefficients make constants units
        return mpoly_const(a.ring(), Rational(1));
    }
    int v = main_variable(a, b);
    MPoly ca = content_in_var(a, v), cb = content_in_var(b, v);
    MPoly pa = divexact(a, ca), pb = divexact(b, cb);
    MPoly c = gcd(ca, cb);

    MPoly f = pa, g = pb;
    if (f.degree_in(v) < g.degree_in(v)) std::swap(f, g);
    while (!g.is_zero() && g.degree_in(v) > 0) {
        MPoly r = prem(f, g, v);
        f = g;
        if (r.is_zero()) {
            g = r;
        } else {
            g = divexact(r, content_in_var(r, v));
        }
    }
    MPoly result;
    if (g.is_zero()) {
        result = c * f;
    } else {
        result = c;  // v-primitive parts are coprime
    }
    return integer_normal(result);
}

MPoly lcm(const MPoly& a, const MPoly& b) {
    if (a.is_zero() || b.is_zero()) return MPoly(a.ring());
    return integer_normal(divexact(a * b, gcd(a, b)));
}

MPoly content_wrt(const MPoly& p, const std::vector<char>& grouped) {
    // partition each term into (grouped part, coefficient part)
    std::map<Monomial, std::vector<MPoly::Term>> groups;
    for (const auto& t : p.terms()) {
        Monomial key = mono_one(p.ring()->nvars());
        Monomial rest = t.first;
        for (size_t i = 0; i < key.size(); ++i)
            if (grouped[i]) {
                key[i] = rest[i];
                rest[i] = 0;
            }
        groups[key].push_back({rest, t.second});
    }
    MPoly c(p.ring());
    for (auto& kv : groups) {
        MPoly coeff = MPoly::from_terms(p.ring(), std::move(kv.second));
        c = c.is_zero() ? integer_normal(coeff) : gcd(c, coeff);
        if (c.is_constant()) break;
    }
    return c;
}

Rational eval(const MPoly& p, const std::vector<Rational>& point) {
    Rational acc(0);
    for (const auto& t : p.terms()) {
        Rational v = t.second;
        for (size_t i = 0; i < t.first.size(); ++i)
            for (unsigned k = 0; k < t.first[i]; ++k) v *= point[i];
        acc += v;
    }
    return acc;
}

std::string to_string(const MPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : p.terms()) {
        Rational c = t.second;
        if (first) {
            if (c.sgn() < 0) {
                os << "-";
                c = -c;
            }
            first = false;
        } else {
            os << (c.sgn() < 0 ? " - " : " + ");
            c = c.abs();
        }
        bool printed_coeff = false;
        if (!c.is_one() || mono_is_one(t.first)) {
            os << c.str();
            printed_coeff = true;
        }
        bool any = printed_coeff;
        for (size_t i = 0; i < t.first.size(); ++i) {
            if (!t.first[i]) continue;
            if (any) os << "*";
            os << p.ring()->var_name(i);
            if (t.first[i] > 1) os << "^" << t.first[i];
            any = true;
        }
    }
    return os.str();
}

}  // namespace ident
