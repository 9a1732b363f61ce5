#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ident/rational.hpp"
#include "ident/ring.hpp"

namespace ident {

// ---- monomial helpers ----------------------------------------------------

inline Monomial mono_one(size_t n) { return Monomial(n, 0); }

inline bool mono_is_one(const Monomial& m) {
    for (unsigned e : m)
        if (e) return false;
    return true;
}

inline long mono_total_deg(const Monomial& m) {
    long d = 0;
    for (unsigned e : m) d += e;
    return d;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline bool mono_divides(const Monomial& a, const Monomial& b) {  // a | b
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Monomial mono_div(const Monomial& b, const Monomial& a) {  // b / a
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = b[i] - a[i];
    return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

inline bool mono_coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] && b[i]) return false;
    return true;
}

// ---- sparse polynomial over a coefficient field K -------------------------

/*
 * Terms are kept sorted descending under the ring's term order, with no zero
 * coefficients. All binary operations require both operands to share a ring
 * (same variables and order).
 */
template <class K>
class PolyT {
  public:
    using Term = std::pair<Monomial, K>;

    PolyT() = default;  // detached; only assignable
    explicit PolyT(RingPtr r) : ring_(std::move(r)) {}
    PolyT(RingPtr r, const K& c) : ring_(std::move(r)) {
        if (!c.is_zero()) terms_.push_back({mono_one(ring_->nvars()), c});
    }

    static PolyT var(const RingPtr& r, int i, const K& one) {
        PolyT p(r);
        Monomial m = mono_one(r->nvars());
        m.at(i) = 1;
        p.terms_.push_back({std::move(m), one});
        return p;
    }

    static PolyT from_terms(RingPtr r, std::vector<Term> ts) {
        PolyT p(std::move(r));
        std::sort(ts.begin(), ts.end(), [&](const Term& a, const Term& b) {
            return p.ring_->order().compare(a.first, b.first) > 0;
        });
        for (auto& t : ts) {
            if (t.second.is_zero()) continue;
            if (!p.terms_.empty() && p.terms_.back().first == t.first) {
                p.terms_.back().second += t.second;
                if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
            } else {
                p.terms_.push_back(std::move(t));
            }
        }
        return p;
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t nterms() const { return terms_.size(); }

    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && mono_is_one(terms_[0].first)); }
    // Constant term value; zero polynomial handled by caller via is_zero().
    const K& constant_value() const { return terms_[0].second; }

    const Monomial& lead_mono() const { return terms_.front().first; }
    const K& lead_coeff() const { return terms_.front().second; }

    long total_degree() const {
        long d = -1;
        for (const auto& t : terms_) d = std::max(d, mono_total_deg(t.first));
        return d;
    }
    long degree_in(int v) const {
        long d = 0;
        for (const auto& t : terms_) d = std::max<long>(d, t.first[v]);
        return d;
    }
    bool contains_var(int v) const {
        for (const auto& t : terms_)
            if (t.first[v]) return true;
        return false;
    }

    PolyT operator-() const {
        PolyT r(*this);
        for (auto& t : r.terms_) t.second = -t.second;
        return r;
    }

    friend PolyT operator+(const PolyT& a, const PolyT& b) { return merged(a, b, false); }
    friend PolyT operator-(const PolyT& a, const PolyT& b) { return merged(a, b, true); }
    PolyT& operator+=(const PolyT& o) { return *this = *this + o; }
    PolyT& operator-=(const PolyT& o) { return *this = *this - o; }

    friend PolyT operator*(const PolyT& a, const PolyT& b) {
        a.check(b);
        auto cmp = [&](const Monomial& x, const Monomial& y) { return a.ring_->order().compare(x, y) > 0; };
        std::map<Monomial, K, decltype(cmp)> acc(cmp);
        for (const auto& ta : a.terms_)
            for (const auto& tb : b.terms_) {
                Monomial m = mono_mul(ta.first, tb.first);
                K c = ta.second * tb.second;
                auto it = acc.find(m);
                if (it == acc.end()) {
                    if (!c.is_zero()) acc.emplace(std::move(m), std::move(c));
                } else {
                    it->second += c;
                    if (it->second.is_zero()) acc.erase(it);
                }
            }
        PolyT r(a.ring_);
        for (auto& kv : acc) r.terms_.push_back({kv.first, kv.second});
        return r;
    }
    PolyT& operator*=(const PolyT& o) { return *this = *this * o; }

    PolyT scaled(const K& c) const {
        PolyT r(ring_);
        if (c.is_zero()) return r;
        r.terms_ = terms_;
        for (auto& t : r.terms_) t.second = t.second * c;
        return r;
    }
    PolyT divided(const K& c) const {
        PolyT r(ring_);
        r.terms_ = terms_;
        for (auto& t : r.terms_) t.second = t.second / c;
        return r;
    }
    PolyT mono_scaled(const Monomial& m, const K& c) const {
        PolyT r(ring_);
        if (c.is_zero()) return r;
        r.terms_ = terms_;
        for (auto& t : r.terms_) {
            t.first = mono_mul(t.first, m);
            t.second = t.second * c;
        }
        return r;
    }

    PolyT monic() const { return is_zero() ? *this : divided(lead_coeff()); }

    friend bool operator==(const PolyT& a, const PolyT& b) {
        if (!same_ring(a.ring_, b.ring_)) return false;
        if (a.terms_.size() != b.terms_.size()) return false;
        for (size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].first != b.terms_[i].first || !(a.terms_[i].second == b.terms_[i].second))
                return false;
        return true;
    }
    friend bool operator!=(const PolyT& a, const PolyT& b) { return !(a == b); }

    // K(coefficient)-level partial derivative.
    PolyT derivative(int v) const {
        std::vector<Term> ts;
        for (const auto& t : terms_) {
            unsigned e = t.first[v];
            if (!e) continue;
            Monomial m = t.first;
            m[v] -= 1;
            K c = t.second;
            for (unsigned k = 1; k < e; ++k) c += t.second;  // c = e * coeff
            ts.push_back({std::move(m), std::move(c)});
        }
        return from_terms(ring_, std::move(ts));
    }

    // Coefficient of v^k, as a polynomial with v's exponent zeroed.
    PolyT coeff_of(int v, unsigned k) const {
        std::vector<Term> ts;
        for (const auto& t : terms_) {
            if (t.first[v] != k) continue;
            Monomial m = t.first;
            m[v] = 0;
            ts.push_back({std::move(m), t.second});
        }
        return from_terms(ring_, std::move(ts));
    }

    // Remaps this polynomial onto `target`; var_map[i] is the target index of
    // variable i (must cover every variable actually present).
    PolyT map_vars(const RingPtr& target, const std::vector<int>& var_map) const {
        std::vector<Term> ts;
        for (const auto& t : terms_) {
            Monomial m = mono_one(target->nvars());
            for (size_t i = 0; i < t.first.size(); ++i) {
                if (!t.first[i]) continue;
                if (var_map[i] < 0) throw std::logic_error("map_vars: variable not mapped: " + ring_->var_name(i));
                m[var_map[i]] += t.first[i];
            }
            ts.push_back({std::move(m), t.second});
        }
        return from_terms(target, std::move(ts));
    }

    void check(const PolyT& o) const {
        if (!same_ring(ring_, o.ring_)) throw std::logic_error("PolyT: ring mismatch");
    }

  private:
    static PolyT merged(const PolyT& a, const PolyT& b, bool neg) {
        a.check(b);
        PolyT r(a.ring_);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        size_t i = 0, j = 0;
        const auto& ord = a.ring_->order();
        while (i < a.terms_.size() && j < b.terms_.size()) {
            int c = ord.compare(a.terms_[i].first, b.terms_[j].first);
            if (c > 0) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (c < 0) {
                r.terms_.push_back(b.terms_[j]);
                if (neg) r.terms_.back().second = -r.terms_.back().second;
                ++j;
            } else {
                K s = neg ? a.terms_[i].second - b.terms_[j].second : a.terms_[i].second + b.terms_[j].second;
                if (!s.is_zero()) r.terms_.push_back({a.terms_[i].first, std::move(s)});
                ++i, ++j;
            }
        }
        for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
        for (; j < b.terms_.size(); ++j) {
            r.terms_.push_back(b.terms_[j]);
            if (neg) r.terms_.back().second = -r.terms_.back().second;
        }
        return r;
    }

    RingPtr ring_;
    std::vector<Term> terms_;
};

using MPoly = PolyT<Rational>;

// ---- MPoly (rational coefficients) specifics ------------------------------

// Canonical string: terms descending, explicit '*', '^' for powers > 1.
std::string to_string(const MPoly& p);
MPoly mpoly_var(const RingPtr& r, int i);
MPoly mpoly_const(const RingPtr& r, const Rational& c);

// Scales so coefficients are coprime integers and the leading one is positive.
MPoly integer_normal(const MPoly& p);
// integer_normal factor pulled out: p == scale * integer_normal(p).
Rational integer_scale(const MPoly& p);

// gcd normalized to integer-primitive with positive leading coefficient.
MPoly gcd(const MPoly& a, const MPoly& b);
MPoly lcm(const MPoly& a, const MPoly& b);
// Exact division; throws std::domain_error if not divisible.
MPoly divexact(const MPoly& a, const MPoly& b);
bool try_divexact(const MPoly& a, const MPoly& b, MPoly& quot);

// gcd of the coefficients of `p` viewed as a polynomial in the variables
// flagged by `grouped` (coefficients live in the complementary variables).
MPoly content_wrt(const MPoly& p, const std::vector<char>& grouped);

Rational eval(const MPoly& p, const std::vector<Rational>& point);

}  // namespace ident
