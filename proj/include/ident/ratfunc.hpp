#pragma once

#include "ident/poly.hpp"

namespace ident {

/*
 * Rational function num/den over a polynomial ring.
 * Normal form: gcd(num, den) = 1 and den has leading coefficient 1.
 */
class RatFunc {
  public:
    RatFunc() = default;  // detached
    explicit RatFunc(const MPoly& num);
    RatFunc(MPoly num, MPoly den);
    static RatFunc constant(const RingPtr& r, const Rational& c) { return RatFunc(mpoly_const(r, c)); }
    static RatFunc var(const RingPtr& r, int i) { return RatFunc(mpoly_var(r, i)); }

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }
    const RingPtr& ring() const { return num_.ring(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational as_rational() const;

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);

    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc inv() const;
    RatFunc map_vars(const RingPtr& target, const std::vector<int>& var_map) const {
        return RatFunc(num_.map_vars(target, var_map), den_.map_vars(target, var_map));
    }

  private:
    void normalize();
    MPoly num_, den_;
};

std::string to_string(const RatFunc& f);

// p with each variable i replaced by point[i]; exact.
RatFunc eval_poly(const MPoly& p, const std::vector<RatFunc>& point);
RatFunc eval_ratfunc(const RatFunc& f, const std::vector<RatFunc>& point);

}  // namespace ident
