#include "ident/ratfunc.hpp"

#include <sstream>

namespace ident {

RatFunc::RatFunc(const MPoly& num) : num_(num), den_(mpoly_const(num.ring(), Rational(1))) {}

RatFunc::RatFunc(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = mpoly_const(num_.ring(), Rational(1));
        return;
    }
    if (!den_.is_constant()) {
        MPoly g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = divexact(num_, g);
            den_ = divexact(den_, g);
        }
    }
    Rational lc = den_.lead_coeff();
    if (!lc.is_one()) {
        num_ = num_.divided(lc);
        den_ = den_.divided(lc);
    }
}

Rational RatFunc::as_rational() const {
    if (num_.is_zero()) return Rational(0);
    if (!is_constant()) throw std::domain_error("RatFunc: not constant");
    return num_.constant_value() / den_.constant_value();
}

RatFunc RatFunc::operator-() const {
    RatFunc r(*this);
    r.num_ = -r.num_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ - b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) { return RatFunc(a.num_ * b.num_, a.den_ * b.den_); }

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::inv() const {
    if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
    return RatFunc(den_, num_);
}

std::string to_string(const RatFunc& f) {
    if (f.den().is_constant() && f.den().constant_value().is_one()) return to_string(f.num());
    std::ostringstream os;
    bool wrap_num = f.num().nterms() > 1;
    os << (wrap_num ? "(" : "") << to_string(f.num()) << (wrap_num ? ")" : "");
    os << "/";
    bool wrap_den = f.den().nterms() > 1 || mono_total_deg(f.den().lead_mono()) > 1 ||
                    !f.den().lead_coeff().is_one();
    os << (wrap_den ? "(" : "") << to_string(f.den()) << (wrap_den ? ")" : "");
    return os.str();
}

RatFunc eval_poly(const MPoly& p, const std::vector<RatFunc>& point) {
    if (point.empty()) throw std::logic_error("eval_poly: empty point");
    const RingPtr& target = point[0].ring();
    RatFunc acc = RatFunc(MPoly(target));
    for (const auto& t : p.terms()) {
        RatFunc v = RatFunc::constant(target, t.second);
        for (size_t i = 0; i < t.first.size(); ++i)
            for (unsigned k = 0; k < t.first[i]; ++k) v *= point[i];
        acc += v;
    }
    return acc;
}

RatFunc eval_ratfunc(const RatFunc& f, const std::vector<RatFunc>& point) {
    RatFunc d = eval_poly(f.den(), point);
    if (d.is_zero()) throw std::domain_error("eval_ratfunc: denominator vanishes at point");
    return eval_poly(f.num(), point) / d;
}

}  // namespace ident
