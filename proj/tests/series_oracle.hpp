#pragma once

#include <vector>

#include "ident/linalg.hpp"
#include "ident/model.hpp"

/*
 * Independent oracle for Lie substitution: integrates the ODE as a truncated
 * Taylor series with exact rational arithmetic and compares the series
 * coefficients of the outputs against the symbolic jet entries evaluated at
 * the expansion point. Deliberately does not share any code with
 * total_derivative.
 */
namespace oracle {

using ident::Rational;
using Series = std::vector<Rational>;  // coefficients of t^0 .. t^K

inline Series s_const(Rational c, size_t K) {
    Series s(K + 1, Rational(0));
    s[0] = c;
    return s;
}
inline Series s_add(const Series& a, const Series& b) {
    Series r(a.size(), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}
inline Series s_mul(const Series& a, const Series& b) {
    Series r(a.size(), Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; i + j < a.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}
inline Series s_div(const Series& a, const Series& b) {
    if (b[0].is_zero()) throw std::domain_error("series division by zero constant term");
    Series q(a.size(), Rational(0));
    for (size_t n = 0; n < a.size(); ++n) {
        Rational acc = a[n];
        for (size_t k = 0; k < n; ++k) acc -= q[k] * b[n - k];
        q[n] = acc / b[0];
    }
    return q;
}

struct Point {
    std::vector<Rational> params;               // one per model parameter
    std::vector<Rational> state0;               // initial state values
    std::vector<std::vector<Rational>> u_coeff; // per input: series coefficients
};

// Taylor coefficients of every output up to order K.
inline std::vector<Series> output_series(const ident::ODEModel& m, const Point& pt, size_t K) {
    using namespace ident;
    size_t nv = m.ambient()->nvars();
    auto eval_rf = [&](const RatFunc& f, const std::vector<Series>& var_series) {
        auto eval_poly = [&](const MPoly& p) {
            Series acc(K + 1, Rational(0));
            for (const auto& t : p.terms()) {
                Series term = s_const(t.second, K);
                for (size_t v = 0; v < nv; ++v)
                    for (unsigned e = 0; e < t.first[v]; ++e) term = s_mul(term, var_series[v]);
                acc = s_add(acc, term);
            }
            return acc;
        };
        return s_div(eval_poly(f.num()), eval_poly(f.den()));
    };

    // variable series: params constant, inputs prescribed, states integrated
    std::vector<Series> vs(nv, s_const(Rational(0), K));
    for (size_t p = 0; p < m.params().size(); ++p) vs[m.param_var((int)p)] = s_const(pt.params[p], K);
    for (size_t u = 0; u < m.inputs().size(); ++u) {
        // u^(l) as a series: derivative shifts of the prescribed series
        Series base(K + 1, Rational(0));
        for (size_t i = 0; i <= K && i < pt.u_coeff[u].size(); ++i) base[i] = pt.u_coeff[u][i];
        Series cur = base;
        for (int o = 0; o <= m.jet_cap(); ++o) {
            vs[m.input_var((int)u, o)] = cur;
            Series next(K + 1, Rational(0));
            for (size_t i = 0; i + 1 <= K; ++i) next[i] = cur[i + 1] * Rational((long)(i + 1));
            cur = next;
        }
    }
    for (size_t s = 0; s < m.states().size(); ++s) vs[m.state_var((int)s)] = s_const(pt.state0[s], K);

    for (size_t order = 0; order < K; ++order) {
        for (size_t s = 0; s < m.states().size(); ++s) {
            Series rhs = eval_rf(m.state_rhs((int)s), vs);
            vs[m.state_var((int)s)][order + 1] = rhs[order] / Rational((long)(order + 1));
        }
    }

    std::vector<Series> out;
    for (size_t j = 0; j < m.outputs().size(); ++j) out.push_back(eval_rf(m.output_rhs((int)j), vs));
    return out;
}

// Evaluation point for symbolic jets: states at t=0, u^(l)(0) = l! * u_l.
inline std::vector<Rational> jet_eval_point(const ident::ODEModel& m, const Point& pt) {
    std::vector<Rational> point(m.ambient()->nvars(), Rational(0));
    for (size_t p = 0; p < m.params().size(); ++p) point[m.param_var((int)p)] = pt.params[p];
    for (size_t s = 0; s < m.states().size(); ++s) point[m.state_var((int)s)] = pt.state0[s];
    for (size_t u = 0; u < m.inputs().size(); ++u) {
        Rational fact(1);
        for (int o = 0; o <= m.jet_cap(); ++o) {
            Rational c = o < (int)pt.u_coeff[u].size() ? pt.u_coeff[u][o] : Rational(0);
            point[m.input_var((int)u, o)] = c * fact;
            fact *= Rational((long)(o + 1));
        }
    }
    return point;
}

}  // namespace oracle
