#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ident/linalg.hpp"

using namespace ident;

namespace {

Matrix<RatFunc> from_polys(const RingPtr& r, std::vector<std::vector<MPoly>> rows) {
    Matrix<RatFunc> m(rows.size(), rows[0].size(), RatFunc(MPoly(r)));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = RatFunc(rows[i][j]);
    return m;
}

}  // namespace

TEST_CASE("rref: identity fixed point and pivots") {
    auto r = Ring::make({"x"});
    MPoly one = mpoly_const(r, Rational(1)), zero(r);
    auto I = from_polys(r, {{one, zero}, {zero, one}});
    CHECK(rref(I) == I);

    MPoly x = mpoly_var(r, 0);
    // [[x, x^2],[1, x]] has rank 1; rref = [[1, x],[0,0]]
    auto m = from_polys(r, {{x, x * x}, {one, x}});
    auto rr = rref(m);
    CHECK(rr.at(0, 0) == RatFunc(one));
    CHECK(rr.at(0, 1) == RatFunc(x));
    CHECK(rr.at(1, 0).is_zero());
    CHECK(rr.at(1, 1).is_zero());
    CHECK(rref_rank(rr) == 1);
    CHECK(rank_symbolic(m) == 1);
}

TEST_CASE("rref row space is preserved") {
    auto r = Ring::make({"a", "b"});
    MPoly a = mpoly_var(r, 0), b = mpoly_var(r, 1), one = mpoly_const(r, Rational(1));
    auto m = from_polys(r, {{a, b, one}, {a * a, a * b, a}, {b, one, MPoly(r)}});
    auto rr = rref(m);
    CHECK(rref_rank(rr) == rank_symbolic(m));
    // every original row must be an exact combination of the rref rows: check
    // by reducing against pivots
    for (size_t i = 0; i < m.rows(); ++i) {
        std::vector<RatFunc> row;
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
        for (size_t pr = 0; pr < rr.rows(); ++pr) {
            size_t pc = 0;
            while (pc < rr.cols() && rr.at(pr, pc).is_zero()) ++pc;
            if (pc == rr.cols()) continue;
            RatFunc f = row[pc];
            if (f.is_zero()) continue;
            for (size_t j = 0; j < rr.cols(); ++j) row[j] -= f * rr.at(pr, j);
        }
        for (const auto& v : row) CHECK(v.is_zero());
    }
}

TEST_CASE("symbolic rank: zero and full") {
    auto r = Ring::make({"x", "y"});
    MPoly zero(r);
    auto z = from_polys(r, {{zero, zero}, {zero, zero}});
    CHECK(rank_symbolic(z) == 0);
    MPoly x = mpoly_var(r, 0), y = mpoly_var(r, 1), one = mpoly_const(r, Rational(1));
    auto f = from_polys(r, {{x, y}, {y, x}});
    CHECK(rank_symbolic(f) == 2);
    // rank with rational-function entries
    Matrix<RatFunc> g(2, 2, RatFunc(MPoly(r)));
    g.at(0, 0) = RatFunc(x) / RatFunc(y);
    g.at(0, 1) = RatFunc(one);
    g.at(1, 0) = RatFunc(x * x) / RatFunc(y * y);
    g.at(1, 1) = RatFunc(x) / RatFunc(y);
    CHECK(rank_symbolic(g) == 1);
}

TEST_CASE("probabilistic rank") {
    auto r = Ring::make({"x", "y"});
    MPoly x = mpoly_var(r, 0), y = mpoly_var(r, 1), zero(r);
    auto m = from_polys(r, {{x * y, x}, {y * y, y}});  // rank 1
    CHECK(rank_probabilistic(m, 0, 3) == 1);
    CHECK(rank_probabilistic(m, 12345, 3) == 1);
    auto z1 = from_polys(r, {{zero}});
    CHECK(rank_probabilistic(z1, 0, 1) == 0);
    // never exceeds the symbolic rank
    auto f = from_polys(r, {{x, y}, {y, x}});
    for (uint64_t seed : {0ull, 1ull, 99ull}) CHECK(rank_probabilistic(f, seed, 2) <= rank_symbolic(f));
    CHECK_THROWS(rank_probabilistic(m, 0, 0));
}

TEST_CASE("deterministic rng") {
    Rng a(42), b(42);
    for (int i = 0; i < 10; ++i) CHECK(a.next() == b.next());
    Rng c(7);
    for (int i = 0; i < 100; ++i) {
        int64_t v = c.uniform(-5, 5);
        CHECK(v >= -5);
        CHECK(v <= 5);
    }
}
