#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ident/diff.hpp"
#include "ident/linalg.hpp"

using namespace ident;

namespace {

// two-compartment style ring: params a01, a12, a21; base y
DiffRingPtr ring_51() { return DiffRing::make({"a01", "a12", "a21"}, {"y"}, 6); }

// slow-fast style: params k1, k2, eps_B; bases y1..y4
DiffRingPtr ring_52() { return DiffRing::make({"k1", "k2", "eps_B"}, {"y1", "y2", "y3", "y4"}, 8); }

DiffPoly io_51(const DiffRingPtr& dr) {
    DiffPoly y = DiffPoly::var(dr, {0, 0}), y1 = DiffPoly::var(dr, {0, 1}), y2 = DiffPoly::var(dr, {0, 2});
    DiffPoly a01 = DiffPoly::param(dr, 0), a12 = DiffPoly::param(dr, 1), a21 = DiffPoly::param(dr, 2);
    return y2 + (a01 + a12 + a21) * y1 + a01 * a12 * y;
}

}  // namespace

TEST_CASE("derive: basics and Leibniz") {
    auto dr = ring_52();
    DiffPoly y1 = DiffPoly::var(dr, {0, 0}), y4 = DiffPoly::var(dr, {3, 0});
    DiffPoly y1p = DiffPoly::var(dr, {0, 1}), y4p = DiffPoly::var(dr, {3, 1});
    CHECK(derive(y1) == y1p);
    CHECK(derive(y1 * y4) == y1p * y4 + y1 * y4p);
    DiffPoly k1 = DiffPoly::param(dr, 0);
    CHECK(derive(k1 * y1) == k1 * y1p);
    CHECK(derive(k1).is_zero());
}

TEST_CASE("derive: jet cap is an error") {
    auto dr = DiffRing::make({}, {"y"}, 1);
    DiffPoly ymax = DiffPoly::var(dr, {0, 1});
    CHECK_THROWS_AS(derive(ymax), JetCapError);
}

TEST_CASE("leader, initial, separant") {
    // p = y1 - a*y2 - b with ranking y1 > y2
    auto dr = DiffRing::make({"a", "b"}, {"y1", "y2"}, 4);
    Ranking r = Ranking::elimination(dr, {0, 1});
    DiffPoly y1 = DiffPoly::var(dr, {0, 0}), y2 = DiffPoly::var(dr, {1, 0});
    DiffPoly a = DiffPoly::param(dr, 0), b = DiffPoly::param(dr, 1);
    DiffPoly p = y1 - a * y2 - b;
    CHECK(leader(p, r) == DiffVar{0, 0});
    CHECK(initial(p, r) == DiffPoly::constant(dr, 1));
    CHECK(separant(p, r) == DiffPoly::constant(dr, 1));

    auto dr51 = ring_51();
    Ranking r51 = Ranking::orderly(dr51);
    DiffPoly p2 = io_51(dr51);
    CHECK(leader(p2, r51) == DiffVar{0, 2});
    CHECK(initial(p2, r51) == DiffPoly::constant(dr51, 1));

    // q1 = 2y2 + 2y1*y1' + 1 with ranking y2 > y1 > y3
    auto dr3 = DiffRing::make({}, {"y1", "y2", "y3"}, 4);
    Ranking r3 = Ranking::elimination(dr3, {1, 0, 2});
    DiffPoly q1 = DiffPoly::constant(dr3, 2) * DiffPoly::var(dr3, {1, 0}) +
                  DiffPoly::constant(dr3, 2) * DiffPoly::var(dr3, {0, 0}) * DiffPoly::var(dr3, {0, 1}) +
                  DiffPoly::constant(dr3, 1);
    CHECK(leader(q1, r3) == DiffVar{1, 0});
    CHECK(initial(q1, r3) == DiffPoly::constant(dr3, 2));
    CHECK_THROWS_AS(leader(DiffPoly::constant(dr3, 5), r3), std::domain_error);
}

TEST_CASE("ritt_reduce: already reduced input") {
    auto dr = ring_51();
    Ranking r = Ranking::orderly(dr);
    AutoreducedSet A({io_51(dr)}, r);
    DiffPoly f = DiffPoly::var(dr, {0, 1});  // y'
    auto res = ritt_reduce(f, A);
    CHECK(res.remainder == f);
    CHECK(res.hpower == DiffPoly::constant(dr, 1));
    CHECK(res.cofactors.empty());
}

TEST_CASE("ritt_reduce: second derivative against the order-2 equation") {
    auto dr = ring_51();
    Ranking r = Ranking::orderly(dr);
    AutoreducedSet A({io_51(dr)}, r);
    DiffPoly y = DiffPoly::var(dr, {0, 0}), y1 = DiffPoly::var(dr, {0, 1}), y2 = DiffPoly::var(dr, {0, 2});
    DiffPoly a01 = DiffPoly::param(dr, 0), a12 = DiffPoly::param(dr, 1), a21 = DiffPoly::param(dr, 2);
    auto res = ritt_reduce(y2, A);
    CHECK(res.remainder == -(a01 + a12 + a21) * y1 - a01 * a12 * y);
    CHECK(res.hpower == DiffPoly::constant(dr, 1));
}

TEST_CASE("ritt_reduce: third derivative against the slow-fast p2") {
    auto dr = ring_52();
    Ranking r = Ranking::orderly(dr);
    DiffPoly y1p = DiffPoly::var(dr, {0, 1}), y1pp = DiffPoly::var(dr, {0, 2}), y1ppp = DiffPoly::var(dr, {0, 3});
    DiffPoly k1 = DiffPoly::param(dr, 0), k2 = DiffPoly::param(dr, 1);
    DiffPoly p2 = y1ppp + (k1 + k2) * y1pp + k1 * k2 * y1p;
    AutoreducedSet A({p2}, r);
    auto res = ritt_reduce(y1ppp, A);
    CHECK(res.remainder == -(k1 + k2) * y1pp - k1 * k2 * y1p);
}

TEST_CASE("ritt_reduce: congruence witness with nontrivial powers") {
    // A = {y^2 - x-ish}: use q2-style example with nonlinear leader
    auto dr = DiffRing::make({}, {"y1", "y2", "y3"}, 6);
    Ranking r = Ranking::elimination(dr, {0, 1, 2});
    DiffPoly y1 = DiffPoly::var(dr, {0, 0}), y2 = DiffPoly::var(dr, {1, 0}), y3 = DiffPoly::var(dr, {2, 0});
    DiffPoly p1 = y1 * y1 + y2 * y2 + y3;
    DiffPoly p2 = DiffPoly::var(dr, {1, 1}) - DiffPoly::constant(dr, 1);
    DiffPoly p3 = DiffPoly::var(dr, {2, 1}) - DiffPoly::constant(dr, 1);
    AutoreducedSet A({p1, p2, p3}, r);
    // f = derivative monomial that forces separant use
    DiffPoly f = DiffPoly::var(dr, {0, 1}) * y2 + y1;
    auto res = ritt_reduce(f, A);
    // remainder must carry no derivative of any leader and lower leader degree
    for (size_t i = 0; i < A.size(); ++i) CHECK(is_reduced(res.remainder, A.elems()[i], r));
    // the congruence hpower*f == remainder + sum cof * theta(A[i])
    DiffPoly lhs = res.hpower * f;
    DiffPoly rhs = res.remainder;
    for (const auto& cf : res.cofactors) rhs += cf.cof * derive(A.elems()[cf.elem], cf.theta);
    CHECK(lhs == rhs);
}

TEST_CASE("compare_autoreduced") {
    auto dr = DiffRing::make({}, {"y"}, 4);
    Ranking r = Ranking::orderly(dr);
    AutoreducedSet A({DiffPoly::var(dr, {0, 1})}, r);                                  // {y'}
    AutoreducedSet B({DiffPoly::var(dr, {0, 2})}, r);                                  // {y''}
    CHECK(compare_autoreduced(A, B) == SetRankOrder::Lower);
    CHECK(compare_autoreduced(B, A) == SetRankOrder::Higher);
    CHECK(compare_autoreduced(A, A) == SetRankOrder::Equal);

    // longer set with equal matched ranks ranks lower
    auto dr2 = DiffRing::make({}, {"u", "v"}, 4);
    Ranking r2 = Ranking::elimination(dr2, {1, 0});  // v > u
    AutoreducedSet L({DiffPoly::var(dr2, {0, 1}), DiffPoly::var(dr2, {1, 0})}, r2);    // {u', v}
    AutoreducedSet S({DiffPoly::var(dr2, {0, 1})}, r2);                                // {u'}
    CHECK(compare_autoreduced(L, S) == SetRankOrder::Lower);
}

TEST_CASE("strip_factors") {
    auto dr = DiffRing::make({"a"}, {"y1", "y2"}, 4);
    Ranking r = Ranking::elimination(dr, {0, 1});
    DiffPoly a = DiffPoly::param(dr, 0);
    DiffPoly y1p = DiffPoly::var(dr, {0, 1});

    AutoreducedSet A({a * y1p}, r);
    auto S = strip_factors(A);
    CHECK(S.elems()[0] == y1p);

    DiffPoly y1 = DiffPoly::var(dr, {0, 0}), y2 = DiffPoly::var(dr, {1, 0});
    AutoreducedSet B({a * y1 - a * a * y2}, r);
    auto SB = strip_factors(B);
    CHECK(SB.elems()[0] == y1 - a * y2);
}

TEST_CASE("basic_set and characteristic_set") {
    auto dr = DiffRing::make({}, {"y1", "y2"}, 4);
    Ranking r = Ranking::elimination(dr, {0, 1});
    DiffPoly y1 = DiffPoly::var(dr, {0, 0}), y2 = DiffPoly::var(dr, {1, 0});
    DiffPoly y1p = DiffPoly::var(dr, {0, 1}), y2p = DiffPoly::var(dr, {1, 1});
    // y1 - y2 and y1' (reducible data): characteristic set should surface y2'
    auto C = characteristic_set({y1 - y2, y1p}, r);
    REQUIRE(C.size() == 2);
    CHECK(compare_rank(C.elems()[0], y2p, r) == 0);
    CHECK(leader(C.elems()[1], r) == DiffVar{0, 0});
}

TEST_CASE("canonical printing") {
    auto dr = ring_51();
    Ranking r = Ranking::orderly(dr);
    CHECK(to_string(io_51(dr), r) == "y'' + (a01 + a12 + a21)*y' + a01*a12*y");
    DiffPoly k = DiffPoly::param(dr, 0);
    DiffPoly y = DiffPoly::var(dr, {0, 0});
    CHECK(to_string(y - k, r) == "y - a01");
    // coefficient with denominator
    DiffPoly p = y.coeff_scaled(RatFunc(mpoly_var(dr->ring(), 1), mpoly_var(dr->ring(), 0)));
    CHECK(to_string(p, r) == "(a12/a01)*y");
}

TEST_CASE("property: ranking axioms on random derivative pairs") {
    auto dr = ring_52();
    std::vector<Ranking> rankings = {Ranking::orderly(dr), Ranking::elimination(dr, {1, 0, 2, 3})};
    Rng rng(2024);
    for (const auto& r : rankings) {
        for (int iter = 0; iter < 200; ++iter) {
            DiffVar x{(int)rng.uniform(0, 3), (int)rng.uniform(0, 7)};
            DiffVar y{(int)rng.uniform(0, 3), (int)rng.uniform(0, 7)};
            DiffVar dx{x.base, x.order + 1}, dy{y.base, y.order + 1};
            CHECK(r.compare(dx, x) > 0);  // delta(x) > x
            if (r.compare(x, y) > 0) CHECK(r.compare(dx, dy) > 0);
        }
    }
}

TEST_CASE("property: derive is additive and Leibniz") {
    auto dr = ring_52();
    Rng rng(7);
    auto random_poly = [&]() {
        DiffPoly p(dr);
        int nterms = 1 + (int)rng.uniform(0, 2);
        for (int t = 0; t < nterms; ++t) {
            DiffPoly term = DiffPoly::constant(dr, Rational((long)rng.uniform(-4, 4)));
            for (int f = 0; f < 2; ++f) {
                if (rng.uniform(0, 1)) {
                    term = term * DiffPoly::var(dr, {(int)rng.uniform(0, 3), (int)rng.uniform(0, 3)});
                } else {
                    term = term * DiffPoly::param(dr, (int)rng.uniform(0, 2));
                }
            }
            p += term;
        }
        return p;
    };
    for (int iter = 0; iter < 100; ++iter) {
        DiffPoly f = random_poly(), g = random_poly();
        CHECK(derive(f + g) == derive(f) + derive(g));
        CHECK(derive(f * g) == derive(f) * g + f * derive(g));
    }
}
