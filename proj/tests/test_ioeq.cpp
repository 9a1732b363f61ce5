#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "ident/ioeq.hpp"

using namespace ident;

TEST_CASE("two-compartment input-output equation") {
    ODEModel m = corpus::load(corpus::two_compartment);
    DiffRingPtr dr = io_diff_ring(m, 8);
    Ranking R = default_io_ranking(dr, m);
    IOEquations io = io_equations(m, R);
    REQUIRE(io.size() == 1);
    CHECK(to_string(io.equations().elems()[0], R) == "y'' + (a01 + a12 + a21)*y' + a01*a12*y");

    // decomposition: f1 = y', f2 = y, constant part y''; s = 2
    const Decomposition& d = io.decomposition()[0];
    CHECK(d.s() == 2);
    CHECK(to_string(d.f[0], R) == "y'");
    CHECK(to_string(d.f[1], R) == "y");
    CHECK(to_string(d.f_const, R) == "y''");
    CHECK(to_string(d.c[0]) == "a01 + a12 + a21");
    CHECK(to_string(d.c[1]) == "a01*a12");
}

TEST_CASE("worked linear-pair example: io part under default ranking") {
    ODEModel m = corpus::load(corpus::linear_pair);
    DiffRingPtr dr = io_diff_ring(m, 8);
    Ranking R = default_io_ranking(dr, m);  // y1 > y2, orderly
    IOEquations io = io_equations(m, R);
    REQUIRE(io.size() == 2);
    // sorted ascending by rank: y1 - a*y2 - b (leader y1), then y2'
    CHECK(to_string(io.equations().elems()[0], R) == "y1 - a*y2 - b");
    CHECK(to_string(io.equations().elems()[1], R) == "y2'");

    const Decomposition& d0 = io.decomposition()[0];
    CHECK(d0.s() == 2);
    CHECK(to_string(d0.f_const, R) == "y1");
    const Decomposition& d1 = io.decomposition()[1];
    CHECK(d1.s() == 0);
    CHECK(d1.c.empty());
}

TEST_CASE("slow-fast equations under the paper's ranking") {
    ODEModel m = corpus::load(corpus::slow_fast);
    DiffRingPtr dr = io_diff_ring(m, 12);
    Ranking R = ranking_from_names(dr, {"y2", "y1", "y3", "y4"});
    IOOptions opts;
    IOEquations io = io_equations(m, R, opts);
    REQUIRE(io.size() == 4);

    // expected, up to our monic scaling: equations ascending by rank are
    // y4', y3', p2 = y1''' + (k1+k2)y1'' + k1k2 y1', p1 (leader y2)
    const auto& eqs = io.equations().elems();
    CHECK(to_string(eqs[0], R) == "y4'");
    CHECK(to_string(eqs[1], R) == "y3'");

    DiffPoly y1p = DiffPoly::var(dr, {0, 1}), y1pp = DiffPoly::var(dr, {0, 2}), y1ppp = DiffPoly::var(dr, {0, 3});
    DiffPoly k1 = DiffPoly::param(dr, 0), k2 = DiffPoly::param(dr, 1), epsB = DiffPoly::param(dr, 2);
    CHECK(eqs[2] == y1ppp + (k1 + k2) * y1pp + k1 * k2 * y1p);

    // p1 as displayed: k1k2(y2 - y1y4) - epsB k1 y1' - k2 y1'y3 - y1''y3,
    // divided by its y2-coefficient k1k2
    DiffPoly y2 = DiffPoly::var(dr, {1, 0}), y3 = DiffPoly::var(dr, {2, 0}), y4 = DiffPoly::var(dr, {3, 0});
    DiffPoly y1 = DiffPoly::var(dr, {0, 0});
    DiffPoly p1_paper = k1 * k2 * (y2 - y1 * y4) - epsB * k1 * y1p - k2 * y1p * y3 - y1pp * y3;
    DiffPoly p1_monic = p1_paper.coeff_scaled(RatFunc(mpoly_var(dr->ring(), 0) * mpoly_var(dr->ring(), 1)).inv());
    CHECK(eqs[3] == p1_monic);

    // s-values: p1 -> 3, p2 -> 2, y3' and y4' -> 0
    CHECK(io.decomposition()[0].s() == 0);
    CHECK(io.decomposition()[1].s() == 0);
    CHECK(io.decomposition()[2].s() == 2);
    CHECK(io.decomposition()[3].s() == 3);
}

TEST_CASE("vanishing invariant: equations are zero on the model jets") {
    for (const char* src : {corpus::two_compartment, corpus::linear_pair, corpus::offset_line,
                            corpus::theta_line, corpus::driven_integrator, corpus::saturating}) {
        ODEModel m = corpus::load(src);
        DiffRingPtr dr = io_diff_ring(m, 2 * (int)m.states().size() + 8);
        Ranking R = default_io_ranking(dr, m);
        IOEquations io = io_equations(m, R);
        int depth = 0;
        for (const auto& e : io.equations().elems())
            for (const auto& t : e.num().terms())
                for (size_t v = m.params().size(); v < t.first.size(); ++v)
                    if (t.first[v]) depth = std::max(depth, dr->jet_of((int)v).order);
        ODEModel mm = m.with_jet_cap(std::max(m.jet_cap(), depth + 1));
        JetPoint jets(mm, depth);
        for (const auto& e : io.equations().elems()) CHECK(eval_at_jets(e, mm, jets).is_zero());
    }
}

TEST_CASE("decomposition reconstructs the equation") {
    for (const char* src : {corpus::two_compartment, corpus::slow_fast, corpus::theta_line, corpus::saturating}) {
        ODEModel m = corpus::load(src);
        DiffRingPtr dr = io_diff_ring(m, 2 * (int)m.states().size() + 8);
        Ranking R = default_io_ranking(dr, m);
        IOEquations io = io_equations(m, R);
        for (size_t i = 0; i < io.size(); ++i) {
            const auto& d = io.decomposition()[i];
            DiffPoly sum = d.f_const;
            for (int j = 0; j < d.s(); ++j) sum += d.f[j].coeff_scaled(d.c[j]);
            CHECK(sum == io.equations().elems()[i]);
            // f parts have rational-constant coefficients and distinct monomials
            for (const auto& f : d.f) CHECK(f.den().is_constant());
        }
    }
}

TEST_CASE("input model: driven integrator") {
    ODEModel m = corpus::load(corpus::driven_integrator);
    DiffRingPtr dr = io_diff_ring(m, 8);
    Ranking R = default_io_ranking(dr, m);
    IOEquations io = io_equations(m, R);
    REQUIRE(io.size() == 1);
    // y' = p*u
    CHECK(to_string(io.equations().elems()[0], R) == "y' - p*u");
}

TEST_CASE("rational right-hand side: saturating model") {
    ODEModel m = corpus::load(corpus::saturating);
    DiffRingPtr dr = io_diff_ring(m, 8);
    Ranking R = default_io_ranking(dr, m);
    IOEquations io = io_equations(m, R);
    REQUIRE(io.size() == 1);
    // (k+y)y' = v*y, monic by the y'*y coefficient
    DiffPoly y = DiffPoly::var(dr, {0, 0}), yp = DiffPoly::var(dr, {0, 1});
    DiffPoly v = DiffPoly::param(dr, 0), k = DiffPoly::param(dr, 1);
    CHECK(io.equations().elems()[0] == yp * y + k * yp - v * y);
}

TEST_CASE("replication keeps the coefficient set") {
    ODEModel m = corpus::load(corpus::two_compartment);
    for (int N : {1, 2}) {
        ODEModel rm = replicate(m, N);
        CHECK(rm.states().size() == N * m.states().size());
        DiffRingPtr dr = io_diff_ring(rm, 2 * (int)rm.states().size() + 8);
        Ranking R = default_io_ranking(dr, rm);
        IOEquations io = io_equations(rm, R);
        REQUIRE(io.size() == (size_t)N);
        // every copy's equation carries the same coefficients
        for (size_t i = 0; i < io.size(); ++i) {
            const auto& d = io.decomposition()[i];
            REQUIRE(d.s() == 2);
            CHECK(to_string(d.c[0]) == "a01 + a12 + a21");
            CHECK(to_string(d.c[1]) == "a01*a12");
        }
    }
}

TEST_CASE("prolongation cap errors loudly") {
    ODEModel m = corpus::load(corpus::two_compartment);
    DiffRingPtr dr = io_diff_ring(m, 20);
    Ranking R = default_io_ranking(dr, m);
    IOOptions opts;
    opts.max_prolongation = 1;  // below the needed order 2
    CHECK_THROWS_AS(io_equations(m, R, opts), BudgetError);
}
