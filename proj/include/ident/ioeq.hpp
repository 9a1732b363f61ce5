#pragma once

#include "ident/diff.hpp"
#include "ident/groebner.hpp"
#include "ident/model.hpp"

namespace ident {

/*
 * Input-output equations: the monic, factor-stripped characteristic
 * presentation of the model's differential ideal intersected with the
 * output/input subring, together with the coefficient decomposition
 *     p_i = f_{i,s_i+1} + sum_j c_{i,j} f_{i,j}
 * used by the Wronskian and multi-experiment machinery.
 */

struct Decomposition {
    std::vector<DiffPoly> f;   // f_1..f_s, rational-constant coefficients
    std::vector<RatFunc> c;    // matching coefficients in Q(params)
    DiffPoly f_const;          // f_{s+1}: all monomials with rational coefficients
    std::vector<Monomial> columns;  // Wronskian column layout: class monomials, constant class last
    int s() const { return (int)f.size(); }
};

class IOEquations {
  public:
    IOEquations(AutoreducedSet eqs, DiffRingPtr dring);

    const AutoreducedSet& equations() const { return eqs_; }
    const Ranking& ranking() const { return eqs_.ranking(); }
    const DiffRingPtr& dring() const { return dring_; }
    const std::vector<Decomposition>& decomposition() const { return decomp_; }
    size_t size() const { return eqs_.size(); }

  private:
    AutoreducedSet eqs_;
    DiffRingPtr dring_;
    std::vector<Decomposition> decomp_;
};

Decomposition decompose_equation(const DiffPoly& eq, const Ranking& r);

struct IOOptions {
    int max_prolongation = -1;  // cap on the jet depth; defaults to |states| + 3
    Budget budget;
};

// Builds the jet ring for a model's outputs and inputs (outputs first).
DiffRingPtr io_diff_ring(const ODEModel& m, int jet_cap);
// Default ranking: outputs block above inputs block, orderly inside.
Ranking default_io_ranking(const DiffRingPtr& dr, const ODEModel& m);
// Elimination ranking from a high-to-low list of output/input names.
Ranking ranking_from_names(const DiffRingPtr& dr, const std::vector<std::string>& high_to_low);

IOEquations io_equations(const ODEModel& m, const Ranking& ranking, const IOOptions& opts = {});

// p evaluated at the model's jets: output jets via Lie substitution, input
// jets as free symbols; identically zero iff p vanishes on the model.
RatFunc eval_at_jets(const DiffPoly& p, const ODEModel& m, const JetPoint& jets);

}  // namespace ident
