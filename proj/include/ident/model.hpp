#pragma once

#include "ident/budget.hpp"
#include "ident/ratfunc.hpp"

namespace ident {

/*
 * Rational ODE model
 *     x' = f(x, mu, u),  y = g(x, mu, u)
 * with rational right-hand sides. Everything lives in one ambient polynomial
 * ring laid out as [params | states | input jets], input jets up to jet_cap
 * so output derivatives stay expressible after Lie substitution. On
 * construction the common-denominator form (F, G, Q) is derived.
 */
class ODEModel {
  public:
    ODEModel(std::string name, std::vector<std::string> states, std::vector<std::string> params,
             std::vector<std::string> inputs, std::vector<std::string> outputs,
             std::vector<RatFunc> state_rhs, std::vector<RatFunc> output_rhs, int jet_cap);

    const std::string& name() const { return name_; }
    const std::vector<std::string>& states() const { return states_; }
    const std::vector<std::string>& params() const { return params_; }
    const std::vector<std::string>& inputs() const { return inputs_; }
    const std::vector<std::string>& outputs() const { return outputs_; }
    int jet_cap() const { return jet_cap_; }

    const RingPtr& ambient() const { return amb_; }
    int param_var(int p) const { return p; }
    int state_var(int i) const { return (int)params_.size() + i; }
    int input_var(int m, int order) const;

    // Ambient layout without a constructed model (for building rhs vectors).
    static RingPtr ambient_ring(const std::vector<std::string>& params, const std::vector<std::string>& states,
                                const std::vector<std::string>& inputs, int jet_cap);
    static int ambient_state_var(size_t nparams, int i) { return (int)nparams + i; }
    static int ambient_input_var(size_t nparams, size_t nstates, int jet_cap, int m, int order) {
        return (int)(nparams + nstates) + m * (jet_cap + 1) + order;
    }

    const RatFunc& state_rhs(int i) const { return state_rhs_[i]; }
    const RatFunc& output_rhs(int j) const { return output_rhs_[j]; }

    const MPoly& common_den() const { return Q_; }      // Q
    const MPoly& state_num(int i) const { return F_[i]; }
    const MPoly& output_num(int j) const { return G_[j]; }

    // Same model over a ring with a larger input-jet cap.
    ODEModel with_jet_cap(int cap) const;

  private:
    std::string name_;
    std::vector<std::string> states_, params_, inputs_, outputs_;
    int jet_cap_;
    RingPtr amb_;
    std::vector<RatFunc> state_rhs_, output_rhs_;
    MPoly Q_;
    std::vector<MPoly> F_, G_;
};

// d/dt on the ambient ring: states move by their right-hand sides, input
// jets shift up, parameters are constants.
RatFunc total_derivative(const ODEModel& m, const RatFunc& g);

/*
 * Output derivatives modulo the system: at(j, k) is y_j^(k) rewritten as a
 * rational function of states, parameters and input jets.
 */
class JetPoint {
  public:
    JetPoint(const ODEModel& m, int depth);
    int depth() const { return depth_; }
    const RatFunc& at(int output, int order) const { return table_.at(output).at(order); }

  private:
    int depth_;
    std::vector<std::vector<RatFunc>> table_;
};

inline JetPoint lie_substitute(const ODEModel& m, int depth) { return JetPoint(m, depth); }

// Parses the model file grammar; throws ParseError with line/column info.
ODEModel parse_model(const std::string& text);
// Canonical source form; parse_model(print_model(m)) reproduces m.
std::string print_model(const ODEModel& m);

// N-experiment replication: fresh copies of states/inputs/outputs named
// <name>#<i>, shared parameters.
ODEModel replicate(const ODEModel& m, int n);

// Benchmark family: x1' = c1 + sum c_i x_i, x_i^(h) = 0 lowered to chains,
// x_i' = 0 above h, y_i = x_i.
ODEModel gen_appendix(int n, int h);

}  // namespace ident
