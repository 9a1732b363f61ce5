#include "ident/ioeq.hpp"

#include <optional>
#include <sstream>

namespace ident {

// ---- rings and rankings ------------------------------------------------------

DiffRingPtr io_diff_ring(const ODEModel& m, int jet_cap) {
    std::vector<std::string> bases = m.outputs();
    for (const auto& u : m.inputs()) bases.push_back(u);
    return DiffRing::make(m.params(), bases, jet_cap);
}

Ranking default_io_ranking(const DiffRingPtr& dr, const ODEModel& m) {
    std::vector<std::vector<int>> blocks;
    std::vector<int> ys, us;
    for (int j = 0; j < (int)m.outputs().size(); ++j) ys.push_back(j);
    for (int u = 0; u < (int)m.inputs().size(); ++u) us.push_back((int)m.outputs().size() + u);
    blocks.push_back(ys);
    if (!us.empty()) blocks.push_back(us);
    return Ranking(dr, blocks);
}

Ranking ranking_from_names(const DiffRingPtr& dr, const std::vector<std::string>& high_to_low) {
    std::vector<int> order;
    for (const auto& n : high_to_low) {
        int b = dr->base_index(n);
        if (b < 0) throw std::invalid_argument("ranking: unknown output/input " + n);
        order.push_back(b);
    }
    if (order.size() != dr->bases().size())
        throw std::invalid_argument("ranking: list must cover every output and input");
    return Ranking::elimination(dr, order);
}

// ---- jet substitution ----------------------------------------------------------

RatFunc eval_at_jets(const DiffPoly& p, const ODEModel& m, const JetPoint& jets) {
    const auto& dr = p.dring();
    const RingPtr& amb = m.ambient();
    std::vector<RatFunc> point(dr->ring()->nvars(), RatFunc(MPoly(amb)));
    for (size_t i = 0; i < dr->params().size(); ++i) point[i] = RatFunc::var(amb, (int)i);
    size_t ny = m.outputs().size();
    for (size_t b = 0; b < dr->bases().size(); ++b)
        for (int o = 0; o <= dr->jet_cap(); ++o) {
            int idx = dr->jet_index((int)b, o);
            bool used = p.num().contains_var(idx) || p.den().contains_var(idx);
            if (!used) continue;
            if (b < ny) {
                point[idx] = jets.at((int)b, o);
            } else {
                point[idx] = RatFunc::var(amb, m.input_var((int)(b - ny), o));
            }
        }
    RatFunc den = eval_poly(p.den(), point);
    return eval_poly(p.num(), point) / den;
}

// ---- candidate construction ------------------------------------------------------

namespace {

MPoly subst_var(const MPoly& p, int v, const MPoly& repl) {
    MPoly acc(p.ring());
    std::vector<MPoly> powers = {mpoly_const(p.ring(), Rational(1))};
    for (const auto& t : p.terms()) {
        unsigned e = t.first[v];
        while (powers.size() <= e) powers.push_back(powers.back() * repl);
        Monomial m = t.first;
        m[v] = 0;
        acc += powers[e].mono_scaled(m, t.second);
    }
    return acc;
}

struct CandidateData {
    AutoreducedSet stripped;
    std::vector<DiffPoly> generators;  // content-cleared elimination-ideal generators
};

// Builds the depth-D elimination candidate: prolong the outputs to order D,
// eliminate the states algebraically, then take a characteristic set of the
// resulting generators under the requested ranking.
std::optional<CandidateData> candidate_at(const ODEModel& m0, const Ranking& R, int D, const Budget& budget) {
    ODEModel m = m0.with_jet_cap(std::max(m0.jet_cap(), D + 1));
    JetPoint jets(m, D);
    const DiffRingPtr& dr = R.dring();

    const size_t np = m.params().size(), ny = m.outputs().size(), nu = m.inputs().size(),
                 nx = m.states().size();
    // prolongation ring: [params | y jets | u jets | states | saturation]
    bool sat = !m.common_den().is_constant();
    std::vector<std::string> vars;
    for (const auto& p : m.params()) vars.push_back(p);
    for (size_t j = 0; j < ny; ++j)
        for (int k = 0; k <= D; ++k) vars.push_back(DiffRing::jet_name(m.outputs()[j], k));
    for (size_t u = 0; u < nu; ++u)
        for (int k = 0; k <= D; ++k) vars.push_back(DiffRing::jet_name(m.inputs()[u], k));
    for (const auto& s : m.states()) vars.push_back(s);
    if (sat) vars.push_back("_sat");
    size_t njets = (ny + nu) * (size_t)(D + 1);
    TermOrder ord;
    ord.blocks.resize(2);
    for (size_t v = np + njets; v < vars.size(); ++v) ord.blocks[0].push_back((int)v);  // states, sat
    for (size_t v = 0; v < np + njets; ++v) ord.blocks[1].push_back((int)v);
    RingPtr P = Ring::make(vars, ord);

    auto yj = [&](size_t j, int k) { return (int)(np + j * (D + 1) + k); };
    auto uj = [&](size_t u, int k) { return (int)(np + ny * (size_t)(D + 1) + u * (D + 1) + k); };
    auto xv = [&](size_t i) { return (int)(np + njets + i); };

    // model ambient -> P
    std::vector<int> amb_map(m.ambient()->nvars(), -1);
    for (size_t p = 0; p < np; ++p) amb_map[p] = (int)p;
    for (size_t i = 0; i < nx; ++i) amb_map[m.state_var((int)i)] = xv(i);
    for (size_t u = 0; u < nu; ++u)
        for (int k = 0; k <= std::min(D, m.jet_cap()); ++k) amb_map[m.input_var((int)u, k)] = uj(u, k);

    std::vector<MPoly> gens;
    for (size_t j = 0; j < ny; ++j)
        for (int k = 0; k <= D; ++k) {
            const RatFunc& eta = jets.at((int)j, k);
            MPoly g = mpoly_var(P, yj(j, k)) * eta.den().map_vars(P, amb_map) - eta.num().map_vars(P, amb_map);
            gens.push_back(g);
        }
    MPoly Qp = m.common_den().map_vars(P, amb_map);

    // substitute away states entering linearly with a constant coefficient
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < nx && !changed; ++i) {
            int v = xv(i);
            for (size_t gi = 0; gi < gens.size() && !changed; ++gi) {
                const MPoly& g = gens[gi];
                if (g.degree_in(v) != 1) continue;
                MPoly A = g.coeff_of(v, 1);
                if (!A.is_constant()) continue;
                MPoly repl = g.coeff_of(v, 0).divided(-A.constant_value());
                gens.erase(gens.begin() + (long)gi);
                for (auto& h : gens) h = subst_var(h, v, repl);
                Qp = subst_var(Qp, v, repl);
                changed = true;
            }
        }
    }

    if (sat && !Qp.is_constant()) {
        gens.push_back(mpoly_var(P, (int)P->nvars() - 1) * Qp - mpoly_const(P, Rational(1)));
    }
    std::vector<MPoly> live;
    for (auto& g : gens)
        if (!g.is_zero()) live.push_back(std::move(g));

    std::vector<int> drop;
    for (size_t v = np + njets; v < P->nvars(); ++v) drop.push_back((int)v);
    auto gb = groebner_basis(live, budget);
    auto kept = elimination_ideal(gb, drop);
    if (kept.empty()) return std::nullopt;

    // P -> jet ring
    std::vector<int> to_dr(P->nvars(), -1);
    for (size_t p = 0; p < np; ++p) to_dr[p] = (int)p;
    for (size_t j = 0; j < ny; ++j)
        for (int k = 0; k <= D; ++k) to_dr[yj(j, k)] = dr->jet_index((int)j, k);
    for (size_t u = 0; u < nu; ++u)
        for (int k = 0; k <= D; ++k) to_dr[uj(u, k)] = dr->jet_index((int)(ny + u), k);

    std::vector<char> jet_flags(dr->ring()->nvars(), 1);
    for (size_t p = 0; p < np; ++p) jet_flags[p] = 0;

    std::vector<DiffPoly> dps;
    for (const auto& g : kept) {
        MPoly n = integer_normal(g.map_vars(dr->ring(), to_dr));
        MPoly cont = content_wrt(n, jet_flags);
        if (!cont.is_constant()) n = divexact(n, cont);
        dps.emplace_back(dr, std::move(n));
    }
    AutoreducedSet cs = characteristic_set(dps, R, budget);
    return CandidateData{strip_factors(cs), std::move(dps)};
}

// full jet ring over states+outputs+inputs for the model-relation check
struct FullRing {
    DiffRingPtr dr;
    Ranking ranking;
    std::vector<int> io_to_full;  // base map
};

FullRing full_diff_ring(const ODEModel& m, const Ranking& io_ranking, int cap) {
    std::vector<std::string> bases = m.states();
    for (const auto& y : m.outputs()) bases.push_back(y);
    for (const auto& u : m.inputs()) bases.push_back(u);
    DiffRingPtr dr = DiffRing::make(m.params(), bases, cap);
    std::vector<std::vector<int>> blocks;
    std::vector<int> xs;
    for (int i = 0; i < (int)m.states().size(); ++i) xs.push_back(i);
    blocks.push_back(xs);
    for (const auto& blk : io_ranking.blocks()) {
        std::vector<int> shifted;
        for (int b : blk) shifted.push_back(b + (int)m.states().size());
        blocks.push_back(shifted);
    }
    std::vector<int> base_map;
    for (size_t b = 0; b < io_ranking.dring()->bases().size(); ++b)
        base_map.push_back((int)m.states().size() + (int)b);
    return FullRing{dr, Ranking(dr, blocks), base_map};
}

// Q*x_i' - F_i and Q*y_j - G_j expressed in the full jet ring
std::vector<DiffPoly> model_relations(const ODEModel& m, const FullRing& fr) {
    const auto& dr = fr.dr;
    std::vector<int> amb_map(m.ambient()->nvars(), -1);
    for (size_t p = 0; p < m.params().size(); ++p) amb_map[p] = (int)p;
    for (size_t i = 0; i < m.states().size(); ++i) amb_map[m.state_var((int)i)] = dr->jet_index((int)i, 0);
    size_t nin = m.states().size() + m.outputs().size();
    for (size_t u = 0; u < m.inputs().size(); ++u)
        for (int k = 0; k <= std::min(m.jet_cap(), dr->jet_cap()); ++k)
            amb_map[m.input_var((int)u, k)] = dr->jet_index((int)(nin + u), k);

    DiffPoly Q(dr, m.common_den().map_vars(dr->ring(), amb_map));
    std::vector<DiffPoly> rels;
    for (size_t i = 0; i < m.states().size(); ++i) {
        DiffPoly xi1 = DiffPoly::var(dr, {(int)i, 1});
        rels.push_back(Q * xi1 - DiffPoly(dr, m.state_num((int)i).map_vars(dr->ring(), amb_map)));
    }
    for (size_t j = 0; j < m.outputs().size(); ++j) {
        DiffPoly yj = DiffPoly::var(dr, {(int)(m.states().size() + j), 0});
        rels.push_back(Q * yj - DiffPoly(dr, m.output_num((int)j).map_vars(dr->ring(), amb_map)));
    }
    return rels;
}

// evaluates a full-ring DiffPoly on the model's jets (states included)
bool vanishes_on_model(const DiffPoly& p, const ODEModel& m, const FullRing& fr) {
    const auto& dr = fr.dr;
    const RingPtr& amb = m.ambient();
    size_t nx = m.states().size(), ny = m.outputs().size();
    int max_order = 0;
    for (const auto& t : p.num().terms())
        for (size_t v = m.params().size(); v < t.first.size(); ++v)
            if (t.first[v]) max_order = std::max(max_order, dr->jet_of((int)v).order);
    ODEModel mm = m.with_jet_cap(std::max(m.jet_cap(), max_order + 1));
    JetPoint jets(mm, max_order);
    // state jet table
    std::vector<std::vector<RatFunc>> xjets(nx);
    for (size_t i = 0; i < nx; ++i) {
        xjets[i].push_back(RatFunc::var(mm.ambient(), mm.state_var((int)i)));
        for (int k = 0; k < max_order; ++k) xjets[i].push_back(total_derivative(mm, xjets[i].back()));
    }
    std::vector<RatFunc> point(dr->ring()->nvars(), RatFunc(MPoly(mm.ambient())));
    for (size_t pi = 0; pi < m.params().size(); ++pi) point[pi] = RatFunc::var(mm.ambient(), (int)pi);
    for (size_t b = 0; b < dr->bases().size(); ++b)
        for (int o = 0; o <= dr->jet_cap(); ++o) {
            int idx = dr->jet_index((int)b, o);
            if (!p.num().contains_var(idx)) continue;
            if (b < nx) {
                point[idx] = xjets[b][o];
            } else if (b < nx + ny) {
                point[idx] = jets.at((int)(b - nx), o);
            } else {
                point[idx] = RatFunc::var(mm.ambient(), mm.input_var((int)(b - nx - ny), o));
            }
        }
    return eval_poly(p.num(), point).is_zero();
}

bool validate_candidate(const CandidateData& cand, const ODEModel& m, const Ranking& R, int D) {
    const AutoreducedSet& C = cand.stripped;
    // vanishing on the model
    {
        ODEModel mm = m.with_jet_cap(std::max(m.jet_cap(), D + 1));
        JetPoint jets(mm, D);
        for (const auto& p : C.elems())
            if (!eval_at_jets(p, mm, jets).is_zero()) return false;
    }
    // initials lie in the non-leading ring
    {
        std::vector<char> is_leader(R.dring()->ring()->nvars(), 0);
        for (const auto& v : C.leaders()) is_leader[R.dring()->jet_index(v)] = 1;
        for (const auto& p : C.elems()) {
            DiffPoly init = initial(p, R);
            for (const auto& t : init.num().terms())
                for (size_t v = 0; v < t.first.size(); ++v)
                    if (t.first[v] && is_leader[v]) return false;
        }
    }
    // every elimination-ideal generator reduces to zero
    for (const auto& g : cand.generators)
        if (!ritt_reduce(g, C).remainder.is_zero()) return false;
    // model relations: Ritt remainder against the candidate vanishes on the jets
    {
        FullRing fr = full_diff_ring(m, R, R.dring()->jet_cap());
        std::vector<DiffPoly> lifted;
        for (const auto& p : C.elems()) lifted.push_back(map_dring(p, fr.dr, fr.io_to_full));
        AutoreducedSet CF(lifted, fr.ranking);
        for (const auto& rel : model_relations(m, fr)) {
            DiffPoly rem = ritt_reduce(rel, CF).remainder;
            if (!rem.is_zero() && !vanishes_on_model(rem, m, fr)) return false;
        }
    }
    return true;
}

}  // namespace

// ---- decomposition ---------------------------------------------------------------

Decomposition decompose_equation(const DiffPoly& eq, const Ranking& r) {
    auto monos = eq.jet_monomials(r);
    std::vector<RatFunc> coeffs;
    for (const auto& m : monos) coeffs.push_back(eq.jet_coeff(m));

    struct Class {
        std::vector<size_t> members;
        RatFunc rep_coeff;
        Monomial rep;
    };
    std::vector<Class> classes;
    std::vector<size_t> const_members;
    for (size_t t = 0; t < monos.size(); ++t) {
        if (coeffs[t].is_constant()) {
            const_members.push_back(t);
            continue;
        }
        bool placed = false;
        for (auto& cl : classes) {
            if ((coeffs[t] / cl.rep_coeff).is_constant()) {
                cl.members.push_back(t);
                placed = true;
                break;
            }
        }
        if (!placed) classes.push_back({{t}, coeffs[t], monos[t]});
    }
    std::sort(classes.begin(), classes.end(), [&](const Class& a, const Class& b) {
        long da = mono_total_deg(a.rep), db = mono_total_deg(b.rep);
        if (da != db) return da < db;
        return r.mono_compare(a.rep, b.rep) > 0;
    });

    const auto& dr = eq.dring();
    Decomposition d;
    for (const auto& cl : classes) {
        std::vector<MPoly::Term> ts;
        for (size_t t : cl.members) {
            Rational q = (coeffs[t] / cl.rep_coeff).as_rational();
            ts.push_back({monos[t], q});
            d.columns.push_back(monos[t]);
        }
        d.f.emplace_back(dr, MPoly::from_terms(dr->ring(), std::move(ts)));
        d.c.push_back(cl.rep_coeff);
    }
    std::vector<MPoly::Term> ts;
    for (size_t t : const_members) {
        ts.push_back({monos[t], coeffs[t].as_rational()});
        d.columns.push_back(monos[t]);
    }
    d.f_const = DiffPoly(dr, MPoly::from_terms(dr->ring(), std::move(ts)));
    return d;
}

IOEquations::IOEquations(AutoreducedSet eqs, DiffRingPtr dring)
    : eqs_(std::move(eqs)), dring_(std::move(dring)) {
    for (const auto& e : eqs_.elems()) decomp_.push_back(decompose_equation(e, eqs_.ranking()));
}

// ---- driver ---------------------------------------------------------------------

IOEquations io_equations(const ODEModel& m, const Ranking& ranking, const IOOptions& opts) {
    int d_start = std::max<int>(1, (int)m.states().size());
    int d_cap = opts.max_prolongation > 0 ? opts.max_prolongation : d_start + 3;
    if (ranking.dring()->jet_cap() < d_cap + 2)
        throw JetCapError("io_equations: ranking's jet ring cap " + std::to_string(ranking.dring()->jet_cap()) +
                          " too small for prolongation depth " + std::to_string(d_cap + 1));

    std::optional<CandidateData> prev = candidate_at(m, ranking, d_start, opts.budget);
    std::optional<CandidateData> last_seen = prev;
    for (int D = d_start; D < d_cap; ++D) {
        opts.budget.check_clock("io_equations");
        std::optional<CandidateData> next = candidate_at(m, ranking, D + 1, opts.budget);
        if (next) last_seen = next;
        if (prev && next &&
            compare_autoreduced(prev->stripped, next->stripped) == SetRankOrder::Equal &&
            validate_candidate(*prev, m, ranking, D)) {
            return IOEquations(prev->stripped, ranking.dring());
        }
        prev = std::move(next);
    }
    std::ostringstream diag;
    diag << "io_equations: prolongation budget exhausted at depth " << d_cap;
    if (last_seen) {
        diag << "; last candidate:";
        for (const auto& p : last_seen->stripped.elems()) diag << " {" << to_string(p, ranking) << "}";
    }
    throw BudgetError(diag.str());
}

}  // namespace ident
