#include "ident/groebner.hpp"

namespace ident {

namespace {

std::vector<int> identity_map(size_t n) {
    std::vector<int> m(n);
    for (size_t i = 0; i < n; ++i) m[i] = (int)i;
    return m;
}

std::vector<MPoly> move_to_ring(const std::vector<MPoly>& gens, const RingPtr& target,
                                const std::vector<int>& var_map) {
    std::vector<MPoly> out;
    out.reserve(gens.size());
    for (const auto& g : gens) out.push_back(g.map_vars(target, var_map));
    return out;
}

}  // namespace

IdealGens groebner(const IdealGens& ideal, const Budget& budget) {
    if (ideal.gens.empty()) throw std::invalid_argument("groebner: empty generator list");
    return IdealGens(ideal.ring, groebner_basis(ideal.gens, budget));
}

IdealGens groebner(const IdealGens& ideal, const TermOrder& order, const Budget& budget) {
    RingPtr r = Ring::reorder(ideal.ring, order);
    auto id = identity_map(r->nvars());
    IdealGens moved(r, move_to_ring(ideal.gens, r, id));
    return groebner(moved, budget);
}

IdealGens eliminate(const IdealGens& ideal, const std::vector<std::string>& drop, const Budget& budget) {
    std::vector<int> drop_idx;
    for (const auto& name : drop) {
        int i = ideal.ring->var_index(name);
        if (i < 0) throw std::invalid_argument("eliminate: unknown variable " + name);
        drop_idx.push_back(i);
    }
    RingPtr er = Ring::elimination(ideal.ring, drop_idx);
    auto id = identity_map(er->nvars());
    auto gb = groebner_basis(move_to_ring(ideal.gens, er, id), budget);
    auto kept = elimination_ideal(gb, drop_idx);
    // report in the original ring/order
    std::vector<MPoly> out = move_to_ring(kept, ideal.ring, id);
    if (out.empty()) out.push_back(MPoly(ideal.ring));  // zero ideal marker dropped by ctor
    return IdealGens(ideal.ring, out);
}

IdealGens saturate(const IdealGens& ideal, const MPoly& f, const Budget& budget) {
    if (f.is_zero()) throw std::invalid_argument("saturate: zero polynomial");
    if (f.is_constant()) return ideal;  // constant is a unit
    std::string tname = "_sat";
    while (ideal.ring->var_index(tname) >= 0) tname += "_";
    RingPtr ext = Ring::extend(ideal.ring, {tname});
    int tidx = ext->var_index(tname);
    auto up = identity_map(ideal.ring->nvars());
    std::vector<MPoly> gens = move_to_ring(ideal.gens, ext, up);
    // t*f - 1
    MPoly t = mpoly_var(ext, tidx);
    gens.push_back(t * f.map_vars(ext, up) - mpoly_const(ext, Rational(1)));
    RingPtr er = Ring::elimination(ext, {tidx});
    auto eid = identity_map(ext->nvars());
    auto gb = groebner_basis(move_to_ring(gens, er, eid), budget);
    auto kept = elimination_ideal(gb, {tidx});
    std::vector<int> down(er->nvars(), -1);
    for (size_t i = 0; i < ideal.ring->nvars(); ++i) down[i] = (int)i;
    std::vector<MPoly> out;
    for (const auto& g : kept) out.push_back(g.map_vars(ideal.ring, down));
    return IdealGens(ideal.ring, out);
}

}  // namespace ident
