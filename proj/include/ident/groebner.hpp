#pragma once

#include <set>
#include <tuple>

#include "ident/budget.hpp"
#include "ident/poly.hpp"

namespace ident {

/*
 * Buchberger engine over an arbitrary coefficient field K, with the product
 * and chain pair-elimination criteria and sugar selection. Output is the
 * reduced, monic Groebner basis sorted ascending by leading monomial, so
 * identical input yields identical output.
 */

template <class K>
PolyT<K> normal_form(PolyT<K> f, const std::vector<PolyT<K>>& basis) {
    if (basis.empty() || f.is_zero()) return f;
    PolyT<K> rem(f.ring());
    while (!f.is_zero()) {
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.is_zero()) continue;
            if (mono_divides(g.lead_mono(), f.lead_mono())) {
                Monomial m = mono_div(f.lead_mono(), g.lead_mono());
                K c = f.lead_coeff() / g.lead_coeff();
                f -= g.mono_scaled(m, c);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            PolyT<K> lt = PolyT<K>::from_terms(f.ring(), {{f.lead_mono(), f.lead_coeff()}});
            rem += lt;
            f -= lt;
        }
    }
    return rem;
}

template <class K>
PolyT<K> s_poly(const PolyT<K>& f, const PolyT<K>& g) {
    Monomial l = mono_lcm(f.lead_mono(), g.lead_mono());
    PolyT<K> a = f.mono_scaled(mono_div(l, f.lead_mono()), g.lead_coeff());
    PolyT<K> b = g.mono_scaled(mono_div(l, g.lead_mono()), f.lead_coeff());
    return a - b;
}

template <class K>
std::vector<PolyT<K>> interreduce(std::vector<PolyT<K>> gens) {
    for (bool changed = true; changed;) {
        changed = false;
        for (size_t i = 0; i < gens.size(); ++i) {
            if (gens[i].is_zero()) continue;
            std::vector<PolyT<K>> others;
            for (size_t j = 0; j < gens.size(); ++j)
                if (j != i && !gens[j].is_zero()) others.push_back(gens[j]);
            PolyT<K> r = normal_form(gens[i], others);
            if (r != gens[i]) {
                gens[i] = r;
                changed = true;
            }
        }
    }
    std::vector<PolyT<K>> out;
    for (auto& g : gens)
        if (!g.is_zero()) out.push_back(g.monic());
    std::sort(out.begin(), out.end(), [](const PolyT<K>& a, const PolyT<K>& b) {
        return a.ring()->order().compare(a.lead_mono(), b.lead_mono()) < 0;
    });
    return out;
}

template <class K>
std::vector<PolyT<K>> groebner_basis(const std::vector<PolyT<K>>& gens, const Budget& budget = Budget()) {
    std::vector<PolyT<K>> basis;
    for (const auto& g : gens)
        if (!g.is_zero()) basis.push_back(g.monic());
    if (basis.empty()) return basis;
    basis = interreduce(basis);
    const RingPtr ring = basis[0].ring();

    std::vector<long> sugar;
    for (const auto& g : basis) sugar.push_back(g.total_degree());

    // pending pair key: (sugar, lcm degree, i, j); lcm kept alongside
    struct Pair {
        long sug;
        Monomial lcm;
        int i, j;
    };
    auto pair_less = [&](const Pair& a, const Pair& b) {
        if (a.sug != b.sug) return a.sug < b.sug;
        int c = ring->order().compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    };
    std::vector<Pair> pending;
    std::set<std::pair<int, int>> pending_keys;

    auto push_pair = [&](int i, int j) {
        if (mono_coprime(basis[i].lead_mono(), basis[j].lead_mono())) return;  // product criterion
        Monomial l = mono_lcm(basis[i].lead_mono(), basis[j].lead_mono());
        long s = std::max(sugar[i] + mono_total_deg(l) - mono_total_deg(basis[i].lead_mono()),
                          sugar[j] + mono_total_deg(l) - mono_total_deg(basis[j].lead_mono()));
        pending.push_back({s, std::move(l), i, j});
        pending_keys.insert({i, j});
    };

    for (int i = 0; i < (int)basis.size(); ++i)
        for (int j = i + 1; j < (int)basis.size(); ++j) push_pair(i, j);

    while (!pending.empty()) {
        budget.check_clock("groebner");
        auto it = std::min_element(pending.begin(), pending.end(), pair_less);
        Pair p = *it;
        pending.erase(it);
        pending_keys.erase({p.i, p.j});

        // chain criterion: a third element divides the lcm and both side
        // pairs were already considered
        bool skip = false;
        for (int k = 0; k < (int)basis.size() && !skip; ++k) {
            if (k == p.i || k == p.j) continue;
            if (!mono_divides(basis[k].lead_mono(), p.lcm)) continue;
            auto key = [&](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
            if (!pending_keys.count(key(p.i, k)) && !pending_keys.count(key(p.j, k))) skip = true;
        }
        if (skip) continue;

        PolyT<K> h = normal_form(s_poly(basis[p.i], basis[p.j]), basis);
        if (h.is_zero()) continue;
        budget.check_degree(h.total_degree(), "groebner");
        h = h.monic();
        int idx = (int)basis.size();
        basis.push_back(h);
        sugar.push_back(p.sug);
        budget.check_size((long)basis.size(), "groebner");
        for (int i = 0; i < idx; ++i) push_pair(i, idx);
    }
    return interreduce(basis);
}

// Generators of the ideal's intersection with the subring excluding `drop`.
// The input must already carry an order eliminating `drop` (see
// Ring::elimination); the result is expressed in the same ring.
template <class K>
std::vector<PolyT<K>> elimination_ideal(const std::vector<PolyT<K>>& gb, const std::vector<int>& drop) {
    std::vector<PolyT<K>> out;
    for (const auto& g : gb) {
        bool free = true;
        for (int v : drop)
            if (g.contains_var(v)) {
                free = false;
                break;
            }
        if (free) out.push_back(g);
    }
    return out;
}

// ---- public exact-algebra surface over rational coefficients --------------

struct IdealGens {
    RingPtr ring;
    std::vector<MPoly> gens;  // deduplicated, zero excluded

    IdealGens(RingPtr r, std::vector<MPoly> gs) : ring(std::move(r)) {
        for (auto& g : gs) {
            if (g.is_zero()) continue;
            bool dup = false;
            for (const auto& h : gens)
                if (h == g) {
                    dup = true;
                    break;
                }
            if (!dup) gens.push_back(std::move(g));
        }
    }
};

// Reduced Groebner basis under the ring's own order.
IdealGens groebner(const IdealGens& ideal, const Budget& budget = Budget());
// Reduced Groebner basis under `order` (same variables).
IdealGens groebner(const IdealGens& ideal, const TermOrder& order, const Budget& budget = Budget());
// Intersection with the subring excluding the named variables.
IdealGens eliminate(const IdealGens& ideal, const std::vector<std::string>& drop, const Budget& budget = Budget());
// I : f^infinity via one Rabinowitsch variable and elimination.
IdealGens saturate(const IdealGens& ideal, const MPoly& f, const Budget& budget = Budget());

}  // namespace ident
