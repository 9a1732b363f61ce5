#include "ident/diff.hpp"

#include <algorithm>
#include <sstream>

namespace ident {

// ---- DiffRing --------------------------------------------------------------

std::string DiffRing::jet_name(const std::string& base, int order) {
    if (order <= 3) return base + std::string(order, '\'');
    return base + "^(" + std::to_string(order) + ")";
}

DiffRingPtr DiffRing::make(std::vector<std::string> params, std::vector<std::string> bases, int jet_cap) {
    auto dr = std::shared_ptr<DiffRing>(new DiffRing());
    dr->params_ = std::move(params);
    dr->bases_ = std::move(bases);
    dr->jet_cap_ = jet_cap;
    std::vector<std::string> names = dr->params_;
    for (const auto& b : dr->bases_)
        for (int o = 0; o <= jet_cap; ++o) names.push_back(jet_name(b, o));
    dr->ring_ = Ring::make(std::move(names));
    return dr;
}

int DiffRing::jet_index(int base, int order) const {
    if (order < 0 || order > jet_cap_)
        throw JetCapError(bases_.at(base) + " order " + std::to_string(order) + " (cap " +
                          std::to_string(jet_cap_) + ")");
    return (int)params_.size() + base * (jet_cap_ + 1) + order;
}

DiffVar DiffRing::jet_of(int ring_var) const {
    int k = ring_var - (int)params_.size();
    return DiffVar{k / (jet_cap_ + 1), k % (jet_cap_ + 1)};
}

int DiffRing::base_index(const std::string& name) const {
    for (int i = 0; i < (int)bases_.size(); ++i)
        if (bases_[i] == name) return i;
    return -1;
}

// ---- Ranking ---------------------------------------------------------------

Ranking::Ranking(DiffRingPtr dring, std::vector<std::vector<int>> base_blocks)
    : dring_(std::move(dring)), blocks_(std::move(base_blocks)) {
    pos_.assign(dring_->bases().size(), {-1, -1});
    for (int b = 0; b < (int)blocks_.size(); ++b)
        for (int p = 0; p < (int)blocks_[b].size(); ++p) pos_.at(blocks_[b][p]) = {b, p};
    for (const auto& pr : pos_)
        if (pr.first < 0) throw std::logic_error("Ranking: blocks do not cover all bases");
    for (int b = 0; b < (int)dring_->bases().size(); ++b)
        for (int o = 0; o <= dring_->jet_cap(); ++o) jets_desc_.push_back(dring_->jet_index(b, o));
    std::sort(jets_desc_.begin(), jets_desc_.end(), [&](int a, int b) {
        return compare(dring_->jet_of(a), dring_->jet_of(b)) > 0;
    });
}

Ranking Ranking::orderly(const DiffRingPtr& dring) {
    std::vector<int> all(dring->bases().size());
    for (int i = 0; i < (int)all.size(); ++i) all[i] = i;
    return Ranking(dring, {all});
}

Ranking Ranking::elimination(const DiffRingPtr& dring, const std::vector<int>& bases_high_to_low) {
    std::vector<std::vector<int>> blocks;
    for (int b : bases_high_to_low) blocks.push_back({b});
    return Ranking(dring, std::move(blocks));
}

int Ranking::compare(const DiffVar& a, const DiffVar& b) const {
    const auto& pa = pos_[a.base];
    const auto& pb = pos_[b.base];
    if (pa.first != pb.first) return pa.first < pb.first ? 1 : -1;  // earlier block is higher
    if (a.order != b.order) return a.order > b.order ? 1 : -1;
    if (pa.second != pb.second) return pa.second < pb.second ? 1 : -1;
    return 0;
}

int Ranking::mono_compare(const Monomial& a, const Monomial& b) const {
    for (int v : jets_desc_) {
        if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
    }
    return 0;
}

// ---- DiffPoly --------------------------------------------------------------

DiffPoly::DiffPoly(DiffRingPtr dr)
    : dring_(std::move(dr)), num_(dring_->ring()), den_(mpoly_const(dring_->ring(), Rational(1))) {}

DiffPoly::DiffPoly(DiffRingPtr dr, MPoly num)
    : dring_(std::move(dr)), num_(std::move(num)), den_(mpoly_const(dring_->ring(), Rational(1))) {}

DiffPoly::DiffPoly(DiffRingPtr dr, MPoly num, MPoly den)
    : dring_(std::move(dr)), num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("DiffPoly: zero denominator");
    for (const auto& t : den_.terms())
        for (size_t i = 0; i < t.first.size(); ++i)
            if (t.first[i] && !dring_->is_param((int)i))
                throw std::logic_error("DiffPoly: denominator must involve parameters only");
    normalize();
}

DiffPoly DiffPoly::var(const DiffRingPtr& dr, const DiffVar& v) {
    return DiffPoly(dr, mpoly_var(dr->ring(), dr->jet_index(v)));
}
DiffPoly DiffPoly::param(const DiffRingPtr& dr, int p) {
    return DiffPoly(dr, mpoly_var(dr->ring(), dr->param_index(p)));
}
DiffPoly DiffPoly::constant(const DiffRingPtr& dr, const Rational& c) {
    return DiffPoly(dr, mpoly_const(dr->ring(), c));
}

namespace {
std::vector<char> jet_flags(const DiffRing& dr) {
    std::vector<char> f(dr.ring()->nvars(), 1);
    for (size_t i = 0; i < dr.params().size(); ++i) f[i] = 0;
    return f;
}
}  // namespace

void DiffPoly::normalize() {
    if (num_.is_zero()) {
        den_ = mpoly_const(dring_->ring(), Rational(1));
        return;
    }
    if (!den_.is_constant()) {
        MPoly cont = content_wrt(num_, jet_flags(*dring_));
        MPoly g = gcd(cont, den_);
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

bool DiffPoly::is_diff_constant() const {
    for (const auto& t : num_.terms())
        for (size_t i = 0; i < t.first.size(); ++i)
            if (t.first[i] && !dring_->is_param((int)i)) return false;
    return true;
}

DiffPoly DiffPoly::operator-() const {
    DiffPoly r(*this);
    r.num_ = -r.num_;
    return r;
}

DiffPoly operator+(const DiffPoly& a, const DiffPoly& b) {
    if (a.den_ == b.den_) return DiffPoly(a.dring_, a.num_ + b.num_, a.den_);
    return DiffPoly(a.dring_, a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
DiffPoly operator-(const DiffPoly& a, const DiffPoly& b) {
    if (a.den_ == b.den_) return DiffPoly(a.dring_, a.num_ - b.num_, a.den_);
    return DiffPoly(a.dring_, a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
DiffPoly operator*(const DiffPoly& a, const DiffPoly& b) {
    return DiffPoly(a.dring_, a.num_ * b.num_, a.den_ * b.den_);
}

DiffPoly DiffPoly::scaled(const Rational& c) const {
    return DiffPoly(dring_, num_.scaled(c), den_);
}

DiffPoly DiffPoly::coeff_scaled(const RatFunc& c) const {
    return DiffPoly(dring_, num_ * c.num(), den_ * c.den());
}

std::vector<Monomial> DiffPoly::jet_monomials(const Ranking& r) const {
    std::vector<Monomial> out;
    for (const auto& t : num_.terms()) {
        Monomial jet = t.first;
        for (size_t i = 0; i < dring_->params().size(); ++i) jet[i] = 0;
        bool seen = false;
        for (const auto& m : out)
            if (m == jet) {
                seen = true;
                break;
            }
        if (!seen) out.push_back(std::move(jet));
    }
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return r.mono_compare(a, b) > 0; });
    return out;
}

RatFunc DiffPoly::jet_coeff(const Monomial& jet_mono) const {
    std::vector<MPoly::Term> ts;
    for (const auto& t : num_.terms()) {
        bool match = true;
        Monomial params_only = mono_one(num_.ring()->nvars());
        for (size_t i = 0; i < t.first.size(); ++i) {
            if (dring_->is_param((int)i)) {
                params_only[i] = t.first[i];
            } else if (t.first[i] != jet_mono[i]) {
                match = false;
                break;
            }
        }
        if (match) ts.push_back({params_only, t.second});
    }
    return RatFunc(MPoly::from_terms(num_.ring(), std::move(ts)), den_);
}

// ---- derivation ------------------------------------------------------------

DiffPoly derive(const DiffPoly& f) {
    const auto& dr = f.dring();
    std::vector<MPoly::Term> ts;
    for (const auto& t : f.num().terms()) {
        for (size_t i = dr->params().size(); i < t.first.size(); ++i) {
            unsigned e = t.first[i];
            if (!e) continue;
            DiffVar v = dr->jet_of((int)i);
            int bumped = dr->jet_index(v.base, v.order + 1);  // throws at the cap
            Monomial m = t.first;
            m[i] -= 1;
            m[bumped] += 1;
            ts.push_back({std::move(m), t.second * Rational((long)e)});
        }
    }
    return DiffPoly(dr, MPoly::from_terms(f.num().ring(), std::move(ts)), f.den());
}

DiffPoly derive(const DiffPoly& f, int times) {
    DiffPoly g = f;
    for (int i = 0; i < times; ++i) g = derive(g);
    return g;
}

// ---- leader machinery ------------------------------------------------------

DiffVar leader(const DiffPoly& f, const Ranking& r) {
    std::optional<DiffVar> best;
    const auto& dr = f.dring();
    for (const auto& t : f.num().terms())
        for (size_t i = dr->params().size(); i < t.first.size(); ++i) {
            if (!t.first[i]) continue;
            DiffVar v = dr->jet_of((int)i);
            if (!best || r.compare(v, *best) > 0) best = v;
        }
    if (!best) throw std::domain_error("leader: differential constant");
    return *best;
}

long leader_degree(const DiffPoly& f, const Ranking& r) {
    return f.num().degree_in(f.dring()->jet_index(leader(f, r)));
}

DiffPoly initial(const DiffPoly& f, const Ranking& r) {
    int v = f.dring()->jet_index(leader(f, r));
    long d = f.num().degree_in(v);
    return DiffPoly(f.dring(), f.num().coeff_of(v, (unsigned)d), f.den());
}

DiffPoly separant(const DiffPoly& f, const Ranking& r) {
    int v = f.dring()->jet_index(leader(f, r));
    return DiffPoly(f.dring(), f.num().derivative(v), f.den());
}

int compare_rank(const DiffPoly& f, const DiffPoly& g, const Ranking& r) {
    bool fc = f.is_diff_constant(), gc = g.is_diff_constant();
    if (fc && gc) return 0;
    if (fc) return -1;
    if (gc) return 1;
    DiffVar lf = leader(f, r), lg = leader(g, r);
    int c = r.compare(lf, lg);
    if (c != 0) return c;
    long df = leader_degree(f, r), dg = leader_degree(g, r);
    return df == dg ? 0 : (df < dg ? -1 : 1);
}

bool is_reduced(const DiffPoly& f, const DiffPoly& g, const Ranking& r) {
    if (f.is_diff_constant()) return true;
    const auto& dr = f.dring();
    DiffVar v = leader(g, r);
    for (const auto& t : f.num().terms())
        for (size_t i = dr->params().size(); i < t.first.size(); ++i) {
            if (!t.first[i]) continue;
            DiffVar w = dr->jet_of((int)i);
            if (w.base == v.base && w.order > v.order) return false;
        }
    return f.num().degree_in(dr->jet_index(v)) < leader_degree(g, r);
}

// ---- autoreduced sets ------------------------------------------------------

AutoreducedSet::AutoreducedSet(std::vector<DiffPoly> elems, Ranking ranking)
    : elems_(std::move(elems)), ranking_(std::move(ranking)) {
    for (const auto& e : elems_) {
        if (e.is_zero() || e.is_diff_constant())
            throw std::logic_error("AutoreducedSet: element is a constant");
    }
    std::sort(elems_.begin(), elems_.end(),
              [&](const DiffPoly& a, const DiffPoly& b) { return compare_rank(a, b, ranking_) < 0; });
    for (size_t i = 0; i < elems_.size(); ++i)
        for (size_t j = 0; j < elems_.size(); ++j)
            if (i != j && !is_reduced(elems_[i], elems_[j], ranking_))
                throw std::logic_error("AutoreducedSet: elements are not mutually reduced");
}

std::vector<DiffVar> AutoreducedSet::leaders() const {
    std::vector<DiffVar> out;
    for (const auto& e : elems_) out.push_back(leader(e, ranking_));
    return out;
}

SetRankOrder compare_autoreduced(const AutoreducedSet& a, const AutoreducedSet& b) {
    size_t n = std::min(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        int c = compare_rank(a.elems()[i], b.elems()[i], a.ranking());
        if (c < 0) return SetRankOrder::Lower;
        if (c > 0) return SetRankOrder::Higher;
    }
    if (a.size() == b.size()) return SetRankOrder::Equal;
    return a.size() > b.size() ? SetRankOrder::Lower : SetRankOrder::Higher;
}

// ---- Ritt reduction ----------------------------------------------------------

RittResult ritt_reduce(const DiffPoly& f, const AutoreducedSet& A) {
    const Ranking& R = A.ranking();
    const auto& dr = f.dring();
    RittResult res;
    res.hpower = DiffPoly::constant(dr, Rational(1));
    DiffPoly work = f;

    auto leaders = A.leaders();
    std::vector<long> degrees;
    for (size_t i = 0; i < A.size(); ++i) degrees.push_back(leader_degree(A.elems()[i], R));

    while (true) {
        // find the highest-ranked offending derivative
        std::optional<std::tuple<int, int, DiffVar>> best;  // (elem, theta, variable)
        for (const auto& t : work.num().terms()) {
            for (size_t iv = dr->params().size(); iv < t.first.size(); ++iv) {
                if (!t.first[iv]) continue;
                DiffVar w = dr->jet_of((int)iv);
                for (int i = 0; i < (int)A.size(); ++i) {
                    const DiffVar& v = leaders[i];
                    if (w.base != v.base || w.order < v.order) continue;
                    if (w.order == v.order && (long)t.first[iv] < degrees[i]) continue;
                    int theta = w.order - v.order;
                    if (!best || R.compare(w, std::get<2>(*best)) > 0 ||
                        (R.compare(w, std::get<2>(*best)) == 0 && theta < std::get<1>(*best)))
                        best = std::make_tuple(i, theta, w);
                }
            }
        }
        if (!best) break;
        auto [i, theta, w] = *best;
        int widx = dr->jet_index(w);

        DiffPoly g = theta == 0 ? A.elems()[i] : derive(A.elems()[i], theta);
        long dg = theta == 0 ? degrees[i] : 1;
        DiffPoly h = theta == 0 ? initial(A.elems()[i], R) : separant(A.elems()[i], R);

        long d = work.num().degree_in(widx);
        DiffPoly c(dr, work.num().coeff_of(widx, (unsigned)d), work.den());
        Monomial shift = mono_one(dr->ring()->nvars());
        shift[widx] = (unsigned)(d - dg);
        DiffPoly shifted = c * DiffPoly(dr, MPoly::from_terms(dr->ring(), {{shift, Rational(1)}}));

        work = h * work - shifted * g;
        res.hpower = res.hpower * h;
        for (auto& cf : res.cofactors) cf.cof = cf.cof * h;
        res.cofactors.push_back({i, theta, shifted});
    }
    res.remainder = work;
    return res;
}

// ---- basic set and characteristic set ---------------------------------------

namespace {
bool contains_poly(const std::vector<DiffPoly>& v, const DiffPoly& p) {
    for (const auto& q : v)
        if (q == p) return true;
    return false;
}
}  // namespace

AutoreducedSet basic_set(const std::vector<DiffPoly>& polys, const Ranking& r) {
    std::vector<DiffPoly> cands;
    for (const auto& p : polys) {
        if (p.is_zero()) continue;
        if (p.is_diff_constant()) throw std::domain_error("basic_set: nonzero constant in the ideal");
        if (!contains_poly(cands, p)) cands.push_back(p);
    }
    if (cands.empty()) throw std::domain_error("basic_set: no nonconstant polynomials");
    std::sort(cands.begin(), cands.end(), [&](const DiffPoly& a, const DiffPoly& b) {
        int c = compare_rank(a, b, r);
        if (c != 0) return c < 0;
        if (a.num().nterms() != b.num().nterms()) return a.num().nterms() < b.num().nterms();
        return to_string(a, r) < to_string(b, r);
    });
    std::vector<DiffPoly> chosen;
    std::vector<char> used(cands.size(), 0);
    while (true) {
        int pick = -1;
        for (int i = 0; i < (int)cands.size() && pick < 0; ++i) {
            if (used[i]) continue;
            bool ok = true;
            for (const auto& a : chosen)
                if (!is_reduced(cands[i], a, r)) {
                    ok = false;
                    break;
                }
            if (ok) pick = i;
        }
        if (pick < 0) break;
        used[pick] = 1;
        chosen.push_back(cands[pick]);
    }
    return AutoreducedSet(std::move(chosen), r);
}

AutoreducedSet characteristic_set(std::vector<DiffPoly> polys, const Ranking& r, const Budget& budget) {
    std::vector<DiffPoly> work;
    for (auto& p : polys)
        if (!p.is_zero() && !contains_poly(work, p)) work.push_back(std::move(p));
    while (true) {
        budget.check_clock("characteristic_set");
        budget.check_size((long)work.size(), "characteristic_set");
        AutoreducedSet C = basic_set(work, r);
        std::vector<DiffPoly> fresh;
        for (const auto& p : work) {
            if (contains_poly(C.elems(), p)) continue;
            DiffPoly rem = ritt_reduce(p, C).remainder;
            if (rem.is_zero()) continue;
            if (rem.is_diff_constant())
                throw std::domain_error("characteristic_set: ideal contains a nonzero constant");
            if (!contains_poly(work, rem) && !contains_poly(fresh, rem)) fresh.push_back(rem);
        }
        if (fresh.empty()) return C;
        for (auto& p : fresh) work.push_back(std::move(p));
    }
}

AutoreducedSet strip_factors(const AutoreducedSet& A) {
    const Ranking& r = A.ranking();
    const auto& dr = r.dring();
    std::vector<char> leader_vars(dr->ring()->nvars(), 0);
    for (const auto& v : A.leaders()) leader_vars[dr->jet_index(v)] = 1;
    std::vector<DiffPoly> out;
    for (const auto& f : A.elems()) {
        MPoly cont = content_wrt(f.num(), leader_vars);
        MPoly num = cont.is_constant() ? f.num() : divexact(f.num(), cont);
        DiffPoly stripped(dr, std::move(num), f.den());
        RatFunc top = stripped.jet_coeff(highest_jet_monomial(stripped, r));
        out.push_back(stripped.coeff_scaled(top.inv()));
    }
    return AutoreducedSet(std::move(out), r);
}

Monomial highest_jet_monomial(const DiffPoly& f, const Ranking& r) {
    if (f.is_zero()) throw std::domain_error("highest_jet_monomial: zero polynomial");
    auto monos = f.jet_monomials(r);
    return monos.front();
}

DiffPoly map_dring(const DiffPoly& f, const DiffRingPtr& target, const std::vector<int>& base_map) {
    const auto& src = f.dring();
    if (src->params() != target->params()) throw std::logic_error("map_dring: parameter mismatch");
    std::vector<int> var_map(src->ring()->nvars(), -1);
    for (size_t p = 0; p < src->params().size(); ++p) var_map[p] = (int)p;
    for (int b = 0; b < (int)src->bases().size(); ++b) {
        if (base_map[b] < 0) continue;
        for (int o = 0; o <= std::min(src->jet_cap(), target->jet_cap()); ++o)
            var_map[src->jet_index(b, o)] = target->jet_index(base_map[b], o);
    }
    return DiffPoly(target, f.num().map_vars(target->ring(), var_map),
                    f.den().map_vars(target->ring(), var_map));
}

// ---- printing ----------------------------------------------------------------

namespace {
std::string jet_mono_str(const DiffRing& dr, const Monomial& m, const Ranking& r) {
    std::ostringstream os;
    bool any = false;
    for (int v : r.jet_vars_desc()) {
        if (!m[v]) continue;
        if (any) os << "*";
        os << dr.ring()->var_name(v);
        if (m[v] > 1) os << "^" << m[v];
        any = true;
    }
    return os.str();
}

// coefficient rendered for use in front of '*monomial'
std::string coeff_str(const RatFunc& c) {
    bool simple = c.den().is_constant() && c.den().constant_value().is_one() && c.num().nterms() == 1;
    std::string s = to_string(c);
    return simple ? s : "(" + s + ")";
}
}  // namespace

std::string to_string(const DiffPoly& f, const Ranking& r) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& m : f.jet_monomials(r)) {
        RatFunc c = f.jet_coeff(m);
        bool neg = c.num().lead_coeff().sgn() < 0;
        RatFunc cabs = neg ? -c : c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        bool is_one = cabs.is_constant() && !cabs.is_zero() && cabs.as_rational().is_one();
        if (mono_is_one(m)) {
            os << to_string(cabs);
        } else if (is_one) {
            os << jet_mono_str(*f.dring(), m, r);
        } else {
            os << coeff_str(cabs) << "*" << jet_mono_str(*f.dring(), m, r);
        }
    }
    return os.str();
}

}  // namespace ident
