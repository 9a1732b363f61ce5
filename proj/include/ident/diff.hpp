#pragma once

#include <optional>

#include "ident/budget.hpp"
#include "ident/ratfunc.hpp"

namespace ident {

// One derivative symbol: `order` applications of the derivation to a base
// differential indeterminate.
struct DiffVar {
    int base;
    int order;
    friend bool operator==(const DiffVar& a, const DiffVar& b) { return a.base == b.base && a.order == b.order; }
};

class DiffRing;
using DiffRingPtr = std::shared_ptr<const DiffRing>;

/*
 * Jet polynomial ring: parameter symbols (killed by the derivation) plus all
 * derivatives of the base indeterminates up to a cap. Variables are laid out
 * as [params..., base0^(0..cap), base1^(0..cap), ...].
 */
class DiffRing {
  public:
    static DiffRingPtr make(std::vector<std::string> params, std::vector<std::string> bases, int jet_cap);

    const RingPtr& ring() const { return ring_; }
    const std::vector<std::string>& params() const { return params_; }
    const std::vector<std::string>& bases() const { return bases_; }
    int jet_cap() const { return jet_cap_; }

    int param_index(int p) const { return p; }  // ring index of parameter p
    int jet_index(int base, int order) const;   // ring index of base^(order)
    int jet_index(const DiffVar& v) const { return jet_index(v.base, v.order); }
    bool is_param(int ring_var) const { return ring_var < (int)params_.size(); }
    DiffVar jet_of(int ring_var) const;  // only for non-param ring vars
    int base_index(const std::string& name) const;

    static std::string jet_name(const std::string& base, int order);

  private:
    DiffRing() = default;
    std::vector<std::string> params_, bases_;
    int jet_cap_ = 0;
    RingPtr ring_;
};

/*
 * Differential ranking: elimination between blocks of base indeterminates
 * (earlier block always higher), orderly inside a block with ties broken by
 * block position. Satisfies both ranking axioms by construction.
 */
class Ranking {
  public:
    Ranking() = default;
    Ranking(DiffRingPtr dring, std::vector<std::vector<int>> base_blocks);
    // one block containing every base, in ring order
    static Ranking orderly(const DiffRingPtr& dring);
    // each base its own block, in the listed order (highest first)
    static Ranking elimination(const DiffRingPtr& dring, const std::vector<int>& bases_high_to_low);

    const DiffRingPtr& dring() const { return dring_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    int compare(const DiffVar& a, const DiffVar& b) const;
    bool less(const DiffVar& a, const DiffVar& b) const { return compare(a, b) < 0; }

    // jet ring variables sorted descending; used for the induced monomial order
    const std::vector<int>& jet_vars_desc() const { return jets_desc_; }
    // lexicographic on jets sorted by the ranking; params ignored
    int mono_compare(const Monomial& a, const Monomial& b) const;

  private:
    DiffRingPtr dring_;
    std::vector<std::vector<int>> blocks_;
    std::vector<std::pair<int, int>> pos_;  // base -> (block, position)
    std::vector<int> jets_desc_;
};

/*
 * Differential polynomial with coefficients in Q(params): a jet polynomial
 * numerator over a parameter-only denominator, gcd-reduced, denominator
 * monic under the ring order.
 */
class DiffPoly {
  public:
    DiffPoly() = default;
    explicit DiffPoly(DiffRingPtr dr);
    DiffPoly(DiffRingPtr dr, MPoly num);
    DiffPoly(DiffRingPtr dr, MPoly num, MPoly den);

    static DiffPoly var(const DiffRingPtr& dr, const DiffVar& v);
    static DiffPoly param(const DiffRingPtr& dr, int p);
    static DiffPoly constant(const DiffRingPtr& dr, const Rational& c);

    const DiffRingPtr& dring() const { return dring_; }
    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    // constant in the differential sense: no jet variables
    bool is_diff_constant() const;

    DiffPoly operator-() const;
    friend DiffPoly operator+(const DiffPoly& a, const DiffPoly& b);
    friend DiffPoly operator-(const DiffPoly& a, const DiffPoly& b);
    friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b);
    DiffPoly& operator+=(const DiffPoly& o) { return *this = *this + o; }
    DiffPoly& operator-=(const DiffPoly& o) { return *this = *this - o; }
    DiffPoly& operator*=(const DiffPoly& o) { return *this = *this * o; }
    friend bool operator==(const DiffPoly& a, const DiffPoly& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const DiffPoly& a, const DiffPoly& b) { return !(a == b); }

    DiffPoly scaled(const Rational& c) const;
    // multiply / divide by a coefficient num/den in Q(params)
    DiffPoly coeff_scaled(const RatFunc& c) const;

    RatFunc to_ratfunc() const { return RatFunc(num_, den_); }

    // distinct jet monomials, descending under the ranking-induced order
    std::vector<Monomial> jet_monomials(const Ranking& r) const;
    // coefficient in Q(params) of a jet monomial
    RatFunc jet_coeff(const Monomial& jet_mono) const;

  private:
    void normalize();
    DiffRingPtr dring_;
    MPoly num_, den_;
};

// Formal total derivative; parameters are constants. Throws JetCapError if a
// derivative would exceed the ring's cap.
DiffPoly derive(const DiffPoly& f);
DiffPoly derive(const DiffPoly& f, int times);

// Leader machinery (Notation: leader, initial, separant). Throws
// std::domain_error on differential constants.
DiffVar leader(const DiffPoly& f, const Ranking& r);
long leader_degree(const DiffPoly& f, const Ranking& r);
DiffPoly initial(const DiffPoly& f, const Ranking& r);
DiffPoly separant(const DiffPoly& f, const Ranking& r);

// rank(f) = leader^deg; constants rank below everything
int compare_rank(const DiffPoly& f, const DiffPoly& g, const Ranking& r);

// f reduced w.r.t. g: no proper derivative of lead(g) and lower leader degree
bool is_reduced(const DiffPoly& f, const DiffPoly& g, const Ranking& r);

class AutoreducedSet {
  public:
    AutoreducedSet(std::vector<DiffPoly> elems, Ranking ranking);  // validates, sorts by rank
    const std::vector<DiffPoly>& elems() const { return elems_; }
    const Ranking& ranking() const { return ranking_; }
    size_t size() const { return elems_.size(); }
    std::vector<DiffVar> leaders() const;

  private:
    std::vector<DiffPoly> elems_;
    Ranking ranking_;
};

enum class SetRankOrder { Lower, Equal, Higher };
SetRankOrder compare_autoreduced(const AutoreducedSet& a, const AutoreducedSet& b);

struct RittResult {
    DiffPoly remainder;
    DiffPoly hpower;  // product of powers of initials and separants used
    struct Cofactor {
        int elem;       // index into the autoreduced set
        int theta;      // derivative order applied to that element
        DiffPoly cof;
    };
    std::vector<Cofactor> cofactors;  // hpower*f == remainder + sum cof*derive(A[elem], theta)
};

RittResult ritt_reduce(const DiffPoly& f, const AutoreducedSet& A);

// Ritt's basic set: a minimal-rank autoreduced subset of the given list.
AutoreducedSet basic_set(const std::vector<DiffPoly>& polys, const Ranking& r);

// Wu-style completion: extends the working set with nonzero remainders until
// every input reduces to zero against the basic set.
AutoreducedSet characteristic_set(std::vector<DiffPoly> polys, const Ranking& r, const Budget& budget = Budget());

// Removes content lying in the non-leading polynomial ring, then scales each
// element so its highest monomial has coefficient 1.
AutoreducedSet strip_factors(const AutoreducedSet& A);

// highest jet monomial of f under the ranking-induced monomial order
Monomial highest_jet_monomial(const DiffPoly& f, const Ranking& r);

// Moves f onto another jet ring; base_map sends base indices of f's ring to
// base indices of the target (parameters must agree; orders are preserved).
DiffPoly map_dring(const DiffPoly& f, const DiffRingPtr& target, const std::vector<int>& base_map);

std::string to_string(const DiffPoly& f, const Ranking& r);

}  // namespace ident
