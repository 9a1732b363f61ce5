#pragma once

#include <memory>
#include <string>
#include <vector>

namespace ident {

// Exponent vector; length always equals the ring's variable count.
using Monomial = std::vector<unsigned>;

/*
 * Block term order. Blocks are listed from most to least significant and
 * partition the variable indices. Inside a block monomials are compared
 * degree-reverse-lexicographically. A single block is plain degrevlex;
 * singleton blocks give lex; a ((drop)(keep)) split gives an elimination
 * order for `drop`.
 */
struct TermOrder {
    std::vector<std::vector<int>> blocks;

    // -1, 0, +1 for a < b, a == b, a > b.
    int compare(const Monomial& a, const Monomial& b) const;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

class Ring {
  public:
    static RingPtr make(std::vector<std::string> vars);  // one degrevlex block
    static RingPtr make(std::vector<std::string> vars, TermOrder order);

    // Same variables, new block structure.
    static RingPtr reorder(const RingPtr& r, TermOrder order);
    // Elimination order: `drop` block above everything else.
    static RingPtr elimination(const RingPtr& r, const std::vector<int>& drop);
    // Lex order (each variable its own block, in ring order).
    static RingPtr lex(const RingPtr& r);
    // Appends fresh variables (single extra block? no: keeps one degrevlex block).
    static RingPtr extend(const RingPtr& r, const std::vector<std::string>& extra);

    size_t nvars() const { return vars_.size(); }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::string& var_name(int i) const { return vars_[i]; }
    int var_index(const std::string& name) const;  // -1 if absent
    const TermOrder& order() const { return order_; }

    bool same_vars(const Ring& o) const { return vars_ == o.vars_; }
    friend bool operator==(const Ring& a, const Ring& b) {
        return a.vars_ == b.vars_ && a.order_.blocks == b.order_.blocks;
    }

  private:
    Ring(std::vector<std::string> vars, TermOrder order);
    std::vector<std::string> vars_;
    TermOrder order_;
};

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && *a == *b);
}

}  // namespace ident
