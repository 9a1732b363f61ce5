#include "ident/ring.hpp"

#include <stdexcept>

namespace ident {

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
    for (const auto& blk : blocks) {
        long da = 0, db = 0;
        for (int i : blk) {
            da += a[i];
            db += b[i];
        }
        if (da != db) return da < db ? -1 : 1;
        // reverse lex: last differing variable, smaller exponent wins
        for (auto it = blk.rbegin(); it != blk.rend(); ++it) {
            if (a[*it] != b[*it]) return a[*it] > b[*it] ? -1 : 1;
        }
    }
    return 0;
}

Ring::Ring(std::vector<std::string> vars, TermOrder order)
    : vars_(std::move(vars)), order_(std::move(order)) {
    size_t covered = 0;
    for (const auto& blk : order_.blocks) covered += blk.size();
    if (covered != vars_.size()) throw std::logic_error("Ring: term order does not cover variables");
}

RingPtr Ring::make(std::vector<std::string> vars) {
    TermOrder o;
    o.blocks.emplace_back();
    for (int i = 0; i < (int)vars.size(); ++i) o.blocks[0].push_back(i);
    return RingPtr(new Ring(std::move(vars), std::move(o)));
}

RingPtr Ring::make(std::vector<std::string> vars, TermOrder order) {
    return RingPtr(new Ring(std::move(vars), std::move(order)));
}

RingPtr Ring::reorder(const RingPtr& r, TermOrder order) {
    return RingPtr(new Ring(r->vars_, std::move(order)));
}

RingPtr Ring::elimination(const RingPtr& r, const std::vector<int>& drop) {
    std::vector<char> dropped(r->nvars(), 0);
    for (int i : drop) dropped.at(i) = 1;
    TermOrder o;
    o.blocks.resize(2);
    for (int i = 0; i < (int)r->nvars(); ++i) (dropped[i] ? o.blocks[0] : o.blocks[1]).push_back(i);
    if (o.blocks[0].empty()) o.blocks.erase(o.blocks.begin());
    if (o.blocks.back().empty()) o.blocks.pop_back();
    return reorder(r, std::move(o));
}

RingPtr Ring::lex(const RingPtr& r) {
    TermOrder o;
    for (int i = 0; i < (int)r->nvars(); ++i) o.blocks.push_back({i});
    return reorder(r, std::move(o));
}

RingPtr Ring::extend(const RingPtr& r, const std::vector<std::string>& extra) {
    std::vector<std::string> vars = r->vars_;
    for (const auto& v : extra) vars.push_back(v);
    return make(std::move(vars));
}

int Ring::var_index(const std::string& name) const {
    for (int i = 0; i < (int)vars_.size(); ++i)
        if (vars_[i] == name) return i;
    return -1;
}

}  // namespace ident
