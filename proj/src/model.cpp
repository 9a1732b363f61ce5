#include "ident/model.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ident/diff.hpp"

namespace ident {

// ---- ODEModel ----------------------------------------------------------------

ODEModel::ODEModel(std::string name, std::vector<std::string> states, std::vector<std::string> params,
                   std::vector<std::string> inputs, std::vector<std::string> outputs,
                   std::vector<RatFunc> state_rhs, std::vector<RatFunc> output_rhs, int jet_cap)
    : name_(std::move(name)),
      states_(std::move(states)),
      params_(std::move(params)),
      inputs_(std::move(inputs)),
      outputs_(std::move(outputs)),
      jet_cap_(jet_cap),
      state_rhs_(std::move(state_rhs)),
      output_rhs_(std::move(output_rhs)) {
    if (outputs_.empty()) throw std::invalid_argument("ODEModel: at least one output required");
    if (state_rhs_.size() != states_.size() || output_rhs_.size() != outputs_.size())
        throw std::invalid_argument("ODEModel: equation count mismatch");
    std::set<std::string> seen;
    for (const auto* group : {&states_, &params_, &inputs_, &outputs_})
        for (const auto& n : *group)
            if (!seen.insert(n).second) throw std::invalid_argument("ODEModel: name clash on " + n);

    amb_ = ambient_ring(params_, states_, inputs_, jet_cap_);

    for (auto* rhss : {&state_rhs_, &output_rhs_})
        for (auto& f : *rhss)
            if (!same_ring(f.ring(), amb_)) throw std::logic_error("ODEModel: rhs ring mismatch");

    Q_ = mpoly_const(amb_, Rational(1));
    for (const auto* rhss : {&state_rhs_, &output_rhs_})
        for (const auto& f : *rhss) Q_ = lcm(Q_, f.den());
    for (const auto& f : state_rhs_) F_.push_back(f.num() * divexact(Q_, f.den()));
    for (const auto& g : output_rhs_) G_.push_back(g.num() * divexact(Q_, g.den()));
}

RingPtr ODEModel::ambient_ring(const std::vector<std::string>& params, const std::vector<std::string>& states,
                               const std::vector<std::string>& inputs, int jet_cap) {
    std::vector<std::string> vars = params;
    for (const auto& s : states) vars.push_back(s);
    for (const auto& u : inputs)
        for (int o = 0; o <= jet_cap; ++o) vars.push_back(DiffRing::jet_name(u, o));
    return Ring::make(std::move(vars));
}

int ODEModel::input_var(int m, int order) const {
    if (order < 0 || order > jet_cap_)
        throw JetCapError(inputs_.at(m) + " order " + std::to_string(order));
    return ambient_input_var(params_.size(), states_.size(), jet_cap_, m, order);
}

ODEModel ODEModel::with_jet_cap(int cap) const {
    if (cap == jet_cap_) return *this;
    RingPtr target = ambient_ring(params_, states_, inputs_, cap);
    std::vector<int> map(amb_->nvars(), -1);
    for (size_t p = 0; p < params_.size(); ++p) map[p] = (int)p;
    for (size_t i = 0; i < states_.size(); ++i) map[state_var((int)i)] = ambient_state_var(params_.size(), (int)i);
    for (size_t m = 0; m < inputs_.size(); ++m)
        for (int o = 0; o <= std::min(cap, jet_cap_); ++o)
            map[input_var((int)m, o)] = ambient_input_var(params_.size(), states_.size(), cap, (int)m, o);
    std::vector<RatFunc> srhs, orhs;
    for (const auto& f : state_rhs_) srhs.push_back(f.map_vars(target, map));
    for (const auto& g : output_rhs_) orhs.push_back(g.map_vars(target, map));
    return ODEModel(name_, states_, params_, inputs_, outputs_, std::move(srhs), std::move(orhs), cap);
}

RatFunc total_derivative(const ODEModel& m, const RatFunc& g) {
    const RingPtr& amb = m.ambient();
    auto d_poly = [&](const MPoly& p) {
        RatFunc acc((MPoly(amb)));
        for (size_t i = 0; i < m.states().size(); ++i) {
            MPoly dp = p.derivative(m.state_var((int)i));
            if (!dp.is_zero()) acc += RatFunc(dp) * m.state_rhs((int)i);
        }
        for (size_t u = 0; u < m.inputs().size(); ++u)
            for (int o = 0; o < m.jet_cap(); ++o) {
                MPoly dp = p.derivative(m.input_var((int)u, o));
                if (!dp.is_zero()) acc += RatFunc(dp * mpoly_var(amb, m.input_var((int)u, o + 1)));
            }
        // a top-order input jet with zero partial everywhere else is fine; if
        // it actually occurs we cannot shift it further
        for (size_t u = 0; u < m.inputs().size(); ++u)
            if (!p.derivative(m.input_var((int)u, m.jet_cap())).is_zero())
                throw JetCapError("total_derivative: input jet at cap");
        return acc;
    };
    RatFunc dn = d_poly(g.num()), dd = d_poly(g.den());
    return dn / RatFunc(g.den()) - RatFunc(g.num()) * dd / RatFunc(g.den() * g.den());
}

JetPoint::JetPoint(const ODEModel& m, int depth) : depth_(depth) {
    if (depth > m.jet_cap()) throw JetCapError("lie_substitute depth " + std::to_string(depth));
    table_.resize(m.outputs().size());
    for (size_t j = 0; j < m.outputs().size(); ++j) {
        table_[j].push_back(m.output_rhs((int)j));
        for (int k = 1; k <= depth; ++k) table_[j].push_back(total_derivative(m, table_[j].back()));
    }
}

// ---- parser --------------------------------------------------------------------

namespace {

struct Token {
    enum Kind { Ident, Number, Op, Newline, End } kind;
    std::string text;
    int line, col;
};

struct Lexer {
    explicit Lexer(const std::string& src) : src_(src) {}

    Token next() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
                continue;
            }
            if (c == ' ' || c == '\t' || c == '\r') {
                ++pos_, ++col_;
                continue;
            }
            break;
        }
        if (pos_ >= src_.size()) return {Token::End, "", line_, col_};
        char c = src_[pos_];
        int line = line_, col = col_;
        if (c == '\n') {
            ++pos_, ++line_;
            col_ = 1;
            return {Token::Newline, "\n", line, col};
        }
        if (isalpha(c) || c == '_') {
            std::string s;
            while (pos_ < src_.size() && (isalnum(src_[pos_]) || src_[pos_] == '_' || src_[pos_] == '#')) {
                s += src_[pos_++];
                ++col_;
            }
            return {Token::Ident, s, line, col};
        }
        if (isdigit(c)) {
            std::string s;
            while (pos_ < src_.size() && isdigit(src_[pos_])) {
                s += src_[pos_++];
                ++col_;
            }
            return {Token::Number, s, line, col};
        }
        ++pos_, ++col_;
        return {Token::Op, std::string(1, c), line, col};
    }

    const std::string& src_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
};

class ModelParser {
  public:
    explicit ModelParser(const std::string& text) : lex_(text) { advance(); }

    ODEModel run() {
        expect_ident("model");
        model_name_ = expect(Token::Ident, "model name").text;
        end_line();
        expect_ident("states");
        expect_op(":");
        states_ = name_list();
        expect_ident("params");
        expect_op(":");
        params_ = name_list();
        if (tok_.kind == Token::Ident && tok_.text == "inputs") {
            advance();
            expect_op(":");
            inputs_ = name_list();
        }
        declare_all();

        std::vector<RatFunc> state_rhs(states_.size(), RatFunc());
        std::vector<char> have(states_.size(), 0);
        std::vector<std::string> outputs;
        std::vector<RatFunc> output_rhs;
        while (tok_.kind != Token::End) {
            if (tok_.kind == Token::Newline) {
                advance();
                continue;
            }
            Token name = expect(Token::Ident, "equation left-hand side");
            bool is_state_eq = tok_.kind == Token::Op && tok_.text == "'";
            if (is_state_eq) advance();
            expect_op("=");
            RatFunc rhs = expr();
            end_line();
            if (is_state_eq) {
                int i = index_of(states_, name.text);
                if (i < 0) fail(name, "'" + name.text + "'' is not a declared state");
                if (have[i]) fail(name, "duplicate equation for state " + name.text);
                state_rhs[i] = rhs;
                have[i] = 1;
            } else {
                if (declared_.count(name.text)) fail(name, "name clash: " + name.text + " already declared");
                if (index_of(outputs, name.text) >= 0) fail(name, "duplicate output " + name.text);
                outputs.push_back(name.text);
                output_rhs.push_back(rhs);
            }
        }
        for (size_t i = 0; i < states_.size(); ++i)
            if (!have[i]) fail(tok_, "missing equation for state " + states_[i]);
        if (outputs.empty()) fail(tok_, "model has no outputs");

        int cap = 2 * (int)states_.size() + 2;
        // rhs were built over the declaration ring; move them to the model ring
        RingPtr amb = ODEModel::ambient_ring(params_, states_, inputs_, cap);
        std::vector<int> map(decl_ring_->nvars(), -1);
        for (size_t p = 0; p < params_.size(); ++p) map[states_.size() + p] = (int)p;
        for (size_t i = 0; i < states_.size(); ++i) map[i] = ODEModel::ambient_state_var(params_.size(), (int)i);
        for (size_t u = 0; u < inputs_.size(); ++u)
            map[states_.size() + params_.size() + u] =
                ODEModel::ambient_input_var(params_.size(), states_.size(), cap, (int)u, 0);
        std::vector<RatFunc> srhs, orhs;
        for (auto& f : state_rhs) srhs.push_back(f.map_vars(amb, map));
        for (auto& g : output_rhs) orhs.push_back(g.map_vars(amb, map));
        return ODEModel(model_name_, states_, params_, inputs_, outputs, std::move(srhs), std::move(orhs), cap);
    }

  private:
    void advance() { tok_ = lex_.next(); }
    [[noreturn]] void fail(const Token& t, const std::string& msg) { throw ParseError(t.line, t.col, msg); }
    Token expect(Token::Kind k, const std::string& what) {
        if (tok_.kind != k) fail(tok_, "expected " + what);
        Token t = tok_;
        advance();
        return t;
    }
    void expect_ident(const std::string& kw) {
        if (tok_.kind != Token::Ident || tok_.text != kw) fail(tok_, "expected '" + kw + "'");
        advance();
    }
    void expect_op(const std::string& op) {
        if (tok_.kind != Token::Op || tok_.text != op) fail(tok_, "expected '" + op + "'");
        advance();
    }
    void end_line() {
        if (tok_.kind == Token::End) return;
        if (tok_.kind != Token::Newline) fail(tok_, "expected end of line");
        advance();
    }
    static int index_of(const std::vector<std::string>& v, const std::string& s) {
        auto it = std::find(v.begin(), v.end(), s);
        return it == v.end() ? -1 : (int)(it - v.begin());
    }

    std::vector<std::string> name_list() {
        std::vector<std::string> names;
        if (tok_.kind == Token::Ident) {
            names.push_back(expect(Token::Ident, "name").text);
            while (tok_.kind == Token::Op && tok_.text == ",") {
                advance();
                names.push_back(expect(Token::Ident, "name").text);
            }
        }
        end_line();
        return names;
    }

    void declare_all() {
        std::vector<std::string> vars = states_;
        for (const auto& p : params_) vars.push_back(p);
        for (const auto& u : inputs_) vars.push_back(u);
        for (const auto& v : vars)
            if (!declared_.insert(v).second) fail(tok_, "name clash: " + v + " declared twice");
        decl_ring_ = Ring::make(vars);
        declared_.insert(model_name_);
    }

    // expression grammar: sum -> product (('+'|'-') product)*
    //                     product -> power (('*'|'/') power)*
    //                     power -> unary ('^' integer)?
    //                     unary -> '-' unary | atom
    RatFunc expr() { return sum(); }
    RatFunc sum() {
        RatFunc v = product();
        while (tok_.kind == Token::Op && (tok_.text == "+" || tok_.text == "-")) {
            bool plus = tok_.text == "+";
            advance();
            RatFunc w = product();
            v = plus ? v + w : v - w;
        }
        return v;
    }
    RatFunc product() {
        RatFunc v = power();
        while (tok_.kind == Token::Op && (tok_.text == "*" || tok_.text == "/")) {
            bool mul = tok_.text == "*";
            Token op = tok_;
            advance();
            RatFunc w = power();
            if (!mul && w.is_zero()) fail(op, "division by zero");
            v = mul ? v * w : v / w;
        }
        return v;
    }
    RatFunc power() {
        RatFunc v = unary();
        if (tok_.kind == Token::Op && tok_.text == "^") {
            advance();
            Token e = expect(Token::Number, "nonnegative integer exponent");
            long n = std::stol(e.text);
            RatFunc r = RatFunc::constant(decl_ring_, Rational(1));
            for (long i = 0; i < n; ++i) r *= v;
            v = r;
        }
        return v;
    }
    RatFunc unary() {
        if (tok_.kind == Token::Op && tok_.text == "-") {
            advance();
            return -unary();
        }
        return atom();
    }
    RatFunc atom() {
        if (tok_.kind == Token::Number) {
            Token t = tok_;
            advance();
            return RatFunc::constant(decl_ring_, Rational(mpz_class(t.text)));
        }
        if (tok_.kind == Token::Ident) {
            Token t = tok_;
            advance();
            int i = decl_ring_->var_index(t.text);
            if (i < 0) fail(t, "unknown symbol " + t.text);
            return RatFunc::var(decl_ring_, i);
        }
        if (tok_.kind == Token::Op && tok_.text == "(") {
            advance();
            RatFunc v = expr();
            expect_op(")");
            return v;
        }
        fail(tok_, "expected expression");
    }

    Lexer lex_;
    Token tok_;
    std::string model_name_;
    std::vector<std::string> states_, params_, inputs_;
    std::set<std::string> declared_;
    RingPtr decl_ring_;
};

}  // namespace

ODEModel parse_model(const std::string& text) { return ModelParser(text).run(); }

std::string print_model(const ODEModel& m) {
    std::ostringstream os;
    os << "model " << m.name() << "\n";
    auto list = [&](const char* label, const std::vector<std::string>& names) {
        os << label << ":";
        for (size_t i = 0; i < names.size(); ++i) os << (i ? ", " : " ") << names[i];
        os << "\n";
    };
    list("states", m.states());
    list("params", m.params());
    if (!m.inputs().empty()) list("inputs", m.inputs());
    for (size_t i = 0; i < m.states().size(); ++i)
        os << m.states()[i] << "' = " << to_string(m.state_rhs((int)i)) << "\n";
    for (size_t j = 0; j < m.outputs().size(); ++j)
        os << m.outputs()[j] << " = " << to_string(m.output_rhs((int)j)) << "\n";
    return os.str();
}

ODEModel replicate(const ODEModel& m, int n) {
    if (n < 1) throw std::invalid_argument("replicate: need N >= 1");
    auto copy_name = [](const std::string& base, int i) { return base + "#" + std::to_string(i); };
    std::vector<std::string> states, inputs, outputs;
    for (int i = 1; i <= n; ++i) {
        for (const auto& s : m.states()) states.push_back(copy_name(s, i));
        for (const auto& u : m.inputs()) inputs.push_back(copy_name(u, i));
        for (const auto& y : m.outputs()) outputs.push_back(copy_name(y, i));
    }
    int cap = 2 * (int)states.size() + 2;
    RingPtr amb = ODEModel::ambient_ring(m.params(), states, inputs, cap);
    const size_t np = m.params().size();
    std::vector<RatFunc> srhs, orhs;
    for (int i = 0; i < n; ++i) {
        std::vector<int> map(m.ambient()->nvars(), -1);
        for (size_t p = 0; p < np; ++p) map[p] = (int)p;
        for (size_t s = 0; s < m.states().size(); ++s)
            map[m.state_var((int)s)] = ODEModel::ambient_state_var(np, i * (int)m.states().size() + (int)s);
        for (size_t u = 0; u < m.inputs().size(); ++u)
            for (int o = 0; o <= std::min(m.jet_cap(), cap); ++o)
                map[m.input_var((int)u, o)] = ODEModel::ambient_input_var(
                    np, states.size(), cap, i * (int)m.inputs().size() + (int)u, o);
        for (size_t s = 0; s < m.states().size(); ++s)
            srhs.push_back(m.state_rhs((int)s).map_vars(amb, map));
        for (size_t j = 0; j < m.outputs().size(); ++j)
            orhs.push_back(m.output_rhs((int)j).map_vars(amb, map));
    }
    return ODEModel(copy_name(m.name(), n), states, m.params(), inputs, outputs, std::move(srhs),
                    std::move(orhs), cap);
}

ODEModel gen_appendix(int n, int h) {
    if (n < 1 || h < 1 || h > n) throw std::invalid_argument("gen_appendix: need 1 <= h <= n");
    std::vector<std::string> states, params, outputs;
    states.push_back("x1");
    for (int i = 2; i <= n; ++i) {
        states.push_back("x" + std::to_string(i));
        if (i <= h)
            for (int l = 1; l < h; ++l) states.push_back("x" + std::to_string(i) + "_" + std::to_string(l));
    }
    for (int i = 1; i <= n; ++i) params.push_back("c" + std::to_string(i));
    for (int i = 1; i <= n; ++i) outputs.push_back("y" + std::to_string(i));

    int cap = 2 * (int)states.size() + 2;
    RingPtr amb = ODEModel::ambient_ring(params, states, {}, cap);
    auto state_rf = [&](const std::string& name) {
        int i = (int)(std::find(states.begin(), states.end(), name) - states.begin());
        return RatFunc::var(amb, ODEModel::ambient_state_var(params.size(), i));
    };
    std::vector<RatFunc> srhs(states.size(), RatFunc(MPoly(amb)));
    // x1' = c1 + sum_{i>=2} c_i x_i
    RatFunc x1rhs = RatFunc::var(amb, 0);
    for (int i = 2; i <= n; ++i) x1rhs += RatFunc::var(amb, i - 1) * state_rf("x" + std::to_string(i));
    srhs[0] = x1rhs;
    // chains for 2 <= i <= h; x_i' = 0 above h (already zero-initialized)
    for (int i = 2; i <= h; ++i) {
        for (int l = 0; l + 1 < h; ++l) {
            std::string cur = l == 0 ? "x" + std::to_string(i) : "x" + std::to_string(i) + "_" + std::to_string(l);
            int idx = (int)(std::find(states.begin(), states.end(), cur) - states.begin());
            srhs[idx] = state_rf("x" + std::to_string(i) + "_" + std::to_string(l + 1));
        }
    }
    std::vector<RatFunc> orhs;
    for (int i = 1; i <= n; ++i) orhs.push_back(state_rf("x" + std::to_string(i)));
    return ODEModel("appendix_n" + std::to_string(n) + "_h" + std::to_string(h), states, params, {}, outputs,
                    std::move(srhs), std::move(orhs), cap);
}

}  // namespace ident
