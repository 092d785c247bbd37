#include "zeroapn/expr.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace zeroapn {

struct Expr::Node {
    enum Kind { num, var, unop, binop, call } kind;
    bigint value;
    std::string name;  // variable, operator or function
    std::vector<std::shared_ptr<const Node>> args;
};

namespace {

using NodeP = std::shared_ptr<const Expr::Node>;

NodeP make(Expr::Node n) { return std::make_shared<const Expr::Node>(std::move(n)); }

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    NodeP parse_all()
    {
        auto n = parse_or();
        skip();
        if (p_ != s_.size()) fail("unexpected '" + std::string(1, s_[p_]) + "'");
        return n;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const
    {
        throw std::invalid_argument("expression \"" + std::string(s_) + "\": " + msg);
    }

    void skip()
    {
        while (p_ < s_.size() && std::isspace((unsigned char)s_[p_])) ++p_;
    }

    bool eat(std::string_view tok)
    {
        skip();
        if (s_.substr(p_, tok.size()) == tok) {
            p_ += tok.size();
            return true;
        }
        return false;
    }

    NodeP bin(std::string op, NodeP l, NodeP r) { return make({Expr::Node::binop, 0, std::move(op), {l, r}}); }

    NodeP parse_or()
    {
        auto l = parse_and();
        while (eat("||")) l = bin("||", l, parse_and());
        return l;
    }

    NodeP parse_and()
    {
        auto l = parse_cmp();
        while (eat("&&")) l = bin("&&", l, parse_cmp());
        return l;
    }

    NodeP parse_cmp()
    {
        auto l = parse_add();
        for (;;) {
            if (eat("==")) l = bin("==", l, parse_add());
            else if (eat("!=")) l = bin("!=", l, parse_add());
            else if (eat("<=")) l = bin("<=", l, parse_add());
            else if (eat(">=")) l = bin(">=", l, parse_add());
            else if (eat("<")) l = bin("<", l, parse_add());
            else if (eat(">")) l = bin(">", l, parse_add());
            else return l;
        }
    }

    NodeP parse_add()
    {
        auto l = parse_mul();
        for (;;) {
            if (eat("+")) l = bin("+", l, parse_mul());
            else if (eat("-")) l = bin("-", l, parse_mul());
            else return l;
        }
    }

    NodeP parse_mul()
    {
        auto l = parse_unary();
        for (;;) {
            if (eat("*")) l = bin("*", l, parse_unary());
            else if (eat("/")) l = bin("/", l, parse_unary());
            else if (eat("%")) l = bin("%", l, parse_unary());
            else return l;
        }
    }

    NodeP parse_unary()
    {
        if (eat("-")) return make({Expr::Node::unop, 0, "-", {parse_unary()}});
        if (eat("!")) return make({Expr::Node::unop, 0, "!", {parse_unary()}});
        return parse_pow();
    }

    NodeP parse_pow()
    {
        auto base = parse_atom();
        if (eat("^")) return bin("^", base, parse_unary());
        return base;
    }

    NodeP parse_atom()
    {
        skip();
        if (p_ >= s_.size()) fail("unexpected end");
        char c = s_[p_];
        if (c == '(') {
            ++p_;
            auto n = parse_or();
            if (!eat(")")) fail("missing ')'");
            return n;
        }
        if (std::isdigit((unsigned char)c)) {
            size_t st = p_;
            while (p_ < s_.size() && std::isdigit((unsigned char)s_[p_])) ++p_;
            return make({Expr::Node::num, bigint(std::string(s_.substr(st, p_ - st))), "", {}});
        }
        if (std::isalpha((unsigned char)c) || c == '_') {
            size_t st = p_;
            while (p_ < s_.size() && (std::isalnum((unsigned char)s_[p_]) || s_[p_] == '_')) ++p_;
            std::string id(s_.substr(st, p_ - st));
            if (eat("(")) {
                std::vector<NodeP> args;
                if (!eat(")")) {
                    do args.push_back(parse_or());
                    while (eat(","));
                    if (!eat(")")) fail("missing ')' after arguments of " + id);
                }
                size_t want = (id == "abs") ? 1 : 2;
                if (id != "gcd" && id != "abs" && id != "min" && id != "max") fail("unknown function " + id);
                if (args.size() != want) fail("wrong argument count for " + id);
                return make({Expr::Node::call, 0, id, std::move(args)});
            }
            return make({Expr::Node::var, 0, id, {}});
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    size_t p_ = 0;
};

bigint babs(const bigint& v) { return v < 0 ? bigint(-v) : v; }

bigint bgcd(bigint a, bigint b)
{
    a = babs(a);
    b = babs(b);
    while (b != 0) {
        bigint t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bigint eval_node(const Expr::Node& n, const std::map<std::string, bigint>& env)
{
    using K = Expr::Node;
    switch (n.kind) {
    case K::num:
        return n.value;
    case K::var: {
        auto it = env.find(n.name);
        if (it == env.end()) throw std::invalid_argument("unbound parameter " + n.name);
        return it->second;
    }
    case K::unop: {
        bigint v = eval_node(*n.args[0], env);
        return n.name == "-" ? bigint(-v) : bigint(v == 0 ? 1 : 0);
    }
    case K::call: {
        bigint a = eval_node(*n.args[0], env);
        if (n.name == "abs") return babs(a);
        bigint b = eval_node(*n.args[1], env);
        if (n.name == "gcd") return bgcd(a, b);
        if (n.name == "min") return a < b ? a : b;
        return a < b ? b : a;
    }
    case K::binop: {
        const std::string& op = n.name;
        if (op == "&&") return eval_node(*n.args[0], env) != 0 && eval_node(*n.args[1], env) != 0 ? 1 : 0;
        if (op == "||") return eval_node(*n.args[0], env) != 0 || eval_node(*n.args[1], env) != 0 ? 1 : 0;
        bigint a = eval_node(*n.args[0], env), b = eval_node(*n.args[1], env);
        if (op == "+") return a + b;
        if (op == "-") return a - b;
        if (op == "*") return a * b;
        if (op == "/" || op == "%") {
            if (b == 0) throw std::domain_error("division by zero in expression");
            // floor semantics so that residues are never negative for positive moduli
            bigint q = a / b, r = a % b;
            if (r != 0 && ((r < 0) != (b < 0))) {
                q -= 1;
                r += b;
            }
            return op == "/" ? q : r;
        }
        if (op == "^") {
            if (b < 0) throw std::domain_error("negative power in expression");
            if (b > 100000) throw std::domain_error("power too large in expression");
            return boost::multiprecision::pow(a, b.convert_to<unsigned>());
        }
        if (op == "==") return a == b ? 1 : 0;
        if (op == "!=") return a != b ? 1 : 0;
        if (op == "<") return a < b ? 1 : 0;
        if (op == "<=") return a <= b ? 1 : 0;
        if (op == ">") return a > b ? 1 : 0;
        if (op == ">=") return a >= b ? 1 : 0;
        throw std::logic_error("unknown operator " + op);
    }
    }
    throw std::logic_error("bad expression node");
}

} // namespace

Expr Expr::parse(std::string_view text)
{
    Expr e;
    e.root_ = Parser(text).parse_all();
    e.text_ = std::string(text);
    return e;
}

bigint Expr::eval(const std::map<std::string, bigint>& env) const
{
    if (!root_) throw std::logic_error("empty expression");
    return eval_node(*root_, env);
}

} // namespace zeroapn
