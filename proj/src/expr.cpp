#include "gfd/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

#include "gfd/format.hpp"

namespace gfd {

bool is_binary(NodeKind k) {
    switch (k) {
        case NodeKind::Add:
        case NodeKind::Sub:
        case NodeKind::Mul:
        case NodeKind::Div:
        case NodeKind::Pow:
            return true;
        default:
            return false;
    }
}

bool is_unary(NodeKind k) {
    switch (k) {
        case NodeKind::Neg:
        case NodeKind::Sin:
        case NodeKind::Cos:
        case NodeKind::Tan:
        case NodeKind::Exp:
        case NodeKind::Ln:
        case NodeKind::Sqrt:
        case NodeKind::Abs:
            return true;
        default:
            return false;
    }
}

Expr Expr::make(NodeKind k, Expr a) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->a = std::move(a.node_);
    return Expr(std::move(n));
}

Expr Expr::make(NodeKind k, Expr a, Expr b) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->a = std::move(a.node_);
    n->b = std::move(b.node_);
    return Expr(std::move(n));
}

Expr Expr::constant(double v) {
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::Const;
    n->value = v;
    return Expr(std::move(n));
}

Expr Expr::variable(std::string name) {
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::Var;
    n->name = std::move(name);
    return Expr(std::move(n));
}

Expr Expr::neg(Expr x) { return make(NodeKind::Neg, std::move(x)); }
Expr Expr::sin(Expr x) { return make(NodeKind::Sin, std::move(x)); }
Expr Expr::cos(Expr x) { return make(NodeKind::Cos, std::move(x)); }
Expr Expr::tan(Expr x) { return make(NodeKind::Tan, std::move(x)); }
Expr Expr::exp(Expr x) { return make(NodeKind::Exp, std::move(x)); }
Expr Expr::ln(Expr x) { return make(NodeKind::Ln, std::move(x)); }
Expr Expr::sqrt(Expr x) { return make(NodeKind::Sqrt, std::move(x)); }
Expr Expr::abs(Expr x) { return make(NodeKind::Abs, std::move(x)); }

Expr Expr::pow(Expr base, Expr exponent) {
    return make(NodeKind::Pow, std::move(base), std::move(exponent));
}

Expr Expr::pow(Expr base, double exponent) {
    return pow(std::move(base), constant(exponent));
}

double Expr::const_value() const {
    if (kind() != NodeKind::Const) throw Error("const_value on non-constant node");
    return node_->value;
}

const std::string& Expr::var_name() const {
    if (kind() != NodeKind::Var) throw Error("var_name on non-variable node");
    return node_->name;
}

Expr Expr::left() const {
    if (!node_->a) throw Error("node has no children");
    return Expr(node_->a);
}

Expr Expr::right() const {
    if (!node_->b) throw Error("node has no second child");
    return Expr(node_->b);
}

bool Expr::is_const(double v) const {
    return kind() == NodeKind::Const && node_->value == v;
}

Expr operator+(Expr l, Expr r) { return Expr::make(NodeKind::Add, std::move(l), std::move(r)); }
Expr operator-(Expr l, Expr r) { return Expr::make(NodeKind::Sub, std::move(l), std::move(r)); }
Expr operator*(Expr l, Expr r) { return Expr::make(NodeKind::Mul, std::move(l), std::move(r)); }
Expr operator/(Expr l, Expr r) { return Expr::make(NodeKind::Div, std::move(l), std::move(r)); }
Expr operator-(Expr x) { return Expr::make(NodeKind::Neg, std::move(x)); }

// ---------------------------------------------------------------------------
// Evaluation

namespace {

bool is_integral(double v) {
    return std::isfinite(v) && v == std::rint(v) && std::fabs(v) < 9.007199254740992e15;
}

[[noreturn]] void domain_fail(const Expr::Node* n, const Bindings& b, const std::string& what);

double eval_node(const Expr::Node* n, const Bindings& b) {
    switch (n->kind) {
        case NodeKind::Const:
            return n->value;
        case NodeKind::Var: {
            auto it = b.find(n->name);
            if (it == b.end()) domain_fail(n, b, "unbound variable '" + n->name + "'");
            return it->second;
        }
        case NodeKind::Add:
            return eval_node(n->a.get(), b) + eval_node(n->b.get(), b);
        case NodeKind::Sub:
            return eval_node(n->a.get(), b) - eval_node(n->b.get(), b);
        case NodeKind::Mul:
            return eval_node(n->a.get(), b) * eval_node(n->b.get(), b);
        case NodeKind::Div: {
            const double num = eval_node(n->a.get(), b);
            const double den = eval_node(n->b.get(), b);
            if (den == 0.0) domain_fail(n, b, "division by zero");
            return num / den;
        }
        case NodeKind::Pow: {
            const double base = eval_node(n->a.get(), b);
            const double ex = eval_node(n->b.get(), b);
            if (is_integral(ex)) {
                if (base == 0.0 && ex < 0.0) domain_fail(n, b, "zero base with negative exponent");
                return std::pow(base, ex);
            }
            if (base <= 0.0) domain_fail(n, b, "non-integer power of a non-positive base");
            return std::pow(base, ex);
        }
        case NodeKind::Neg:
            return -eval_node(n->a.get(), b);
        case NodeKind::Sin:
            return std::sin(eval_node(n->a.get(), b));
        case NodeKind::Cos:
            return std::cos(eval_node(n->a.get(), b));
        case NodeKind::Tan:
            return std::tan(eval_node(n->a.get(), b));
        case NodeKind::Exp:
            return std::exp(eval_node(n->a.get(), b));
        case NodeKind::Ln: {
            const double v = eval_node(n->a.get(), b);
            if (v <= 0.0) domain_fail(n, b, "ln of a non-positive value");
            return std::log(v);
        }
        case NodeKind::Sqrt: {
            const double v = eval_node(n->a.get(), b);
            if (v < 0.0) domain_fail(n, b, "sqrt of a negative value");
            return std::sqrt(v);
        }
        case NodeKind::Abs:
            return std::fabs(eval_node(n->a.get(), b));
    }
    throw Error("corrupt expression node");
}

}  // namespace

double Expr::evaluate(const Bindings& b) const { return eval_node(node_.get(), b); }

// ---------------------------------------------------------------------------
// Differentiation

Expr Expr::differentiate(std::string_view var) const {
    const Node* n = node_.get();
    const auto c = [](double v) { return constant(v); };
    switch (n->kind) {
        case NodeKind::Const:
            return c(0);
        case NodeKind::Var:
            return c(n->name == var ? 1 : 0);
        case NodeKind::Add:
            return left().differentiate(var) + right().differentiate(var);
        case NodeKind::Sub:
            return left().differentiate(var) - right().differentiate(var);
        case NodeKind::Mul: {
            Expr f = left(), g = right();
            return f.differentiate(var) * g + f * g.differentiate(var);
        }
        case NodeKind::Div: {
            Expr f = left(), g = right();
            return (f.differentiate(var) * g - f * g.differentiate(var)) / pow(g, 2.0);
        }
        case NodeKind::Pow: {
            Expr f = left(), g = right();
            if (g.kind() == NodeKind::Const) {
                const double e = g.const_value();
                if (e == 0.0) return c(0);
                if (e == 1.0) return f.differentiate(var);
                return c(e) * pow(f, e - 1.0) * f.differentiate(var);
            }
            // f^g = exp(g ln f):  (f^g)' = f^g (g' ln f + g f'/f)
            Expr fp = f.differentiate(var), gp = g.differentiate(var);
            return pow(f, g) * (gp * ln(f) + g * fp / f);
        }
        case NodeKind::Neg:
            return -left().differentiate(var);
        case NodeKind::Sin:
            return cos(left()) * left().differentiate(var);
        case NodeKind::Cos:
            return -(sin(left()) * left().differentiate(var));
        case NodeKind::Tan:
            return left().differentiate(var) / pow(cos(left()), 2.0);
        case NodeKind::Exp:
            return exp(left()) * left().differentiate(var);
        case NodeKind::Ln:
            return left().differentiate(var) / left();
        case NodeKind::Sqrt:
            return left().differentiate(var) / (c(2) * sqrt(left()));
        case NodeKind::Abs:
            // sign(u) * u', expressed as u/|u|; evaluation faults at u = 0.
            return (left() / abs(left())) * left().differentiate(var);
    }
    throw Error("corrupt expression node");
}

// ---------------------------------------------------------------------------
// Simplification

Expr Expr::simplify() const {
    const Node* n = node_.get();
    if (n->kind == NodeKind::Const || n->kind == NodeKind::Var) return *this;

    if (is_unary(n->kind)) {
        Expr a = left().simplify();
        if (a.is_const()) {
            if (n->kind == NodeKind::Neg) return constant(-a.const_value());
            Expr folded = make(n->kind, a);
            try {
                return constant(folded.evaluate({}));
            } catch (const DomainError&) {
                return folded;
            }
        }
        if (n->kind == NodeKind::Neg && a.kind() == NodeKind::Neg) return a.left();
        return make(n->kind, std::move(a));
    }

    Expr a = left().simplify();
    Expr b = right().simplify();

    if (a.is_const() && b.is_const()) {
        Expr folded = make(n->kind, a, b);
        try {
            return constant(folded.evaluate({}));
        } catch (const DomainError&) {
            return folded;
        }
    }

    switch (n->kind) {
        case NodeKind::Add:
            if (a.is_const(0)) return b;
            if (b.is_const(0)) return a;
            break;
        case NodeKind::Sub:
            if (b.is_const(0)) return a;
            if (a.is_const(0)) return (b.kind() == NodeKind::Neg) ? b.left() : -b;
            break;
        case NodeKind::Mul:
            if (a.is_const(0) || b.is_const(0)) return constant(0);
            if (a.is_const(1)) return b;
            if (b.is_const(1)) return a;
            break;
        case NodeKind::Div:
            if (a.is_const(0)) return constant(0);
            if (b.is_const(1)) return a;
            break;
        case NodeKind::Pow:
            if (b.is_const(1)) return a;
            if (b.is_const(0)) return constant(1);
            if (a.is_const(1)) return constant(1);
            break;
        default:
            break;
    }
    return make(n->kind, std::move(a), std::move(b));
}

// ---------------------------------------------------------------------------
// Substitution and variable queries

Expr Expr::substitute(std::string_view var, const Expr& replacement) const {
    const Node* n = node_.get();
    switch (n->kind) {
        case NodeKind::Const:
            return *this;
        case NodeKind::Var:
            return n->name == var ? replacement : *this;
        default:
            if (is_unary(n->kind)) return make(n->kind, left().substitute(var, replacement));
            return make(n->kind, left().substitute(var, replacement),
                        right().substitute(var, replacement));
    }
}

bool Expr::depends_on(std::string_view var) const {
    const Node* n = node_.get();
    switch (n->kind) {
        case NodeKind::Const:
            return false;
        case NodeKind::Var:
            return n->name == var;
        default:
            if (is_unary(n->kind)) return left().depends_on(var);
            return left().depends_on(var) || right().depends_on(var);
    }
}

namespace {
void collect_vars(const Expr::Node* n, std::set<std::string>& out) {
    if (n->kind == NodeKind::Var) out.insert(n->name);
    if (n->a) collect_vars(n->a.get(), out);
    if (n->b) collect_vars(n->b.get(), out);
}
}  // namespace

std::set<std::string> Expr::free_variables() const {
    std::set<std::string> out;
    collect_vars(node_.get(), out);
    return out;
}

bool Expr::same_structure(const Expr& other) const {
    const Node* x = node_.get();
    const Node* y = other.node_.get();
    if (x->kind != y->kind) return false;
    switch (x->kind) {
        case NodeKind::Const:
            return x->value == y->value;
        case NodeKind::Var:
            return x->name == y->name;
        default:
            if (is_unary(x->kind)) return left().same_structure(other.left());
            return left().same_structure(other.left()) && right().same_structure(other.right());
    }
}

// ---------------------------------------------------------------------------
// Printing
//
// Precedence ladder mirrors the parser: additive 1, multiplicative 2,
// unary minus 3, power 4, atoms 5. A child is parenthesized when its own
// precedence is below what its slot requires, which makes the output
// re-parse to the identical tree.

namespace {

const char* function_name(NodeKind k) {
    switch (k) {
        case NodeKind::Sin: return "sin";
        case NodeKind::Cos: return "cos";
        case NodeKind::Tan: return "tan";
        case NodeKind::Exp: return "exp";
        case NodeKind::Ln: return "ln";
        case NodeKind::Sqrt: return "sqrt";
        case NodeKind::Abs: return "abs";
        default: return nullptr;
    }
}

int print_prec(const Expr::Node* n) {
    switch (n->kind) {
        case NodeKind::Add:
        case NodeKind::Sub:
            return 1;
        case NodeKind::Mul:
        case NodeKind::Div:
            return 2;
        case NodeKind::Neg:
            return 3;
        case NodeKind::Const:
            // A negative literal prints with a leading '-', so it binds
            // like a unary minus.
            return (std::signbit(n->value) ? 3 : 5);
        case NodeKind::Pow:
            return 4;
        default:
            return 5;
    }
}

void print_node(const Expr::Node* n, int min_prec, std::string& out) {
    const int prec = print_prec(n);
    const bool parens = prec < min_prec;
    if (parens) out += '(';
    switch (n->kind) {
        case NodeKind::Const:
            out += format_shortest(n->value);
            break;
        case NodeKind::Var:
            out += n->name;
            break;
        case NodeKind::Add:
            print_node(n->a.get(), 1, out);
            out += '+';
            print_node(n->b.get(), 2, out);
            break;
        case NodeKind::Sub:
            print_node(n->a.get(), 1, out);
            out += '-';
            print_node(n->b.get(), 2, out);
            break;
        case NodeKind::Mul:
            print_node(n->a.get(), 2, out);
            out += '*';
            print_node(n->b.get(), 3, out);
            break;
        case NodeKind::Div:
            print_node(n->a.get(), 2, out);
            out += '/';
            print_node(n->b.get(), 3, out);
            break;
        case NodeKind::Neg:
            out += '-';
            print_node(n->a.get(), 3, out);
            break;
        case NodeKind::Pow:
            print_node(n->a.get(), 5, out);
            out += '^';
            print_node(n->b.get(), 3, out);
            break;
        default: {
            out += function_name(n->kind);
            out += '(';
            print_node(n->a.get(), 0, out);
            out += ')';
            break;
        }
    }
    if (parens) out += ')';
}

}  // namespace

std::string Expr::to_string() const {
    std::string out;
    print_node(node_.get(), 0, out);
    return out;
}

// ---------------------------------------------------------------------------
// Parser: recursive descent over the grammar
//
//   expr   := term (("+"|"-") term)*
//   term   := factor (("*"|"/") factor)*
//   factor := "-" factor | base ("^" factor)?
//   base   := NUMBER | IDENT | IDENT "(" expr ("," expr)* ")" | "(" expr ")"
//
// '^' is right-associative and binds tighter than the unary minus of its
// base, so "-t^2" parses as -(t^2).

namespace {

struct Parser {
    std::string_view src;
    std::size_t pos = 0;
    const std::vector<std::string>& vars;

    explicit Parser(std::string_view s, const std::vector<std::string>& allowed)
        : src(s), vars(allowed) {}

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos >= src.size();
    }

    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }

    bool consume(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    Expr parse_expr() {
        Expr lhs = parse_term();
        while (true) {
            if (consume('+')) {
                lhs = std::move(lhs) + parse_term();
            } else if (consume('-')) {
                lhs = std::move(lhs) - parse_term();
            } else {
                return lhs;
            }
        }
    }

    Expr parse_term() {
        Expr lhs = parse_factor();
        while (true) {
            if (consume('*')) {
                lhs = std::move(lhs) * parse_factor();
            } else if (consume('/')) {
                lhs = std::move(lhs) / parse_factor();
            } else {
                return lhs;
            }
        }
    }

    Expr parse_factor() {
        if (consume('-')) return -parse_factor();
        Expr base = parse_base();
        if (consume('^')) return Expr::pow(std::move(base), parse_factor());
        return base;
    }

    Expr parse_base() {
        const char c = peek();
        if (c == '\0') throw ParseError(pos, "unexpected end of input");
        if (c == '(') {
            ++pos;
            Expr inner = parse_expr();
            if (!consume(')')) throw ParseError(pos, "expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_ident();
        throw ParseError(pos, std::string("unexpected character '") + c + "'");
    }

    Expr parse_number() {
        skip_ws();
        const std::size_t start = pos;
        while (pos < src.size() &&
               (std::isdigit(static_cast<unsigned char>(src[pos])) || src[pos] == '.'))
            ++pos;
        if (pos < src.size() && (src[pos] == 'e' || src[pos] == 'E')) {
            std::size_t p = pos + 1;
            if (p < src.size() && (src[p] == '+' || src[p] == '-')) ++p;
            if (p < src.size() && std::isdigit(static_cast<unsigned char>(src[p]))) {
                ++p;
                while (p < src.size() && std::isdigit(static_cast<unsigned char>(src[p]))) ++p;
                pos = p;
            }
        }
        double value = 0.0;
        const char* first = src.data() + start;
        const char* last = src.data() + pos;
        auto [end, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || end != last)
            throw ParseError(start, "malformed number '" + std::string(first, last) + "'");
        return Expr::constant(value);
    }

    Expr parse_ident() {
        skip_ws();
        const std::size_t start = pos;
        while (pos < src.size() && (std::isalnum(static_cast<unsigned char>(src[pos])) ||
                                    src[pos] == '_'))
            ++pos;
        const std::string name(src.substr(start, pos - start));
        if (peek() == '(') {
            ++pos;
            std::vector<Expr> args;
            args.push_back(parse_expr());
            while (consume(',')) args.push_back(parse_expr());
            if (!consume(')')) throw ParseError(pos, "expected ')'");
            return make_call(start, name, std::move(args));
        }
        for (const auto& v : vars)
            if (v == name) return Expr::variable(name);
        throw ParseError(start, "unknown identifier '" + name + "'");
    }

    Expr make_call(std::size_t at, const std::string& name, std::vector<Expr> args) {
        NodeKind k;
        if (name == "sin") k = NodeKind::Sin;
        else if (name == "cos") k = NodeKind::Cos;
        else if (name == "tan") k = NodeKind::Tan;
        else if (name == "exp") k = NodeKind::Exp;
        else if (name == "ln") k = NodeKind::Ln;
        else if (name == "sqrt") k = NodeKind::Sqrt;
        else if (name == "abs") k = NodeKind::Abs;
        else throw ParseError(at, "unknown function '" + name + "'");
        if (args.size() != 1)
            throw ParseError(at, "function '" + name + "' expects 1 argument");
        switch (k) {
            case NodeKind::Sin: return Expr::sin(std::move(args[0]));
            case NodeKind::Cos: return Expr::cos(std::move(args[0]));
            case NodeKind::Tan: return Expr::tan(std::move(args[0]));
            case NodeKind::Exp: return Expr::exp(std::move(args[0]));
            case NodeKind::Ln: return Expr::ln(std::move(args[0]));
            case NodeKind::Sqrt: return Expr::sqrt(std::move(args[0]));
            default: return Expr::abs(std::move(args[0]));
        }
    }
};

}  // namespace

const std::vector<std::string>& default_variables() {
    static const std::vector<std::string> vars = {"t",  "x",  "t1", "t2", "t3", "t4",
                                                  "t5", "t6", "t7", "t8", "t9"};
    return vars;
}

const std::vector<std::string>& weight_variables() {
    static const std::vector<std::string> vars = {"t", "alpha", "tau"};
    return vars;
}

Expr parse(std::string_view text, const std::vector<std::string>& allowed) {
    Parser p(text, allowed);
    if (p.at_end()) throw ParseError(0, "empty expression");
    Expr e = p.parse_expr();
    if (!p.at_end()) throw ParseError(p.pos, "unexpected trailing input");
    return e;
}

Expr parse(std::string_view text) { return parse(text, default_variables()); }

// ---------------------------------------------------------------------------

namespace {

[[noreturn]] void domain_fail(const Expr::Node* n, const Bindings& b, const std::string& what) {
    std::string where;
    print_node(n, 0, where);
    std::string msg = what + " in '" + where + "'";
    if (!b.empty()) {
        msg += " with ";
        bool first = true;
        for (const auto& [k, v] : b) {
            if (!first) msg += ", ";
            msg += k + "=" + format_shortest(v);
            first = false;
        }
    }
    throw DomainError(msg);
}

}  // namespace

}  // namespace gfd
