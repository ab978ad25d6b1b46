#ifndef GFD_EXPR_HPP
#define GFD_EXPR_HPP

#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "gfd/errors.hpp"

namespace gfd {

/// Variable name -> value map used by Expr::evaluate.
using Bindings = std::map<std::string, double, std::less<>>;

enum class NodeKind {
    Const,
    Var,
    Add,
    Sub,
    Mul,
    Div,
    Pow,
    Neg,
    Sin,
    Cos,
    Tan,
    Exp,
    Ln,
    Sqrt,
    Abs,
};

bool is_binary(NodeKind k);
bool is_unary(NodeKind k);

/// Immutable expression tree over real variables.
///
/// Nodes are shared and never mutated after construction, so copies are
/// cheap and every operation on Expr is pure and thread-safe.
class Expr {
  public:
    struct Node;
    using NodePtr = std::shared_ptr<const Node>;

    struct Node {
        NodeKind kind;
        double value = 0.0;  // Const
        std::string name;    // Var
        NodePtr a, b;        // children (unary ops use a)
    };

    // Leaf factories.
    static Expr constant(double v);
    static Expr variable(std::string name);

    // Unary factories.
    static Expr neg(Expr x);
    static Expr sin(Expr x);
    static Expr cos(Expr x);
    static Expr tan(Expr x);
    static Expr exp(Expr x);
    static Expr ln(Expr x);
    static Expr sqrt(Expr x);
    static Expr abs(Expr x);

    static Expr pow(Expr base, Expr exponent);
    static Expr pow(Expr base, double exponent);

    NodeKind kind() const { return node_->kind; }
    double const_value() const;
    const std::string& var_name() const;
    Expr left() const;   // first child
    Expr right() const;  // second child
    const NodePtr& node() const { return node_; }

    /// IEEE double value of the expression under `b`. Throws DomainError
    /// naming the offending subexpression when a domain constraint fails
    /// or a free variable is unbound.
    double evaluate(const Bindings& b) const;

    /// Exact symbolic derivative with respect to `var`. |x| differentiates
    /// to the sign factor x/|x|, which faults at 0 only when evaluated.
    Expr differentiate(std::string_view var) const;

    /// Value-preserving cleanup: constant folding, +-0, *1, *0, ^1, ^0.
    Expr simplify() const;

    /// Replace every occurrence of `var` by `replacement`.
    Expr substitute(std::string_view var, const Expr& replacement) const;

    bool depends_on(std::string_view var) const;
    std::set<std::string> free_variables() const;

    /// Minimal-parentheses rendering that re-parses to the same tree.
    std::string to_string() const;

    bool same_structure(const Expr& other) const;

    bool is_const() const { return kind() == NodeKind::Const; }
    bool is_const(double v) const;

  private:
    explicit Expr(NodePtr n) : node_(std::move(n)) {}
    static Expr make(NodeKind k, Expr a);
    static Expr make(NodeKind k, Expr a, Expr b);
    NodePtr node_;

    friend Expr operator+(Expr l, Expr r);
    friend Expr operator-(Expr l, Expr r);
    friend Expr operator*(Expr l, Expr r);
    friend Expr operator/(Expr l, Expr r);
    friend Expr operator-(Expr x);
};

Expr operator+(Expr l, Expr r);
Expr operator-(Expr l, Expr r);
Expr operator*(Expr l, Expr r);
Expr operator/(Expr l, Expr r);
Expr operator-(Expr x);

/// Variable names accepted by the default grammar: t, x, t1..t9.
const std::vector<std::string>& default_variables();

/// Variable names accepted inside weight expressions: t, alpha, tau.
const std::vector<std::string>& weight_variables();

/// Parse `text` against the expression grammar. Unknown identifiers,
/// unbalanced parentheses and trailing tokens raise ParseError with the
/// character offset. `allowed` lists the variable names in scope.
Expr parse(std::string_view text);
Expr parse(std::string_view text, const std::vector<std::string>& allowed);

}  // namespace gfd

#endif
