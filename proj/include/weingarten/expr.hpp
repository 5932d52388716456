#ifndef WEINGARTEN_EXPR_HPP
#define WEINGARTEN_EXPR_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace weingarten {

// Small arithmetic expression language used for user-supplied curvature
// relations. Two variable slots: "t" and "v"; "k2" is accepted as an alias
// for the first slot so prescribed principal-curvature relations read
// naturally on the command line.
//
// Grammar (byte-exact contract for the --phi / --f flags):
//   expr   := term (("+"|"-") term)*
//   term   := factor (("*"|"/") factor)*
//   factor := unary ("^" factor)?          ("^" right-associative)
//   unary  := "-" unary | atom
//   atom   := number | "t" | "v" | func "(" expr ")" | "(" expr ")"
//   func   := sqrt | exp | log | sin | cos | tanh | abs
// Numbers are decimal with an optional exponent.
class Expr {
public:
    enum class Op : std::uint8_t {
        Num, VarT, VarV, Add, Sub, Mul, Div, Pow, Neg,
        Sqrt, Exp, Log, Sin, Cos, Tanh, Abs
    };

    struct Node {
        Op op;
        double value = 0.0; // Num only
        int a = -1, b = -1; // child indices into the arena
    };

    Expr() = default;

    // Deterministic and reentrant; throws EvalError on domain violations
    // (log of a nonpositive value, division by zero, non-finite result).
    double eval(double t, double v) const;

    std::string to_string() const;

    bool operator==(const Expr& other) const;

    bool empty() const { return nodes_.empty(); }

    // arena access for construction
    int add_node(Node n) {
        nodes_.push_back(n);
        return static_cast<int>(nodes_.size()) - 1;
    }
    void set_root(int r) { root_ = r; }
    int root() const { return root_; }

    // Appends a copy of other's arena and returns the index of its root in
    // this expression; used to compose expressions programmatically.
    int graft(const Expr& other);

private:
    std::vector<Node> nodes_;
    int root_ = -1;

    double eval_node(int idx, double t, double v) const;
    void print_node(int idx, std::string& out) const;
    bool equal_node(int ia, const Expr& other, int ib) const;
};

// Recursive-descent parser; ParseError/UnknownIdentifier carry the byte
// offset of the offending token.
Expr parse_expr(const std::string& src);

} // namespace weingarten

#endif
