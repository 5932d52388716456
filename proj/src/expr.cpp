#include "weingarten/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

#include "weingarten/errors.hpp"

namespace weingarten {

double Expr::eval(double t, double v) const {
    if (root_ < 0) throw EvalError("eval: empty expression");
    return eval_node(root_, t, v);
}

double Expr::eval_node(int idx, double t, double v) const {
    const Node& n = nodes_[static_cast<std::size_t>(idx)];
    auto finite = [](double x, const char* what) {
        if (!std::isfinite(x)) throw EvalError(std::string("eval: non-finite result in ") + what);
        return x;
    };
    switch (n.op) {
        case Op::Num: return n.value;
        case Op::VarT: return t;
        case Op::VarV: return v;
        case Op::Add: return finite(eval_node(n.a, t, v) + eval_node(n.b, t, v), "+");
        case Op::Sub: return finite(eval_node(n.a, t, v) - eval_node(n.b, t, v), "-");
        case Op::Mul: return finite(eval_node(n.a, t, v) * eval_node(n.b, t, v), "*");
        case Op::Div: {
            const double den = eval_node(n.b, t, v);
            if (den == 0.0) throw EvalError("eval: division by zero");
            return finite(eval_node(n.a, t, v) / den, "/");
        }
        case Op::Pow: {
            const double base = eval_node(n.a, t, v);
            const double ex = eval_node(n.b, t, v);
            const double r = std::pow(base, ex);
            if (std::isnan(r)) throw EvalError("eval: pow domain violation");
            return finite(r, "^");
        }
        case Op::Neg: return -eval_node(n.a, t, v);
        case Op::Sqrt: {
            const double x = eval_node(n.a, t, v);
            if (x < 0.0) throw EvalError("eval: sqrt of negative value");
            return std::sqrt(x);
        }
        case Op::Exp: return finite(std::exp(eval_node(n.a, t, v)), "exp");
        case Op::Log: {
            const double x = eval_node(n.a, t, v);
            if (x <= 0.0) throw EvalError("eval: log of nonpositive value");
            return std::log(x);
        }
        case Op::Sin: return std::sin(eval_node(n.a, t, v));
        case Op::Cos: return std::cos(eval_node(n.a, t, v));
        case Op::Tanh: return std::tanh(eval_node(n.a, t, v));
        case Op::Abs: return std::fabs(eval_node(n.a, t, v));
    }
    throw EvalError("eval: corrupt expression node");
}

namespace {
std::string num_to_string(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}
} // namespace

void Expr::print_node(int idx, std::string& out) const {
    const Node& n = nodes_[static_cast<std::size_t>(idx)];
    auto binary = [&](const char* op) {
        out += '(';
        print_node(n.a, out);
        out += op;
        print_node(n.b, out);
        out += ')';
    };
    auto func = [&](const char* name) {
        out += name;
        out += '(';
        print_node(n.a, out);
        out += ')';
    };
    switch (n.op) {
        case Op::Num: out += num_to_string(n.value); return;
        case Op::VarT: out += 't'; return;
        case Op::VarV: out += 'v'; return;
        case Op::Add: binary("+"); return;
        case Op::Sub: binary("-"); return;
        case Op::Mul: binary("*"); return;
        case Op::Div: binary("/"); return;
        case Op::Pow: binary("^"); return;
        case Op::Neg:
            out += "(-";
            print_node(n.a, out);
            out += ')';
            return;
        case Op::Sqrt: func("sqrt"); return;
        case Op::Exp: func("exp"); return;
        case Op::Log: func("log"); return;
        case Op::Sin: func("sin"); return;
        case Op::Cos: func("cos"); return;
        case Op::Tanh: func("tanh"); return;
        case Op::Abs: func("abs"); return;
    }
}

std::string Expr::to_string() const {
    std::string out;
    if (root_ >= 0) print_node(root_, out);
    return out;
}

bool Expr::equal_node(int ia, const Expr& other, int ib) const {
    const Node& x = nodes_[static_cast<std::size_t>(ia)];
    const Node& y = other.nodes_[static_cast<std::size_t>(ib)];
    if (x.op != y.op) return false;
    if (x.op == Op::Num) return x.value == y.value;
    if (x.a >= 0) {
        if (y.a < 0 || !equal_node(x.a, other, y.a)) return false;
    } else if (y.a >= 0) {
        return false;
    }
    if (x.b >= 0) {
        if (y.b < 0 || !equal_node(x.b, other, y.b)) return false;
    } else if (y.b >= 0) {
        return false;
    }
    return true;
}

bool Expr::operator==(const Expr& other) const {
    if (root_ < 0 || other.root_ < 0) return root_ == other.root_;
    return equal_node(root_, other, other.root_);
}

int Expr::graft(const Expr& other) {
    if (other.root_ < 0) throw EvalError("graft: empty expression");
    const int offset = static_cast<int>(nodes_.size());
    for (const Node& n : other.nodes_) {
        Node m = n;
        if (m.a >= 0) m.a += offset;
        if (m.b >= 0) m.b += offset;
        nodes_.push_back(m);
    }
    return other.root_ + offset;
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& src) : src_(src) {}

    Expr run() {
        Expr e;
        const int root = parse_sum(e);
        skip_ws();
        if (pos_ != src_.size())
            throw ParseError("unexpected trailing input", pos_);
        e.set_root(root);
        return e;
    }

private:
    const std::string& src_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    bool peek_char(char c) {
        skip_ws();
        return pos_ < src_.size() && src_[pos_] == c;
    }
    bool accept(char c) {
        if (peek_char(c)) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        skip_ws();
        if (pos_ >= src_.size() || src_[pos_] != c)
            throw ParseError(std::string("expected ") + what, pos_);
        ++pos_;
    }

    int parse_sum(Expr& e) {
        int lhs = parse_term(e);
        for (;;) {
            if (accept('+')) {
                int rhs = parse_term(e);
                lhs = e.add_node({Expr::Op::Add, 0.0, lhs, rhs});
            } else if (accept('-')) {
                int rhs = parse_term(e);
                lhs = e.add_node({Expr::Op::Sub, 0.0, lhs, rhs});
            } else {
                return lhs;
            }
        }
    }

    int parse_term(Expr& e) {
        int lhs = parse_factor(e);
        for (;;) {
            if (accept('*')) {
                int rhs = parse_factor(e);
                lhs = e.add_node({Expr::Op::Mul, 0.0, lhs, rhs});
            } else if (accept('/')) {
                int rhs = parse_factor(e);
                lhs = e.add_node({Expr::Op::Div, 0.0, lhs, rhs});
            } else {
                return lhs;
            }
        }
    }

    int parse_factor(Expr& e) {
        int base = parse_unary(e);
        if (accept('^')) {
            int ex = parse_factor(e); // right-associative
            return e.add_node({Expr::Op::Pow, 0.0, base, ex});
        }
        return base;
    }

    int parse_unary(Expr& e) {
        if (accept('-')) {
            int inner = parse_unary(e);
            return e.add_node({Expr::Op::Neg, 0.0, inner, -1});
        }
        return parse_atom(e);
    }

    int parse_atom(Expr& e) {
        skip_ws();
        if (pos_ >= src_.size()) throw ParseError("unexpected end of input", pos_);
        const char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            int inner = parse_sum(e);
            expect(')', "')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number(e);
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_ident(e);
        throw ParseError("unexpected character", pos_);
    }

    int parse_number(Expr& e) {
        const std::size_t start = pos_;
        std::size_t p = pos_;
        bool digits = false;
        while (p < src_.size() && std::isdigit(static_cast<unsigned char>(src_[p]))) ++p, digits = true;
        if (p < src_.size() && src_[p] == '.') {
            ++p;
            while (p < src_.size() && std::isdigit(static_cast<unsigned char>(src_[p]))) ++p, digits = true;
        }
        if (!digits) throw ParseError("malformed number", start);
        if (p < src_.size() && (src_[p] == 'e' || src_[p] == 'E')) {
            std::size_t q = p + 1;
            if (q < src_.size() && (src_[q] == '+' || src_[q] == '-')) ++q;
            std::size_t d = q;
            while (d < src_.size() && std::isdigit(static_cast<unsigned char>(src_[d]))) ++d;
            if (d == q) throw ParseError("malformed exponent", p);
            p = d;
        }
        double value = 0.0;
        auto res = std::from_chars(src_.data() + start, src_.data() + p, value);
        if (res.ec != std::errc()) throw ParseError("malformed number", start);
        pos_ = p;
        return e.add_node({Expr::Op::Num, value, -1, -1});
    }

    int parse_ident(Expr& e) {
        const std::size_t start = pos_;
        std::size_t p = pos_;
        while (p < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[p])) || src_[p] == '_'))
            ++p;
        const std::string name = src_.substr(start, p - start);
        pos_ = p;
        if (name == "t" || name == "k2") return e.add_node({Expr::Op::VarT, 0.0, -1, -1});
        if (name == "v") return e.add_node({Expr::Op::VarV, 0.0, -1, -1});
        Expr::Op fop;
        if (name == "sqrt") fop = Expr::Op::Sqrt;
        else if (name == "exp") fop = Expr::Op::Exp;
        else if (name == "log") fop = Expr::Op::Log;
        else if (name == "sin") fop = Expr::Op::Sin;
        else if (name == "cos") fop = Expr::Op::Cos;
        else if (name == "tanh") fop = Expr::Op::Tanh;
        else if (name == "abs") fop = Expr::Op::Abs;
        else throw UnknownIdentifier("unknown identifier '" + name + "'", start);
        expect('(', "'(' after function name");
        int arg = parse_sum(e);
        expect(')', "')'");
        return e.add_node({fop, 0.0, arg, -1});
    }
};

} // namespace

Expr parse_expr(const std::string& src) {
    Parser p(src);
    return p.run();
}

} // namespace weingarten
