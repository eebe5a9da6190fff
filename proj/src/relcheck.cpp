#include "czlattice/relcheck.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace czlattice {

Frac::Frac(long long n, long long d) {
    if (d == 0) throw EvaluationError("zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g == 0) g = 1;
    num = n / g;
    den = d / g;
}

Frac Frac::operator+(const Frac& o) const { return {num * o.den + o.num * den, den * o.den}; }
Frac Frac::operator-(const Frac& o) const { return {num * o.den - o.num * den, den * o.den}; }
Frac Frac::operator*(const Frac& o) const { return {num * o.num, den * o.den}; }

std::string Frac::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

// ---- Lexer ----------------------------------------------------------------

namespace {

struct Token {
    enum Kind { Int, Name, Sym, End } kind = End;
    std::string text;
    int line = 1;
    int col = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }

    const Token& peek() const { return tok_; }
    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < s_.size() && (s_[i_] == ' ' || s_[i_] == '\t')) bump();
        tok_ = Token{};
        tok_.line = line_;
        tok_.col = col_;
        if (i_ >= s_.size()) {
            tok_.kind = Token::End;
            return;
        }
        char c = s_[i_];
        if (c == '\n') {
            // Relations are single-line; a newline ends the token stream.
            tok_.kind = Token::End;
            return;
        }
        if (std::isdigit((unsigned char)c)) {
            tok_.kind = Token::Int;
            while (i_ < s_.size() && std::isdigit((unsigned char)s_[i_])) {
                tok_.text += s_[i_];
                bump();
            }
            return;
        }
        if (std::isalpha((unsigned char)c)) {
            tok_.kind = Token::Name;
            while (i_ < s_.size() &&
                   (std::isalnum((unsigned char)s_[i_]) || s_[i_] == '_')) {
                tok_.text += s_[i_];
                bump();
            }
            return;
        }
        if (c == '=' && i_ + 1 < s_.size() && s_[i_ + 1] == '=') {
            tok_.kind = Token::Sym;
            tok_.text = "==";
            bump();
            bump();
            return;
        }
        if (c == '.' && i_ + 1 < s_.size() && s_[i_ + 1] == '.') {
            tok_.kind = Token::Sym;
            tok_.text = "..";
            bump();
            bump();
            return;
        }
        if (std::string("+-*^(){}[],_/").find(c) != std::string::npos) {
            tok_.kind = Token::Sym;
            tok_.text = std::string(1, c);
            bump();
            return;
        }
        throw SyntaxError(line_, col_, std::string("unexpected character '") + c + "'");
    }

    void bump() {
        if (s_[i_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++i_;
    }

    const std::string& s_;
    size_t i_ = 0;
    int line_ = 1;
    int col_ = 1;
    Token tok_;
};

// ---- Parser ---------------------------------------------------------------

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) {}

    Relation parse() {
        Relation rel;
        rel.lhs = parse_expr();
        expect_sym("==");
        rel.rhs = parse_expr();
        if (lex_.peek().kind == Token::Name && lex_.peek().text == "for") {
            lex_.next();
            rel.bindings.push_back(parse_binding());
            while (is_sym(",")) {
                lex_.next();
                rel.bindings.push_back(parse_binding());
            }
        }
        if (lex_.peek().kind != Token::End)
            throw SyntaxError(lex_.peek().line, lex_.peek().col,
                              "trailing input '" + lex_.peek().text + "'");
        return rel;
    }

private:
    bool is_sym(const std::string& s) const {
        return lex_.peek().kind == Token::Sym && lex_.peek().text == s;
    }
    void expect_sym(const std::string& s) {
        if (!is_sym(s))
            throw SyntaxError(lex_.peek().line, lex_.peek().col,
                              "expected '" + s + "', got '" + lex_.peek().text + "'");
        lex_.next();
    }

    Binding parse_binding() {
        Token v = lex_.next();
        if (v.kind != Token::Name) throw SyntaxError(v.line, v.col, "expected binding variable");
        Token in = lex_.next();
        if (in.kind != Token::Name || in.text != "in")
            throw SyntaxError(in.line, in.col, "expected 'in'");
        Binding b;
        b.var = v.text;
        b.lo = parse_int();
        expect_sym("..");
        b.hi = parse_int();
        if (b.lo > b.hi)
            throw SyntaxError(v.line, v.col, "empty binding range for " + b.var);
        return b;
    }

    long long parse_int() {
        bool neg = false;
        if (is_sym("-")) {
            lex_.next();
            neg = true;
        }
        Token t = lex_.next();
        if (t.kind != Token::Int) throw SyntaxError(t.line, t.col, "expected integer");
        long long v = std::stoll(t.text);
        return neg ? -v : v;
    }

    ExprPtr parse_expr() {
        auto node = std::make_shared<ExprNode>();
        node->kind = ExprNode::Sum;
        node->terms.emplace_back(+1, parse_term());
        while (is_sym("+") || is_sym("-")) {
            int sgn = lex_.next().text == "+" ? +1 : -1;
            node->terms.emplace_back(sgn, parse_term());
        }
        if (node->terms.size() == 1 && node->terms[0].first == +1) return node->terms[0].second;
        return node;
    }

    ExprPtr parse_term() {
        auto node = std::make_shared<ExprNode>();
        node->kind = ExprNode::Product;
        node->factors.push_back(parse_factor());
        while (is_sym("*")) {
            lex_.next();
            node->factors.push_back(parse_factor());
        }
        if (node->factors.size() == 1) return node->factors[0];
        return node;
    }

    ExprPtr parse_factor() {
        const Token& t = lex_.peek();
        if (t.kind == Token::Sym && t.text == "(") {
            lex_.next();
            ExprPtr e = parse_expr();
            expect_sym(")");
            return e;
        }
        if (t.kind == Token::Sym && t.text == "[") {
            lex_.next();
            auto node = std::make_shared<ExprNode>();
            node->lhs = parse_expr();
            expect_sym(",");
            node->rhs = parse_expr();
            expect_sym("]");
            expect_sym("_");
            if (is_sym("*")) {
                lex_.next();
                node->kind = ExprNode::StarBr;
            } else {
                node->kind = ExprNode::DefBr;
                expect_sym("(");
                node->x = parse_iexpr();
                if (is_sym(",")) {
                    lex_.next();
                    node->y = parse_iexpr();
                }
                expect_sym(")");
            }
            return node;
        }
        if (t.kind == Token::Name) {
            Token name = lex_.next();
            if (name.text == "q" && is_sym("^")) {
                lex_.next();
                expect_sym("(");
                auto node = std::make_shared<ExprNode>();
                node->kind = ExprNode::QPow;
                node->iexpr = parse_iexpr();
                expect_sym(")");
                return node;
            }
            if (name.text == "qb" && is_sym("(")) {
                lex_.next();
                auto node = std::make_shared<ExprNode>();
                node->kind = ExprNode::QBr;
                node->iexpr = parse_iexpr();
                expect_sym(")");
                return node;
            }
            auto node = std::make_shared<ExprNode>();
            node->kind = ExprNode::OpRef;
            node->name = name.text;
            expect_sym("{");
            node->args.push_back(parse_iexpr());
            while (is_sym(",")) {
                lex_.next();
                node->args.push_back(parse_iexpr());
            }
            expect_sym("}");
            return node;
        }
        throw SyntaxError(t.line, t.col, "expected factor, got '" + t.text + "'");
    }

    IExprPtr parse_iexpr() {
        IExprPtr a = parse_iterm();
        while (is_sym("+") || is_sym("-")) {
            bool add = lex_.next().text == "+";
            auto node = std::make_shared<IExprNode>();
            node->kind = add ? IExprNode::Add : IExprNode::Sub;
            node->a = a;
            node->b = parse_iterm();
            a = node;
        }
        return a;
    }

    IExprPtr parse_iterm() {
        IExprPtr a = parse_ifactor();
        for (;;) {
            if (is_sym("*")) {
                lex_.next();
                auto node = std::make_shared<IExprNode>();
                node->kind = IExprNode::Mul;
                node->a = a;
                node->b = parse_ifactor();
                a = node;
            } else if (is_sym("/")) {
                lex_.next();
                Token d = lex_.next();
                if (d.kind != Token::Int)
                    throw SyntaxError(d.line, d.col, "expected integer divisor");
                auto node = std::make_shared<IExprNode>();
                node->kind = IExprNode::Div;
                node->a = a;
                node->divisor = std::stoll(d.text);
                if (node->divisor == 0)
                    throw SyntaxError(d.line, d.col, "zero divisor");
                a = node;
            } else {
                return a;
            }
        }
    }

    IExprPtr parse_ifactor() {
        const Token& t = lex_.peek();
        if (t.kind == Token::Sym && t.text == "-") {
            lex_.next();
            auto node = std::make_shared<IExprNode>();
            node->kind = IExprNode::Neg;
            node->a = parse_ifactor();
            return node;
        }
        if (t.kind == Token::Sym && t.text == "(") {
            lex_.next();
            IExprPtr e = parse_iexpr();
            expect_sym(")");
            return e;
        }
        if (t.kind == Token::Int) {
            auto node = std::make_shared<IExprNode>();
            node->kind = IExprNode::Lit;
            node->lit = std::stoll(lex_.next().text);
            return node;
        }
        if (t.kind == Token::Name) {
            auto node = std::make_shared<IExprNode>();
            node->kind = IExprNode::Var;
            node->var = lex_.next().text;
            return node;
        }
        throw SyntaxError(t.line, t.col, "expected index expression");
    }

    Lexer lex_;
};

// ---- Printer --------------------------------------------------------------

void print_iexpr(std::ostream& os, const IExprPtr& e, bool parens = false) {
    switch (e->kind) {
        case IExprNode::Lit: os << e->lit; break;
        case IExprNode::Var: os << e->var; break;
        case IExprNode::Neg:
            os << '-';
            print_iexpr(os, e->a, true);
            break;
        case IExprNode::Add:
        case IExprNode::Sub:
            if (parens) os << '(';
            print_iexpr(os, e->a);
            os << (e->kind == IExprNode::Add ? "+" : "-");
            print_iexpr(os, e->b, true);
            if (parens) os << ')';
            break;
        case IExprNode::Mul:
            print_iexpr(os, e->a, true);
            os << '*';
            print_iexpr(os, e->b, true);
            break;
        case IExprNode::Div:
            print_iexpr(os, e->a, true);
            os << '/' << e->divisor;
            break;
    }
}

void print_expr(std::ostream& os, const ExprPtr& e, bool parens = false) {
    switch (e->kind) {
        case ExprNode::QPow:
            os << "q^(";
            print_iexpr(os, e->iexpr);
            os << ')';
            break;
        case ExprNode::QBr:
            os << "qb(";
            print_iexpr(os, e->iexpr);
            os << ')';
            break;
        case ExprNode::OpRef:
            os << e->name << '{';
            for (size_t i = 0; i < e->args.size(); ++i) {
                if (i) os << ',';
                print_iexpr(os, e->args[i]);
            }
            os << '}';
            break;
        case ExprNode::Product:
            if (parens) os << '(';
            for (size_t i = 0; i < e->factors.size(); ++i) {
                if (i) os << '*';
                print_expr(os, e->factors[i], true);
            }
            if (parens) os << ')';
            break;
        case ExprNode::Sum:
            if (parens) os << '(';
            for (size_t i = 0; i < e->terms.size(); ++i) {
                if (i || e->terms[i].first < 0) os << (e->terms[i].first > 0 ? "+" : "-");
                print_expr(os, e->terms[i].second, true);
            }
            if (parens) os << ')';
            break;
        case ExprNode::DefBr:
        case ExprNode::StarBr:
            os << '[';
            print_expr(os, e->lhs);
            os << ',';
            print_expr(os, e->rhs);
            os << ']';
            if (e->kind == ExprNode::StarBr) {
                os << "_*";
            } else {
                os << "_(";
                print_iexpr(os, e->x);
                if (e->y) {
                    os << ',';
                    print_iexpr(os, e->y);
                }
                os << ')';
            }
            break;
    }
}

bool iexpr_equal(const IExprPtr& a, const IExprPtr& b) {
    if (!a || !b) return !a && !b;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case IExprNode::Lit: return a->lit == b->lit;
        case IExprNode::Var: return a->var == b->var;
        case IExprNode::Neg: return iexpr_equal(a->a, b->a);
        case IExprNode::Div: return a->divisor == b->divisor && iexpr_equal(a->a, b->a);
        default: return iexpr_equal(a->a, b->a) && iexpr_equal(a->b, b->b);
    }
}

bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
    if (!a || !b) return !a && !b;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case ExprNode::QPow:
        case ExprNode::QBr: return iexpr_equal(a->iexpr, b->iexpr);
        case ExprNode::OpRef: {
            if (a->name != b->name || a->args.size() != b->args.size()) return false;
            for (size_t i = 0; i < a->args.size(); ++i)
                if (!iexpr_equal(a->args[i], b->args[i])) return false;
            return true;
        }
        case ExprNode::Product: {
            if (a->factors.size() != b->factors.size()) return false;
            for (size_t i = 0; i < a->factors.size(); ++i)
                if (!expr_equal(a->factors[i], b->factors[i])) return false;
            return true;
        }
        case ExprNode::Sum: {
            if (a->terms.size() != b->terms.size()) return false;
            for (size_t i = 0; i < a->terms.size(); ++i)
                if (a->terms[i].first != b->terms[i].first ||
                    !expr_equal(a->terms[i].second, b->terms[i].second))
                    return false;
            return true;
        }
        case ExprNode::DefBr:
            if (!iexpr_equal(a->x, b->x) || !iexpr_equal(a->y, b->y)) return false;
            [[fallthrough]];
        case ExprNode::StarBr:
            return expr_equal(a->lhs, b->lhs) && expr_equal(a->rhs, b->rhs);
    }
    return false;
}

} // namespace

Relation parse_relation(const std::string& text) { return Parser(text).parse(); }

std::string pretty_print(const Relation& rel) {
    std::ostringstream os;
    print_expr(os, rel.lhs);
    os << " == ";
    print_expr(os, rel.rhs);
    for (size_t i = 0; i < rel.bindings.size(); ++i) {
        os << (i == 0 ? " for " : ", ");
        os << rel.bindings[i].var << " in " << rel.bindings[i].lo << ".." << rel.bindings[i].hi;
    }
    return os.str();
}

bool ast_equal(const Relation& a, const Relation& b) {
    if (a.bindings.size() != b.bindings.size()) return false;
    for (size_t i = 0; i < a.bindings.size(); ++i) {
        const Binding& x = a.bindings[i];
        const Binding& y = b.bindings[i];
        if (x.var != y.var || x.lo != y.lo || x.hi != y.hi) return false;
    }
    return expr_equal(a.lhs, b.lhs) && expr_equal(a.rhs, b.rhs);
}

std::vector<Relation> parse_suite_text(const std::string& text) {
    std::vector<Relation> out;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        bool blank = true;
        for (char c : line)
            if (!std::isspace((unsigned char)c)) blank = false;
        if (blank) continue;
        try {
            out.push_back(parse_relation(line));
        } catch (const SyntaxError& e) {
            throw SyntaxError(lineno, e.col, e.what());
        }
    }
    return out;
}

// ---- Evaluation -----------------------------------------------------------

namespace {

using Env = std::map<std::string, long long>;

Frac eval_iexpr(const IExprPtr& e, const Env& env) {
    switch (e->kind) {
        case IExprNode::Lit: return Frac(e->lit);
        case IExprNode::Var: {
            auto it = env.find(e->var);
            if (it == env.end()) throw EvaluationError("unbound variable " + e->var);
            return Frac(it->second);
        }
        case IExprNode::Neg: return -eval_iexpr(e->a, env);
        case IExprNode::Add: return eval_iexpr(e->a, env) + eval_iexpr(e->b, env);
        case IExprNode::Sub: return eval_iexpr(e->a, env) - eval_iexpr(e->b, env);
        case IExprNode::Mul: return eval_iexpr(e->a, env) * eval_iexpr(e->b, env);
        case IExprNode::Div: return eval_iexpr(e->a, env) * Frac(1, e->divisor);
    }
    throw EvaluationError("bad index expression");
}

// Value of a sub-expression: scalar * (operator or 1).
struct Val {
    cplx scalar{1.0, 0.0};
    std::optional<EvalOp> op;
};

cplx q_pow_frac(const PhaseExponent& q, const Frac& f) {
    return q.pow_frac(f.num, f.den).value();
}

double q_bracket_frac(const PhaseExponent& q, const Frac& f) {
    if (f.num == 0) return 0.0;
    if (q.is_real()) throw DegenerateQ("q-bracket undefined for real q");
    const double pi = 3.14159265358979323846264338327950288;
    double theta = pi * double(q.exponent()) / double(q.ring().M);
    return std::sin(double(f.num) / double(f.den) * theta) / std::sin(theta);
}

EvalOp op_scale(EvalOp o, cplx s) {
    if (o.is_window)
        o.win = s * *o.win;
    else
        o.mat = s * o.mat;
    return o;
}

EvalOp op_mul(const EvalOp& a, const EvalOp& b) {
    if (a.is_window != b.is_window)
        throw EvaluationError("cannot multiply matrix and Laurent-window operators");
    EvalOp r;
    r.is_window = a.is_window;
    if (a.is_window)
        r.win = *a.win * *b.win;
    else
        r.mat = a.mat * b.mat;
    r.graded = a.graded && b.graded;
    r.mode = a.mode + b.mode;
    r.weight2 = a.weight2 + b.weight2;
    return r;
}

EvalOp op_add(const EvalOp& a, const EvalOp& b, int sign_b) {
    if (a.is_window != b.is_window)
        throw EvaluationError("cannot add matrix and Laurent-window operators");
    EvalOp r;
    r.is_window = a.is_window;
    cplx s = sign_b > 0 ? 1.0 : -1.0;
    if (a.is_window)
        r.win = *a.win + s * *b.win;
    else
        r.mat = a.mat + s * b.mat;
    r.graded = a.graded && b.graded && a.mode == b.mode && a.weight2 == b.weight2;
    r.mode = a.mode;
    r.weight2 = a.weight2;
    return r;
}

// Fold the scalar prefactor into the operator, lifting pure scalars to
// scalar * identity when a template operator fixes the space.
EvalOp materialize(const Val& v, const EvalOp* like, const Registry& reg) {
    if (v.op) return op_scale(*v.op, v.scalar);
    if (!like) throw EvaluationError("scalar value where an operator is required");
    EvalOp r;
    r.is_window = like->is_window;
    if (like->is_window)
        r.win = v.scalar * WindowOp::identity(reg.q);
    else
        r.mat = v.scalar * CMatrix::identity(like->mat.size());
    r.mode = 0;
    r.weight2 = 0;
    return r;
}

Val eval_expr(const ExprPtr& e, const Env& env, const Registry& reg) {
    switch (e->kind) {
        case ExprNode::QPow: {
            Val v;
            v.scalar = q_pow_frac(reg.q, eval_iexpr(e->iexpr, env));
            return v;
        }
        case ExprNode::QBr: {
            Val v;
            v.scalar = q_bracket_frac(reg.q, eval_iexpr(e->iexpr, env));
            return v;
        }
        case ExprNode::OpRef: {
            auto it = reg.ops.find(e->name);
            if (it == reg.ops.end()) throw UnknownName("unknown operator " + e->name);
            std::vector<Frac> args;
            args.reserve(e->args.size());
            for (const auto& a : e->args) args.push_back(eval_iexpr(a, env));
            Val v;
            v.op = it->second(args);
            return v;
        }
        case ExprNode::Product: {
            Val acc;
            for (const auto& f : e->factors) {
                Val v = eval_expr(f, env, reg);
                acc.scalar *= v.scalar;
                if (v.op) {
                    if (!acc.op)
                        acc.op = *v.op;
                    else
                        acc.op = op_mul(*acc.op, *v.op);
                }
            }
            return acc;
        }
        case ExprNode::Sum: {
            // Evaluate all terms first so a scalar can be lifted against any
            // operator term.
            std::vector<std::pair<int, Val>> terms;
            bool any_op = false;
            for (const auto& [sgn, t] : e->terms) {
                terms.emplace_back(sgn, eval_expr(t, env, reg));
                if (terms.back().second.op) any_op = true;
            }
            if (!any_op) {
                Val v;
                v.scalar = 0.0;
                for (const auto& [sgn, t] : terms) v.scalar += double(sgn) * t.scalar;
                return v;
            }
            const EvalOp* like = nullptr;
            for (const auto& [sgn, t] : terms)
                if (t.op) like = &*t.op;
            Val out;
            bool first = true;
            EvalOp acc;
            for (const auto& [sgn, t] : terms) {
                EvalOp o = materialize(t, like, reg);
                if (first) {
                    acc = sgn > 0 ? o : op_scale(o, cplx(-1.0, 0.0));
                    first = false;
                } else {
                    acc = op_add(acc, o, sgn);
                }
            }
            out.op = acc;
            out.scalar = 1.0;
            return out;
        }
        case ExprNode::DefBr: {
            Val a = eval_expr(e->lhs, env, reg);
            Val b = eval_expr(e->rhs, env, reg);
            Frac x = eval_iexpr(e->x, env);
            Frac y = e->y ? eval_iexpr(e->y, env) : -x;
            cplx qx = q_pow_frac(reg.q, x);
            cplx qy = q_pow_frac(reg.q, y);
            if (!a.op || !b.op) {
                // Scalars commute; the bracket collapses to (q^x - q^y) a b
                // when both are scalars, else distributes over the operator.
                if (!a.op && !b.op) {
                    Val v;
                    v.scalar = (qx - qy) * a.scalar * b.scalar;
                    return v;
                }
                Val v;
                const Val& opside = a.op ? a : b;
                v.op = op_scale(*opside.op, (qx - qy) * a.scalar * b.scalar);
                return v;
            }
            EvalOp A = op_scale(*a.op, a.scalar);
            EvalOp B = op_scale(*b.op, b.scalar);
            EvalOp r = op_add(op_scale(op_mul(A, B), qx), op_scale(op_mul(B, A), qy), -1);
            if (A.graded && B.graded) {
                r.graded = true;
                r.mode = A.mode + B.mode;
                r.weight2 = A.weight2 + B.weight2;
            }
            Val v;
            v.op = r;
            return v;
        }
        case ExprNode::StarBr: {
            Val a = eval_expr(e->lhs, env, reg);
            Val b = eval_expr(e->rhs, env, reg);
            if (!a.op || !b.op)
                throw EvaluationError("star bracket needs operator operands");
            if (!a.op->graded || !b.op->graded)
                throw EvaluationError("star bracket needs graded operands");
            EvalOp A = op_scale(*a.op, a.scalar);
            EvalOp B = op_scale(*b.op, b.scalar);
            long long x4 = (long long)A.mode * B.weight2 - (long long)B.mode * A.weight2;
            cplx qm = reg.q.pow_frac(-x4, 4).value();
            cplx qp = reg.q.pow_frac(x4, 4).value();
            EvalOp r = op_add(op_scale(op_mul(A, B), qm), op_scale(op_mul(B, A), qp), -1);
            r.graded = true;
            r.mode = A.mode + B.mode;
            r.weight2 = A.weight2 + B.weight2;
            Val v;
            v.op = r;
            return v;
        }
    }
    throw EvaluationError("bad expression");
}

double window_scale(const WindowOp& w, const LaurentWindow& win) {
    double m = 0.0;
    int margin = w.max_abs_shift();
    for (int j = win.d_min + margin; j + margin <= win.d_max; ++j)
        for (const auto& [d, v] : w.apply_to_monomial(j)) m = std::max(m, std::abs(v));
    return m;
}

double compare(const Val& lhs, const Val& rhs, const Registry& reg) {
    if (!lhs.op && !rhs.op) {
        double scale = std::max({1.0, std::abs(lhs.scalar), std::abs(rhs.scalar)});
        return std::abs(lhs.scalar - rhs.scalar) / scale;
    }
    const EvalOp* like = lhs.op ? &*lhs.op : &*rhs.op;
    EvalOp A = materialize(lhs, like, reg);
    EvalOp B = materialize(rhs, like, reg);
    if (A.is_window != B.is_window)
        throw EvaluationError("cannot compare matrix and Laurent-window operators");
    if (A.is_window) {
        double scale = std::max({1.0, window_scale(*A.win, reg.window),
                                 window_scale(*B.win, reg.window)});
        return window_residual(*A.win, *B.win, reg.window) / scale;
    }
    return CMatrix::rel_residual(A.mat, B.mat);
}

} // namespace

Report check_suite(const RelationSuite& suite, const Registry& registry) {
    Report rep;
    rep.suite = suite.name;
    rep.q_exponent_s = registry.q.exponent();
    rep.q_exponent_M = registry.q.ring().M;

    for (size_t ri = 0; ri < suite.relations.size(); ++ri) {
        const Relation& rel = suite.relations[ri];
        // Enumerate all binding assignments in declaration order.
        std::vector<long long> cursor;
        for (const auto& b : rel.bindings) cursor.push_back(b.lo);
        bool done = false;
        while (!done) {
            Env env;
            for (size_t i = 0; i < rel.bindings.size(); ++i)
                env[rel.bindings[i].var] = cursor[i];
            CheckResult c;
            c.name = "relation-" + std::to_string(ri + 1);
            for (const auto& [k, v] : env) c.params[k] = v;
            try {
                Val l = eval_expr(rel.lhs, env, registry);
                Val r = eval_expr(rel.rhs, env, registry);
                c.residual = compare(l, r, registry);
                c.pass = c.residual <= suite.tolerance;
            } catch (const Error& e) {
                c.residual = std::numeric_limits<double>::infinity();
                c.pass = false;
                c.note = e.what();
            }
            rep.add(c);

            if (rel.bindings.empty()) break;
            size_t i = rel.bindings.size();
            while (i > 0) {
                --i;
                if (++cursor[i] <= rel.bindings[i].hi) break;
                cursor[i] = rel.bindings[i].lo;
                if (i == 0) done = true;
            }
        }
    }
    return rep;
}

} // namespace czlattice
