#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "czlattice/czrep.hpp"
#include "czlattice/report.hpp"
#include "czlattice/window.hpp"

namespace czlattice {

/**
 * Quantified operator-identity engine.  Grammar (one relation per line,
 * '#' comments):
 *
 *   relation := expr "==" expr ["for" binding ("," binding)*]
 *   binding  := VAR "in" INT ".." INT
 *   expr     := term (("+"|"-") term)*
 *   term     := factor ("*" factor)*
 *   factor   := "q^(" iexpr ")" | "qb(" iexpr ")"
 *             | NAME "{" iexpr ("," iexpr)* "}"
 *             | "[" expr "," expr "]" ("_(" iexpr ["," iexpr] ")" | "_*")
 *             | "(" expr ")"
 *   iexpr    := integer expressions over bound variables, with halves
 *               written "/2" (quarters "/4" also accepted)
 *
 * Both sides evaluate against a named operator registry; operator references
 * carry (mode, weight) metadata so the star bracket can compute its phase.
 */

/// Exact rational with small denominator (1, 2 or 4 after normalization).
struct Frac {
    long long num = 0;
    long long den = 1;

    Frac() = default;
    Frac(long long n) : num(n), den(1) {}
    Frac(long long n, long long d);

    Frac operator+(const Frac& o) const;
    Frac operator-(const Frac& o) const;
    Frac operator*(const Frac& o) const;
    Frac operator-() const { return {-num, den}; }
    bool operator==(const Frac& o) const { return num == o.num && den == o.den; }
    bool is_integer() const { return den == 1; }
    std::string str() const;
};

// ---- AST ------------------------------------------------------------------

struct IExprNode;
using IExprPtr = std::shared_ptr<const IExprNode>;

/// Integer-valued expression: literal, variable, sum, product or half.
struct IExprNode {
    enum Kind { Lit, Var, Add, Sub, Mul, Neg, Div } kind;
    long long lit = 0;
    std::string var;
    IExprPtr a, b;
    long long divisor = 1; // for Div
};

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
    enum Kind {
        QPow,    // q^(iexpr)
        QBr,     // qb(iexpr)
        OpRef,   // NAME{args...}
        Product, // factors
        Sum,     // signed terms
        DefBr,   // [a,b]_(x[,y])
        StarBr,  // [a,b]_*
    } kind;
    IExprPtr iexpr;               // QPow/QBr
    std::string name;             // OpRef
    std::vector<IExprPtr> args;   // OpRef
    std::vector<ExprPtr> factors; // Product
    std::vector<std::pair<int, ExprPtr>> terms; // Sum: (+1/-1, term)
    ExprPtr lhs, rhs;             // brackets
    IExprPtr x, y;                // DefBr exponents (y may be null = -x)
};

struct Binding {
    std::string var;
    long long lo;
    long long hi;
};

struct Relation {
    ExprPtr lhs;
    ExprPtr rhs;
    std::vector<Binding> bindings;
};

Relation parse_relation(const std::string& text);
std::string pretty_print(const Relation& rel);
bool ast_equal(const Relation& a, const Relation& b);

/// Parse a multi-line suite file body ('#' comments, blank lines ignored).
std::vector<Relation> parse_suite_text(const std::string& text);

// ---- Evaluation -----------------------------------------------------------

/// An operator value: dense graded matrix or graded Laurent-window operator.
struct EvalOp {
    bool is_window = false;
    CMatrix mat;
    std::optional<WindowOp> win;
    bool graded = true;
    int mode = 0;
    int weight2 = 0;
};

inline EvalOp eval_matrix(const GradedOp& g) {
    EvalOp e;
    e.mat = g.mat;
    e.mode = g.mode;
    e.weight2 = g.weight2;
    return e;
}

inline EvalOp eval_window(WindowOp w, int mode, int weight2) {
    EvalOp e;
    e.is_window = true;
    e.win = std::move(w);
    e.mode = mode;
    e.weight2 = weight2;
    return e;
}

struct Registry {
    PhaseExponent q; // scalar q^, qb() and bracket parameter
    std::map<std::string, std::function<EvalOp(const std::vector<Frac>&)>> ops;
    LaurentWindow window{-8, 12}; // used when operators are window-valued
};

struct RelationSuite {
    std::string name;
    std::vector<Relation> relations;
    double tolerance = 1e-12;
};

Report check_suite(const RelationSuite& suite, const Registry& registry);

// ---- Builtin suites -------------------------------------------------------

struct SuiteConfig {
    std::optional<int> N;          // Weyl size for matrix suites
    std::optional<FluxRatio> flux; // flux for lattice suites
    double b = 0.0;                // symmetry-breaking parameter of the general rep
    int k = 2;                     // family index
    int delta2 = 0;                // doubled spin offset
    std::optional<double> tol;     // tolerance override
};

struct SuiteDef {
    std::string name;
    std::string description;
    std::string text;
    std::string mutated_text; // deliberately corrupted twin; must fail
    double tol = 1e-12;
    std::function<Registry(const SuiteConfig&)> make_registry;
};

const std::vector<SuiteDef>& builtin_suites();
const SuiteDef* find_suite(const std::string& name);
Report run_suite(const SuiteDef& def, const SuiteConfig& cfg, bool mutated = false);

} // namespace czlattice
