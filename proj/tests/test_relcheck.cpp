#include "doctest.h"

#include <random>
#include <string>

#include "czlattice/relcheck.hpp"

using namespace czlattice;

TEST_CASE("builtin suite listing is substantial and well-formed") {
    const auto& suites = builtin_suites();
    CHECK(suites.size() >= 25);
    for (const auto& s : suites) {
        CHECK(!s.name.empty());
        CHECK(!s.description.empty());
        CHECK(!parse_suite_text(s.text).empty());
        CHECK(!parse_suite_text(s.mutated_text).empty());
        CHECK(find_suite(s.name) == &s);
    }
    CHECK(find_suite("no-such-suite") == nullptr);
}

TEST_CASE("every builtin suite passes at its default configuration") {
    SuiteConfig cfg;
    for (const auto& s : builtin_suites()) {
        Report rep = run_suite(s, cfg);
        INFO(s.name);
        for (const auto& c : rep.checks) {
            INFO(c.name << " residual " << c.residual << " " << c.note);
            CHECK(c.pass);
        }
    }
}

TEST_CASE("every mutated twin fails") {
    SuiteConfig cfg;
    for (const auto& s : builtin_suites()) {
        Report rep = run_suite(s, cfg, true);
        INFO(s.name);
        CHECK(!rep.all_pass());
    }
}

TEST_CASE("symmetry-breaking parameter spoils the mixing relations only") {
    SuiteConfig cfg;
    cfg.b = 1.0;
    for (const char* name : {"cross-sign-mixing", "pre-transform-mixing"}) {
        Report rep = run_suite(*find_suite(name), cfg);
        CHECK(!rep.all_pass());
        double worst = 0.0;
        for (const auto& c : rep.checks) worst = std::max(worst, c.residual);
        CHECK(worst > 1e-3);
    }
    // one-sign closures hold for every parameter choice
    for (const char* name : {"cyclic-plus-closure", "cyclic-minus-closure"})
        CHECK(run_suite(*find_suite(name), cfg).all_pass());
}

TEST_CASE("round-trip parse/print on all builtin relations") {
    for (const auto& s : builtin_suites()) {
        for (const std::string* text : {&s.text, &s.mutated_text}) {
            std::vector<Relation> rels = parse_suite_text(*text);
            for (const Relation& r : rels) {
                std::string printed = pretty_print(r);
                Relation again = parse_relation(printed);
                INFO(printed);
                CHECK(ast_equal(r, again));
                CHECK(pretty_print(again) == printed); // printing is a fixed point
            }
        }
    }
}

namespace {

// Random grammar-conformant relation strings.
struct Fuzzer {
    std::mt19937 rng{20260824};

    int pick(int n) { return (int)(rng() % (unsigned)n); }

    std::string iexpr(int depth) {
        switch (depth <= 0 ? pick(2) : pick(7)) {
            case 0: return std::to_string(pick(10));
            case 1: return std::string(1, "nmk"[pick(3)]);
            case 2: return iexpr(depth - 1) + "+" + iexpr(depth - 1);
            case 3: return iexpr(depth - 1) + "-" + iexpr(depth - 1);
            case 4: return iexpr(depth - 1) + "*" + iexpr(depth - 1);
            case 5: return "-" + iexpr(depth - 1);
            default: return "(" + iexpr(depth - 1) + ")/" + (pick(2) ? "2" : "4");
        }
    }

    std::string factor(int depth) {
        switch (depth <= 0 ? pick(3) : pick(5)) {
            case 0: return "q^(" + iexpr(1) + ")";
            case 1: return "qb(" + iexpr(1) + ")";
            case 2: {
                std::string name(1, (char)('A' + pick(26)));
                std::string args = "{" + iexpr(1);
                if (pick(2)) args += "," + iexpr(1);
                return name + args + "}";
            }
            case 3: {
                std::string br = "[" + expr(depth - 1) + "," + expr(depth - 1) + "]";
                switch (pick(3)) {
                    case 0: return br + "_*";
                    case 1: return br + "_(" + iexpr(1) + ")";
                    default: return br + "_(" + iexpr(1) + "," + iexpr(1) + ")";
                }
            }
            default: return "(" + expr(depth - 1) + ")";
        }
    }

    std::string term(int depth) {
        std::string s = factor(depth);
        int extra = pick(3);
        for (int i = 0; i < extra; ++i) s += "*" + factor(depth - 1);
        return s;
    }

    std::string expr(int depth) {
        std::string s = term(depth);
        int extra = pick(3);
        for (int i = 0; i < extra; ++i) s += (pick(2) ? "+" : "-") + term(depth - 1);
        return s;
    }

    std::string relation() {
        std::string s = expr(2) + " == " + expr(2);
        if (pick(2)) {
            s += " for n in -2..2";
            if (pick(2)) s += ", m in 0..3";
        }
        return s;
    }
};

} // namespace

TEST_CASE("fuzz: 10^4 grammar-conformant strings parse and round-trip") {
    Fuzzer fz;
    for (int i = 0; i < 10000; ++i) {
        std::string s = fz.relation();
        Relation r = parse_relation(s); // must not throw or crash
        Relation again = parse_relation(pretty_print(r));
        INFO(s);
        CHECK(ast_equal(r, again));
    }
}

TEST_CASE("parse errors carry positions; bad inputs never crash") {
    try {
        parse_suite_text("q^(1) == q^(1)\nq^(1) == @");
        CHECK(false);
    } catch (const SyntaxError& e) {
        CHECK(e.line == 2);
    }
    CHECK_THROWS_AS((void)parse_relation(""), SyntaxError);
    CHECK_THROWS_AS((void)parse_relation("q^(1)"), SyntaxError);
    CHECK_THROWS_AS((void)parse_relation("[A{1},B{1}]_ == q^(0)"), SyntaxError);
    CHECK_THROWS_AS((void)parse_relation("A{1} == B{1} for n in 3..1"), SyntaxError);
}

TEST_CASE("evaluation failures are reported per binding, not fatal") {
    WeylRing wr(5);
    Registry reg{wr.q(), {}, LaurentWindow(-8, 12)};
    RelationSuite suite;
    suite.name = "unknown-name";
    suite.relations = parse_suite_text("Foo{1} == Foo{1}");
    Report rep = check_suite(suite, reg);
    REQUIRE(rep.checks.size() == 1);
    CHECK(!rep.checks[0].pass);
    CHECK(!rep.checks[0].note.empty());
}

TEST_CASE("pure scalar relations evaluate exactly") {
    WeylRing wr(7);
    Registry reg{wr.q(), {}, LaurentWindow(-8, 12)};
    RelationSuite suite;
    suite.name = "scalar";
    suite.relations = parse_suite_text(
        "q^(2)*q^(-2) == q^(0)\nqb(2) == q^(1)+q^(-1)\nqb(n)*qb(0) == qb(0) for n in -3..3");
    Report rep = check_suite(suite, reg);
    CHECK(rep.all_pass());
}
