#include <doctest.h>

#include <random>

#include "nnil/enumeration.hpp"
#include "nnil/formula.hpp"
#include "nnil/parser.hpp"
#include "nnil/prover.hpp"

#include "helpers.hpp"

using namespace nnil;

namespace {
const VarContext ctx3 = VarContext::numbered(3);
Formula P(int i) { return Formula::var(i); }
}  // namespace

TEST_CASE("variable contexts") {
    CHECK(ctx3.size() == 3);
    CHECK(ctx3.name(0) == "p1");
    CHECK(ctx3.index_of("p3") == 2);
    CHECK_FALSE(ctx3.index_of("q").has_value());
    CHECK_THROWS_AS(VarContext({"p", "p"}), Error);
    CHECK_THROWS_AS(ctx3.extended({"p1"}), Error);
    CHECK(ctx3.extended({"q"}).size() == 4);
}

TEST_CASE("parsing") {
    CHECK(parse("p1 -> (p2 & p3)", ctx3) == Formula::impl(P(0), Formula::conj(P(1), P(2))));
    CHECK(parse("~p1", ctx3) == Formula::impl(P(0), Formula::bot()));
    CHECK(parse("false", ctx3) == Formula::bot());
    CHECK(parse("true", ctx3) == Formula::top());
    // right-associative arrows, precedence ~ > & > | > ->
    CHECK(parse("p1 -> p2 -> p3", ctx3) == Formula::impl(P(0), Formula::impl(P(1), P(2))));
    CHECK(parse("p1 & p2 | p3", ctx3) == Formula::disj(Formula::conj(P(0), P(1)), P(2)));
    CHECK(parse("~p1 & p2", ctx3) == Formula::conj(Formula::neg(P(0)), P(1)));

    try {
        parse("p1 & (p2", ctx3);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset == 9);
    }
    CHECK_THROWS_AS(parse("q", ctx3), ParseError);
    CHECK_THROWS_AS(parse("p1 ->", ctx3), ParseError);
    CHECK_THROWS_AS(parse("p1 p2", ctx3), ParseError);
    CHECK_THROWS_AS(parse("", ctx3), ParseError);

    auto [f, auto_ctx] = parse_auto("q & p | q");
    CHECK(auto_ctx.names() == std::vector<std::string>{"q", "p"});
    CHECK(f == Formula::disj(Formula::conj(P(0), P(1)), P(0)));

    VarContext grow;
    const Formula a = parse_extending("p -> q", grow);
    const Formula b = parse_extending("q -> r", grow);
    CHECK(grow.names() == std::vector<std::string>{"p", "q", "r"});
    CHECK(a.rhs() == b.lhs());
}

TEST_CASE("printing") {
    CHECK(Formula::impl(P(0), Formula::impl(P(1), P(2))).to_string(ctx3) == "p1 -> p2 -> p3");
    CHECK(Formula::conj(P(0), Formula::disj(P(1), P(2))).to_string(ctx3) == "p1 & (p2 | p3)");
    CHECK(Formula::bot().to_string(ctx3) == "false");
    CHECK(Formula::top().to_string(ctx3) == "true");
    CHECK(Formula::neg(P(0)).to_string(ctx3) == "~p1");
    CHECK(Formula::neg(Formula::conj(P(0), P(1))).to_string(ctx3) == "~(p1 & p2)");
    CHECK(Formula::impl(Formula::impl(P(0), P(1)), P(2)).to_string(ctx3) == "(p1 -> p2) -> p3");
    CHECK(Formula::disj(Formula::conj(P(0), P(1)), P(2)).to_string(ctx3) == "p1 & p2 | p3");
}

TEST_CASE("print/parse round trip") {
    std::mt19937 rng(12);
    for (int i = 0; i < 200; ++i) {
        const Formula f = random_formula(rng, 3, 5);
        CHECK(parse(f.to_string(ctx3), ctx3) == f);
    }
}

TEST_CASE("NNIL recognition") {
    CHECK(is_nnil(parse("(p1 | p2) -> (p3 -> p1)", ctx3)));
    CHECK_FALSE(is_nnil(parse("(p1 -> false) -> false", ctx3)));
    CHECK(is_nnil(P(0)));
    CHECK(is_nnil(Formula::bot()));
    CHECK_FALSE(is_nnil(Formula::conj(P(0), parse("~~p1", ctx3))));
}

TEST_CASE("NNIL normal form") {
    const Formula nf1 = to_nnil_normal_form(parse("(p1 & p2) -> p3", ctx3));
    CHECK(nf1 == parse("p1 -> (p2 -> p3)", ctx3));
    const Formula nf2 = to_nnil_normal_form(parse("(p1 | p2) -> p3", ctx3));
    CHECK(nf2 == parse("(p1 -> p3) & (p2 -> p3)", ctx3));
    CHECK(to_nnil_normal_form(P(0)) == P(0));
    CHECK(to_nnil_normal_form(parse("false -> p1", ctx3)) == Formula::top());
    CHECK(to_nnil_normal_form(parse("true -> p1", ctx3)) == P(0));
    CHECK_THROWS_AS(to_nnil_normal_form(parse("~~p1", ctx3)), NotNNILError);

    std::mt19937 rng(34);
    int seen = 0;
    while (seen < 60) {
        const Formula f = random_formula(rng, 2, 4);
        if (!is_nnil(f)) continue;
        ++seen;
        const Formula g = to_nnil_normal_form(f);
        CHECK(is_nnil_normal_form(g));
        CHECK(equivalent(f, g));
    }
}

TEST_CASE("normal form agrees semantically on models") {
    std::mt19937 rng(56);
    const auto models = models_up_to_iso(3, 2, true);
    int seen = 0;
    while (seen < 25) {
        const Formula f = random_formula(rng, 2, 4);
        if (!is_nnil(f)) continue;
        ++seen;
        const Formula g = to_nnil_normal_form(f);
        for (const KripkeModel& m : models) CHECK(m.eval(f) == m.eval(g));
    }
}

TEST_CASE("folds and metrics") {
    CHECK(Formula::conj_all({}) == Formula::top());
    CHECK(Formula::disj_all({}) == Formula::bot());
    CHECK(Formula::conj_all({P(0)}) == P(0));
    CHECK(Formula::disj_all({P(0), P(1), P(2)}) ==
          Formula::disj(Formula::disj(P(0), P(1)), P(2)));
    const Formula f = parse("(p1 -> p2) -> p3", ctx3);
    CHECK(f.min_vars() == 3);
    CHECK(P(2).min_vars() == 3);
    CHECK(Formula::bot().min_vars() == 0);
    CHECK(f.depth() == 3);
    CHECK(f.size() == 5);
    CHECK(f.subformulas().size() == 5);
    // structurally shared subterms are deduplicated
    CHECK(Formula::conj(P(0), P(0)).subformulas().size() == 2);
}
