#include <doctest.h>

#include "nnil/beta.hpp"
#include "nnil/enumeration.hpp"
#include "nnil/morphisms.hpp"
#include "nnil/parser.hpp"
#include "nnil/prover.hpp"
#include "nnil/universal.hpp"

#include "helpers.hpp"

using namespace nnil;
using nnil::test::chain;
using nnil::test::col;
using nnil::test::diamond;
using nnil::test::mk;
using nnil::test::single;

namespace {
const VarContext ctx2 = VarContext::numbered(2);
}

TEST_CASE("beta synthesis") {
    CHECK(beta_model(single("10")) == parse("p1 -> p2", ctx2));
    CHECK(beta_model(single("11")) == parse("(p1 & p2) -> false", ctx2));
    CHECK(beta_model(single("00")) == parse("true -> (p1 | p2)", ctx2));
    CHECK(beta_model(chain({"00", "11"})) ==
          parse("true -> (p1 | p2 | ((p1 & p2) -> false))", ctx2));
    CHECK(beta_model(single("00"), true) == parse("p1 | p2", ctx2));

    const KripkeModel d = diamond("00", "01", "10", "11");
    CHECK(beta_node(d, "t") == parse("(p1 & p2) -> false", ctx2));
    CHECK(beta_node(d, "a") == parse("p2 -> (p1 | ((p1 & p2) -> false))", ctx2));
    CHECK(is_nnil(beta_model(d)));

    // isomorphic sibling subtrees contribute one disjunct
    const KripkeModel twin = mk(
        R"({"vars":["p1","p2"],"worlds":["r","x","y"],"order":[["r","x"],["r","y"]],
            "val":{"p1":["x","y"],"p2":["x","y"]}})");
    CHECK(beta_model(twin) == beta_model(chain({"00", "11"})));

    CHECK_THROWS_AS(beta_node(d, "zz"), UnknownWorldError);
    CHECK_THROWS_AS(beta_model(mk(R"({"vars":[],"worlds":["a","b"],"order":[]})")), ModelError);
}

TEST_CASE("beta is refuted at its own world") {
    const KripkeModel d = diamond("00", "01", "10", "11");
    for (const WorldId& w : d.frame().worlds()) CHECK_FALSE(d.force(w, beta_node(d, w)));
}

TEST_CASE("refutation witnesses") {
    const KripkeModel n = chain({"00", "10", "11"});
    const auto self = refutation_witness(n, n);
    REQUIRE(self.has_value());
    CHECK(is_monotonic(*self, unravel(n).model(), n));
    CHECK_FALSE(n.models(beta_model(n)));

    CHECK_FALSE(refutation_witness(n, single("00")).has_value());
    CHECK(single("00").models(beta_model(n)));

    CHECK(refutation_witness(single("11"), diamond("00", "01", "10", "11")).has_value());
}

TEST_CASE("frame refutation with synthesized valuation") {
    const KripkeModel n = chain({"00", "11"});
    const auto own = frame_refutes(n, n.frame());
    REQUIRE(own.has_value());

    const KripkeFrame point({"x"}, {});
    CHECK_FALSE(frame_refutes(n, point).has_value());
    // exhaustively: every valuation on the point validates beta(n)
    bool all_valid = true;
    for_each_model(point, 2, [&](const KripkeModel& m) {
        if (!m.models(beta_model(n))) all_valid = false;
        return true;
    });
    CHECK(all_valid);

    const KripkeFrame two({"a", "b"}, {{"a", "b"}});
    const auto wit = frame_refutes(n, two);
    REQUIRE(wit.has_value());
    CHECK(wit->second.color("b") == col("11"));
    CHECK_FALSE(wit->second.models(beta_model(n)));
    CHECK(is_monotonic(wit->first, unravel(n).model(), wit->second));
}

TEST_CASE("upset formulas on the universal model") {
    const UniversalModel un = generate(1);
    CHECK(beta_plus_node(un, un.root()) == Formula::top());
    // a maximal node's formula holds exactly on its upset
    const KripkeModel& m = un.as_model();
    for (int i = 0; i < un.count(); ++i) {
        const Bitset v = m.eval(beta_plus_node(un, i));
        for (int j = 0; j < un.count(); ++j)
            CHECK(v.test(m.frame().index("t" + std::to_string(j))) == un.leq(i, j));
    }

    Bitset full(un.count()), empty(un.count());
    full.set_all();
    CHECK(beta_plus_upset(un, full) == Formula::top());
    CHECK(m.eval(beta_plus_upset(un, empty)).count() == 0);

    Bitset notup(un.count());
    notup.set(un.root());  // the root alone is not an upset
    CHECK_THROWS_AS(beta_plus_upset(un, notup), ModelError);
    CHECK_THROWS_AS(beta_plus_node(un, Tree::single(col("00"), VarContext::numbered(2))),
                    ModelError);
    CHECK(beta_plus_node(un, un.node(un.root())) == Formula::top());
}

TEST_CASE("NNIL equivalence of pointed models") {
    const KripkeModel c = chain({"00", "11"});
    CHECK(nnil_equivalent(c, "w1", c, "w1"));
    CHECK(nnil_equivalent(single("10"), "w1", single("10"), "w1"));
    CHECK_FALSE(nnil_equivalent(single("10"), "w1", single("01"), "w1"));
    CHECK(nnil_equivalent(c, "w1", chain({"00", "11", "11"}), "w1"));
    CHECK(nnil_equivalent(c, "w2", single("11"), "w1"));
    CHECK_THROWS_AS(nnil_equivalent(c, "w1", single("0"), "w1"), ModelError);
    CHECK_THROWS_AS(nnil_equivalent(c, "zz", c, "w1"), UnknownWorldError);
}

TEST_CASE("NNIL expressibility") {
    const auto g = is_nnil_expressible(parse("p1 -> p2", ctx2), 2);
    REQUIRE(g.has_value());
    CHECK(equivalent(*g, parse("p1 -> p2", ctx2)));

    CHECK_FALSE(is_nnil_expressible(parse("~~p1", ctx2), 2).has_value());
    CHECK(is_nnil_expressible(Formula::top(), 1) == Formula::top());
    CHECK(is_nnil_expressible(parse("~~p1", VarContext::numbered(1)), 1) == std::nullopt);

    CHECK_THROWS_AS(is_nnil_expressible(parse("p1", ctx2), 3), ResourceLimitError);
    CHECK_THROWS_AS(is_nnil_expressible(parse("p1 & p2", ctx2), 1), Error);
}
