#include <doctest.h>

#include <algorithm>
#include <random>

#include "nnil/enumeration.hpp"
#include "nnil/kripke.hpp"
#include "nnil/model_io.hpp"
#include "nnil/parser.hpp"

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

TEST_CASE("frame construction and validation") {
    const KripkeFrame fr({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    CHECK(fr.rel(fr.index("a"), fr.index("c")));  // closure
    CHECK(fr.covers(fr.index("a")) == std::vector<int>{fr.index("b")});
    CHECK(fr.root() == fr.index("a"));
    CHECK(fr.is_tree_order());

    CHECK_THROWS_AS(KripkeFrame({"a", "b"}, {{"a", "b"}, {"b", "a"}}), ModelError);
    CHECK_THROWS_AS(KripkeFrame({"a"}, {{"a", "zz"}}), UnknownWorldError);
    CHECK_THROWS_AS(KripkeFrame({"a", "a"}, {}), ModelError);

    const KripkeFrame two({"a", "b"}, {{"a", "b"}});
    CHECK(two.upset_masks() == std::vector<std::uint32_t>{0b00, 0b10, 0b11});
    const KripkeFrame anti({"a", "b"}, {});
    CHECK_FALSE(anti.root().has_value());
    CHECK_FALSE(anti.is_tree_order());
}

TEST_CASE("colors and persistence") {
    const KripkeModel m = chain({"00", "11"});
    CHECK(m.color("w1") == col("00"));
    CHECK(m.color("w2") == col("11"));
    CHECK(m.color("w2").to_string() == "11");
    CHECK(col("10").test(0));
    CHECK_FALSE(col("10").test(1));
    CHECK(col("00").leq(col("10")));
    CHECK(col("00").lt(col("10")));
    CHECK_FALSE(col("10").leq(col("01")));

    // non-persistent valuation is rejected
    std::vector<Bitset> bad(1, Bitset(2));
    bad[0].set(0);
    CHECK_THROWS_AS(KripkeModel(KripkeFrame({"a", "b"}, {{"a", "b"}}), VarContext::numbered(1),
                                std::move(bad)),
                    ModelError);
}

TEST_CASE("forcing") {
    CHECK(single("10").force("w1", parse("p1", ctx2)));
    const KripkeModel m = chain({"00", "11"});
    CHECK_FALSE(m.force("w1", parse("p1", ctx2)));
    CHECK(m.force("w1", parse("p1 -> p2", ctx2)));
    CHECK(m.force("w1", parse("true", ctx2)));
    CHECK_FALSE(m.force("w1", parse("false", ctx2)));
    CHECK_FALSE(m.force("w1", parse("p1 | ~p1", ctx2)));
    CHECK(m.force("w2", parse("p1 | ~p1", ctx2)));
    CHECK(m.models(parse("p2 -> p1", ctx2)));
    CHECK_THROWS_AS(m.force("nope", parse("p1", ctx2)), UnknownWorldError);
    CHECK_THROWS_AS(m.force("w1", Formula::var(7)), Error);
}

TEST_CASE("forcing is persistent") {
    std::mt19937 rng(7);
    for (const KripkeModel& m : models_up_to_iso(3, 2, false))
        for (int i = 0; i < 5; ++i) {
            const Formula f = random_formula(rng, 2, 4);
            const Bitset v = m.eval(f);
            for (int w = 0; w < m.size(); ++w)
                if (v.test(w)) CHECK(m.frame().above(w).subset_of(v));
        }
}

TEST_CASE("generated submodels") {
    const KripkeModel d = diamond("00", "01", "10", "11");
    const KripkeModel at_top = d.generated_submodel("t");
    CHECK(at_top.size() == 1);
    const KripkeModel at_mid = d.generated_submodel("a");
    CHECK(at_mid.size() == 2);
    CHECK(at_mid.frame().is_tree_order());
    CHECK(d.generated_submodel("r") == d);
    for (const char* txt : {"p1", "p1 -> p2", "p1 | p2", "~p1"}) {
        const Formula f = parse(txt, ctx2);
        CHECK(at_mid.force("a", f) == d.force("a", f));
    }
}

TEST_CASE("unraveling") {
    CHECK(unravel(single("10")).size() == 1);
    const KripkeModel d = diamond("00", "01", "10", "11");
    const Tree t = unravel(d);
    CHECK(t.size() == 5);  // top is duplicated under each middle
    CHECK(t.model().color(t.root()) == col("00"));

    const KripkeModel c = chain({"00", "01", "11"});
    CHECK(unravel(c).code() == Tree(c).code());

    CHECK_THROWS_AS(unravel(mk(R"({"vars":[],"worlds":["a","b"],"order":[]})")), ModelError);

    const NodeMap nat = natural_map(d);
    CHECK(is_pmorphism(nat, unravel(d).model(), d));
    CHECK(nat.at("r") == "r");
    // the natural map is surjective
    std::vector<WorldId> image;
    for (const auto& [w, v] : nat) image.push_back(v);
    for (const WorldId& w : d.frame().worlds())
        CHECK(std::find(image.begin(), image.end(), w) != image.end());
}

TEST_CASE("unravel preserves the root theory") {
    std::mt19937 rng(8);
    for (const KripkeModel& m : models_up_to_iso(3, 2, true)) {
        const Tree t = unravel(m);
        const WorldId root = *m.root_id();
        for (int i = 0; i < 4; ++i) {
            const Formula f = random_formula(rng, 2, 4);
            CHECK(t.model().force(t.root(), f) == m.force(root, f));
        }
    }
}

TEST_CASE("p-morphism checks") {
    const KripkeModel c = chain({"00", "11"});
    NodeMap id{{"w1", "w1"}, {"w2", "w2"}};
    CHECK(is_pmorphism(id, c, c));
    NodeMap collapse{{"w1", "w1"}, {"w2", "w1"}};
    CHECK_FALSE(is_pmorphism(collapse, c, single("00")));
    // monotone but not forth: map a single 00 to the root of the chain
    NodeMap embed{{"w1", "w1"}};
    CHECK_FALSE(is_pmorphism(embed, single("00"), c));
}

TEST_CASE("trees") {
    CHECK_THROWS_AS(Tree(diamond("00", "01", "10", "11")), ModelError);
    const Tree s1 = Tree::single(col("01"), ctx2);
    const Tree s2 = Tree::single(col("10"), ctx2);
    const Tree g = Tree::graft(col("00"), {s1, s2}, ctx2);
    CHECK(g.size() == 3);
    CHECK(g.color(g.root()) == col("00"));
    CHECK(g.children(g.root()).size() == 2);
    CHECK(Tree::graft(col("00"), {s2, s1}, ctx2) == g);  // children order canonical
    CHECK(g.subtree(g.children(g.root())[0]).size() == 1);
    CHECK(g.depth() == 2);
    // grafting a root that is not below a child color is rejected
    CHECK_THROWS_AS(Tree::graft(col("11"), {s1}, ctx2), ModelError);
}

TEST_CASE("model JSON round trip") {
    const std::string example =
        R"({"vars": ["p1","p2"], "worlds": ["a","b"], "order": [["a","b"]], "val": {"p1": ["b"], "p2": ["b"]}})";
    const KripkeModel m = mk(example);
    CHECK(m.size() == 2);
    CHECK(m.color("a") == col("00"));
    CHECK(m.color("b") == col("11"));
    CHECK(read_model(write_model(m)) == m);

    // variables missing from val are false everywhere
    const KripkeModel m2 = mk(R"({"vars":["p1"],"worlds":["a"],"order":[]})");
    CHECK(m2.color("a") == col("0"));

    const KripkeFrame fr = read_frame(R"({"worlds":["a","b"],"order":[["a","b"]]})");
    CHECK(fr.size() == 2);
    CHECK(read_frame(write_frame(fr)).rel(0, 1));

    CHECK_THROWS_AS(mk("not json"), ModelError);
    // no "vars" reads as a zero-variable model
    CHECK(mk(R"({"worlds":["a"]})").ctx().size() == 0);
    CHECK_THROWS_AS(mk(R"({"worlds":[]})"), ModelError);
    CHECK_THROWS_AS(mk(R"({"vars":["p1"],"worlds":["a"],"order":[],"val":{"p1":["zz"]}})"),
                    ModelError);

    const NodeMap w{{"a", "x"}, {"b", "y"}};
    CHECK(read_witness(write_witness(w)) == w);
}

TEST_CASE("DOT output") {
    const std::string dot = dot_model(chain({"00", "11"}));
    CHECK(dot.find("w1:00") != std::string::npos);
    CHECK(dot.find("w2:11") != std::string::npos);
    CHECK(dot.find("->") != std::string::npos);
}
