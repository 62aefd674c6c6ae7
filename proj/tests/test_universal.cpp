#include <doctest.h>

#include <random>

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

namespace {
const VarContext ctx2 = VarContext::numbered(2);
}

TEST_CASE("one-variable universal model") {
    const UniversalModel un = generate(1);
    CHECK(un.count() == 3);
    CHECK(un.layer_sizes() == std::vector<int>{2, 1});
    CHECK(un.node(un.root()) == Tree(chain({"0", "1"})));
    CHECK(un.node(un.root()) == universal_tree(1));
    // the two singles are incomparable, the chain lies below both
    for (int i = 0; i < 3; ++i) CHECK(un.leq(un.root(), i));
    int singles = 0;
    for (int i = 0; i < 3; ++i)
        if (un.node(i).size() == 1) ++singles;
    CHECK(singles == 2);
}

TEST_CASE("two-variable universal model") {
    const UniversalModel un = generate(2);
    CHECK(un.count() == 18);
    CHECK(un.layer_sizes() == std::vector<int>{4, 9, 5});
    CHECK(un.node(un.root()) == universal_tree(2));

    for (int i = 0; i < un.count(); ++i) {
        // layer index = tree depth; chains of each tree strictly increase
        CHECK(un.layer_of(i) == un.node(i).depth());
        CHECK(un.node(i).depth() <= 3);
        CHECK(un.find(un.node(i)) == i);
    }
    // <= is a partial order with persistent colors, least element the root
    for (int i = 0; i < un.count(); ++i) {
        CHECK(un.leq(i, i));
        CHECK(un.leq(un.root(), i));
        for (int j = 0; j < un.count(); ++j) {
            if (i != j) CHECK_FALSE((un.leq(i, j) && un.leq(j, i)));
            if (un.leq(i, j)) {
                const Color ci = un.node(i).color(un.node(i).root());
                const Color cj = un.node(j).color(un.node(j).root());
                CHECK(ci.leq(cj));
            }
            for (int k = 0; k < un.count(); ++k)
                if (un.leq(i, j) && un.leq(j, k)) CHECK(un.leq(i, k));
        }
    }
    // no two distinct nodes are equivalent
    for (int i = 0; i < un.count(); ++i)
        for (int j = i + 1; j < un.count(); ++j)
            CHECK_FALSE(equiv(un.node(i).model(), un.node(j).model()));

    // as_model world ti carries node i's root color
    const KripkeModel& m = un.as_model();
    for (int i = 0; i < un.count(); ++i)
        CHECK(m.color("t" + std::to_string(i)) == un.node(i).color(un.node(i).root()));

    CHECK(un.find("(nope)") == -1);
    CHECK_THROWS_AS(generate(0), Error);
    GenerationLimits tiny;
    tiny.max_nodes = 5;
    CHECK_THROWS_AS(generate(2, tiny), ResourceLimitError);
}

TEST_CASE("universal tree") {
    CHECK(universal_tree(1) == Tree(chain({"0", "1"})));
    const Tree t0 = universal_tree(2);
    CHECK(t0.size() == 5);
    CHECK(t0.color(t0.root()) == col("00"));
    const Tree expect = Tree::graft(
        col("00"), {Tree(chain({"01", "11"})), Tree(chain({"10", "11"}))}, ctx2);
    CHECK(t0 == expect);
}

TEST_CASE("canonical trees") {
    const Tree s = Tree::single(col("10"), ctx2);
    CHECK(canonical_tree(s) == s);
    CHECK(canonical_tree(Tree(chain({"00", "00", "11"}))) == Tree(chain({"00", "11"})));
    const Tree absorbed = Tree::graft(
        col("00"), {Tree(chain({"01", "11"})), Tree::single(col("11"), ctx2)}, ctx2);
    CHECK(canonical_tree(absorbed) == Tree(chain({"00", "01", "11"})));
}

TEST_CASE("canonical reduction uniqueness") {
    const UniversalModel un = generate(2);
    std::mt19937 rng(2718);
    std::vector<Tree> sample;
    for (int i = 0; i < 40; ++i) sample.push_back(random_tree(rng, 8, 2));
    std::vector<Tree> reduced;
    for (const Tree& t : sample) {
        const Tree c = canonical_tree(t);
        CHECK(un.find(c) >= 0);
        CHECK(equiv(t.model(), c.model()));
        reduced.push_back(c);
    }
    // two trees share a canonical form iff they are equivalent
    for (std::size_t i = 0; i < sample.size(); ++i)
        for (std::size_t j = i + 1; j < sample.size(); ++j)
            CHECK((reduced[i] == reduced[j]) ==
                  equiv(sample[i].model(), sample[j].model()));
}

TEST_CASE("theories") {
    const UniversalModel un = generate(1);
    // the root carries the least theory; inclusion mirrors <=
    for (int i = 0; i < un.count(); ++i) {
        CHECK(un.theory(un.root()).subset_of(un.theory(i)));
        for (int j = 0; j < un.count(); ++j)
            CHECK(un.theory(i).subset_of(un.theory(j)) == un.leq(i, j));
    }
}

TEST_CASE("class counts") {
    CHECK(count_nnil_classes(1) == 5);
    const long long two = count_nnil_classes(2);
    CHECK(two >= 2);
    // independent recount through the upset masks of the 18-world frame
    CHECK(two == static_cast<long long>(generate(2).as_model().frame().upset_masks().size()));
    CHECK_THROWS_AS(count_nnil_classes(3), Error);
}

TEST_CASE("theory map is an order isomorphism for one variable") {
    CHECK(check_canonical_iso(1));
}

TEST_CASE("pointed tree forcing matches universal model forcing") {
    const UniversalModel un = generate(2);
    const KripkeModel& m = un.as_model();
    std::vector<Formula> sample;
    for (int v = 0; v < un.count(); ++v) sample.push_back(beta_model(un.node(v).model()));
    for (int v = 0; v < un.count(); ++v) sample.push_back(beta_plus_node(un, v));
    for (const char* txt : {"p1", "p2", "p1 & p2", "p1 | p2", "p1 -> p2", "p2 -> p1",
                            "p1 -> (p2 | (p1 & p2))", "true", "false"})
        sample.push_back(parse(txt, ctx2));
    for (int i = 0; i < un.count(); ++i) {
        const Tree& t = un.node(i);
        const WorldId w = "t" + std::to_string(i);
        for (const Formula& f : sample)
            CHECK(t.model().force(t.root(), f) == m.force(w, f));
    }
}

TEST_CASE("unprovable implications between upset formulas are refuted on nodes") {
    const UniversalModel un = generate(1);
    for (int i = 0; i < un.count(); ++i)
        for (int j = 0; j < un.count(); ++j) {
            const Formula a = beta_plus_node(un, i), b = beta_plus_node(un, j);
            bool refuted = false;
            for (int v = 0; v < un.count(); ++v) {
                const KripkeModel& m = un.as_model();
                const WorldId w = "t" + std::to_string(v);
                if (m.force(w, a) && !m.force(w, b)) refuted = true;
            }
            CHECK(proves({}, Formula::impl(a, b)) == !refuted);
        }
}
