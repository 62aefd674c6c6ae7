#include <doctest.h>

#include <random>
#include <set>

#include "nnil/enumeration.hpp"

#include "helpers.hpp"

using namespace nnil;
using nnil::test::chain;
using nnil::test::mk;

TEST_CASE("poset counts up to isomorphism") {
    CHECK(frames_up_to_iso(1, false).size() == 1);
    CHECK(frames_up_to_iso(2, false).size() == 3);
    CHECK(frames_up_to_iso(3, false).size() == 8);
    const auto all4 = frames_up_to_iso(4, false);
    CHECK(all4.size() == 24);
    int four = 0;
    for (const auto& fr : all4)
        if (fr.size() == 4) ++four;
    CHECK(four == 16);

    CHECK(frames_up_to_iso(4, true).size() == 9);
    const auto rooted5 = frames_up_to_iso(5, true);
    CHECK(rooted5.size() == 25);
    for (const auto& fr : rooted5) CHECK(fr.root().has_value());

    CHECK_THROWS_AS(frames_up_to_iso(6, false), ResourceLimitError);
}

TEST_CASE("valuation enumeration") {
    const KripkeFrame two = chain({"0", "1"}).frame();
    int count = 0;
    for_each_model(two, 1, [&](const KripkeModel& m) {
        CHECK(m.size() == 2);
        ++count;
        return true;
    });
    CHECK(count == 3);

    int stopped = 0;
    for_each_model(two, 1, [&](const KripkeModel&) {
        ++stopped;
        return false;
    });
    CHECK(stopped == 1);

    int pairs = 0;
    for_each_model(two, 2, [&](const KripkeModel&) {
        ++pairs;
        return true;
    });
    CHECK(pairs == 9);
}

TEST_CASE("canonical model codes") {
    const KripkeModel a = chain({"01", "11"});
    const KripkeModel b = mk(R"({
        "worlds": ["top", "bottom"],
        "order": [["bottom", "top"]],
        "val": {"p1": ["top"], "p2": ["bottom", "top"]},
        "vars": ["p1", "p2"]
    })");
    CHECK(model_canonical_code(a) == model_canonical_code(b));
    CHECK(model_canonical_code(a) != model_canonical_code(chain({"01", "01"})));
    CHECK(model_canonical_code(a) != model_canonical_code(chain({"10", "11"})));
}

TEST_CASE("model corpus up to isomorphism") {
    CHECK(models_up_to_iso(2, 1, false).size() == 8);
    std::set<std::string> codes;
    for (const KripkeModel& m : models_up_to_iso(3, 2, true)) {
        CHECK(m.frame().root().has_value());
        CHECK(codes.insert(model_canonical_code(m)).second);
    }
}

TEST_CASE("seeded generators") {
    std::mt19937 r1(99), r2(99);
    for (int i = 0; i < 30; ++i) {
        const Tree t1 = random_tree(r1, 8, 2);
        const Tree t2 = random_tree(r2, 8, 2);
        CHECK(t1 == t2);
        CHECK(t1.size() <= 8);
        CHECK(t1.model().ctx().size() == 2);
    }
    for (int i = 0; i < 30; ++i) {
        const KripkeModel m = random_rooted_model(r1, 9, 2);
        CHECK(m.size() <= 9);
        CHECK(m.frame().root().has_value());
        const Formula f = random_formula(r1, 3, 4);
        CHECK(f.min_vars() <= 3);
        CHECK(f.depth() <= 4);
    }
}
