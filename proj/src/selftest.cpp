#include "nnil/selftest.hpp"

#include <chrono>
#include <exception>
#include <functional>
#include <random>
#include <sstream>

#include "nnil/beta.hpp"
#include "nnil/enumeration.hpp"
#include "nnil/fmp.hpp"
#include "nnil/morphisms.hpp"
#include "nnil/parser.hpp"
#include "nnil/prover.hpp"
#include "nnil/universal.hpp"

namespace nnil {

namespace {

struct Runner {
    std::vector<CriterionResult> out;

    void run(int id, const std::string& name,
             const std::function<std::pair<bool, std::string>()>& body) {
        const auto t0 = std::chrono::steady_clock::now();
        bool pass = false;
        std::string detail;
        try {
            std::tie(pass, detail) = body();
        } catch (const std::exception& e) {
            pass = false;
            detail = std::string("exception: ") + e.what();
        }
        const auto t1 = std::chrono::steady_clock::now();
        const double secs = std::chrono::duration<double>(t1 - t0).count();
        out.push_back({id, name, pass, detail, secs});
    }
};

std::string plural(std::size_t k, const char* what) {
    return std::to_string(k) + " " + what;
}

// the whole model forces f
bool validates(const KripkeModel& m, const Formula& f) { return m.eval(f).count() == m.size(); }

std::pair<bool, std::string> universal_two_structure() {
    UniversalModel un = generate(2);
    const std::vector<int> want{4, 9, 5};
    bool ok = un.count() == 18 && un.layer_sizes() == want;
    const Tree t0 = universal_tree(2);
    ok = ok && un.node(un.root()) == t0;
    // the root lies below every node
    for (int i = 0; ok && i < un.count(); ++i) ok = un.leq(un.root(), i);
    std::ostringstream d;
    d << "nodes=" << un.count() << " layers=";
    const auto ls = un.layer_sizes();
    for (std::size_t i = 0; i < ls.size(); ++i) d << (i ? "/" : "") << ls[i];
    d << " root_tree_nodes=" << t0.size();
    return {ok, d.str()};
}

std::pair<bool, std::string> universal_one_classes() {
    UniversalModel un = generate(1);
    const long long classes = count_nnil_classes(1);
    const bool ok = un.count() == 3 && classes == 5;
    return {ok, "nodes=" + std::to_string(un.count()) + " classes=" + std::to_string(classes)};
}

std::pair<bool, std::string> refutation_oracle() {
    const auto sources = models_up_to_iso(3, 2, true);
    const auto targets = models_up_to_iso(3, 2, false);
    std::size_t pairs = 0, mismatches = 0;
    for (const KripkeModel& n : sources) {
        const Formula b = beta_model(n);
        const Tree unr = unravel(n);
        for (const KripkeModel& m : targets) {
            ++pairs;
            const auto wit = refutation_witness(n, m);
            const bool refuted = m.eval(b).count() < m.size();
            if (wit.has_value() != refuted) ++mismatches;
            if (wit && !is_monotonic(*wit, unr.model(), m)) ++mismatches;
        }
    }
    std::ostringstream d;
    d << sources.size() << " sources x " << targets.size() << " targets = " << pairs
      << " pairs, mismatches=" << mismatches;
    return {mismatches == 0, d.str()};
}

std::pair<bool, std::string> beta_refuted_at_own_world() {
    std::size_t worlds = 0, exceptions = 0;
    for (const KripkeModel& m : models_up_to_iso(4, 2, false))
        for (const WorldId& w : m.frame().worlds()) {
            ++worlds;
            if (m.force(w, beta_node(m, w))) ++exceptions;
        }
    return {exceptions == 0,
            plural(worlds, "worlds checked") + ", exceptions=" + std::to_string(exceptions)};
}

std::pair<bool, std::string> universal_self_maps() {
    UniversalModel un = generate(2);
    std::size_t bad = 0;
    for (int i = 0; i < un.count(); ++i) {
        const KripkeModel& m = un.node(i).model();
        std::size_t maps = 0;
        bool identity = true;
        for_each_monotonic(m, m, [&](const NodeMap& f) {
            ++maps;
            for (const auto& [w, v] : f)
                if (w != v) identity = false;
            return true;
        });
        if (maps != 1 || !identity) ++bad;
    }
    return {bad == 0, "18 nodes, non-rigid=" + std::to_string(bad)};
}

std::pair<bool, std::string> upset_defining_formulas() {
    UniversalModel un = generate(2);
    const KripkeModel& m = un.as_model();
    std::vector<int> widx(static_cast<std::size_t>(un.count()));
    for (int i = 0; i < un.count(); ++i)
        widx[static_cast<std::size_t>(i)] = m.frame().index("t" + std::to_string(i));
    auto value_set_is = [&](const Formula& f, const Bitset& expect) {
        const Bitset got = m.eval(f);
        for (int i = 0; i < un.count(); ++i)
            if (got.test(widx[static_cast<std::size_t>(i)]) != expect.test(i)) return false;
        return true;
    };
    std::size_t bad = 0;
    for (int i = 0; i < un.count(); ++i)
        if (!value_set_is(beta_plus_node(un, i), un.upset(i))) ++bad;
    std::mt19937 rng(606);
    for (int s = 0; s < 20; ++s) {
        Bitset u(un.count());
        for (int i = 0; i < un.count(); ++i)
            if (rng() % 3 == 0) u |= un.upset(i);
        if (!value_set_is(beta_plus_upset(un, u), u)) ++bad;
    }
    return {bad == 0, "18 point upsets + 20 sampled upsets, failures=" + std::to_string(bad)};
}

std::pair<bool, std::string> canonical_reduction() {
    UniversalModel un = generate(2);
    std::mt19937 rng(20260814);
    std::size_t bad = 0;
    for (int s = 0; s < 200; ++s) {
        const Tree t = random_tree(rng, 8, 2);
        const Tree c = canonical_tree(t);
        bool ok = un.find(c) >= 0;
        ok = ok && find_monotonic(t.model(), c.model()).has_value() &&
             find_monotonic(c.model(), t.model()).has_value();
        ok = ok && canonical_tree(c) == c;
        if (!ok) ++bad;
    }
    return {bad == 0, "200 seeded trees, failures=" + std::to_string(bad)};
}

std::pair<bool, std::string> canonical_iso() {
    const bool one = check_canonical_iso(1);
    const bool two = check_canonical_iso(2);
    return {one && two, std::string("n=1: ") + (one ? "ok" : "FAIL") +
                            ", n=2: " + (two ? "ok" : "FAIL")};
}

std::pair<bool, std::string> substructure_sweep() {
    const auto sources = models_up_to_iso(3, 2, true);
    const auto targets = models_up_to_iso(3, 2, false);
    std::size_t valid_pairs = 0, exceptions = 0;
    for (const KripkeModel& n : sources) {
        const Formula b = beta_model(n);
        for (const KripkeModel& m : targets) {
            if (!validates(m, b)) continue;
            ++valid_pairs;
            const std::uint32_t full = (1u << m.size()) - 1u;
            for (std::uint32_t mask = 1; mask <= full; ++mask) {
                Bitset keep(m.size());
                for (int w = 0; w < m.size(); ++w)
                    if ((mask >> w) & 1u) keep.set(w);
                if (!validates(m.restricted_to(keep), b)) ++exceptions;
            }
        }
    }
    return {exceptions == 0, plural(valid_pairs, "validity pairs") +
                                 ", substructure exceptions=" + std::to_string(exceptions)};
}

std::pair<bool, std::string> frame_normal_form_sweep() {
    const char* sample[] = {"p -> p",
                            "p | ~p",
                            "~~p -> p",
                            "(p -> q) | (q -> p)",
                            "p -> (q -> p)",
                            "((p -> q) -> p) -> p",
                            "(p & q) -> (q & p)",
                            "(p | q) -> (q | p)",
                            "~(p & ~p)",
                            "(p -> (p & q)) -> (p -> q)",
                            "(p -> q) -> (~q -> ~p)",
                            "~p | ~~p"};
    const auto frames = frames_up_to_iso(4, true);
    std::size_t mismatches = 0, checked = 0;
    for (const char* text : sample) {
        auto [f, ctx] = parse_auto(text);
        const FrameNormalForm nf = frame_normal_form(f, ctx);
        for (const KripkeFrame& fr : frames) {
            ++checked;
            const bool a = frame_valid(fr, f, ctx.size());
            const bool b = frame_valid(fr, nf.prime, nf.extended.size());
            if (a != b) ++mismatches;
        }
    }
    std::ostringstream d;
    d << "12 formulas x " << frames.size() << " frames = " << checked
      << " checks, mismatches=" << mismatches;
    return {mismatches == 0, d.str()};
}

std::pair<bool, std::string> reduction_pipeline() {
    std::mt19937 rng(551);
    std::size_t bad = 0, trees = 0;
    auto check = [&](const KripkeModel& m) {
        const ReduceResult r = reduce(m);
        bool ok = is_color_preserving_submodel(r.reduced, m);
        ok = ok && r.reduced.root_id() == m.root_id();
        const bool is_tree = m.frame().is_tree_order();
        if (is_tree) {
            ++trees;
            ok = ok && r.onto.has_value();
            if (ok) {
                ok = is_monotonic(*r.onto, m, r.reduced);
                Bitset image(r.reduced.size());
                for (const auto& [w, v] : *r.onto) image.set(r.reduced.frame().index(v));
                ok = ok && image.count() == r.reduced.size();
                ok = ok && canonical_tree(Tree(m)) == canonical_tree(Tree(r.reduced));
            }
        }
        if (!ok) ++bad;
    };
    for (int s = 0; s < 100; ++s) check(random_tree(rng, 10, 2).model());
    for (int s = 0; s < 100; ++s) check(random_rooted_model(rng, 10, 2));
    return {bad == 0, "200 seeded inputs (" + std::to_string(trees) +
                          " trees), failures=" + std::to_string(bad)};
}

std::pair<bool, std::string> prover_cross_validation() {
    const auto frames = frames_up_to_iso(5, true);
    std::mt19937 rng(77);
    std::size_t disagreements = 0, provable = 0;
    for (int s = 0; s < 500; ++s) {
        const Formula f = random_formula(rng, 2, 4);
        const bool syntactic = proves({}, f);
        bool semantic = true;
        for (const KripkeFrame& fr : frames)
            if (!frame_valid(fr, f, f.min_vars())) {
                semantic = false;
                break;
            }
        if (syntactic != semantic) ++disagreements;
        if (syntactic) ++provable;
    }
    std::ostringstream d;
    d << "500 formulas (" << provable << " provable) vs " << frames.size()
      << " rooted frames, disagreements=" << disagreements;
    return {disagreements == 0, d.str()};
}

}  // namespace

std::vector<CriterionResult> run_acceptance() {
    Runner r;
    r.run(1, "two-variable universal model structure", universal_two_structure);
    r.run(2, "one-variable universal model and class count", universal_one_classes);
    r.run(3, "refutation witnesses match direct forcing", refutation_oracle);
    r.run(4, "every world refutes its own subframe formula", beta_refuted_at_own_world);
    r.run(5, "universal model nodes are rigid", universal_self_maps);
    r.run(6, "upset formulas define exactly their upsets", upset_defining_formulas);
    r.run(7, "canonical reduction lands in the universal model", canonical_reduction);
    r.run(8, "universal model matches the theory order", canonical_iso);
    r.run(9, "subframe formula validity survives substructures", substructure_sweep);
    r.run(10, "frame normal form preserves frame validity", frame_normal_form_sweep);
    r.run(11, "reduction yields color-preserving submodels", reduction_pipeline);
    r.run(12, "prover agrees with bounded countermodel search", prover_cross_validation);
    return r.out;
}

}  // namespace nnil
