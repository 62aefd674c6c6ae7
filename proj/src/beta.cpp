#include "nnil/beta.hpp"

#include <algorithm>
#include <map>

#include "nnil/morphisms.hpp"
#include "nnil/prover.hpp"

namespace nnil {

namespace {

// beta over the cover DAG, memoized by the canonical code of the unraveled
// subtree so isomorphic subtrees share one formula object.
struct BetaBuilder {
    const KripkeModel& m;
    bool simplify;
    std::vector<std::string> code;           // per world
    std::map<std::string, Formula> by_code;  // code -> beta

    explicit BetaBuilder(const KripkeModel& m_, bool simplify_)
        : m(m_), simplify(simplify_), code(static_cast<std::size_t>(m_.size())) {}

    const std::string& code_of(int w) {
        auto& c = code[static_cast<std::size_t>(w)];
        if (!c.empty()) return c;
        std::vector<std::string> kids;
        for (int s : m.frame().covers(w)) kids.push_back(code_of(s));
        std::sort(kids.begin(), kids.end());
        kids.erase(std::unique(kids.begin(), kids.end()), kids.end());
        c = "(" + m.color(w).to_string();
        for (const auto& k : kids) c += k;
        c += ")";
        return c;
    }

    Formula build(int w) {
        const std::string& c = code_of(w);
        auto it = by_code.find(c);
        if (it != by_code.end()) return it->second;
        std::vector<Formula> prop, disjuncts;
        for (int k = 0; k < m.ctx().size(); ++k)
            (m.val(k).test(w) ? prop : disjuncts).push_back(Formula::var(k));
        std::map<std::string, Formula> kids;  // dedup + canonical order
        for (int s : m.frame().covers(w)) kids.emplace(code_of(s), build(s));
        for (const auto& [kc, kf] : kids) disjuncts.push_back(kf);
        Formula rhs = Formula::disj_all(disjuncts);
        Formula b = (simplify && prop.empty()) ? rhs
                                               : Formula::impl(Formula::conj_all(prop), std::move(rhs));
        by_code.emplace(c, b);
        return b;
    }
};

}  // namespace

Formula beta_node(const KripkeModel& n, const WorldId& w, bool simplify) {
    BetaBuilder b(n, simplify);
    return b.build(n.frame().index(w));
}

Formula beta_model(const KripkeModel& n, bool simplify) {
    auto r = n.root_id();
    if (!r) throw ModelError("model has no root");
    return beta_node(n, *r, simplify);
}

std::optional<NodeMap> refutation_witness(const KripkeModel& n, const KripkeModel& m) {
    return find_monotonic(unravel(n).model(), m);
}

std::optional<std::pair<NodeMap, KripkeModel>> frame_refutes(const KripkeModel& n,
                                                             const KripkeFrame& fr) {
    Tree t = unravel(n);
    auto wit = find_color_consistent(t, fr);
    if (!wit) return std::nullopt;
    return std::make_pair(*wit, synthesize_valuation(*wit, t, fr));
}

Formula beta_plus_node(const UniversalModel& un, int w) {
    if (w < 0 || w >= un.count()) throw UnknownWorldError("t" + std::to_string(w));
    std::vector<Formula> parts;
    for (int v = 0; v < un.count(); ++v)
        if (!un.leq(w, v)) parts.push_back(beta_model(un.node(v).model()));
    return Formula::conj_all(parts);
}

Formula beta_plus_node(const UniversalModel& un, const Tree& tw) {
    const int w = un.find(tw);
    if (w < 0) throw ModelError("tree is not a node of the universal model");
    return beta_plus_node(un, w);
}

Formula beta_plus_upset(const UniversalModel& un, const Bitset& u) {
    for (int v = 0; v < un.count(); ++v)
        if (u.test(v) && !un.upset(v).subset_of(u)) throw ModelError("node set is not an upset");
    std::vector<Formula> parts;
    for (int v = 0; v < un.count(); ++v)
        if (!u.test(v)) parts.push_back(beta_model(un.node(v).model()));
    return Formula::conj_all(parts);
}

bool nnil_equivalent(const KripkeModel& m, const WorldId& w, const KripkeModel& n,
                     const WorldId& u) {
    if (m.ctx() != n.ctx()) throw ModelError("models use different variable contexts");
    Tree a = canonical_tree(unravel(m.generated_submodel(w)));
    Tree b = canonical_tree(unravel(n.generated_submodel(u)));
    return a == b;
}

std::optional<Formula> is_nnil_expressible(const Formula& f, int n) {
    if (n < 1 || n > 2)
        throw ResourceLimitError("exhaustive expressibility check supports 1 <= n <= 2");
    if (f.min_vars() > n)
        throw Error("formula uses more than " + std::to_string(n) + " variables");
    UniversalModel un = generate(n);
    Bitset u(un.count());
    for (int v = 0; v < un.count(); ++v)
        if (un.as_model().force(v, f)) u.set(v);
    Formula g = beta_plus_upset(un, u);
    if (!equivalent(f, g)) return std::nullopt;
    return g;
}

}  // namespace nnil
