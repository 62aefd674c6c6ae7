#include "nnil/universal.hpp"

#include <algorithm>
#include <map>

#include "nnil/beta.hpp"
#include "nnil/morphisms.hpp"

namespace nnil {

int UniversalModel::layers() const {
    int m = 0;
    for (int l : layer_) m = std::max(m, l);
    return m;
}

std::vector<int> UniversalModel::layer_sizes() const {
    std::vector<int> sizes(static_cast<std::size_t>(layers()), 0);
    for (int l : layer_) ++sizes[static_cast<std::size_t>(l - 1)];
    return sizes;
}

int UniversalModel::root() const {
    for (int v = 0; v < count(); ++v) {
        bool least = true;
        for (int u = 0; u < count() && least; ++u)
            if (!leq(v, u)) least = false;
        if (least) return v;
    }
    throw Error("universal model has no least node");
}

int UniversalModel::find(const std::string& code) const {
    for (int v = 0; v < count(); ++v)
        if (node(v).code() == code) return v;
    return -1;
}

Bitset UniversalModel::theory(int w) const {
    Bitset t(count());
    for (int v = 0; v < count(); ++v)
        if (leq(v, w)) t.set(v);
    return t;
}

Bitset UniversalModel::upset(int w) const {
    Bitset t(count());
    for (int v = 0; v < count(); ++v)
        if (leq(w, v)) t.set(v);
    return t;
}

namespace {

bool leq_trees(const Tree& a, const Tree& b) {
    return find_monotonic(b.model(), a.model()).has_value();
}

// All colors occurring anywhere in the tree, as a bitmask over color values.
std::uint64_t color_mask(const Tree& t) {
    std::uint64_t m = 0;
    for (int w = 0; w < t.size(); ++w) m |= 1ull << t.color(w).bits;
    return m;
}

std::uint32_t color_and(const Tree& t) {
    std::uint32_t a = ~0u;
    for (int w = 0; w < t.size(); ++w) a &= t.color(w).bits;
    return a;
}

}  // namespace

UniversalModel generate(int n, const GenerationLimits& limits) {
    if (n < 1) throw Error("universal model needs at least one variable");
    if (n > 5) throw ResourceLimitError("universal model generation supports n <= 5");
    UniversalModel un;
    un.ctx_ = VarContext::numbered(n);
    const std::uint32_t ncolors = 1u << n;

    std::vector<Tree> nodes;
    std::vector<int> layer;
    std::vector<std::uint64_t> cmask;  // colors occurring per node
    std::vector<std::uint32_t> cand;   // AND of colors per node
    std::vector<std::vector<bool>> le;  // le[a][b] : a <= b

    auto push_node = [&](Tree t, int lay) {
        cmask.push_back(color_mask(t));
        cand.push_back(color_and(t));
        nodes.push_back(std::move(t));
        layer.push_back(lay);
        if (nodes.size() > limits.max_nodes)
            throw ResourceLimitError("universal model exceeds the node budget (" +
                                     std::to_string(limits.max_nodes) + ")");
    };

    // layer 1: the 2^n colors, in code (= color string) order
    {
        std::vector<Tree> singles;
        for (std::uint32_t c = 0; c < ncolors; ++c)
            singles.push_back(Tree::single(Color(n, c), un.ctx_));
        std::sort(singles.begin(), singles.end(),
                  [](const Tree& a, const Tree& b) { return a.code() < b.code(); });
        for (auto& t : singles) push_node(std::move(t), 1);
    }

    // pairs with both indices below `old` are already final
    auto extend_le_from = [&](std::size_t old) {
        const std::size_t k = nodes.size();
        for (auto& row : le) row.resize(k, false);
        while (le.size() < k) le.emplace_back(k, false);
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b) {
                if (a < old && b < old) continue;
                le[a][b] = a == b || leq_trees(nodes[a], nodes[b]);
            }
    };
    extend_le_from(0);

    int lay = 1;
    std::size_t layer_begin = 0, layer_end = nodes.size();
    std::size_t work = 0;
    while (layer_begin < layer_end) {
        // antichains over nodes[0..layer_end) containing a node of the last
        // layer, extended smallest-index-first
        std::vector<int> chosen;
        std::vector<Tree> fresh;
        std::map<std::string, bool> seen;
        auto emit = [&](std::uint32_t c) {
            std::vector<Tree> kids;
            kids.reserve(chosen.size());
            for (int i : chosen) kids.push_back(nodes[static_cast<std::size_t>(i)]);
            std::sort(kids.begin(), kids.end(),
                      [](const Tree& a, const Tree& b) { return a.code() < b.code(); });
            Tree t = Tree::graft(Color(n, c), kids, un.ctx_);
            if (seen.emplace(t.code(), true).second) fresh.push_back(std::move(t));
        };
        auto rec = [&](auto&& self, std::size_t start, std::uint64_t mask, std::uint32_t both,
                       bool has_last) -> void {
            if (++work > limits.max_work)
                throw ResourceLimitError("universal model generation exceeds the work budget (" +
                                         std::to_string(limits.max_work) + ")");
            if (has_last && !chosen.empty()) {
                // colors strictly below everything in the antichain:
                // submasks of `both` not occurring in `mask`
                std::uint32_t c = both;
                while (true) {
                    if (!(mask >> c & 1ull)) emit(c);
                    if (c == 0) break;
                    c = (c - 1) & both;
                }
            }
            for (std::size_t i = start; i < layer_end; ++i) {
                bool anti = true;
                for (int j : chosen)
                    if (le[static_cast<std::size_t>(j)][i] || le[i][static_cast<std::size_t>(j)]) {
                        anti = false;
                        break;
                    }
                if (!anti) continue;
                const std::uint64_t m2 = mask | cmask[i];
                const std::uint32_t b2 = both & cand[i];
                // some strictly-lower color must remain available
                bool viable = false;
                std::uint32_t c = b2;
                while (true) {
                    if (!(m2 >> c & 1ull)) {
                        viable = true;
                        break;
                    }
                    if (c == 0) break;
                    c = (c - 1) & b2;
                }
                if (!viable) continue;
                chosen.push_back(static_cast<int>(i));
                self(self, i + 1, m2, b2, has_last || i >= layer_begin);
                chosen.pop_back();
            }
        };
        rec(rec, 0, 0, ncolors - 1, false);
        if (fresh.empty()) break;
        std::sort(fresh.begin(), fresh.end(),
                  [](const Tree& a, const Tree& b) { return a.code() < b.code(); });
        ++lay;
        layer_begin = nodes.size();
        for (auto& t : fresh) push_node(std::move(t), lay);
        layer_end = nodes.size();
        extend_le_from(layer_begin);
    }

    un.nodes_ = std::move(nodes);
    un.layer_ = std::move(layer);
    un.leq_.assign(un.nodes_.size(), Bitset(static_cast<std::size_t>(un.count())));
    for (std::size_t a = 0; a < un.nodes_.size(); ++a)
        for (std::size_t b = 0; b < un.nodes_.size(); ++b)
            if (le[a][b]) un.leq_[a].set(static_cast<int>(b));

    std::vector<WorldId> worlds;
    std::vector<std::pair<WorldId, WorldId>> rel;
    for (int v = 0; v < un.count(); ++v) worlds.push_back("t" + std::to_string(v));
    for (int a = 0; a < un.count(); ++a)
        for (int b = 0; b < un.count(); ++b)
            if (a != b && un.leq(a, b)) rel.emplace_back(worlds[static_cast<std::size_t>(a)],
                                                         worlds[static_cast<std::size_t>(b)]);
    KripkeFrame fr(worlds, rel);
    std::vector<Bitset> val(static_cast<std::size_t>(n), Bitset(fr.size()));
    for (int v = 0; v < un.count(); ++v) {
        const Tree& t = un.node(v);
        const Color c = t.color(t.root());
        for (int k = 0; k < n; ++k)
            if (c.test(k)) val[static_cast<std::size_t>(k)].set(v);
    }
    un.model_ = std::make_shared<const KripkeModel>(std::move(fr), un.ctx_, std::move(val));
    return un;
}

Tree universal_tree(int n) {
    if (n < 1) throw Error("universal tree needs at least one variable");
    if (n > 5) throw ResourceLimitError("universal tree generation supports n <= 5");
    const std::uint32_t ncolors = 1u << n;
    VarContext ctx = VarContext::numbered(n);
    std::vector<WorldId> worlds;
    std::vector<std::pair<WorldId, WorldId>> rel;
    for (std::uint32_t c = 0; c < ncolors; ++c) worlds.push_back(Color(n, c).to_string());
    for (std::uint32_t c = 0; c < ncolors; ++c)
        for (std::uint32_t d = 0; d < ncolors; ++d)
            if (c != d && (c & ~d) == 0)
                rel.emplace_back(worlds[c], worlds[d]);
    KripkeFrame fr(worlds, rel);
    std::vector<Bitset> val(static_cast<std::size_t>(n), Bitset(fr.size()));
    for (std::uint32_t c = 0; c < ncolors; ++c)
        for (int k = 0; k < n; ++k)
            if ((c >> k) & 1u) val[static_cast<std::size_t>(k)].set(static_cast<int>(c));
    return unravel(KripkeModel(std::move(fr), std::move(ctx), std::move(val)));
}

namespace {

Tree canonical_rec(const Tree& t, int v) {
    const Color root_color = t.color(v);
    // minimal strict descendants whose color differs from the root
    std::vector<Tree> subs;
    std::vector<int> stack(t.children(v).rbegin(), t.children(v).rend());
    while (!stack.empty()) {
        int w = stack.back();
        stack.pop_back();
        if (t.color(w) != root_color) {
            subs.push_back(canonical_rec(t, w));
        } else {
            for (auto it = t.children(w).rbegin(); it != t.children(w).rend(); ++it)
                stack.push_back(*it);
        }
    }
    if (subs.empty()) return Tree::single(root_color, t.model().ctx());
    std::map<std::string, Tree> uniq;
    for (auto& s : subs) uniq.emplace(s.code(), std::move(s));
    std::vector<Tree> minimal;
    for (const auto& [ci, ti] : uniq) {
        bool keep = true;
        for (const auto& [cj, tj] : uniq)
            if (cj != ci && leq_trees(tj, ti)) {
                keep = false;
                break;
            }
        if (keep) minimal.push_back(ti);
    }
    return Tree::graft(root_color, minimal, t.model().ctx());
}

}  // namespace

Tree canonical_tree(const Tree& t) { return canonical_rec(t, t.root()); }

long long count_nnil_classes(int n) {
    if (n < 1 || n > 2)
        throw ResourceLimitError("class counting is exhaustive only for 1 <= n <= 2");
    UniversalModel un = generate(n);
    const int k = un.count();
    if (k > 25) throw ResourceLimitError("too many nodes for upset enumeration");
    std::vector<std::uint32_t> up(static_cast<std::size_t>(k), 0);
    for (int v = 0; v < k; ++v)
        for (int u = 0; u < k; ++u)
            if (un.leq(v, u)) up[static_cast<std::size_t>(v)] |= 1u << u;
    long long total = 0;
    const std::uint32_t full = (k == 32) ? ~0u : (1u << k) - 1;
    for (std::uint32_t m = 0;; ++m) {
        bool ok = true;
        for (int v = 0; v < k && ok; ++v)
            if ((m >> v) & 1u)
                if ((up[static_cast<std::size_t>(v)] & ~m) != 0) ok = false;
        if (ok) ++total;
        if (m == full) break;
    }
    return total;
}

bool check_canonical_iso(int n) {
    if (n < 1 || n > 2) throw ResourceLimitError("isomorphism check is exhaustive only for 1 <= n <= 2");
    UniversalModel un = generate(n);
    const int k = un.count();

    // sanity: each tree refutes its own subframe formula at the root
    for (int v = 0; v < k; ++v) {
        const KripkeModel& tm = un.node(v).model();
        if (tm.force(un.node(v).root(), beta_model(tm))) return false;
    }

    std::vector<Formula> bp;
    bp.reserve(static_cast<std::size_t>(k));
    for (int v = 0; v < k; ++v) bp.push_back(beta_plus_node(un, v));

    // Semantic theory of each node against the relational one.
    std::vector<Bitset> th;
    for (int w = 0; w < k; ++w) {
        const KripkeModel& tm = un.node(w).model();
        const int r = un.node(w).root();
        Bitset sem(k);
        for (int v = 0; v < k; ++v)
            if (tm.force(r, bp[static_cast<std::size_t>(v)])) sem.set(v);
        if (sem != un.theory(w)) return false;
        th.push_back(std::move(sem));
    }

    // injectivity
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (th[static_cast<std::size_t>(a)] == th[static_cast<std::size_t>(b)]) return false;

    // two-way order preservation
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            if (th[static_cast<std::size_t>(a)].subset_of(th[static_cast<std::size_t>(b)]) !=
                un.leq(a, b))
                return false;

    // color preservation: variables of the theory = the node's color, both
    // on the node's own tree and inside T(n)
    for (int w = 0; w < k; ++w) {
        const Tree& t = un.node(w);
        const Color c = t.color(t.root());
        for (int var = 0; var < n; ++var) {
            const Formula p = Formula::var(var);
            if (t.model().force(t.root(), p) != c.test(var)) return false;
            if (un.as_model().force(w, p) != c.test(var)) return false;
        }
    }

    // surjectivity onto the beta-plus-generated theories
    std::vector<Bitset> vs;
    for (int v = 0; v < k; ++v) vs.push_back(un.as_model().eval(bp[static_cast<std::size_t>(v)]));
    for (int v = 0; v < k; ++v) {
        Bitset gen(k);
        for (int u = 0; u < k; ++u)
            if (vs[static_cast<std::size_t>(v)].subset_of(vs[static_cast<std::size_t>(u)])) gen.set(u);
        bool hit = false;
        for (int w = 0; w < k && !hit; ++w)
            if (th[static_cast<std::size_t>(w)] == gen) hit = true;
        if (!hit) return false;
    }
    return true;
}

}  // namespace nnil
