#include "nnil/kripke.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace nnil {

std::string Color::to_string() const {
    std::string s;
    s.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) s += test(k) ? '1' : '0';
    return s;
}

KripkeFrame::KripkeFrame(std::vector<WorldId> worlds,
                         const std::vector<std::pair<WorldId, WorldId>>& relation)
    : worlds_(std::move(worlds)) {
    const auto n = worlds_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (worlds_[i].empty()) throw ModelError("empty world identifier");
        if (!index_.emplace(worlds_[i], static_cast<int>(i)).second)
            throw ModelError("duplicate world identifier: '" + worlds_[i] + "'");
    }
    above_.assign(n, Bitset(n));
    for (std::size_t i = 0; i < n; ++i) above_[i].set(static_cast<int>(i));
    for (const auto& [a, b] : relation) above_[static_cast<std::size_t>(index(a))].set(index(b));
    // reflexive-transitive closure (Warshall)
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (above_[i].test(static_cast<int>(k))) above_[i] |= above_[k];
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (above_[i].test(static_cast<int>(j)) && above_[j].test(static_cast<int>(i)))
                throw ModelError("order is not antisymmetric: '" + worlds_[i] + "' and '" +
                                 worlds_[j] + "' lie on a cycle");
    below_.assign(n, Bitset(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (above_[j].test(static_cast<int>(i))) below_[i].set(static_cast<int>(j));
    covers_.assign(n, {});
    cover_preds_.assign(n, {});
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (a == b || !above_[a].test(static_cast<int>(b))) continue;
            bool direct = true;
            for (std::size_t c = 0; c < n && direct; ++c)
                if (c != a && c != b && above_[a].test(static_cast<int>(c)) &&
                    above_[c].test(static_cast<int>(b)))
                    direct = false;
            if (direct) {
                covers_[a].push_back(static_cast<int>(b));
                cover_preds_[b].push_back(static_cast<int>(a));
            }
        }
}

int KripkeFrame::index(const WorldId& w) const {
    auto it = index_.find(w);
    if (it == index_.end()) throw UnknownWorldError(w);
    return it->second;
}

bool KripkeFrame::has_world(const WorldId& w) const { return index_.count(w) != 0; }

std::vector<std::pair<WorldId, WorldId>> KripkeFrame::cover_pairs() const {
    std::vector<std::pair<WorldId, WorldId>> out;
    for (int a = 0; a < size(); ++a)
        for (int b : covers(a)) out.emplace_back(worlds_[static_cast<std::size_t>(a)], worlds_[static_cast<std::size_t>(b)]);
    return out;
}

std::optional<int> KripkeFrame::root() const {
    for (int i = 0; i < size(); ++i)
        if (above(i).count() == static_cast<std::size_t>(size())) return i;
    return std::nullopt;
}

bool KripkeFrame::is_tree_order() const {
    if (!root()) return false;
    for (int w = 0; w < size(); ++w) {
        std::vector<int> preds;
        below(w).for_each([&](int u) {
            if (u != w) preds.push_back(u);
        });
        for (std::size_t i = 0; i < preds.size(); ++i)
            for (std::size_t j = i + 1; j < preds.size(); ++j)
                if (!rel(preds[i], preds[j]) && !rel(preds[j], preds[i])) return false;
    }
    return true;
}

std::vector<std::uint32_t> KripkeFrame::upset_masks() const {
    if (size() > 25) throw ResourceLimitError("upset enumeration over " + std::to_string(size()) + " worlds");
    std::vector<std::uint32_t> ups;
    std::vector<std::uint32_t> above_mask(static_cast<std::size_t>(size()), 0);
    for (int i = 0; i < size(); ++i)
        above(i).for_each([&](int j) { above_mask[static_cast<std::size_t>(i)] |= 1u << j; });
    const std::uint32_t full = size() == 32 ? ~0u : (1u << size()) - 1;
    for (std::uint32_t m = 0;; ++m) {
        bool up = true;
        for (int i = 0; i < size() && up; ++i)
            if ((m >> i) & 1u)
                if ((above_mask[static_cast<std::size_t>(i)] & ~m) != 0) up = false;
        if (up) ups.push_back(m);
        if (m == full) break;
    }
    return ups;
}

KripkeFrame KripkeFrame::restricted_to(const Bitset& keep) const {
    std::vector<WorldId> ws;
    keep.for_each([&](int i) { ws.push_back(worlds_[static_cast<std::size_t>(i)]); });
    std::vector<std::pair<WorldId, WorldId>> rel_pairs;
    keep.for_each([&](int i) {
        keep.for_each([&](int j) {
            if (i != j && rel(i, j))
                rel_pairs.emplace_back(worlds_[static_cast<std::size_t>(i)], worlds_[static_cast<std::size_t>(j)]);
        });
    });
    return KripkeFrame(std::move(ws), rel_pairs);
}

KripkeModel::KripkeModel(KripkeFrame frame, VarContext ctx, std::vector<Bitset> valuation)
    : frame_(std::move(frame)), ctx_(std::move(ctx)), val_(std::move(valuation)) {
    if (val_.size() != static_cast<std::size_t>(ctx_.size()))
        throw ModelError("valuation arity does not match the variable context");
    if (ctx_.size() > 30) throw ModelError("too many variables for color bookkeeping");
    for (int k = 0; k < ctx_.size(); ++k) {
        bool persistent = true;
        val(k).for_each([&](int w) {
            if (!frame_.above(w).subset_of(val(k))) persistent = false;
        });
        if (!persistent)
            throw ModelError("valuation of '" + ctx_.name(k) + "' is not persistent");
    }
}

Color KripkeModel::color(int w) const {
    if (w < 0 || w >= size()) throw UnknownWorldError("#" + std::to_string(w));
    Color c(ctx_.size(), 0);
    for (int k = 0; k < ctx_.size(); ++k)
        if (val(k).test(w)) c.bits |= 1u << k;
    return c;
}

Bitset KripkeModel::eval(const Formula& f) const {
    std::unordered_map<Formula, Bitset, FormulaHash> memo;
    const Bitset empty(size());
    Bitset all(size());
    all.set_all();
    auto rec = [&](auto&& self, const Formula& g) -> const Bitset& {
        auto it = memo.find(g);
        if (it != memo.end()) return it->second;
        Bitset r(size());
        switch (g.kind()) {
            case Conn::Bot:
                break;
            case Conn::Top:
                r = all;
                break;
            case Conn::Var:
                if (g.var_index() >= ctx_.size())
                    throw ModelError("variable index " + std::to_string(g.var_index()) +
                                     " outside the model context");
                r = val(g.var_index());
                break;
            case Conn::And:
                r = self(self, g.lhs()) & self(self, g.rhs());
                break;
            case Conn::Or:
                r = self(self, g.lhs()) | self(self, g.rhs());
                break;
            case Conn::Impl: {
                const Bitset bad = self(self, g.lhs()).minus(self(self, g.rhs()));
                for (int w = 0; w < size(); ++w)
                    if (!frame_.above(w).intersects(bad)) r.set(w);
                break;
            }
        }
        return memo.emplace(g, std::move(r)).first->second;
    };
    return rec(rec, f);
}

bool KripkeModel::force(const WorldId& w, const Formula& f) const { return force(frame_.index(w), f); }

bool KripkeModel::force(int w, const Formula& f) const {
    if (w < 0 || w >= size()) throw UnknownWorldError("#" + std::to_string(w));
    return eval(f).test(w);
}

bool KripkeModel::models(const Formula& f) const {
    return eval(f).count() == static_cast<std::size_t>(size());
}

KripkeModel KripkeModel::restricted_to(const Bitset& keep) const {
    KripkeFrame fr = frame_.restricted_to(keep);
    std::vector<Bitset> v(static_cast<std::size_t>(ctx_.size()), Bitset(fr.size()));
    int j = 0;
    keep.for_each([&](int i) {
        for (int k = 0; k < ctx_.size(); ++k)
            if (val(k).test(i)) v[static_cast<std::size_t>(k)].set(j);
        ++j;
    });
    return KripkeModel(std::move(fr), ctx_, std::move(v));
}

KripkeModel KripkeModel::generated_submodel(const WorldId& w) const {
    return restricted_to(frame_.above(frame_.index(w)));
}

std::optional<WorldId> KripkeModel::root_id() const {
    auto r = frame_.root();
    if (!r) return std::nullopt;
    return frame_.world(*r);
}

bool KripkeModel::operator==(const KripkeModel& o) const {
    if (ctx_ != o.ctx_ || size() != o.size()) return false;
    for (const auto& w : frame_.worlds())
        if (!o.frame_.has_world(w)) return false;
    for (const auto& a : frame_.worlds())
        for (const auto& b : frame_.worlds())
            if (frame_.rel(frame_.index(a), frame_.index(b)) !=
                o.frame_.rel(o.frame_.index(a), o.frame_.index(b)))
                return false;
    for (const auto& a : frame_.worlds())
        if (color(a) != o.color(a)) return false;
    return true;
}

Tree::Tree(KripkeModel m) : model_(std::move(m)) {
    const KripkeFrame& fr = model_.frame();
    if (!fr.is_tree_order()) throw ModelError("model order is not tree-like");
    root_ = *fr.root();
    const auto n = static_cast<std::size_t>(fr.size());
    parent_.assign(n, -1);
    children_.assign(n, {});
    code_.assign(n, {});
    for (int v = 0; v < fr.size(); ++v)
        if (v != root_) {
            const auto& cp = fr.cover_preds(v);
            if (cp.size() != 1) throw ModelError("model order is not tree-like");
            parent_[static_cast<std::size_t>(v)] = cp[0];
        }
    // codes bottom-up, then children sorted by (code, world id)
    std::vector<int> order;  // post-order
    std::vector<std::pair<int, bool>> stack{{root_, false}};
    while (!stack.empty()) {
        auto [v, expanded] = stack.back();
        stack.pop_back();
        if (expanded) {
            order.push_back(v);
            continue;
        }
        stack.push_back({v, true});
        for (int c : fr.covers(v)) stack.push_back({c, false});
    }
    for (int v : order) {
        auto kids = fr.covers(v);
        std::sort(kids.begin(), kids.end(), [&](int a, int b) {
            const auto& ca = code_[static_cast<std::size_t>(a)];
            const auto& cb = code_[static_cast<std::size_t>(b)];
            if (ca != cb) return ca < cb;
            return fr.world(a) < fr.world(b);
        });
        std::string code = "(" + model_.color(v).to_string();
        for (int c : kids) code += code_[static_cast<std::size_t>(c)];
        code += ")";
        code_[static_cast<std::size_t>(v)] = std::move(code);
        children_[static_cast<std::size_t>(v)] = std::move(kids);
    }
}

int Tree::depth() const {
    int d = 0;
    auto rec = [&](auto&& self, int v, int h) -> void {
        d = std::max(d, h);
        for (int c : children(v)) self(self, c, h + 1);
    };
    rec(rec, root_, 1);
    return d;
}

Tree Tree::subtree(int v) const { return Tree(model_.restricted_to(model_.frame().above(v))); }

Tree Tree::single(Color c, const VarContext& ctx) {
    if (c.n != ctx.size()) throw ModelError("color width does not match the variable context");
    KripkeFrame fr({"r"}, {});
    std::vector<Bitset> val(static_cast<std::size_t>(ctx.size()), Bitset(1));
    for (int k = 0; k < ctx.size(); ++k)
        if (c.test(k)) val[static_cast<std::size_t>(k)].set(0);
    return Tree(KripkeModel(std::move(fr), ctx, std::move(val)));
}

Tree Tree::graft(Color c, const std::vector<Tree>& children, const VarContext& ctx) {
    if (c.n != ctx.size()) throw ModelError("color width does not match the variable context");
    std::vector<WorldId> worlds{"r"};
    std::vector<std::pair<WorldId, WorldId>> rel;
    std::vector<std::vector<WorldId>> val_worlds(static_cast<std::size_t>(ctx.size()));
    for (int k = 0; k < ctx.size(); ++k)
        if (c.test(k)) val_worlds[static_cast<std::size_t>(k)].push_back("r");
    for (std::size_t i = 0; i < children.size(); ++i) {
        const Tree& t = children[i];
        if (t.model().ctx() != ctx) throw ModelError("subtree context mismatch");
        const std::string prefix = std::to_string(i) + "/";
        const KripkeFrame& fr = t.model().frame();
        for (const auto& w : fr.worlds()) worlds.push_back(prefix + w);
        for (const auto& [a, b] : fr.cover_pairs()) rel.emplace_back(prefix + a, prefix + b);
        rel.emplace_back("r", prefix + fr.world(t.root()));
        for (int k = 0; k < ctx.size(); ++k)
            t.model().val(k).for_each([&](int w) {
                val_worlds[static_cast<std::size_t>(k)].push_back(prefix + fr.world(w));
            });
    }
    KripkeFrame fr(worlds, rel);
    std::vector<Bitset> val(static_cast<std::size_t>(ctx.size()), Bitset(fr.size()));
    for (int k = 0; k < ctx.size(); ++k)
        for (const auto& w : val_worlds[static_cast<std::size_t>(k)])
            val[static_cast<std::size_t>(k)].set(fr.index(w));
    return Tree(KripkeModel(std::move(fr), ctx, std::move(val)));
}

namespace {
constexpr std::size_t kMaxUnravelNodes = 200000;
}

std::pair<Tree, NodeMap> unravel_full(const KripkeModel& m) {
    auto r = m.frame().root();
    if (!r) throw ModelError("model has no root");
    struct Node {
        int world;
        int parent;  // index into nodes
        WorldId id;
    };
    std::vector<Node> nodes{{*r, -1, m.frame().world(*r)}};
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        for (int c : m.frame().covers(nodes[static_cast<std::size_t>(cur)].world)) {
            nodes.push_back({c, cur, nodes[static_cast<std::size_t>(cur)].id + "/" + m.frame().world(c)});
            if (nodes.size() > kMaxUnravelNodes) throw ResourceLimitError("unraveling exceeds node budget");
            queue.push_back(static_cast<int>(nodes.size()) - 1);
        }
    }
    std::vector<WorldId> worlds;
    std::vector<std::pair<WorldId, WorldId>> rel;
    NodeMap nat;
    worlds.reserve(nodes.size());
    for (const auto& nd : nodes) {
        worlds.push_back(nd.id);
        if (nd.parent >= 0) rel.emplace_back(nodes[static_cast<std::size_t>(nd.parent)].id, nd.id);
        nat[nd.id] = m.frame().world(nd.world);
    }
    KripkeFrame fr(worlds, rel);
    std::vector<Bitset> val(static_cast<std::size_t>(m.ctx().size()), Bitset(fr.size()));
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (int k = 0; k < m.ctx().size(); ++k)
            if (m.val(k).test(nodes[i].world)) val[static_cast<std::size_t>(k)].set(static_cast<int>(i));
    return {Tree(KripkeModel(std::move(fr), m.ctx(), std::move(val))), std::move(nat)};
}

Tree unravel(const KripkeModel& m) { return unravel_full(m).first; }

NodeMap natural_map(const KripkeModel& m) { return unravel_full(m).second; }

}  // namespace nnil
