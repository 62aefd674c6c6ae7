#include "nnil/fmp.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "nnil/enumeration.hpp"
#include "nnil/morphisms.hpp"

namespace nnil {

bool is_color_preserving_submodel(const KripkeModel& sub, const KripkeModel& m) {
    if (sub.ctx() != m.ctx()) throw ModelError("submodel uses a different variable context");
    for (const auto& w : sub.frame().worlds())
        if (!m.frame().has_world(w)) throw ModelError("world '" + w + "' is not part of the model");
    for (const auto& a : sub.frame().worlds())
        for (const auto& b : sub.frame().worlds())
            if (sub.frame().rel(sub.frame().index(a), sub.frame().index(b)) !=
                m.frame().rel(m.frame().index(a), m.frame().index(b)))
                throw ModelError("order is not the restriction of the model order");
    for (const auto& w : sub.frame().worlds())
        if (sub.color(w) != m.color(w))
            throw ModelError("valuation is not the restriction of the model valuation");

    for (const auto& w : sub.frame().worlds()) {
        const int wm = m.frame().index(w);
        bool ok = true;
        m.frame().above(wm).for_each([&](int u) {
            const Color cu = m.color(u);
            bool twin = false;
            for (const auto& v : sub.frame().worlds())
                if (m.frame().rel(wm, m.frame().index(v)) && m.color(m.frame().index(v)) == cu) {
                    twin = true;
                    break;
                }
            if (!twin) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

std::pair<Tree, NodeMap> depth_reduce_with_map(const Tree& t) {
    const KripkeModel& m = t.model();
    Bitset keep(m.size());
    keep.set(t.root());
    for (int w = 0; w < m.size(); ++w)
        if (w != t.root() && m.color(t.parent(w)).lt(m.color(w))) keep.set(w);
    NodeMap f;
    for (int w = 0; w < m.size(); ++w) {
        // first node on the root path with this color
        std::vector<int> path{w};
        for (int p = t.parent(w); p >= 0; p = t.parent(p)) path.push_back(p);
        int target = w;
        for (auto it = path.rbegin(); it != path.rend(); ++it)
            if (m.color(*it) == m.color(w)) {
                target = *it;
                break;
            }
        f[m.frame().world(w)] = m.frame().world(target);
    }
    return {Tree(m.restricted_to(keep)), std::move(f)};
}

Tree depth_reduce(const Tree& t) { return depth_reduce_with_map(t).first; }

namespace {

// Positional matching of isomorphic colored trees (equal codes required):
// roots correspond, children correspond in canonical order.
void tree_iso(const Tree& a, int va, const Tree& b, int vb, NodeMap& out) {
    out[a.model().frame().world(va)] = b.model().frame().world(vb);
    const auto& ca = a.children(va);
    const auto& cb = b.children(vb);
    for (std::size_t i = 0; i < ca.size(); ++i) tree_iso(a, ca[i], b, cb[i], out);
}

struct WidthReducer {
    const Tree& t;

    struct Part {
        Bitset kept;
        std::string code;
        NodeMap map;  // subtree worlds -> kept worlds
    };

    explicit WidthReducer(const Tree& t_) : t(t_) {}

    Part run(int v) {
        const KripkeModel& m = t.model();
        Part out{Bitset(m.size()), "", {}};
        out.kept.set(v);
        out.map[m.frame().world(v)] = m.frame().world(v);
        std::vector<std::pair<std::string, int>> codes;  // reduced child code, child
        std::map<int, Part> parts;
        for (int c : t.children(v)) {
            Part p = run(c);
            codes.emplace_back(p.code, c);
            parts.emplace(c, std::move(p));
        }
        std::map<std::string, int> first;  // code -> retained child
        for (const auto& [code, c] : codes) {
            auto [it, fresh] = first.emplace(code, c);
            Part& pc = parts.at(c);
            if (fresh) {
                out.kept |= pc.kept;
                for (auto& [x, y] : pc.map) out.map[x] = y;
            } else {
                // fold onto the retained twin via the canonical isomorphism
                Part& pk = parts.at(it->second);
                Tree rc(t.model().restricted_to(pc.kept));
                Tree rk(t.model().restricted_to(pk.kept));
                NodeMap iso;
                tree_iso(rc, rc.root(), rk, rk.root(), iso);
                for (auto& [x, y] : pc.map) out.map[x] = iso.at(y);
            }
        }
        std::vector<std::string> kid_codes;
        for (auto& [code, c] : first) kid_codes.push_back(code);
        std::sort(kid_codes.begin(), kid_codes.end());
        out.code = "(" + m.color(v).to_string();
        for (const auto& k : kid_codes) out.code += k;
        out.code += ")";
        return out;
    }
};

}  // namespace

std::pair<Tree, NodeMap> width_reduce_with_map(const Tree& t) {
    WidthReducer wr(t);
    auto part = wr.run(t.root());
    return {Tree(t.model().restricted_to(part.kept)), std::move(part.map)};
}

Tree width_reduce(const Tree& t) { return width_reduce_with_map(t).first; }

ReduceResult reduce(const KripkeModel& m) {
    if (!m.frame().root()) throw ModelError("model has no root");
    if (m.frame().is_tree_order()) {
        Tree t(m);
        auto [d, f] = depth_reduce_with_map(t);
        auto [w, g] = width_reduce_with_map(d);
        NodeMap total;
        for (const auto& [x, y] : f) total[x] = g.at(y);
        return {w.model(), std::move(total)};
    }
    auto [t, nat] = unravel_full(m);
    Tree reduced = width_reduce(depth_reduce(t));
    Bitset keep(m.size());
    for (const auto& w : reduced.model().frame().worlds())
        keep.set(m.frame().index(nat.at(w)));
    return {m.restricted_to(keep), std::nullopt};
}

namespace {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex8(std::uint64_t h) {
    static const char* digits = "0123456789abcdef";
    std::string s(8, '0');
    for (int i = 7; i >= 0; --i) {
        s[static_cast<std::size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return s;
}

}  // namespace

FrameNormalForm frame_normal_form(const Formula& f, const VarContext& ctx) {
    std::vector<std::string> names = ctx.names();
    auto taken = [&](const std::string& n) {
        return std::find(names.begin(), names.end(), n) != names.end();
    };
    std::unordered_map<Formula, std::pair<Formula, Formula>, FormulaHash> memo;  // f -> (s, plus)
    auto rec = [&](auto&& self, const Formula& g) -> std::pair<Formula, Formula> {
        auto it = memo.find(g);
        if (it != memo.end()) return it->second;
        std::pair<Formula, Formula> r;
        switch (g.kind()) {
            case Conn::Bot:
            case Conn::Top:
            case Conn::Var:
                r = {g, Formula::top()};
                break;
            default: {
                auto [sa, pa] = self(self, g.lhs());
                auto [sb, pb] = self(self, g.rhs());
                std::string name = "s_" + hex8(fnv1a(g.to_string(ctx)));
                while (taken(name)) name += "x";
                names.push_back(name);
                Formula s = Formula::var(static_cast<int>(names.size()) - 1);
                Formula combo = g.is(Conn::And)  ? Formula::conj(sa, sb)
                                : g.is(Conn::Or) ? Formula::disj(sa, sb)
                                                 : Formula::impl(sa, sb);
                r = {s, Formula::conj(Formula::conj(pa, pb), Formula::iff(combo, s))};
                break;
            }
        }
        memo.emplace(g, r);
        return r;
    };
    auto [s, plus] = rec(rec, f);
    return {plus, Formula::impl(plus, s), VarContext(std::move(names))};
}

namespace {

// Formula compiled to postfix over deduplicated subformulas, evaluated on
// world masks.
struct CompiledEval {
    enum class Op : std::uint8_t { Bot, Top, Var, And, Or, Impl };
    struct Step {
        Op op;
        int a = -1, b = -1;  // operand slots or variable index
    };
    std::vector<Step> steps;
    std::vector<std::uint32_t> above;
    std::uint32_t full;
    int nworlds;

    CompiledEval(const KripkeFrame& fr, const Formula& f) : nworlds(fr.size()) {
        if (fr.size() > 25) throw ResourceLimitError("mask evaluation supports at most 25 worlds");
        above.assign(static_cast<std::size_t>(fr.size()), 0);
        for (int w = 0; w < fr.size(); ++w)
            fr.above(w).for_each([&](int u) { above[static_cast<std::size_t>(w)] |= 1u << u; });
        full = fr.size() == 32 ? ~0u : (1u << fr.size()) - 1;
        std::unordered_map<Formula, int, FormulaHash> slot;
        for (const Formula& g : f.subformulas()) {
            Step st;
            switch (g.kind()) {
                case Conn::Bot: st.op = Op::Bot; break;
                case Conn::Top: st.op = Op::Top; break;
                case Conn::Var:
                    st.op = Op::Var;
                    st.a = g.var_index();
                    break;
                case Conn::And:
                case Conn::Or:
                case Conn::Impl:
                    st.op = g.is(Conn::And) ? Op::And : g.is(Conn::Or) ? Op::Or : Op::Impl;
                    st.a = slot.at(g.lhs());
                    st.b = slot.at(g.rhs());
                    break;
            }
            slot.emplace(g, static_cast<int>(steps.size()));
            steps.push_back(st);
        }
    }

    // val[k] = mask of worlds where variable k holds
    std::uint32_t run(const std::vector<std::uint32_t>& val, std::vector<std::uint32_t>& scratch) const {
        scratch.resize(steps.size());
        for (std::size_t i = 0; i < steps.size(); ++i) {
            const Step& st = steps[i];
            switch (st.op) {
                case Op::Bot: scratch[i] = 0; break;
                case Op::Top: scratch[i] = full; break;
                case Op::Var: scratch[i] = val[static_cast<std::size_t>(st.a)]; break;
                case Op::And:
                    scratch[i] = scratch[static_cast<std::size_t>(st.a)] &
                                 scratch[static_cast<std::size_t>(st.b)];
                    break;
                case Op::Or:
                    scratch[i] = scratch[static_cast<std::size_t>(st.a)] |
                                 scratch[static_cast<std::size_t>(st.b)];
                    break;
                case Op::Impl: {
                    const std::uint32_t bad = scratch[static_cast<std::size_t>(st.a)] &
                                              ~scratch[static_cast<std::size_t>(st.b)];
                    std::uint32_t r = 0;
                    for (int w = 0; w < nworlds; ++w)
                        if ((above[static_cast<std::size_t>(w)] & bad) == 0) r |= 1u << w;
                    scratch[i] = r;
                    break;
                }
            }
        }
        return scratch.back();
    }
};

// Calls fn for every persistent valuation vector; stops when fn returns
// false. Returns false iff stopped early.
bool for_each_valuation(const std::vector<std::uint32_t>& ups, int nvars,
                        const std::function<bool(const std::vector<std::uint32_t>&)>& fn) {
    std::vector<std::uint32_t> val(static_cast<std::size_t>(nvars), ups.empty() ? 0 : ups[0]);
    std::vector<std::size_t> idx(static_cast<std::size_t>(nvars), 0);
    while (true) {
        if (!fn(val)) return false;
        int k = 0;
        for (; k < nvars; ++k) {
            if (++idx[static_cast<std::size_t>(k)] < ups.size()) {
                val[static_cast<std::size_t>(k)] = ups[idx[static_cast<std::size_t>(k)]];
                break;
            }
            idx[static_cast<std::size_t>(k)] = 0;
            val[static_cast<std::size_t>(k)] = ups[0];
        }
        if (k == nvars) return true;
    }
}

}  // namespace

bool frame_valid(const KripkeFrame& fr, const Formula& f, int nvars) {
    if (nvars < f.min_vars()) throw Error("formula uses more variables than enumerated");
    const auto ups = fr.upset_masks();
    double combos = 1;
    for (int k = 0; k < nvars; ++k) combos *= static_cast<double>(ups.size());
    if (combos > 8e7) throw ResourceLimitError("valuation enumeration too large");
    CompiledEval ev(fr, f);
    std::vector<std::uint32_t> scratch;
    return for_each_valuation(ups, nvars, [&](const std::vector<std::uint32_t>& val) {
        return ev.run(val, scratch) == ev.full;
    });
}

std::optional<KripkeModel> find_countermodel(const std::vector<Formula>& axioms, const Formula& f,
                                             const VarContext& ctx, int maxWorlds) {
    if (maxWorlds < 1) throw Error("world bound must be positive");
    if (maxWorlds > 4)
        throw ResourceLimitError("exhaustive countermodel search supports at most 4 worlds");
    for (const Formula& ax : axioms)
        if (!is_nnil(ax)) throw NotNNILError("axioms must be NNIL formulas");
    for (const KripkeFrame& fr : frames_up_to_iso(maxWorlds, true)) {
        bool qualifies = true;
        for (const Formula& ax : axioms)
            if (!frame_valid(fr, ax, ax.min_vars())) {
                qualifies = false;
                break;
            }
        if (!qualifies) continue;
        const auto ups = fr.upset_masks();
        const int nv = f.min_vars();
        CompiledEval ev(fr, f);
        std::vector<std::uint32_t> scratch;
        std::optional<std::vector<std::uint32_t>> found;
        for_each_valuation(ups, nv, [&](const std::vector<std::uint32_t>& val) {
            if (ev.run(val, scratch) != ev.full) {
                found = val;
                return false;
            }
            return true;
        });
        if (found) {
            std::vector<Bitset> val(static_cast<std::size_t>(ctx.size()), Bitset(fr.size()));
            for (int k = 0; k < nv; ++k)
                for (int w = 0; w < fr.size(); ++w)
                    if (((*found)[static_cast<std::size_t>(k)] >> w) & 1u)
                        val[static_cast<std::size_t>(k)].set(w);
            return KripkeModel(fr, ctx, std::move(val));
        }
    }
    return std::nullopt;
}

}  // namespace nnil
