#include "nnil/morphisms.hpp"

#include <algorithm>
#include <numeric>

namespace nnil {

namespace {

// src world index -> dst world index, with unknown-world validation.
std::vector<int> to_index_map(const NodeMap& f, const KripkeFrame& src, const KripkeFrame& dst) {
    std::vector<int> m(static_cast<std::size_t>(src.size()), -1);
    for (const auto& [a, b] : f) m[static_cast<std::size_t>(src.index(a))] = dst.index(b);
    for (int w = 0; w < src.size(); ++w)
        if (m[static_cast<std::size_t>(w)] < 0)
            throw ModelError("map is not total: world '" + src.world(w) + "' unmapped");
    return m;
}

// Topological order of the frame: longest chain strictly below, ties by index.
std::vector<int> assignment_order(const KripkeFrame& fr) {
    std::vector<int> height(static_cast<std::size_t>(fr.size()), 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int w = 0; w < fr.size(); ++w)
            for (int c : fr.covers(w))
                if (height[static_cast<std::size_t>(c)] < height[static_cast<std::size_t>(w)] + 1) {
                    height[static_cast<std::size_t>(c)] = height[static_cast<std::size_t>(w)] + 1;
                    changed = true;
                }
    }
    std::vector<int> order(static_cast<std::size_t>(fr.size()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return height[static_cast<std::size_t>(a)] < height[static_cast<std::size_t>(b)];
    });
    return order;
}

// Dst world indices sorted by world id, the deterministic candidate order.
std::vector<int> lex_order(const KripkeFrame& fr) {
    std::vector<int> order(static_cast<std::size_t>(fr.size()));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return fr.world(a) < fr.world(b); });
    return order;
}

// Shared backtracking core for monotonic-map search. Enumerates assignments
// in deterministic order; fn receives each complete map and returns whether
// to keep searching.
void search_monotonic(const KripkeModel& src, const KripkeModel& dst,
                      const std::function<bool(const std::vector<int>&)>& fn) {
    if (src.ctx() != dst.ctx())
        throw ModelError("monotonic-map search requires a common variable context");
    const auto order = assignment_order(src.frame());
    const auto cands = lex_order(dst.frame());
    std::vector<std::uint32_t> src_color(static_cast<std::size_t>(src.size()));
    std::vector<std::uint32_t> dst_color(static_cast<std::size_t>(dst.size()));
    for (int w = 0; w < src.size(); ++w) src_color[static_cast<std::size_t>(w)] = src.color(w).bits;
    for (int w = 0; w < dst.size(); ++w) dst_color[static_cast<std::size_t>(w)] = dst.color(w).bits;
    std::vector<int> img(static_cast<std::size_t>(src.size()), -1);
    bool go = true;
    auto rec = [&](auto&& self, std::size_t pos) -> void {
        if (!go) return;
        if (pos == order.size()) {
            go = fn(img);
            return;
        }
        const int w = order[pos];
        for (int x : cands) {
            if (dst_color[static_cast<std::size_t>(x)] != src_color[static_cast<std::size_t>(w)]) continue;
            bool ok = true;
            src.frame().below(w).for_each([&](int u) {
                if (u != w && img[static_cast<std::size_t>(u)] >= 0 &&
                    !dst.frame().rel(img[static_cast<std::size_t>(u)], x))
                    ok = false;
            });
            if (!ok) continue;
            img[static_cast<std::size_t>(w)] = x;
            self(self, pos + 1);
            img[static_cast<std::size_t>(w)] = -1;
            if (!go) return;
        }
    };
    rec(rec, 0);
}

NodeMap to_node_map(const std::vector<int>& img, const KripkeFrame& src, const KripkeFrame& dst) {
    NodeMap f;
    for (int w = 0; w < src.size(); ++w)
        f[src.world(w)] = dst.world(img[static_cast<std::size_t>(w)]);
    return f;
}

}  // namespace

bool is_monotonic(const NodeMap& f, const KripkeModel& src, const KripkeModel& dst) {
    if (src.ctx() != dst.ctx()) return false;
    const auto m = to_index_map(f, src.frame(), dst.frame());
    for (int w = 0; w < src.size(); ++w)
        if (src.color(w) != dst.color(m[static_cast<std::size_t>(w)])) return false;
    for (int w = 0; w < src.size(); ++w)
        for (int u = 0; u < src.size(); ++u)
            if (src.frame().rel(w, u) &&
                !dst.frame().rel(m[static_cast<std::size_t>(w)], m[static_cast<std::size_t>(u)]))
                return false;
    return true;
}

std::optional<NodeMap> find_monotonic(const KripkeModel& src, const KripkeModel& dst) {
    std::optional<NodeMap> out;
    search_monotonic(src, dst, [&](const std::vector<int>& img) {
        out = to_node_map(img, src.frame(), dst.frame());
        return false;
    });
    return out;
}

void for_each_monotonic(const KripkeModel& src, const KripkeModel& dst,
                        const std::function<bool(const NodeMap&)>& fn) {
    search_monotonic(src, dst, [&](const std::vector<int>& img) {
        return fn(to_node_map(img, src.frame(), dst.frame()));
    });
}

std::size_t count_monotonic(const KripkeModel& src, const KripkeModel& dst) {
    std::size_t n = 0;
    search_monotonic(src, dst, [&](const std::vector<int>&) {
        ++n;
        return true;
    });
    return n;
}

bool leq(const KripkeModel& n, const KripkeModel& m) { return find_monotonic(m, n).has_value(); }

bool equiv(const KripkeModel& n, const KripkeModel& m) { return leq(n, m) && leq(m, n); }

std::optional<NodeMap> find_color_consistent(const Tree& t, const KripkeFrame& fr) {
    const KripkeModel& tm = t.model();
    const auto cands = lex_order(fr);
    std::vector<std::uint32_t> col(static_cast<std::size_t>(tm.size()));
    for (int w = 0; w < tm.size(); ++w) col[static_cast<std::size_t>(w)] = tm.color(w).bits;
    // BFS order from the root; parent precedes child.
    std::vector<int> order{t.root()};
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int c : t.children(order[i])) order.push_back(c);
    std::vector<int> img(static_cast<std::size_t>(tm.size()), -1);
    std::vector<int> assigned;  // nodes with images, in assignment order
    std::optional<NodeMap> out;
    auto rec = [&](auto&& self, std::size_t pos) -> bool {
        if (pos == order.size()) {
            out = to_node_map(img, tm.frame(), fr);
            return true;
        }
        const int w = order[pos];
        const int p = t.parent(w);
        for (int x : cands) {
            if (p >= 0 && !fr.rel(img[static_cast<std::size_t>(p)], x)) continue;
            bool ok = true;
            for (int u : assigned) {
                const int y = img[static_cast<std::size_t>(u)];
                if (fr.rel(y, x) && (col[static_cast<std::size_t>(u)] & ~col[static_cast<std::size_t>(w)]) != 0)
                    ok = false;
                if (fr.rel(x, y) && (col[static_cast<std::size_t>(w)] & ~col[static_cast<std::size_t>(u)]) != 0)
                    ok = false;
                if (!ok) break;
            }
            if (!ok) continue;
            img[static_cast<std::size_t>(w)] = x;
            assigned.push_back(w);
            if (self(self, pos + 1)) return true;
            assigned.pop_back();
            img[static_cast<std::size_t>(w)] = -1;
        }
        return false;
    };
    rec(rec, 0);
    return out;
}

KripkeModel synthesize_valuation(const NodeMap& f, const Tree& t, const KripkeFrame& fr) {
    const KripkeModel& tm = t.model();
    const auto m = to_index_map(f, tm.frame(), fr);
    for (int w = 0; w < tm.size(); ++w)
        for (int u = 0; u < tm.size(); ++u) {
            if (tm.frame().rel(w, u) &&
                !fr.rel(m[static_cast<std::size_t>(w)], m[static_cast<std::size_t>(u)]))
                throw ModelError("map is not order-preserving");
            if (fr.rel(m[static_cast<std::size_t>(w)], m[static_cast<std::size_t>(u)]) &&
                !tm.color(w).leq(tm.color(u)))
                throw ModelError("map is not color-consistent");
        }
    std::vector<Bitset> val(static_cast<std::size_t>(tm.ctx().size()), Bitset(fr.size()));
    for (int w = 0; w < tm.size(); ++w)
        for (int k = 0; k < tm.ctx().size(); ++k)
            if (tm.val(k).test(w)) val[static_cast<std::size_t>(k)] |= fr.above(m[static_cast<std::size_t>(w)]);
    return KripkeModel(fr, tm.ctx(), std::move(val));
}

bool is_pmorphism(const NodeMap& f, const KripkeModel& src, const KripkeModel& dst) {
    if (!is_monotonic(f, src, dst)) return false;
    const auto m = to_index_map(f, src.frame(), dst.frame());
    for (int w = 0; w < src.size(); ++w)
        for (int v = 0; v < dst.size(); ++v) {
            if (!dst.frame().rel(m[static_cast<std::size_t>(w)], v)) continue;
            bool hit = false;
            src.frame().above(w).for_each([&](int u) {
                if (m[static_cast<std::size_t>(u)] == v) hit = true;
            });
            if (!hit) return false;
        }
    return true;
}

}  // namespace nnil
