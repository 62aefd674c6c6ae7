#include "nnil/enumeration.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace nnil {

namespace {

// Strict-order adjacency matrix as row-major bools.
using Mat = std::vector<bool>;

bool get(const Mat& m, int k, int i, int j) { return m[static_cast<std::size_t>(i * k + j)]; }

std::string perm_min_code(const Mat& m, int k, const std::vector<std::string>* extra_rows) {
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        std::string code;
        code.reserve(static_cast<std::size_t>(k * k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                code += get(m, k, perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)])
                            ? '1'
                            : '0';
        if (extra_rows)
            for (const auto& row : *extra_rows) {
                code += '|';
                for (int i = 0; i < k; ++i) code += row[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
            }
        if (best.empty() || code < best) best = std::move(code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

KripkeFrame frame_from(const Mat& m, int k) {
    std::vector<WorldId> worlds;
    for (int i = 0; i < k; ++i) worlds.push_back("w" + std::to_string(i));
    std::vector<std::pair<WorldId, WorldId>> rel;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (get(m, k, i, j)) rel.emplace_back(worlds[static_cast<std::size_t>(i)],
                                                  worlds[static_cast<std::size_t>(j)]);
    return KripkeFrame(std::move(worlds), rel);
}

}  // namespace

std::vector<KripkeFrame> frames_up_to_iso(int maxWorlds, bool rooted_only) {
    if (maxWorlds < 1) throw Error("world bound must be positive");
    if (maxWorlds > 5) throw ResourceLimitError("frame enumeration supports at most 5 worlds");
    std::vector<KripkeFrame> out;
    for (int k = 1; k <= maxWorlds; ++k) {
        // ordered pairs (i, j) with i != j
        std::vector<std::pair<int, int>> slots;
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                if (i != j) slots.emplace_back(i, j);
        std::map<std::string, Mat> found;
        const std::uint64_t limit = 1ull << slots.size();
        for (std::uint64_t bits = 0; bits < limit; ++bits) {
            Mat m(static_cast<std::size_t>(k * k), false);
            for (std::size_t s = 0; s < slots.size(); ++s)
                if ((bits >> s) & 1ull)
                    m[static_cast<std::size_t>(slots[s].first * k + slots[s].second)] = true;
            bool ok = true;
            for (int i = 0; i < k && ok; ++i)
                for (int j = 0; j < k && ok; ++j) {
                    if (!get(m, k, i, j)) continue;
                    if (get(m, k, j, i)) {
                        ok = false;
                        break;
                    }
                    for (int l = 0; l < k; ++l)
                        if (get(m, k, j, l) && l != i && !get(m, k, i, l)) {
                            ok = false;
                            break;
                        }
                }
            if (!ok) continue;
            if (rooted_only) {
                bool rooted = false;
                for (int i = 0; i < k && !rooted; ++i) {
                    bool least = true;
                    for (int j = 0; j < k; ++j)
                        if (j != i && !get(m, k, i, j)) least = false;
                    rooted = least;
                }
                if (!rooted) continue;
            }
            found.emplace(perm_min_code(m, k, nullptr), std::move(m));
        }
        for (const auto& [code, m] : found) out.push_back(frame_from(m, k));
    }
    return out;
}

void for_each_model(const KripkeFrame& fr, int nvars,
                    const std::function<bool(const KripkeModel&)>& fn) {
    const auto ups = fr.upset_masks();
    std::vector<std::size_t> idx(static_cast<std::size_t>(nvars), 0);
    while (true) {
        std::vector<Bitset> val(static_cast<std::size_t>(nvars), Bitset(fr.size()));
        for (int s = 0; s < nvars; ++s)
            for (int w = 0; w < fr.size(); ++w)
                if ((ups[idx[static_cast<std::size_t>(s)]] >> w) & 1u)
                    val[static_cast<std::size_t>(s)].set(w);
        if (!fn(KripkeModel(fr, VarContext::numbered(nvars), std::move(val)))) return;
        int k = 0;
        for (; k < nvars; ++k) {
            if (++idx[static_cast<std::size_t>(k)] < ups.size()) break;
            idx[static_cast<std::size_t>(k)] = 0;
        }
        if (k == nvars) return;
    }
}

std::string model_canonical_code(const KripkeModel& m) {
    const int k = m.size();
    Mat rel(static_cast<std::size_t>(k * k), false);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j && m.frame().rel(i, j)) rel[static_cast<std::size_t>(i * k + j)] = true;
    std::vector<std::string> rows;
    for (int v = 0; v < m.ctx().size(); ++v) {
        std::string row(static_cast<std::size_t>(k), '0');
        m.val(v).for_each([&](int w) { row[static_cast<std::size_t>(w)] = '1'; });
        rows.push_back(std::move(row));
    }
    return std::to_string(k) + ":" + perm_min_code(rel, k, &rows);
}

std::vector<KripkeModel> models_up_to_iso(int maxWorlds, int nvars, bool rooted_only) {
    std::vector<KripkeModel> out;
    std::set<std::string> seen;
    for (const KripkeFrame& fr : frames_up_to_iso(maxWorlds, rooted_only))
        for_each_model(fr, nvars, [&](const KripkeModel& m) {
            if (seen.insert(model_canonical_code(m)).second) out.push_back(m);
            return true;
        });
    return out;
}

Tree random_tree(std::mt19937& rng, int max_nodes, int nvars) {
    const std::uint32_t ncolors = 1u << nvars;
    const int size = 1 + static_cast<int>(rng() % static_cast<std::uint32_t>(max_nodes));
    std::vector<std::uint32_t> color{static_cast<std::uint32_t>(rng() % ncolors)};
    std::vector<int> parent{-1};
    for (int v = 1; v < size; ++v) {
        const int p = static_cast<int>(rng() % static_cast<std::uint32_t>(v));
        parent.push_back(p);
        color.push_back(color[static_cast<std::size_t>(p)] | rng() % ncolors);
    }
    std::vector<WorldId> worlds;
    std::vector<std::pair<WorldId, WorldId>> rel;
    for (int v = 0; v < size; ++v) worlds.push_back("n" + std::to_string(v));
    for (int v = 1; v < size; ++v)
        rel.emplace_back(worlds[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])],
                         worlds[static_cast<std::size_t>(v)]);
    KripkeFrame fr(worlds, rel);
    std::vector<Bitset> val(static_cast<std::size_t>(nvars), Bitset(fr.size()));
    for (int v = 0; v < size; ++v)
        for (int s = 0; s < nvars; ++s)
            if ((color[static_cast<std::size_t>(v)] >> s) & 1u) val[static_cast<std::size_t>(s)].set(v);
    return Tree(KripkeModel(std::move(fr), VarContext::numbered(nvars), std::move(val)));
}

KripkeModel random_rooted_model(std::mt19937& rng, int max_worlds, int nvars) {
    const int k = 1 + static_cast<int>(rng() % static_cast<std::uint32_t>(max_worlds));
    std::vector<WorldId> worlds;
    for (int i = 0; i < k; ++i) worlds.push_back("w" + std::to_string(i));
    std::vector<std::pair<WorldId, WorldId>> rel;
    for (int j = 1; j < k; ++j) rel.emplace_back(worlds[0], worlds[static_cast<std::size_t>(j)]);
    for (int i = 1; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (rng() % 100 < 35) rel.emplace_back(worlds[static_cast<std::size_t>(i)],
                                                   worlds[static_cast<std::size_t>(j)]);
    KripkeFrame fr(worlds, rel);
    std::vector<Bitset> val(static_cast<std::size_t>(nvars), Bitset(fr.size()));
    for (int s = 0; s < nvars; ++s)
        for (int w = 0; w < k; ++w)
            if (rng() % 100 < 30) val[static_cast<std::size_t>(s)] |= fr.above(w);
    return KripkeModel(std::move(fr), VarContext::numbered(nvars), std::move(val));
}

Formula random_formula(std::mt19937& rng, int nvars, int max_depth) {
    if (max_depth <= 1) {
        const std::uint32_t roll = rng() % 10;
        if (roll < 7) return Formula::var(static_cast<int>(rng() % static_cast<std::uint32_t>(nvars)));
        return roll < 9 ? Formula::bot() : Formula::top();
    }
    const std::uint32_t roll = rng() % 20;
    if (roll < 5) return Formula::var(static_cast<int>(rng() % static_cast<std::uint32_t>(nvars)));
    if (roll < 6) return roll % 2 ? Formula::bot() : Formula::top();
    Formula a = random_formula(rng, nvars, max_depth - 1);
    Formula b = random_formula(rng, nvars, max_depth - 1);
    if (roll < 10) return Formula::conj(std::move(a), std::move(b));
    if (roll < 14) return Formula::disj(std::move(a), std::move(b));
    return Formula::impl(std::move(a), std::move(b));
}

}  // namespace nnil
