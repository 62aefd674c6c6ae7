#ifndef NNIL_TESTS_HELPERS_HPP
#define NNIL_TESTS_HELPERS_HPP

#include <string>
#include <vector>

#include "nnil/kripke.hpp"
#include "nnil/model_io.hpp"

namespace nnil::test {

// "10" = first variable true, second false.
inline Color col(const std::string& s) {
    std::uint32_t bits = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] == '1') bits |= 1u << i;
    return Color(static_cast<int>(s.size()), bits);
}

inline KripkeModel mk(const std::string& json) { return read_model(json); }

// w1 -> w2 -> ... with the given color strings (all the same width).
inline KripkeModel chain(const std::vector<std::string>& colors) {
    const int n = static_cast<int>(colors.at(0).size());
    std::vector<WorldId> worlds;
    std::vector<std::pair<WorldId, WorldId>> rel;
    for (std::size_t i = 0; i < colors.size(); ++i) {
        worlds.push_back("w" + std::to_string(i + 1));
        if (i > 0) rel.emplace_back(worlds[i - 1], worlds[i]);
    }
    std::vector<Bitset> val(static_cast<std::size_t>(n), Bitset(static_cast<int>(colors.size())));
    for (std::size_t i = 0; i < colors.size(); ++i)
        for (int k = 0; k < n; ++k)
            if (colors[i][static_cast<std::size_t>(k)] == '1') val[static_cast<std::size_t>(k)].set(static_cast<int>(i));
    return KripkeModel(KripkeFrame(std::move(worlds), rel), VarContext::numbered(n), std::move(val));
}

inline KripkeModel single(const std::string& color) { return chain({color}); }

// r below a and b, both below t.
inline KripkeModel diamond(const std::string& r, const std::string& a, const std::string& b,
                           const std::string& t) {
    const int n = static_cast<int>(r.size());
    std::vector<WorldId> worlds{"r", "a", "b", "t"};
    std::vector<std::pair<WorldId, WorldId>> rel{{"r", "a"}, {"r", "b"}, {"a", "t"}, {"b", "t"}};
    std::vector<std::string> colors{r, a, b, t};
    std::vector<Bitset> val(static_cast<std::size_t>(n), Bitset(4));
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < n; ++k)
            if (colors[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] == '1')
                val[static_cast<std::size_t>(k)].set(i);
    return KripkeModel(KripkeFrame(std::move(worlds), rel), VarContext::numbered(n), std::move(val));
}

}  // namespace nnil::test

#endif
