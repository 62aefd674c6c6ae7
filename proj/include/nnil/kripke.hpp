#ifndef NNIL_KRIPKE_HPP
#define NNIL_KRIPKE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nnil/bitset.hpp"
#include "nnil/errors.hpp"
#include "nnil/formula.hpp"

namespace nnil {

using WorldId = std::string;

// Total map between world sets, serialized as a JSON object.
using NodeMap = std::map<WorldId, WorldId>;

// Bit k = truth of variable k. Pointwise partial order.
struct Color {
    int n = 0;
    std::uint32_t bits = 0;

    Color() = default;
    Color(int n_, std::uint32_t bits_) : n(n_), bits(bits_) {}

    bool test(int k) const { return (bits >> k) & 1u; }
    bool leq(const Color& o) const { return (bits & ~o.bits) == 0; }
    bool lt(const Color& o) const { return leq(o) && bits != o.bits; }
    bool operator==(const Color& o) const { return n == o.n && bits == o.bits; }
    bool operator!=(const Color& o) const { return !(*this == o); }

    // "10" = first variable true, second false.
    std::string to_string() const;
};

// Finite partial order on named worlds. Input relation may be any set of
// pairs whose reflexive-transitive closure is antisymmetric; covers are
// recovered from the closure.
class KripkeFrame {
public:
    KripkeFrame(std::vector<WorldId> worlds, const std::vector<std::pair<WorldId, WorldId>>& relation);

    int size() const { return static_cast<int>(worlds_.size()); }
    const std::vector<WorldId>& worlds() const { return worlds_; }
    const WorldId& world(int i) const { return worlds_.at(static_cast<std::size_t>(i)); }
    int index(const WorldId& w) const;
    bool has_world(const WorldId& w) const;

    bool rel(int a, int b) const { return above_[static_cast<std::size_t>(a)].test(b); }
    const Bitset& above(int w) const { return above_[static_cast<std::size_t>(w)]; }
    const Bitset& below(int w) const { return below_[static_cast<std::size_t>(w)]; }
    const std::vector<int>& covers(int w) const { return covers_[static_cast<std::size_t>(w)]; }
    const std::vector<int>& cover_preds(int w) const { return cover_preds_[static_cast<std::size_t>(w)]; }
    std::vector<std::pair<WorldId, WorldId>> cover_pairs() const;

    // Unique least element, if any.
    std::optional<int> root() const;

    // Strict predecessors of every world linearly ordered + unique minimum.
    bool is_tree_order() const;

    // Upward-closed subsets as world masks (low bit = world 0). Guarded
    // against frames too large to enumerate.
    std::vector<std::uint32_t> upset_masks() const;

    // Induced suborder on the kept worlds (ids preserved).
    KripkeFrame restricted_to(const Bitset& keep) const;

private:
    std::vector<WorldId> worlds_;
    std::map<WorldId, int> index_;
    std::vector<Bitset> above_, below_;
    std::vector<std::vector<int>> covers_, cover_preds_;
};

// Frame + persistent valuation. Immutable.
class KripkeModel {
public:
    KripkeModel(KripkeFrame frame, VarContext ctx, std::vector<Bitset> valuation);

    const KripkeFrame& frame() const { return frame_; }
    const VarContext& ctx() const { return ctx_; }
    int size() const { return frame_.size(); }
    const Bitset& val(int var) const { return val_.at(static_cast<std::size_t>(var)); }

    Color color(int w) const;
    Color color(const WorldId& w) const { return color(frame_.index(w)); }

    // Worlds forcing f, computed bottom-up over subformulas.
    Bitset eval(const Formula& f) const;
    bool force(const WorldId& w, const Formula& f) const;
    bool force(int w, const Formula& f) const;
    // True at every world.
    bool models(const Formula& f) const;

    KripkeModel generated_submodel(const WorldId& w) const;
    KripkeModel restricted_to(const Bitset& keep) const;
    std::optional<WorldId> root_id() const;

    // Same worlds, order, valuation (world names compared as sets).
    bool operator==(const KripkeModel& o) const;

private:
    KripkeFrame frame_;
    VarContext ctx_;
    std::vector<Bitset> val_;
};

// Rooted model whose strict predecessor sets are chains. Children are held
// in canonical order: by subtree code, ties by world id. Equal codes mean
// isomorphic colored subtrees.
class Tree {
public:
    explicit Tree(KripkeModel m);

    const KripkeModel& model() const { return model_; }
    int size() const { return model_.size(); }
    int root() const { return root_; }
    int parent(int v) const { return parent_.at(static_cast<std::size_t>(v)); }
    const std::vector<int>& children(int v) const { return children_.at(static_cast<std::size_t>(v)); }
    const std::string& code(int v) const { return code_.at(static_cast<std::size_t>(v)); }
    const std::string& code() const { return code_.at(static_cast<std::size_t>(root_)); }
    Color color(int v) const { return model_.color(v); }
    int depth() const;

    Tree subtree(int v) const;

    static Tree single(Color c, const VarContext& ctx);
    // Fresh root of color c below the given subtrees. World ids are
    // positional: root "r", child i's world w becomes "i/w".
    static Tree graft(Color c, const std::vector<Tree>& children, const VarContext& ctx);

    // Isomorphism of colored trees.
    bool operator==(const Tree& o) const { return code() == o.code(); }
    bool operator!=(const Tree& o) const { return !(*this == o); }

private:
    KripkeModel model_;
    int root_ = 0;
    std::vector<int> parent_;
    std::vector<std::vector<int>> children_;
    std::vector<std::string> code_;
};

// Paths over covers from the root; node ids are path ids joined with '/'.
Tree unravel(const KripkeModel& m);
// Also returns the natural map (path -> its last world).
std::pair<Tree, NodeMap> unravel_full(const KripkeModel& m);
NodeMap natural_map(const KripkeModel& m);

// Monotonic + forth condition.
bool is_pmorphism(const NodeMap& f, const KripkeModel& src, const KripkeModel& dst);

}  // namespace nnil

#endif
