#ifndef NNIL_UNIVERSAL_HPP
#define NNIL_UNIVERSAL_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "nnil/kripke.hpp"

namespace nnil {

struct GenerationLimits {
    std::size_t max_nodes = 20000;
    // antichain extensions examined during one layer
    std::size_t max_work = 4000000;
};

// The n-universal model over NNIL: nodes are canonical trees, ordered by
// T_v <= T_w iff T_w maps monotonically into T_v. Layer m holds the trees of
// depth m; depth never exceeds n+1.
class UniversalModel {
public:
    const VarContext& ctx() const { return ctx_; }
    int count() const { return static_cast<int>(nodes_.size()); }
    const Tree& node(int i) const { return nodes_.at(static_cast<std::size_t>(i)); }
    int layer_of(int i) const { return layer_.at(static_cast<std::size_t>(i)); }
    int layers() const;
    std::vector<int> layer_sizes() const;

    bool leq(int a, int b) const { return leq_[static_cast<std::size_t>(a)].test(b); }
    // Index of the <=-least node (the universal n-tree).
    int root() const;
    // Node with the given canonical code, or -1.
    int find(const std::string& code) const;
    int find(const Tree& t) const { return find(t.code()); }

    // {v : T_v <= T_w}; inclusion of these sets mirrors <=.
    Bitset theory(int w) const;
    // {v : T_w <= T_v}.
    Bitset upset(int w) const;

    // T(n) as one Kripke model: worlds "t0".."tk" under <=, variable k true
    // where the root color has bit k.
    const KripkeModel& as_model() const { return *model_; }

private:
    friend UniversalModel generate(int n, const GenerationLimits& limits);
    VarContext ctx_;
    std::vector<Tree> nodes_;
    std::vector<int> layer_;
    std::vector<Bitset> leq_;
    std::shared_ptr<const KripkeModel> model_;
};

// Layered construction: layer 1 = the 2^n single-node colors; layer m+1 =
// fresh roots of color c below every <=-antichain X of earlier trees that
// contains a layer-m tree, where c is strictly below every color occurring
// in X. Deterministic: nodes sorted by canonical code inside each layer.
UniversalModel generate(int n, const GenerationLimits& limits = {});

// Unraveling of the n-color poset from 0...0; equals the <=-least node of
// generate(n).
Tree universal_tree(int n);

// The unique node of T(n) equivalent to t (with n = context width):
// recursively canonicalize the minimal differing-color subtrees, keep the
// <=-minimal results deduplicated by code, and regraft under the old root
// color.
Tree canonical_tree(const Tree& t);

// Number of upsets of generate(n)'s order = number of NNIL_n classes.
long long count_nnil_classes(int n);

// Verifies that T_w -> Th(T_w) is an isomorphism onto the inclusion order
// of the beta-plus-generated theories: injective, surjective, color
// preserving, and order preserving both ways.
bool check_canonical_iso(int n);

}  // namespace nnil

#endif
