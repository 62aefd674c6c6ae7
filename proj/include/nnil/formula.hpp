#ifndef NNIL_FORMULA_HPP
#define NNIL_FORMULA_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nnil/errors.hpp"

namespace nnil {

// Ordered list of distinct propositional variable names. Position k fixes
// bit k in colors.
class VarContext {
public:
    VarContext() = default;
    explicit VarContext(std::vector<std::string> names);

    // p1, ..., pn
    static VarContext numbered(int n);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<int> index_of(std::string_view name) const;

    // New context with extra names appended (uniqueness re-validated).
    VarContext extended(const std::vector<std::string>& extra) const;

    bool operator==(const VarContext& o) const { return names_ == o.names_; }
    bool operator!=(const VarContext& o) const { return !(*this == o); }

private:
    std::vector<std::string> names_;
};

enum class Conn : std::uint8_t { Bot, Top, Var, And, Or, Impl };

// Immutable IPC formula over variable indices. Shared subterms are cheap to
// copy; equality is structural. Top is primitive and prints "true", but
// evaluates exactly like false -> false.
class Formula {
public:
    Formula() : Formula(bot()) {}

    static Formula bot();
    static Formula top();
    static Formula var(int index);
    static Formula conj(Formula a, Formula b);
    static Formula disj(Formula a, Formula b);
    static Formula impl(Formula a, Formula b);
    static Formula neg(Formula a) { return impl(std::move(a), bot()); }
    static Formula iff(Formula a, Formula b);

    // Left-assoc folds; empty conjunction is Top, empty disjunction Bot.
    static Formula conj_all(const std::vector<Formula>& fs);
    static Formula disj_all(const std::vector<Formula>& fs);

    Conn kind() const;
    bool is(Conn k) const { return kind() == k; }
    int var_index() const;
    const Formula& lhs() const;
    const Formula& rhs() const;

    bool operator==(const Formula& o) const;
    bool operator!=(const Formula& o) const { return !(*this == o); }

    std::size_t hash() const;
    // Smallest context size the formula fits in (max var index + 1).
    int min_vars() const;
    int depth() const;
    int size() const;

    std::string to_string(const VarContext& ctx) const;

    // Subformulas in post-order, deduplicated structurally.
    std::vector<Formula> subformulas() const;

private:
    struct Node;

    explicit Formula(std::nullptr_t) : node_(nullptr) {}
    explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    static Formula make(Conn k, int var, Formula a, Formula b);

    std::shared_ptr<const Node> node_;

    friend struct FormulaHash;
};

struct Formula::Node {
    Conn kind;
    int var = -1;
    Formula lhs, rhs;
    std::size_t hash = 0;
    int min_vars = 0;
    int depth = 1;
    int size = 1;
    explicit Node(Conn k) : kind(k), lhs(nullptr), rhs(nullptr) {}
};

inline Conn Formula::kind() const { return node_->kind; }
inline int Formula::var_index() const { return node_->var; }
inline const Formula& Formula::lhs() const { return node_->lhs; }
inline const Formula& Formula::rhs() const { return node_->rhs; }
inline std::size_t Formula::hash() const { return node_->hash; }
inline int Formula::min_vars() const { return node_->min_vars; }
inline int Formula::depth() const { return node_->depth; }
inline int Formula::size() const { return node_->size; }

struct FormulaHash {
    std::size_t operator()(const Formula& f) const { return f.hash(); }
};

// No implication occurs in the left child of any implication.
bool is_nnil(const Formula& f);

// Recognizer for the normal-form grammar bot | top | p | f&f | f|f | p->f.
bool is_nnil_normal_form(const Formula& f);

// Rewrites a NNIL formula into normal form:
//   (a&b)->c   =>  a->(b->c)
//   (a|b)->c   =>  (a->c)&(b->c)
//   false->c   =>  true
//   true->c    =>  c
// Throws NotNNILError if the input is not NNIL.
Formula to_nnil_normal_form(const Formula& f);

}  // namespace nnil

#endif
