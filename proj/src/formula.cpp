#include "nnil/formula.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace nnil {

namespace {

bool valid_ident(std::string_view s) {
    if (s.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return s != "false" && s != "true";
}

std::size_t mix(std::size_t a, std::size_t b) {
    // boost::hash_combine flavor
    a ^= b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2);
    return a;
}

}  // namespace

VarContext::VarContext(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (!valid_ident(names_[i])) throw Error("invalid variable name: '" + names_[i] + "'");
        for (std::size_t j = i + 1; j < names_.size(); ++j)
            if (names_[i] == names_[j]) throw Error("duplicate variable name: '" + names_[i] + "'");
    }
}

VarContext VarContext::numbered(int n) {
    if (n < 0) throw Error("negative variable count");
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) names.push_back("p" + std::to_string(i));
    return VarContext(std::move(names));
}

std::optional<int> VarContext::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i);
    return std::nullopt;
}

VarContext VarContext::extended(const std::vector<std::string>& extra) const {
    std::vector<std::string> all = names_;
    all.insert(all.end(), extra.begin(), extra.end());
    return VarContext(std::move(all));
}

Formula Formula::make(Conn k, int var, Formula a, Formula b) {
    auto n = std::make_shared<Node>(k);
    n->var = var;
    std::size_t h = mix(0x517cc1b727220a95ULL, static_cast<std::size_t>(k));
    switch (k) {
        case Conn::Bot:
        case Conn::Top:
            break;
        case Conn::Var:
            h = mix(h, static_cast<std::size_t>(var));
            n->min_vars = var + 1;
            break;
        default:
            h = mix(h, a.hash());
            h = mix(h, b.hash());
            n->min_vars = std::max(a.min_vars(), b.min_vars());
            n->depth = 1 + std::max(a.depth(), b.depth());
            n->size = 1 + a.size() + b.size();
            n->lhs = std::move(a);
            n->rhs = std::move(b);
            break;
    }
    n->hash = h;
    return Formula(std::shared_ptr<const Node>(std::move(n)));
}

Formula Formula::bot() {
    static const Formula f = make(Conn::Bot, -1, Formula(nullptr), Formula(nullptr));
    return f;
}

Formula Formula::top() {
    static const Formula f = make(Conn::Top, -1, Formula(nullptr), Formula(nullptr));
    return f;
}

Formula Formula::var(int index) {
    if (index < 0) throw Error("negative variable index");
    return make(Conn::Var, index, Formula(nullptr), Formula(nullptr));
}

Formula Formula::conj(Formula a, Formula b) { return make(Conn::And, -1, std::move(a), std::move(b)); }
Formula Formula::disj(Formula a, Formula b) { return make(Conn::Or, -1, std::move(a), std::move(b)); }
Formula Formula::impl(Formula a, Formula b) { return make(Conn::Impl, -1, std::move(a), std::move(b)); }

Formula Formula::iff(Formula a, Formula b) { return conj(impl(a, b), impl(b, a)); }

Formula Formula::conj_all(const std::vector<Formula>& fs) {
    if (fs.empty()) return top();
    Formula acc = fs.front();
    for (std::size_t i = 1; i < fs.size(); ++i) acc = conj(std::move(acc), fs[i]);
    return acc;
}

Formula Formula::disj_all(const std::vector<Formula>& fs) {
    if (fs.empty()) return bot();
    Formula acc = fs.front();
    for (std::size_t i = 1; i < fs.size(); ++i) acc = disj(std::move(acc), fs[i]);
    return acc;
}

bool Formula::operator==(const Formula& o) const {
    if (node_ == o.node_) return true;
    if (!node_ || !o.node_) return false;
    if (node_->hash != o.node_->hash || node_->kind != o.node_->kind) return false;
    switch (node_->kind) {
        case Conn::Bot:
        case Conn::Top:
            return true;
        case Conn::Var:
            return node_->var == o.node_->var;
        default:
            return node_->lhs == o.node_->lhs && node_->rhs == o.node_->rhs;
    }
}

namespace {

// Precedence levels matching the grammar: imp < or < and < neg/atom.
enum Level : int { kImp = 0, kOr = 1, kAnd = 2, kNeg = 3 };

void print_rec(const Formula& f, const VarContext& ctx, int min_level, std::string& out) {
    auto wrap = [&](int own, auto&& body) {
        bool parens = own < min_level;
        if (parens) out += '(';
        body();
        if (parens) out += ')';
    };
    switch (f.kind()) {
        case Conn::Bot:
            out += "false";
            return;
        case Conn::Top:
            out += "true";
            return;
        case Conn::Var: {
            int i = f.var_index();
            if (i >= ctx.size()) throw Error("variable index " + std::to_string(i) + " outside context");
            out += ctx.name(i);
            return;
        }
        case Conn::And:
            wrap(kAnd, [&] {
                print_rec(f.lhs(), ctx, kAnd, out);
                out += " & ";
                print_rec(f.rhs(), ctx, kNeg, out);
            });
            return;
        case Conn::Or:
            wrap(kOr, [&] {
                print_rec(f.lhs(), ctx, kOr, out);
                out += " | ";
                print_rec(f.rhs(), ctx, kAnd, out);
            });
            return;
        case Conn::Impl:
            if (f.rhs().is(Conn::Bot)) {
                // negation sugar
                out += '~';
                print_rec(f.lhs(), ctx, kNeg, out);
                return;
            }
            wrap(kImp, [&] {
                print_rec(f.lhs(), ctx, kOr, out);
                out += " -> ";
                print_rec(f.rhs(), ctx, kImp, out);
            });
            return;
    }
}

}  // namespace

std::string Formula::to_string(const VarContext& ctx) const {
    std::string out;
    print_rec(*this, ctx, kImp, out);
    return out;
}

std::vector<Formula> Formula::subformulas() const {
    // Post-order, structurally deduplicated.
    std::vector<Formula> out;
    std::vector<std::pair<Formula, bool>> work{{*this, false}};
    while (!work.empty()) {
        auto [f, expanded] = work.back();
        work.pop_back();
        if (expanded) {
            if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
            continue;
        }
        work.push_back({f, true});
        if (f.is(Conn::And) || f.is(Conn::Or) || f.is(Conn::Impl)) {
            work.push_back({f.rhs(), false});
            work.push_back({f.lhs(), false});
        }
    }
    return out;
}

bool is_nnil(const Formula& f) {
    switch (f.kind()) {
        case Conn::Bot:
        case Conn::Top:
        case Conn::Var:
            return true;
        case Conn::And:
        case Conn::Or:
            return is_nnil(f.lhs()) && is_nnil(f.rhs());
        case Conn::Impl: {
            // Left side may not contain any implication at all.
            const Formula& a = f.lhs();
            std::vector<Formula> stack{a};
            while (!stack.empty()) {
                Formula g = stack.back();
                stack.pop_back();
                if (g.is(Conn::Impl)) return false;
                if (g.is(Conn::And) || g.is(Conn::Or)) {
                    stack.push_back(g.lhs());
                    stack.push_back(g.rhs());
                }
            }
            return is_nnil(f.rhs());
        }
    }
    return false;
}

bool is_nnil_normal_form(const Formula& f) {
    switch (f.kind()) {
        case Conn::Bot:
        case Conn::Top:
        case Conn::Var:
            return true;
        case Conn::And:
        case Conn::Or:
            return is_nnil_normal_form(f.lhs()) && is_nnil_normal_form(f.rhs());
        case Conn::Impl:
            return f.lhs().is(Conn::Var) && is_nnil_normal_form(f.rhs());
    }
    return false;
}

namespace {

// a is implication-free; result is in normal form when c is.
Formula nf_impl(const Formula& a, const Formula& c) {
    switch (a.kind()) {
        case Conn::Var:
            return Formula::impl(a, c);
        case Conn::Bot:
            return Formula::top();
        case Conn::Top:
            return c;
        case Conn::And:
            return nf_impl(a.lhs(), nf_impl(a.rhs(), c));
        case Conn::Or:
            return Formula::conj(nf_impl(a.lhs(), c), nf_impl(a.rhs(), c));
        case Conn::Impl:
            throw NotNNILError("implication nested to the left");
    }
    throw NotNNILError("implication nested to the left");
}

Formula nf_rec(const Formula& f) {
    switch (f.kind()) {
        case Conn::Bot:
        case Conn::Top:
        case Conn::Var:
            return f;
        case Conn::And:
            return Formula::conj(nf_rec(f.lhs()), nf_rec(f.rhs()));
        case Conn::Or:
            return Formula::disj(nf_rec(f.lhs()), nf_rec(f.rhs()));
        case Conn::Impl:
            return nf_impl(f.lhs(), nf_rec(f.rhs()));
    }
    throw Error("unreachable");
}

}  // namespace

Formula to_nnil_normal_form(const Formula& f) {
    if (!is_nnil(f)) throw NotNNILError("not a NNIL formula: implication occurs under the left of an implication");
    return nf_rec(f);
}

}  // namespace nnil
