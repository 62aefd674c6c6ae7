#include "nnil/prover.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace nnil {

namespace {

int cmp(const Formula& a, const Formula& b) {
    if (a == b) return 0;
    if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
    switch (a.kind()) {
        case Conn::Bot:
        case Conn::Top:
            return 0;
        case Conn::Var:
            return a.var_index() < b.var_index() ? -1 : 1;
        default: {
            const int l = cmp(a.lhs(), b.lhs());
            return l != 0 ? l : cmp(a.rhs(), b.rhs());
        }
    }
}

bool less(const Formula& a, const Formula& b) { return cmp(a, b) < 0; }

// Antecedent as a sorted set; duplicates carry no proof strength here.
using Ctx = std::vector<Formula>;

bool contains(const Ctx& g, const Formula& f) {
    return std::binary_search(g.begin(), g.end(), f, less);
}

Ctx with(Ctx g, const Formula& f) {
    auto it = std::lower_bound(g.begin(), g.end(), f, less);
    if (it == g.end() || !(*it == f)) g.insert(it, f);
    return g;
}

Ctx without(Ctx g, const Formula& f) {
    auto it = std::lower_bound(g.begin(), g.end(), f, less);
    if (it != g.end() && *it == f) g.erase(it);
    return g;
}

void serialize(const Formula& f, std::string& out) {
    switch (f.kind()) {
        case Conn::Bot: out += 'B'; return;
        case Conn::Top: out += 'T'; return;
        case Conn::Var:
            out += 'v';
            out += std::to_string(f.var_index());
            return;
        case Conn::And: out += 'A'; break;
        case Conn::Or: out += 'O'; break;
        case Conn::Impl: out += 'I'; break;
    }
    out += '(';
    serialize(f.lhs(), out);
    out += ',';
    serialize(f.rhs(), out);
    out += ')';
}

struct Search {
    std::unordered_map<std::string, bool> memo;

    bool prove(const Ctx& gamma, const Formula& goal) {
        if (goal.is(Conn::Top)) return true;
        if (contains(gamma, Formula::bot())) return true;
        if (contains(gamma, goal)) return true;

        std::string key;
        for (const Formula& f : gamma) {
            serialize(f, key);
            key += ';';
        }
        key += '>';
        serialize(goal, key);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        const bool r = step(gamma, goal);
        memo.emplace(std::move(key), r);
        return r;
    }

    bool step(const Ctx& gamma, const Formula& goal) {
        // Non-branching invertible left rules first.
        for (const Formula& f : gamma) {
            switch (f.kind()) {
                case Conn::Top:
                    return prove(without(gamma, f), goal);
                case Conn::And:
                    return prove(with(with(without(gamma, f), f.lhs()), f.rhs()), goal);
                case Conn::Impl: {
                    const Formula& a = f.lhs();
                    if (a.is(Conn::Top)) return prove(with(without(gamma, f), f.rhs()), goal);
                    if (a.is(Conn::Bot)) return prove(without(gamma, f), goal);
                    if (a.is(Conn::And))
                        return prove(
                            with(without(gamma, f),
                                 Formula::impl(a.lhs(), Formula::impl(a.rhs(), f.rhs()))),
                            goal);
                    if (a.is(Conn::Or))
                        return prove(with(with(without(gamma, f), Formula::impl(a.lhs(), f.rhs())),
                                          Formula::impl(a.rhs(), f.rhs())),
                                     goal);
                    if (a.is(Conn::Var) && contains(gamma, a))
                        return prove(with(without(gamma, f), f.rhs()), goal);
                    break;
                }
                default:
                    break;
            }
        }
        // Branching invertible left rule.
        for (const Formula& f : gamma)
            if (f.is(Conn::Or)) {
                const Ctx rest = without(gamma, f);
                return prove(with(rest, f.lhs()), goal) && prove(with(rest, f.rhs()), goal);
            }
        // Invertible right rules.
        if (goal.is(Conn::And)) return prove(gamma, goal.lhs()) && prove(gamma, goal.rhs());
        if (goal.is(Conn::Impl)) return prove(with(gamma, goal.lhs()), goal.rhs());
        // Backtracking phase: right disjunction, then nested left implications.
        if (goal.is(Conn::Or) && (prove(gamma, goal.lhs()) || prove(gamma, goal.rhs())))
            return true;
        for (const Formula& f : gamma) {
            if (!f.is(Conn::Impl) || !f.lhs().is(Conn::Impl)) continue;
            const Formula& cd = f.lhs();
            const Ctx rest = without(gamma, f);
            if (prove(with(rest, Formula::impl(cd.rhs(), f.rhs())), cd) &&
                prove(with(rest, f.rhs()), goal))
                return true;
        }
        return false;
    }
};

}  // namespace

bool proves(const std::vector<Formula>& assumptions, const Formula& goal) {
    Ctx gamma;
    for (const Formula& f : assumptions) gamma = with(std::move(gamma), f);
    Search s;
    return s.prove(gamma, goal);
}

bool equivalent(const Formula& f, const Formula& g) {
    return proves({}, Formula::iff(f, g));
}

}  // namespace nnil
