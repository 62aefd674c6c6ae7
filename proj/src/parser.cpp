#include "nnil/parser.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "nnil/errors.hpp"

namespace nnil {

namespace {

struct Parser {
    std::string_view text;
    std::size_t pos = 0;
    std::vector<std::string> names;  // current context, possibly growing
    bool extend;

    Parser(std::string_view t, const VarContext& ctx, bool ext)
        : text(t), names(ctx.names()), extend(ext) {}

    [[noreturn]] void fail(const std::string& what, std::size_t at) const {
        throw ParseError("syntax error: " + what, at + 1);
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    bool eat_arrow() {
        skip_ws();
        if (pos + 1 < text.size() && text[pos] == '-' && text[pos + 1] == '>') {
            pos += 2;
            return true;
        }
        return false;
    }

    Formula form() { return imp(); }

    Formula imp() {
        Formula a = disjunction();
        if (eat_arrow()) return Formula::impl(std::move(a), imp());
        return a;
    }

    Formula disjunction() {
        Formula a = conjunction();
        while (eat('|')) a = Formula::disj(std::move(a), conjunction());
        return a;
    }

    Formula conjunction() {
        Formula a = negation();
        while (eat('&')) a = Formula::conj(std::move(a), negation());
        return a;
    }

    Formula negation() {
        if (eat('~')) return Formula::neg(negation());
        return atom();
    }

    Formula atom() {
        skip_ws();
        if (pos >= text.size()) fail("expected a formula", pos);
        char c = text[pos];
        if (c == '(') {
            ++pos;
            Formula f = form();
            skip_ws();
            if (!eat(')')) fail("expected ')'", pos);
            return f;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                ++pos;
            std::string id(text.substr(start, pos - start));
            if (id == "false") return Formula::bot();
            if (id == "true") return Formula::top();
            for (std::size_t i = 0; i < names.size(); ++i)
                if (names[i] == id) return Formula::var(static_cast<int>(i));
            if (!extend) fail("unknown variable '" + id + "'", start);
            names.push_back(id);
            return Formula::var(static_cast<int>(names.size()) - 1);
        }
        fail("unexpected character", pos);
    }

    Formula run() {
        Formula f = form();
        skip_ws();
        if (pos < text.size()) fail("unexpected trailing input", pos);
        return f;
    }
};

}  // namespace

Formula parse(std::string_view text, const VarContext& ctx) {
    Parser p(text, ctx, false);
    return p.run();
}

std::pair<Formula, VarContext> parse_auto(std::string_view text) {
    Parser p(text, VarContext(), true);
    Formula f = p.run();
    return {std::move(f), VarContext(std::move(p.names))};
}

Formula parse_extending(std::string_view text, VarContext& ctx) {
    Parser p(text, ctx, true);
    Formula f = p.run();
    ctx = VarContext(std::move(p.names));
    return f;
}

}  // namespace nnil
