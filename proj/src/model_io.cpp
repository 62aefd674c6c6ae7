#include "nnil/model_io.hpp"

#include <json.hpp>
#include <sstream>

#include "nnil/universal.hpp"

namespace nnil {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ModelError("malformed JSON");
    return j;
}

std::vector<std::string> string_list(const json& j, const char* key) {
    std::vector<std::string> out;
    if (!j.contains(key)) return out;
    if (!j[key].is_array()) throw ModelError(std::string("'") + key + "' must be an array");
    for (const auto& e : j[key]) {
        if (!e.is_string()) throw ModelError(std::string("'") + key + "' entries must be strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

std::vector<std::pair<WorldId, WorldId>> order_list(const json& j) {
    std::vector<std::pair<WorldId, WorldId>> out;
    if (!j.contains("order")) return out;
    if (!j["order"].is_array()) throw ModelError("'order' must be an array of pairs");
    for (const auto& e : j["order"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
            throw ModelError("'order' entries must be [from, to] pairs");
        out.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    return out;
}

}  // namespace

KripkeFrame read_frame(const std::string& json_text) {
    json j = parse_json(json_text);
    auto worlds = string_list(j, "worlds");
    if (worlds.empty()) throw ModelError("frame needs at least one world");
    return KripkeFrame(std::move(worlds), order_list(j));
}

std::string write_frame(const KripkeFrame& fr, int indent) {
    json j;
    j["worlds"] = fr.worlds();
    j["order"] = json::array();
    for (const auto& [a, b] : fr.cover_pairs()) j["order"].push_back({a, b});
    return j.dump(indent);
}

KripkeModel read_model(const std::string& json_text) {
    json j = parse_json(json_text);
    auto worlds = string_list(j, "worlds");
    if (worlds.empty()) throw ModelError("model needs at least one world");
    KripkeFrame fr(std::move(worlds), order_list(j));
    VarContext ctx(string_list(j, "vars"));
    std::vector<Bitset> val(static_cast<std::size_t>(ctx.size()), Bitset(fr.size()));
    if (j.contains("val")) {
        if (!j["val"].is_object()) throw ModelError("'val' must be an object");
        for (const auto& [name, ws] : j["val"].items()) {
            auto k = ctx.index_of(name);
            if (!k) throw ModelError("'val' mentions unknown variable '" + name + "'");
            if (!ws.is_array()) throw ModelError("'val' entries must be world arrays");
            for (const auto& w : ws) {
                if (!w.is_string()) throw ModelError("'val' entries must be world arrays");
                val[static_cast<std::size_t>(*k)].set(fr.index(w.get<std::string>()));
            }
        }
    }
    return KripkeModel(std::move(fr), std::move(ctx), std::move(val));
}

std::string write_model(const KripkeModel& m, int indent) {
    json j;
    j["vars"] = m.ctx().names();
    j["worlds"] = m.frame().worlds();
    j["order"] = json::array();
    for (const auto& [a, b] : m.frame().cover_pairs()) j["order"].push_back({a, b});
    j["val"] = json::object();
    for (int k = 0; k < m.ctx().size(); ++k) {
        json ws = json::array();
        m.val(k).for_each([&](int w) { ws.push_back(m.frame().world(w)); });
        j["val"][m.ctx().name(k)] = std::move(ws);
    }
    return j.dump(indent);
}

NodeMap read_witness(const std::string& json_text) {
    json j = parse_json(json_text);
    if (!j.is_object()) throw ModelError("witness must be a JSON object");
    NodeMap f;
    for (const auto& [a, b] : j.items()) {
        if (!b.is_string()) throw ModelError("witness values must be world ids");
        f[a] = b.get<std::string>();
    }
    return f;
}

std::string write_witness(const NodeMap& f, int indent) {
    json j = json::object();
    for (const auto& [a, b] : f) j[a] = b;
    return j.dump(indent);
}

namespace {

std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string dot_model(const KripkeModel& m, const std::string& name) {
    std::ostringstream os;
    os << "digraph " << dot_quote(name) << " {\n  rankdir=BT;\n  node [shape=box];\n";
    for (int w = 0; w < m.size(); ++w)
        os << "  " << dot_quote(m.frame().world(w)) << " [label="
           << dot_quote(m.frame().world(w) + ":" + m.color(w).to_string()) << "];\n";
    for (const auto& [a, b] : m.frame().cover_pairs())
        os << "  " << dot_quote(a) << " -> " << dot_quote(b) << ";\n";
    os << "}\n";
    return os.str();
}

std::string dot_universal(const UniversalModel& un) {
    std::ostringstream os;
    os << "digraph universal {\n  rankdir=BT;\n  compound=true;\n  node [shape=circle];\n";
    for (int i = 0; i < un.count(); ++i) {
        const Tree& t = un.node(i);
        const auto& fr = t.model().frame();
        os << "  subgraph cluster_" << i << " {\n    label=\"t" << i << " (layer "
           << un.layer_of(i) << ")\";\n";
        for (int w = 0; w < fr.size(); ++w)
            os << "    " << dot_quote("t" + std::to_string(i) + "/" + fr.world(w))
               << " [label=" << dot_quote(t.color(w).to_string()) << "];\n";
        for (const auto& [a, b] : fr.cover_pairs())
            os << "    " << dot_quote("t" + std::to_string(i) + "/" + a) << " -> "
               << dot_quote("t" + std::to_string(i) + "/" + b) << ";\n";
        os << "  }\n";
    }
    // covers of the <= order, drawn between the roots of the boxes
    for (int a = 0; a < un.count(); ++a)
        for (int b = 0; b < un.count(); ++b) {
            if (a == b || !un.leq(a, b)) continue;
            bool direct = true;
            for (int c = 0; c < un.count() && direct; ++c)
                if (c != a && c != b && un.leq(a, c) && un.leq(c, b)) direct = false;
            if (!direct) continue;
            const auto ra = "t" + std::to_string(a) + "/" +
                            un.node(a).model().frame().world(un.node(a).root());
            const auto rb = "t" + std::to_string(b) + "/" +
                            un.node(b).model().frame().world(un.node(b).root());
            os << "  " << dot_quote(ra) << " -> " << dot_quote(rb) << " [ltail=cluster_" << a
               << ", lhead=cluster_" << b << ", style=bold];\n";
        }
    os << "}\n";
    return os.str();
}

}  // namespace nnil
