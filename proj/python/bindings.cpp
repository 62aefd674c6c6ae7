#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "nnil/beta.hpp"
#include "nnil/fmp.hpp"
#include "nnil/kripke.hpp"
#include "nnil/model_io.hpp"
#include "nnil/morphisms.hpp"
#include "nnil/parser.hpp"
#include "nnil/prover.hpp"
#include "nnil/universal.hpp"

namespace py = pybind11;
using namespace nnil;

namespace {

// Axioms and goal share one growing variable context.
std::pair<std::vector<Formula>, Formula> parse_sequent(const std::vector<std::string>& axioms,
                                                       const std::string& goal, VarContext& ctx) {
    std::vector<Formula> as;
    for (const auto& a : axioms) as.push_back(parse_extending(a, ctx));
    return {std::move(as), parse_extending(goal, ctx)};
}

}  // namespace

PYBIND11_MODULE(_nnil, m) {
    m.doc() = "NNIL toolbox over finite Kripke models";
    py::register_exception<Error>(m, "Error");

    m.def(
        "check",
        [](const std::string& text) {
            auto [f, ctx] = parse_auto(text);
            py::dict out;
            out["nnil"] = is_nnil(f);
            out["normal_form"] =
                is_nnil(f) ? py::cast(to_nnil_normal_form(f).to_string(ctx)) : py::none();
            return out;
        },
        py::arg("formula"));

    m.def(
        "beta",
        [](const std::string& model_json, const std::optional<std::string>& world,
           bool simplify) {
            const KripkeModel n = read_model(model_json);
            const Formula b =
                world ? beta_node(n, *world, simplify) : beta_model(n, simplify);
            return b.to_string(n.ctx());
        },
        py::arg("model"), py::arg("world") = std::nullopt, py::arg("simplify") = false);

    m.def(
        "refute",
        [](const std::string& pattern_json, const std::string& model_json)
            -> std::optional<NodeMap> {
            return refutation_witness(read_model(pattern_json), read_model(model_json));
        },
        py::arg("pattern"), py::arg("model"));

    m.def(
        "refute_on_frame",
        [](const std::string& pattern_json, const std::string& frame_json)
            -> std::optional<std::pair<NodeMap, std::string>> {
            const auto hit = frame_refutes(read_model(pattern_json), read_frame(frame_json));
            if (!hit) return std::nullopt;
            return std::pair{hit->first, write_model(hit->second)};
        },
        py::arg("pattern"), py::arg("frame"));

    m.def(
        "universal_stats",
        [](int n) {
            const UniversalModel un = generate(n);
            return un.layer_sizes();
        },
        py::arg("n"));

    m.def(
        "universal_dot", [](int n) { return dot_universal(generate(n)); }, py::arg("n"));

    m.def(
        "universal_model_json", [](int n) { return write_model(generate(n).as_model()); },
        py::arg("n"));

    m.def(
        "canonical",
        [](const std::string& model_json) {
            const Tree c = canonical_tree(Tree(read_model(model_json)));
            return write_model(c.model());
        },
        py::arg("model"));

    m.def(
        "canonical_code",
        [](const std::string& model_json) { return canonical_tree(Tree(read_model(model_json))).code(); },
        py::arg("model"));

    m.def(
        "classes", [](int n) { return count_nnil_classes(n); }, py::arg("n"));

    m.def(
        "nnil_equiv",
        [](const std::string& m1, const std::string& w1, const std::string& m2,
           const std::string& w2) {
            return nnil_equivalent(read_model(m1), w1, read_model(m2), w2);
        },
        py::arg("model1"), py::arg("world1"), py::arg("model2"), py::arg("world2"));

    m.def(
        "reduce",
        [](const std::string& model_json)
            -> std::pair<std::string, std::optional<NodeMap>> {
            const ReduceResult r = reduce(read_model(model_json));
            return {write_model(r.reduced), r.onto};
        },
        py::arg("model"));

    m.def(
        "fnf",
        [](const std::string& text) {
            auto [f, ctx] = parse_auto(text);
            const FrameNormalForm nf = frame_normal_form(f, ctx);
            py::dict out;
            out["plus"] = nf.plus.to_string(nf.extended);
            out["prime"] = nf.prime.to_string(nf.extended);
            out["vars"] = nf.extended.names();
            return out;
        },
        py::arg("formula"));

    m.def(
        "prove",
        [](const std::string& goal, const std::vector<std::string>& axioms) {
            VarContext ctx;
            auto [as, g] = parse_sequent(axioms, goal, ctx);
            return proves(as, g);
        },
        py::arg("goal"), py::arg("axioms") = std::vector<std::string>{});

    m.def(
        "countermodel",
        [](const std::string& goal, const std::vector<std::string>& axioms,
           int max_worlds) -> std::optional<std::string> {
            VarContext ctx;
            auto [as, g] = parse_sequent(axioms, goal, ctx);
            const auto found = find_countermodel(as, g, ctx, max_worlds);
            if (!found) return std::nullopt;
            return write_model(*found);
        },
        py::arg("goal"), py::arg("axioms") = std::vector<std::string>{},
        py::arg("max_worlds") = 4);

    m.def(
        "force",
        [](const std::string& model_json, const std::string& world, const std::string& text) {
            const KripkeModel mm = read_model(model_json);
            return mm.force(world, parse(text, mm.ctx()));
        },
        py::arg("model"), py::arg("world"), py::arg("formula"));

    m.def(
        "model_dot",
        [](const std::string& model_json) { return dot_model(read_model(model_json)); },
        py::arg("model"));
}
