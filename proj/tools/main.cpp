#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "nnil/beta.hpp"
#include "nnil/fmp.hpp"
#include "nnil/model_io.hpp"
#include "nnil/morphisms.hpp"
#include "nnil/parser.hpp"
#include "nnil/prover.hpp"
#include "nnil/selftest.hpp"
#include "nnil/universal.hpp"

namespace {

using nnil::Formula;
using nnil::KripkeModel;
using nnil::VarContext;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw nnil::Error("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spit(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw nnil::Error("cannot write file: " + path);
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
}

KripkeModel load_model(const std::string& path) { return nnil::read_model(slurp(path)); }

// User context padded with fresh standin names up to n variables, so the
// result of an index-level computation can always be printed.
VarContext padded(const VarContext& ctx, int n) {
    std::vector<std::string> names = ctx.names();
    while (static_cast<int>(names.size()) < n) {
        std::string cand = "p" + std::to_string(names.size() + 1);
        while (std::find(names.begin(), names.end(), cand) != names.end()) cand += "_";
        names.push_back(cand);
    }
    return VarContext(std::move(names));
}

int cmd_check(const std::string& text) {
    auto [f, ctx] = nnil::parse_auto(text);
    if (!nnil::is_nnil(f)) {
        std::cout << "NNIL: no\n";
        return 1;
    }
    std::cout << "NNIL: yes; normal form: " << nnil::to_nnil_normal_form(f).to_string(ctx)
              << "\n";
    return 0;
}

int cmd_beta(const std::string& in, const std::string& world, bool simplify) {
    const KripkeModel m = load_model(in);
    const Formula b =
        world.empty() ? nnil::beta_model(m, simplify) : nnil::beta_node(m, world, simplify);
    std::cout << b.to_string(m.ctx()) << "\n";
    return 0;
}

int cmd_refute(const std::string& n_path, const std::string& m_path,
               const std::string& frame_path, const std::string& out) {
    const KripkeModel n = load_model(n_path);
    nlohmann::json doc;
    bool found = false;
    if (!m_path.empty()) {
        const KripkeModel m = load_model(m_path);
        if (auto wit = nnil::refutation_witness(n, m)) {
            found = true;
            doc = nlohmann::json::parse(nnil::write_witness(*wit));
        }
    } else {
        const nnil::KripkeFrame fr = nnil::read_frame(slurp(frame_path));
        if (auto wit = nnil::frame_refutes(n, fr)) {
            found = true;
            doc["map"] = nlohmann::json::parse(nnil::write_witness(wit->first));
            doc["model"] = nlohmann::json::parse(nnil::write_model(wit->second));
        }
    }
    if (!found) {
        std::cout << "no witness\n";
        return 1;
    }
    const std::string text = doc.dump(2);
    std::cout << text << "\n";
    if (!out.empty()) spit(out, text);
    return 0;
}

int cmd_universal(int n, bool stats, const std::string& dot_path, const std::string& json_path,
                  const nnil::GenerationLimits& limits) {
    const nnil::UniversalModel un = nnil::generate(n, limits);
    (void)stats;  // the stats line is the default output
    std::cout << "layers:";
    for (int s : un.layer_sizes()) std::cout << " " << s;
    std::cout << ", total " << un.count() << "\n";
    if (!dot_path.empty()) spit(dot_path, nnil::dot_universal(un));
    if (!json_path.empty()) spit(json_path, nnil::write_model(un.as_model()));
    return 0;
}

int cmd_canonical(const std::string& in, const std::string& out) {
    const KripkeModel m = load_model(in);
    const nnil::Tree c = nnil::canonical_tree(nnil::unravel(m));
    std::cout << "nodes: " << c.size() << "\n";
    std::cout << "code: " << c.code() << "\n";
    if (!out.empty()) spit(out, nnil::write_model(c.model()));
    return 0;
}

int cmd_classes(int n) {
    std::cout << nnil::count_nnil_classes(n) << "\n";
    return 0;
}

int cmd_classify(const std::string& in, std::string world, const std::string& other,
                 std::string other_world) {
    const KripkeModel m = load_model(in);
    if (world.empty()) {
        const auto r = m.root_id();
        if (!r) throw nnil::ModelError("model has no root; pass --world");
        world = *r;
    }
    if (other.empty()) {
        const nnil::Tree c =
            nnil::canonical_tree(nnil::unravel(m.generated_submodel(world)));
        std::cout << "code: " << c.code() << "\n";
        return 0;
    }
    const KripkeModel n = load_model(other);
    if (other_world.empty()) {
        const auto r = n.root_id();
        if (!r) throw nnil::ModelError("other model has no root; pass --other-world");
        other_world = *r;
    }
    const bool eq = nnil::nnil_equivalent(m, world, n, other_world);
    std::cout << "equivalent: " << (eq ? "yes" : "no") << "\n";
    return eq ? 0 : 1;
}

int cmd_express(const std::string& text, int n) {
    auto [f, ctx] = nnil::parse_auto(text);
    if (n == 0) n = std::max(1, f.min_vars());
    const auto g = nnil::is_nnil_expressible(f, n);
    if (!g) {
        std::cout << "no NNIL equivalent\n";
        return 1;
    }
    std::cout << g->to_string(padded(ctx, n)) << "\n";
    return 0;
}

int cmd_reduce(const std::string& in, const std::string& out, const std::string& map_path) {
    const KripkeModel m = load_model(in);
    const nnil::ReduceResult r = nnil::reduce(m);
    std::cout << "worlds: " << m.size() << " -> " << r.reduced.size() << "\n";
    if (!out.empty()) spit(out, nnil::write_model(r.reduced));
    if (!map_path.empty()) {
        if (r.onto) {
            spit(map_path, nnil::write_witness(*r.onto));
        } else {
            spit(map_path, "null");
            std::cerr << "note: input is not a tree; the reduction map is defined only on the"
                         " unraveling, writing null\n";
        }
    }
    return 0;
}

int cmd_fnf(const std::string& text) {
    auto [f, ctx] = nnil::parse_auto(text);
    const nnil::FrameNormalForm nf = nnil::frame_normal_form(f, ctx);
    std::cout << "plus: " << nf.plus.to_string(nf.extended) << "\n";
    std::cout << "prime: " << nf.prime.to_string(nf.extended) << "\n";
    std::cout << "vars:";
    for (const std::string& name : nf.extended.names()) std::cout << " " << name;
    std::cout << "\n";
    return 0;
}

int cmd_prove(const std::string& text, const std::string& out, int max_worlds) {
    auto [f, ctx] = nnil::parse_auto(text);
    if (nnil::proves({}, f)) {
        std::cout << "provable\n";
        return 0;
    }
    if (const auto cm = nnil::find_countermodel({}, f, ctx, max_worlds)) {
        spit(out, nnil::write_model(*cm));
        std::cout << "unprovable (countermodel: " << out << ")\n";
    } else {
        std::cout << "unprovable (no countermodel within " << max_worlds << " worlds)\n";
    }
    return 1;
}

int cmd_countermodel(const std::string& axioms_path, const std::string& goal, int max_worlds,
                     const std::string& out) {
    VarContext ctx;
    std::vector<Formula> axioms;
    if (!axioms_path.empty()) {
        std::istringstream lines(slurp(axioms_path));
        std::string line;
        while (std::getline(lines, line)) {
            const auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#') continue;
            axioms.push_back(nnil::parse_extending(line, ctx));
        }
    }
    const Formula f = nnil::parse_extending(goal, ctx);
    const auto cm = nnil::find_countermodel(axioms, f, ctx, max_worlds);
    if (!cm) {
        std::cout << "no countermodel within " << max_worlds << " worlds\n";
        return 1;
    }
    spit(out, nnil::write_model(*cm));
    std::cout << "countermodel: " << out << "\n";
    return 0;
}

int cmd_dot(const std::string& in, const std::string& out) {
    const std::string text = nnil::dot_model(load_model(in));
    if (out.empty())
        std::cout << text;
    else
        spit(out, text);
    return 0;
}

int cmd_selftest() {
    const auto results = nnil::run_acceptance();
    std::size_t passed = 0;
    for (const auto& r : results) {
        if (r.pass) ++passed;
        std::printf("%s %2d %s (%s) [%.2fs]\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                    r.detail.c_str(), r.seconds);
    }
    std::printf("%zu/%zu passed\n", passed, results.size());
    return passed == results.size() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"NNIL toolbox over finite Kripke models"};
    app.require_subcommand(1);
    int rc = 0;

    std::string formula_text, in_path, out_path, map_path, world, other_path, other_world;
    std::string m_path, frame_path, dot_path, json_path, axioms_path, goal_text;
    // prove and countermodel get their own output paths: a default_val on the
    // shared out_path would leak into every other subcommand's --out
    std::string prove_out = "countermodel.json", cm_out = "countermodel.json";
    bool simplify = false, stats = false;
    int n = 1, max_worlds = 4, express_n = 0;
    nnil::GenerationLimits limits;

    auto* check = app.add_subcommand("check", "Recognize a NNIL formula and print its normal form");
    check->add_option("formula", formula_text, "formula text")->required();
    check->callback([&] { rc = cmd_check(formula_text); });

    auto* beta = app.add_subcommand("beta", "Subframe formula of a model (at the root by default)");
    beta->add_option("--in", in_path, "model JSON file")->required();
    beta->add_option("--world", world, "world id (default: root)");
    beta->add_flag("--simplify", simplify, "drop true antecedents");
    beta->callback([&] { rc = cmd_beta(in_path, world, simplify); });

    auto* refute = app.add_subcommand(
        "refute", "Monotonic map witnessing that the target refutes the source's subframe formula");
    refute->add_option("--n", in_path, "source model JSON")->required();
    auto* opt_m = refute->add_option("--m", m_path, "target model JSON");
    refute->add_option("--frame", frame_path, "target frame JSON (synthesizes a valuation)")
        ->excludes(opt_m);
    refute->add_option("--out", out_path, "also write the witness JSON here");
    refute->callback([&] {
        if (m_path.empty() && frame_path.empty())
            throw CLI::RequiredError("one of --m or --frame");
        rc = cmd_refute(in_path, m_path, frame_path, out_path);
    });

    auto* universal = app.add_subcommand("universal", "Generate the n-universal model");
    universal->add_option("--n", n, "number of variables")->required();
    universal->add_flag("--stats", stats, "print layer sizes (always printed)");
    universal->add_option("--dot", dot_path, "write DOT rendering");
    universal->add_option("--json", json_path, "write the underlying model JSON");
    universal->add_option("--max-nodes", limits.max_nodes, "node budget");
    universal->add_option("--max-work", limits.max_work, "candidate budget");
    universal->callback([&] { rc = cmd_universal(n, stats, dot_path, json_path, limits); });

    auto* canonical =
        app.add_subcommand("canonical", "Canonical tree of a rooted model's unraveling");
    canonical->add_option("--in", in_path, "model JSON file")->required();
    canonical->add_option("--out", out_path, "write the canonical tree as model JSON");
    canonical->callback([&] { rc = cmd_canonical(in_path, out_path); });

    auto* classes = app.add_subcommand("classes", "Number of NNIL equivalence classes");
    classes->add_option("--n", n, "number of variables")->required();
    classes->callback([&] { rc = cmd_classes(n); });

    auto* classify = app.add_subcommand(
        "classify", "Canonical class of a pointed model; compare two with --other");
    classify->add_option("--in", in_path, "model JSON file")->required();
    classify->add_option("--world", world, "world id (default: root)");
    classify->add_option("--other", other_path, "second model JSON");
    classify->add_option("--other-world", other_world, "world id in the second model");
    classify->callback([&] { rc = cmd_classify(in_path, world, other_path, other_world); });

    auto* express = app.add_subcommand("express", "NNIL formula equivalent to the input, if any");
    express->add_option("formula", formula_text, "formula text")->required();
    express->add_option("--n", express_n, "variable space (default: variables used)");
    express->callback([&] { rc = cmd_express(formula_text, express_n); });

    auto* reduce = app.add_subcommand("reduce", "Color-preserving submodel with the same root");
    reduce->add_option("--in", in_path, "model JSON file")->required();
    reduce->add_option("--out", out_path, "write the reduced model JSON");
    reduce->add_option("--map", map_path, "write the reduction map JSON (trees only)");
    reduce->callback([&] { rc = cmd_reduce(in_path, out_path, map_path); });

    auto* fnf = app.add_subcommand("fnf", "Frame normal form (implication depth <= 2)");
    fnf->add_option("formula", formula_text, "formula text")->required();
    fnf->callback([&] { rc = cmd_fnf(formula_text); });

    auto* prove = app.add_subcommand("prove", "Decide derivability in IPC");
    prove->add_option("formula", formula_text, "formula text")->required();
    prove->add_option("--out", prove_out, "countermodel file")->capture_default_str();
    prove->add_option("--max-worlds", max_worlds, "countermodel search bound")
        ->capture_default_str();
    prove->callback([&] { rc = cmd_prove(formula_text, prove_out, max_worlds); });

    auto* countermodel =
        app.add_subcommand("countermodel", "Rooted model of the axioms refuting the goal");
    countermodel->add_option("--axioms", axioms_path, "file with one axiom per line, # comments");
    countermodel->add_option("--goal", goal_text, "formula text")->required();
    countermodel->add_option("--max-worlds", max_worlds, "frame size bound")
        ->capture_default_str();
    countermodel->add_option("--out", cm_out, "countermodel file")->capture_default_str();
    countermodel->callback(
        [&] { rc = cmd_countermodel(axioms_path, goal_text, max_worlds, cm_out); });

    auto* dot = app.add_subcommand("dot", "DOT rendering of a model");
    dot->add_option("--in", in_path, "model JSON file")->required();
    dot->add_option("--out", out_path, "output file (default: stdout)");
    dot->callback([&] { rc = cmd_dot(in_path, out_path); });

    auto* selftest = app.add_subcommand("selftest", "Run the acceptance checks");
    selftest->callback([&] { rc = cmd_selftest(); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const nnil::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
