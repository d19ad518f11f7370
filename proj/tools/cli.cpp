#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>
#include <random>

#include <CLI11.hpp>
#include <json.hpp>

#include "septree/actions.hpp"
#include "septree/blockcut.hpp"
#include "septree/errors.hpp"
#include "septree/fixtures.hpp"
#include "septree/io.hpp"

namespace septree::cli {

namespace {

using nlohmann::ordered_json;

struct CutSource {
    std::string cuts_file;
    std::string generator;

    void attach(CLI::App& cmd) {
        auto* cuts = cmd.add_option("--cuts", cuts_file, "JSON list of cuts (lists of vertex names)");
        auto* gen = cmd.add_option("--gen", generator, "Cut family generator")->check(CLI::IsMember({"articulation"}));
        cuts->excludes(gen);
    }

    [[nodiscard]] std::vector<VertexSet> load(const Space& space) const {
        if (generator == "articulation") return articulation_cuts(space);
        if (cuts_file.empty()) throw InputError("one of --cuts or --gen is required");
        return load_cuts(space, cuts_file);
    }
};

std::string element_label(const Pretree& p, ElementId id) {
    const auto& e = p.element(id);
    return std::string(to_string(e.kind)) + ":" + p.space().format(e.support);
}

ordered_json names_json(const Space& space, const VertexSet& s) {
    ordered_json out = ordered_json::array();
    for (Vertex v : s) out.push_back(space.name(v));
    return out;
}

ordered_json report_json(const Space& space, const AxiomReport& report) {
    ordered_json doc;
    doc["valid"] = report.all_pass();
    doc["conditions"] = ordered_json::array();
    for (int c = 1; c <= 3; ++c) {
        ordered_json entry{{"condition", c}, {"pass", report.passes(c)}};
        if (c == 1 && report.condition1) {
            entry["witness"] = {{"cut", names_json(space, report.condition1->cut)}};
        } else if (c == 2 && report.condition2) {
            const auto& w = *report.condition2;
            entry["witness"] = {{"separator", names_json(space, w.separator)},
                                {"separated", names_json(space, w.separated)},
                                {"vertices", {space.name(w.x), space.name(w.y)}}};
        } else if (c == 3 && report.condition3) {
            const auto& w = *report.condition3;
            entry["witness"] = {{"first", names_json(space, w.first)},
                                {"second", names_json(space, w.second)},
                                {"vertices", {space.name(w.x), space.name(w.y)}}};
        }
        doc["conditions"].push_back(std::move(entry));
    }
    doc["warnings"] = ordered_json::array();
    if (report.empty_family) doc["warnings"].push_back("empty cut family");
    return doc;
}

Pretree build_pretree(const std::string& graph_file, const CutSource& source, bool checked) {
    auto space = load_graph(graph_file);
    auto cuts = source.load(space);
    return Pretree::build(CutSystem::create(std::move(space), std::move(cuts)), PretreeOptions{.checked = checked});
}

int cmd_verify(const std::string& graph_file, const CutSource& source, bool as_json, std::ostream& out) {
    const auto space = load_graph(graph_file);
    const auto report = validate(space, source.load(space));
    if (as_json) out << report_json(space, report).dump(2) << "\n";
    else out << describe(space, report);
    return report.all_pass() ? kOk : kAxiomViolation;
}

int cmd_oracle_single(const Space& space, const std::string& name, ordered_json& results, std::ostream& text) {
    const auto cmp = compare_with_block_cut_tree(space);
    ordered_json entry{{"graph", name},
                       {"vertices", space.vertex_count()},
                       {"edges", space.edge_count()},
                       {"blobs_match", cmp.blobs_match},
                       {"tree_match", cmp.tree_match}};
    text << name << " (n=" << space.vertex_count() << ", m=" << space.edge_count()
         << "): blobs " << (cmp.blobs_match ? "match" : "MISMATCH") << ", tree "
         << (cmp.tree_match ? "match" : "MISMATCH") << "\n";
    if (!cmp.ok()) {
        entry["only_in_pipeline"] = cmp.only_in_pipeline;
        entry["only_in_blocks"] = cmp.only_in_blocks;
        entry["pipeline_encoding"] = cmp.pipeline_encoding;
        entry["oracle_encoding"] = cmp.oracle_encoding;
        for (const auto& b : cmp.only_in_pipeline) text << "  - blob {" << b << "} has no matching block\n";
        for (const auto& b : cmp.only_in_blocks) text << "  + block {" << b << "} has no matching blob\n";
        if (!cmp.tree_match) {
            text << "  pipeline tree: " << cmp.pipeline_encoding << "\n"
                 << "  block-cut tree: " << cmp.oracle_encoding << "\n";
        }
    }
    results.push_back(std::move(entry));
    return cmp.ok() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Pretrees and trees from families of vertex cuts", "septree"};
    app.require_subcommand(1);

    std::string graph_file;
    CutSource source;
    bool as_json = false;
    bool checked = false;

    auto* verify = app.add_subcommand("verify", "Check a cut family against the admissibility conditions");
    verify->add_option("graph", graph_file, "Graph file (JSON or edge list)")->required();
    source.attach(*verify);
    verify->add_flag("--json", as_json, "Emit the report as JSON");

    bool with_betweenness = false;
    auto* build = app.add_subcommand("build", "Build the pretree and print it as JSON");
    build->add_option("graph", graph_file, "Graph file (JSON or edge list)")->required();
    source.attach(*build);
    build->add_flag("--betweenness", with_betweenness, "Include every triple x in (b, c)");
    build->add_flag("--checked", checked, "Recompute and verify the betweenness relation");

    std::string format = "dot";
    auto* tree = app.add_subcommand("tree", "Realize the pretree as a tree and export it");
    tree->add_option("graph", graph_file, "Graph file (JSON or edge list)")->required();
    source.attach(*tree);
    tree->add_option("--format", format, "dot or json")->capture_default_str();
    tree->add_flag("--checked", checked, "Recompute and verify the betweenness relation");

    std::size_t random_count = 0;
    std::uint64_t seed = 1;
    auto* oracle = app.add_subcommand("oracle-blockcut",
                                      "Compare articulation-cut pretrees with the classical block-cut tree");
    oracle->add_option("graph", graph_file, "Graph file (JSON or edge list)");
    oracle->add_option("--random", random_count, "Also test this many seeded random connected graphs (4 <= n <= 12)");
    oracle->add_option("--seed", seed, "Seed for --random")->capture_default_str();
    oracle->add_flag("--json", as_json, "Emit the comparison as JSON");

    std::vector<std::string> selectors;
    auto* med = app.add_subcommand("median", "Median of three elements given by their supports");
    med->add_option("graph", graph_file, "Graph file (JSON or edge list)")->required();
    source.attach(*med);
    med->add_option("selectors", selectors, "Three comma-joined vertex lists, e.g. a,b")->expected(3)->required();
    med->add_flag("--json", as_json, "Emit the result as JSON");
    med->add_flag("--checked", checked, "Recompute and verify the betweenness relation");

    std::string perm_file;
    auto* act = app.add_subcommand("act", "Transport a graph automorphism to the pretree and tree");
    act->add_option("graph", graph_file, "Graph file (JSON or edge list)")->required();
    source.attach(*act);
    act->add_option("--perm", perm_file, "JSON object mapping vertex names to their images")->required();
    act->add_flag("--json", as_json, "Emit the result as JSON");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    try {
        if (*verify) return cmd_verify(graph_file, source, as_json, out);

        if (*build) {
            out << pretree_to_json(build_pretree(graph_file, source, checked), with_betweenness);
            return kOk;
        }

        if (*tree) {
            const auto fmt = parse_tree_format(format);
            out << export_tree(realize(build_pretree(graph_file, source, checked)), fmt);
            return kOk;
        }

        if (*oracle) {
            if (graph_file.empty() && random_count == 0) throw InputError("give a graph file, --random N, or both");
            ordered_json results = ordered_json::array();
            std::ostringstream text;
            int mismatches = 0;
            if (!graph_file.empty()) mismatches += cmd_oracle_single(load_graph(graph_file), graph_file, results, text);
            std::mt19937_64 rng(seed);
            for (std::size_t i = 0; i < random_count; ++i) {
                const auto n = 4 + static_cast<std::size_t>(rng() % 9);
                const auto space = random_connected_graph(rng, n, 0.15);
                mismatches += cmd_oracle_single(space, "random#" + std::to_string(i), results, text);
            }
            if (as_json) {
                out << ordered_json{{"seed", seed}, {"mismatches", mismatches}, {"graphs", results}}.dump(2) << "\n";
            } else {
                out << text.str() << (results.size() - static_cast<std::size_t>(mismatches)) << "/" << results.size()
                    << " graphs match\n";
            }
            return mismatches == 0 ? kOk : kOracleMismatch;
        }

        if (*med) {
            const auto p = build_pretree(graph_file, source, checked);
            std::vector<ElementId> ids;
            for (const auto& s : selectors) ids.push_back(p.id_of(parse_selector(p.space(), s)));
            const auto m = median(p, ids[0], ids[1], ids[2]);
            if (as_json) {
                const auto& e = p.element(m);
                out << ordered_json{{"kind", to_string(e.kind)}, {"support", names_json(p.space(), e.support)}}.dump()
                    << "\n";
            } else {
                out << element_label(p, m) << "\n";
            }
            return kOk;
        }

        if (*act) {
            const auto p = build_pretree(graph_file, source, false);
            const auto g = Automorphism::from_names(p.system(), parse_permutation(read_file(perm_file)));
            const auto map = induce(p, g);
            const auto report = verify_equivariance(p, g);
            if (as_json) {
                ordered_json doc;
                doc["map"] = ordered_json::array();
                for (auto id : p.ids()) {
                    doc["map"].push_back({element_label(p, id), element_label(p, map[id.index])});
                }
                doc["betweenness_violations"] = report.betweenness_violations.size();
                doc["edge_violations"] = report.edge_violations.size();
                doc["equivariant"] = report.ok();
                out << doc.dump(2) << "\n";
            } else {
                for (auto id : p.ids()) out << element_label(p, id) << " -> " << element_label(p, map[id.index]) << "\n";
                out << "equivariance: " << (report.ok() ? "ok" : "FAILED") << "\n";
            }
            return report.ok() ? kOk : kConsistencyError;
        }
    } catch (const AxiomError& e) {
        err << "error: " << e.what() << "\n";
        return kAxiomViolation;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const ConsistencyError& e) {
        err << "internal consistency error: " << e.what() << "\n";
        return kConsistencyError;
    }
    return kInputError;
}

}  // namespace septree::cli
