// icdraw: draw IC-plane graphs as L-visibility or two-bend RAC drawings.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"

#include "icdraw/generator.hpp"
#include "icdraw/io.hpp"
#include "icdraw/pipeline.hpp"
#include "icdraw/svg.hpp"
#include "icdraw/verify.hpp"

using namespace icdraw;

namespace {

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::SchemaError, "cannot read " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    out << text;
}

std::uint64_t default_seed() {
    if (const char* s = std::getenv("ICDRAW_SEED")) return std::strtoull(s, nullptr, 10);
    return 1;
}

int report_error(const Error& e) {
    Json j{{"ok", false}, {"error", std::string(to_string(e.code()))}, {"message", e.what()}};
    if (!e.details().empty()) j["details"] = e.details();
    std::cerr << j.dump(2) << "\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Draw IC-plane graphs as L-visibility or two-bend RAC drawings"};
    app.require_subcommand(1);

    std::string input, output, mode = "lvis", format = "svg", dump_path, graph_path;
    bool quarter = false;
    InstanceSpec spec;
    spec.seed = default_seed();
    std::vector<int> sizes{12500, 25000, 50000, 100000};
    int repeat = 1;

    auto* validate = app.add_subcommand("validate", "Check that a graph file is a valid IC-plane graph");
    validate->add_option("input", input, "Graph JSON (default: stdin)");

    auto* draw = app.add_subcommand("draw", "Run the drawing pipeline");
    draw->add_option("input", input, "Graph JSON (default: stdin)");
    draw->add_option("--mode", mode, "lvis, rac or bars")->check(CLI::IsMember({"lvis", "rac", "bars"}));
    draw->add_option("--out", format, "svg or json")->check(CLI::IsMember({"svg", "json"}));
    draw->add_option("-o,--output", output, "Output file (default: stdout)");
    draw->add_flag("--quarter-units", quarter, "Emit coordinates of the unscaled grid (JSON only)");
    draw->add_option("--dump-intermediate", dump_path, "Write augmented graph, P, P_C and P+ as JSON");

    auto* gen = app.add_subcommand("gen", "Generate a random IC-plane graph");
    gen->add_option("-n", spec.n, "Vertex count")->check(CLI::Range(3, 100000000));
    gen->add_option("--crossings", spec.crossing_fraction, "Target crossings per vertex, at most 0.25")
        ->check(CLI::Range(0.0, 0.25));
    gen->add_option("--seed", spec.seed, "Random seed (default: $ICDRAW_SEED or 1)");
    gen->add_option("--edge-keep", spec.edge_keep, "Keep probability of optional uncrossed edges")
        ->check(CLI::Range(0.0, 1.0));
    gen->add_option("-o,--output", output, "Output file (default: stdout)");

    auto* verify = app.add_subcommand("verify", "Audit a drawing JSON");
    verify->add_option("input", input, "Drawing JSON (default: stdin)");
    verify->add_option("--graph", graph_path, "Graph the drawing must realize");

    auto* bench = app.add_subcommand("bench", "Time the pipeline on generated instances (CSV)");
    bench->add_option("--sizes", sizes, "Vertex counts")->delimiter(',');
    bench->add_option("--seed", spec.seed, "Random seed");
    bench->add_option("--crossings", spec.crossing_fraction, "Target crossings per vertex")
        ->check(CLI::Range(0.0, 0.25));
    bench->add_option("--repeat", repeat, "Runs per size; the fastest is reported")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*validate) {
            const ICPlaneGraph g = read_ic_graph(read_input(input));
            Json j{{"ok", true},
                   {"vertices", g.num_real_vertices()},
                   {"edges", g.real_edges.size()},
                   {"crossings", g.num_crossings()},
                   {"warnings", g.warnings}};
            Json configs = Json::array();
            for (int c = 0; c < g.num_crossings(); ++c) {
                const CrossingConfig cfg = classify_crossing(g, c);
                configs.push_back({{"dummy", g.base.name(g.crossings[c].dummy)},
                                   {"tag", cfg.tag == CrossingConfig::Tag::X ? "X" : "B"},
                                   {"witness", cfg.witness}});
            }
            j["configurations"] = configs;
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (*draw) {
            const ICPlaneGraph g = read_ic_graph(read_input(input));
            const PipelineResult r = run_pipeline(g, mode == "rac");
            if (!dump_path.empty()) write_output(dump_path, to_text(intermediates_json(r)));
            const int scale = quarter ? 4 : 1;
            if (mode == "rac") {
                write_output(output, format == "svg" ? emit_svg(r.rac) : to_text(to_json(r.rac, scale)));
            } else {
                const LVisibilityDrawing d =
                    mode == "lvis" ? r.l_visibility : bars_only(r.bars, r.oriented.plus, r.biconnected.graph);
                write_output(output, format == "svg" ? emit_svg(d) : to_text(to_json(d, scale)));
            }
            return 0;
        }
        if (*gen) {
            const GeneratedInstance inst = generate(spec);
            write_output(output, to_text(graph_to_json(inst.graph.base)));
            std::cerr << "crossings: " << inst.achieved_crossings << " of " << inst.target_crossings << " targeted\n";
            return 0;
        }
        if (*verify) {
            const Json j = parse_json_text(read_input(input));
            std::optional<ICPlaneGraph> g;
            if (!graph_path.empty()) g = read_ic_graph(read_input(graph_path));
            const ICPlaneGraph* gp = g ? &*g : nullptr;
            Report rep;
            Metrics m;
            const std::string model = j.is_object() ? j.value("model", "") : "";
            if (model == "rac") {
                const RacDrawing d = rac_from_json(j);
                rep = check_rac(d, gp);
                m = measure(d);
            } else {
                const LVisibilityDrawing d = l_visibility_from_json(j);
                rep = check_l_visibility(d, gp);
                m = measure(d);
            }
            Json out = rep.to_json();
            out["metrics"] = {{"width", m.width}, {"height", m.height}, {"crossings", m.crossings},
                              {"max_bends", m.max_bends}};
            std::cout << out.dump(2) << "\n";
            return rep.ok() ? 0 : 1;
        }
        if (*bench) {
            std::cout << "n,seconds,width,height\n";
            for (int n : sizes) {
                InstanceSpec s = spec;
                s.n = n;
                const ICPlaneGraph g = generate(s).graph;
                double best = 1e300;
                Metrics m;
                for (int k = 0; k < repeat; ++k) {
                    const auto t0 = std::chrono::steady_clock::now();
                    const PipelineResult r = run_pipeline(g, false);
                    const auto t1 = std::chrono::steady_clock::now();
                    best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
                    m = measure(r.l_visibility);
                }
                std::cout << n << "," << best << "," << m.width << "," << m.height << "\n";
            }
            return 0;
        }
    } catch (const Error& e) {
        return report_error(e);
    }
    return 2;
}
