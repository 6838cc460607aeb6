// Acceptance run: one PASS/FAIL line per criterion. argv[1] is the CLI binary.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include "icdraw/generator.hpp"
#include "icdraw/pipeline.hpp"
#include "icdraw/verify.hpp"
#include "support.hpp"

using namespace icdraw;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(const char* id, bool pass, const std::string& detail) {
    std::cout << (pass ? "PASS " : "FAIL ") << id << "  " << detail << std::endl;
    failures += !pass;
}

int real_vertices(const ICPlaneGraph& g) {
    int n = 0;
    for (int v = 0; v < g.base.vertex_capacity(); ++v) n += g.base.map().vertex_alive(v) && !g.base.is_dummy(v);
    return n;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int run(const std::string& cmd) { return std::system((cmd + " >/dev/null 2>&1").c_str()); }

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <icdraw-cli>\n";
        return 2;
    }
    const std::string cli = argv[1];
    const fs::path tmp = fs::temp_directory_path() / "icdraw_acceptance";
    fs::create_directories(tmp);

    // Corpus shared by several criteria.
    constexpr int kInstances = 1000;
    int drawn_ok = 0, within_area = 0, bends_ok = 0, kites = 0, checks = 0;
    std::int64_t middle_crossings = 0, total_crossings = 0;
    double worst_w = 0, worst_h = 0;
    for (int i = 0; i < kInstances; ++i) {
        InstanceSpec spec;
        spec.seed = 1000 + i;
        spec.n = 4 + static_cast<int>((spec.seed * 2654435761u) % 497);
        spec.crossing_fraction = 0.05 + 0.2 * (i % 5) / 4.0;
        spec.edge_keep = i % 3 == 0 ? 0.5 : 1.0;
        const auto inst = generate(spec);
        try {
            const PipelineResult r = run_pipeline(inst.graph, true);
            const Report lv = check_l_visibility(r.l_visibility, &inst.graph);
            const Report rac = check_rac(r.rac, &inst.graph);
            drawn_ok += lv.ok() && rac.ok();
            const int n = real_vertices(inst.graph);
            const Metrics m = measure(r.l_visibility);
            const Metrics mr = measure(r.rac);
            const double w = static_cast<double>(std::max(m.width, mr.width)) / n;
            const double h = static_cast<double>(std::max(m.height, mr.height)) / n;
            worst_w = std::max(worst_w, w);
            worst_h = std::max(worst_h, h);
            within_area += w <= 16 && h <= 8;
            bends_ok += mr.max_bends <= 2 && rac.ok();
            middle_crossings += rac.stats.at("crossings_on_middle_segments");
            total_crossings += rac.stats.at("crossings");
            kites += static_cast<int>(r.oriented.kites.size());
            checks += r.oriented.stats.invariant_checks;
        } catch (const Error& e) {
            std::cerr << "seed " << spec.seed << ": " << e.what() << "\n";
        }
    }
    report("drawings-valid", drawn_ok == kInstances,
           std::to_string(drawn_ok) + "/" + std::to_string(kInstances) + " instances pass both verifiers");
    char buf[160];
    std::snprintf(buf, sizeof buf, "%d/%d within width<=16n height<=8n (worst %.2fn x %.2fn)", within_area, kInstances,
                  worst_w, worst_h);
    report("area", within_area == kInstances, buf);

    // Every case of the expansion table is reached by its fixture.
    const std::pair<const char*, ExpansionCase> cases[] = {
        {"case_1a.json", ExpansionCase::Case1a}, {"case_1b.json", ExpansionCase::Case1b},
        {"case_1c.json", ExpansionCase::Case1c}, {"case_2a.json", ExpansionCase::Case2a},
        {"case_2b.json", ExpansionCase::Case2b}, {"case_3a.json", ExpansionCase::Case3a},
        {"case_3b.json", ExpansionCase::Case3b}, {"case_source_sink.json", ExpansionCase::SourceSink}};
    int hit = 0;
    for (const auto& [file, which] : cases) {
        try {
            const PipelineResult r = run_pipeline(read_ic_graph(fixtures::read_file(fixtures::fixture_path(file))), false);
            const auto it = r.oriented.stats.cases.find(which);
            hit += it != r.oriented.stats.cases.end() && it->second > 0;
        } catch (const Error& e) {
            std::cerr << file << ": " << e.what() << "\n";
        }
    }
    report("expansion-cases", hit == 8 && checks == kites,
           std::to_string(hit) + "/8 cases reached, invariant checks " + std::to_string(checks) + "/" +
               std::to_string(kites));

    // Literal configurations of the table (corners a..d = 0..3).
    using K = CornerKind;
    auto pat = [](std::array<CornerPattern, 4> c) {
        ExpansionPattern p;
        p.corners = c;
        return orient_expanded_kite(p);
    };
    const CornerPattern I{K::AllIn}, O{K::AllOut}, IO{K::Mixed, Boundary::InThenOut}, OI{K::Mixed, Boundary::OutThenIn};
    struct Row {
        std::array<CornerPattern, 4> c;
        int o, z;
    };
    const Row rows[] = {{{O, O, O, I}, 3, 1}, {{I, I, I, O}, 1, 3}, {{O, O, I, I}, 2, 0},  {{IO, I, I, I}, 2, 0},
                        {{IO, O, O, O}, 0, 2}, {{IO, O, I, I}, 3, 1}, {{IO, OI, I, I}, 2, 0}, {{IO, O, OI, I}, 3, 1}};
    int matched = 0;
    for (const auto& row : rows) {
        const auto d = pat(row.c);
        matched += d.origin == row.o && d.destination == row.z;
    }
    ExpansionPattern src;
    src.corners = {O, {}, {}, {}};
    src.role = ExpansionPattern::Role::Source;
    const auto ds = orient_expanded_kite(src);
    matched += ds.origin == 2 && ds.destination == 0;
    report("case-table", matched == 9, std::to_string(matched) + "/9 configurations oriented as tabulated");

    // Runtime: doubling ratio on the library, then the CLI at n = 100000.
    double prev = 0, worst_ratio = 0;
    for (int n : {12500, 25000, 50000, 100000}) {
        InstanceSpec spec;
        spec.n = n;
        spec.seed = 7;
        spec.crossing_fraction = 0.2;
        const auto inst = generate(spec);
        double best = 1e9;
        for (int rep = 0; rep < 3; ++rep) {
            const auto t0 = std::chrono::steady_clock::now();
            const PipelineResult r = run_pipeline(inst.graph, false);
            best = std::min(best, seconds_since(t0));
        }
        if (prev > 0) worst_ratio = std::max(worst_ratio, best / prev);
        prev = best;
    }
    const std::string big = (tmp / "big.json").string();
    const bool gen_ok = run(cli + " gen -n 100000 --crossings 0.2 --seed 7 -o " + big) == 0;
    const auto t0 = std::chrono::steady_clock::now();
    const bool draw_ok = gen_ok && run(cli + " draw " + big + " --mode lvis --out json -o " + (tmp / "big_out.json").string()) == 0;
    const double cli_time = seconds_since(t0);
    std::snprintf(buf, sizeof buf, "worst doubling ratio %.2f (<= 2.6), CLI n=100000 lvis %.2fs (< 5s)", worst_ratio,
                  cli_time);
    report("runtime", draw_ok && worst_ratio <= 2.6 && cli_time < 5.0, buf);

    std::snprintf(buf, sizeof buf, "%d/%d with <= 2 bends and right-angle crossings; %lld/%lld crossings on middle segments",
                  bends_ok, kInstances, static_cast<long long>(middle_crossings), static_cast<long long>(total_crossings));
    report("rac", bends_ok == kInstances && middle_crossings > 0, buf);

    // Round trip and byte-level determinism through the CLI.
    const std::string g1 = (tmp / "g1.json").string(), g2 = (tmp / "g2.json").string();
    const std::string d1 = (tmp / "d1.json").string(), d2 = (tmp / "d2.json").string();
    bool det = run(cli + " gen -n 300 --crossings 0.2 --seed 11 -o " + g1) == 0 &&
               run(cli + " gen -n 300 --crossings 0.2 --seed 11 -o " + g2) == 0 &&
               run(cli + " draw " + g1 + " --mode rac --out json -o " + d1) == 0 &&
               run(cli + " draw " + g2 + " --mode rac --out json -o " + d2) == 0;
    det = det && fixtures::read_file(g1) == fixtures::read_file(g2) && fixtures::read_file(d1) == fixtures::read_file(d2);
    bool round = false;
    if (det) {
        const std::string gtext = fixtures::read_file(g1);
        const std::string dtext = fixtures::read_file(d1);
        round = to_text(graph_to_json(read_ic_graph(gtext).base)) == gtext &&
                to_text(to_json(rac_from_json(parse_json_text(dtext)))) == dtext &&
                run(cli + " verify " + d1 + " --graph " + g1) == 0;
    }
    report("round-trip", det && round,
           std::string("deterministic bytes ") + (det ? "yes" : "no") + ", round trip " + (round ? "yes" : "no"));

    fs::remove_all(tmp);
    return failures == 0 ? 0 : 1;
}
