#include "icdraw/pipeline.hpp"

namespace icdraw {

PipelineResult run_pipeline(const ICPlaneGraph& input, bool with_rac) {
    PipelineResult r;
    r.kites = make_empty_kites(input);
    r.biconnected = biconnect(r.kites.graph, r.kites.kites);
    r.oriented = orient(r.biconnected.graph, r.biconnected.kites);
    r.bars = build_visibility(r.oriented.plus, r.oriented.kites);
    r.l_visibility = to_l_visibility(r.bars, r.oriented.plus, r.oriented.kites, r.biconnected.graph);
    if (with_rac) r.rac = to_rac(r.l_visibility);
    return r;
}

namespace {

Json with_tails(const EmbeddedGraph& g, const StOrientation& o) {
    Json j = graph_to_json(g);
    Json tails = Json::array();
    for (int e = 0; e < g.edge_capacity(); ++e)
        if (g.map().edge_alive(e)) tails.push_back(g.name(o.tail[e]));
    j["tails"] = tails;
    return j;
}

}  // namespace

Json intermediates_json(const PipelineResult& r) {
    Json j;
    const auto flags = augmented_flags(r.biconnected.graph);
    j["augmented"] = graph_to_json(r.biconnected.graph.base, &flags);
    j["P"] = with_tails(r.oriented.split.plane, r.oriented.plane_orientation);

    const Contraction& c = r.oriented.contracted;
    std::vector<std::string> names;
    for (std::size_t node = 0; node < c.vertex_of_node.size(); ++node)
        names.push_back(c.vertex_of_node[node] >= 0 ? r.oriented.split.plane.name(c.vertex_of_node[node])
                                                    : "kite" + std::to_string(c.kite_of_node[node]));
    const EmbeddedGraph pc(names, std::vector<char>(names.size(), 0), c.map, c.outer_dart);
    j["P_C"] = with_tails(pc, r.oriented.contracted_orientation);
    j["P_plus"] = with_tails(r.oriented.plus.graph, r.oriented.plus.orientation);
    return j;
}

}  // namespace icdraw
