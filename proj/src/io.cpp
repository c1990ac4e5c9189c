#include "spiralcolor/io.hpp"
#include "spiralcolor/error.hpp"

namespace spiralcolor {

namespace {

Json census_json(const TriangleCensus& c)
{
    return {{"alpha", c.alpha}, {"beta", c.beta}, {"gamma", c.gamma}, {"total", c.total()}};
}

const char* kind_name(ElementKind k)
{
    switch (k) {
    case ElementKind::Vertex: return "vertex";
    case ElementKind::Edge: return "edge";
    case ElementKind::Face: return "face";
    }
    return "?";
}

std::vector<Color> colors_member(const Json& j, const char* key)
{
    if (!j.contains(key) || j[key].is_null())
        return {};
    std::vector<Color> out;
    for (const auto& c : j.at(key)) {
        if (!c.is_number_integer())
            throw Error(ErrorKind::ParseError, std::string("non-integer colour in \"") + key + "\"");
        out.push_back(c.get<Color>());
    }
    return out;
}

} // namespace

Json decomposition_to_json(const PlanarEmbedding& emb, const SpiralDecomposition& dec)
{
    Json j;
    j["n"] = emb.num_vertices();
    j["m"] = emb.num_edges();
    j["start"] = dec.start;
    j["direction"] = dec.direction == Direction::Clockwise ? "clockwise" : "counterclockwise";
    j["chains"] = Json::array();
    for (const auto& c : dec.chains)
        j["chains"].push_back({{"vertices", c.vertices}, {"link_edges", c.link_edges}});
    j["edges"] = Json::array();
    for (EdgeId e = 0; e < emb.num_edges(); ++e) {
        auto [u, v] = emb.edge(e);
        j["edges"].push_back({{"id", e}, {"u", u}, {"v", v}, {"spiral", dec.spiral_edge[e] != 0}});
    }
    std::vector<std::optional<TriangleClass>> classes;
    if (is_maximal_planar(emb)) {
        classes = classify_triangles(emb, dec);
        j["census"] = census_json(triangle_census(emb, dec));
    }
    j["outer_face"] = emb.outer_face();
    j["faces"] = Json::array();
    for (FaceId f = 0; f < emb.num_faces(); ++f) {
        Json fj = {{"id", f}, {"vertices", emb.face(f).vertices}};
        fj["class"] = !classes.empty() && classes[f] ? Json(to_string(*classes[f])) : Json(nullptr);
        j["faces"].push_back(fj);
    }
    j["anomalies"] = dec.anomalies;
    return j;
}

Json coloring_to_json(const ElementColoring& c)
{
    return {{"vertex", c.vertex}, {"edge", c.edge}, {"face", c.face}, {"palette", c.palette}};
}

Json stats_to_json(const RunStats& s, bool with_timing)
{
    Json j = {
        {"palette_used", s.palette_used},
        {"distinct_colors", s.distinct_colors},
        {"target_palette", s.target_palette},
        {"hard_cap", s.hard_cap},
        {"kempe_switches", s.kempe_switches},
        {"fallback_switches", s.fallback_switches},
        {"m_kempe_switches", s.m_kempe_switches},
        {"backtrack_nodes", s.backtrack_nodes},
        {"shift_resolutions", s.shift_resolutions},
        {"overflow_elements", s.overflow_elements},
        {"reconciliation_activations", s.reconciliation_activations},
        {"fourth_color_uses", s.fourth_color_uses},
        {"red_count", s.red_count},
        {"census", census_json(s.census)},
        {"chains", s.chains},
        {"segments_per_chain", s.segments_per_chain},
        {"sailing_boats", s.sailing_boats},
    };
    if (with_timing)
        j["wall_ms"] = s.wall_ms;
    return j;
}

Json result_to_json(const ColoringResult& r, bool with_timing)
{
    return {{"coloring", coloring_to_json(r.coloring)}, {"stats", stats_to_json(r.stats, with_timing)}};
}

Json violations_to_json(const std::vector<Violation>& vs)
{
    Json out = Json::array();
    for (const auto& v : vs)
        out.push_back({{"kind", to_string(v.kind)},
                       {"first", {{"kind", kind_name(v.first.kind)}, {"id", v.first.id}}},
                       {"second", {{"kind", kind_name(v.second.kind)}, {"id", v.second.id}}}});
    return out;
}

ElementColoring coloring_from_json(const Json& json)
{
    const Json& j = json.is_object() && json.contains("coloring") ? json.at("coloring") : json;
    if (!j.is_object())
        throw Error(ErrorKind::ParseError, "colouring must be a JSON object");
    ElementColoring c;
    c.vertex = colors_member(j, "vertex");
    c.edge = colors_member(j, "edge");
    c.face = colors_member(j, "face");
    if (j.contains("palette")) {
        if (!j["palette"].is_number_integer())
            throw Error(ErrorKind::ParseError, "\"palette\" must be an integer");
        c.palette = j["palette"].get<int>();
    }
    return c;
}

std::string dump(const Json& json)
{
    return json.dump(2) + "\n";
}

} // namespace spiralcolor
