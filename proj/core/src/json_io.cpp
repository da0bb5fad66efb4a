#include "constel/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace constel {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json graph_json(const Graph& g) {
    ordered_json j;
    j["n"] = g.vertex_count();
    auto edges = ordered_json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    return j;
}

Graph graph_from(const ordered_json& j) {
    int n = j.at("n").get<int>();
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("graph JSON: each edge must be a pair");
        edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    return Graph::from_edges(n, edges);
}

ordered_json parse(const std::string& text) {
    return ordered_json::parse(text);
}

}  // namespace

std::string graph_to_json(const Graph& g) { return graph_json(g).dump(); }

Graph graph_from_json(const std::string& text) { return graph_from(parse(text)); }

Graph graph_from_adjacency_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::pair<Vertex, Vertex>> edges;
    int max_id = -1;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        Vertex u, v;
        if (!(ls >> u)) continue;
        if (!(ls >> v)) throw std::invalid_argument("adjacency text: expected two ids per line");
        if (u < 0 || v < 0) throw std::invalid_argument("adjacency text: negative vertex id");
        edges.push_back({u, v});
        max_id = std::max({max_id, u, v});
    }
    return Graph::from_edges(max_id + 1, edges);
}

std::string constellation_to_json(const Constellation& c) {
    ordered_json j = graph_json(c.host);
    j["apex"] = c.apex;
    j["paths"] = c.paths;
    return j.dump();
}

Constellation constellation_from_json(const std::string& text) {
    ordered_json j = parse(text);
    Constellation c;
    c.host = graph_from(j);
    c.apex = make_vertex_set(j.at("apex").get<std::vector<Vertex>>());
    c.paths = j.at("paths").get<std::vector<std::vector<Vertex>>>();
    return c;
}

std::string selection_to_json(const SubSelection& sel) {
    ordered_json j;
    j["apex"] = sel.apex;
    j["paths"] = sel.paths;
    return j.dump();
}

SubSelection selection_from_json(const std::string& text) {
    ordered_json j = parse(text);
    SubSelection sel;
    sel.apex = make_vertex_set(j.at("apex").get<std::vector<Vertex>>());
    sel.paths = j.at("paths").get<std::vector<std::vector<Vertex>>>();
    return sel;
}

std::string hypergraph_to_json(const Hypergraph& h) {
    ordered_json j;
    j["n"] = h.n;
    j["edges"] = h.edges;
    return j.dump();
}

Hypergraph hypergraph_from_json(const std::string& text) {
    ordered_json j = parse(text);
    return make_hypergraph(j.at("n").get<int>(),
                           j.at("edges").get<std::vector<std::vector<int>>>());
}

std::string model_to_json(const InducedModel& m) {
    ordered_json j = graph_json(m.host);
    j["a_sets"] = m.a_sets;
    j["b_sets"] = m.b_sets;
    return j.dump();
}

InducedModel model_from_json(const std::string& text) {
    ordered_json j = parse(text);
    InducedModel m;
    m.host = graph_from(j);
    for (auto& s : j.at("a_sets").get<std::vector<std::vector<Vertex>>>())
        m.a_sets.push_back(make_vertex_set(s));
    for (auto& s : j.at("b_sets").get<std::vector<std::vector<Vertex>>>())
        m.b_sets.push_back(make_vertex_set(s));
    return m;
}

std::string sequence_to_json(const IndexSequence& a) { return ordered_json(a).dump(); }

IndexSequence sequence_from_json(const std::string& text) {
    return parse(text).get<IndexSequence>();
}

std::string width_result_to_json(const WidthResult& r) {
    ordered_json j;
    j["kind"] = (r.kind == WidthKind::Treewidth) ? "tw" : "pw";
    j["value"] = r.value;
    j["certificate"] = r.certificate;
    return j.dump();
}

WidthResult width_result_from_json(const std::string& text) {
    ordered_json j = parse(text);
    WidthResult r;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "tw")
        r.kind = WidthKind::Treewidth;
    else if (kind == "pw")
        r.kind = WidthKind::Pathwidth;
    else
        throw std::invalid_argument("width result JSON: kind must be tw or pw");
    r.value = j.at("value").get<int>();
    r.certificate = j.at("certificate").get<std::vector<Vertex>>();
    return r;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

}  // namespace constel
