#pragma once

#include <string>

#include "constel/constellation.hpp"
#include "constel/graph.hpp"
#include "constel/hypergraph.hpp"
#include "constel/models.hpp"
#include "constel/sequences.hpp"
#include "constel/width.hpp"

namespace constel {

// Canonical graph JSON: {"n": <int>, "edges": [[u,v],...]} with u < v and
// the list sorted lexicographically. Writers are bit-exact; readers accept
// any order.
std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

// Plain-text adjacency list: one "u v" pair per line, '#' starts a comment.
// The vertex count is the largest id plus one.
Graph graph_from_adjacency_text(const std::string& text);

// Constellation JSON: graph JSON plus "apex": [ids] and "paths": [[...],...].
std::string constellation_to_json(const Constellation& c);
Constellation constellation_from_json(const std::string& text);

// Selection JSON: {"apex": [...], "paths": [[...],...]} in an ambient
// graph's ids.
std::string selection_to_json(const SubSelection& sel);
SubSelection selection_from_json(const std::string& text);

// Hypergraph JSON: {"n": <int>, "edges": [[v,...],...]}.
std::string hypergraph_to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const std::string& text);

// Model JSON: graph JSON plus "a_sets" and "b_sets".
std::string model_to_json(const InducedModel& m);
InducedModel model_from_json(const std::string& text);

std::string sequence_to_json(const IndexSequence& a);
IndexSequence sequence_from_json(const std::string& text);

// Width result JSON: {"kind": "tw"|"pw", "value": <int>, "certificate": [...]}.
std::string width_result_to_json(const WidthResult& r);
WidthResult width_result_from_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace constel
