#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "cliquewalk/graph.hpp"

namespace cliquewalk {

struct GraphFile {
  CliqueRegularGraph graph;
  nlohmann::json meta = nlohmann::json::object();
};

// { "n", "edges", "cliques", "d", "l", "meta" }
nlohmann::json graph_to_json(const CliqueRegularGraph& crg,
                             const nlohmann::json& meta = nlohmann::json::object());

// Re-validates; d and l in the document must match the inferred values.
GraphFile graph_from_json(const nlohmann::json& doc);

GraphFile load_graph_file(const std::string& path);
void save_graph_file(const std::string& path, const CliqueRegularGraph& crg,
                     const nlohmann::json& meta = nlohmann::json::object());

// Serialized form written by save_graph_file (2-space indent, trailing newline).
std::string graph_document_text(const CliqueRegularGraph& crg,
                                const nlohmann::json& meta = nlohmann::json::object());

// FNV-1a over n, the canonical edge list and the clique list.
std::uint64_t graph_hash(const CliqueRegularGraph& crg);
std::string graph_hash_hex(const CliqueRegularGraph& crg);

}  // namespace cliquewalk
