#include "cliquewalk/graph_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cliquewalk/error.hpp"

namespace cliquewalk {

using nlohmann::json;

json graph_to_json(const CliqueRegularGraph& crg, const json& meta) {
  json doc;
  doc["n"] = crg.order();
  json edges = json::array();
  for (const Edge& e : crg.graph().edges()) edges.push_back({e.u, e.v});
  doc["edges"] = std::move(edges);
  json cliques = json::array();
  for (const auto& c : crg.partition().cliques) cliques.push_back(c);
  doc["cliques"] = std::move(cliques);
  doc["d"] = crg.d();
  doc["l"] = crg.l();
  doc["meta"] = meta.is_null() ? json::object() : meta;
  return doc;
}

GraphFile graph_from_json(const json& doc) {
  try {
    if (!doc.is_object()) throw Error(Errc::MalformedGraph, "graph document is not an object");
    for (const char* key : {"n", "edges", "cliques", "d", "l"})
      if (!doc.contains(key)) throw Error(Errc::MalformedGraph, std::string("missing field '") + key + "'");
    const int n = doc.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw Error(Errc::MalformedGraph, "edge entries must be [u,v]");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    auto cliques = doc.at("cliques").get<std::vector<std::vector<int>>>();
    GraphFile out{validate(Graph::from_edges(n, edges), std::move(cliques)), json::object()};
    const int d = doc.at("d").get<int>();
    const int l = doc.at("l").get<int>();
    if (d != out.graph.d() || l != out.graph.l())
      throw Error(Errc::MalformedGraph, "declared (d,l) = (" + std::to_string(d) + "," + std::to_string(l) +
                                            ") but partition gives (" + std::to_string(out.graph.d()) +
                                            "," + std::to_string(out.graph.l()) + ")");
    if (doc.contains("meta")) out.meta = doc.at("meta");
    return out;
  } catch (const json::exception& e) {
    throw Error(Errc::MalformedGraph, std::string("bad graph document: ") + e.what());
  }
}

GraphFile load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Usage, "cannot open graph file '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw Error(Errc::MalformedGraph, "'" + path + "' is not valid JSON: " + e.what());
  }
  return graph_from_json(doc);
}

std::string graph_document_text(const CliqueRegularGraph& crg, const json& meta) {
  return graph_to_json(crg, meta).dump(2) + "\n";
}

void save_graph_file(const std::string& path, const CliqueRegularGraph& crg, const json& meta) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::Usage, "cannot write '" + path + "'");
  out << graph_document_text(crg, meta);
}

namespace {

struct Fnv1a {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  void add(std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  }
};

}  // namespace

std::uint64_t graph_hash(const CliqueRegularGraph& crg) {
  Fnv1a f;
  f.add(static_cast<std::uint64_t>(crg.order()));
  for (const Edge& e : crg.graph().edges()) {
    f.add(static_cast<std::uint64_t>(e.u));
    f.add(static_cast<std::uint64_t>(e.v));
  }
  for (const auto& c : crg.partition().cliques) {
    f.add(~0ULL);
    for (int v : c) f.add(static_cast<std::uint64_t>(v));
  }
  return f.h;
}

std::string graph_hash_hex(const CliqueRegularGraph& crg) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(graph_hash(crg)));
  return buf;
}

}  // namespace cliquewalk
