#include "cliquewalk/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "cliquewalk/error.hpp"

namespace cliquewalk {

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
  if (n < 0) throw Error(Errc::MalformedGraph, "negative vertex count");
  Graph g;
  g.adj_.assign(n, {});
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= n)
      throw Error(Errc::MalformedGraph,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") out of range");
    if (e.u == e.v) throw Error(Errc::MalformedGraph, "self-loop at " + std::to_string(e.u));
    g.adj_[e.u].push_back(e.v);
    g.adj_[e.v].push_back(e.u);
  }
  for (int v = 0; v < n; ++v) {
    auto& a = g.adj_[v];
    std::sort(a.begin(), a.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end())
      throw Error(Errc::MalformedGraph, "repeated edge at vertex " + std::to_string(v));
  }
  g.edge_count_ = edges.size();
  return g;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= order() || v >= order()) return false;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < order(); ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::optional<int> Graph::regular_degree() const {
  if (adj_.empty()) return std::nullopt;
  int r = degree(0);
  for (int v = 1; v < order(); ++v)
    if (degree(v) != r) return std::nullopt;
  return r;
}

Eigen::MatrixXd Graph::adjacency() const {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(order(), order());
  for (int u = 0; u < order(); ++u)
    for (int v : adj_[u]) a(u, v) = 1.0;
  return a;
}

StructuralFlags structural_flags(const Graph& g) {
  StructuralFlags f;
  const int n = g.order();
  if (n == 0) return f;

  std::vector<int> color(n, -1);
  bool bipartite = true;
  int components = 0;
  for (int s = 0; s < n; ++s) {
    if (color[s] >= 0) continue;
    ++components;
    color[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : g.neighbors(u)) {
        if (color[v] < 0) {
          color[v] = 1 - color[u];
          q.push(v);
        } else if (color[v] == color[u]) {
          bipartite = false;
        }
      }
    }
  }
  f.connected = components == 1;
  f.bipartite = bipartite;
  f.complete = g.edge_count() == static_cast<std::size_t>(n) * (n - 1) / 2;
  return f;
}

int CliqueRegularGraph::clique_of(int u, int v) const {
  if (u < 0 || u >= order()) return -1;
  const auto& nb = graph_.neighbors(u);
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) return -1;
  return edge_clique_[u][it - nb.begin()];
}

CliqueRegularGraph validate(Graph graph, std::vector<std::vector<int>> cliques) {
  const int n = graph.order();
  if (cliques.empty()) throw Error(Errc::MalformedGraph, "no cliques given");
  for (std::size_t k = 0; k < cliques.size(); ++k) {
    auto& c = cliques[k];
    if (c.empty()) throw Error(Errc::MalformedGraph, "clique " + std::to_string(k) + " is empty");
    std::sort(c.begin(), c.end());
    if (c.front() < 0 || c.back() >= n)
      throw Error(Errc::MalformedGraph, "clique " + std::to_string(k) + " has a vertex out of range");
    if (std::adjacent_find(c.begin(), c.end()) != c.end())
      throw Error(Errc::MalformedGraph, "clique " + std::to_string(k) + " repeats a vertex");
  }

  if (!graph.regular_degree()) throw Error(Errc::NotRegular, "graph is not regular");

  const std::size_t l = cliques[0].size();
  for (std::size_t k = 1; k < cliques.size(); ++k)
    if (cliques[k].size() != l)
      throw Error(Errc::MixedCliqueOrder, "clique " + std::to_string(k) + " has order " +
                                              std::to_string(cliques[k].size()) + ", expected " +
                                              std::to_string(l));

  for (std::size_t k = 0; k < cliques.size(); ++k) {
    const auto& c = cliques[k];
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j)
        if (!graph.has_edge(c[i], c[j]))
          throw Error(Errc::NotAClique, "clique " + std::to_string(k) + ": " + std::to_string(c[i]) +
                                            " and " + std::to_string(c[j]) + " are not adjacent");
  }

  std::vector<std::vector<int>> v2c(n);
  for (std::size_t k = 0; k < cliques.size(); ++k)
    for (int v : cliques[k]) v2c[v].push_back(static_cast<int>(k));
  const std::size_t d = v2c[0].size();
  for (int v = 0; v < n; ++v)
    if (v2c[v].size() != d)
      throw Error(Errc::IrregularCliqueMembership, "vertex " + std::to_string(v) + " lies in " +
                                                       std::to_string(v2c[v].size()) +
                                                       " cliques, vertex 0 in " + std::to_string(d));

  std::vector<std::vector<int>> edge_clique(n);
  for (int u = 0; u < n; ++u) edge_clique[u].assign(graph.neighbors(u).size(), -1);
  auto slot = [&](int u, int v) -> int& {
    const auto& nb = graph.neighbors(u);
    return edge_clique[u][std::lower_bound(nb.begin(), nb.end(), v) - nb.begin()];
  };
  for (std::size_t k = 0; k < cliques.size(); ++k) {
    const auto& c = cliques[k];
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j) {
        int& s = slot(c[i], c[j]);
        if (s >= 0)
          throw Error(Errc::EdgeDoubleCovered, "edge (" + std::to_string(c[i]) + "," +
                                                   std::to_string(c[j]) + ") in cliques " +
                                                   std::to_string(s) + " and " + std::to_string(k));
        s = static_cast<int>(k);
        slot(c[j], c[i]) = static_cast<int>(k);
      }
  }
  for (int u = 0; u < n; ++u)
    for (std::size_t j = 0; j < edge_clique[u].size(); ++j)
      if (edge_clique[u][j] < 0)
        throw Error(Errc::EdgeUncovered, "edge (" + std::to_string(u) + "," +
                                             std::to_string(graph.neighbors(u)[j]) +
                                             ") lies in no clique");

  CliqueRegularGraph crg;
  crg.flags_ = structural_flags(graph);
  crg.graph_ = std::move(graph);
  crg.partition_.cliques = std::move(cliques);
  crg.partition_.vertex_to_cliques = std::move(v2c);
  crg.partition_.l = static_cast<int>(l);
  crg.partition_.d = static_cast<int>(d);
  crg.edge_clique_ = std::move(edge_clique);
  return crg;
}

Eigen::MatrixXi incidence_matrix(const CliqueRegularGraph& crg) {
  Eigen::MatrixXi nmat = Eigen::MatrixXi::Zero(crg.order(), crg.clique_count());
  for (int k = 0; k < crg.clique_count(); ++k)
    for (int v : crg.clique(k)) nmat(v, k) = 1;
  return nmat;
}

bool check_incidence_identity(const CliqueRegularGraph& crg) {
  const Eigen::MatrixXi nmat = incidence_matrix(crg);
  Eigen::MatrixXi lhs = nmat * nmat.transpose();
  lhs.diagonal().array() -= crg.d();
  Eigen::MatrixXi a = Eigen::MatrixXi::Zero(crg.order(), crg.order());
  for (int u = 0; u < crg.order(); ++u)
    for (int v : crg.graph().neighbors(u)) a(u, v) = 1;
  return lhs == a;
}

}  // namespace cliquewalk
