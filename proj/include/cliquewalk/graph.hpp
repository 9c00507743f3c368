#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include <Eigen/Dense>

namespace cliquewalk {

struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  // Canonical form: u < v.
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const Edge&) const = default;
};

// Simple undirected graph with sorted neighbor lists.
class Graph {
 public:
  Graph() = default;

  // Throws MalformedGraph on self-loops, repeated edges or out-of-range endpoints.
  static Graph from_edges(int n, const std::vector<Edge>& edges);

  int order() const { return static_cast<int>(adj_.size()); }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  std::size_t edge_count() const { return edge_count_; }
  bool has_edge(int u, int v) const;

  // Sorted, canonical.
  std::vector<Edge> edges() const;

  // Common degree, or nullopt for an irregular (or empty) graph.
  std::optional<int> regular_degree() const;

  Eigen::MatrixXd adjacency() const;

 private:
  std::vector<std::vector<int>> adj_;
  std::size_t edge_count_ = 0;
};

struct StructuralFlags {
  bool connected = false;
  bool bipartite = false;
  bool complete = false;

  bool operator==(const StructuralFlags&) const = default;
};

StructuralFlags structural_flags(const Graph& g);

struct CliquePartition {
  std::vector<std::vector<int>> cliques;           // each sorted, size l
  std::vector<std::vector<int>> vertex_to_cliques;  // each size d, increasing
  int l = 0;
  int d = 0;
};

class CliqueRegularGraph {
 public:
  const Graph& graph() const { return graph_; }
  const CliquePartition& partition() const { return partition_; }
  const StructuralFlags& flags() const { return flags_; }

  int order() const { return graph_.order(); }
  int d() const { return partition_.d; }
  int l() const { return partition_.l; }
  int degree() const { return partition_.d * (partition_.l - 1); }
  int clique_count() const { return static_cast<int>(partition_.cliques.size()); }

  const std::vector<int>& clique(int k) const { return partition_.cliques[k]; }
  const std::vector<int>& cliques_of(int v) const { return partition_.vertex_to_cliques[v]; }

  // Clique containing edge {u,v}; -1 if not an edge.
  int clique_of(int u, int v) const;
  // Same, indexed by position in neighbors(u).
  int clique_of_neighbor(int u, std::size_t j) const { return edge_clique_[u][j]; }

  Eigen::MatrixXd adjacency() const { return graph_.adjacency(); }

  friend CliqueRegularGraph validate(Graph graph, std::vector<std::vector<int>> cliques);

 private:
  Graph graph_;
  CliquePartition partition_;
  std::vector<std::vector<int>> edge_clique_;  // parallel to neighbor lists
  StructuralFlags flags_;
};

// Checks the clique partition and returns the validated object, or throws the
// first violation found: MalformedGraph, NotRegular, MixedCliqueOrder,
// NotAClique, IrregularCliqueMembership, EdgeDoubleCovered, EdgeUncovered.
CliqueRegularGraph validate(Graph graph, std::vector<std::vector<int>> cliques);

// n x |K| vertex-clique incidence matrix.
Eigen::MatrixXi incidence_matrix(const CliqueRegularGraph& crg);

// A == N N^T - d I, in integers.
bool check_incidence_identity(const CliqueRegularGraph& crg);

}  // namespace cliquewalk
