#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cliquewalk/graph.hpp"

namespace cliquewalk {

class LatinSquare {
 public:
  // Throws InvalidParams unless every symbol 0..l-1 occurs once per row and column.
  explicit LatinSquare(std::vector<std::vector<int>> cells);

  int order() const { return static_cast<int>(cells_.size()); }
  int operator()(int row, int col) const { return cells_[row][col]; }
  const std::vector<std::vector<int>>& cells() const { return cells_; }

  bool operator==(const LatinSquare&) const = default;

 private:
  std::vector<std::vector<int>> cells_;
};

// Text format: l lines of l whitespace-separated integers.
LatinSquare read_latin_square(std::istream& in);
void write_latin_square(std::ostream& out, const LatinSquare& ls);

bool orthogonal(const LatinSquare& a, const LatinSquare& b);

// pg(K, R, T): K points per line, R lines per point.
// GQ(q, 1) is pg(q+1, 2, 1), whose point graph is the (q+1) x (q+1) rook graph.
struct PartialGeometryParams {
  int K = 0;
  int R = 0;
  int T = 0;
};

// Edges as cliques (l = 2).
CliqueRegularGraph cycle(int n);
CliqueRegularGraph prism(int n);
CliqueRegularGraph petersen();
// Configuration model with rejection of loops and multi-edges (at most 1000 pairings).
CliqueRegularGraph random_regular(int n, int d, std::uint64_t seed);

// m x m grid, cliques are rows then columns: d = 2, l = m.
CliqueRegularGraph rook_graph(int m);

LatinSquare latin_square_cyclic(int l);
// L_a(i, j) = a*i + j mod l for a = 1..t.
std::vector<LatinSquare> mols_prime(int l, int t);

// Cells as vertices; cliques are rows, columns, then symbol classes of each square.
CliqueRegularGraph latin_square_graph(const LatinSquare& ls);
CliqueRegularGraph ols_graph(const std::vector<LatinSquare>& squares);

// Line graph of an r-regular simple graph: one r-clique per vertex of h.
CliqueRegularGraph line_graph(const Graph& h);

// Plain K_n, used as a line-graph host.
Graph complete_graph(int n);

bool is_prime(int p);

}  // namespace cliquewalk
