#include "cliquewalk/generators.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

#include "cliquewalk/error.hpp"
#include "cliquewalk/rng.hpp"

namespace cliquewalk {

namespace {

CliqueRegularGraph edges_as_cliques(int n, const std::vector<Edge>& edges) {
  std::vector<std::vector<int>> cliques;
  cliques.reserve(edges.size());
  for (const Edge& e : edges) cliques.push_back({e.u, e.v});
  return validate(Graph::from_edges(n, edges), std::move(cliques));
}

// All pairs inside each clique.
CliqueRegularGraph from_cliques(int n, const std::vector<std::vector<int>>& cliques) {
  std::vector<Edge> edges;
  for (const auto& c : cliques)
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j) edges.emplace_back(c[i], c[j]);
  return validate(Graph::from_edges(n, edges), cliques);
}

}  // namespace

LatinSquare::LatinSquare(std::vector<std::vector<int>> cells) : cells_(std::move(cells)) {
  const int l = static_cast<int>(cells_.size());
  if (l < 1) throw Error(Errc::InvalidParams, "empty Latin square");
  for (int i = 0; i < l; ++i) {
    if (static_cast<int>(cells_[i].size()) != l)
      throw Error(Errc::InvalidParams, "Latin square row " + std::to_string(i) + " has wrong length");
    for (int s : cells_[i])
      if (s < 0 || s >= l) throw Error(Errc::InvalidParams, "symbol " + std::to_string(s) + " out of range");
  }
  for (int i = 0; i < l; ++i) {
    std::vector<char> in_row(l, 0), in_col(l, 0);
    for (int j = 0; j < l; ++j) {
      if (in_row[cells_[i][j]]++)
        throw Error(Errc::InvalidParams, "row " + std::to_string(i) + " repeats a symbol");
      if (in_col[cells_[j][i]]++)
        throw Error(Errc::InvalidParams, "column " + std::to_string(i) + " repeats a symbol");
    }
  }
}

LatinSquare read_latin_square(std::istream& in) {
  std::vector<std::vector<int>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<int> row;
    int x;
    while (ls >> x) row.push_back(x);
    if (!ls.eof()) throw Error(Errc::InvalidParams, "non-integer token in Latin square text");
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return LatinSquare(std::move(rows));
}

void write_latin_square(std::ostream& out, const LatinSquare& ls) {
  for (const auto& row : ls.cells()) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
    out << '\n';
  }
}

bool orthogonal(const LatinSquare& a, const LatinSquare& b) {
  const int l = a.order();
  if (b.order() != l) return false;
  std::vector<char> seen(static_cast<std::size_t>(l) * l, 0);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      if (seen[a(i, j) * l + b(i, j)]++) return false;
  return true;
}

CliqueRegularGraph cycle(int n) {
  if (n < 3) throw Error(Errc::InvalidParams, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return edges_as_cliques(n, edges);
}

CliqueRegularGraph prism(int n) {
  if (n < 3) throw Error(Errc::InvalidParams, "prism needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    edges.emplace_back(i, (i + 1) % n);
    edges.emplace_back(n + i, n + (i + 1) % n);
    edges.emplace_back(i, n + i);
  }
  return edges_as_cliques(2 * n, edges);
}

CliqueRegularGraph petersen() {
  // Kneser graph K(5,2): 2-subsets of {0..4}, adjacent when disjoint.
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) pairs.emplace_back(a, b);
  std::vector<Edge> edges;
  for (int i = 0; i < 10; ++i)
    for (int j = i + 1; j < 10; ++j) {
      auto [a, b] = pairs[i];
      auto [c, e] = pairs[j];
      if (a != c && a != e && b != c && b != e) edges.emplace_back(i, j);
    }
  return edges_as_cliques(10, edges);
}

CliqueRegularGraph random_regular(int n, int d, std::uint64_t seed) {
  if (n < 2 || d < 1 || d >= n)
    throw Error(Errc::InvalidParams, "random_regular needs 1 <= d < n");
  if ((static_cast<long long>(n) * d) % 2 != 0)
    throw Error(Errc::InvalidParams, "n*d must be even");
  constexpr int kMaxRetries = 1000;
  Rng rng(seed);
  std::vector<int> stubs(static_cast<std::size_t>(n) * d);
  for (int attempt = 1; attempt <= kMaxRetries; ++attempt) {
    for (std::size_t i = 0; i < stubs.size(); ++i) stubs[i] = static_cast<int>(i) / d;
    for (std::size_t i = stubs.size() - 1; i > 0; --i) std::swap(stubs[i], stubs[rng.below(i + 1)]);
    std::set<Edge> seen;
    bool ok = true;
    for (std::size_t i = 0; i < stubs.size() && ok; i += 2) {
      int u = stubs[i], v = stubs[i + 1];
      ok = u != v && seen.emplace(u, v).second;
    }
    if (ok) return edges_as_cliques(n, {seen.begin(), seen.end()});
  }
  throw Error(Errc::GenerationFailed, "no simple pairing after " + std::to_string(kMaxRetries) + " retries");
}

CliqueRegularGraph rook_graph(int m) {
  if (m < 2) throw Error(Errc::InvalidParams, "rook graph needs side m >= 2");
  std::vector<std::vector<int>> cliques;
  for (int r = 0; r < m; ++r) {
    std::vector<int> row;
    for (int c = 0; c < m; ++c) row.push_back(r * m + c);
    cliques.push_back(row);
  }
  for (int c = 0; c < m; ++c) {
    std::vector<int> col;
    for (int r = 0; r < m; ++r) col.push_back(r * m + c);
    cliques.push_back(col);
  }
  return from_cliques(m * m, cliques);
}

LatinSquare latin_square_cyclic(int l) {
  if (l < 2) throw Error(Errc::InvalidParams, "Latin square order must be >= 2");
  std::vector<std::vector<int>> cells(l, std::vector<int>(l));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) cells[i][j] = (i + j) % l;
  return LatinSquare(std::move(cells));
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

std::vector<LatinSquare> mols_prime(int l, int t) {
  if (!is_prime(l)) throw Error(Errc::NotPrime, std::to_string(l) + " is not prime");
  if (t < 1 || t > l - 1) throw Error(Errc::InvalidParams, "need 1 <= t <= l-1");
  std::vector<LatinSquare> out;
  for (int a = 1; a <= t; ++a) {
    std::vector<std::vector<int>> cells(l, std::vector<int>(l));
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j) cells[i][j] = (a * i + j) % l;
    out.emplace_back(std::move(cells));
  }
  return out;
}

CliqueRegularGraph latin_square_graph(const LatinSquare& ls) { return ols_graph({ls}); }

CliqueRegularGraph ols_graph(const std::vector<LatinSquare>& squares) {
  if (squares.empty()) throw Error(Errc::InvalidParams, "need at least one Latin square");
  const int l = squares[0].order();
  for (const auto& s : squares)
    if (s.order() != l) throw Error(Errc::InvalidParams, "Latin squares of different orders");
  for (std::size_t a = 0; a < squares.size(); ++a)
    for (std::size_t b = a + 1; b < squares.size(); ++b)
      if (!orthogonal(squares[a], squares[b]))
        throw Error(Errc::NotOrthogonal, "squares " + std::to_string(a) + " and " + std::to_string(b) +
                                             " are not orthogonal");
  std::vector<std::vector<int>> cliques;
  for (int r = 0; r < l; ++r) {
    std::vector<int> row;
    for (int c = 0; c < l; ++c) row.push_back(r * l + c);
    cliques.push_back(row);
  }
  for (int c = 0; c < l; ++c) {
    std::vector<int> col;
    for (int r = 0; r < l; ++r) col.push_back(r * l + c);
    cliques.push_back(col);
  }
  for (const auto& s : squares) {
    std::vector<std::vector<int>> classes(l);
    for (int r = 0; r < l; ++r)
      for (int c = 0; c < l; ++c) classes[s(r, c)].push_back(r * l + c);
    for (auto& cl : classes) cliques.push_back(std::move(cl));
  }
  return from_cliques(l * l, cliques);
}

CliqueRegularGraph line_graph(const Graph& h) {
  auto r = h.regular_degree();
  if (!r) throw Error(Errc::NotRegular, "line_graph host must be regular");
  if (*r < 2) throw Error(Errc::InvalidParams, "line_graph host degree must be >= 2");
  const std::vector<Edge> he = h.edges();
  std::vector<std::vector<int>> star(h.order());
  for (std::size_t i = 0; i < he.size(); ++i) {
    star[he[i].u].push_back(static_cast<int>(i));
    star[he[i].v].push_back(static_cast<int>(i));
  }
  return from_cliques(static_cast<int>(he.size()), star);
}

Graph complete_graph(int n) {
  if (n < 1) throw Error(Errc::InvalidParams, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

}  // namespace cliquewalk
