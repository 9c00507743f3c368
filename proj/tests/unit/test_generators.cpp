#include <doctest.h>

#include <algorithm>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "cliquewalk/error.hpp"
#include "cliquewalk/generators.hpp"
#include "cliquewalk/graph_io.hpp"
#include "support.hpp"

using namespace cliquewalk;

namespace {

// Eigen's own solver, rounded and grouped: (value, multiplicity) descending.
std::vector<std::pair<long, int>> rounded_spectrum(const CliqueRegularGraph& g) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g.adjacency(), Eigen::EigenvaluesOnly);
  std::vector<std::pair<long, int>> out;
  for (int i = es.eigenvalues().size() - 1; i >= 0; --i) {
    const long v = std::lround(es.eigenvalues()(i));
    CHECK(std::abs(es.eigenvalues()(i) - v) < 1e-8);
    if (!out.empty() && out.back().first == v)
      ++out.back().second;
    else
      out.emplace_back(v, 1);
  }
  return out;
}

}  // namespace

TEST_CASE("cycle, prism, petersen") {
  const auto c7 = cycle(7);
  CHECK(c7.order() == 7);
  CHECK(c7.d() == 2);
  CHECK(c7.l() == 2);
  CHECK_FALSE(c7.flags().bipartite);
  CHECK(cycle(8).flags().bipartite);
  CHECK(error_of([] { cycle(2); }) == Errc::InvalidParams);

  const auto cube = prism(4);
  CHECK(cube.order() == 8);
  CHECK(cube.d() == 3);
  CHECK(cube.flags().bipartite);
  CHECK_FALSE(prism(5).flags().bipartite);
  CHECK(prism(17).graph().edge_count() == 51);

  const auto p = petersen();
  CHECK(p.order() == 10);
  CHECK(p.d() == 3);
  CHECK(p.l() == 2);
  CHECK(p.graph().edge_count() == 15);
}

TEST_CASE("random regular graphs") {
  const auto a = random_regular(20, 3, 1);
  const auto b = random_regular(20, 3, 1);
  CHECK(a.graph().edges() == b.graph().edges());
  CHECK(graph_document_text(a) == graph_document_text(b));
  CHECK(a.graph().regular_degree() == 3);
  CHECK(a.d() == 3);
  CHECK(a.l() == 2);
  CHECK(random_regular(20, 3, 2).graph().edges() != a.graph().edges());
  CHECK(error_of([] { random_regular(9, 3, 1); }) == Errc::InvalidParams);
  CHECK(error_of([] { random_regular(4, 4, 1); }) == Errc::InvalidParams);
  CHECK(error_of([] { random_regular(4, 0, 1); }) == Errc::InvalidParams);
}

TEST_CASE("rook graphs") {
  const auto r2 = rook_graph(2);
  CHECK(r2.order() == 4);
  CHECK(r2.flags().bipartite);
  for (int m : {3, 4, 5, 6}) {
    const auto r = rook_graph(m);
    CHECK(r.d() == 2);
    CHECK(r.l() == m);
    CHECK(check_incidence_identity(r));
    const auto spec = rounded_spectrum(r);
    REQUIRE(spec.size() == 3);
    CHECK(spec[0] == std::pair<long, int>{2 * (m - 1), 1});
    CHECK(spec[1] == std::pair<long, int>{m - 2, 2 * (m - 1)});
    CHECK(spec[2] == std::pair<long, int>{-2, (m - 1) * (m - 1)});
  }
  CHECK(error_of([] { rook_graph(1); }) == Errc::InvalidParams);
}

TEST_CASE("Latin squares") {
  CHECK(latin_square_cyclic(2).cells() == std::vector<std::vector<int>>{{0, 1}, {1, 0}});
  CHECK(error_of([] { LatinSquare({{0, 1}, {0, 1}}); }) == Errc::InvalidParams);
  CHECK(error_of([] { LatinSquare({{0, 0}, {1, 1}}); }) == Errc::InvalidParams);
  CHECK(error_of([] { LatinSquare({{0, 2}, {2, 0}}); }) == Errc::InvalidParams);

  std::stringstream io;
  write_latin_square(io, latin_square_cyclic(5));
  CHECK(read_latin_square(io) == latin_square_cyclic(5));
  std::istringstream bad("0 1\n1 x\n");
  CHECK(error_of([&] { read_latin_square(bad); }) == Errc::InvalidParams);

  const auto m7 = mols_prime(7, 6);
  CHECK(m7.size() == 6);
  for (std::size_t a = 0; a < m7.size(); ++a)
    for (std::size_t b = a + 1; b < m7.size(); ++b) CHECK(orthogonal(m7[a], m7[b]));
  CHECK_FALSE(orthogonal(m7[0], m7[0]));
  CHECK(error_of([] { mols_prime(4, 2); }) == Errc::NotPrime);
  CHECK(error_of([] { mols_prime(5, 5); }) == Errc::InvalidParams);
  CHECK(is_prime(2));
  CHECK(is_prime(13));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
}

TEST_CASE("Latin square graphs") {
  for (int l : {3, 4, 5, 7}) {
    const auto g = latin_square_graph(latin_square_cyclic(l));
    CHECK(g.order() == l * l);
    CHECK(g.d() == 3);
    CHECK(g.l() == l);
    CHECK(check_incidence_identity(g));
    // srg(l^2, 3(l-1), l, 6): eigenvalues 3(l-1), l-3, -3
    const auto spec = rounded_spectrum(g);
    REQUIRE(spec.size() == 3);
    CHECK(spec[0] == std::pair<long, int>{3 * (l - 1), 1});
    CHECK(spec[1] == std::pair<long, int>{l - 3, 3 * (l - 1)});
    CHECK(spec[2] == std::pair<long, int>{-3, (l - 1) * (l - 2)});
  }
  const auto one = ols_graph(mols_prime(5, 1));
  CHECK(one.graph().edges() == latin_square_graph(latin_square_cyclic(5)).graph().edges());
}

TEST_CASE("net from three orthogonal squares of order 7") {
  const auto g = ols_graph(mols_prime(7, 3));
  CHECK(g.order() == 49);
  CHECK(g.d() == 5);
  CHECK(g.l() == 7);
  CHECK(g.graph().regular_degree() == 30);
  const auto spec = rounded_spectrum(g);
  REQUIRE(spec.size() == 3);
  CHECK(spec[0] == std::pair<long, int>{30, 1});
  CHECK(spec[1] == std::pair<long, int>{2, 30});
  CHECK(spec[2] == std::pair<long, int>{-5, 18});

  auto sq = mols_prime(5, 2);
  sq.push_back(sq[0]);
  CHECK(error_of([&] { ols_graph(sq); }) == Errc::NotOrthogonal);
  CHECK(error_of([] { ols_graph({latin_square_cyclic(3), latin_square_cyclic(4)}); }) == Errc::InvalidParams);
}

TEST_CASE("line graphs") {
  const auto oct = line_graph(complete_graph(4));
  CHECK(oct.order() == 6);
  CHECK(oct.d() == 2);
  CHECK(oct.l() == 3);
  CHECK(oct.graph().regular_degree() == 4);
  CHECK(oct.graph().edge_count() == 12);

  const auto c5 = line_graph(cycle(5).graph());
  CHECK(c5.order() == 5);
  CHECK(c5.graph().regular_degree() == 2);
  CHECK_FALSE(c5.flags().bipartite);

  const auto lp = line_graph(petersen().graph());
  CHECK(lp.order() == 15);
  CHECK(lp.graph().regular_degree() == 4);
  CHECK(lp.l() == 3);

  const Graph path = Graph::from_edges(3, {{0, 1}, {1, 2}});
  CHECK(error_of([&] { line_graph(path); }) == Errc::NotRegular);
}
