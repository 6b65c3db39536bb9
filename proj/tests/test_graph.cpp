#include <doctest.h>

#include <map>

#include "qcount/errors.hpp"
#include "qcount/graph.hpp"

using namespace qcount;

TEST_CASE("complete bipartite construction") {
  const SimpleGraph k11 = complete_bipartite(1, 1);
  CHECK(k11.edge_count() == 1);
  CHECK(k11.has_edge(0, 1));

  const SimpleGraph k53 = complete_bipartite(5, 3);
  CHECK(k53.edge_count() == 15);
  for (std::size_t u = 0; u < 5; ++u) CHECK(k53.degree(u) == 3);
  for (std::size_t v = 5; v < 8; ++v) CHECK(k53.degree(v) == 5);
  CHECK_FALSE(k53.is_regular());

  const SimpleGraph k44 = complete_bipartite(4, 4);
  CHECK(k44.is_regular());
  CHECK(k44.regular_degree() == 4);
}

TEST_CASE("complete graph construction") {
  CHECK(complete_graph(2).edge_count() == 1);
  CHECK(complete_graph(5).edge_count() == 10);
  const SimpleGraph k6 = complete_graph(6);
  CHECK(k6.is_regular());
  CHECK(k6.regular_degree() == 5);
}

TEST_CASE("simple graph rejects loops and duplicate edges") {
  SimpleGraph g(3);
  CHECK_THROWS_AS(g.add_edge(1, 1), DomainError);
  g.add_edge(0, 1);
  g.add_edge(1, 0);  // set semantics
  CHECK(g.edge_count() == 1);
}

TEST_CASE("connectivity") {
  CHECK(is_connected(complete_bipartite(3, 3)));

  SimpleGraph two_edges(4);
  two_edges.add_edge(0, 1);
  two_edges.add_edge(2, 3);
  CHECK_FALSE(is_connected(two_edges));

  // four vertices, four edges, connected
  SimpleGraph ring(4);
  ring.add_edge(0, 1);
  ring.add_edge(1, 3);
  ring.add_edge(3, 2);
  ring.add_edge(0, 2);
  CHECK(is_connected(ring));
}

TEST_CASE("round-robin coloring of K_{n,n}") {
  const ColoredGraph k11 = edge_color_bipartite(complete_bipartite(1, 1));
  CHECK(k11.color.at({0, 1}) == 0);
  CHECK(is_properly_colored(k11));

  const ColoredGraph k22 = edge_color_bipartite(complete_bipartite(2, 2));
  CHECK(k22.color.at({0, 2}) == 0);
  CHECK(k22.color.at({0, 3}) == 1);
  CHECK(k22.color.at({1, 2}) == 1);
  CHECK(k22.color.at({1, 3}) == 0);

  const ColoredGraph k44 = edge_color_bipartite(complete_bipartite(4, 4));
  CHECK(is_properly_colored(k44));
  // every vertex sees every color exactly once
  std::map<std::size_t, std::set<std::size_t>> seen;
  for (const auto& [edge, color] : k44.color) {
    seen[edge.first].insert(color);
    seen[edge.second].insert(color);
  }
  for (std::size_t v = 0; v < 8; ++v) CHECK(seen[v].size() == 4);

  CHECK_THROWS_AS(edge_color_bipartite(complete_bipartite(5, 3)), DomainError);
}

TEST_CASE("circle-method coloring of even complete graphs") {
  const ColoredGraph k2 = edge_color_complete_even(complete_graph(2));
  CHECK(k2.color.at({0, 1}) == 0);

  for (std::size_t n : {4u, 6u, 8u}) {
    const ColoredGraph cg = edge_color_complete_even(complete_graph(n));
    CHECK(cg.degree == n - 1);
    CHECK(is_properly_colored(cg));
    // each color class is a perfect matching
    std::map<std::size_t, std::set<std::size_t>> covered;
    for (const auto& [edge, color] : cg.color) {
      CHECK(covered[color].insert(edge.first).second);
      CHECK(covered[color].insert(edge.second).second);
    }
    CHECK(covered.size() == n - 1);
    for (const auto& [color, vertices] : covered) CHECK(vertices.size() == n);
  }

  CHECK_THROWS_AS(edge_color_complete_even(complete_graph(5)), DomainError);
}

TEST_CASE("properness detects violations") {
  SimpleGraph g(4);  // path-square: 0-2, 0-3, 1-2, 1-3 is K_{2,2} relabeled
  g.add_edge(0, 2);
  g.add_edge(0, 3);
  g.add_edge(1, 2);
  g.add_edge(1, 3);
  ColoredGraph bad{g, 2, {{{0, 2}, 0}, {{0, 3}, 0}, {{1, 2}, 1}, {{1, 3}, 1}}};
  CHECK_FALSE(is_properly_colored(bad));

  ColoredGraph good{g, 2, {{{0, 2}, 0}, {{0, 3}, 1}, {{1, 2}, 1}, {{1, 3}, 0}}};
  CHECK(is_properly_colored(good));

  // out-of-range color
  ColoredGraph bad_color{g, 2, {{{0, 2}, 0}, {{0, 3}, 1}, {{1, 2}, 1}, {{1, 3}, 2}}};
  CHECK_FALSE(is_properly_colored(bad_color));
}

TEST_CASE("json round trip") {
  const SimpleGraph g = complete_bipartite(3, 3);
  const SimpleGraph back = simple_graph_from_json(to_json(g));
  CHECK(back.vertex_count() == g.vertex_count());
  CHECK(back.edges() == g.edges());

  const ColoredGraph cg = edge_color_bipartite(complete_bipartite(4, 4));
  const ColoredGraph cback = colored_graph_from_json(to_json(cg));
  CHECK(cback.degree == cg.degree);
  CHECK(cback.color == cg.color);

  ColoredGraph improper = cg;
  improper.color[{0, 4}] = improper.color[{0, 5}];
  CHECK_THROWS_AS(colored_graph_from_json(to_json(improper)), InvariantError);
}
