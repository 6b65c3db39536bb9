#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace qcount {

using Edge = std::pair<std::size_t, std::size_t>;  // stored with first < second

// Simple undirected graph: no loops, no multi-edges.
class SimpleGraph {
 public:
  explicit SimpleGraph(std::size_t vertex_count);

  std::size_t vertex_count() const { return vertex_count_; }
  const std::set<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  void add_edge(std::size_t u, std::size_t v);
  bool has_edge(std::size_t u, std::size_t v) const;
  std::size_t degree(std::size_t v) const;
  bool is_regular() const;
  std::size_t regular_degree() const;  // throws if not regular

 private:
  std::size_t vertex_count_;
  std::set<Edge> edges_;
  std::vector<std::size_t> degrees_;
};

// All cross pairs between V1 = {0..n1-1} and V2 = {n1..n1+n2-1}.
SimpleGraph complete_bipartite(std::size_t n1, std::size_t n2);
SimpleGraph complete_graph(std::size_t n);

bool is_connected(const SimpleGraph& g);

// d-regular graph together with a proper d-edge-coloring.
struct ColoredGraph {
  SimpleGraph graph;
  std::size_t degree;
  std::map<Edge, std::size_t> color;  // edge -> color in [0, degree)
};

// Round-robin 1-factorization of K_{n,n}: edge (u, n+v) gets color
// (u+v) mod n.  Requires n1 == n2.
ColoredGraph edge_color_bipartite(const SimpleGraph& g);

// Circle-method 1-factorization of K_n into n-1 perfect matchings.
// Requires even n (odd-order regular graphs need a (d+1)-th color).
ColoredGraph edge_color_complete_even(const SimpleGraph& g);

// True iff every color is < degree and no two edges at a vertex share one.
bool is_properly_colored(const ColoredGraph& cg);

// Edge-list JSON: {"vertex_count": n, "edges": [[u,v],...]} plus
// "degree"/"colors" for colored graphs.
std::string to_json(const SimpleGraph& g);
std::string to_json(const ColoredGraph& cg);
SimpleGraph simple_graph_from_json(const std::string& text);
ColoredGraph colored_graph_from_json(const std::string& text);

}  // namespace qcount
