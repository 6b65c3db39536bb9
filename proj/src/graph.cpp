#include "qcount/graph.hpp"

#include <algorithm>
#include <queue>

#include <json.hpp>

#include "qcount/errors.hpp"

namespace qcount {

SimpleGraph::SimpleGraph(std::size_t vertex_count)
    : vertex_count_(vertex_count), degrees_(vertex_count, 0) {
  if (vertex_count_ == 0) throw DomainError("SimpleGraph: needs at least one vertex");
}

void SimpleGraph::add_edge(std::size_t u, std::size_t v) {
  if (u >= vertex_count_ || v >= vertex_count_)
    throw DomainError("SimpleGraph::add_edge: vertex out of range");
  if (u == v) throw DomainError("SimpleGraph::add_edge: loops are not allowed");
  const Edge e = u < v ? Edge{u, v} : Edge{v, u};
  if (!edges_.insert(e).second) return;  // set semantics: no multi-edges
  ++degrees_[u];
  ++degrees_[v];
}

bool SimpleGraph::has_edge(std::size_t u, std::size_t v) const {
  if (u == v) return false;
  const Edge e = u < v ? Edge{u, v} : Edge{v, u};
  return edges_.count(e) > 0;
}

std::size_t SimpleGraph::degree(std::size_t v) const {
  if (v >= vertex_count_) throw DomainError("SimpleGraph::degree: vertex out of range");
  return degrees_[v];
}

bool SimpleGraph::is_regular() const {
  for (std::size_t v = 1; v < vertex_count_; ++v)
    if (degrees_[v] != degrees_[0]) return false;
  return true;
}

std::size_t SimpleGraph::regular_degree() const {
  if (!is_regular()) throw DomainError("SimpleGraph::regular_degree: graph is not regular");
  return degrees_[0];
}

SimpleGraph complete_bipartite(std::size_t n1, std::size_t n2) {
  if (n1 < 1 || n2 < 1) throw DomainError("complete_bipartite: both sides need a vertex");
  SimpleGraph g(n1 + n2);
  for (std::size_t u = 0; u < n1; ++u)
    for (std::size_t v = 0; v < n2; ++v) g.add_edge(u, n1 + v);
  return g;
}

SimpleGraph complete_graph(std::size_t n) {
  if (n < 1) throw DomainError("complete_graph: needs at least one vertex");
  SimpleGraph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

bool is_connected(const SimpleGraph& g) {
  std::vector<std::vector<std::size_t>> adj(g.vertex_count());
  for (const Edge& e : g.edges()) {
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  std::vector<bool> seen(g.vertex_count(), false);
  std::queue<std::size_t> frontier;
  frontier.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    const std::size_t v = frontier.front();
    frontier.pop();
    for (std::size_t u : adj[v]) {
      if (!seen[u]) {
        seen[u] = true;
        ++reached;
        frontier.push(u);
      }
    }
  }
  return reached == g.vertex_count();
}

ColoredGraph edge_color_bipartite(const SimpleGraph& g) {
  // recover the partition size from the structure: vertices 0..n-1 on one
  // side, n..2n-1 on the other
  const std::size_t total = g.vertex_count();
  if (total % 2 != 0)
    throw DomainError("edge_color_bipartite: requires K_{n,n} (n1 == n2)");
  const std::size_t n = total / 2;
  if (g.edge_count() != n * n)
    throw DomainError("edge_color_bipartite: graph is not complete bipartite K_{n,n}");
  for (const Edge& e : g.edges())
    if (e.first >= n || e.second < n)
      throw DomainError("edge_color_bipartite: edge does not cross the partition");
  ColoredGraph cg{g, n, {}};
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) cg.color[{u, n + v}] = (u + v) % n;
  return cg;
}

ColoredGraph edge_color_complete_even(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n % 2 != 0)
    throw DomainError("edge_color_complete_even: odd order needs d+1 colors, out of scope");
  if (g.edge_count() != n * (n - 1) / 2)
    throw DomainError("edge_color_complete_even: graph is not complete");
  ColoredGraph cg{g, n - 1, {}};
  if (n == 2) {
    cg.color[{0, 1}] = 0;
    return cg;
  }
  // circle method: vertices 0..n-2 on a circle, vertex n-1 fixed; round r
  // pairs the fixed vertex with r and (r+i) with (r-i) mod (n-1)
  const std::size_t m = n - 1;
  for (std::size_t r = 0; r < m; ++r) {
    auto edge = [](std::size_t a, std::size_t b) { return a < b ? Edge{a, b} : Edge{b, a}; };
    cg.color[edge(n - 1, r)] = r;
    for (std::size_t i = 1; i <= (n / 2) - 1; ++i) {
      const std::size_t a = (r + i) % m;
      const std::size_t b = (r + m - i) % m;
      cg.color[edge(a, b)] = r;
    }
  }
  return cg;
}

bool is_properly_colored(const ColoredGraph& cg) {
  if (!cg.graph.is_regular() || cg.graph.regular_degree() != cg.degree) return false;
  if (cg.color.size() != cg.graph.edge_count()) return false;
  std::vector<std::set<std::size_t>> seen(cg.graph.vertex_count());
  for (const auto& [edge, color] : cg.color) {
    if (!cg.graph.has_edge(edge.first, edge.second)) return false;
    if (color >= cg.degree) return false;
    if (!seen[edge.first].insert(color).second) return false;
    if (!seen[edge.second].insert(color).second) return false;
  }
  return true;
}

std::string to_json(const SimpleGraph& g) {
  nlohmann::json j;
  j["vertex_count"] = g.vertex_count();
  j["edges"] = nlohmann::json::array();
  for (const Edge& e : g.edges()) j["edges"].push_back({e.first, e.second});
  return j.dump();
}

std::string to_json(const ColoredGraph& cg) {
  nlohmann::json j;
  j["vertex_count"] = cg.graph.vertex_count();
  j["degree"] = cg.degree;
  j["edges"] = nlohmann::json::array();
  j["colors"] = nlohmann::json::array();
  for (const Edge& e : cg.graph.edges()) j["edges"].push_back({e.first, e.second});
  for (const auto& [edge, color] : cg.color)
    j["colors"].push_back({edge.first, edge.second, color});
  return j.dump();
}

SimpleGraph simple_graph_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  SimpleGraph g(j.at("vertex_count").get<std::size_t>());
  for (const auto& e : j.at("edges"))
    g.add_edge(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
  return g;
}

ColoredGraph colored_graph_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  SimpleGraph g(j.at("vertex_count").get<std::size_t>());
  for (const auto& e : j.at("edges"))
    g.add_edge(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
  ColoredGraph cg{std::move(g), j.at("degree").get<std::size_t>(), {}};
  for (const auto& c : j.at("colors")) {
    const std::size_t u = c.at(0).get<std::size_t>();
    const std::size_t v = c.at(1).get<std::size_t>();
    cg.color[u < v ? Edge{u, v} : Edge{v, u}] = c.at(2).get<std::size_t>();
  }
  if (!is_properly_colored(cg))
    throw InvariantError("colored_graph_from_json: coloring is not proper");
  return cg;
}

}  // namespace qcount
