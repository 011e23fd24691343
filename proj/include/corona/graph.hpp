#ifndef CORONA_GRAPH_HPP
#define CORONA_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "corona/errors.hpp"

namespace corona {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..vertex_count-1.
///
/// Stores a sorted edge list (u < v) and sorted adjacency lists. Immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Validates and normalizes `edges`; endpoints may come in either order.
  Graph(std::size_t vertex_count, std::vector<Edge> edges) : adjacency_(vertex_count) {
    for (auto& [u, v] : edges) {
      if (u == v) throw invalid_argument("self-loop at vertex " + std::to_string(u));
      if (u >= vertex_count || v >= vertex_count)
        throw invalid_argument("edge endpoint out of range");
      if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
      throw invalid_argument("duplicate edge");
    for (auto [u, v] : edges) {
      adjacency_[u].push_back(v);
      adjacency_[v].push_back(u);
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
    edges_ = std::move(edges);
  }

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

  bool has_edge(Vertex u, Vertex v) const {
    const auto& nbrs = adjacency_.at(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
  }

  bool connected() const {
    if (vertex_count() == 0) return true;
    std::vector<char> seen(vertex_count(), 0);
    std::queue<Vertex> frontier;
    frontier.push(0);
    seen[0] = 1;
    std::size_t reached = 1;
    while (!frontier.empty()) {
      Vertex u = frontier.front();
      frontier.pop();
      for (Vertex w : adjacency_[u]) {
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          frontier.push(w);
        }
      }
    }
    return reached == vertex_count();
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Edge> edges_;
};

inline Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  edges.reserve(n * (n > 0 ? n - 1 : 0) / 2);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
  return Graph(n, std::move(edges));
}

inline Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph(leaves + 1, std::move(edges));
}

/// Corona product: `core` keeps its indices; copy i of `attached` sits at
/// core.size + i*attached.size and every vertex of copy i is joined to core vertex i.
inline Graph corona_product(const Graph& core, const Graph& attached) {
  const std::size_t n1 = core.vertex_count();
  const std::size_t n2 = attached.vertex_count();
  if (n1 == 0) throw invalid_argument("corona product needs a nonempty first factor");
  if (n2 == 0) throw invalid_argument("corona product with an empty second factor");

  const std::size_t total = n1 + n1 * n2;
  if (total > std::numeric_limits<Vertex>::max())
    throw resource_limit_error("corona product too large for 32-bit vertex ids", total,
                               std::numeric_limits<Vertex>::max());

  std::vector<Edge> edges;
  edges.reserve(core.edge_count() + n1 * attached.edge_count() + n1 * n2);
  edges.insert(edges.end(), core.edges().begin(), core.edges().end());
  for (std::size_t i = 0; i < n1; ++i) {
    const auto offset = static_cast<Vertex>(n1 + i * n2);
    for (auto [u, v] : attached.edges()) edges.emplace_back(offset + u, offset + v);
    for (Vertex k = 0; k < n2; ++k) edges.emplace_back(static_cast<Vertex>(i), offset + k);
  }
  return Graph(total, std::move(edges));
}

}  // namespace corona

#endif  // CORONA_GRAPH_HPP
