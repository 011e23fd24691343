#ifndef CORONA_IO_HPP
#define CORONA_IO_HPP

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "corona/errors.hpp"
#include "corona/graph.hpp"
#include "corona/rcg.hpp"

namespace corona::io {

// Edge-list text format:
//   # q <q>
//   # g <g>
//   # N <vertex count>
//   # M <edge count>
//   u v            one edge per line, 0-based, u < v, lexicographic order
// Any other line starting with '#' is a comment.

inline void write_edge_list(std::ostream& out, const CoronaGraph& cg) {
  out << "# q " << cg.params.q() << '\n'
      << "# g " << cg.params.g() << '\n'
      << "# N " << cg.graph.vertex_count() << '\n'
      << "# M " << cg.graph.edge_count() << '\n';
  for (auto [u, v] : cg.graph.edges()) out << u << ' ' << v << '\n';
}

/// Parses the edge-list format. The vertex count comes from the "# N" header when
/// present, otherwise from the largest endpoint.
inline Graph read_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::int64_t declared_n = -1;
  std::int64_t declared_m = -1;
  std::uint64_t max_vertex = 0;
  bool any = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream ls(line);
    if (line.front() == '#') {
      std::string hash, key;
      std::int64_t value = 0;
      ls >> hash >> key;
      if ((key == "N" || key == "M") && (ls >> value)) (key == "N" ? declared_n : declared_m) = value;
      continue;
    }
    std::int64_t u = -1, v = -1;
    std::string extra;
    if (!(ls >> u >> v) || (ls >> extra) || u < 0 || v < 0)
      throw invalid_argument("malformed edge on line " + std::to_string(line_no));
    if (u >= v) throw invalid_argument("edge endpoints must satisfy u < v on line " + std::to_string(line_no));
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    max_vertex = std::max<std::uint64_t>(max_vertex, static_cast<std::uint64_t>(v));
    any = true;
  }
  const std::size_t n =
      declared_n >= 0 ? static_cast<std::size_t>(declared_n) : (any ? max_vertex + 1 : 0);
  if (declared_m >= 0 && static_cast<std::size_t>(declared_m) != edges.size())
    throw invalid_argument("edge count does not match the M header");
  return Graph(n, std::move(edges));
}

/// Graphviz output; each vertex is labelled with its birth generation.
inline void write_dot(std::ostream& out, const CoronaGraph& cg) {
  out << "graph C_" << cg.params.q() << '_' << cg.params.g() << " {\n";
  for (Vertex v = 0; v < cg.graph.vertex_count(); ++v)
    out << "  " << v << " [label=\"" << cg.birth[v] << "\"];\n";
  for (auto [u, v] : cg.graph.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
}

inline nlohmann::json graph_to_json(const CoronaGraph& cg) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : cg.graph.edges()) edges.push_back({u, v});
  return {{"q", cg.params.q()},
          {"g", cg.params.g()},
          {"vertex_count", cg.graph.vertex_count()},
          {"edge_count", cg.graph.edge_count()},
          {"birth", cg.birth},
          {"edges", std::move(edges)}};
}

}  // namespace corona::io

#endif  // CORONA_IO_HPP
