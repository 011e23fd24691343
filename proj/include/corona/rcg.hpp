#ifndef CORONA_RCG_HPP
#define CORONA_RCG_HPP

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "corona/errors.hpp"
#include "corona/graph.hpp"

namespace corona {

/// Parameters of the recursive corona graph C_q(g): q-clique seed, g corona steps.
class RcgParams {
 public:
  RcgParams(std::uint32_t q, std::uint32_t g) : q_(q), g_(g) {
    if (q < 2) throw invalid_argument("q must be at least 2, got " + std::to_string(q));
  }

  std::uint32_t q() const noexcept { return q_; }
  std::uint32_t g() const noexcept { return g_; }

  RcgParams with_generation(std::uint32_t g) const { return RcgParams(q_, g); }

  friend bool operator==(const RcgParams&, const RcgParams&) = default;

 private:
  std::uint32_t q_;
  std::uint32_t g_;
};

/// q(q+1)^g, saturating at UINT64_MAX.
inline std::uint64_t rcg_order_u64(std::uint32_t q, std::uint32_t g) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t n = q;
  for (std::uint32_t i = 0; i < g; ++i) {
    if (n > kMax / (q + 1ull)) return kMax;
    n *= q + 1ull;
  }
  return n;
}

inline std::uint64_t rcg_order_u64(const RcgParams& p) { return rcg_order_u64(p.q(), p.g()); }

struct BuildOptions {
  std::uint64_t vertex_budget = 1'000'000;
};

/// Explicit C_q(g) together with the generation at which each vertex appeared.
struct CoronaGraph {
  Graph graph;
  RcgParams params;
  std::vector<std::uint32_t> birth;
};

inline CoronaGraph build_rcg(const RcgParams& params, const BuildOptions& options = {}) {
  const std::uint64_t required = rcg_order_u64(params);
  if (required > options.vertex_budget)
    throw resource_limit_error("C_" + std::to_string(params.q()) + "(" +
                                   std::to_string(params.g()) + ") exceeds the vertex budget",
                               required, options.vertex_budget);

  const Graph clique = complete_graph(params.q());
  Graph current = clique;
  std::vector<std::uint32_t> birth(params.q(), 0);
  for (std::uint32_t step = 1; step <= params.g(); ++step) {
    current = corona_product(current, clique);
    birth.resize(current.vertex_count(), step);
  }
  return CoronaGraph{std::move(current), params, std::move(birth)};
}

/// Generation at which vertex `v` was added, read off the append layout.
inline std::uint32_t birth_generation(std::uint64_t v, const RcgParams& params) {
  if (v >= rcg_order_u64(params))
    throw invalid_argument("vertex " + std::to_string(v) + " is outside C_" +
                           std::to_string(params.q()) + "(" + std::to_string(params.g()) + ")");
  std::uint32_t b = 0;
  while (v >= rcg_order_u64(params.q(), b)) ++b;
  return b;
}

}  // namespace corona

#endif  // CORONA_RCG_HPP
