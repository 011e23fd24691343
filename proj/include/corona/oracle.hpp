#ifndef CORONA_ORACLE_HPP
#define CORONA_ORACLE_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <queue>
#include <utility>
#include <vector>

#include "corona/bignum.hpp"
#include "corona/errors.hpp"
#include "corona/graph.hpp"
#include "corona/matrix.hpp"
#include "corona/rcg.hpp"

// Brute-force measurements on explicit graphs. Nothing in here knows about the
// closed forms or the spectral recursions; it is the reference they are tested
// against.

namespace corona::oracle {

inline constexpr std::size_t kEigenDimensionLimit = 2000;
inline constexpr std::size_t kMatrixTreeDimensionLimit = 500;
inline constexpr std::size_t kResistanceDimensionLimit = 2000;

/// Sum of d(u, v) over unordered pairs, one BFS per source.
inline std::uint64_t bfs_total_distance(const Graph& graph) {
  const std::size_t n = graph.vertex_count();
  std::uint64_t twice = 0;
  std::vector<std::uint32_t> dist(n);
  std::vector<Vertex> queue(n);
  constexpr auto kUnseen = ~std::uint32_t{0};
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), kUnseen);
    std::size_t head = 0, tail = 0;
    dist[s] = 0;
    queue[tail++] = s;
    while (head < tail) {
      const Vertex u = queue[head++];
      twice += dist[u];
      for (Vertex w : graph.neighbors(u)) {
        if (dist[w] == kUnseen) {
          dist[w] = dist[u] + 1;
          queue[tail++] = w;
        }
      }
    }
    if (tail != n) throw connectivity_error("graph is disconnected");
  }
  return twice / 2;
}

inline std::map<std::uint64_t, std::uint64_t> degree_histogram(const Graph& graph) {
  std::map<std::uint64_t, std::uint64_t> hist;
  for (Vertex v = 0; v < graph.vertex_count(); ++v) ++hist[graph.degree(v)];
  return hist;
}

/// 2 e_v / (d_v (d_v - 1)) per vertex, 0 below degree 2.
inline std::vector<Rational> local_clustering(const Graph& graph) {
  std::vector<Rational> out(graph.vertex_count());
  for (Vertex v = 0; v < graph.vertex_count(); ++v) {
    const auto nbrs = graph.neighbors(v);
    const std::int64_t d = static_cast<std::int64_t>(nbrs.size());
    if (d < 2) continue;
    std::int64_t links = 0;
    for (std::size_t i = 0; i < nbrs.size(); ++i)
      for (std::size_t j = i + 1; j < nbrs.size(); ++j)
        if (graph.has_edge(nbrs[i], nbrs[j])) ++links;
    out[v] = Rational(2 * links, d * (d - 1));
  }
  return out;
}

inline Rational mean_neighbor_degree(const Graph& graph, Vertex v) {
  const auto nbrs = graph.neighbors(v);
  if (nbrs.empty()) return Rational(0);
  std::int64_t total = 0;
  for (Vertex w : nbrs) total += static_cast<std::int64_t>(graph.degree(w));
  return Rational(total, static_cast<std::int64_t>(nbrs.size()));
}

/// Mean neighbor degree over each birth class: the sum of neighbor degrees across the
/// class divided by (class size * degree). Individual vertices of one class differ
/// (their parents were born at different times) but they all share one degree.
inline std::map<std::uint32_t, Rational> mean_neighbor_degree_by_class(const CoronaGraph& cg) {
  struct Tally {
    std::size_t degree;
    std::int64_t vertices = 0;
    std::int64_t neighbor_degree_sum = 0;
  };
  std::map<std::uint32_t, Tally> tallies;
  for (Vertex v = 0; v < cg.graph.vertex_count(); ++v) {
    auto [it, inserted] = tallies.try_emplace(cg.birth[v], Tally{cg.graph.degree(v)});
    if (it->second.degree != cg.graph.degree(v))
      throw inconsistency_error("vertices of birth class " + std::to_string(cg.birth[v]) +
                                " have different degrees");
    ++it->second.vertices;
    for (Vertex w : cg.graph.neighbors(v))
      it->second.neighbor_degree_sum += static_cast<std::int64_t>(cg.graph.degree(w));
  }
  std::map<std::uint32_t, Rational> by_class;
  for (const auto& [birth, t] : tallies) {
    by_class.emplace(birth, t.degree == 0 ? Rational(0)
                                          : Rational(t.neighbor_degree_sum,
                                                     t.vertices * static_cast<std::int64_t>(t.degree)));
  }
  return by_class;
}

/// Real symmetric matrix; symmetry holds by construction.
class DenseSymmetricMatrix {
 public:
  explicit DenseSymmetricMatrix(std::size_t n) : m_(n, 0.0) {}

  template <class T>
  explicit DenseSymmetricMatrix(const DenseMatrix<T>& source) : m_(source.dimension(), 0.0) {
    const std::size_t n = source.dimension();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        if (source(i, j) != source(j, i)) throw invalid_argument("matrix is not symmetric");
        set(i, j, static_cast<double>(source(i, j)));
      }
  }

  std::size_t dimension() const noexcept { return m_.dimension(); }
  double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  void set(std::size_t i, std::size_t j, double value) {
    m_(i, j) = value;
    m_(j, i) = value;
  }

  double trace() const {
    double t = 0;
    for (std::size_t i = 0; i < dimension(); ++i) t += m_(i, i);
    return t;
  }

  double frobenius_squared() const {
    double s = 0;
    for (std::size_t i = 0; i < dimension(); ++i)
      for (std::size_t j = 0; j < dimension(); ++j) s += m_(i, j) * m_(i, j);
    return s;
  }

  const DenseMatrix<double>& dense() const noexcept { return m_; }

 private:
  DenseMatrix<double> m_;
};

/// All eigenvalues by cyclic Jacobi rotations, sorted descending. Stops once the
/// off-diagonal Frobenius norm is at most tol * ||A||_F.
inline std::vector<double> symmetric_eigenvalues(const DenseSymmetricMatrix& matrix,
                                                 double tol = 1e-14, int max_sweeps = 100) {
  const std::size_t n = matrix.dimension();
  if (n > kEigenDimensionLimit)
    throw resource_limit_error("matrix too large for the Jacobi eigensolver", n,
                               kEigenDimensionLimit);
  if (!(tol > 0)) throw invalid_argument("tolerance must be positive");

  DenseMatrix<double> a = matrix.dense();
  const double norm = std::sqrt(matrix.frobenius_squared());

  auto off_norm = [&] {
    double s = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += a(i, j) * a(i, j);
    return std::sqrt(2.0 * s);
  };

  bool converged = false;
  for (int sweep = 0; sweep <= max_sweeps; ++sweep) {
    if (off_norm() <= tol * norm) {
      converged = true;
      break;
    }
    if (sweep == max_sweeps) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        // Below the resolution of both diagonal entries: the rotation would be a no-op.
        if (sweep > 3 && std::abs(a(p, p)) + 100.0 * std::abs(apq) == std::abs(a(p, p)) &&
            std::abs(a(q, q)) + 100.0 * std::abs(apq) == std::abs(a(q, q))) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t = 0;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = a(k, p);
          const double akq = a(k, q);
          const double nkp = c * akp - s * akq;
          const double nkq = s * akp + c * akq;
          a(k, p) = a(p, k) = nkp;
          a(k, q) = a(q, k) = nkq;
        }
        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = a(q, p) = 0.0;
      }
    }
  }
  if (!converged) throw numerical_error("Jacobi eigensolver did not converge");

  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i);
  std::sort(eig.begin(), eig.end(), std::greater<>());
  return eig;
}

/// Spanning-tree count as the Laplacian cofactor with row and column `deleted`
/// removed, by fraction-free Bareiss elimination over the integers.
inline BigInt matrix_tree_count(const Graph& graph, std::size_t deleted = 0) {
  const std::size_t n = graph.vertex_count();
  if (n > kMatrixTreeDimensionLimit)
    throw resource_limit_error("graph too large for exact matrix-tree count", n,
                               kMatrixTreeDimensionLimit);
  if (n == 0) return BigInt(0);
  if (deleted >= n) throw invalid_argument("deleted index out of range");
  if (n == 1) return BigInt(1);

  const auto lap = matrix_of(graph, MatrixKind::laplacian);
  const std::size_t m = n - 1;
  std::vector<std::vector<BigInt>> a(m, std::vector<BigInt>(m));
  for (std::size_t i = 0, ri = 0; i < n; ++i) {
    if (i == deleted) continue;
    for (std::size_t j = 0, cj = 0; j < n; ++j) {
      if (j == deleted) continue;
      a[ri][cj++] = lap(i, j);
    }
    ++ri;
  }

  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < m; ++k) {
    if (a[k][k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < m && a[pivot][k] == 0) ++pivot;
      if (pivot == m) return BigInt(0);
      std::swap(a[k], a[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < m; ++i) {
      for (std::size_t j = k + 1; j < m; ++j) {
        BigInt v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].backend().data(), v.backend().data(), prev.backend().data());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[m - 1][m - 1];
}

/// Kirchhoff index sum_{u<v} r(u, v). Grounds the last vertex, inverts the reduced
/// Laplacian through its Cholesky factor G, and uses R = n tr(G) - sum(G).
inline double resistance_sum(const Graph& graph) {
  const std::size_t n = graph.vertex_count();
  if (n > kResistanceDimensionLimit)
    throw resource_limit_error("graph too large for the resistance oracle", n,
                               kResistanceDimensionLimit);
  if (!graph.connected()) throw connectivity_error("graph is disconnected");
  if (n < 2) return 0.0;

  const std::size_t m = n - 1;
  const auto lap = matrix_of(graph, MatrixKind::laplacian);
  DenseMatrix<double> chol(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double s = static_cast<double>(lap(i, j));
      for (std::size_t k = 0; k < j; ++k) s -= chol(i, k) * chol(j, k);
      if (i == j) {
        if (!(s > 0)) throw numerical_error("reduced Laplacian is not positive definite");
        chol(i, i) = std::sqrt(s);
      } else {
        chol(i, j) = s / chol(j, j);
      }
    }
  }

  double trace = 0, total = 0;
  std::vector<double> x(m);
  for (std::size_t col = 0; col < m; ++col) {
    // forward solve L y = e_col, then back solve L^T x = y
    std::fill(x.begin(), x.end(), 0.0);
    x[col] = 1.0;
    for (std::size_t i = col; i < m; ++i) {
      double s = x[i];
      for (std::size_t k = col; k < i; ++k) s -= chol(i, k) * x[k];
      x[i] = s / chol(i, i);
    }
    for (std::size_t i = m; i-- > 0;) {
      double s = x[i];
      for (std::size_t k = i + 1; k < m; ++k) s -= chol(k, i) * x[k];
      x[i] = s / chol(i, i);
    }
    trace += x[col];
    for (double v : x) total += v;
  }
  return static_cast<double>(n) * trace - total;
}

/// N * sum of 1/gamma over the nonzero Laplacian eigenvalues; `zero_tol` separates
/// the zero eigenvalue(s).
inline double resistance_sum_from_spectrum(const std::vector<double>& laplacian_eigenvalues,
                                           double zero_tol = 1e-8) {
  double sum = 0;
  for (double gamma : laplacian_eigenvalues)
    if (std::abs(gamma) > zero_tol) sum += 1.0 / gamma;
  return static_cast<double>(laplacian_eigenvalues.size()) * sum;
}

inline std::vector<double> adjacency_eigenvalues(const Graph& graph) {
  return symmetric_eigenvalues(DenseSymmetricMatrix(matrix_of(graph, MatrixKind::adjacency)));
}

inline std::vector<double> laplacian_eigenvalues(const Graph& graph) {
  return symmetric_eigenvalues(DenseSymmetricMatrix(matrix_of(graph, MatrixKind::laplacian)));
}

/// Everything measured from one explicit graph.
struct OracleReport {
  std::map<std::uint64_t, std::uint64_t> degree_histogram;
  std::map<std::uint32_t, Rational> mean_neighbor_degree_by_class;
  std::uint64_t total_distance = 0;
  std::vector<Rational> local_clustering_by_vertex;
  std::vector<double> adjacency_eigenvalues;
  std::vector<double> laplacian_eigenvalues;
  BigInt spanning_tree_count;
  double resistance_sum = 0;
};

inline OracleReport measure(const CoronaGraph& cg) {
  OracleReport r;
  r.degree_histogram = degree_histogram(cg.graph);
  r.mean_neighbor_degree_by_class = mean_neighbor_degree_by_class(cg);
  r.total_distance = bfs_total_distance(cg.graph);
  r.local_clustering_by_vertex = local_clustering(cg.graph);
  r.adjacency_eigenvalues = adjacency_eigenvalues(cg.graph);
  r.laplacian_eigenvalues = laplacian_eigenvalues(cg.graph);
  r.spanning_tree_count = matrix_tree_count(cg.graph);
  r.resistance_sum = resistance_sum(cg.graph);
  return r;
}

}  // namespace corona::oracle

#endif  // CORONA_ORACLE_HPP
