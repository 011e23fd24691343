#ifndef CORONA_MATRIX_HPP
#define CORONA_MATRIX_HPP

#include <cstdint>
#include <string_view>
#include <vector>

#include "corona/errors.hpp"
#include "corona/graph.hpp"

namespace corona {

/// Square row-major matrix.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t n, T fill = T{}) : n_(n), data_(n * n, fill) {}

  std::size_t dimension() const noexcept { return n_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  bool symmetric() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  template <class U>
  DenseMatrix<U> cast() const {
    DenseMatrix<U> out(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) out(i, j) = static_cast<U>((*this)(i, j));
    return out;
  }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.n_ == b.n_ && a.data_ == b.data_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

enum class MatrixKind { adjacency, laplacian, degree };

inline std::string_view to_string(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::adjacency: return "adjacency";
    case MatrixKind::laplacian: return "laplacian";
    case MatrixKind::degree: return "degree";
  }
  return "?";
}

inline constexpr std::size_t kDenseMatrixVertexLimit = 10'000;

inline DenseMatrix<std::int64_t> matrix_of(const Graph& graph, MatrixKind kind) {
  const std::size_t n = graph.vertex_count();
  if (n > kDenseMatrixVertexLimit)
    throw resource_limit_error("dense matrix too large", n, kDenseMatrixVertexLimit);
  DenseMatrix<std::int64_t> m(n);
  if (kind != MatrixKind::degree) {
    const std::int64_t off = kind == MatrixKind::adjacency ? 1 : -1;
    for (auto [u, v] : graph.edges()) {
      m(u, v) = off;
      m(v, u) = off;
    }
  }
  if (kind != MatrixKind::adjacency) {
    for (Vertex v = 0; v < n; ++v) m(v, v) = static_cast<std::int64_t>(graph.degree(v));
  }
  return m;
}

}  // namespace corona

#endif  // CORONA_MATRIX_HPP
