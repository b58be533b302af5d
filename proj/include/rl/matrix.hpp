#ifndef RL_MATRIX_HPP
#define RL_MATRIX_HPP

#include <vector>

#include "rl/graph.hpp"
#include "rl/rational.hpp"

namespace rl {

// Dense rational matrix, 1-based indices to stay aligned with vertex labels.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols, Rat(0)) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int i, int j) { return data_[idx(i, j)]; }
  const Rat& at(int i, int j) const { return data_[idx(i, j)]; }

  // Exact Gaussian elimination with row pivoting.
  Rat determinant() const;  // det of the empty matrix is 1
  int rank() const;

 private:
  std::size_t idx(int i, int j) const {
    return std::size_t(i - 1) * cols_ + (j - 1);
  }
  int rows_ = 0, cols_ = 0;
  std::vector<Rat> data_;
};

// Symmetric matrix backed either by exact rationals or by doubles; exact
// matrices also answer floating queries.  Eigenvalue work is floating,
// determinant and rank work is exact.
class SymMatrix {
 public:
  SymMatrix() = default;

  static SymMatrix zero_exact(int n);
  static SymMatrix zero_floating(int n);

  int order() const { return n_; }
  bool exact() const { return exact_; }

  const Rat& rat(int i, int j) const;
  double value(int i, int j) const;

  void set(int i, int j, const Rat& v);       // exact backing only
  void set_value(int i, int j, double v);     // floating backing only

  // Off-diagonal support matches E(g) exactly; diagonal is free.
  bool conforms_to(const Graph& g) const;

  SymMatrix delete_vertices(const VertexSet& s) const;

  // A(rows_deleted, cols_deleted); generally not symmetric.  Exact only.
  RatMatrix minor_matrix(const VertexSet& rows_del,
                         const VertexSet& cols_del) const;

  RatMatrix to_rat_matrix() const;

  double trace() const;

 private:
  int n_ = 0;
  bool exact_ = false;
  std::vector<Rat> q_;
  std::vector<double> d_;
  std::size_t idx(int i, int j) const {
    return std::size_t(i - 1) * n_ + (j - 1);
  }
};

SymMatrix adjacency_matrix(const Graph& g);

}  // namespace rl

#endif
