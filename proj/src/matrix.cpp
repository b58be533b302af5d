#include "rl/matrix.hpp"

#include <algorithm>

#include "rl/errors.hpp"

namespace rl {

Rat rat_from_string(const std::string& text) {
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(),
                         [](char c) { return c == ' ' || c == '\t'; }),
          s.end());
  if (s.empty()) throw invalid_input("empty rational literal");
  auto dot = s.find('.');
  try {
    if (dot != std::string::npos) {
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      std::size_t frac = s.size() - dot - 1;
      bool neg = false;
      if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
        neg = digits[0] == '-';
        digits = digits.substr(1);
      }
      if (digits.empty()) throw invalid_input("bad decimal: " + text);
      mpz_class num(digits, 10);
      mpz_class den(1);
      for (std::size_t k = 0; k < frac; ++k) den *= 10;
      Rat r(num, den);
      r.canonicalize();
      return neg ? Rat(-r) : r;
    }
    Rat r(s, 10);  // base fixed so "010" stays decimal
    if (r.get_den() == 0) throw invalid_input("zero denominator: " + text);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw invalid_input("bad rational literal: " + text);
  }
}

std::string rat_to_string(const Rat& r) { return r.get_str(); }

Rat RatMatrix::determinant() const {
  if (rows_ != cols_) throw precondition_error("determinant of a non-square matrix");
  const int n = rows_;
  if (n == 0) return Rat(1);
  RatMatrix m = *this;
  Rat det(1);
  for (int col = 1; col <= n; ++col) {
    int pivot = 0;
    for (int r = col; r <= n; ++r)
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot == 0) return Rat(0);
    if (pivot != col) {
      for (int j = col; j <= n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
      det = -det;
    }
    det *= m.at(col, col);
    for (int r = col + 1; r <= n; ++r) {
      if (m.at(r, col) == 0) continue;
      Rat factor = m.at(r, col) / m.at(col, col);
      for (int j = col; j <= n; ++j) m.at(r, j) -= factor * m.at(col, j);
    }
  }
  return det;
}

int RatMatrix::rank() const {
  RatMatrix m = *this;
  int rank = 0;
  int row = 1;
  for (int col = 1; col <= cols_ && row <= rows_; ++col) {
    int pivot = 0;
    for (int r = row; r <= rows_; ++r)
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot == 0) continue;
    if (pivot != row)
      for (int j = col; j <= cols_; ++j) std::swap(m.at(pivot, j), m.at(row, j));
    for (int r = row + 1; r <= rows_; ++r) {
      if (m.at(r, col) == 0) continue;
      Rat factor = m.at(r, col) / m.at(row, col);
      for (int j = col; j <= cols_; ++j) m.at(r, j) -= factor * m.at(row, j);
    }
    ++rank;
    ++row;
  }
  return rank;
}

SymMatrix SymMatrix::zero_exact(int n) {
  SymMatrix a;
  a.n_ = n;
  a.exact_ = true;
  a.q_.assign(std::size_t(n) * n, Rat(0));
  a.d_.assign(std::size_t(n) * n, 0.0);
  return a;
}

SymMatrix SymMatrix::zero_floating(int n) {
  SymMatrix a;
  a.n_ = n;
  a.exact_ = false;
  a.d_.assign(std::size_t(n) * n, 0.0);
  return a;
}

const Rat& SymMatrix::rat(int i, int j) const {
  if (!exact_) throw precondition_error("matrix has no exact backing");
  return q_[idx(i, j)];
}

double SymMatrix::value(int i, int j) const { return d_[idx(i, j)]; }

void SymMatrix::set(int i, int j, const Rat& v) {
  if (!exact_) throw precondition_error("matrix has no exact backing");
  q_[idx(i, j)] = v;
  q_[idx(j, i)] = v;
  d_[idx(i, j)] = v.get_d();
  d_[idx(j, i)] = d_[idx(i, j)];
}

void SymMatrix::set_value(int i, int j, double v) {
  if (exact_) throw precondition_error("use set() on an exact matrix");
  d_[idx(i, j)] = v;
  d_[idx(j, i)] = v;
}

bool SymMatrix::conforms_to(const Graph& g) const {
  if (g.order() != n_) return false;
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j) {
      bool nonzero = exact_ ? (rat(i, j) != 0) : (value(i, j) != 0.0);
      if (nonzero != g.adjacent(i, j)) return false;
    }
  return true;
}

SymMatrix SymMatrix::delete_vertices(const VertexSet& s) const {
  std::vector<int> keep;
  for (int v = 1; v <= n_; ++v)
    if (!s.contains(v)) keep.push_back(v);
  SymMatrix out = exact_ ? zero_exact(int(keep.size()))
                         : zero_floating(int(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j) {
      if (exact_)
        out.q_[out.idx(int(i) + 1, int(j) + 1)] = q_[idx(keep[i], keep[j])];
      out.d_[out.idx(int(i) + 1, int(j) + 1)] = d_[idx(keep[i], keep[j])];
    }
  return out;
}

RatMatrix SymMatrix::minor_matrix(const VertexSet& rows_del,
                                  const VertexSet& cols_del) const {
  if (!exact_) throw precondition_error("matrix has no exact backing");
  std::vector<int> rows, cols;
  for (int v = 1; v <= n_; ++v) {
    if (!rows_del.contains(v)) rows.push_back(v);
    if (!cols_del.contains(v)) cols.push_back(v);
  }
  RatMatrix m(int(rows.size()), int(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      m.at(int(i) + 1, int(j) + 1) = q_[idx(rows[i], cols[j])];
  return m;
}

RatMatrix SymMatrix::to_rat_matrix() const {
  return minor_matrix(VertexSet(n_), VertexSet(n_));
}

double SymMatrix::trace() const {
  double t = 0;
  for (int i = 1; i <= n_; ++i) t += value(i, i);
  return t;
}

SymMatrix adjacency_matrix(const Graph& g) {
  SymMatrix a = SymMatrix::zero_exact(g.order());
  for (auto [i, j] : g.edges()) a.set(i, j, Rat(1));
  return a;
}

}  // namespace rl
