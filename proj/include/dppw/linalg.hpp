#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "dppw/rational.hpp"

namespace dppw {

// ---------------------------------------------------------------------------
// Dense exact matrix.
// ---------------------------------------------------------------------------
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  bool is_zero() const {
    return std::all_of(a_.begin(), a_.end(),
                       [](const Rational& x) { return x == 0; });
  }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Mat& operator+=(const Mat& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }
  Mat& operator-=(const Mat& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }
  Mat& operator*=(const Rational& c) {
    for (auto& x : a_) x *= c;
    return *this;
  }

  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(Mat a, const Rational& c) { return a *= c; }
  friend Mat operator*(const Rational& c, Mat a) { return a *= c; }
  friend Mat operator-(Mat a) { return a *= Rational(-1); }

  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_)
      throw precondition_error("matrix product shape mismatch");
    Mat c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (b(k, j) == 0) continue;
          c(i, j) += aik * b(k, j);
        }
      }
    return c;
  }

  std::vector<Rational> apply(const std::vector<Rational>& v) const {
    if (v.size() != cols_) throw precondition_error("matrix apply shape mismatch");
    std::vector<Rational> w(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != 0 && v[j] != 0) w[i] += (*this)(i, j) * v[j];
    return w;
  }

  Rational determinant() const {
    if (rows_ != cols_) throw precondition_error("determinant of non-square matrix");
    Mat m(*this);
    std::size_t n = rows_;
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t pivot = col;
      while (pivot < n && m(pivot, col) == 0) ++pivot;
      if (pivot == n) return Rational(0);
      if (pivot != col) {
        for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(col, j));
        det = -det;
      }
      det *= m(col, col);
      Rational inv = Rational(1) / m(col, col);
      for (std::size_t r = col + 1; r < n; ++r) {
        if (m(r, col) == 0) continue;
        Rational f = m(r, col) * inv;
        for (std::size_t j = col; j < n; ++j) m(r, j) -= f * m(col, j);
      }
    }
    return det;
  }

  // Gauss-Jordan inverse; throws singular_error on singular input.
  Mat inverse() const {
    if (rows_ != cols_) throw precondition_error("inverse of non-square matrix");
    std::size_t n = rows_;
    Mat m(*this);
    Mat inv = Mat::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t pivot = col;
      while (pivot < n && m(pivot, col) == 0) ++pivot;
      if (pivot == n) throw singular_error("matrix is singular");
      if (pivot != col)
        for (std::size_t j = 0; j < n; ++j) {
          std::swap(m(pivot, j), m(col, j));
          std::swap(inv(pivot, j), inv(col, j));
        }
      Rational p = Rational(1) / m(col, col);
      for (std::size_t j = 0; j < n; ++j) {
        m(col, j) *= p;
        inv(col, j) *= p;
      }
      for (std::size_t r = 0; r < n; ++r) {
        if (r == col || m(r, col) == 0) continue;
        Rational f = m(r, col);
        for (std::size_t j = 0; j < n; ++j) {
          m(r, j) -= f * m(col, j);
          inv(r, j) -= f * inv(col, j);
        }
      }
    }
    return inv;
  }

 private:
  void require_same_shape(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw precondition_error("matrix shape mismatch");
  }

  std::size_t rows_, cols_;
  std::vector<Rational> a_;
};

// A 2-tensor r = sum_{i,j} r(i,j) e_i (x) e_j on an n-dimensional space is
// stored as an n x n Mat.  The twist tau(r) is the transpose.
inline Mat twist(const Mat& r) { return r.transpose(); }

// r_sharp : V* -> V, <r_sharp(xi1), xi2> = <xi1 (x) xi2, r>.  In coordinates
// r_sharp(f_i) = sum_j r(i,j) e_j, so the matrix (columns = images of f_i)
// is the transpose of r.
inline Mat sharp(const Mat& r) { return r.transpose(); }

// Inverse of sharp: recover the 2-tensor whose sharp is the given map.
inline Mat two_tensor_from_sharp(const Mat& s) { return s.transpose(); }

// Dual map of phi : V -> V as a map V* -> V* (plain transpose, no sign).
inline Mat dual_map(const Mat& phi) { return phi.transpose(); }

// For a bilinear form omega with Gram matrix O(i,j) = omega(e_i, e_j), the map
// J^{-1} : V -> V* defined by <J^{-1}(a), b> = omega(a, b) has matrix O^T
// (column i = omega(e_i, -)).  J is its inverse; throws if omega degenerate.
inline Mat j_omega(const Mat& gram) { return gram.transpose().inverse(); }

// Dual basis {f_i} with omega(f_i, e_j) = delta_ij; column i of the returned
// matrix holds the coordinates of f_i.  Requires nondegenerate omega.
inline Mat dual_basis(const Mat& gram) { return j_omega(gram); }

// ---------------------------------------------------------------------------
// Dense exact 3-tensor (used for structure constants and YBE residuals).
// Entry (i,j,k): for structure constants, the coefficient of e_k in e_i * e_j;
// for elements of V (x) V (x) V, the coefficient of e_i (x) e_j (x) e_k.
// ---------------------------------------------------------------------------
class Tensor3 {
 public:
  Tensor3() : n_(0) {}
  explicit Tensor3(std::size_t n) : n_(n), a_(n * n * n) {}

  std::size_t dim() const { return n_; }

  Rational& operator()(std::size_t i, std::size_t j, std::size_t k) {
    return a_[(i * n_ + j) * n_ + k];
  }
  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return a_[(i * n_ + j) * n_ + k];
  }

  bool operator==(const Tensor3& o) const { return n_ == o.n_ && a_ == o.a_; }
  bool operator!=(const Tensor3& o) const { return !(*this == o); }

  bool is_zero() const {
    return std::all_of(a_.begin(), a_.end(),
                       [](const Rational& x) { return x == 0; });
  }

  std::size_t nonzero_count() const {
    return std::count_if(a_.begin(), a_.end(),
                         [](const Rational& x) { return x != 0; });
  }

  Tensor3& operator+=(const Tensor3& o) {
    if (n_ != o.n_) throw precondition_error("tensor shape mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }
  Tensor3& operator-=(const Tensor3& o) {
    if (n_ != o.n_) throw precondition_error("tensor shape mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }
  Tensor3& operator*=(const Rational& c) {
    for (auto& x : a_) x *= c;
    return *this;
  }
  friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
  friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }

  // Swap the first two legs (tau (x) id).
  Tensor3 swap12() const {
    Tensor3 t(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t k = 0; k < n_; ++k) t(j, i, k) = (*this)(i, j, k);
    return t;
  }
  // Swap the last two legs (id (x) tau).
  Tensor3 swap23() const {
    Tensor3 t(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t k = 0; k < n_; ++k) t(i, k, j) = (*this)(i, j, k);
    return t;
  }

 private:
  std::size_t n_;
  std::vector<Rational> a_;
};

// Labels for a dual basis: "e1" -> "e1*".
inline std::vector<std::string> dual_labels(const std::vector<std::string>& basis) {
  std::vector<std::string> out;
  out.reserve(basis.size());
  for (const auto& b : basis) out.push_back(b + "*");
  return out;
}

// Append labels to a basis, priming any that would collide with an
// earlier label ("e1*" -> "e1*'").  Duplicate labels would make the
// sparse document format ambiguous.
inline std::vector<std::string> merge_labels(std::vector<std::string> base,
                                             const std::vector<std::string>& extra) {
  for (std::string l : extra) {
    while (std::find(base.begin(), base.end(), l) != base.end()) l += "'";
    base.push_back(l);
  }
  return base;
}

// Pretty-print a vector in a basis, e.g. "2*e1 - 1/2*e3"; "0" if zero.
inline std::string format_vector(const std::vector<Rational>& v,
                                 const std::vector<std::string>& basis) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!out.empty()) out += v[i] > 0 ? " + " : " - ";
    else if (v[i] < 0) out += "-";
    Rational mag = abs(v[i]);
    if (mag != 1) out += to_string(mag) + "*";
    out += basis[i];
  }
  return out.empty() ? "0" : out;
}

}  // namespace dppw
