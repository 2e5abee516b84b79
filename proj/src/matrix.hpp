#pragma once

#include <map>
#include <vector>

#include "error.hpp"
#include "scalar.hpp"

namespace bce {

using Vec = std::vector<Scalar>;

// Exact matrix over Q(i). Rows are stored sparsely (sorted column map) once
// the matrix is 64 columns or wider; smaller matrices use a dense block.
// Antisymmetrizers for flip-like braidings are overwhelmingly sparse, which
// is what makes the N^n x N^n degrees tractable.
class Matrix {
public:
  Matrix() : rows_(0), cols_(0), dense_(true) {}
  Matrix(int rows, int cols);

  static Matrix identity(int n);
  static Matrix from_rows(const std::vector<Vec>& rows);
  static Matrix column(const Vec& v);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Scalar at(int r, int c) const;
  void set(int r, int c, const Scalar& v);
  void add_at(int r, int c, const Scalar& v);

  template <class F>
  void for_each_in_row(int r, F&& f) const {
    check_row(r);
    if (dense_) {
      for (int c = 0; c < cols_; ++c) {
        const Scalar& v = dense_data_[static_cast<size_t>(r) * cols_ + c];
        if (!v.is_zero()) f(c, v);
      }
    } else {
      for (const auto& [c, v] : sparse_rows_[r])
        if (!v.is_zero()) f(c, v);
    }
  }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& c) const;
  Matrix transpose() const;

  // this += c * o, shape-checked. The accumulation path for operator sums.
  void add_scaled(const Matrix& o, const Scalar& c);

  Vec apply(const Vec& v) const;        // M v
  Vec apply_transposed(const Vec& v) const;  // M^T v

  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  bool is_zero() const;
  size_t nnz() const;

  Vec row_vec(int r) const;
  void drop_zeros();

private:
  void check_row(int r) const {
    if (r < 0 || r >= rows_) throw_internal("matrix row index out of bounds");
  }
  void check_at(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
      throw_internal("matrix index out of bounds");
  }

  int rows_, cols_;
  bool dense_;
  std::vector<Scalar> dense_data_;
  std::vector<std::map<int, Scalar>> sparse_rows_;
};

// Kronecker product with the lexicographic leg convention: index of
// (i,j) in the product is i * b.cols + j on columns (and likewise rows),
// so kron(A, B) acts on W^(a) (x) W^(b) with the first factor most
// significant.
Matrix kron(const Matrix& a, const Matrix& b);

// Stacks b below a (column counts must agree).
Matrix vstack(const Matrix& a, const Matrix& b);

Vec zero_vec(int n);
Vec unit_vec(int n, int i);
bool is_zero_vec(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& a, const Scalar& c);

}  // namespace bce
