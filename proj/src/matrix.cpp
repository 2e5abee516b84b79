#include "matrix.hpp"

namespace bce {

namespace {
constexpr int kDenseColumnLimit = 64;
}

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw_internal("negative matrix dimension");
  dense_ = cols < kDenseColumnLimit;
  if (dense_)
    dense_data_.assign(static_cast<size_t>(rows) * cols, Scalar());
  else
    sparse_rows_.resize(rows);
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, Scalar(1));
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  Matrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw_internal("ragged rows in from_rows");
    for (int j = 0; j < c; ++j)
      if (!rows[i][j].is_zero()) m.set(i, j, rows[i][j]);
  }
  return m;
}

Matrix Matrix::column(const Vec& v) {
  Matrix m(static_cast<int>(v.size()), 1);
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) m.set(static_cast<int>(i), 0, v[i]);
  return m;
}

Scalar Matrix::at(int r, int c) const {
  check_at(r, c);
  if (dense_) return dense_data_[static_cast<size_t>(r) * cols_ + c];
  auto it = sparse_rows_[r].find(c);
  return it == sparse_rows_[r].end() ? Scalar() : it->second;
}

void Matrix::set(int r, int c, const Scalar& v) {
  check_at(r, c);
  if (dense_) {
    dense_data_[static_cast<size_t>(r) * cols_ + c] = v;
  } else if (v.is_zero()) {
    sparse_rows_[r].erase(c);
  } else {
    sparse_rows_[r][c] = v;
  }
}

void Matrix::add_at(int r, int c, const Scalar& v) {
  check_at(r, c);
  if (v.is_zero()) return;
  if (dense_) {
    dense_data_[static_cast<size_t>(r) * cols_ + c] += v;
  } else {
    Scalar& slot = sparse_rows_[r][c];
    slot += v;
    if (slot.is_zero()) sparse_rows_[r].erase(c);
  }
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw_internal("matrix product shape mismatch");
  Matrix out(rows_, o.cols_);
  // C[r,:] = sum_k A[r,k] * B[k,:]
  for (int r = 0; r < rows_; ++r) {
    for_each_in_row(r, [&](int k, const Scalar& a) {
      o.for_each_in_row(k, [&](int c, const Scalar& b) {
        out.add_at(r, c, a * b);
      });
    });
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  Matrix out = *this;
  out.add_scaled(o, Scalar(1));
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  Matrix out = *this;
  out.add_scaled(o, Scalar(-1));
  return out;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix out(rows_, cols_);
  for (int r = 0; r < rows_; ++r)
    for_each_in_row(r, [&](int j, const Scalar& v) { out.set(r, j, v * c); });
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for_each_in_row(r, [&](int c, const Scalar& v) { out.set(c, r, v); });
  return out;
}

void Matrix::add_scaled(const Matrix& o, const Scalar& c) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw_internal("matrix sum shape mismatch");
  for (int r = 0; r < rows_; ++r)
    o.for_each_in_row(r, [&](int j, const Scalar& v) { add_at(r, j, v * c); });
}

Vec Matrix::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw_internal("matrix apply shape mismatch");
  Vec out(rows_);
  for (int r = 0; r < rows_; ++r) {
    Scalar acc;
    for_each_in_row(r, [&](int c, const Scalar& a) { acc += a * v[c]; });
    out[r] = std::move(acc);
  }
  return out;
}

Vec Matrix::apply_transposed(const Vec& v) const {
  if (static_cast<int>(v.size()) != rows_)
    throw_internal("matrix apply shape mismatch");
  Vec out(cols_);
  for (int r = 0; r < rows_; ++r) {
    if (v[r].is_zero()) continue;
    for_each_in_row(r, [&](int c, const Scalar& a) { out[c] += a * v[r]; });
  }
  return out;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (int r = 0; r < rows_; ++r) {
    // Compare via difference so mixed storage and explicit zeros agree.
    std::map<int, Scalar> diff;
    for_each_in_row(r, [&](int c, const Scalar& v) { diff[c] = v; });
    bool equal = true;
    o.for_each_in_row(r, [&](int c, const Scalar& v) {
      auto it = diff.find(c);
      if (it == diff.end()) {
        if (!v.is_zero()) equal = false;
      } else {
        if (it->second != v) equal = false;
        diff.erase(it);
      }
    });
    if (!equal) return false;
    for (const auto& [c, v] : diff)
      if (!v.is_zero()) return false;
  }
  return true;
}

bool Matrix::is_zero() const {
  for (int r = 0; r < rows_; ++r) {
    bool zero = true;
    for_each_in_row(r, [&](int, const Scalar&) { zero = false; });
    if (!zero) return false;
  }
  return true;
}

size_t Matrix::nnz() const {
  size_t n = 0;
  for (int r = 0; r < rows_; ++r)
    for_each_in_row(r, [&](int, const Scalar&) { ++n; });
  return n;
}

Vec Matrix::row_vec(int r) const {
  check_row(r);
  Vec out(cols_);
  for_each_in_row(r, [&](int c, const Scalar& v) { out[c] = v; });
  return out;
}

void Matrix::drop_zeros() {
  if (dense_) return;
  for (auto& row : sparse_rows_)
    for (auto it = row.begin(); it != row.end();)
      it = it->second.is_zero() ? row.erase(it) : std::next(it);
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int ra = 0; ra < a.rows(); ++ra) {
    a.for_each_in_row(ra, [&](int ca, const Scalar& va) {
      for (int rb = 0; rb < b.rows(); ++rb) {
        b.for_each_in_row(rb, [&](int cb, const Scalar& vb) {
          out.set(ra * b.rows() + rb, ca * b.cols() + cb, va * vb);
        });
      }
    });
  }
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw_internal("vstack column mismatch");
  Matrix out(a.rows() + b.rows(), a.cols());
  for (int r = 0; r < a.rows(); ++r)
    a.for_each_in_row(r, [&](int c, const Scalar& v) { out.set(r, c, v); });
  for (int r = 0; r < b.rows(); ++r)
    b.for_each_in_row(r, [&](int c, const Scalar& v) {
      out.set(a.rows() + r, c, v);
    });
  return out;
}

Vec zero_vec(int n) { return Vec(n); }

Vec unit_vec(int n, int i) {
  Vec v(n);
  v.at(i) = Scalar(1);
  return v;
}

bool is_zero_vec(const Vec& v) {
  for (const Scalar& s : v)
    if (!s.is_zero()) return false;
  return true;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw_internal("vector sum size mismatch");
  Vec out(a);
  for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw_internal("vector sub size mismatch");
  Vec out(a);
  for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

Vec scale(const Vec& a, const Scalar& c) {
  Vec out(a);
  for (Scalar& s : out) s *= c;
  return out;
}

}  // namespace bce
