#include "linalg.hpp"

#include <algorithm>

namespace bce {

namespace {

// row -= c * other, sparse.
void axpy(SparseRow& row, const Scalar& c, const SparseRow& other) {
  if (c.is_zero()) return;
  for (const auto& [col, v] : other) {
    auto it = row.find(col);
    if (it == row.end()) {
      Scalar nv = -(c * v);
      if (!nv.is_zero()) row.emplace(col, std::move(nv));
    } else {
      it->second -= c * v;
      if (it->second.is_zero()) row.erase(it);
    }
  }
}

}  // namespace

Echelon rref_rows(std::vector<SparseRow> input, int cols) {
  // Incremental Gauss-Jordan: keep a basis keyed by leading column, reduce
  // each incoming row against it, then back-substitute. The result is the
  // (unique) RREF of the row space.
  std::map<int, SparseRow> basis;
  for (SparseRow& row : input) {
    while (!row.empty()) {
      int lead = row.begin()->first;
      auto it = basis.find(lead);
      if (it == basis.end()) break;
      Scalar c = row.begin()->second;  // copy: axpy erases the lead entry
      axpy(row, c, it->second);
    }
    if (row.empty()) continue;
    Scalar inv = row.begin()->second.inverse();
    for (auto& [c, v] : row) v *= inv;
    basis.emplace(row.begin()->first, std::move(row));
  }
  // Back-substitution: eliminate every pivot column from the other rows.
  for (auto it = basis.rbegin(); it != basis.rend(); ++it) {
    int lead = it->first;
    for (auto jt = basis.begin(); jt != basis.end(); ++jt) {
      if (jt->first == lead) continue;
      auto entry = jt->second.find(lead);
      if (entry != jt->second.end()) {
        Scalar c = entry->second;
        axpy(jt->second, c, it->second);
      }
    }
  }
  Echelon ech;
  ech.cols = cols;
  for (auto& [lead, row] : basis) {
    ech.pivots.push_back(lead);
    ech.rows.push_back(std::move(row));
  }
  return ech;
}

Echelon rref(const Matrix& m) {
  std::vector<SparseRow> rows(m.rows());
  for (int r = 0; r < m.rows(); ++r)
    m.for_each_in_row(r, [&](int c, const Scalar& v) { rows[r][c] = v; });
  return rref_rows(std::move(rows), m.cols());
}

int rank(const Matrix& m) { return rref(m).rank(); }

std::vector<Vec> nullspace_basis(const Matrix& m) {
  Echelon ech = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : ech.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols());
    v[f] = Scalar(1);
    for (size_t i = 0; i < ech.pivots.size(); ++i) {
      auto it = ech.rows[i].find(f);
      if (it != ech.rows[i].end()) v[ech.pivots[i]] = -it->second;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (static_cast<int>(b.size()) != m.rows())
    throw_invalid("solve: right-hand side has wrong dimension");
  std::vector<SparseRow> rows(m.rows());
  for (int r = 0; r < m.rows(); ++r) {
    m.for_each_in_row(r, [&](int c, const Scalar& v) { rows[r][c] = v; });
    if (!b[r].is_zero()) rows[r][m.cols()] = b[r];
  }
  Echelon ech = rref_rows(std::move(rows), m.cols() + 1);
  Vec x(m.cols());
  for (size_t i = 0; i < ech.pivots.size(); ++i) {
    if (ech.pivots[i] == m.cols()) return std::nullopt;  // 0 = 1 row
    auto it = ech.rows[i].find(m.cols());
    if (it != ech.rows[i].end()) x[ech.pivots[i]] = it->second;
  }
  return x;
}

std::optional<Matrix> invert(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  int n = m.rows();
  std::vector<SparseRow> rows(n);
  for (int r = 0; r < n; ++r) {
    m.for_each_in_row(r, [&](int c, const Scalar& v) { rows[r][c] = v; });
    rows[r][n + r] = Scalar(1);
  }
  Echelon ech = rref_rows(std::move(rows), 2 * n);
  if (ech.rank() < n || ech.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (int r = 0; r < n; ++r)
    for (const auto& [c, v] : ech.rows[r])
      if (c >= n) inv.set(r, c - n, v);
  return inv;
}

ImageBasis image_basis(const Matrix& m) {
  Echelon ech = rref(m.transpose());
  ImageBasis ib;
  ib.ambient = m.rows();
  ib.pivots = ech.pivots;
  for (const SparseRow& row : ech.rows)
    ib.basis.push_back(to_dense(row, m.rows()));
  return ib;
}

std::optional<Vec> coords_in_span(const ImageBasis& ib, const Vec& v) {
  if (static_cast<int>(v.size()) != ib.ambient)
    throw_internal("coords_in_span: wrong ambient dimension");
  Vec coords(ib.dim());
  for (int i = 0; i < ib.dim(); ++i) coords[i] = v[ib.pivots[i]];
  // Exact membership: the pivot coordinates must reproduce v.
  Vec recon(ib.ambient);
  for (int i = 0; i < ib.dim(); ++i)
    if (!coords[i].is_zero())
      for (int j = 0; j < ib.ambient; ++j) recon[j] += coords[i] * ib.basis[i][j];
  if (recon != v) return std::nullopt;
  return coords;
}

int rank_of_vectors(const std::vector<Vec>& vecs, int ambient) {
  std::vector<SparseRow> rows;
  rows.reserve(vecs.size());
  for (const Vec& v : vecs) {
    if (static_cast<int>(v.size()) != ambient)
      throw_internal("rank_of_vectors: wrong ambient dimension");
    rows.push_back(to_sparse_row(v));
  }
  return rref_rows(std::move(rows), ambient).rank();
}

SparseRow to_sparse_row(const Vec& v) {
  SparseRow r;
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) r[static_cast<int>(i)] = v[i];
  return r;
}

Vec to_dense(const SparseRow& r, int n) {
  Vec v(n);
  for (const auto& [c, val] : r) v.at(c) = val;
  return v;
}

}  // namespace bce
