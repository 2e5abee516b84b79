#pragma once

#include <map>
#include <optional>
#include <vector>

#include "matrix.hpp"

namespace bce {

using SparseRow = std::map<int, Scalar>;

// Reduced row echelon form. RREF is a unique normal form, so every result
// derived from it (rank, nullspace basis, particular solutions, image
// bases) is deterministic by construction.
struct Echelon {
  std::vector<SparseRow> rows;  // pivot coefficient 1, sorted by pivot column
  std::vector<int> pivots;      // ascending
  int cols = 0;

  int rank() const { return static_cast<int>(pivots.size()); }
};

Echelon rref(const Matrix& m);
Echelon rref_rows(std::vector<SparseRow> input, int cols);

int rank(const Matrix& m);

// Exact kernel basis in the reduced echelon convention: one vector per free
// column f, with entry 1 at f and -RREF[i][f] at pivot column i.
std::vector<Vec> nullspace_basis(const Matrix& m);

// Any exact solution of m x = b with free variables set to zero;
// std::nullopt when b is not in the image. Throws on size mismatch.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

// Exact inverse, or nullopt when singular.
std::optional<Matrix> invert(const Matrix& m);

// Echelon basis of the column space of m, together with its pivot
// positions. Coordinates of a member vector are read off at the pivots.
struct ImageBasis {
  std::vector<Vec> basis;
  std::vector<int> pivots;
  int ambient = 0;

  int dim() const { return static_cast<int>(basis.size()); }
};

ImageBasis image_basis(const Matrix& m);

// Coordinates of v in an echelon image basis, or nullopt if v is outside
// the span. Exact membership test included.
std::optional<Vec> coords_in_span(const ImageBasis& ib, const Vec& v);

int rank_of_vectors(const std::vector<Vec>& vecs, int ambient);

SparseRow to_sparse_row(const Vec& v);
Vec to_dense(const SparseRow& r, int n);

}  // namespace bce
