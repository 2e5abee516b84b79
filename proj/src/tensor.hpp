#pragma once

#include <map>
#include <vector>

#include "linalg.hpp"
#include "matrix.hpp"

namespace bce {

// Multi-index convention used everywhere: the basis of W^(x)n is enumerated
// as base-N words of length n in lexicographic order with leg 1 most
// significant, so e_{i1} (x) ... (x) e_{in}  <->  sum_j i_j * N^(n-j).

// N^n as int, guarded. Degrees stay small (cap <= ~7) by construction.
int tensor_dim(int dim_w, int degree);

std::vector<int> multi_index(int dim_w, int degree, int flat);
int flat_index(int dim_w, const std::vector<int>& digits);

// A homogeneous space W^(x)degree over an N-dimensional W.
struct TensorSpace {
  int dim_w = 0;
  int degree = 0;

  int dim() const { return tensor_dim(dim_w, degree); }
};

// Exact linear map W^(x)source_degree -> W^(x)target_degree.
struct LegOperator {
  int dim_w = 0;
  int source_degree = 0;
  int target_degree = 0;
  Matrix mat;

  LegOperator() = default;
  LegOperator(int dim_w, int source, int target, Matrix m);

  static LegOperator identity(int dim_w, int degree);

  Vec apply(const Vec& v) const { return mat.apply(v); }
};

// id^(pos-1) (x) op (x) id^(total-pos-1) for a two-leg operator op.
LegOperator embed_at_leg(const Matrix& op, int dim_w, int position, int total_degree);

LegOperator compose(const LegOperator& a, const LegOperator& b);
LegOperator tensor_op(const LegOperator& a, const LegOperator& b);

// Formal sum across degrees 0..cap; absent degrees are zero.
class GradedElement {
public:
  GradedElement(int dim_w, int cap) : dim_w_(dim_w), cap_(cap) {}

  static GradedElement unit(int dim_w, int cap);  // 1 in degree 0
  static GradedElement basis_tensor(int dim_w, int cap, int degree, int flat);

  int dim_w() const { return dim_w_; }
  int cap() const { return cap_; }
  const std::map<int, Vec>& components() const { return comps_; }

  bool has(int degree) const { return comps_.count(degree) > 0; }
  const Vec& component(int degree) const;
  void set_component(int degree, Vec v);
  void add_component(int degree, const Vec& v);

  bool is_zero() const;
  int top_degree() const;  // -1 when zero

  GradedElement& operator+=(const GradedElement& o);
  GradedElement& operator-=(const GradedElement& o);
  GradedElement scaled(const Scalar& c) const;

  friend bool operator==(const GradedElement& a, const GradedElement& b);

private:
  int dim_w_, cap_;
  std::map<int, Vec> comps_;
};

// Degreewise tensor product: (s (x) t)_n = sum_{p+q=n} s_p (x) t_q.
// Throws CapExceeded when a nonzero component would land above cap.
GradedElement graded_tensor(const GradedElement& s, const GradedElement& t);

}  // namespace bce
