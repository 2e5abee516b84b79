#include "tensor.hpp"

namespace bce {

int tensor_dim(int dim_w, int degree) {
  if (dim_w <= 0 || degree < 0) throw_internal("bad tensor space parameters");
  long long d = 1;
  for (int i = 0; i < degree; ++i) {
    d *= dim_w;
    if (d > (1LL << 26)) throw_cap("tensor space dimension too large");
  }
  return static_cast<int>(d);
}

std::vector<int> multi_index(int dim_w, int degree, int flat) {
  std::vector<int> digits(degree);
  for (int j = degree - 1; j >= 0; --j) {
    digits[j] = flat % dim_w;
    flat /= dim_w;
  }
  return digits;
}

int flat_index(int dim_w, const std::vector<int>& digits) {
  int flat = 0;
  for (int d : digits) {
    if (d < 0 || d >= dim_w) throw_internal("multi-index digit out of range");
    flat = flat * dim_w + d;
  }
  return flat;
}

LegOperator::LegOperator(int dim_w, int source, int target, Matrix m)
    : dim_w(dim_w), source_degree(source), target_degree(target), mat(std::move(m)) {
  if (mat.rows() != tensor_dim(dim_w, target) ||
      mat.cols() != tensor_dim(dim_w, source))
    throw_internal("leg operator shape inconsistent with declared degrees");
}

LegOperator LegOperator::identity(int dim_w, int degree) {
  return LegOperator(dim_w, degree, degree, Matrix::identity(tensor_dim(dim_w, degree)));
}

LegOperator embed_at_leg(const Matrix& op, int dim_w, int position, int total_degree) {
  int n2 = dim_w * dim_w;
  if (op.rows() != n2 || op.cols() != n2)
    throw_invalid("embed_at_leg: operator is not two-leg");
  if (position < 1 || position > total_degree - 1)
    throw_invalid("embed_at_leg: position out of range");
  Matrix m = kron(Matrix::identity(tensor_dim(dim_w, position - 1)),
                  kron(op, Matrix::identity(tensor_dim(dim_w, total_degree - position - 1))));
  return LegOperator(dim_w, total_degree, total_degree, std::move(m));
}

LegOperator compose(const LegOperator& a, const LegOperator& b) {
  if (a.dim_w != b.dim_w) throw_internal("compose: dimension mismatch");
  if (a.source_degree != b.target_degree)
    throw_invalid("compose: degree mismatch");
  return LegOperator(a.dim_w, b.source_degree, a.target_degree, a.mat * b.mat);
}

LegOperator tensor_op(const LegOperator& a, const LegOperator& b) {
  if (a.dim_w != b.dim_w) throw_internal("tensor_op: dimension mismatch");
  return LegOperator(a.dim_w, a.source_degree + b.source_degree,
                     a.target_degree + b.target_degree, kron(a.mat, b.mat));
}

GradedElement GradedElement::unit(int dim_w, int cap) {
  GradedElement g(dim_w, cap);
  g.set_component(0, Vec{Scalar(1)});
  return g;
}

GradedElement GradedElement::basis_tensor(int dim_w, int cap, int degree, int flat) {
  GradedElement g(dim_w, cap);
  g.set_component(degree, unit_vec(tensor_dim(dim_w, degree), flat));
  return g;
}

const Vec& GradedElement::component(int degree) const {
  auto it = comps_.find(degree);
  if (it == comps_.end()) throw_internal("absent graded component requested");
  return it->second;
}

void GradedElement::set_component(int degree, Vec v) {
  if (degree < 0 || degree > cap_)
    throw_cap("graded component outside 0..cap");
  if (static_cast<int>(v.size()) != tensor_dim(dim_w_, degree))
    throw_internal("graded component has wrong dimension");
  if (is_zero_vec(v))
    comps_.erase(degree);
  else
    comps_[degree] = std::move(v);
}

void GradedElement::add_component(int degree, const Vec& v) {
  if (is_zero_vec(v)) return;
  if (degree < 0 || degree > cap_)
    throw_cap("graded component outside 0..cap");
  auto it = comps_.find(degree);
  if (it == comps_.end()) {
    set_component(degree, v);
  } else {
    it->second = add(it->second, v);
    if (is_zero_vec(it->second)) comps_.erase(it);
  }
}

bool GradedElement::is_zero() const { return comps_.empty(); }

int GradedElement::top_degree() const {
  return comps_.empty() ? -1 : comps_.rbegin()->first;
}

GradedElement& GradedElement::operator+=(const GradedElement& o) {
  for (const auto& [deg, v] : o.comps_) add_component(deg, v);
  return *this;
}

GradedElement& GradedElement::operator-=(const GradedElement& o) {
  for (const auto& [deg, v] : o.comps_) add_component(deg, scale(v, Scalar(-1)));
  return *this;
}

GradedElement GradedElement::scaled(const Scalar& c) const {
  GradedElement out(dim_w_, cap_);
  if (c.is_zero()) return out;
  for (const auto& [deg, v] : comps_) out.set_component(deg, scale(v, c));
  return out;
}

bool operator==(const GradedElement& a, const GradedElement& b) {
  if (a.dim_w_ != b.dim_w_) return false;
  GradedElement diff = a;
  diff -= b;
  return diff.is_zero();
}

GradedElement graded_tensor(const GradedElement& s, const GradedElement& t) {
  if (s.dim_w() != t.dim_w()) throw_internal("graded_tensor: dimension mismatch");
  int cap = std::min(s.cap(), t.cap());
  GradedElement out(s.dim_w(), cap);
  int n = s.dim_w();
  for (const auto& [p, sv] : s.components()) {
    for (const auto& [q, tv] : t.components()) {
      if (p + q > cap) throw_cap("graded_tensor: product degree exceeds cap");
      Vec prod(tensor_dim(n, p + q));
      int tq = tensor_dim(n, q);
      for (int i = 0; i < static_cast<int>(sv.size()); ++i) {
        if (sv[i].is_zero()) continue;
        for (int j = 0; j < static_cast<int>(tv.size()); ++j) {
          if (tv[j].is_zero()) continue;
          prod[static_cast<long long>(i) * tq + j] = sv[i] * tv[j];
        }
      }
      out.add_component(p + q, prod);
    }
  }
  return out;
}

}  // namespace bce
