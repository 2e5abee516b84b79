#include "braid.hpp"

#include <algorithm>

namespace bce {

namespace {

std::string basis_label(int dim_w, int degree, int flat) {
  std::vector<int> idx = multi_index(dim_w, degree, flat);
  std::string out = "e";
  for (size_t j = 0; j < idx.size(); ++j) {
    out += std::to_string(idx[j] + 1);
    if (j + 1 < idx.size()) out += "(x)e";
  }
  return out;
}

}  // namespace

Verdict check_braid_equation(const Matrix& m, int dim_w) {
  int n2 = dim_w * dim_w;
  if (m.rows() != n2 || m.cols() != n2)
    throw_invalid("braid operator must be N^2 x N^2");
  Matrix s1 = embed_at_leg(m, dim_w, 1, 3).mat;
  Matrix s2 = embed_at_leg(m, dim_w, 2, 3).mat;
  Matrix lhs = s1 * s2 * s1;
  Matrix rhs = s2 * s1 * s2;
  int n3 = tensor_dim(dim_w, 3);
  for (int c = 0; c < n3; ++c) {
    for (int r = 0; r < n3; ++r) {
      if (lhs.at(r, c) != rhs.at(r, c)) {
        return fail_verdict("braid_equation",
                            "sides differ on basis vector " +
                                basis_label(dim_w, 3, c));
      }
    }
  }
  if (rank(m) != n2)
    return fail_verdict("braid_equation", "operator is not invertible");
  return pass_verdict("braid_equation");
}

BraidOperator make_braid(int dim_w, Matrix m) {
  Verdict v = check_braid_equation(m, dim_w);
  if (!v.pass) throw_invalid("invalid braid operator: " + v.detail);
  auto inv = invert(m);
  if (!inv) throw_internal("braid operator passed rank check but failed inversion");
  return BraidOperator{dim_w, std::move(m), std::move(*inv)};
}

LegOperator sigma_pi(const BraidOperator& b, const Permutation& p) {
  int n = p.size();
  std::vector<int> word = p.reduced_word();
  LegOperator out = LegOperator::identity(b.dim_w, n);
  for (int letter : word)
    out = compose(out, embed_at_leg(b.mat, b.dim_w, letter, n));
  return out;
}

Matrix antisymmetrizer(const BraidOperator& b, int n) {
  int dim = tensor_dim(b.dim_w, n);
  Matrix acc = Matrix::identity(dim);  // the identity permutation's term
  if (n <= 1) return acc;

  std::vector<Matrix> twist;
  for (int i = 1; i <= n - 1; ++i)
    twist.push_back(embed_at_leg(b.mat, b.dim_w, i, n).mat);

  // Walk the weak right order level by level; each permutation of length
  // L+1 is pi . s_i for a length-L pi with pi(i-1) < pi(i).
  std::map<std::vector<int>, Matrix> level;
  std::vector<int> id_img(n);
  for (int i = 0; i < n; ++i) id_img[i] = i;
  level.emplace(id_img, Matrix::identity(dim));

  int sign = 1;
  while (!level.empty()) {
    sign = -sign;
    std::map<std::vector<int>, Matrix> next;
    for (const auto& [img, mat] : level) {
      for (int i = 1; i <= n - 1; ++i) {
        if (img[i - 1] >= img[i]) continue;
        std::vector<int> nimg = img;
        std::swap(nimg[i - 1], nimg[i]);
        if (next.count(nimg)) continue;
        Matrix nm = mat * twist[i - 1];
        acc.add_scaled(nm, Scalar(sign));
        next.emplace(std::move(nimg), std::move(nm));
      }
    }
    level = std::move(next);
  }
  acc.drop_zeros();
  return acc;
}

std::pair<Matrix, Matrix> shuffle_operators(const BraidOperator& b, int n, int k) {
  int dim = tensor_dim(b.dim_w, n + k);
  Matrix a_nk(dim, dim);
  Matrix b_nk(dim, dim);
  for (const Permutation& p : shuffles(n, k)) {
    Scalar s(p.sign());
    a_nk.add_scaled(sigma_pi(b, p.inverse()).mat, s);
    b_nk.add_scaled(sigma_pi(b, p).mat, s);
  }
  a_nk.drop_zeros();
  b_nk.drop_zeros();
  return {std::move(a_nk), std::move(b_nk)};
}

BraidOperator dual_braiding(const BraidOperator& b) {
  int n = b.dim_w;
  auto transform = [n](const Matrix& src) {
    // sigma*[(l,k),(v,u)] = sigma[(u,v),(k,l)] under the order-reversing
    // pairing <f (x) g, x (x) y> = f(y) g(x).
    Matrix out(n * n, n * n);
    for (int row = 0; row < n * n; ++row) {
      int u = row / n, v = row % n;
      src.for_each_in_row(row, [&](int col, const Scalar& val) {
        int k = col / n, l = col % n;
        out.set(l * n + k, v * n + u, val);
      });
    }
    return out;
  };
  return BraidOperator{n, transform(b.mat), transform(b.inv)};
}

namespace {

Permutation block_transposition(int n, int k) {
  std::vector<int> img(n + k);
  for (int i = 0; i < n; ++i) img[i] = k + i;
  for (int j = 0; j < k; ++j) img[n + j] = j;
  return Permutation(std::move(img));
}

}  // namespace

LegOperator mixed_braiding(const BraidOperator& b, int n, int k) {
  if (n == 0 || k == 0) return LegOperator::identity(b.dim_w, n + k);
  return sigma_pi(b, block_transposition(n, k));
}

LegOperator mixed_braiding_inverse(const BraidOperator& b, int n, int k) {
  if (n == 0 || k == 0) return LegOperator::identity(b.dim_w, n + k);
  std::vector<int> word = block_transposition(n, k).reduced_word();
  std::reverse(word.begin(), word.end());
  LegOperator out = LegOperator::identity(b.dim_w, n + k);
  for (int letter : word)
    out = compose(out, embed_at_leg(b.inv, b.dim_w, letter, n + k));
  return out;
}

Matrix reversal_matrix(int dim_w, int n) {
  int dim = tensor_dim(dim_w, n);
  Matrix r(dim, dim);
  for (int flat = 0; flat < dim; ++flat) {
    std::vector<int> idx = multi_index(dim_w, n, flat);
    std::reverse(idx.begin(), idx.end());
    r.set(flat_index(dim_w, idx), flat, Scalar(1));
  }
  return r;
}

Scalar tensor_pairing(int dim_w, int degree, const Vec& dual, const Vec& primal) {
  int dim = tensor_dim(dim_w, degree);
  if (static_cast<int>(dual.size()) != dim || static_cast<int>(primal.size()) != dim)
    throw_internal("tensor_pairing: dimension mismatch");
  Scalar acc;
  for (int flat = 0; flat < dim; ++flat) {
    if (dual[flat].is_zero()) continue;
    std::vector<int> idx = multi_index(dim_w, degree, flat);
    std::reverse(idx.begin(), idx.end());
    acc += dual[flat] * primal[flat_index(dim_w, idx)];
  }
  return acc;
}

const Matrix& OperatorBank::a(int n) const {
  if (n < 0 || n > cap) throw_cap("antisymmetrizer degree beyond cap");
  return antisym[n];
}

const Matrix& OperatorBank::a_shuffle(int n, int k) const {
  auto it = shuffles.find({n, k});
  if (it == shuffles.end()) throw_cap("shuffle degrees beyond cap");
  return it->second.first;
}

const Matrix& OperatorBank::b_shuffle(int n, int k) const {
  auto it = shuffles.find({n, k});
  if (it == shuffles.end()) throw_cap("shuffle degrees beyond cap");
  return it->second.second;
}

OperatorBank build_operator_bank(const BraidOperator& b, int cap) {
  if (cap < 1) throw_invalid("cap must be at least 1");
  OperatorBank bank;
  bank.braiding = b;
  bank.cap = cap;
  for (int n = 0; n <= cap; ++n) bank.antisym.push_back(antisymmetrizer(b, n));
  for (int n = 0; n <= cap; ++n)
    for (int k = 0; n + k <= cap; ++k)
      bank.shuffles.emplace(std::make_pair(n, k), shuffle_operators(b, n, k));
  return bank;
}

Verdict verify_decompositions(const OperatorBank& bank) {
  for (const auto& [nk, ops] : bank.shuffles) {
    auto [n, k] = nk;
    const Matrix& a_n = bank.a(n);
    const Matrix& a_k = bank.a(k);
    Matrix prod = kron(a_n, a_k);
    if ((prod * ops.first) != bank.a(n + k))
      return fail_verdict("decompositions",
                          "A_{n+k} != (A_n (x) A_k) A_nk at n=" +
                              std::to_string(n) + " k=" + std::to_string(k));
    if ((ops.second * prod) != bank.a(n + k))
      return fail_verdict("decompositions",
                          "A_{n+k} != B_nk (A_n (x) A_k) at n=" +
                              std::to_string(n) + " k=" + std::to_string(k));
  }
  return pass_verdict("decompositions");
}

Verdict check_matsumoto(const BraidOperator& b, int max_n) {
  for (int n = 2; n <= max_n; ++n) {
    for (const Permutation& p : all_permutations(n)) {
      auto words = all_reduced_words(p);
      if (words.size() < 2) continue;
      Matrix first;
      bool have_first = false;
      for (const auto& word : words) {
        LegOperator op = LegOperator::identity(b.dim_w, n);
        for (int letter : word)
          op = compose(op, embed_at_leg(b.mat, b.dim_w, letter, n));
        if (!have_first) {
          first = op.mat;
          have_first = true;
        } else if (op.mat != first) {
          return fail_verdict("matsumoto",
                              "word-dependent sigma_pi in S_" + std::to_string(n));
        }
      }
    }
  }
  return pass_verdict("matsumoto");
}

Verdict check_transpose_pairs(const OperatorBank& bank, const OperatorBank& dual_bank) {
  int n_w = bank.braiding.dim_w;
  for (int n = 0; n <= bank.cap; ++n) {
    Matrix r = reversal_matrix(n_w, n);
    if (dual_bank.a(n) != r * bank.a(n).transpose() * r)
      return fail_verdict("transpose_pairs",
                          "{A_n, A_n*} not mutually transposed at n=" +
                              std::to_string(n));
  }
  for (const auto& [nk, ops] : bank.shuffles) {
    auto [n, k] = nk;
    Matrix r = reversal_matrix(n_w, n + k);
    // {A_nk, B_kn*} and {A_nk*, B_kn} are the mutually transposed pairs.
    if (dual_bank.b_shuffle(k, n) != r * ops.first.transpose() * r)
      return fail_verdict("transpose_pairs",
                          "{A_nk, B_kn*} fails at n=" + std::to_string(n) +
                              " k=" + std::to_string(k));
    if (ops.second != r * dual_bank.a_shuffle(k, n).transpose() * r)
      return fail_verdict("transpose_pairs",
                          "{A_nk*, B_kn} fails at n=" + std::to_string(n) +
                              " k=" + std::to_string(k));
  }
  return pass_verdict("transpose_pairs");
}

}  // namespace bce
