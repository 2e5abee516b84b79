#pragma once

#include <map>
#include <utility>
#include <vector>

#include "permutation.hpp"
#include "tensor.hpp"
#include "verdict.hpp"

namespace bce {

// A validated braid operator: invertible solution of the braid equation
// on W (x) W, together with its exact inverse.
struct BraidOperator {
  int dim_w = 0;
  Matrix mat;  // N^2 x N^2
  Matrix inv;
};

// Exhaustive check of the braid equation on W^(x)3 plus invertibility.
// On failure the detail names a basis tensor where the two sides differ.
Verdict check_braid_equation(const Matrix& m, int dim_w);

// Validates and packages a braid operator. Throws InvalidInput when the
// check fails.
BraidOperator make_braid(int dim_w, Matrix m);

// sigma_pi: the braid-group image of p, assembled along the canonical
// reduced word. Word independence is the braid equation's doing and is
// checked separately (check_matsumoto).
LegOperator sigma_pi(const BraidOperator& b, const Permutation& p);

// A_n = sum over S_n of sign * sigma_pi. Assembled by a breadth-first walk
// of the weak order, so each new permutation costs one product by an
// embedded twist.
Matrix antisymmetrizer(const BraidOperator& b, int n);

// (A_nk, B_nk): signed sums of sigma_{pi^-1} resp. sigma_pi over the
// (n,k)-shuffles.
std::pair<Matrix, Matrix> shuffle_operators(const BraidOperator& b, int n, int k);

// Transposed braiding on the dual space under the order-reversing pairing.
BraidOperator dual_braiding(const BraidOperator& b);

// Extension of sigma to W^(x)n (x) W^(x)k -> W^(x)k (x) W^(x)n (iterated
// twists along the block transposition) and its exact inverse.
LegOperator mixed_braiding(const BraidOperator& b, int n, int k);
LegOperator mixed_braiding_inverse(const BraidOperator& b, int n, int k);

// Index-reversal permutation operator on W^(x)n; the matrix of the
// order-reversing duality pairing in the multi-index bases.
Matrix reversal_matrix(int dim_w, int n);

// The duality pairing of a dual n-tensor against an n-tensor:
// <f, psi> = sum_I f[I] psi[reverse(I)].
Scalar tensor_pairing(int dim_w, int degree, const Vec& dual, const Vec& primal);

// All section-2 operators of one braiding up to the degree cap.
struct OperatorBank {
  BraidOperator braiding;
  int cap = 0;
  std::vector<Matrix> antisym;  // index n, 0..cap
  std::map<std::pair<int, int>, std::pair<Matrix, Matrix>> shuffles;  // n+k <= cap

  const Matrix& a(int n) const;
  const Matrix& a_shuffle(int n, int k) const;  // A_nk
  const Matrix& b_shuffle(int n, int k) const;  // B_nk
};

OperatorBank build_operator_bank(const BraidOperator& b, int cap);

// A_{n+k} = (A_n (x) A_k) A_nk and A_{n+k} = B_nk (A_n (x) A_k), exact,
// for every n+k <= cap.
Verdict verify_decompositions(const OperatorBank& bank);

// sigma_pi agrees across every reduced word of every permutation in S_n,
// n <= max_n.
Verdict check_matsumoto(const BraidOperator& b, int max_n);

// {A_n, A_n*}, {A_nk, B_kn*}, {A_nk*, B_kn} mutually transposed under the
// order-reversing pairing, for all stored degrees.
Verdict check_transpose_pairs(const OperatorBank& bank, const OperatorBank& dual_bank);

}  // namespace bce
