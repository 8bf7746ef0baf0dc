#pragma once

#include <cstdint>
#include <vector>

#include "wsh/multipoly.hpp"
#include "wsh/presentation.hpp"

namespace wsh {

/// h(u) = (u + 1 - k)(u - 1)(u + k) as a polynomial in x_var.
MultiPoly kernel_h(const FieldElem& kappa, int var = 0);
/// k(u) = (u - 1 + k)(u + 1)(u - k) as a polynomial in x_var.
MultiPoly kernel_k(const FieldElem& kappa, int var = 0);
/// h(x_b - x_a).
MultiPoly kernel_h_difference(const FieldElem& kappa, int a, int b);

/// Symmetric polynomial in z_1..z_n, the degree-n piece of the shuffle algebra.
class ShuffleElem {
 public:
  /// Throws std::invalid_argument if p is not symmetric in n variables or uses more.
  ShuffleElem(int n, MultiPoly p);
  static ShuffleElem unit() { return {0, MultiPoly(1)}; }
  /// z^k in one variable.
  static ShuffleElem power(int k);

  int vars() const { return n_; }
  const MultiPoly& poly() const { return p_; }
  friend bool operator==(const ShuffleElem& a, const ShuffleElem& b) { return a.n_ == b.n_ && a.p_ == b.p_; }

 private:
  int n_;
  MultiPoly p_;
};

/// Sum over (r,s)-shuffles of P(z_S) Q(z_S') prod_{i in S, j in S'} g(z_i - z_j),
/// g(u) = h(u)/u, computed over the common denominator prod_{i<j}(z_i - z_j)
/// with one exact division. Shuffle terms are built in parallel.
ShuffleElem star_product(const ShuffleElem& p, const ShuffleElem& q, const FieldElem& kappa);
/// Same product on one thread; reference for star_product.
ShuffleElem star_product_serial(const ShuffleElem& p, const ShuffleElem& q, const FieldElem& kappa);

struct ShuffleKernelReport {
  int kmax = 0;
  int products = 0;
  int shuffle_kernel_dim = 0;
  int operator_rank = 0;
  int operator_kernel_dim = 0;
  bool shuffle_kernel_in_operator_kernel = false;  // each vector maps to the zero operator
  bool divisible = false;  // each vector, as sum a_kl z1^k z2^l, is h(z2-z1) times a symmetric polynomial
  bool match() const {
    return shuffle_kernel_in_operator_kernel && divisible && shuffle_kernel_dim == operator_kernel_dim;
  }
};
/// Kernel of (a_kl) -> sum a_kl z^k * z^l against the kernel of
/// (a_kl) -> sum a_kl D_{1,k} D_{1,l}, for k, l <= kmax.
ShuffleKernelReport rank2_kernel_compare(Evaluator& ev, int kmax);

/// Exact quotient of sum a_kl z1^k z2^l by h(z2 - z1); throws std::domain_error if inexact.
MultiPoly divide_by_h(const FVec& coeffs, int kmax, const FieldElem& kappa);

/// Symmetric polynomial in n variables with random small coefficients in Z[k].
ShuffleElem random_shuffle_elem(int n, int max_degree, std::uint64_t seed, const FieldElem& kappa);

}  // namespace wsh
