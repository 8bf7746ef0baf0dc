#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wsh/linalg.hpp"
#include "wsh/symfunc.hpp"

namespace wsh {

/// Homogeneous operator of rank r on symmetric functions of degree <= N, in
/// the p-basis. blocks[n] maps degree n to degree n + r (rows p(n+r), columns
/// p(n)); a block with n + r < 0 is the empty 0 x p(n) map. The keys form the
/// validity window.
struct GradedOp {
  int rank = 0;
  std::map<int, FMatrix> blocks;

  bool empty() const { return blocks.empty(); }
  /// [lo, hi] of the source degrees; requires nonempty.
  std::pair<int, int> window() const;
  bool is_zero() const;
  /// Lowest source degree whose block is nonzero.
  std::optional<int> first_nonzero_block() const;
  /// Blocks concatenated degree-major, then row-major.
  FVec flatten() const;
  /// Restriction to source degrees in [lo, hi].
  GradedOp restricted(int lo, int hi) const;
  /// Image of a p-basis coefficient vector of degree n.
  FVec apply(int n, const FVec& v) const;
};

GradedOp compose(const GradedOp& a, const GradedOp& b);
/// Linear combination on the common window; ranks must agree.
GradedOp lincomb(const std::vector<std::pair<FieldElem, const GradedOp*>>& terms);
GradedOp operator+(const GradedOp& a, const GradedOp& b);
GradedOp operator-(const GradedOp& a, const GradedOp& b);
GradedOp operator*(const FieldElem& s, const GradedOp& a);
/// ab - ba; throws std::runtime_error "truncation too small" if the window is empty.
GradedOp commutator(const GradedOp& a, const GradedOp& b);

/// Operators on the Fock space for one content convention, with memoized
/// generators. The standard convention realizes D_{r,0} as multiplication by
/// p_r; the swapped one as (-1)^{r-1} p_r, the image of the recursive
/// definition D_{r,0} = [D_{1,1}, D_{r-1,0}] / (r-1).
class OpContext {
 public:
  OpContext(std::shared_ptr<const JackTable> table, ContentConvention conv);

  const JackTable& table() const { return *table_; }
  const Field& field() const { return table_->field(); }
  ContentConvention convention() const { return conv_; }
  int max_degree() const { return table_->max_degree(); }
  FieldElem kappa() const { return field().kappa(); }

  /// Multiplication by p_l.
  const GradedOp& multiplication(int l);
  /// D_{0,l}: diagonal in the Jack basis with the content sums as eigenvalues.
  const GradedOp& sekiguchi(int l);
  /// D_{r,0} as described above.
  const GradedOp& d_r0(int r);
  /// D_{1,k} = [D_{0,k+1}, D_{1,0}].
  const GradedOp& d1(int k);
  /// D_{r,d} = [D_{0,d+1}, D_{r,0}].
  const GradedOp& drd(int r, int d);
  /// D'_{r,d} = ad(D_{0,2})^d (D_{r,0}).
  const GradedOp& dprime(int r, int d);
  /// D_{-1,k} = kappa * adjoint(D_{1,k}).
  const GradedOp& lowering(int k);

  /// Adjoint for the Jack pairing: <adjoint(A) f, g> = <f, A g>.
  GradedOp adjoint(const GradedOp& a) const;
  /// Degree-n block of a rank-0 operator in the Jack basis.
  FMatrix in_jack_basis(const GradedOp& a, int n) const;

 private:
  using Key = std::pair<int, int>;
  const GradedOp& memo(std::map<Key, GradedOp>& cache, Key key, const std::function<GradedOp()>& make);

  std::shared_ptr<const JackTable> table_;
  ContentConvention conv_;
  std::recursive_mutex mu_;
  std::map<Key, GradedOp> mult_, sek_, dr0_, d1_, drd_, dprime_, low_;
};

// ---- filtration and dimension counts ---------------------------------------

/// Basis of the order filtration piece F[r, <= d], built inductively:
/// F[1, <= d] = span{D_{1,0..d}}, and for r >= 2 the span of products
/// F[r', <= d'] F[r'', <= d''] (r' + r'' = r, d' + d'' = d) together with
/// ad(D_{1,l}) F[r-1, <= d-l+1] for 0 <= l <= d+1.
class Filtration {
 public:
  explicit Filtration(OpContext& ctx) : ctx_(ctx) {}

  /// Independent operators spanning F[r, <= d]; empty for d < 0.
  const std::vector<GradedOp>& basis(int r, int d);
  /// Exact dimension, certified.
  int dimension(int r, int d);
  /// Whether op lies in F[r, <= d], by certified ranks.
  bool contains(int r, int d, const GradedOp& op);
  /// True if the flattened vectors have fewer coordinates than spanning candidates.
  bool window_limited(int r, int d);

 private:
  OpContext& ctx_;
  std::map<std::pair<int, int>, std::vector<GradedOp>> basis_;
  std::map<std::pair<int, int>, int> dim_;
  std::map<std::pair<int, int>, std::size_t> candidates_;
};

/// Number of multisets of generators D_{r',d'} (r' >= 1, d' >= 0) with
/// ranks summing to r and orders summing to d.
long free_monomial_count(int r, int d);

}  // namespace wsh
