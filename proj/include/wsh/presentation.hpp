#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "wsh/operators.hpp"

namespace wsh {

/// Abstract generator t_{kind,index}: kind 0 is t_{0,l} (l >= 1), kind 1 is
/// t_{1,k} and kind -1 is t_{-1,k} (k >= 0).
struct Letter {
  int kind = 1;
  int index = 0;
  auto operator<=>(const Letter&) const = default;
};
using Word = std::vector<Letter>;
std::string word_str(const Word& w);

/// F-linear combination of words; no zero coefficients are stored.
class FreeElement {
 public:
  FreeElement() = default;
  static FreeElement word(Word w, const FieldElem& c = FieldElem(1));
  static FreeElement scalar(const FieldElem& c) { return word({}, c); }

  const std::map<Word, FieldElem>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  FieldElem coeff(const Word& w) const;
  void add(const Word& w, const FieldElem& c);

  FreeElement& operator+=(const FreeElement& o);
  friend FreeElement operator+(FreeElement a, const FreeElement& b) { return a += b; }
  friend FreeElement operator-(FreeElement a, const FreeElement& b) { return a += b * FieldElem(-1); }
  /// Concatenation product.
  friend FreeElement operator*(const FreeElement& a, const FreeElement& b);
  friend FreeElement operator*(FreeElement a, const FieldElem& s);
  friend FreeElement operator*(const FieldElem& s, FreeElement a) { return std::move(a) * s; }
  friend bool operator==(const FreeElement& a, const FreeElement& b) { return a.t_ == b.t_; }

  std::string str() const;

 private:
  std::map<Word, FieldElem> t_;
};

FreeElement t0(int l);
FreeElement t1(int k);
FreeElement tlow(int k);
FreeElement bracket(const FreeElement& a, const FreeElement& b);

/// Moves every t_0 letter to the right of every t_1 letter with
/// t_{0,l} t_{1,k} -> t_{1,k} t_{0,l} + t_{1,k+l-1}, then sorts the commuting
/// t_0 letters. Throws std::out_of_range "index overflow; raise K" when an
/// index above kmax would be produced, and std::invalid_argument on t_{-1} letters.
FreeElement normal_order(const FreeElement& x, int kmax);

/// The evaluation map t_{0,l} -> D_{0,l}, t_{+-1,k} -> D_{+-1,k}, with word
/// products cached across calls.
class Evaluator {
 public:
  explicit Evaluator(OpContext& ctx) : ctx_(ctx) {}
  GradedOp operator()(const FreeElement& x);
  const GradedOp& word(const Word& w);
  OpContext& context() { return ctx_; }

 private:
  const GradedOp& letter(const Letter& l);
  OpContext& ctx_;
  std::map<Word, GradedOp> cache_;
};

// ---- relation families ------------------------------------------------------

/// 3[t_{l+2},t_{k+1}] - 3[t_{l+1},t_{k+2}] - [t_{l+3},t_k] + [t_l,t_{k+3}]
///   + [t_{l+1},t_k] - [t_l,t_{k+1}]
///   + k(k-1)(t_k t_l + t_l t_k + [t_{l+1},t_k] - [t_l,t_{k+1}]), all t = t_{1,.}.
FreeElement rank2_relation(int k, int l, const FieldElem& kappa);
/// 3[t_{1,2},t_{1,1}] - [t_{1,3},t_{1,0}] + [t_{1,1},t_{1,0}] + k(k-1)(t_{1,0}^2 + [t_{1,1},t_{1,0}]).
FreeElement cubic_relation(const FieldElem& kappa);
/// [t_{1,0}, [t_{1,0}, t_{1,1}]].
FreeElement serre_relation();
/// [t_{0,l}, t_{1,k}] - t_{1,k+l-1}.
FreeElement shift_relation(int l, int k);
/// [t_{0,l}, t_{0,k}].
FreeElement commuting_relation(int l, int k);
/// Coefficient of z^{-m} w^{-n} in k(z-w)D(z)D(w) + k(w-z)D(w)D(z) with
/// k(u) = (u-1+k)(u+1)(u-k), D(z) = sum_j t_{1,j} z^{-j}:
/// sum_{a,b} k_ab (t_{m+a} t_{n+b} + t_{n+a} t_{m+b}) where k(z-w) = sum k_ab z^a w^b.
FreeElement generating_coefficient(int m, int n, const FieldElem& kappa);

struct Rank2Match {
  int kmax = 0;
  int products = 0;          // (kmax+1)^2 words t_{1,k} t_{1,l}
  int operator_rank = 0;     // certified rank of their images
  int kernel_dim = 0;        // products - operator_rank
  int relations = 0;         // rank2_relation(k,l) with every index <= kmax
  int relation_span_dim = 0;
  bool relations_vanish = false;     // every relation maps to the zero operator
  bool kernel_in_relation_span = false;  // every exact kernel vector reduces to 0 modulo the span
  bool match() const { return relations_vanish && kernel_in_relation_span && kernel_dim == relation_span_dim; }
};
/// Compares the operator kernel on span{t_{1,k} t_{1,l} : k, l <= kmax} with
/// the span of the rank-2 relations whose indices stay within kmax.
Rank2Match rank2_kernel_match(Evaluator& ev, int kmax);

/// Coefficient vector of x on the words t_{1,a} t_{1,b}, a, b <= kmax, ordered by (a, b).
FVec rank2_coordinates(const FreeElement& x, int kmax);

}  // namespace wsh
