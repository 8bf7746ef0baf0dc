#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "wsh/field.hpp"

namespace wsh {

/// Exponent vector with trailing zeros removed, so that polynomials in
/// different numbers of variables share one canonical key space.
using Exponent = std::vector<int>;

/// Sparse polynomial over Q(k) in variables x_0, x_1, ...
class MultiPoly {
 public:
  using Terms = std::map<Exponent, FieldElem>;

  MultiPoly() = default;
  MultiPoly(const FieldElem& c);  // NOLINT(google-explicit-constructor)
  MultiPoly(long c) : MultiPoly(FieldElem(c)) {}  // NOLINT(google-explicit-constructor)

  static MultiPoly variable(int i);
  static MultiPoly monomial(Exponent e, const FieldElem& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of x^e (zero if absent).
  FieldElem coeff(const Exponent& e) const;
  /// Largest variable index appearing plus one.
  int num_vars() const;
  int total_degree() const;
  int degree_in(int var) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const FieldElem& s);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  MultiPoly pow(int e) const;
  /// Renames x_i to x_{perm[i]} for i < perm.size().
  MultiPoly permuted(const std::vector<int>& perm) const;
  /// Substitutes x_i = values[i] whenever values has an entry for i.
  MultiPoly substitute(const std::map<int, MultiPoly>& values) const;
  /// Applies f to every coefficient, dropping zeros.
  MultiPoly map_coeffs(const std::function<FieldElem(const FieldElem&)>& f) const;

  /// Exact quotient by d, treating both as polynomials in x_var. The leading
  /// coefficient of d in x_var must be a nonzero constant. Throws
  /// std::domain_error if the remainder is nonzero.
  MultiPoly divexact_in(const MultiPoly& d, int var) const;

  /// True if invariant under every transposition of x_0..x_{n-1}.
  bool is_symmetric(int n) const;

  /// Readable form; names[i] labels x_i (default z1, z2, ...).
  std::string str(const std::vector<std::string>& names = {}) const;

 private:
  void add_term(const Exponent& e, const FieldElem& c);
  Terms terms_;
};

}  // namespace wsh
