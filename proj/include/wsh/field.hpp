#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "wsh/upoly.hpp"

namespace wsh {

/// Element of Q(k) stored as a reduced ratio of integer polynomials.
///
/// Invariants: gcd(num, den) is a unit in Z[k], den has positive leading
/// coefficient, and zero is 0/1. Equality is therefore structural.
class FieldElem {
 public:
  FieldElem() : den_(1) {}
  FieldElem(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  explicit FieldElem(const mpz_class& c) : num_(c), den_(1) {}
  explicit FieldElem(const mpq_class& q);
  explicit FieldElem(UPoly p) : num_(std::move(p)), den_(1) {}

  /// Reduced, sign-normalized num/den. Throws std::domain_error with
  /// "division by zero in Q(k)" when den is zero.
  static FieldElem normalize(UPoly num, UPoly den);
  static FieldElem kappa() { return FieldElem(UPoly::kappa()); }
  static FieldElem rational(long p, long q) { return FieldElem(mpq_class(p, q)); }

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  bool is_polynomial() const { return den_.is_constant(); }
  /// True if no k appears (the element is a rational number).
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  mpq_class constant_value() const;

  FieldElem operator-() const;
  FieldElem inverse() const;
  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  FieldElem& operator/=(const FieldElem& o);
  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }
  friend bool operator==(const FieldElem& a, const FieldElem& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  FieldElem pow(int e) const;
  /// Value at k = t; throws if t is a pole.
  mpq_class eval(const mpq_class& t) const;

  std::string str(const std::string& var = "k") const;

 private:
  FieldElem(UPoly num, UPoly den, bool) : num_(std::move(num)), den_(std::move(den)) {}
  UPoly num_;
  UPoly den_;
};

/// The coefficient field in use: Q(k) itself, or Q with k specialized to a
/// fixed rational. In specialized mode every FieldElem produced through the
/// field is a constant, so the same code paths run over Q.
class Field {
 public:
  Field() = default;
  explicit Field(mpq_class specialized) : value_(std::move(specialized)) {}

  bool specialized() const { return value_.has_value(); }
  const std::optional<mpq_class>& value() const { return value_; }
  FieldElem kappa() const { return value_ ? FieldElem(*value_) : FieldElem::kappa(); }
  /// 1/k, the Jack parameter.
  FieldElem alpha() const { return kappa().inverse(); }
  /// Maps an element of Q(k) into this field.
  FieldElem lift(const FieldElem& x) const;
  std::string name() const;

 private:
  std::optional<mpq_class> value_;
};

}  // namespace wsh
