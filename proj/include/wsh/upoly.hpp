#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace wsh {

/// Dense univariate polynomial in the deformation parameter k with integer
/// coefficients. Coefficients are stored low degree first with no trailing
/// zeros, so the zero polynomial has an empty coefficient vector.
class UPoly {
 public:
  UPoly() = default;
  UPoly(long c);  // NOLINT(google-explicit-constructor)
  explicit UPoly(mpz_class c);
  explicit UPoly(std::vector<mpz_class> coeffs);

  /// The monomial c * k^e.
  static UPoly monomial(const mpz_class& c, int e);
  static UPoly kappa() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  const mpz_class& leading() const { return c_.back(); }
  const std::vector<mpz_class>& coeffs() const { return c_; }
  mpz_class coeff(int i) const;

  /// Positive gcd of the coefficients (0 for the zero polynomial).
  mpz_class content() const;
  UPoly primitive() const;
  /// Sum of absolute values of the coefficients.
  mpz_class l1_norm() const;

  UPoly operator-() const;
  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const UPoly& o);
  UPoly& operator*=(const mpz_class& s);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const mpz_class& s) { return a *= s; }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  /// Exact division by an integer; throws if some coefficient is not divisible.
  UPoly divexact(const mpz_class& s) const;
  /// Exact division in Z[k]; throws std::domain_error if b does not divide *this.
  UPoly divexact(const UPoly& b) const;

  mpq_class eval(const mpq_class& t) const;
  mpz_class eval(const mpz_class& t) const;
  /// Value at t modulo the prime p, for p < 2^32.
  std::uint32_t eval_mod(std::uint64_t t, std::uint32_t p) const;

  /// Readable form in the variable `var`, highest degree first.
  std::string str(const std::string& var = "k") const;

 private:
  void trim();
  std::vector<mpz_class> c_;
};

/// gcd in Z[k]: gcd of contents times the primitive gcd, leading coefficient
/// positive. gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);

/// Pseudo-remainder: lc(b)^e * a mod b for the smallest usable e.
UPoly pseudo_remainder(UPoly a, const UPoly& b);

}  // namespace wsh
