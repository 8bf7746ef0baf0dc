#include "wsh/field.hpp"

#include <stdexcept>
#include <utility>

namespace wsh {

namespace {

// Divides out g (nonzero) from both parts.
void cancel(UPoly& a, UPoly& b, const UPoly& g) {
  if (g.is_one()) return;
  a = a.divexact(g);
  b = b.divexact(g);
}

}  // namespace

FieldElem::FieldElem(const mpq_class& q) {
  mpq_class r = q;
  r.canonicalize();
  num_ = UPoly(r.get_num());
  den_ = UPoly(r.get_den());
}

FieldElem FieldElem::normalize(UPoly num, UPoly den) {
  if (den.is_zero()) throw std::domain_error("division by zero in Q(k)");
  if (num.is_zero()) return FieldElem();
  const UPoly g = gcd(num, den);
  cancel(num, den, g);
  if (den.leading() < 0) {
    num = -num;
    den = -den;
  }
  return FieldElem(std::move(num), std::move(den), true);
}

mpq_class FieldElem::constant_value() const {
  if (!is_constant()) throw std::domain_error("element depends on k");
  mpq_class r(num_.coeff(0), den_.coeff(0));
  r.canonicalize();
  return r;
}

FieldElem FieldElem::operator-() const { return FieldElem(-num_, den_, true); }

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in Q(k)");
  if (num_.leading() < 0) return FieldElem(-den_, -num_, true);
  return FieldElem(den_, num_, true);
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    UPoly n = num_ + o.num_;
    if (den_.is_one()) {
      num_ = std::move(n);
      return *this;
    }
    return *this = normalize(std::move(n), den_);
  }
  // Henrici: only the gcd of the denominators can cancel.
  UPoly g = gcd(den_, o.den_);
  UPoly b1 = den_.divexact(g);
  UPoly d1 = o.den_.divexact(g);
  UPoly n = num_ * d1 + o.num_ * b1;
  if (n.is_zero()) return *this = FieldElem();
  UPoly g2 = gcd(n, g);
  UPoly den = b1 * o.den_;
  cancel(n, den, g2);
  if (den.leading() < 0) {
    n = -n;
    den = -den;
  }
  num_ = std::move(n);
  den_ = std::move(den);
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) { return *this += -o; }

FieldElem& FieldElem::operator*=(const FieldElem& o) {
  if (is_zero() || o.is_zero()) return *this = FieldElem();
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  UPoly a = num_, b = den_, c = o.num_, d = o.den_;
  const UPoly g1 = gcd(a, d);
  cancel(a, d, g1);
  const UPoly g2 = gcd(c, b);
  cancel(c, b, g2);
  UPoly n = a * c;
  UPoly den = b * d;
  if (den.leading() < 0) {
    n = -n;
    den = -den;
  }
  num_ = std::move(n);
  den_ = std::move(den);
  return *this;
}

FieldElem& FieldElem::operator/=(const FieldElem& o) { return *this *= o.inverse(); }

FieldElem FieldElem::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElem r(1), b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

mpq_class FieldElem::eval(const mpq_class& t) const {
  const mpq_class d = den_.eval(t);
  if (d == 0) throw std::domain_error("evaluation at a pole");
  mpq_class r = num_.eval(t) / d;
  r.canonicalize();
  return r;
}

std::string FieldElem::str(const std::string& var) const {
  if (den_.is_one()) return num_.str(var);
  auto wrap = [&](const UPoly& p) {
    std::string s = p.str(var);
    const bool single = p.is_constant() || (p.coeffs().size() >= 1 && s.find(' ') == std::string::npos);
    return single ? s : "(" + s + ")";
  };
  return wrap(num_) + "/" + wrap(den_);
}

FieldElem Field::lift(const FieldElem& x) const {
  if (!value_) return x;
  return FieldElem(x.eval(*value_));
}

std::string Field::name() const {
  if (!value_) return "Q(k)";
  return "Q[k=" + value_->get_str() + "]";
}

}  // namespace wsh
