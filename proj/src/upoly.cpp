#include "wsh/upoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace wsh {

UPoly::UPoly(long c) {
  if (c != 0) c_.emplace_back(c);
}

UPoly::UPoly(mpz_class c) {
  if (c != 0) c_.push_back(std::move(c));
}

UPoly::UPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(const mpz_class& c, int e) {
  UPoly p;
  if (c == 0) return p;
  p.c_.assign(static_cast<std::size_t>(e) + 1, mpz_class(0));
  p.c_.back() = c;
  return p;
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpz_class UPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return c_[static_cast<std::size_t>(i)];
}

mpz_class UPoly::content() const {
  mpz_class g = 0;
  for (const auto& x : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

UPoly UPoly::primitive() const {
  if (is_zero()) return *this;
  mpz_class g = content();
  if (leading() < 0) g = -g;
  return divexact(g);
}

mpz_class UPoly::l1_norm() const {
  mpz_class s = 0;
  for (const auto& x : c_) s += abs(x);
  return s;
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpz_class(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpz_class(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  UPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      mpz_addmul(r.c_[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
  }
  r.trim();
  return r;
}

UPoly& UPoly::operator*=(const UPoly& o) {
  *this = *this * o;
  return *this;
}

UPoly& UPoly::operator*=(const mpz_class& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= s;
  return *this;
}

UPoly UPoly::divexact(const mpz_class& s) const {
  if (s == 0) throw std::domain_error("division by zero in Z[k]");
  UPoly r = *this;
  for (auto& x : r.c_) {
    if (!mpz_divisible_p(x.get_mpz_t(), s.get_mpz_t())) {
      throw std::domain_error("inexact integer division in Z[k]");
    }
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), s.get_mpz_t());
  }
  return r;
}

UPoly UPoly::divexact(const UPoly& b) const {
  if (b.is_zero()) throw std::domain_error("division by zero in Z[k]");
  if (is_zero()) return *this;
  if (b.is_constant()) return divexact(b.c_[0]);
  if (degree() < b.degree()) throw std::domain_error("inexact polynomial division in Z[k]");
  std::vector<mpz_class> rem = c_;
  std::vector<mpz_class> q(static_cast<std::size_t>(degree() - b.degree()) + 1, mpz_class(0));
  const mpz_class& lb = b.leading();
  for (int i = degree() - b.degree(); i >= 0; --i) {
    mpz_class& top = rem[static_cast<std::size_t>(i + b.degree())];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) {
      throw std::domain_error("inexact polynomial division in Z[k]");
    }
    mpz_class qi;
    mpz_divexact(qi.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    for (int j = 0; j <= b.degree(); ++j) {
      mpz_submul(rem[static_cast<std::size_t>(i + j)].get_mpz_t(), qi.get_mpz_t(),
                 b.c_[static_cast<std::size_t>(j)].get_mpz_t());
    }
    q[static_cast<std::size_t>(i)] = std::move(qi);
  }
  for (const auto& x : rem) {
    if (x != 0) throw std::domain_error("inexact polynomial division in Z[k]");
  }
  return UPoly(std::move(q));
}

mpq_class UPoly::eval(const mpq_class& t) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + mpq_class(*it);
  return acc;
}

mpz_class UPoly::eval(const mpz_class& t) const {
  mpz_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

std::uint32_t UPoly::eval_mod(std::uint64_t t, std::uint32_t p) const {
  std::uint64_t acc = 0;
  t %= p;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    const std::uint64_t c = mpz_fdiv_ui(it->get_mpz_t(), p);
    acc = (acc * t + c) % p;
  }
  return static_cast<std::uint32_t>(acc);
}

std::string UPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const mpz_class& c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    mpz_class a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << a;
    } else {
      if (a != 1) os << a << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

UPoly pseudo_remainder(UPoly a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero");
  const int db = b.degree();
  const mpz_class lb = b.leading();
  while (!a.is_zero() && a.degree() >= db) {
    const int shift = a.degree() - db;
    const mpz_class la = a.leading();
    a *= lb;
    a -= UPoly::monomial(la, shift) * b;
  }
  return a;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  if (a.is_zero()) return b.is_zero() ? b : b.primitive() * b.content();
  if (b.is_zero()) return a.primitive() * a.content();
  mpz_class c;
  {
    const mpz_class ca = a.content();
    const mpz_class cb = b.content();
    mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  }
  if (a.is_constant() || b.is_constant()) return UPoly(c);
  UPoly x = a.primitive();
  UPoly y = b.primitive();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    if (y.is_constant()) return UPoly(c);
    UPoly r = pseudo_remainder(std::move(x), y);
    x = std::move(y);
    y = r.is_zero() ? r : r.primitive();
  }
  return x.primitive() * c;
}

}  // namespace wsh
