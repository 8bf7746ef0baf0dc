#include "wsh/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace wsh {

namespace {

void trim(Exponent& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

Exponent add_exp(const Exponent& a, const Exponent& b) {
  Exponent r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

int exp_at(const Exponent& e, int i) {
  return i < static_cast<int>(e.size()) ? e[static_cast<std::size_t>(i)] : 0;
}

}  // namespace

MultiPoly::MultiPoly(const FieldElem& c) {
  if (!c.is_zero()) terms_.emplace(Exponent{}, c);
}

MultiPoly MultiPoly::variable(int i) {
  Exponent e(static_cast<std::size_t>(i) + 1, 0);
  e.back() = 1;
  return monomial(std::move(e), FieldElem(1));
}

MultiPoly MultiPoly::monomial(Exponent e, const FieldElem& c) {
  MultiPoly p;
  trim(e);
  if (!c.is_zero()) p.terms_.emplace(std::move(e), c);
  return p;
}

void MultiPoly::add_term(const Exponent& e, const FieldElem& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

FieldElem MultiPoly::coeff(const Exponent& e) const {
  Exponent k = e;
  trim(k);
  auto it = terms_.find(k);
  return it == terms_.end() ? FieldElem() : it->second;
}

int MultiPoly::num_vars() const {
  int n = 0;
  for (const auto& [e, c] : terms_) n = std::max(n, static_cast<int>(e.size()));
  return n;
}

int MultiPoly::total_degree() const {
  int d = is_zero() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

int MultiPoly::degree_in(int var) const {
  int d = is_zero() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, exp_at(e, var));
  return d;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) r.add_term(add_exp(ea, eb), ca * cb);
  }
  return r;
}

MultiPoly operator*(MultiPoly a, const FieldElem& s) {
  if (s.is_zero()) return MultiPoly();
  for (auto& [e, c] : a.terms_) c *= s;
  return a;
}

MultiPoly MultiPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative power of a polynomial");
  MultiPoly r(FieldElem(1)), b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

MultiPoly MultiPoly::permuted(const std::vector<int>& perm) const {
  MultiPoly r;
  for (const auto& [e, c] : terms_) {
    Exponent f;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      const int j = i < perm.size() ? perm[i] : static_cast<int>(i);
      if (static_cast<int>(f.size()) <= j) f.resize(static_cast<std::size_t>(j) + 1, 0);
      f[static_cast<std::size_t>(j)] += e[i];
    }
    trim(f);
    r.add_term(f, c);
  }
  return r;
}

MultiPoly MultiPoly::substitute(const std::map<int, MultiPoly>& values) const {
  MultiPoly r;
  for (const auto& [e, c] : terms_) {
    Exponent rest = e;
    MultiPoly factor(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto it = values.find(static_cast<int>(i));
      if (it == values.end()) continue;
      factor = factor * it->second.pow(e[i]);
      rest[i] = 0;
    }
    trim(rest);
    r += factor * MultiPoly::monomial(rest, FieldElem(1));
  }
  return r;
}

MultiPoly MultiPoly::map_coeffs(const std::function<FieldElem(const FieldElem&)>& f) const {
  MultiPoly r;
  for (const auto& [e, c] : terms_) r.add_term(e, f(c));
  return r;
}

MultiPoly MultiPoly::divexact_in(const MultiPoly& d, int var) const {
  const int dd = d.degree_in(var);
  if (dd < 0) throw std::domain_error("division by the zero polynomial");
  // Split d = lead * x^dd + lower, lead a constant.
  FieldElem lead;
  for (const auto& [e, c] : d.terms_) {
    if (exp_at(e, var) != dd) continue;
    Exponent rest = e;
    if (var < static_cast<int>(rest.size())) rest[static_cast<std::size_t>(var)] = 0;
    trim(rest);
    if (!rest.empty()) throw std::domain_error("divisor leading coefficient is not constant");
    lead = c;
  }
  const FieldElem inv = lead.inverse();
  MultiPoly rem = *this, q;
  while (!rem.is_zero()) {
    const int dr = rem.degree_in(var);
    if (dr < dd) break;
    MultiPoly step;
    for (const auto& [e, c] : rem.terms_) {
      if (exp_at(e, var) != dr) continue;
      Exponent f = e;
      if (static_cast<int>(f.size()) <= var) f.resize(static_cast<std::size_t>(var) + 1, 0);
      f[static_cast<std::size_t>(var)] -= dd;
      trim(f);
      step.add_term(f, c * inv);
    }
    q += step;
    rem -= step * d;
  }
  if (!rem.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

bool MultiPoly::is_symmetric(int n) const {
  for (int i = 0; i + 1 < n; ++i) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(i) + 1]);
    if (!(permuted(perm) == *this)) return false;
  }
  return true;
}

std::string MultiPoly::str(const std::vector<std::string>& names) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << " + ";
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += i < names.size() ? names[i] : "z" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    const std::string cs = c.str();
    if (mono.empty()) {
      os << cs;
    } else if (c.is_one()) {
      os << mono;
    } else {
      os << "(" << cs << ")*" << mono;
    }
  }
  return os.str();
}

}  // namespace wsh
