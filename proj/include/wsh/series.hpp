#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "wsh/field.hpp"

namespace wsh {

/// Power series c[0] + c[1] s + ... + c[M] s^M, exact modulo s^(M+1).
///
/// R is a commutative Q-algebra: default construction gives zero, R(FieldElem)
/// embeds scalars, and R * FieldElem scales.
template <class R>
class TruncSeries {
 public:
  explicit TruncSeries(int order) : c_(static_cast<std::size_t>(order) + 1) {
    if (order < 0) throw std::invalid_argument("series order must be nonnegative");
  }
  TruncSeries(int order, std::vector<R> coeffs) : TruncSeries(order) {
    for (std::size_t i = 0; i < coeffs.size() && i < c_.size(); ++i) c_[i] = std::move(coeffs[i]);
  }

  static TruncSeries constant(int order, R c) {
    TruncSeries s(order);
    s.c_[0] = std::move(c);
    return s;
  }
  /// a + b s.
  static TruncSeries linear(int order, R a, R b) {
    TruncSeries s(order);
    s.c_[0] = std::move(a);
    if (order >= 1) s.c_[1] = std::move(b);
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const R& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  R& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
  const std::vector<R>& coeffs() const { return c_; }

  TruncSeries& operator+=(const TruncSeries& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    return *this;
  }
  TruncSeries& operator-=(const TruncSeries& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    return *this;
  }
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    a.check(b);
    TruncSeries r(a.order());
    const int m = a.order();
    for (int i = 0; i <= m; ++i) {
      if (a[i].is_zero()) continue;
      for (int j = 0; i + j <= m; ++j) {
        if (b[j].is_zero()) continue;
        r[i + j] = r[i + j] + a[i] * b[j];
      }
    }
    return r;
  }
  friend TruncSeries operator*(TruncSeries a, const FieldElem& s) {
    for (auto& x : a.c_) x = x * s;
    return a;
  }
  friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.c_ == b.c_; }

  /// Multiplication by s^l, truncated.
  TruncSeries shifted(int l) const {
    TruncSeries r(order());
    for (int i = order(); i - l >= 0; --i) r[i] = c_[static_cast<std::size_t>(i - l)];
    return r;
  }

 private:
  void check(const TruncSeries& o) const {
    if (o.c_.size() != c_.size()) throw std::invalid_argument("series orders differ");
  }
  std::vector<R> c_;
};

/// exp(x) for x with zero constant term, via y' = x' y.
template <class R>
TruncSeries<R> series_exp(const TruncSeries<R>& x) {
  if (!x[0].is_zero()) throw std::domain_error("series_exp needs a zero constant term");
  const int m = x.order();
  TruncSeries<R> y(m);
  y[0] = R(FieldElem(1));
  for (int n = 1; n <= m; ++n) {
    R acc{};
    for (int k = 1; k <= n; ++k) {
      if (x[k].is_zero()) continue;
      acc = acc + x[k] * y[n - k] * FieldElem(k);
    }
    y[n] = acc * FieldElem::rational(1, n);
  }
  return y;
}

/// log(x) for x with constant term 1, via x y' = x'.
template <class R>
TruncSeries<R> series_log(const TruncSeries<R>& x) {
  if (!(x[0] == R(FieldElem(1)))) throw std::domain_error("series_log needs constant term 1");
  const int m = x.order();
  // z = y' (coefficients z[n-1] = n y[n]), solved from x z = x'.
  std::vector<R> z(static_cast<std::size_t>(m));
  for (int n = 1; n <= m; ++n) {
    R acc = x[n] * FieldElem(n);
    for (int k = 1; k < n; ++k) acc = acc - x[k] * z[static_cast<std::size_t>(n - k - 1)];
    z[static_cast<std::size_t>(n - 1)] = acc;
  }
  TruncSeries<R> y(m);
  for (int n = 1; n <= m; ++n) y[n] = z[static_cast<std::size_t>(n - 1)] * FieldElem::rational(1, n);
  return y;
}

/// x^e for integer e and constant term 1.
template <class R>
TruncSeries<R> series_pow(const TruncSeries<R>& x, int e) {
  return series_exp(series_log(x) * FieldElem(e));
}

}  // namespace wsh
