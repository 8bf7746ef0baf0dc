#include "wsh/symfunc.hpp"

#include <algorithm>
#include <exception>
#include <sstream>

#include "wsh/linalg.hpp"

namespace wsh {

namespace {

// Number of ways to distribute the parts of mu into the rows of lambda so that
// row j receives total lambda[j]: the coefficient of x^lambda in p_mu.
long count_fillings(const Partition& mu, std::size_t i, std::vector<int>& room) {
  if (i == mu.size()) {
    for (int r : room)
      if (r != 0) return 0;
    return 1;
  }
  long total = 0;
  for (auto& r : room) {
    if (r < mu[i]) continue;
    r -= mu[i];
    total += count_fillings(mu, i + 1, room);
    r += mu[i];
  }
  return total;
}

FieldElem dot(const FVec& a, const FVec& b, const FVec& gram) {
  FieldElem s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero() || b[i].is_zero()) continue;
    s += a[i] * b[i] * gram[i];
  }
  return s;
}

}  // namespace

const char* basis_name(Basis b) {
  switch (b) {
    case Basis::monomial:
      return "m";
    case Basis::power:
      return "p";
    case Basis::jack:
      return "J";
  }
  return "?";
}

JackTable::JackTable(Field field, int max_degree) : field_(std::move(field)), max_degree_(max_degree) {
  if (max_degree < 0) throw std::invalid_argument("negative truncation degree");
  degrees_.resize(static_cast<std::size_t>(max_degree) + 1);
  std::exception_ptr err;
  // Larger degrees dominate the cost, so start them first.
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i <= max_degree; ++i) {
    const int n = max_degree - i;
    try {
      degrees_[static_cast<std::size_t>(n)] = build(n);
    } catch (...) {
#pragma omp critical
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
}

const JackTable::Degree& JackTable::deg(int n) const {
  if (n < 0 || n > max_degree_) throw std::out_of_range("beyond truncation");
  return degrees_[static_cast<std::size_t>(n)];
}

const std::vector<Partition>& JackTable::partitions(int n) const { return deg(n).parts; }

int JackTable::index(const Partition& p) const {
  const Degree& d = deg(partition_size(p));
  auto it = d.index.find(p);
  if (it == d.index.end()) throw std::invalid_argument("not a partition: " + partition_str(p));
  return it->second;
}

JackTable::Degree JackTable::build(int n) const {
  Degree d;
  d.parts = partitions_of(n);
  const int m = static_cast<int>(d.parts.size());
  for (int i = 0; i < m; ++i) d.index[d.parts[static_cast<std::size_t>(i)]] = i;

  d.p_in_m = FMatrix(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      std::vector<int> room(d.parts[static_cast<std::size_t>(j)].begin(), d.parts[static_cast<std::size_t>(j)].end());
      d.p_in_m(i, j) = FieldElem(count_fillings(d.parts[static_cast<std::size_t>(i)], 0, room));
    }
  }
  d.m_in_p = inverse(d.p_in_m);

  try {
    const FieldElem alpha = field_.alpha();
    d.p_gram.resize(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
      const Partition& p = d.parts[static_cast<std::size_t>(i)];
      d.p_gram[static_cast<std::size_t>(i)] = FieldElem(z_lambda(p)) * alpha.pow(static_cast<int>(p.size()));
    }

    // Gram-Schmidt on m_lambda from the bottom of the order upwards.
    std::vector<FVec> monic(static_cast<std::size_t>(m));
    FVec norms(static_cast<std::size_t>(m));
    for (int i = m - 1; i >= 0; --i) {
      FVec mv(static_cast<std::size_t>(m));
      for (int j = 0; j < m; ++j) mv[static_cast<std::size_t>(j)] = d.m_in_p(i, j);
      FVec v = mv;
      for (int j = m - 1; j > i; --j) {
        const FVec& w = monic[static_cast<std::size_t>(j)];
        const FieldElem c = dot(mv, w, d.p_gram) / norms[static_cast<std::size_t>(j)];
        if (c.is_zero()) continue;
        for (int k = 0; k < m; ++k) v[static_cast<std::size_t>(k)] -= c * w[static_cast<std::size_t>(k)];
      }
      norms[static_cast<std::size_t>(i)] = dot(v, v, d.p_gram);
      if (norms[static_cast<std::size_t>(i)].is_zero()) throw UnluckySpecialization();
      monic[static_cast<std::size_t>(i)] = std::move(v);
    }

    // Scale so that [m_{1^n}] J = n!.
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
    d.jack_in_p = FMatrix(m, m);
    d.jack_norm.resize(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
      const FVec& v = monic[static_cast<std::size_t>(j)];
      FieldElem lowest;
      for (int k = 0; k < m; ++k) lowest += v[static_cast<std::size_t>(k)] * d.p_in_m(k, m - 1);
      if (lowest.is_zero()) throw UnluckySpecialization();
      const FieldElem s = FieldElem(fact) / lowest;
      for (int k = 0; k < m; ++k) d.jack_in_p(k, j) = v[static_cast<std::size_t>(k)] * s;
      d.jack_norm[static_cast<std::size_t>(j)] = norms[static_cast<std::size_t>(j)] * s * s;
    }
    d.jack_in_m = matmul_serial(d.p_in_m.transpose(), d.jack_in_p);
    FVec inv_norm(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) inv_norm[static_cast<std::size_t>(j)] = d.jack_norm[static_cast<std::size_t>(j)].inverse();
    d.p_in_jack = scale_cols(scale_rows(d.jack_in_p.transpose(), inv_norm), d.p_gram);
  } catch (const std::domain_error&) {
    if (field_.specialized()) throw UnluckySpecialization();
    throw;
  }
  return d;
}

// ---- SymFunc ----------------------------------------------------------------

SymFunc SymFunc::basis_element(Basis b, const Partition& p, const FieldElem& c) {
  if (!is_partition(p)) throw std::invalid_argument("not a partition: " + partition_str(p));
  SymFunc f(b);
  f.add(p, c);
  return f;
}

FieldElem SymFunc::coeff(const Partition& p) const {
  auto it = c_.find(p);
  return it == c_.end() ? FieldElem() : it->second;
}

void SymFunc::add(const Partition& p, const FieldElem& c) {
  if (c.is_zero()) return;
  auto it = c_.find(p);
  if (it == c_.end()) {
    c_.emplace(p, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) c_.erase(it);
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
  if (o.basis_ != basis_) throw std::invalid_argument("adding symmetric functions in different bases");
  for (const auto& [p, c] : o.c_) add(p, c);
  return *this;
}

SymFunc operator-(SymFunc a, const SymFunc& b) { return a += b * FieldElem(-1); }

SymFunc operator*(SymFunc a, const FieldElem& s) {
  if (s.is_zero()) return SymFunc(a.basis_);
  for (auto& [p, c] : a.c_) c *= s;
  return a;
}

std::string SymFunc::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : c_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*" << basis_name(basis_) << partition_str(p);
  }
  return os.str();
}

FVec to_power_vector(const SymFunc& f, int n, const JackTable& t) {
  const SymFunc p = basis_convert(f, Basis::power, t);
  FVec v(static_cast<std::size_t>(t.dim(n)));
  for (const auto& [part, c] : p.coeffs())
    if (partition_size(part) == n) v[static_cast<std::size_t>(t.index(part))] = c;
  return v;
}

SymFunc from_power_vector(const FVec& v, int n, const JackTable& t) {
  SymFunc f(Basis::power);
  const auto& parts = t.partitions(n);
  for (std::size_t i = 0; i < v.size(); ++i) f.add(parts[i], v[i]);
  return f;
}

SymFunc basis_convert(const SymFunc& f, Basis target, const JackTable& t) {
  if (f.basis() == target) return f;
  // Route through the p-basis one degree at a time.
  std::map<int, FVec> pv;
  for (const auto& [part, c] : f.coeffs()) {
    const int n = partition_size(part);
    auto& v = pv[n];
    if (v.empty()) v.resize(static_cast<std::size_t>(t.dim(n)));
    const int i = t.index(part);
    const int m = t.dim(n);
    for (int j = 0; j < m; ++j) {
      FieldElem x;
      switch (f.basis()) {
        case Basis::power:
          x = i == j ? FieldElem(1) : FieldElem();
          break;
        case Basis::monomial:
          x = t.m_in_p(n)(i, j);
          break;
        case Basis::jack:
          x = t.jack_in_p(n)(j, i);
          break;
      }
      if (!x.is_zero()) v[static_cast<std::size_t>(j)] += c * x;
    }
  }
  SymFunc out(target);
  for (const auto& [n, v] : pv) {
    const auto& parts = t.partitions(n);
    const int m = t.dim(n);
    for (int k = 0; k < m; ++k) {
      FieldElem s;
      for (int j = 0; j < m; ++j) {
        if (v[static_cast<std::size_t>(j)].is_zero()) continue;
        switch (target) {
          case Basis::power:
            if (j == k) s += v[static_cast<std::size_t>(j)];
            break;
          case Basis::monomial:
            s += v[static_cast<std::size_t>(j)] * t.p_in_m(n)(j, k);
            break;
          case Basis::jack:
            s += t.p_in_jack(n)(k, j) * v[static_cast<std::size_t>(j)];
            break;
        }
      }
      out.add(parts[static_cast<std::size_t>(k)], s);
    }
  }
  return out;
}

FieldElem inner_product(const SymFunc& f, const SymFunc& g, const JackTable& t) {
  const SymFunc a = basis_convert(f, Basis::power, t);
  const SymFunc b = basis_convert(g, Basis::power, t);
  FieldElem s;
  for (const auto& [p, c] : a.coeffs()) {
    const FieldElem d = b.coeff(p);
    if (d.is_zero()) continue;
    const int n = partition_size(p);
    s += c * d * t.p_gram(n)[static_cast<std::size_t>(t.index(p))];
  }
  return s;
}

SymFunc power_product(const SymFunc& f, const SymFunc& g) {
  if (f.basis() != Basis::power || g.basis() != Basis::power) {
    throw std::invalid_argument("power_product expects p-basis inputs");
  }
  SymFunc out(Basis::power);
  for (const auto& [a, ca] : f.coeffs()) {
    for (const auto& [b, cb] : g.coeffs()) {
      Partition p = a;
      p.insert(p.end(), b.begin(), b.end());
      std::sort(p.begin(), p.end(), std::greater<>());
      out.add(p, ca * cb);
    }
  }
  return out;
}

}  // namespace wsh
