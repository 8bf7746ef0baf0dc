#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "wsh/field.hpp"
#include "wsh/matrix.hpp"
#include "wsh/partition.hpp"

namespace wsh {

/// Raised when a specialized value of k makes a pivot or denominator vanish.
class UnluckySpecialization : public std::runtime_error {
 public:
  UnluckySpecialization() : std::runtime_error("unlucky specialization - rerun with new k value") {}
};

enum class Basis { monomial, power, jack };
const char* basis_name(Basis b);

/// Per-degree data for symmetric functions up to degree N: partitions,
/// transition matrices between m and p, the Gram diagonal of the p-basis and
/// the integral Jack basis at alpha = 1/k.
///
/// In every matrix indexed by partitions, index i refers to partitions_of(n)[i].
class JackTable {
 public:
  /// Builds degrees 0..max_degree; degrees are independent and built in parallel.
  JackTable(Field field, int max_degree);

  const Field& field() const { return field_; }
  int max_degree() const { return max_degree_; }
  /// Throws std::out_of_range "beyond truncation" for n > max_degree.
  const std::vector<Partition>& partitions(int n) const;
  int dim(int n) const { return n < 0 ? 0 : static_cast<int>(partitions(n).size()); }
  int index(const Partition& p) const;

  /// Row i holds p_{mu_i} in the m-basis.
  const FMatrix& p_in_m(int n) const { return deg(n).p_in_m; }
  /// Row i holds m_{lambda_i} in the p-basis.
  const FMatrix& m_in_p(int n) const { return deg(n).m_in_p; }
  /// Column j holds J_{lambda_j} in the p-basis.
  const FMatrix& jack_in_p(int n) const { return deg(n).jack_in_p; }
  /// Column j holds J_{lambda_j} in the m-basis.
  const FMatrix& jack_in_m(int n) const { return deg(n).jack_in_m; }
  /// Inverse of jack_in_p: row j gives the J_{lambda_j} coordinate of each p_mu.
  const FMatrix& p_in_jack(int n) const { return deg(n).p_in_jack; }
  /// <p_mu, p_mu> = z_mu alpha^{l(mu)}.
  const FVec& p_gram(int n) const { return deg(n).p_gram; }
  /// <J_lambda, J_lambda>.
  const FVec& jack_norm(int n) const { return deg(n).jack_norm; }

 private:
  struct Degree {
    std::vector<Partition> parts;
    std::map<Partition, int> index;
    FMatrix p_in_m, m_in_p, jack_in_p, jack_in_m, p_in_jack;
    FVec p_gram, jack_norm;
  };
  const Degree& deg(int n) const;
  Degree build(int n) const;

  Field field_;
  int max_degree_;
  std::vector<Degree> degrees_;
};

/// Finite combination of basis elements of one basis; partitions of any size.
class SymFunc {
 public:
  explicit SymFunc(Basis b = Basis::power) : basis_(b) {}
  static SymFunc basis_element(Basis b, const Partition& p, const FieldElem& c = FieldElem(1));

  Basis basis() const { return basis_; }
  const std::map<Partition, FieldElem>& coeffs() const { return c_; }
  FieldElem coeff(const Partition& p) const;
  void add(const Partition& p, const FieldElem& c);
  bool is_zero() const { return c_.empty(); }

  SymFunc& operator+=(const SymFunc& o);
  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b);
  friend SymFunc operator*(SymFunc a, const FieldElem& s);
  friend bool operator==(const SymFunc& a, const SymFunc& b) { return a.basis_ == b.basis_ && a.c_ == b.c_; }

  std::string str() const;

 private:
  Basis basis_;
  std::map<Partition, FieldElem> c_;
};

/// Exact change of basis; degrees above the table's truncation throw.
SymFunc basis_convert(const SymFunc& f, Basis target, const JackTable& t);
/// Bilinear extension of <p_lambda, p_mu> = delta z_lambda alpha^{l(lambda)}.
FieldElem inner_product(const SymFunc& f, const SymFunc& g, const JackTable& t);
/// Product of two power-sum combinations.
SymFunc power_product(const SymFunc& f, const SymFunc& g);

/// Coefficient vector of the degree-n part of f in the p-basis.
FVec to_power_vector(const SymFunc& f, int n, const JackTable& t);
SymFunc from_power_vector(const FVec& v, int n, const JackTable& t);

}  // namespace wsh
