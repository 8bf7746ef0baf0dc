#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "wsh/field.hpp"

namespace wsh {

/// Weakly decreasing positive parts; the empty vector is the partition of 0.
using Partition = std::vector<int>;

/// Content of the box in column x, row y.
enum class ContentConvention {
  standard,  // c = x - k y
  swapped,   // c = k y - x
};

const char* convention_name(ContentConvention c);

int partition_size(const Partition& p);
bool is_partition(const Partition& p);
/// All partitions of n, reverse lexicographic: (n) first, (1^n) last. This
/// refines dominance order with larger partitions first.
std::vector<Partition> partitions_of(int n);
/// Number of partitions of n (0 for negative n).
int partition_count(int n);
/// z_p = prod_i i^{m_i} m_i!.
mpz_class z_lambda(const Partition& p);
/// Dominance order: a >= b.
bool dominates(const Partition& a, const Partition& b);
/// sum over boxes of c(s)^(l-1), with 0^0 = 1.
FieldElem content_power_sum(const Partition& p, int l, const FieldElem& kappa,
                            ContentConvention conv = ContentConvention::standard);
/// "(3,1,1)" style label; "()" for the empty partition.
std::string partition_str(const Partition& p);

}  // namespace wsh
