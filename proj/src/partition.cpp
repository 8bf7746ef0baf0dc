#include "wsh/partition.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace wsh {

namespace {

void generate(int n, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    generate(n - k, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

const char* convention_name(ContentConvention c) {
  return c == ContentConvention::standard ? "standard" : "swapped";
}

int partition_size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

bool is_partition(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("negative partition size");
  std::vector<Partition> out;
  Partition cur;
  generate(n, n, cur, out);
  return out;
}

int partition_count(int n) {
  if (n < 0) return 0;
  std::vector<long> c(static_cast<std::size_t>(n) + 1, 0);
  c[0] = 1;
  for (int k = 1; k <= n; ++k)
    for (int i = k; i <= n; ++i) c[static_cast<std::size_t>(i)] += c[static_cast<std::size_t>(i - k)];
  return static_cast<int>(c[static_cast<std::size_t>(n)]);
}

mpz_class z_lambda(const Partition& p) {
  std::map<int, int> mult;
  for (int x : p) ++mult[x];
  mpz_class z = 1;
  for (const auto& [part, m] : mult) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(m));
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(part), static_cast<unsigned long>(m));
    z *= f * pw;
  }
  return z;
}

bool dominates(const Partition& a, const Partition& b) {
  if (partition_size(a) != partition_size(b)) return false;
  int sa = 0, sb = 0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    sa += i < a.size() ? a[i] : 0;
    sb += i < b.size() ? b[i] : 0;
    if (sa < sb) return false;
  }
  return true;
}

FieldElem content_power_sum(const Partition& p, int l, const FieldElem& kappa, ContentConvention conv) {
  if (l < 1) throw std::invalid_argument("content power index must be at least 1");
  FieldElem s;
  for (std::size_t y = 0; y < p.size(); ++y) {
    for (int x = 0; x < p[y]; ++x) {
      const FieldElem c = FieldElem(x) - kappa * FieldElem(static_cast<long>(y));
      s += (conv == ContentConvention::standard ? c : -c).pow(l - 1);
    }
  }
  return s;
}

std::string partition_str(const Partition& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

}  // namespace wsh
