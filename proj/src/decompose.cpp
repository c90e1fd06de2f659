#include "polydecomp/decompose.hpp"

#include <string>

namespace polydecomp {

bool is_composite(int n) {
  if (n < 4) return false;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) return true;
  return false;
}

bool is_proper_divisor(int n, int d) { return n >= 4 && d > 1 && d < n && n % d == 0; }

void require_proper_divisor(int n, int d) {
  if (!is_proper_divisor(n, d))
    throw DomainError(std::to_string(d) + " is not a proper divisor of " + std::to_string(n));
}

NtSet nt_set(int n, int d) {
  require_proper_divisor(n, d);
  NtSet set{n, d, n / d, {}, {}};
  std::vector<bool> member(static_cast<std::size_t>(n), false);
  for (int i = n - set.e + 1; i <= n - 1; ++i) member[static_cast<std::size_t>(i)] = true;
  for (int i = set.e; i < n; i += set.e) member[static_cast<std::size_t>(i)] = true;
  for (int i = n - 1; i >= 1; --i) (member[static_cast<std::size_t>(i)] ? set.nt : set.complement).push_back(i);
  return set;
}

DivisorPlan divisor_plan(int n) {
  if (!is_composite(n)) throw DomainError(std::to_string(n) + " is not composite");
  DivisorPlan plan;
  plan.n = n;
  for (int d = 2; d < n; ++d)
    if (n % d == 0) plan.proper_divisors.push_back(d);
  plan.least_prime = plan.proper_divisors.front();
  plan.delta = plan.least_prime * plan.least_prime == n ? 1 : 2;
  return plan;
}

int dimension(int n, int d) {
  require_proper_divisor(n, d);
  return d + n / d - 2;
}

int codimension(int n, int d) {
  require_proper_divisor(n, d);
  return n - d - n / d + 1;
}

mpz_class degree_bound(int n, int d) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(dimension(n, d)));
  return out;
}

}  // namespace polydecomp
