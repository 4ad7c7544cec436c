#include "ksym/admissibility.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace ksym {

namespace {

void require_listing_args(int k, std::uint64_t limit) {
  if (k < 2 || k > 4) throw std::invalid_argument("listings support k in {2,3,4}, got " + std::to_string(k));
  if (limit > kMaxListingLimit) throw std::invalid_argument("limit exceeds 10^6");
}

int required_exponent(int k) { return k * (k - 1) / 2; }

}  // namespace

int nu2(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("nu2 is undefined at 0");
  return std::countr_zero(n);
}

int nu2_binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) throw std::invalid_argument("nu2_binomial needs k <= n");
  if (n >> 63) throw std::invalid_argument("nu2_binomial needs n < 2^63");
  const std::uint64_t a = n - k;
  const std::uint64_t b = k;
  // Bit i of (a+b)^a^b is the carry into position i; a+b cannot overflow.
  const std::uint64_t carries = (a + b) ^ a ^ b;
  return std::popcount(carries);
}

AdmissibilityRecord admissibility(std::uint64_t n, int k) {
  if (k < 2) throw std::invalid_argument("admissibility needs k >= 2");
  if (n <= static_cast<std::uint64_t>(k)) {
    throw std::invalid_argument("admissibility is defined for n > k (n = " + std::to_string(n) +
                                ", k = " + std::to_string(k) + ")");
  }
  AdmissibilityRecord r;
  r.n = n;
  r.k = k;
  r.nu2_binom = nu2_binomial(n, static_cast<std::uint64_t>(k));
  r.required = required_exponent(k);
  r.admissible = r.nu2_binom >= r.required;
  return r;
}

bool is_k_admissible(std::uint64_t n, int k) { return admissibility(n, k).admissible; }

std::vector<ListedOrder> admissible_orders(int k, std::uint64_t limit) {
  require_listing_args(k, limit);
  std::vector<ListedOrder> out;
  for (std::uint64_t n = 1; n <= limit; ++n) {
    if (n < static_cast<std::uint64_t>(k)) {
      out.push_back({n, true});
    } else if (n > static_cast<std::uint64_t>(k) && is_k_admissible(n, k)) {
      out.push_back({n, false});
    }
  }
  return out;
}

std::vector<ListedOrder> joint_admissible_orders(int k, std::uint64_t limit) {
  require_listing_args(k, limit);
  std::vector<ListedOrder> out;
  for (std::uint64_t n = 1; n <= limit; ++n) {
    bool ok = true;
    bool vacuous_everywhere = true;
    for (int j = 2; j <= k && ok; ++j) {
      const auto uj = static_cast<std::uint64_t>(j);
      if (n < uj) continue;
      vacuous_everywhere = false;
      ok = n > uj && is_k_admissible(n, j);
    }
    if (ok) out.push_back({n, vacuous_everywhere});
  }
  return out;
}

int smallest_admissible_exponent(int k) {
  if (k < 2) throw std::invalid_argument("smallest_admissible needs k >= 2");
  return required_exponent(k) + nu2(static_cast<std::uint64_t>(k));
}

BigInt smallest_admissible(int k) {
  BigInt r = 1;
  r <<= smallest_admissible_exponent(k);
  return r;
}

}  // namespace ksym
