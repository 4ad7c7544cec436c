#pragma once

#include <cstdint>
#include <vector>

#include "ksym/rational.hpp"

namespace ksym {

/// Largest `limit` accepted by the sequence listings.
inline constexpr std::uint64_t kMaxListingLimit = 1'000'000;

/// Exponent of the largest power of two dividing n; n >= 1.
int nu2(std::uint64_t n);

/// nu2(C(n, k)) as the number of carries when adding k and n-k in base 2.
/// 0 <= k <= n < 2^63.
int nu2_binomial(std::uint64_t n, std::uint64_t k);

struct AdmissibilityRecord {
  std::uint64_t n = 0;
  int k = 0;
  int nu2_binom = 0;
  int required = 0;  // C(k,2)
  bool admissible = false;
};

/// 2^C(k,2) divides C(n,k); defined for n > k >= 2.
bool is_k_admissible(std::uint64_t n, int k);
AdmissibilityRecord admissibility(std::uint64_t n, int k);

/// An entry of a listing; `trivial` marks orders below every k involved,
/// where symmetry holds vacuously.
struct ListedOrder {
  std::uint64_t n = 0;
  bool trivial = false;

  friend bool operator==(const ListedOrder&, const ListedOrder&) = default;
};

/// Orders 1 <= n <= limit carrying a possible k-symmetric graph: trivial
/// n < k, then k-admissible n > k. k in {2, 3, 4}; limit <= 10^6.
std::vector<ListedOrder> admissible_orders(int k, std::uint64_t limit);

/// Orders admissible for every j in 2..k at once (n < j counts as vacuous,
/// n == j excludes).
std::vector<ListedOrder> joint_admissible_orders(int k, std::uint64_t limit);

/// C(k,2) + nu2(k): log2 of the smallest k-admissible order.
int smallest_admissible_exponent(int k);
/// 2^(C(k,2) + nu2(k)); k >= 2.
BigInt smallest_admissible(int k);

}  // namespace ksym
