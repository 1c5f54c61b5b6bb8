#pragma once

// Visible interior points of P_{a,n}, computed two independent ways: a gcd
// scan over the interior points, and a column decomposition evaluated with
// Legendre totients. The Moebius ratio form splits V/n into the phi-mean main
// term and an exact fractional-part double sum.
//
// Column s collects k in the half-open range ((s-1)n/a, sn/a], so the columns
// cover k = 1..n. k = n is the vertex (a, n), which is visible, hence
//   sum_s V(s,a,n) = V(a,n) + 1
//   V/n = (1/a) sum_s phi(s)/s + double_sum/n - 1/n.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "parallelo/lattice.hpp"
#include "parallelo/rational.hpp"
#include "parallelo/sieve.hpp"

namespace parallelo {

enum class CountMethod { Direct, Formula, ClosedForm };

std::string_view to_string(CountMethod m);

struct CountBreakdown {
  CanonicalParallelogram canonical;
  std::int64_t v;
  CountMethod method;
  /// V(s,a,n) for s = 1..a; sums to v + 1 when present.
  std::optional<std::vector<std::int64_t>> columns;

  Rational ratio() const { return {v, canonical.n()}; }
};

struct ErrorTermReport {
  CanonicalParallelogram canonical;
  BigRational main_term;   // (1/a) sum_{s<=a} phi(s)/s
  BigRational double_sum;  // sum_s sum_{d|s} (<(s-1)n/ad> - <sn/ad>) mu(d)
  std::int64_t bound;      // sum_{s<=a} 2^omega(s)
};

struct MobiusRatio {
  Rational ratio;
  ErrorTermReport report;
};

/// Largest n the int64 counting paths accept (k*a must fit).
inline constexpr std::int64_t kMaxCountN = 3'000'000'000;

/// Largest a for the Moebius ratio form (O(a) tables, big-integer sums).
inline constexpr std::int64_t kMaxMobiusA = 10'000'000;

/// gcd scan over (ceil(k*a/n), k), k = 1..n-1.
CountBreakdown count_direct(const CanonicalParallelogram& c);

/// Visible points with x = s, over k in ((s-1)n/a, sn/a]. Requires 1 <= s <= a.
std::int64_t count_column(std::int64_t s, const CanonicalParallelogram& c, const SieveTables* sieve = nullptr);

/// Sum of columns minus the vertex (a, n).
CountBreakdown count_formula(const CanonicalParallelogram& c, bool keep_columns = true,
                             const SieveTables* sieve = nullptr);

/// Exact V/n through the phi-mean main term and the fractional-part double sum.
MobiusRatio count_mobius_ratio(const CanonicalParallelogram& c, const SieveTables* sieve = nullptr);

/// Known closed forms: a in {1, n-1} for any n; a in {2, (n+1)/2, (n-1)/2, n-2} for odd n.
std::optional<std::int64_t> closed_form_special(const CanonicalParallelogram& c);

/// V(2,n) = V((n+1)/2,n) for odd n >= 3.
std::int64_t closed_form_a_two(std::int64_t n);
/// V((n-1)/2,n) = V(n-2,n) for odd n >= 3.
std::int64_t closed_form_a_n_minus_two(std::int64_t n);

/// Closed form when one exists, else the direct scan.
CountBreakdown count_auto(const CanonicalParallelogram& c);

CountBreakdown count(const CanonicalParallelogram& c, CountMethod method, const SieveTables* sieve = nullptr);

/// (a^{-1} mod n, n); unimodularly equivalent to c.
CanonicalParallelogram inverse_partner(const CanonicalParallelogram& c);

/// Values of the gcd expressions that must agree for a given k.
struct GcdIdentityValues {
  std::int64_t ceil_complement_vs_k;      // gcd(ceil(k(n-a)/n), k)
  std::int64_t ceil_complement_vs_floor;  // gcd(ceil(k(n-a)/n), floor(ka/n))
  std::int64_t floor_vs_k;                // gcd(floor(ka/n), k)
  std::optional<std::int64_t> residue_vs_k;  // gcd(ka mod n, k), prime n only
};

GcdIdentityValues gcd_identity_values(const CanonicalParallelogram& c, std::int64_t k);

/// True iff all gcd expressions for this k agree. Requires 1 <= k <= n-1.
bool gcd_identity_check(const CanonicalParallelogram& c, std::int64_t k);

/// (3/4) a ceil(n/a) when a > 1 and both a and ceil(n/a) are even.
std::optional<Rational> parity_upper_bound(const CanonicalParallelogram& c);

}  // namespace parallelo
