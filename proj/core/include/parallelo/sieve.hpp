#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace parallelo {

inline constexpr std::int64_t kDefaultSieveMax = 1'000'000;

/// Moebius, Euler phi and smallest-prime-factor tables for 1..limit.
/// Immutable once built; index 0 is unused.
class SieveTables {
 public:
  std::int64_t limit() const { return limit_; }
  int mobius(std::int64_t m) const { return mobius_[static_cast<std::size_t>(m)]; }
  std::int64_t phi(std::int64_t m) const { return phi_[static_cast<std::size_t>(m)]; }
  std::int64_t smallest_prime_factor(std::int64_t m) const { return spf_[static_cast<std::size_t>(m)]; }
  bool contains(std::int64_t m) const { return m >= 1 && m <= limit_; }

  /// Values for 1..limit, without the unused slot.
  std::span<const std::int8_t> mobius_values() const { return {mobius_.data() + 1, static_cast<std::size_t>(limit_)}; }
  std::span<const std::int64_t> phi_values() const { return {phi_.data() + 1, static_cast<std::size_t>(limit_)}; }
  std::span<const std::int64_t> primes() const { return primes_; }

 private:
  friend SieveTables build_sieves(std::int64_t limit, std::int64_t sieve_max);

  std::int64_t limit_ = 0;
  std::vector<std::int8_t> mobius_;
  std::vector<std::int64_t> phi_;
  std::vector<std::int64_t> spf_;
  std::vector<std::int64_t> primes_;
};

/// Linear sieve up to limit. Throws InvalidArgument for limit < 1 or
/// limit > sieve_max.
SieveTables build_sieves(std::int64_t limit, std::int64_t sieve_max = kDefaultSieveMax);

/// Process-wide tables covering at least `limit`, rebuilt larger on demand.
/// The returned tables are never mutated.
std::shared_ptr<const SieveTables> shared_sieves(std::int64_t limit, std::int64_t sieve_max = kDefaultSieveMax);

}  // namespace parallelo
