#include "parallelo/sieve.hpp"

#include <algorithm>
#include <mutex>
#include <string>

#include "parallelo/error.hpp"

namespace parallelo {

SieveTables build_sieves(std::int64_t limit, std::int64_t sieve_max) {
  if (limit < 1) throw InvalidArgument("sieve limit must be >= 1");
  if (limit > sieve_max) {
    throw InvalidArgument("sieve limit " + std::to_string(limit) + " exceeds sieve_max " + std::to_string(sieve_max));
  }
  SieveTables t;
  auto size = static_cast<std::size_t>(limit) + 1;
  t.limit_ = limit;
  t.mobius_.assign(size, 0);
  t.phi_.assign(size, 0);
  t.spf_.assign(size, 0);
  t.mobius_[1] = 1;
  t.phi_[1] = 1;
  t.spf_[1] = 1;
  // Linear sieve: each composite is crossed off exactly once, by its smallest prime.
  for (std::int64_t i = 2; i <= limit; ++i) {
    if (t.spf_[i] == 0) {
      t.spf_[i] = i;
      t.mobius_[i] = -1;
      t.phi_[i] = i - 1;
      t.primes_.push_back(i);
    }
    for (std::int64_t p : t.primes_) {
      if (p > t.spf_[i] || i * p > limit) break;
      std::int64_t m = i * p;
      t.spf_[m] = p;
      if (p == t.spf_[i]) {
        t.mobius_[m] = 0;
        t.phi_[m] = t.phi_[i] * p;
      } else {
        t.mobius_[m] = static_cast<std::int8_t>(-t.mobius_[i]);
        t.phi_[m] = t.phi_[i] * (p - 1);
      }
    }
  }
  return t;
}

std::shared_ptr<const SieveTables> shared_sieves(std::int64_t limit, std::int64_t sieve_max) {
  static std::mutex mutex;
  static std::shared_ptr<const SieveTables> cached;
  std::lock_guard lock(mutex);
  if (!cached || cached->limit() < limit) {
    std::int64_t target = limit;
    if (cached) target = std::max(limit, std::min(sieve_max, cached->limit() * 2));
    cached = std::make_shared<const SieveTables>(build_sieves(target, sieve_max));
  }
  return cached;
}

}  // namespace parallelo
