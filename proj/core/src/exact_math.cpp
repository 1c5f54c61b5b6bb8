#include "parallelo/exact_math.hpp"

#include <algorithm>
#include <cstdlib>

#include "parallelo/sieve.hpp"

namespace parallelo {

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  std::uint64_t x = a < 0 ? 0 - static_cast<std::uint64_t>(a) : static_cast<std::uint64_t>(a);
  std::uint64_t y = b < 0 ? 0 - static_cast<std::uint64_t>(b) : static_cast<std::uint64_t>(b);
  if (x == 0) return static_cast<std::int64_t>(y);
  if (y == 0) return static_cast<std::int64_t>(x);
  // Binary gcd; this is the inner loop of every direct count.
  int shift = __builtin_ctzll(x | y);
  x >>= __builtin_ctzll(x);
  do {
    y >>= __builtin_ctzll(y);
    if (x > y) std::swap(x, y);
    y -= x;
  } while (y != 0);
  return static_cast<std::int64_t>(x << shift);
}

ExtendedGcd egcd(std::int64_t a, std::int64_t b) {
  if (a == 0 && b == 0) throw InvalidArgument("egcd(0, 0) is undefined");
  std::int64_t old_r = a, r = b;
  std::int64_t old_s = 1, s = 0;
  std::int64_t old_t = 0, t = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
    old_t = std::exchange(t, old_t - q * t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t n) {
  if (n < 2) throw InvalidArgument("modulus must be >= 2");
  auto [g, x, y] = egcd(a, n);
  (void)y;
  if (g != 1) throw InvalidArgument("gcd(a,n) must be 1 for a modular inverse");
  std::int64_t b = x % n;
  if (b < 0) b += n;
  return b;
}

std::int64_t floor_div(std::int64_t p, std::int64_t q) {
  if (q < 1) throw InvalidArgument("floor_div requires q >= 1");
  std::int64_t d = p / q;
  if (p % q != 0 && p < 0) --d;
  return d;
}

std::int64_t ceil_div(std::int64_t p, std::int64_t q) {
  if (q < 1) throw InvalidArgument("ceil_div requires q >= 1");
  std::int64_t d = p / q;
  if (p % q != 0 && p > 0) ++d;
  return d;
}

Rational frac(const Rational& r) { return r - Rational(r.floor()); }

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1;
  base %= m;
  while (e > 0) {
    if (e & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  auto m = static_cast<std::uint64_t>(n);
  std::uint64_t d = m - 1;
  int r = 0;
  while ((d & 1) == 0) { d >>= 1; ++r; }
  // These witnesses are sufficient for every n < 3.3e24.
  for (std::uint64_t w : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(w, d, m);
    if (x == 1 || x == m - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mul_mod(x, x, m);
      if (x == m - 1) { composite = false; break; }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t s, const SieveTables* sieve) {
  if (s < 1) throw InvalidArgument("prime_factors requires s >= 1");
  std::vector<std::int64_t> primes;
  if (sieve != nullptr && sieve->contains(s)) {
    while (s > 1) {
      std::int64_t p = sieve->smallest_prime_factor(s);
      primes.push_back(p);
      while (s % p == 0) s /= p;
    }
    return primes;
  }
  for (std::int64_t p = 2; p * p <= s; p += (p == 2 ? 1 : 2)) {
    if (s % p == 0) {
      primes.push_back(p);
      while (s % p == 0) s /= p;
    }
  }
  if (s > 1) primes.push_back(s);
  return primes;
}

void squarefree_divisors_into(std::int64_t s, const SieveTables* sieve, std::vector<SignedDivisor>& out) {
  if (s < 1) throw InvalidArgument("squarefree_divisors requires s >= 1");
  out.clear();
  out.push_back({1, 1});
  auto add_prime = [&](std::int64_t p) {
    std::size_t count = out.size();
    for (std::size_t i = 0; i < count; ++i) out.push_back({out[i].d * p, -out[i].mu});
  };
  if (sieve != nullptr && sieve->contains(s)) {
    while (s > 1) {
      std::int64_t p = sieve->smallest_prime_factor(s);
      add_prime(p);
      while (s % p == 0) s /= p;
    }
  } else {
    for (std::int64_t p : prime_factors(s)) add_prime(p);
  }
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.d < r.d; });
}

std::vector<SignedDivisor> squarefree_divisors(std::int64_t s, const SieveTables* sieve) {
  std::vector<SignedDivisor> divisors;
  squarefree_divisors_into(s, sieve, divisors);
  return divisors;
}

std::int64_t legendre_totient(const Rational& x, std::int64_t modulus, const SieveTables* sieve) {
  if (x < Rational(0)) throw InvalidArgument("legendre_totient requires x >= 0");
  if (modulus < 1) throw InvalidArgument("legendre_totient requires N >= 1");
  return legendre_totient(x, squarefree_divisors(modulus, sieve));
}

std::int64_t legendre_totient(const Rational& x, std::span<const SignedDivisor> divisors_of_modulus) {
  if (x < Rational(0)) throw InvalidArgument("legendre_totient requires x >= 0");
  std::int64_t total = 0;
  for (const auto& [d, mu] : divisors_of_modulus) {
    // floor(x / d) = floor(num / (den * d))
    total += mu * (x.num() / detail::checked_mul(x.den(), d));
  }
  return total;
}

std::int64_t legendre_totient_enumerate(const Rational& x, std::int64_t modulus) {
  if (x < Rational(0)) throw InvalidArgument("legendre_totient requires x >= 0");
  std::int64_t count = 0;
  for (std::int64_t k = 1, top = x.floor(); k <= top; ++k) {
    if (gcd(k, modulus) == 1) ++count;
  }
  return count;
}

}  // namespace parallelo
