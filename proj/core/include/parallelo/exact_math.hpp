#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "parallelo/rational.hpp"

namespace parallelo {

class SieveTables;

/// gcd of |a| and |b|; gcd(x, 0) = |x| and gcd(0, 0) = 0.
std::int64_t gcd(std::int64_t a, std::int64_t b);

struct ExtendedGcd {
  std::int64_t g;
  std::int64_t x;
  std::int64_t y;
};

/// Bezout coefficients with a*x + b*y = g = gcd(a, b) > 0. Rejects (0, 0).
ExtendedGcd egcd(std::int64_t a, std::int64_t b);

/// Inverse of a modulo n in [1, n). Throws InvalidArgument when gcd(a, n) != 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t n);

/// Floor and ceiling of p/q for q >= 1, correct for negative p.
std::int64_t floor_div(std::int64_t p, std::int64_t q);
std::int64_t ceil_div(std::int64_t p, std::int64_t q);

/// Fractional part r - floor(r), in [0, 1).
Rational frac(const Rational& r);

/// Deterministic primality for the full int64 range (Miller-Rabin with a
/// fixed witness set).
bool is_prime(std::int64_t n);

struct SignedDivisor {
  std::int64_t d;
  int mu;

  friend bool operator==(const SignedDivisor&, const SignedDivisor&) = default;
};

/// Squarefree divisors of s with their Moebius values, ascending in d.
/// Uses the sieve's prime table when s is within its limit.
std::vector<SignedDivisor> squarefree_divisors(std::int64_t s, const SieveTables* sieve = nullptr);

/// Non-allocating form: replaces the contents of `out`, reusing its capacity.
void squarefree_divisors_into(std::int64_t s, const SieveTables* sieve, std::vector<SignedDivisor>& out);

/// Distinct prime factors of s, ascending.
std::vector<std::int64_t> prime_factors(std::int64_t s, const SieveTables* sieve = nullptr);

/// Legendre totient phi(x, N): positive integers <= x coprime to N, evaluated
/// as sum over d | N of floor(x/d) * mu(d).
std::int64_t legendre_totient(const Rational& x, std::int64_t modulus, const SieveTables* sieve = nullptr);

/// As above with the squarefree divisors of N already enumerated.
std::int64_t legendre_totient(const Rational& x, std::span<const SignedDivisor> divisors_of_modulus);

/// Same count by walking 1..floor(x). Test oracle; O(x).
std::int64_t legendre_totient_enumerate(const Rational& x, std::int64_t modulus);

}  // namespace parallelo
