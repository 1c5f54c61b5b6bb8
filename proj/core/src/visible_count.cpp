#include "parallelo/visible_count.hpp"

#include <algorithm>
#include <string>

#include "parallelo/exact_math.hpp"

namespace parallelo {

namespace {

void require_countable(const CanonicalParallelogram& c) {
  if (c.n() > kMaxCountN) throw OverflowError("n exceeds the int64 counting limit " + std::to_string(kMaxCountN));
}

const SieveTables* sieve_for(std::int64_t limit, const SieveTables* given,
                             std::shared_ptr<const SieveTables>& holder) {
  if (given != nullptr && given->limit() >= limit) return given;
  if (limit > kDefaultSieveMax) return given;  // trial division fallback
  holder = shared_sieves(limit);
  return holder.get();
}

}  // namespace

std::string_view to_string(CountMethod m) {
  switch (m) {
    case CountMethod::Direct: return "direct";
    case CountMethod::Formula: return "formula";
    case CountMethod::ClosedForm: return "closed_form";
  }
  return "unknown";
}

CountBreakdown count_direct(const CanonicalParallelogram& c) {
  require_countable(c);
  const std::int64_t a = c.a(), n = c.n();
  std::int64_t v = 0;
  // ceil(k*a/n) advances incrementally: keep k*a = q*n - r with 0 <= r < n.
  std::int64_t q = 0, r = 0;
  for (std::int64_t k = 1; k < n; ++k) {
    r -= a;
    while (r < 0) {
      r += n;
      ++q;
    }
    if (gcd(q, k) == 1) ++v;
  }
  return {c, v, CountMethod::Direct, std::nullopt};
}

namespace {

std::int64_t column_with_buffer(std::int64_t s, const CanonicalParallelogram& c, const SieveTables* sieve,
                                std::vector<SignedDivisor>& divisors) {
  squarefree_divisors_into(s, sieve, divisors);
  return legendre_totient(Rational(s * c.n(), c.a()), divisors) -
         legendre_totient(Rational((s - 1) * c.n(), c.a()), divisors);
}

}  // namespace

std::int64_t count_column(std::int64_t s, const CanonicalParallelogram& c, const SieveTables* sieve) {
  if (s < 1 || s > c.a()) throw InvalidArgument("column index s must satisfy 1 <= s <= a");
  require_countable(c);
  std::vector<SignedDivisor> divisors;
  return column_with_buffer(s, c, sieve, divisors);
}

CountBreakdown count_formula(const CanonicalParallelogram& c, bool keep_columns, const SieveTables* sieve) {
  require_countable(c);
  std::shared_ptr<const SieveTables> holder;
  const SieveTables* tables = sieve_for(c.a(), sieve, holder);
  std::vector<std::int64_t> columns;
  if (keep_columns) columns.reserve(static_cast<std::size_t>(c.a()));
  std::int64_t total = 0;
  std::vector<SignedDivisor> divisors;
  for (std::int64_t s = 1; s <= c.a(); ++s) {
    std::int64_t col = column_with_buffer(s, c, tables, divisors);
    total += col;
    if (keep_columns) columns.push_back(col);
  }
  CountBreakdown out{c, total - 1, CountMethod::Formula, std::nullopt};
  if (keep_columns) out.columns = std::move(columns);
  return out;
}

MobiusRatio count_mobius_ratio(const CanonicalParallelogram& c, const SieveTables* sieve) {
  require_countable(c);
  const std::int64_t a = c.a(), n = c.n();
  if (a > kMaxMobiusA) throw InvalidArgument("a exceeds the Moebius ratio limit " + std::to_string(kMaxMobiusA));
  (void)detail::checked_mul(a, n);  // bounds every (s-1)*n below
  std::shared_ptr<const SieveTables> holder;
  const SieveTables* tables = sieve_for(a, sieve, holder);

  // Everything is accumulated over the common denominator a * P, with P the
  // product of primes <= a: phi(s)/s = phi(rad s)/rad s, and each term of the
  // double sum has denominator a*d with d squarefree <= a.
  //
  // Per squarefree r <= a:
  //   phi_weight[r] = #{s <= a : rad(s) = r}          (main term)
  //   residue_sum[r] = sum_{t <= a/r} (((tr-1)n mod ar) - (trn mod ar))  (double sum, d = r)
  std::vector<std::int64_t> rad_count(static_cast<std::size_t>(a) + 1, 0);
  std::vector<std::int64_t> rad_phi(static_cast<std::size_t>(a) + 1, 0);
  std::vector<int> rad_mu(static_cast<std::size_t>(a) + 1, 0);
  for (std::int64_t s = 1; s <= a; ++s) {
    std::int64_t rad = 1, phi_rad = 1;
    int mu = 1;
    auto take = [&](std::int64_t p) {
      rad *= p;
      phi_rad *= p - 1;
      mu = -mu;
    };
    if (tables != nullptr && tables->contains(s)) {
      for (std::int64_t rest = s; rest > 1;) {
        std::int64_t p = tables->smallest_prime_factor(rest);
        take(p);
        while (rest % p == 0) rest /= p;
      }
    } else {
      for (std::int64_t p : prime_factors(s)) take(p);
    }
    ++rad_count[rad];
    rad_phi[rad] = phi_rad;
    if (rad == s) rad_mu[s] = mu;
  }

  struct Term {
    long main_coeff;
    long double_coeff;
    unsigned long d;
  };
  std::vector<Term> terms;
  std::int64_t bound = 0;
  for (std::int64_t d = 1; d <= a; ++d) {
    if (rad_mu[d] == 0) continue;
    const std::int64_t modulus = a * d;
    std::int64_t residue_sum = 0;
    for (std::int64_t s = d; s <= a; s += d) {
      residue_sum += ((s - 1) * n) % modulus - (s * n) % modulus;
    }
    bound += a / d;
    terms.push_back({static_cast<long>(rad_count[d] * rad_phi[d]), static_cast<long>(rad_mu[d] * residue_sum),
                     static_cast<unsigned long>(d)});
  }

  // sum_i coeff_i / d_i by binary splitting over the unreduced product of the
  // d_i; far fewer big-number operations than one division per term.
  struct Partial {
    mpz_class main_num, double_num, den;
  };
  auto split = [&](auto&& self, std::size_t lo, std::size_t hi) -> Partial {
    if (hi - lo == 1) {
      const Term& t = terms[lo];
      return {mpz_class(t.main_coeff), mpz_class(t.double_coeff), mpz_class(t.d)};
    }
    std::size_t mid = lo + (hi - lo) / 2;
    Partial l = self(self, lo, mid), r = self(self, mid, hi);
    return {l.main_num * r.den + r.main_num * l.den, l.double_num * r.den + r.double_num * l.den, l.den * r.den};
  };
  Partial sum = split(split, 0, terms.size());

  // Rescale to the common denominator a * P, P = product of primes <= a, which
  // every squarefree d <= a divides.
  mpz_class primorial;
  mpz_primorial_ui(primorial.get_mpz_t(), static_cast<unsigned long>(a));
  mpz_class main_num, double_num;
  mpz_mul(main_num.get_mpz_t(), sum.main_num.get_mpz_t(), primorial.get_mpz_t());
  mpz_divexact(main_num.get_mpz_t(), main_num.get_mpz_t(), sum.den.get_mpz_t());
  mpz_mul(double_num.get_mpz_t(), sum.double_num.get_mpz_t(), primorial.get_mpz_t());
  mpz_divexact(double_num.get_mpz_t(), double_num.get_mpz_t(), sum.den.get_mpz_t());

  const mpz_class common = primorial * static_cast<long>(a);
  ErrorTermReport report{c, BigRational(main_num, common), BigRational(double_num, common), bound};
  // V/n = main + (double_sum - 1)/n, over denominator n*a*P.
  BigRational ratio(main_num * static_cast<long>(n) + double_num - common, common * static_cast<long>(n));
  return {ratio.to_rational(), std::move(report)};
}

std::int64_t closed_form_a_two(std::int64_t n) {
  if (n < 3 || n % 2 == 0) throw InvalidArgument("closed form for a=2 requires odd n >= 3");
  return n % 4 == 1 ? (3 * n - 3) / 4 : (3 * n - 5) / 4;
}

std::int64_t closed_form_a_n_minus_two(std::int64_t n) {
  if (n < 3 || n % 2 == 0) throw InvalidArgument("closed form for a=n-2 requires odd n >= 3");
  return (n + 1) / 2;
}

std::optional<std::int64_t> closed_form_special(const CanonicalParallelogram& c) {
  const std::int64_t a = c.a(), n = c.n();
  if (a == 1) return n - 1;
  if (a == n - 1) return 1;
  if (n % 2 == 1) {
    if (a == 2 || a == (n + 1) / 2) return closed_form_a_two(n);
    if (a == (n - 1) / 2 || a == n - 2) return closed_form_a_n_minus_two(n);
  }
  return std::nullopt;
}

CountBreakdown count_auto(const CanonicalParallelogram& c) {
  if (auto v = closed_form_special(c)) return {c, *v, CountMethod::ClosedForm, std::nullopt};
  return count_direct(c);
}

CountBreakdown count(const CanonicalParallelogram& c, CountMethod method, const SieveTables* sieve) {
  switch (method) {
    case CountMethod::Direct: return count_direct(c);
    case CountMethod::Formula: return count_formula(c, false, sieve);
    case CountMethod::ClosedForm: return count_auto(c);
  }
  return count_direct(c);
}

CanonicalParallelogram inverse_partner(const CanonicalParallelogram& c) {
  return {mod_inverse(c.a(), c.n()), c.n()};
}

GcdIdentityValues gcd_identity_values(const CanonicalParallelogram& c, std::int64_t k) {
  const std::int64_t a = c.a(), n = c.n();
  if (k < 1 || k >= n) throw InvalidArgument("k must satisfy 1 <= k <= n-1");
  const std::int64_t ceil_complement = ceil_div(detail::checked_mul(k, n - a), n);
  const std::int64_t floor_ka = floor_div(detail::checked_mul(k, a), n);
  GcdIdentityValues values{gcd(ceil_complement, k), gcd(ceil_complement, floor_ka), gcd(floor_ka, k), std::nullopt};
  if (is_prime(n)) values.residue_vs_k = gcd((k * a) % n, k);
  return values;
}

bool gcd_identity_check(const CanonicalParallelogram& c, std::int64_t k) {
  auto v = gcd_identity_values(c, k);
  bool same = v.ceil_complement_vs_k == v.ceil_complement_vs_floor && v.ceil_complement_vs_floor == v.floor_vs_k;
  if (v.residue_vs_k) same = same && *v.residue_vs_k == v.floor_vs_k;
  return same;
}

std::optional<Rational> parity_upper_bound(const CanonicalParallelogram& c) {
  const std::int64_t a = c.a();
  const std::int64_t cols = ceil_div(c.n(), a);
  if (a <= 1 || a % 2 != 0 || cols % 2 != 0) return std::nullopt;
  return Rational(3, 4) * Rational(detail::checked_mul(a, cols));
}

}  // namespace parallelo
