#include "parallelo/experiments.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <mutex>

#include "parallelo/exact_math.hpp"
#include "parallelo/parallel.hpp"
#include "parallelo/sieve.hpp"

namespace parallelo {

ProfileRecord make_record(const CountBreakdown& b) {
  Rational ratio = b.ratio();
  return {b.canonical.n(), b.canonical.a(), b.v, ratio, ratio.to_double()};
}

std::vector<ProfileRecord> profile(std::int64_t n, CountMethod method, unsigned threads) {
  if (n < 2) throw InvalidArgument("profile requires n >= 2");
  std::vector<std::int64_t> as;
  for (std::int64_t a = 1; a < n; ++a) {
    if (gcd(a, n) == 1) as.push_back(a);
  }
  std::vector<std::optional<ProfileRecord>> slots(as.size());
  auto sieve = method == CountMethod::Formula ? shared_sieves(std::min(n, kDefaultSieveMax)) : nullptr;
  parallel_for(as.size(), threads, [&](std::size_t i) {
    slots[i] = make_record(count(CanonicalParallelogram(as[i], n), method, sieve.get()));
  });
  std::vector<ProfileRecord> records;
  records.reserve(slots.size());
  for (auto& r : slots) records.push_back(*r);
  return records;
}

bool within_conjectured_bounds(const Rational& ratio) { return Rational(1, 2) < ratio && ratio < Rational(3, 4); }

namespace {

void take_min(std::optional<RatioWitness>& best, const RatioWitness& w) {
  if (!best || w.ratio < best->ratio) best = w;
}

void take_max(std::optional<RatioWitness>& best, const RatioWitness& w) {
  if (!best || w.ratio > best->ratio) best = w;
}

}  // namespace

ScanRow scan_single(std::int64_t n, CountMethod method) {
  ScanRow row{n, 0, std::nullopt, std::nullopt, {}};
  for (std::int64_t a = 2; a <= n - 2; ++a) {
    if (gcd(a, n) != 1) continue;
    ProfileRecord rec = make_record(count(CanonicalParallelogram(a, n), method));
    ++row.admissible;
    RatioWitness w{rec.ratio, a, n};
    take_min(row.min, w);
    take_max(row.max, w);
    if (!within_conjectured_bounds(rec.ratio)) row.violations.push_back(rec);
  }
  return row;
}

ScanReport conjecture_scan(std::int64_t n_min, std::int64_t n_max, const ScanOptions& options) {
  if (n_min < 2 || n_min > n_max) throw InvalidArgument("scan range requires 2 <= n_min <= n_max");
  ScanReport report{n_min, n_max, "a in {1, n-1}", 0, std::nullopt, std::nullopt, {}, {}};
  const auto total = static_cast<std::size_t>(n_max - n_min + 1);
  std::vector<std::optional<ScanRow>> slots(total);
  std::mutex progress_mutex;
  std::size_t done = 0;
  // Largest n first so the expensive rows start early; slots keep n order.
  parallel_for(total, options.threads, [&](std::size_t i) {
    std::size_t slot = total - 1 - i;
    slots[slot] = scan_single(n_min + static_cast<std::int64_t>(slot), options.method);
    if (options.progress) {
      std::lock_guard lock(progress_mutex);
      options.progress(++done, total);
    }
  });
  report.rows.reserve(total);
  for (auto& slot : slots) {
    ScanRow& row = *slot;
    report.admissible += row.admissible;
    if (row.min) take_min(report.min, *row.min);
    if (row.max) take_max(report.max, *row.max);
    report.violations.insert(report.violations.end(), row.violations.begin(), row.violations.end());
    report.rows.push_back(std::move(row));
  }
  return report;
}

// ---------------------------------------------------------------------------
// rho

RhoSpec RhoSpec::golden() {
  RhoSpec r;
  r.label_ = "golden";
  r.partial_quotient_ = [](int) -> std::int64_t { return 1; };
  return r;
}

RhoSpec RhoSpec::silver() {
  RhoSpec r;
  r.label_ = "silver";
  r.partial_quotient_ = [](int) -> std::int64_t { return 2; };
  return r;
}

RhoSpec RhoSpec::e_minus_two() {
  RhoSpec r;
  r.label_ = "e-2";
  r.partial_quotient_ = [](int i) -> std::int64_t { return i % 3 == 2 ? 2 * (i + 1) / 3 : 1; };
  return r;
}

RhoSpec RhoSpec::named(const std::string& name) {
  if (name == "golden") return golden();
  if (name == "silver") return silver();
  if (name == "e-2" || name == "e_minus_2") return e_minus_two();
  throw InvalidArgument("unknown rho constant '" + name + "' (expected golden, silver, e-2)");
}

RhoSpec RhoSpec::rational(const Rational& value) {
  if (value <= Rational(0) || value >= Rational(1)) throw InvalidArgument("rho must lie in (0,1)");
  RhoSpec r;
  r.label_ = value.str();
  r.proxy_ = value;
  return r;
}

RhoSpec RhoSpec::parse_value(const std::string& text) {
  auto parse_int = [&](const std::string& s) -> std::int64_t {
    if (s.empty() || s.size() > 18 || !std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isdigit(ch); })) {
      throw InvalidArgument("cannot parse rho value '" + text + "'");
    }
    return std::stoll(s);
  };
  if (auto slash = text.find('/'); slash != std::string::npos) {
    std::int64_t den = parse_int(text.substr(slash + 1));
    if (den == 0) throw InvalidArgument("rho denominator must be nonzero");
    return rational(Rational(parse_int(text.substr(0, slash)), den));
  }
  if (auto dot = text.find('.'); dot != std::string::npos) {
    std::string whole = text.substr(0, dot), digits = text.substr(dot + 1);
    if (whole.empty()) whole = "0";
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < digits.size(); ++i) scale = detail::checked_mul(scale, 10);
    std::int64_t frac_part = digits.empty() ? 0 : parse_int(digits);
    return rational(Rational(parse_int(whole)) + Rational(frac_part, scale));
  }
  return rational(Rational(parse_int(text)));
}

double RhoSpec::approx() const {
  if (proxy_) return proxy_->to_double();
  // Evaluate a short continued fraction from the tail.
  double x = 0.0;
  for (int i = 40; i >= 1; --i) x = 1.0 / (static_cast<double>(partial_quotient_(i)) + x);
  return x;
}

std::int64_t RhoSpec::ceil_times(std::int64_t n) const {
  if (n < 1) throw InvalidArgument("n must be positive");
  if (proxy_) return ceil_div(detail::checked_mul(proxy_->num(), n), proxy_->den());
  // Convergents alternate around rho: even index below, odd above. Once the
  // open interval (n*lo, n*hi) holds at most one integer boundary, ceil(rho*n)
  // is fixed.
  using i128 = __int128;
  i128 h_prev = 1, k_prev = 0;  // index -1
  i128 h = 0, k = 1;            // index 0: 0/1
  for (int i = 1; i < 200; ++i) {
    i128 q = partial_quotient_(i);
    i128 h_next = q * h + h_prev, k_next = q * k + k_prev;
    h_prev = h; k_prev = k;
    h = h_next; k = k_next;
    if (k > (i128{1} << 62)) break;
    bool odd = (i % 2) == 1;
    i128 lo_h = odd ? h_prev : h, lo_k = odd ? k_prev : k;
    i128 hi_h = odd ? h : h_prev, hi_k = odd ? k : k_prev;
    i128 m = (lo_h * n) / lo_k + 1;  // smallest integer > n*lo
    if (m * hi_k >= hi_h * n) return static_cast<std::int64_t>(m);
  }
  throw OverflowError("continued fraction convergents exhausted before ceil(rho*n) was determined");
}

std::vector<RhoRecord> rho_sequence(const RhoSpec& rho, std::span<const std::int64_t> n_values, CoprimePolicy policy,
                                    unsigned threads) {
  std::vector<RhoRecord> records(n_values.size());
  parallel_for(n_values.size(), threads, [&](std::size_t i) {
    const std::int64_t n = n_values[i];
    RhoRecord rec{n, 0, false, {}, std::nullopt, std::nullopt, std::numeric_limits<double>::quiet_NaN()};
    if (n < 2) {
      rec.skipped = true;
      rec.reason = "n < 2";
      records[i] = rec;
      return;
    }
    rec.a = rho.ceil_times(n);
    if (std::int64_t g = gcd(rec.a, n); g != 1) {
      const std::string why = "gcd(" + std::to_string(rec.a) + "," + std::to_string(n) + ")=" + std::to_string(g);
      if (policy == CoprimePolicy::Skip) {
        rec.skipped = true;
        rec.reason = why;
      } else {
        std::optional<std::int64_t> found;
        for (std::int64_t d = 1; !found && (rec.a - d >= 2 || rec.a + d <= n - 2); ++d) {
          if (rec.a - d >= 2 && rec.a - d <= n - 2 && gcd(rec.a - d, n) == 1) found = rec.a - d;
          else if (rec.a + d >= 2 && rec.a + d <= n - 2 && gcd(rec.a + d, n) == 1) found = rec.a + d;
        }
        if (found) {
          rec.reason = why + "; replaced by nearest coprime " + std::to_string(*found);
          rec.a = *found;
        } else {
          rec.skipped = true;
          rec.reason = why + "; no coprime a in [2, n-2]";
        }
      }
    }
    if (!rec.skipped) {
      auto b = count_direct(CanonicalParallelogram(rec.a, n));
      rec.v = b.v;
      rec.ratio = b.ratio();
      rec.deviation = std::abs(rec.ratio->to_double() - kCoprimeDensity);
    }
    records[i] = rec;
  });
  return records;
}

std::optional<double> median_deviation(std::span<const RhoRecord> records) {
  std::vector<double> devs;
  for (const auto& r : records) {
    if (!r.skipped) devs.push_back(r.deviation);
  }
  if (devs.empty()) return std::nullopt;
  std::sort(devs.begin(), devs.end());
  std::size_t mid = devs.size() / 2;
  return devs.size() % 2 == 1 ? devs[mid] : (devs[mid - 1] + devs[mid]) / 2.0;
}

BigRational phi_mean(std::int64_t a) {
  if (a < 1) throw InvalidArgument("phi_mean requires a >= 1");
  std::shared_ptr<const SieveTables> sieve;
  if (a <= kDefaultSieveMax) sieve = shared_sieves(a);
  mpz_class primorial, cofactor, total = 0;
  mpz_primorial_ui(primorial.get_mpz_t(), static_cast<unsigned long>(a));
  for (std::int64_t s = 1; s <= a; ++s) {
    std::int64_t phi = s;
    if (sieve) {
      phi = sieve->phi(s);
    } else {
      for (std::int64_t p : prime_factors(s)) phi = phi / p * (p - 1);
    }
    // phi(s)/s in lowest terms has a squarefree denominator dividing the primorial.
    std::int64_t g = gcd(phi, s);
    mpz_divexact_ui(cofactor.get_mpz_t(), primorial.get_mpz_t(), static_cast<unsigned long>(s / g));
    total += cofactor * static_cast<long>(phi / g);
  }
  return BigRational(total, primorial * static_cast<long>(a));
}

DensityResult square_density(std::int64_t r) {
  if (r < 1) throw InvalidArgument("square_density requires r >= 1");
  std::int64_t visible = 0;
  for (std::int64_t x = -r; x <= r; ++x) {
    for (std::int64_t y = -r; y <= r; ++y) {
      if (is_visible({x, y})) ++visible;
    }
  }
  std::int64_t side = 2 * r + 1;
  std::int64_t total = side * side;
  return {visible, total, static_cast<double>(visible) / static_cast<double>(total)};
}

double discrepancy(const CanonicalParallelogram& c, std::int64_t q) {
  const std::int64_t a = c.a();
  if (q < 1 || q > a) throw InvalidArgument("discrepancy requires 1 <= q <= a");
  // Sample k is frac(k*n/a) = residue/a with residue = k*n mod a.
  std::vector<std::int64_t> residues;
  residues.reserve(static_cast<std::size_t>(q));
  for (std::int64_t k = 1; k <= q; ++k) residues.push_back(static_cast<std::int64_t>((static_cast<__int128>(k) * c.n()) % a));
  std::sort(residues.begin(), residues.end());
  // |r/a - j/q| = |r*q - j*a| / (a*q); keep the largest numerator exactly.
  __int128 worst = 0;
  for (std::int64_t i = 1; i <= q; ++i) {
    __int128 rq = static_cast<__int128>(residues[static_cast<std::size_t>(i - 1)]) * q;
    __int128 below = rq - static_cast<__int128>(i - 1) * a;
    __int128 above = rq - static_cast<__int128>(i) * a;
    worst = std::max({worst, below < 0 ? -below : below, above < 0 ? -above : above});
  }
  return static_cast<double>(worst) / (static_cast<double>(a) * static_cast<double>(q));
}

std::vector<std::int64_t> n_range(std::int64_t lo, std::int64_t hi, std::int64_t step, bool primes_only) {
  if (step < 1) throw InvalidArgument("step must be >= 1");
  std::vector<std::int64_t> values;
  for (std::int64_t n = lo; n <= hi; n += step) {
    if (!primes_only || is_prime(n)) values.push_back(n);
  }
  return values;
}

}  // namespace parallelo
