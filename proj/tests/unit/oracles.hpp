#pragma once

// Brute-force references for the unit tests. Nothing here calls into the
// library's counting code; each function recomputes its quantity from the
// definition.

#include <algorithm>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace oracle {

inline std::int64_t euclid_gcd(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline int mobius(std::int64_t m) {
  int mu = 1;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    m /= p;
    if (m % p == 0) return 0;
    mu = -mu;
  }
  if (m > 1) mu = -mu;
  return mu;
}

inline std::int64_t phi(std::int64_t m) {
  std::int64_t count = 0;
  for (std::int64_t k = 1; k <= m; ++k) count += euclid_gcd(k, m) == 1 ? 1 : 0;
  return count;
}

struct Point {
  std::int64_t x, y;
  bool operator==(const Point&) const = default;
};

/// Interior lattice points of {t1*u + t2*v : 0 < t1, t2 < 1}, solving for
/// (t1, t2) with exact rationals over the bounding box.
inline std::vector<Point> interior(Point u, Point v) {
  std::vector<Point> out;
  mpq_class det = mpq_class(u.x) * v.y - mpq_class(u.y) * v.x;
  if (det == 0) return out;
  std::int64_t xs[] = {0, u.x, v.x, u.x + v.x}, ys[] = {0, u.y, v.y, u.y + v.y};
  std::int64_t x0 = xs[0], x1 = xs[0], y0 = ys[0], y1 = ys[0];
  for (int i = 1; i < 4; ++i) {
    x0 = std::min(x0, xs[i]); x1 = std::max(x1, xs[i]);
    y0 = std::min(y0, ys[i]); y1 = std::max(y1, ys[i]);
  }
  for (std::int64_t x = x0; x <= x1; ++x) {
    for (std::int64_t y = y0; y <= y1; ++y) {
      mpq_class t1 = (mpq_class(x) * v.y - mpq_class(y) * v.x) / det;
      mpq_class t2 = (mpq_class(u.x) * y - mpq_class(u.y) * x) / det;
      if (t1 > 0 && t1 < 1 && t2 > 0 && t2 < 1) out.push_back({x, y});
    }
  }
  return out;
}

inline std::int64_t visible_interior(Point u, Point v) {
  std::int64_t count = 0;
  for (const auto& p : interior(u, v)) count += euclid_gcd(p.x, p.y) == 1 ? 1 : 0;
  return count;
}

inline std::int64_t visible_count(std::int64_t a, std::int64_t n) { return visible_interior({1, 0}, {a, n}); }

inline mpq_class frac(const mpq_class& x) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return x - fl;
}

/// (1/a) sum_{s<=a} phi(s)/s
inline mpq_class main_term(std::int64_t a) {
  mpq_class total = 0;
  for (std::int64_t s = 1; s <= a; ++s) total += mpq_class(phi(s), s);
  total /= a;
  total.canonicalize();
  return total;
}

/// sum_s sum_{d|s} (<(s-1)n/ad> - <sn/ad>) mu(d), term by term.
inline mpq_class double_sum(std::int64_t a, std::int64_t n) {
  mpq_class total = 0;
  for (std::int64_t s = 1; s <= a; ++s) {
    for (std::int64_t d = 1; d <= s; ++d) {
      if (s % d != 0) continue;
      int mu = mobius(d);
      if (mu == 0) continue;
      mpq_class lo((s - 1) * n, a * d), hi(s * n, a * d);
      lo.canonicalize();
      hi.canonicalize();
      total += mu * (frac(lo) - frac(hi));
    }
  }
  return total;
}

/// sup over t of |#{x_i < t}/q - t|, evaluated at the sample points.
inline mpq_class star_discrepancy(std::vector<mpq_class> xs) {
  std::sort(xs.begin(), xs.end());
  const auto q = static_cast<long>(xs.size());
  mpq_class worst = 0;
  for (long i = 0; i < q; ++i) {
    mpq_class below = abs(xs[i] - mpq_class(i, q));
    mpq_class above = abs(xs[i] - mpq_class(i + 1, q));
    below.canonicalize();
    above.canonicalize();
    worst = std::max({worst, below, above});
  }
  return worst;
}

}  // namespace oracle
