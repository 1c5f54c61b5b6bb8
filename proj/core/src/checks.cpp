#include "parallelo/checks.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "parallelo/exact_math.hpp"
#include "parallelo/experiments.hpp"
#include "parallelo/sieve.hpp"
#include "parallelo/visible_count.hpp"

namespace parallelo {

std::vector<LatticePoint> brute_force_interior(const LatticePoint& u, const LatticePoint& v) {
  std::int64_t det = cross(u, v);
  std::vector<LatticePoint> points;
  if (det == 0) return points;
  const std::int64_t sign = det > 0 ? 1 : -1;
  const std::int64_t area = det * sign;
  const std::int64_t xs[] = {0, u.x, v.x, u.x + v.x};
  const std::int64_t ys[] = {0, u.y, v.y, u.y + v.y};
  auto [x0, x1] = std::minmax_element(std::begin(xs), std::end(xs));
  auto [y0, y1] = std::minmax_element(std::begin(ys), std::end(ys));
  for (std::int64_t x = *x0; x <= *x1; ++x) {
    for (std::int64_t y = *y0; y <= *y1; ++y) {
      // p = t1*u + t2*v with t1 = det(p,v)/det, t2 = det(u,p)/det.
      LatticePoint p{x, y};
      std::int64_t t1 = cross(p, v) * sign;
      std::int64_t t2 = cross(u, p) * sign;
      if (t1 > 0 && t1 < area && t2 > 0 && t2 < area) points.push_back(p);
    }
  }
  return points;
}

std::int64_t brute_force_visible(const LatticePoint& u, const LatticePoint& v) {
  auto pts = brute_force_interior(u, v);
  return std::count_if(pts.begin(), pts.end(), [](const LatticePoint& p) { return is_visible(p); });
}

namespace {

std::string pair_text(std::int64_t a, std::int64_t n) {
  return "(a=" + std::to_string(a) + ", n=" + std::to_string(n) + ")";
}

template <typename Fn>
void for_each_canonical(std::int64_t n_lo, std::int64_t n_hi, Fn&& fn) {
  for (std::int64_t n = n_lo; n <= n_hi; ++n) {
    for (std::int64_t a = 1; a < n; ++a) {
      if (gcd(a, n) == 1) fn(CanonicalParallelogram(a, n));
    }
  }
}

// Throws a string describing the first counterexample; the runner converts it.
struct Failure {
  std::string detail;
};

void expect(bool ok, const std::string& detail) {
  if (!ok) throw Failure{detail};
}

std::vector<CanonicalParallelogram> random_pairs(std::size_t count, std::int64_t n_max, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> pick_n(2, n_max);
  std::vector<CanonicalParallelogram> out;
  while (out.size() < count) {
    std::int64_t n = pick_n(rng);
    std::uniform_int_distribution<std::int64_t> pick_a(1, n - 1);
    std::int64_t a = pick_a(rng);
    if (gcd(a, n) == 1) out.emplace_back(a, n);
  }
  return out;
}

struct Scale {
  std::int64_t sieve_limit;
  std::int64_t totient_x;
  std::int64_t totient_n;
  std::int64_t interior_n;
  std::int64_t small_n;    // 300-range properties
  std::int64_t random_n;   // random oracle pairs
  std::size_t random_count;
  std::size_t basis_count;
  std::int64_t symmetry_n;
  std::int64_t closed_n;
  std::int64_t scan_n;
};

constexpr Scale kFull{10'000, 500, 100, 200, 300, 100'000, 500, 1000, 500, 1001, 1000};
constexpr Scale kQuick{1'000, 100, 30, 100, 100, 10'000, 50, 200, 100, 101, 100};

}  // namespace

std::vector<CheckResult> run_invariant_checks(const CheckOptions& options) {
  const Scale& sc = options.quick ? kQuick : kFull;
  auto formula_count = options.formula_count;
  if (!formula_count) formula_count = [](const CanonicalParallelogram& c) { return count_formula(c, false).v; };
  auto sieve = shared_sieves(std::max<std::int64_t>(sc.sieve_limit, sc.random_n));

  std::vector<CheckResult> results;
  auto run = [&](const std::string& name, auto&& body) {
    CheckResult r{name, true, {}};
    try {
      r.detail = body();
    } catch (const Failure& f) {
      r.passed = false;
      r.detail = f.detail;
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    if (options.on_result) options.on_result(r);
    results.push_back(std::move(r));
  };

  // exact_math -------------------------------------------------------------
  run("phi divisor-sum identity", [&] {
    for (std::int64_t m = 1; m <= sc.sieve_limit; ++m) {
      std::int64_t phi = 0, mu_sum = 0;
      for (std::int64_t d = 1; d <= m; ++d) {
        if (m % d != 0) continue;
        phi += (m / d) * sieve->mobius(d);
        mu_sum += sieve->mobius(d);
      }
      expect(phi == sieve->phi(m), "phi mismatch at m=" + std::to_string(m));
      expect(mu_sum == (m == 1 ? 1 : 0), "mobius divisor sum nonzero at m=" + std::to_string(m));
    }
    return "m <= " + std::to_string(sc.sieve_limit);
  });

  run("legendre totient diagonal", [&] {
    for (std::int64_t m = 1; m <= sc.sieve_limit; ++m) {
      expect(legendre_totient(Rational(m), m, sieve.get()) == sieve->phi(m), "m=" + std::to_string(m));
    }
    return "m <= " + std::to_string(sc.sieve_limit);
  });

  run("legendre totient enumeration", [&] {
    for (std::int64_t modulus = 1; modulus <= sc.totient_n; ++modulus) {
      for (std::int64_t x = 0; x <= sc.totient_x; ++x) {
        for (std::int64_t den : {1, 3, 7}) {
          Rational r(x, den);
          expect(legendre_totient(r, modulus, sieve.get()) == legendre_totient_enumerate(r, modulus),
                 "x=" + r.str() + " N=" + std::to_string(modulus));
        }
      }
    }
    return "x <= " + std::to_string(sc.totient_x) + ", N <= " + std::to_string(sc.totient_n);
  });

  run("fractional part reflection", [&] {
    for (std::int64_t den = 1; den <= 40; ++den) {
      for (std::int64_t num = -200; num <= 200; ++num) {
        Rational x(num, den);
        Rational sum = frac(x) + frac(-x);
        expect(sum == (x.is_integer() ? Rational(0) : Rational(1)), "x=" + x.str());
      }
    }
    return std::string("|num| <= 200, den <= 40");
  });

  // lattice ------------------------------------------------------------------
  run("interior point count", [&] {
    for_each_canonical(2, sc.interior_n, [&](const CanonicalParallelogram& c) {
      auto brute = brute_force_interior({1, 0}, {c.a(), c.n()});
      auto listed = interior_points(c);
      expect(static_cast<std::int64_t>(brute.size()) == c.n() - 1, "brute count " + pair_text(c.a(), c.n()));
      expect(static_cast<std::int64_t>(listed.size()) == c.n() - 1, "listed count " + pair_text(c.a(), c.n()));
      for (const auto& p : listed) {
        bool inside = std::find(brute.begin(), brute.end(), p) != brute.end();
        expect(inside, "point not strictly inside " + pair_text(c.a(), c.n()));
      }
    });
    return "n <= " + std::to_string(sc.interior_n);
  });

  run("reduction round trip", [&] {
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<std::int64_t> coord(-40, 40);
    std::size_t done = 0;
    while (done < sc.basis_count) {
      LatticePoint u{coord(rng), coord(rng)}, v{coord(rng), coord(rng)};
      std::int64_t det = cross(u, v);
      if (!is_visible(u) || !is_visible(v) || std::abs(det) < 2 || std::abs(det) > 500) continue;
      auto red = reduce_to_canonical(u, v);
      LatticePoint first = red.swapped ? v : u, second = red.swapped ? u : v;
      expect(red.map.determinant() == 1, "map determinant");
      expect(apply_map(red.map, first) == LatticePoint{1, 0}, "first basis vector not sent to (1,0)");
      expect(apply_map(red.map, second) == LatticePoint{red.canonical.a(), red.canonical.n()},
             "second basis vector not sent to (a,n)");
      expect(red.canonical.n() == std::abs(det), "n != |det|");
      ++done;
    }
    return std::to_string(done) + " random bases";
  });

  run("visibility preserved by unimodular maps", [&] {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<std::int64_t> small(-6, 6), coord(-300, 300);
    std::size_t maps = 0;
    while (maps < 200) {
      std::int64_t m11 = small(rng), m12 = small(rng), m21 = small(rng), m22 = small(rng);
      std::int64_t det = m11 * m22 - m12 * m21;
      if (det != 1 && det != -1) continue;
      UnimodularMap m(m11, m12, m21, m22);
      for (int i = 0; i < 50; ++i) {
        LatticePoint p{coord(rng), coord(rng)};
        expect(is_visible(p) == is_visible(apply_map(m, p)), "visibility changed");
      }
      ++maps;
    }
    return std::string("200 maps x 50 points");
  });

  run("extreme parallelogram visibility", [&] {
    for (std::int64_t n = 2; n <= sc.small_n; ++n) {
      auto first = interior_points(CanonicalParallelogram(1, n));
      expect(std::all_of(first.begin(), first.end(), [](const LatticePoint& p) { return is_visible(p); }),
             "P_{1,n} has a hidden point, n=" + std::to_string(n));
      auto last = interior_points(CanonicalParallelogram(n - 1, n));
      expect(std::count_if(last.begin(), last.end(), [](const LatticePoint& p) { return is_visible(p); }) == 1,
             "P_{n-1,n} visible count != 1, n=" + std::to_string(n));
    }
    return "n <= " + std::to_string(sc.small_n);
  });

  run("middle parallelogram mixed visibility", [&] {
    for_each_canonical(4, sc.small_n, [&](const CanonicalParallelogram& c) {
      if (c.a() < 2 || c.a() > c.n() - 2) return;
      auto pts = interior_points(c);
      auto visible = std::count_if(pts.begin(), pts.end(), [](const LatticePoint& p) { return is_visible(p); });
      expect(visible >= 2 && visible < static_cast<std::int64_t>(pts.size()), pair_text(c.a(), c.n()));
    });
    return "2 <= a <= n-2, n <= " + std::to_string(sc.small_n);
  });

  // visible_count --------------------------------------------------------------
  auto oracle_cases = [&] {
    std::vector<CanonicalParallelogram> cases;
    for_each_canonical(2, sc.small_n, [&](const CanonicalParallelogram& c) { cases.push_back(c); });
    auto extra = random_pairs(sc.random_count, sc.random_n, 4242);
    cases.insert(cases.end(), extra.begin(), extra.end());
    return cases;
  }();

  run("oracle equivalence", [&] {
    for (const auto& c : oracle_cases) {
      std::int64_t direct = count_direct(c).v;
      expect(formula_count(c) == direct, "formula != direct at " + pair_text(c.a(), c.n()));
    }
    return std::to_string(oracle_cases.size()) + " pairs";
  });

  run("ratio identity", [&] {
    for (const auto& c : oracle_cases) {
      auto mr = count_mobius_ratio(c, sieve.get());
      expect(mr.ratio * Rational(c.n()) == Rational(count_direct(c).v), "ratio*n != V at " + pair_text(c.a(), c.n()));
      expect(abs(mr.report.double_sum) <= BigRational(mr.report.bound), "error-term bound at " + pair_text(c.a(), c.n()));
    }
    return std::to_string(oracle_cases.size()) + " pairs, error-term bound included";
  });

  run("column identity", [&] {
    for_each_canonical(2, sc.small_n, [&](const CanonicalParallelogram& c) {
      auto b = count_formula(c, true, sieve.get());
      std::int64_t sum = 0;
      for (auto col : *b.columns) sum += col;
      expect(sum == count_direct(c).v + 1, pair_text(c.a(), c.n()));
    });
    return "n <= " + std::to_string(sc.small_n);
  });

  run("inverse symmetry", [&] {
    for_each_canonical(2, sc.symmetry_n, [&](const CanonicalParallelogram& c) {
      expect(count_direct(inverse_partner(c)).v == count_direct(c).v, pair_text(c.a(), c.n()));
    });
    return "n <= " + std::to_string(sc.symmetry_n);
  });

  run("closed forms", [&] {
    for (std::int64_t n = 3; n <= sc.closed_n; n += 2) {
      for (std::int64_t a : {std::int64_t{1}, n - 1, std::int64_t{2}, (n + 1) / 2, (n - 1) / 2, n - 2}) {
        if (a < 1 || a >= n) continue;
        CanonicalParallelogram c(a, n);
        auto closed = closed_form_special(c);
        expect(closed.has_value(), "no closed form " + pair_text(a, n));
        expect(*closed == count_direct(c).v, pair_text(a, n));
      }
    }
    return "odd n <= " + std::to_string(sc.closed_n);
  });

  run("extreme characterization", [&] {
    for_each_canonical(3, sc.small_n, [&](const CanonicalParallelogram& c) {
      std::int64_t v = count_direct(c).v;
      expect((v == 1) == (c.a() == c.n() - 1), "V=1 iff a=n-1 " + pair_text(c.a(), c.n()));
      expect((v == c.n() - 1) == (c.a() == 1), "V=n-1 iff a=1 " + pair_text(c.a(), c.n()));
    });
    return "3 <= n <= " + std::to_string(sc.small_n);
  });

  run("gcd identities", [&] {
    for_each_canonical(2, sc.interior_n, [&](const CanonicalParallelogram& c) {
      for (std::int64_t k = 1; k < c.n(); ++k) expect(gcd_identity_check(c, k), pair_text(c.a(), c.n()) + " k=" + std::to_string(k));
    });
    return "n <= " + std::to_string(sc.interior_n);
  });

  run("parity upper bound", [&] {
    std::int64_t covered = 0;
    for_each_canonical(2, sc.symmetry_n, [&](const CanonicalParallelogram& c) {
      if (auto bound = parity_upper_bound(c)) {
        ++covered;
        expect(Rational(count_direct(c).v) <= *bound, pair_text(c.a(), c.n()));
      }
    });
    return std::to_string(covered) + " pairs with a bound";
  });

  // experiments ----------------------------------------------------------------
  run("profile length and inverse pairing", [&] {
    for (std::int64_t n = 2; n <= sc.small_n; ++n) {
      auto recs = profile(n, CountMethod::Direct, options.threads);
      expect(static_cast<std::int64_t>(recs.size()) == sieve->phi(n), "length != phi(n), n=" + std::to_string(n));
      for (const auto& r : recs) {
        std::int64_t b = mod_inverse(r.a, n);
        auto it = std::find_if(recs.begin(), recs.end(), [&](const ProfileRecord& o) { return o.a == b; });
        expect(it != recs.end() && it->v == r.v, "pairing " + pair_text(r.a, n));
      }
    }
    return "n <= " + std::to_string(sc.small_n);
  });

  run("profile determinism across threads", [&] {
    std::int64_t n = options.quick ? 97 : 499;
    auto one = profile(n, CountMethod::Direct, 1);
    auto many = profile(n, CountMethod::Direct, 4);
    expect(one.size() == many.size(), "length differs");
    for (std::size_t i = 0; i < one.size(); ++i) expect(one[i].a == many[i].a && one[i].v == many[i].v, "record differs");
    return "n=" + std::to_string(n);
  });

  run("conjecture scan bounds", [&] {
    ScanOptions so;
    so.threads = options.threads;
    auto rep = conjecture_scan(5, sc.scan_n, so);
    std::ostringstream os;
    os << "n in [5, " << sc.scan_n << "], " << rep.admissible << " pairs, min " << rep.min->ratio << " max "
       << rep.max->ratio;
    expect(rep.violations.empty(), "CONJECTURE VIOLATION FOUND: " + os.str());
    return os.str();
  });

  run("phi mean convergence", [&] {
    std::int64_t far = options.quick ? 1000 : 10'000;
    double dev_far = std::abs(phi_mean(far).to_double() - kCoprimeDensity);
    double dev_near = std::abs(phi_mean(100).to_double() - kCoprimeDensity);
    expect(dev_far < 0.01, "deviation at a=" + std::to_string(far) + " is " + std::to_string(dev_far));
    expect(dev_far < dev_near, "deviation did not shrink");
    return "deviation " + std::to_string(dev_far) + " at a=" + std::to_string(far);
  });

  run("full-cycle discrepancy", [&] {
    for_each_canonical(2, options.quick ? 60 : 150, [&](const CanonicalParallelogram& c) {
      expect(discrepancy(c, c.a()) == 1.0 / static_cast<double>(c.a()), pair_text(c.a(), c.n()));
    });
    return std::string("q = a");
  });

  run("rho one-half proxy closed form", [&] {
    auto ns = n_range(5, options.quick ? 101 : 1001, 2, false);
    auto recs = rho_sequence(RhoSpec::rational(Rational(1, 2)), ns, CoprimePolicy::Skip, options.threads);
    for (const auto& r : recs) {
      expect(!r.skipped && r.a == (r.n + 1) / 2, "a != (n+1)/2 at n=" + std::to_string(r.n));
      expect(*r.ratio == Rational(closed_form_a_two(r.n), r.n), "ratio mismatch at n=" + std::to_string(r.n));
    }
    return std::to_string(recs.size()) + " odd n";
  });

  return results;
}

}  // namespace parallelo
