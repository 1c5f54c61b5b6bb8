#include "parallelo/lattice.hpp"

#include <algorithm>
#include <cstdlib>

#include "parallelo/exact_math.hpp"

namespace parallelo {

std::int64_t cross(const LatticePoint& u, const LatticePoint& v) {
  return detail::checked_sub(detail::checked_mul(u.x, v.y), detail::checked_mul(u.y, v.x));
}

bool is_visible(const LatticePoint& p) { return gcd(p.x, p.y) == 1; }

UnimodularMap::UnimodularMap(std::int64_t m11, std::int64_t m12, std::int64_t m21, std::int64_t m22)
    : m11_(m11), m12_(m12), m21_(m21), m22_(m22) {
  __int128 det = static_cast<__int128>(m11) * m22 - static_cast<__int128>(m12) * m21;
  if (det != 1 && det != -1) throw InvalidArgument("unimodular map requires determinant +1 or -1");
}

int UnimodularMap::determinant() const {
  return static_cast<int>(static_cast<__int128>(m11_) * m22_ - static_cast<__int128>(m12_) * m21_);
}

UnimodularMap UnimodularMap::compose(const UnimodularMap& r) const {
  using detail::checked_add;
  using detail::checked_mul;
  return {checked_add(checked_mul(m11_, r.m11_), checked_mul(m12_, r.m21_)),
          checked_add(checked_mul(m11_, r.m12_), checked_mul(m12_, r.m22_)),
          checked_add(checked_mul(m21_, r.m11_), checked_mul(m22_, r.m21_)),
          checked_add(checked_mul(m21_, r.m12_), checked_mul(m22_, r.m22_))};
}

UnimodularMap UnimodularMap::inverse() const {
  std::int64_t d = determinant();
  return {d * m22_, -d * m12_, -d * m21_, d * m11_};
}

LatticePoint apply_map(const UnimodularMap& m, const LatticePoint& p) {
  using detail::checked_add;
  using detail::checked_mul;
  return {checked_add(checked_mul(m.m11(), p.x), checked_mul(m.m12(), p.y)),
          checked_add(checked_mul(m.m21(), p.x), checked_mul(m.m22(), p.y))};
}

std::string canonical_violation(std::int64_t a, std::int64_t n) {
  if (n < 2) return "n must be >= 2";
  if (a < 1 || a >= n) return "a must satisfy 1 <= a < n";
  if (gcd(a, n) != 1) return "gcd(a,n) must be 1";
  return {};
}

CanonicalParallelogram::CanonicalParallelogram(std::int64_t a, std::int64_t n) : a_(a), n_(n) {
  if (auto why = canonical_violation(a, n); !why.empty()) throw InvalidArgument(why);
}

const char* to_string(ReductionErrorKind kind) {
  switch (kind) {
    case ReductionErrorKind::NotPrimitive: return "NotPrimitive";
    case ReductionErrorKind::DegenerateArea: return "DegenerateArea";
  }
  return "unknown";
}

ReductionResult reduce_to_canonical(const LatticePoint& u_in, const LatticePoint& v_in) {
  if (!is_visible(u_in) || !is_visible(v_in)) {
    throw ReductionError(ReductionErrorKind::NotPrimitive, "spanning vector is not primitive; parallelogram is not clean");
  }
  std::int64_t det = cross(u_in, v_in);
  if (det == 0 || det == 1 || det == -1) {
    throw ReductionError(ReductionErrorKind::DegenerateArea, "|det(u,v)| must be >= 2");
  }
  bool swapped = det < 0;
  const LatticePoint& u = swapped ? v_in : u_in;
  const LatticePoint& v = swapped ? u_in : v_in;
  std::int64_t n = swapped ? -det : det;

  auto [g, m1, m2] = egcd(u.x, u.y);
  (void)g;
  UnimodularMap to_axis(m1, m2, -u.y, u.x);
  LatticePoint image = apply_map(to_axis, v);  // (c, n)
  std::int64_t k = -floor_div(image.x, n);
  UnimodularMap shear(1, k, 0, 1);
  UnimodularMap composite = shear.compose(to_axis);
  std::int64_t a = image.x + k * n;
  return {CanonicalParallelogram(a, n), composite, swapped};
}

std::vector<LatticePoint> interior_points(const CanonicalParallelogram& c) {
  std::vector<LatticePoint> points;
  points.reserve(static_cast<std::size_t>(c.n() - 1));
  for (std::int64_t k = 1; k < c.n(); ++k) points.push_back({ceil_div(k * c.a(), c.n()), k});
  return points;
}

namespace {

// Lattice points strictly between p and q, found by scanning the bounding box.
std::int64_t interior_points_on_segment(const LatticePoint& p, const LatticePoint& q) {
  std::int64_t count = 0;
  auto [x0, x1] = std::minmax(p.x, q.x);
  auto [y0, y1] = std::minmax(p.y, q.y);
  LatticePoint dir{q.x - p.x, q.y - p.y};
  for (std::int64_t x = x0; x <= x1; ++x) {
    for (std::int64_t y = y0; y <= y1; ++y) {
      LatticePoint r{x - p.x, y - p.y};
      if (cross(dir, r) != 0) continue;
      if (LatticePoint{x, y} == p || LatticePoint{x, y} == q) continue;
      ++count;
    }
  }
  return count;
}

}  // namespace

bool verify_clean(const CanonicalParallelogram& c) {
  const LatticePoint o{0, 0}, e{1, 0}, w{c.a(), c.n()}, ew{c.a() + 1, c.n()};
  return interior_points_on_segment(o, e) == 0 && interior_points_on_segment(e, ew) == 0 &&
         interior_points_on_segment(ew, w) == 0 && interior_points_on_segment(w, o) == 0;
}

}  // namespace parallelo
