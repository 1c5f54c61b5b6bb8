#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "parallelo/error.hpp"

namespace parallelo {

struct LatticePoint {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

/// det of the 2x2 matrix with columns u, v.
std::int64_t cross(const LatticePoint& u, const LatticePoint& v);

/// gcd(|x|, |y|) == 1.
bool is_visible(const LatticePoint& p);

/// 2x2 integer matrix with determinant +1 or -1.
class UnimodularMap {
 public:
  /// Throws InvalidArgument unless m11*m22 - m12*m21 is +1 or -1.
  UnimodularMap(std::int64_t m11, std::int64_t m12, std::int64_t m21, std::int64_t m22);

  static UnimodularMap identity() { return {1, 0, 0, 1}; }

  std::int64_t m11() const { return m11_; }
  std::int64_t m12() const { return m12_; }
  std::int64_t m21() const { return m21_; }
  std::int64_t m22() const { return m22_; }
  int determinant() const;

  /// this * rhs: apply rhs first.
  UnimodularMap compose(const UnimodularMap& rhs) const;
  UnimodularMap inverse() const;

  friend bool operator==(const UnimodularMap&, const UnimodularMap&) = default;

 private:
  std::int64_t m11_, m12_, m21_, m22_;
};

LatticePoint apply_map(const UnimodularMap& m, const LatticePoint& p);

/// P_{a,n}: spanned by (1,0) and (a,n), n >= 2, 1 <= a < n, gcd(a,n) = 1.
class CanonicalParallelogram {
 public:
  /// Throws InvalidArgument naming the violated invariant.
  CanonicalParallelogram(std::int64_t a, std::int64_t n);

  std::int64_t a() const { return a_; }
  std::int64_t n() const { return n_; }

  friend bool operator==(const CanonicalParallelogram&, const CanonicalParallelogram&) = default;

 private:
  std::int64_t a_;
  std::int64_t n_;
};

/// Returns the reason (a, n) is not a canonical parallelogram, or empty.
std::string canonical_violation(std::int64_t a, std::int64_t n);

enum class ReductionErrorKind { NotPrimitive, DegenerateArea };

class ReductionError : public std::runtime_error {
 public:
  ReductionError(ReductionErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ReductionErrorKind kind() const { return kind_; }

 private:
  ReductionErrorKind kind_;
};

const char* to_string(ReductionErrorKind kind);

struct ReductionResult {
  CanonicalParallelogram canonical;
  UnimodularMap map;  // det +1
  bool swapped;       // the basis was reordered to (v, u) for positive orientation
};

/// Maps the clean parallelogram spanned by primitive u, v (|det| >= 2) to
/// P_{a,n}: orient, send u to (1,0) via Bezout rows, then shear a into [0, n).
ReductionResult reduce_to_canonical(const LatticePoint& u, const LatticePoint& v);

/// The n-1 interior points (ceil(k*a/n), k), k = 1..n-1.
std::vector<LatticePoint> interior_points(const CanonicalParallelogram& c);

/// Brute-force scan of the four boundary edges for lattice points other than
/// the vertices.
bool verify_clean(const CanonicalParallelogram& c);

}  // namespace parallelo
