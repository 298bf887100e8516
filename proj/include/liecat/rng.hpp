#pragma once

#include <cstdint>

#include "scalar.hpp"

namespace liecat {

/// Deterministic splitmix64 stream. Used instead of <random> so that seeded
/// reports are byte-identical across platforms.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform value in [0, n).
  uint64_t below(uint64_t n) { return n == 0 ? 0 : next() % n; }

  /// Small integer scalar in [-3, 3] over Q, or a uniform residue over F_p.
  Scalar scalar(FieldTag f) {
    if (f.kind == FieldKind::Q) return Scalar::from_int(f, int64_t(below(7)) - 3);
    return Scalar::from_int(f, int64_t(below(f.p)));
  }

  Scalar nonzero_scalar(FieldTag f) {
    for (;;) {
      Scalar s = scalar(f);
      if (!s.is_zero()) return s;
    }
  }

 private:
  uint64_t state_;
};

constexpr uint64_t kDefaultSeed = 20240915ull;

}  // namespace liecat
