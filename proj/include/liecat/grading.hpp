#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "scalar.hpp"

namespace liecat {

/// Element of the grading group, stored componentwise. Empty = the zero
/// degree of the trivial group.
struct Degree {
  std::vector<int32_t> c;

  Degree() = default;
  explicit Degree(std::vector<int32_t> v) : c(std::move(v)) {}
  static Degree zero(int rank) { return Degree(std::vector<int32_t>(rank, 0)); }

  bool operator==(const Degree& o) const { return c == o.c; }
  bool operator!=(const Degree& o) const { return !(*this == o); }
  bool operator<(const Degree& o) const { return c < o.c; }

  std::string str() const {
    if (c.empty()) return "0";
    if (c.size() == 1) return std::to_string(c[0]);
    std::string s = "(";
    for (size_t i = 0; i < c.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(c[i]);
    }
    return s + ")";
  }
};

enum class GradeKind : uint8_t { trivial, z2, z, z2xz2, zn };

/// The grading group together with its bicharacter. All bundled instances
/// have a sign-valued bicharacter, stored as a parity: eps(a,b) = (-1)^e.
/// Finite kinds carry an explicit parity table, Z and Z^n use the dot form
/// (-1)^<a,b>.
class GradeGroup {
 public:
  GradeGroup() : kind_(GradeKind::trivial), rank_(0) {}

  static GradeGroup trivial() { return GradeGroup(); }

  /// Z2 with eps(a,b) = (-1)^{ab}: the super sign rule.
  static GradeGroup super() {
    GradeGroup g;
    g.kind_ = GradeKind::z2;
    g.rank_ = 1;
    g.table_ = {0, 0, 0, 1};  // row-major over {0,1} x {0,1}
    return g;
  }

  /// Z with eps(j,k) = (-1)^{jk}: the chain-complex sign rule.
  static GradeGroup integers() {
    GradeGroup g;
    g.kind_ = GradeKind::z;
    g.rank_ = 1;
    return g;
  }

  /// Z used as a bookkeeping grading with no signs at all (Loday-Pirashvili).
  static GradeGroup integers_unsigned() {
    GradeGroup g;
    g.kind_ = GradeKind::z;
    g.rank_ = 1;
    g.unsigned_ = true;
    return g;
  }

  /// Z2 x Z2 with a 4x4 parity table, validated as a bicharacter with
  /// eps(a,b) eps(b,a) = 1.
  static GradeGroup colour_z2z2(const std::vector<std::vector<int>>& parity) {
    GradeGroup g;
    g.kind_ = GradeKind::z2xz2;
    g.rank_ = 2;
    if (parity.size() != 4) throw ShapeError("colour bicharacter table must be 4x4");
    g.table_.resize(16);
    for (int i = 0; i < 4; ++i) {
      if (parity[i].size() != 4) throw ShapeError("colour bicharacter table must be 4x4");
      for (int j = 0; j < 4; ++j) g.table_[i * 4 + j] = parity[i][j] & 1;
    }
    g.validate_table(4);
    return g;
  }

  /// Standard Z2 x Z2 colour: eps(a,b) = (-1)^{a1 b1 + a2 b2}.
  static GradeGroup colour_standard() {
    std::vector<std::vector<int>> t(4, std::vector<int>(4, 0));
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        int a1 = a & 1, a2 = a >> 1, b1 = b & 1, b2 = b >> 1;
        t[a][b] = (a1 * b1 + a2 * b2) & 1;
      }
    return colour_z2z2(t);
  }

  /// Z^n with eps(a,b) = (-1)^{sum a_i b_i}.
  static GradeGroup free_abelian(int n) {
    GradeGroup g;
    g.kind_ = GradeKind::zn;
    g.rank_ = n;
    return g;
  }

  GradeKind kind() const { return kind_; }
  int rank() const { return rank_; }

  Degree normalize(Degree d) const {
    if (int(d.c.size()) != rank_) throw ShapeError("degree rank mismatch");
    if (kind_ == GradeKind::z2 || kind_ == GradeKind::z2xz2)
      for (auto& x : d.c) x = ((x % 2) + 2) % 2;
    return d;
  }

  Degree add(const Degree& a, const Degree& b) const {
    Degree r = Degree::zero(rank_);
    for (int i = 0; i < rank_; ++i) r.c[i] = a.c[i] + b.c[i];
    return normalize(r);
  }

  Degree neg(const Degree& a) const {
    Degree r = a;
    for (auto& x : r.c) x = -x;
    return normalize(r);
  }

  Degree zero() const { return Degree::zero(rank_); }

  /// Parity e with eps(a,b) = (-1)^e.
  int sign_parity(const Degree& a, const Degree& b) const {
    if (unsigned_) return 0;
    switch (kind_) {
      case GradeKind::trivial:
        return 0;
      case GradeKind::z2:
        return (a.c[0] * b.c[0]) & 1;
      case GradeKind::z2xz2:
        return int(table_[size_t(encode(a)) * 4 + encode(b)]);
      case GradeKind::z:
      case GradeKind::zn: {
        int64_t s = 0;
        for (int i = 0; i < rank_; ++i) s += int64_t(a.c[i]) * b.c[i];
        return int(((s % 2) + 2) % 2);
      }
    }
    return 0;
  }

  Scalar eps(FieldTag f, const Degree& a, const Degree& b) const {
    return Scalar::from_int(f, sign_parity(a, b) ? -1 : 1);
  }

  bool operator==(const GradeGroup& o) const {
    return kind_ == o.kind_ && rank_ == o.rank_ && table_ == o.table_ && unsigned_ == o.unsigned_;
  }

 private:
  int encode(const Degree& d) const {
    // z2xz2: component order (c0, c1) -> c0 + 2 c1
    return (d.c[0] & 1) + 2 * (d.c[1] & 1);
  }

  void validate_table(int n) const {
    auto get = [&](int a, int b) { return table_[size_t(a) * n + b]; };
    auto addg = [&](int a, int b) { return ((a ^ b) & 1) + (((a >> 1) ^ (b >> 1)) << 1); };
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (((get(a, b) + get(b, a)) & 1) != 0)
          throw ShapeError("bicharacter is not symmetric-inverse: eps(a,b)eps(b,a) != 1");
        for (int c = 0; c < n; ++c) {
          if (((get(addg(a, b), c)) & 1) != ((get(a, c) + get(b, c)) & 1))
            throw ShapeError("bicharacter not multiplicative in first slot");
          if (((get(a, addg(b, c))) & 1) != ((get(a, b) + get(a, c)) & 1))
            throw ShapeError("bicharacter not multiplicative in second slot");
        }
      }
  }

  GradeKind kind_;
  int rank_;
  bool unsigned_ = false;
  std::vector<int8_t> table_;  // parity table for finite kinds
};

}  // namespace liecat
