#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace liecat {

/// Raised when two values from different fields meet, or shapes disagree.
struct ShapeError : std::runtime_error {
  explicit ShapeError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Raised when an operation is not available in the current category instance.
struct UnsupportedError : std::runtime_error {
  explicit UnsupportedError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Raised when a truncation bound cannot soundly accommodate a computation.
struct TruncationError : std::runtime_error {
  explicit TruncationError(const std::string& msg) : std::runtime_error(msg) {}
};

enum class FieldKind : uint8_t { Q, Fp };

/// Ground field: the rationals or a prime field F_p, p <= 251.
struct FieldTag {
  FieldKind kind = FieldKind::Q;
  uint32_t p = 0;  // modulus, used iff kind == Fp

  static FieldTag rationals() { return FieldTag{FieldKind::Q, 0}; }
  static FieldTag prime(uint32_t p);

  bool operator==(const FieldTag& o) const { return kind == o.kind && p == o.p; }
  bool operator!=(const FieldTag& o) const { return !(*this == o); }

  std::string str() const {
    return kind == FieldKind::Q ? "Q" : ("Fp:" + std::to_string(p));
  }
};

inline bool is_prime_u32(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline FieldTag FieldTag::prime(uint32_t p) {
  if (p > 251 || !is_prime_u32(p))
    throw ShapeError("field modulus must be a prime <= 251, got " + std::to_string(p));
  return FieldTag{FieldKind::Fp, p};
}

/// An element of the ground field. Exact arithmetic only; no floating point
/// exists anywhere in the library.
class Scalar {
 public:
  Scalar() = default;  // 0 in Q
  explicit Scalar(FieldTag f) : field_(f) {}

  static Scalar from_int(FieldTag f, long v) {
    Scalar s(f);
    if (f.kind == FieldKind::Q) {
      s.q_ = v;
    } else {
      long r = v % static_cast<long>(f.p);
      if (r < 0) r += f.p;
      s.r_ = static_cast<uint32_t>(r);
    }
    return s;
  }

  static Scalar zero(FieldTag f) { return Scalar(f); }
  static Scalar one(FieldTag f) { return from_int(f, 1); }

  /// Parses "n", "-n" or "n/d". Over F_p the value is reduced mod p.
  static Scalar parse(FieldTag f, const std::string& text);

  FieldTag field() const { return field_; }

  bool is_zero() const {
    return field_.kind == FieldKind::Q ? sgn(q_) == 0 : r_ == 0;
  }
  bool is_one() const {
    return field_.kind == FieldKind::Q ? q_ == 1 : r_ == 1;
  }

  Scalar operator+(const Scalar& o) const {
    check(o);
    Scalar s(field_);
    if (field_.kind == FieldKind::Q) s.q_ = q_ + o.q_;
    else s.r_ = (r_ + o.r_) % field_.p;
    return s;
  }
  Scalar operator-(const Scalar& o) const {
    check(o);
    Scalar s(field_);
    if (field_.kind == FieldKind::Q) s.q_ = q_ - o.q_;
    else s.r_ = (r_ + field_.p - o.r_) % field_.p;
    return s;
  }
  Scalar operator*(const Scalar& o) const {
    check(o);
    Scalar s(field_);
    if (field_.kind == FieldKind::Q) s.q_ = q_ * o.q_;
    else s.r_ = static_cast<uint32_t>((uint64_t(r_) * o.r_) % field_.p);
    return s;
  }
  Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }
  Scalar operator-() const {
    Scalar s(field_);
    if (field_.kind == FieldKind::Q) s.q_ = -q_;
    else s.r_ = r_ == 0 ? 0 : field_.p - r_;
    return s;
  }
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar inverse() const {
    if (is_zero()) throw ShapeError("division by zero");
    Scalar s(field_);
    if (field_.kind == FieldKind::Q) {
      s.q_ = 1 / q_;
    } else {
      // extended Euclid on (r_, p)
      int64_t a = r_, b = field_.p, x0 = 1, x1 = 0;
      while (b != 0) {
        int64_t q = a / b;
        int64_t t = a - q * b; a = b; b = t;
        t = x0 - q * x1; x0 = x1; x1 = t;
      }
      x0 %= static_cast<int64_t>(field_.p);
      if (x0 < 0) x0 += field_.p;
      s.r_ = static_cast<uint32_t>(x0);
    }
    return s;
  }

  bool operator==(const Scalar& o) const {
    check(o);
    return field_.kind == FieldKind::Q ? q_ == o.q_ : r_ == o.r_;
  }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// "a/b" in lowest terms, or a bare integer.
  std::string str() const {
    if (field_.kind == FieldKind::Q) {
      mpq_class c = q_;
      c.canonicalize();
      return c.get_str();
    }
    return std::to_string(r_);
  }

  const mpq_class& rational() const { return q_; }
  uint32_t residue() const { return r_; }

 private:
  void check(const Scalar& o) const {
    if (field_ != o.field_)
      throw ShapeError("mixed fields: " + field_.str() + " vs " + o.field_.str());
  }

  FieldTag field_ = FieldTag::rationals();
  mpq_class q_ = 0;   // used iff Q
  uint32_t r_ = 0;    // used iff Fp, reduced to [0, p)
};

inline Scalar Scalar::parse(FieldTag f, const std::string& text) {
  // grammar: -? digits ( / digits )?   with a nonzero denominator
  size_t pos = 0;
  auto digits = [&](size_t from) {
    size_t i = from;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    return i;
  };
  if (pos < text.size() && text[pos] == '-') ++pos;
  size_t num_end = digits(pos);
  if (num_end == pos) throw ShapeError("bad scalar literal '" + text + "'");
  std::string num = text.substr(0, num_end);
  std::string den = "1";
  if (num_end < text.size()) {
    if (text[num_end] != '/' || digits(num_end + 1) != text.size() ||
        num_end + 1 == text.size())
      throw ShapeError("bad scalar literal '" + text + "'");
    den = text.substr(num_end + 1);
  }
  mpz_class dz(den);
  if (dz == 0) throw ShapeError("zero denominator in '" + text + "'");
  if (f.kind == FieldKind::Q) {
    Scalar s(f);
    mpq_class q(mpz_class(num), dz);
    q.canonicalize();
    s.q_ = q;
    return s;
  }
  mpz_class nz(num);
  mpz_class rn = nz % f.p, rd = dz % f.p;
  if (rn < 0) rn += f.p;
  return from_int(f, rn.get_si()) / from_int(f, rd.get_si());
}

}  // namespace liecat
