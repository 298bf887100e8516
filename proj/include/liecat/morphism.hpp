#pragma once

#include <memory>
#include <string>
#include <utility>

#include "object.hpp"

namespace liecat {

/// Degree-homogeneous linear map between graded objects. Rows index the
/// target basis, columns the source basis; an entry may only sit where
/// deg(target row) = deg(source col) + deg(morphism).
class Morphism {
 public:
  Morphism() = default;
  Morphism(ObjPtr src, ObjPtr tgt, Degree deg, SpMat mat)
      : src_(std::move(src)), tgt_(std::move(tgt)), deg_(std::move(deg)), mat_(std::move(mat)) {
    if (src_->cat() != tgt_->cat()) throw ShapeError("morphism between different instances");
    deg_ = grading().normalize(deg_);
    if (mat_.rows() != tgt_->dim() || mat_.cols() != src_->dim() ||
        mat_.field() != src_->cat().field)
      throw ShapeError("morphism matrix shape mismatch");
    for (int j = 0; j < mat_.cols(); ++j)
      for (const auto& [i, c] : mat_.col(j)) {
        (void)c;
        if (tgt_->degree(i) != grading().add(src_->degree(j), deg_))
          throw ShapeError("morphism entry (" + tgt_->name(i) + " <- " + src_->name(j) +
                           ") violates homogeneity");
      }
  }

  static Morphism zero(ObjPtr src, ObjPtr tgt, Degree deg) {
    SpMat m(tgt->dim(), src->dim(), src->cat().field);
    return Morphism(std::move(src), std::move(tgt), std::move(deg), std::move(m));
  }
  static Morphism zero0(ObjPtr src, ObjPtr tgt) {
    Degree d = src->cat().grading.zero();
    return zero(std::move(src), std::move(tgt), d);
  }
  static Morphism identity(ObjPtr x) {
    SpMat m = SpMat::identity(x->dim(), x->cat().field);
    Degree d = x->cat().grading.zero();
    return Morphism(x, x, d, std::move(m));
  }

  const ObjPtr& src_ptr() const { return src_; }
  const ObjPtr& tgt_ptr() const { return tgt_; }
  const GradedObject& src() const { return *src_; }
  const GradedObject& tgt() const { return *tgt_; }
  const Degree& degree() const { return deg_; }
  const SpMat& mat() const { return mat_; }
  const GradeGroup& grading() const { return src_->cat().grading; }
  const CategoryInstance& cat() const { return src_->cat(); }
  FieldTag field() const { return src_->cat().field; }

  bool is_zero() const { return mat_.is_zero(); }

  Morphism operator+(const Morphism& o) const {
    require_parallel(o);
    return Morphism(src_, tgt_, deg_, mat_ + o.mat_);
  }
  Morphism operator-(const Morphism& o) const {
    require_parallel(o);
    return Morphism(src_, tgt_, deg_, mat_ - o.mat_);
  }
  Morphism operator-() const { return Morphism(src_, tgt_, deg_, -mat_); }
  Morphism scaled(const Scalar& c) const { return Morphism(src_, tgt_, deg_, mat_.scaled(c)); }

  bool operator==(const Morphism& o) const {
    return same_object(*src_, *o.src_) && same_object(*tgt_, *o.tgt_) && deg_ == o.deg_ &&
           mat_ == o.mat_;
  }
  bool operator!=(const Morphism& o) const { return !(*this == o); }

  Vec apply(const Vec& v) const { return mat_.apply(v); }

  /// True when the map commutes with the differentials (for degree-0 maps;
  /// in instances without differentials this is vacuous). Arrows of the
  /// chain and LP instances must satisfy it.
  bool commutes_with_differential() const {
    if (!cat().has_differential()) return true;
    SpMat lhs = tgt_->differential() * mat_;
    SpMat rhs = mat_ * src_->differential();
    return lhs == rhs;
  }

 private:
  void require_parallel(const Morphism& o) const {
    if (!same_object(*src_, *o.src_) || !same_object(*tgt_, *o.tgt_) || deg_ != o.deg_)
      throw ShapeError("morphism sum between non-parallel maps");
  }

  ObjPtr src_, tgt_;
  Degree deg_;
  SpMat mat_;
};

/// f after g.
inline Morphism compose(const Morphism& f, const Morphism& g) {
  if (!same_object(f.src(), g.tgt()))
    throw ShapeError("composition: inner objects do not match");
  Degree d = f.grading().add(f.degree(), g.degree());
  return Morphism(g.src_ptr(), f.tgt_ptr(), d, f.mat() * g.mat());
}

/// Transports a morphism to equal-shaped endpoint objects (used when two
/// construction routes build the same object with equal bases).
inline Morphism retarget(const Morphism& f, ObjPtr src, ObjPtr tgt) {
  if (*src != f.src() || *tgt != f.tgt()) throw ShapeError("retarget endpoints differ");
  return Morphism(std::move(src), std::move(tgt), f.degree(), f.mat());
}

}  // namespace liecat
