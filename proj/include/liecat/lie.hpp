#pragma once

#include "report.hpp"

namespace liecat {

/// Internal Lie algebra: a carrier with a degree-0 bracket X (x) X -> X
/// satisfying the alternating and Jacobi laws.
struct LieObject {
  ObjPtr carrier;
  Morphism bracket;

  LieObject(ObjPtr c, Morphism b) : carrier(std::move(c)), bracket(std::move(b)) {
    if (!same_object(bracket.tgt(), *carrier) ||
        !same_object(bracket.src(), *tensor_objects(carrier, carrier)))
      throw ShapeError("bracket is not a map X (x) X -> X");
    if (bracket.degree() != carrier->cat().grading.zero())
      throw ShapeError("bracket must have degree 0");
  }

  const CategoryInstance& cat() const { return carrier->cat(); }
  int dim() const { return carrier->dim(); }
};

/// Abelian Lie object on a given carrier.
inline LieObject abelian_lie(ObjPtr carrier) {
  ObjPtr sq = tensor_objects(carrier, carrier);
  return LieObject(carrier, Morphism::zero0(sq, carrier));
}

struct LieCheckOptions {
  /// Additionally require b(x,x) = 0 on every diagonal basis pair. The plain
  /// report only demands b(id + sigma) = 0, which over F_2 is the quasi-Lie
  /// convention.
  bool strict_alternating = false;
};

/// Validates the two defining laws plus compatibility with the differential
/// where the instance carries one. Witnesses are the first failing basis
/// tuple in lexicographic order.
inline CheckReport check_lie(const LieObject& lo, LieCheckOptions opts = {}) {
  CheckReport rep;
  rep.subject = "lie";
  const ObjPtr& x = lo.carrier;
  const Morphism& b = lo.bracket;

  if (lo.cat().has_differential()) {
    LawResult l{"differential-compatibility"};
    SpMat defect = x->differential() * b.mat() - b.mat() * b.src().differential();
    l.pass = defect.is_zero();
    if (!l.pass) l.witness = detail::pair_witness(defect, x, x);
    rep.laws.push_back(std::move(l));
  }

  {
    LawResult l{"alternating"};
    Morphism sigma = symmetry(x, x);
    Morphism defect = compose(b, Morphism::identity(b.src_ptr()) + sigma);
    l.pass = defect.is_zero();
    if (!l.pass) l.witness = detail::pair_witness(defect, x, x);
    rep.laws.push_back(std::move(l));
  }

  if (opts.strict_alternating) {
    LawResult l{"alternating-strict"};
    auto ti = detail::tensor_index(*x, *x);
    for (int i = 0; i < x->dim() && l.pass; ++i) {
      int q = ti.at(i, i);
      if (q < 0) continue;
      if (!b.mat().col_is_zero(q)) {
        l.pass = false;
        l.witness = {x->name(i), x->name(i)};
      }
    }
    rep.laws.push_back(std::move(l));
  }

  {
    LawResult l{"jacobi"};
    ObjPtr xx = tensor_objects(x, x);
    ObjPtr cube = tensor_objects(x, xx);
    // cyclic rotation sigma alpha with alpha strict: the symmetry (X(x)X, X)
    Morphism rot = symmetry(xx, x);  // (X(x)X)(x)X -> X(x)(X(x)X); flat: same space
    Morphism c = Morphism(cube, cube, lo.cat().grading.zero(), rot.mat());
    Morphism three = Morphism::identity(cube) + c + compose(c, c);
    Morphism inner = tensor_morphisms(Morphism::identity(x), b);
    Morphism defect = compose(b, compose(inner, three));
    l.pass = defect.is_zero();
    if (!l.pass) l.witness = detail::triple_witness(defect, x, x, x);
    rep.laws.push_back(std::move(l));
  }

  return rep;
}

/// f: S -> T is a morphism of Lie objects iff f b = b' (f (x) f).
inline CheckReport check_lie_morphism(const Morphism& f, const LieObject& s, const LieObject& t) {
  CheckReport rep;
  rep.subject = "lie-morphism";
  if (!same_object(f.src(), *s.carrier) || !same_object(f.tgt(), *t.carrier))
    throw ShapeError("morphism endpoints do not match the Lie objects");
  {
    LawResult l{"degree-zero"};
    l.pass = f.degree() == s.cat().grading.zero();
    rep.laws.push_back(std::move(l));
  }
  if (s.cat().has_differential()) {
    LawResult l{"differential-compatibility"};
    l.pass = f.commutes_with_differential();
    rep.laws.push_back(std::move(l));
  }
  {
    LawResult l{"bracket-compatibility"};
    Morphism defect = compose(f, s.bracket) - compose(t.bracket, tensor_morphisms(f, f));
    l.pass = defect.is_zero();
    if (!l.pass) l.witness = detail::pair_witness(defect, s.carrier, s.carrier);
    rep.laws.push_back(std::move(l));
  }
  return rep;
}

inline bool is_lie_morphism(const Morphism& f, const LieObject& s, const LieObject& t) {
  return check_lie_morphism(f, s, t).pass();
}

}  // namespace liecat
