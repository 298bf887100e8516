#pragma once

#include <functional>

#include "lie.hpp"

namespace liecat {

/// Restricts a defect matrix to the columns a filtration guard admits.
inline SpMat filter_columns(const SpMat& m, const std::function<bool(int)>& keep) {
  SpMat r(m.rows(), m.cols(), m.field());
  for (int j = 0; j < m.cols(); ++j)
    if (keep(j))
      for (const auto& [i, c] : m.col(j)) r.add_entry(i, j, c);
  return r;
}

/// Word-length tags of a truncated carrier. Checks that mix word lengths
/// beyond the bound are restricted to the window where the truncated object
/// agrees with the untruncated one.
struct FiltrationGuard {
  std::vector<int> word_len;
  int bound = 0;
};

struct MonoidObject {
  ObjPtr carrier;
  Morphism m;  // carrier (x) carrier -> carrier
  Morphism u;  // I -> carrier

  MonoidObject(ObjPtr c, Morphism mul, Morphism unit)
      : carrier(std::move(c)), m(std::move(mul)), u(std::move(unit)) {
    ObjPtr sq = tensor_objects(carrier, carrier);
    if (!same_object(m.src(), *sq) || !same_object(m.tgt(), *carrier))
      throw ShapeError("multiplication is not a map A (x) A -> A");
    if (!same_object(u.src(), *unit_object(carrier->cat())) || !same_object(u.tgt(), *carrier))
      throw ShapeError("unit is not a map I -> A");
    if (m.degree() != cat().grading.zero() || u.degree() != cat().grading.zero())
      throw ShapeError("monoid structure maps must have degree 0");
  }

  const CategoryInstance& cat() const { return carrier->cat(); }
  int dim() const { return carrier->dim(); }

  /// The unit as an element of the carrier.
  Vec unit_vec() const { return u.mat().column_vec(0); }

  /// Product of two carrier vectors.
  Vec mul_vec(const Vec& a, const Vec& b) const {
    Vec out(dim(), Scalar::zero(cat().field));
    auto ti = detail::tensor_index(*carrier, *carrier);
    for (size_t q = 0; q < ti.pairs.size(); ++q) {
      auto [j, l] = ti.pairs[q];
      if (a[j].is_zero() || b[l].is_zero()) continue;
      Scalar c = a[j] * b[l];
      for (const auto& [i, v] : m.mat().col(int(q))) out[i] += v * c;
    }
    return out;
  }
};

/// Commutator functor L: the bracket m (id - sigma) on the same carrier.
inline LieObject commutator_lie(const MonoidObject& a) {
  Morphism sigma = symmetry(a.carrier, a.carrier);
  Morphism b = compose(a.m, Morphism::identity(a.m.src_ptr()) - sigma);
  return LieObject(a.carrier, std::move(b));
}

/// delta_A = (u (x) id) lambda^{-1} + (id (x) u) rho^{-1}: a -> 1 (x) a + a (x) 1.
/// A Lie morphism L(A) -> L(A (x) A) for every monoid A.
inline Morphism delta_monoid(const MonoidObject& a) {
  Morphism left = compose(tensor_morphisms(a.u, Morphism::identity(a.carrier)),
                          unit_left_inv(a.carrier));
  Morphism right = compose(tensor_morphisms(Morphism::identity(a.carrier), a.u),
                           unit_right_inv(a.carrier));
  return left + right;
}

/// Tensor product of monoids via the middle interchange.
inline MonoidObject monoid_tensor(const MonoidObject& a, const MonoidObject& b) {
  ObjPtr ab = tensor_objects(a.carrier, b.carrier);
  Morphism i = interchange(a.carrier, b.carrier, a.carrier, b.carrier);
  Morphism m = compose(tensor_morphisms(a.m, b.m), i);
  ObjPtr unit = unit_object(a.cat());
  Morphism u = compose(tensor_morphisms(a.u, b.u), unit_left_inv(unit));
  return MonoidObject(ab, retarget(m, tensor_objects(ab, ab), ab), std::move(u));
}

inline CheckReport check_monoid(const MonoidObject& a, const FiltrationGuard* guard = nullptr) {
  CheckReport rep;
  rep.subject = "monoid";
  const ObjPtr& c = a.carrier;

  if (a.cat().has_differential()) {
    LawResult l{"differential-compatibility"};
    l.pass = a.m.commutes_with_differential() && a.u.commutes_with_differential();
    rep.laws.push_back(std::move(l));
  }

  {
    LawResult l{"associativity"};
    Morphism lhs = compose(a.m, tensor_morphisms(a.m, Morphism::identity(c)));
    Morphism rhs = compose(a.m, tensor_morphisms(Morphism::identity(c), a.m));
    SpMat defect = (lhs - rhs).mat();
    if (guard) {
      l.guarded = true;
      auto inner = detail::tensor_index(*c, *c);
      auto outer = detail::tensor_index(*tensor_objects(c, c), *c);
      defect = filter_columns(defect, [&](int q) {
        auto [ij, k] = outer.pairs[size_t(q)];
        auto [i, j] = inner.pairs[size_t(ij)];
        return guard->word_len[i] + guard->word_len[j] + guard->word_len[k] <= guard->bound;
      });
      l.note = "word lengths <= " + std::to_string(guard->bound);
    }
    l.pass = defect.is_zero();
    if (!l.pass) l.witness = detail::triple_witness(defect, c, c, c);
    rep.laws.push_back(std::move(l));
  }

  {
    LawResult l{"unit-left"};
    Morphism lhs = compose(a.m, compose(tensor_morphisms(a.u, Morphism::identity(c)),
                                        unit_left_inv(c)));
    SpMat defect = (lhs - Morphism::identity(c)).mat();
    l.pass = defect.is_zero();
    if (!l.pass) {
      int q = defect.first_nonzero_col();
      l.witness = {c->name(q)};
    }
    rep.laws.push_back(std::move(l));
  }
  {
    LawResult l{"unit-right"};
    Morphism lhs = compose(a.m, compose(tensor_morphisms(Morphism::identity(c), a.u),
                                        unit_right_inv(c)));
    SpMat defect = (lhs - Morphism::identity(c)).mat();
    l.pass = defect.is_zero();
    if (!l.pass) {
      int q = defect.first_nonzero_col();
      l.witness = {c->name(q)};
    }
    rep.laws.push_back(std::move(l));
  }

  return rep;
}

struct BimonoidObject {
  MonoidObject mon;
  Morphism comul;   // A -> A (x) A
  Morphism counit;  // A -> I
  std::optional<Morphism> antipode;

  BimonoidObject(MonoidObject monoid, Morphism d, Morphism e,
                 std::optional<Morphism> s = std::nullopt)
      : mon(std::move(monoid)), comul(std::move(d)), counit(std::move(e)),
        antipode(std::move(s)) {
    ObjPtr sq = tensor_objects(mon.carrier, mon.carrier);
    if (!same_object(comul.src(), *mon.carrier) || !same_object(comul.tgt(), *sq))
      throw ShapeError("comultiplication is not a map A -> A (x) A");
    if (!same_object(counit.src(), *mon.carrier) ||
        !same_object(counit.tgt(), *unit_object(mon.cat())))
      throw ShapeError("counit is not a map A -> I");
    if (antipode && (!same_object(antipode->src(), *mon.carrier) ||
                     !same_object(antipode->tgt(), *mon.carrier)))
      throw ShapeError("antipode is not an endomorphism of A");
  }

  const ObjPtr& carrier() const { return mon.carrier; }
  const CategoryInstance& cat() const { return mon.cat(); }
};

inline CheckReport check_bimonoid(const BimonoidObject& a, const FiltrationGuard* guard = nullptr,
                                  bool expect_cocommutative = false) {
  CheckReport rep = check_monoid(a.mon, guard);
  rep.subject = "bimonoid";
  const ObjPtr& c = a.carrier();
  Morphism id = Morphism::identity(c);

  {
    LawResult l{"coassociativity"};
    Morphism lhs = compose(tensor_morphisms(a.comul, id), a.comul);
    Morphism rhs = compose(tensor_morphisms(id, a.comul), a.comul);
    SpMat defect = (lhs - rhs).mat();
    l.pass = defect.is_zero();
    if (!l.pass) l.witness = {c->name(defect.first_nonzero_col())};
    rep.laws.push_back(std::move(l));
  }
  {
    LawResult l{"counit-left"};
    Morphism lhs = compose(unit_left(c), compose(tensor_morphisms(a.counit, id), a.comul));
    SpMat defect = (lhs - id).mat();
    l.pass = defect.is_zero();
    if (!l.pass) l.witness = {c->name(defect.first_nonzero_col())};
    rep.laws.push_back(std::move(l));
  }
  {
    LawResult l{"counit-right"};
    Morphism lhs = compose(unit_right(c), compose(tensor_morphisms(id, a.counit), a.comul));
    SpMat defect = (lhs - id).mat();
    l.pass = defect.is_zero();
    if (!l.pass) l.witness = {c->name(defect.first_nonzero_col())};
    rep.laws.push_back(std::move(l));
  }
  if (expect_cocommutative) {
    LawResult l{"cocommutativity"};
    SpMat defect = (compose(symmetry(c, c), a.comul) - a.comul).mat();
    l.pass = defect.is_zero();
    if (!l.pass) l.witness = {c->name(defect.first_nonzero_col())};
    rep.laws.push_back(std::move(l));
  }
  {
    // d is an algebra map: d m = m_{A(x)A} (d (x) d)
    LawResult l{"comultiplication-multiplicative"};
    MonoidObject aa = monoid_tensor(a.mon, a.mon);
    Morphism lhs = compose(a.comul, a.mon.m);
    Morphism rhs = compose(retarget(aa.m, aa.m.src_ptr(), lhs.tgt_ptr()),
                           tensor_morphisms(a.comul, a.comul));
    SpMat defect = (lhs - rhs).mat();
    if (guard) {
      l.guarded = true;
      auto ti = detail::tensor_index(*c, *c);
      defect = filter_columns(defect, [&](int q) {
        auto [i, j] = ti.pairs[size_t(q)];
        return guard->word_len[i] + guard->word_len[j] <= guard->bound;
      });
      l.note = "word lengths <= " + std::to_string(guard->bound);
    }
    l.pass = defect.is_zero();
    if (!l.pass) l.witness = detail::pair_witness(defect, c, c);
    rep.laws.push_back(std::move(l));
  }
  {
    // e is an algebra map and normalizes the unit
    LawResult l{"counit-multiplicative"};
    ObjPtr unit = unit_object(a.cat());
    Morphism lhs = compose(a.counit, a.mon.m);
    Morphism rhs = compose(unit_left(unit), tensor_morphisms(a.counit, a.counit));
    SpMat defect = (lhs - rhs).mat();
    l.pass = defect.is_zero();
    if (!l.pass) l.witness = detail::pair_witness(defect, c, c);
    rep.laws.push_back(std::move(l));
  }
  {
    LawResult l{"unit-comonoid-morphism"};
    ObjPtr unit = unit_object(a.cat());
    Morphism lhs = compose(a.comul, a.mon.u);
    Morphism rhs = compose(tensor_morphisms(a.mon.u, a.mon.u), unit_left_inv(unit));
    bool ok = (lhs - rhs).is_zero();
    ok = ok && compose(a.counit, a.mon.u) == Morphism::identity(unit);
    l.pass = ok;
    rep.laws.push_back(std::move(l));
  }

  return rep;
}

inline CheckReport check_hopf(const BimonoidObject& a, const FiltrationGuard* guard = nullptr,
                              bool expect_cocommutative = false) {
  CheckReport rep = check_bimonoid(a, guard, expect_cocommutative);
  rep.subject = "hopf";
  if (!a.antipode) {
    rep.laws.push_back({"antipode-present", false, {}, false, "no antipode supplied"});
    return rep;
  }
  const ObjPtr& c = a.carrier();
  Morphism id = Morphism::identity(c);
  Morphism ue = compose(a.mon.u, a.counit);
  {
    LawResult l{"antipode-left"};
    Morphism lhs = compose(a.mon.m, compose(tensor_morphisms(*a.antipode, id), a.comul));
    SpMat defect = (lhs - ue).mat();
    l.pass = defect.is_zero();
    if (!l.pass) l.witness = {c->name(defect.first_nonzero_col())};
    rep.laws.push_back(std::move(l));
  }
  {
    LawResult l{"antipode-right"};
    Morphism lhs = compose(a.mon.m, compose(tensor_morphisms(id, *a.antipode), a.comul));
    SpMat defect = (lhs - ue).mat();
    l.pass = defect.is_zero();
    if (!l.pass) l.witness = {c->name(defect.first_nonzero_col())};
    rep.laws.push_back(std::move(l));
  }
  return rep;
}

}  // namespace liecat
