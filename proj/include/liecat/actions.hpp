#pragma once

#include "enveloping.hpp"

namespace liecat {

/// Action of a monoid on an object: phi: A (x) X -> X with the usual two
/// diagrams.
struct MonoidAction {
  MonoidObject a;
  ObjPtr x;
  Morphism act;

  MonoidAction(MonoidObject mon, ObjPtr obj, Morphism phi)
      : a(std::move(mon)), x(std::move(obj)), act(std::move(phi)) {
    if (!same_object(act.src(), *tensor_objects(a.carrier, x)) || !same_object(act.tgt(), *x))
      throw ShapeError("monoid action is not a map A (x) X -> X");
    if (act.degree() != a.cat().grading.zero())
      throw ShapeError("monoid action must have degree 0");
  }
};

/// Action of a Lie object: theta: B (x) X -> X satisfying
/// theta (b (x) id) = theta (id (x) theta) ((id - sigma) (x) id).
struct LieAction {
  LieObject b;
  ObjPtr x;
  Morphism act;

  LieAction(LieObject lie, ObjPtr obj, Morphism theta)
      : b(std::move(lie)), x(std::move(obj)), act(std::move(theta)) {
    if (!same_object(act.src(), *tensor_objects(b.carrier, x)) || !same_object(act.tgt(), *x))
      throw ShapeError("lie action is not a map B (x) X -> X");
    if (act.degree() != b.cat().grading.zero())
      throw ShapeError("lie action must have degree 0");
  }

  /// The operator x -> theta(b_i (x) x) of one actor basis element.
  SpMat actor_operator(int i) const {
    auto ti = detail::tensor_index(*b.carrier, *x);
    SpMat t(x->dim(), x->dim(), b.cat().field);
    for (int j = 0; j < x->dim(); ++j) {
      int q = ti.at(i, j);
      if (q < 0) continue;
      for (const auto& [r, c] : act.mat().col(q)) t.add_entry(r, j, c);
    }
    return t;
  }
};

inline CheckReport check_monoid_action(const MonoidAction& ma) {
  CheckReport rep;
  rep.subject = "monoid-action";
  const ObjPtr& a = ma.a.carrier;
  const ObjPtr& x = ma.x;
  if (ma.a.cat().has_differential()) {
    LawResult l{"differential-compatibility"};
    l.pass = ma.act.commutes_with_differential();
    rep.laws.push_back(std::move(l));
  }
  {
    LawResult l{"multiplicativity"};
    Morphism lhs = compose(ma.act, tensor_morphisms(ma.a.m, Morphism::identity(x)));
    Morphism rhs = compose(ma.act, tensor_morphisms(Morphism::identity(a), ma.act));
    SpMat defect = (lhs - rhs).mat();
    l.pass = defect.is_zero();
    if (!l.pass) l.witness = detail::triple_witness(defect, a, a, x);
    rep.laws.push_back(std::move(l));
  }
  {
    LawResult l{"unit-acts-trivially"};
    Morphism lhs = compose(ma.act, compose(tensor_morphisms(ma.a.u, Morphism::identity(x)),
                                           unit_left_inv(x)));
    SpMat defect = (lhs - Morphism::identity(x)).mat();
    l.pass = defect.is_zero();
    if (!l.pass) l.witness = {x->name(defect.first_nonzero_col())};
    rep.laws.push_back(std::move(l));
  }
  return rep;
}

inline CheckReport check_lie_action(const LieAction& la) {
  CheckReport rep;
  rep.subject = "lie-action";
  const ObjPtr& b = la.b.carrier;
  const ObjPtr& x = la.x;
  if (la.b.cat().has_differential()) {
    LawResult l{"differential-compatibility"};
    l.pass = la.act.commutes_with_differential();
    rep.laws.push_back(std::move(l));
  }
  {
    LawResult l{"bracket-action"};
    Morphism lhs = compose(la.act, tensor_morphisms(la.b.bracket, Morphism::identity(x)));
    Morphism alt = Morphism::identity(tensor_objects(b, b)) - symmetry(b, b);
    Morphism rhs = compose(la.act,
                           compose(tensor_morphisms(Morphism::identity(b), la.act),
                                   tensor_morphisms(alt, Morphism::identity(x))));
    SpMat defect = (lhs - rhs).mat();
    l.pass = defect.is_zero();
    if (!l.pass) l.witness = detail::triple_witness(defect, b, b, x);
    rep.laws.push_back(std::move(l));
  }
  return rep;
}

/// E(X): the endomorphism monoid on Hom(X, X). Multiplication and unit are
/// the unique maps determined by the evaluation diagrams, computed by
/// transposing; no sign is entered by hand.
inline MonoidObject endo_monoid(const ObjPtr& x) {
  ObjPtr h = hom_object(x, x);
  Morphism ev = ev_morphism(x, x);
  ObjPtr hh = tensor_objects(h, h);
  Morphism t = compose(ev, tensor_morphisms(Morphism::identity(h), ev));
  Morphism m = hom_transpose(t, hh, x);
  Morphism u = hom_transpose(unit_left(x), unit_object(x->cat()), x);
  return MonoidObject(h, std::move(m), std::move(u));
}

/// theta_bar: B -> Hom(X, X) with ev (theta_bar (x) id) = theta. A Lie
/// morphism into L(E(X)) exactly when theta is an action.
inline Morphism action_transpose(const LieAction& la) {
  return hom_transpose(la.act, la.b.carrier, la.x);
}

/// Reconstructs the action from its transpose: ev (theta_bar (x) id).
inline LieAction action_from_transpose(const LieObject& b, const ObjPtr& x,
                                       const Morphism& theta_bar) {
  Morphism ev = ev_morphism(x, x);
  Morphism theta = compose(ev, tensor_morphisms(theta_bar, Morphism::identity(x)));
  return LieAction(b, x, retarget(theta, tensor_objects(b.carrier, x), x));
}

/// Smallest k <= dmax such that every composite of k+1 actor operators
/// vanishes, or nullopt when dmax is exceeded.
inline std::optional<int> action_nilpotency_bound(const LieAction& la, int dmax) {
  int n = la.b.carrier->dim();
  int dim = la.x->dim();
  FieldTag f = la.b.cat().field;
  std::vector<SpMat> ops;
  for (int i = 0; i < n; ++i) ops.push_back(la.actor_operator(i));
  auto flatten = [&](const SpMat& m) {
    Vec v(size_t(dim) * dim, Scalar::zero(f));
    for (int j = 0; j < dim; ++j)
      for (const auto& [i, c] : m.col(j)) v[size_t(i) * dim + j] = c;
    return v;
  };
  std::vector<SpMat> layer = ops;
  for (int k = 1; k <= dmax + 1; ++k) {
    bool all_zero = true;
    for (const auto& m : layer)
      if (!m.is_zero()) { all_zero = false; break; }
    if (all_zero) return k - 1;
    if (k == dmax + 1) break;
    // next layer: span of T_i * (basis of current layer)
    EchelonSpan span(dim * dim, f);
    std::vector<SpMat> next;
    for (const auto& t : ops)
      for (const auto& m : layer) {
        SpMat prod = t * m;
        if (prod.is_zero()) continue;
        if (span.add(flatten(prod))) next.push_back(prod);
      }
    layer = std::move(next);
    if (layer.empty()) return k;
  }
  return std::nullopt;
}

/// Extends a Lie action along nu to a monoid action of the truncated
/// enveloping monoid. Requires the action to be nilpotent within the bound;
/// otherwise the truncation would be unsound and we refuse.
inline MonoidAction lie_to_monoid_action(const LieAction& la, const TruncatedUEA& u) {
  if (!same_object(*la.b.carrier, *u.b.carrier))
    throw ShapeError("action and enveloping monoid have different Lie objects");
  auto bound = action_nilpotency_bound(la, u.bound);
  if (!bound)
    throw TruncationError("action nilpotency bound exceeds the truncation " +
                          std::to_string(u.bound));
  int dim = la.x->dim();
  FieldTag f = la.b.cat().field;
  std::vector<SpMat> ops;
  for (int i = 0; i < la.b.carrier->dim(); ++i) ops.push_back(la.actor_operator(i));
  ObjPtr src = tensor_objects(u.carrier(), la.x);
  auto ti = detail::tensor_index(*u.carrier(), *la.x);
  SpMat phi(dim, src->dim(), f);
  for (size_t k = 0; k < u.words.size(); ++k) {
    SpMat p = SpMat::identity(dim, f);
    const auto& w = u.words[k];
    for (auto it = w.rbegin(); it != w.rend(); ++it) p = ops[size_t(*it)] * p;
    for (int j = 0; j < dim; ++j) {
      int q = ti.at(int(k), j);
      if (q < 0) continue;
      for (const auto& [i, c] : p.col(j)) phi.add_entry(i, q, c);
    }
  }
  return MonoidAction(u.mon(), la.x,
                      Morphism(src, la.x, la.b.cat().grading.zero(), std::move(phi)));
}

/// Restricts a monoid action of U_d(B) to B along nu.
inline LieAction monoid_to_lie_action(const MonoidAction& ma, const TruncatedUEA& u) {
  if (!same_object(*ma.a.carrier, *u.carrier()))
    throw ShapeError("action is not over the given enveloping monoid");
  Morphism theta = compose(ma.act, tensor_morphisms(u.nu, Morphism::identity(ma.x)));
  return LieAction(u.b, ma.x, retarget(theta, tensor_objects(u.b.carrier, ma.x), ma.x));
}

/// theta * theta' = (theta (x) id) alpha + (id (x) theta') sigma alpha (id (x) sigma):
/// the lifted tensor of two actions of the same Lie object. Every sign comes
/// from the symmetry matrices.
inline LieAction action_tensor(const LieAction& t1, const LieAction& t2) {
  if (!same_object(*t1.b.carrier, *t2.b.carrier) || t1.b.bracket != t2.b.bracket)
    throw ShapeError("action tensor requires a common acting Lie object");
  const ObjPtr& b = t1.b.carrier;
  ObjPtr xy = tensor_objects(t1.x, t2.x);
  ObjPtr src = tensor_objects(b, xy);

  Morphism first = tensor_morphisms(t1.act, Morphism::identity(t2.x));
  Morphism swap_inner = tensor_morphisms(Morphism::identity(b), symmetry(t1.x, t2.x));
  Morphism swap_out = symmetry(tensor_objects(b, t2.x), t1.x);
  Morphism second = compose(tensor_morphisms(Morphism::identity(t1.x), t2.act),
                            compose(swap_out, swap_inner));
  Morphism total(src, xy, t1.b.cat().grading.zero(), (first.mat() + second.mat()));
  return LieAction(t1.b, xy, std::move(total));
}

/// A Lie object equipped with an action of B for which the bracket is
/// equivariant (diagram: theta (id (x) b) = b (theta * theta)).
struct EquivariantLieObject {
  LieObject x;
  LieAction theta;

  EquivariantLieObject(LieObject lie, LieAction act) : x(std::move(lie)), theta(std::move(act)) {
    if (!same_object(*x.carrier, *theta.x))
      throw ShapeError("equivariant object: action lives on a different carrier");
  }

  const LieObject& base() const { return theta.b; }
};

/// Validates diagram (theta (id (x) b) = b (theta * theta)). An optional row
/// predicate restricts which output coordinates are compared; the truncated
/// exponent uses it at its filtration boundary.
inline CheckReport check_equivariant(const EquivariantLieObject& e,
                                     const std::function<bool(int)>& row_keep = nullptr) {
  CheckReport rep;
  rep.subject = "equivariant";
  const ObjPtr& b = e.base().carrier;
  const ObjPtr& x = e.x.carrier;
  LawResult l{"bracket-equivariance"};
  Morphism lhs = compose(e.theta.act, tensor_morphisms(Morphism::identity(b), e.x.bracket));
  LieAction tt = action_tensor(e.theta, e.theta);
  Morphism rhs = compose(e.x.bracket, tt.act);
  SpMat defect = (lhs - rhs).mat();
  if (row_keep) {
    SpMat filtered(defect.rows(), defect.cols(), defect.field());
    for (int j = 0; j < defect.cols(); ++j)
      for (const auto& [i, c] : defect.col(j))
        if (row_keep(i)) filtered.add_entry(i, j, c);
    defect = std::move(filtered);
    l.guarded = true;
    l.note = "rows restricted to the exact filtration window";
  }
  l.pass = defect.is_zero();
  if (!l.pass) l.witness = detail::triple_witness(defect, b, x, x);
  rep.laws.push_back(std::move(l));
  return rep;
}

/// Convolution Lie structure on Hom(A, X): bracket b_X (f (x) g) d_A, with
/// all signs produced by the interchange of Hom factors past A.
inline LieObject convolution_lie(const BimonoidObject& a, const LieObject& x) {
  const ObjPtr& ac = a.carrier();
  ObjPtr h = hom_object(ac, x.carrier);
  ObjPtr hh = tensor_objects(h, h);
  Morphism step1 = tensor_morphisms(Morphism::identity(hh), a.comul);
  Morphism step2 = interchange(h, h, ac, ac);
  Morphism ev = ev_morphism(ac, x.carrier);
  Morphism step3 = tensor_morphisms(ev, ev);
  Morphism t = compose(x.bracket, compose(step3, compose(step2, step1)));
  Morphism bracket = hom_transpose(t, hh, ac);
  return LieObject(h, std::move(bracket));
}

/// The translation action of A on Hom(A, X): phi(a (x) f) acts by right
/// multiplication inside the argument, with the sign dictated by the two
/// symmetries in the defining diagram.
inline MonoidAction exp_translation_action(const MonoidObject& a, const ObjPtr& x) {
  const ObjPtr& ac = a.carrier;
  ObjPtr h = hom_object(ac, x);
  Morphism s1 = tensor_morphisms(symmetry(ac, h), Morphism::identity(ac));
  Morphism s2 = tensor_morphisms(Morphism::identity(h), symmetry(ac, ac));
  Morphism s3 = tensor_morphisms(Morphism::identity(h), a.m);
  Morphism ev = ev_morphism(ac, x);
  Morphism t = compose(ev, compose(s3, compose(s2, s1)));
  ObjPtr ah = tensor_objects(ac, h);
  Morphism phi = hom_transpose(t, ah, ac);
  return MonoidAction(a, h, std::move(phi));
}

/// The regular action of a monoid on itself.
inline MonoidAction regular_action(const MonoidObject& a) {
  return MonoidAction(a, a.carrier, a.m);
}

}  // namespace liecat
