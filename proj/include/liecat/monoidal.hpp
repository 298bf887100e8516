#pragma once

#include <string>
#include <vector>

#include "morphism.hpp"

namespace liecat {

namespace detail {

/// Kept basis pairs of a tensor product, in x-major order, plus the reverse
/// lookup. LP drops pairs above its degree window; chain refuses them.
struct TensorIndex {
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> pos;  // j * dimY + l -> flat position, or -1 if dropped
  int dim_y = 0;

  int at(int j, int l) const { return pos[size_t(j) * dim_y + l]; }
};

inline TensorIndex tensor_index(const GradedObject& x, const GradedObject& y) {
  const auto& cat = x.cat();
  TensorIndex t;
  t.dim_y = y.dim();
  t.pos.assign(size_t(x.dim()) * y.dim(), -1);
  for (int j = 0; j < x.dim(); ++j)
    for (int l = 0; l < y.dim(); ++l) {
      Degree d = cat.grading.add(x.degree(j), y.degree(l));
      if (!cat.degree_allowed(d)) {
        if (cat.tensor_policy() == TensorPolicy::error_outside)
          throw ShapeError("tensor degree " + d.str() + " falls outside the chain window");
        if (cat.tensor_policy() == TensorPolicy::truncate_outside) continue;
      }
      t.pos[size_t(j) * y.dim() + l] = int(t.pairs.size());
      t.pairs.push_back({j, l});
    }
  return t;
}

}  // namespace detail

/// X (x) Y with the basis of kept pairs in x-major order; degrees add, the
/// differential follows the Leibniz rule with the instance's sign.
inline ObjPtr tensor_objects(const ObjPtr& xp, const ObjPtr& yp) {
  const GradedObject& x = *xp;
  const GradedObject& y = *yp;
  if (x.cat() != y.cat()) throw ShapeError("tensor of objects from different instances");
  const auto& cat = x.cat();
  auto ti = detail::tensor_index(x, y);
  std::vector<BasisElt> basis;
  basis.reserve(ti.pairs.size());
  for (auto [j, l] : ti.pairs)
    basis.push_back({tensor_name(x.name(j), y.name(l)),
                     cat.grading.add(x.degree(j), y.degree(l))});
  std::optional<SpMat> diff;
  if (cat.has_differential()) {
    SpMat d(int(ti.pairs.size()), int(ti.pairs.size()), cat.field);
    const SpMat& dx = x.differential();
    const SpMat& dy = y.differential();
    Degree minus_one = Degree({-1});
    for (size_t q = 0; q < ti.pairs.size(); ++q) {
      auto [j, l] = ti.pairs[q];
      for (const auto& [i, c] : dx.col(j)) {
        int p = ti.at(i, l);
        if (p >= 0) d.add_entry(p, int(q), c);
      }
      Scalar sg = cat.grading.eps(cat.field, minus_one, x.degree(j));
      for (const auto& [k, c] : dy.col(l)) {
        int p = ti.at(j, k);
        if (p >= 0) d.add_entry(p, int(q), sg * c);
      }
    }
    diff = std::move(d);
  }
  return make_object(cat, std::move(basis), std::move(diff));
}

/// (f (x) g)(x (x) y) = eps(deg g, deg x) f(x) (x) g(y).
inline Morphism tensor_morphisms(const Morphism& f, const Morphism& g) {
  if (f.cat() != g.cat()) throw ShapeError("tensor of morphisms from different instances");
  const auto& cat = f.cat();
  ObjPtr src = tensor_objects(f.src_ptr(), g.src_ptr());
  ObjPtr tgt = tensor_objects(f.tgt_ptr(), g.tgt_ptr());
  auto si = detail::tensor_index(f.src(), g.src());
  auto ti = detail::tensor_index(f.tgt(), g.tgt());
  SpMat m(tgt->dim(), src->dim(), cat.field);
  for (size_t q = 0; q < si.pairs.size(); ++q) {
    auto [j, l] = si.pairs[q];
    Scalar sg = cat.grading.eps(cat.field, g.degree(), f.src().degree(j));
    for (const auto& [i, a] : f.mat().col(j))
      for (const auto& [k, b] : g.mat().col(l)) {
        int p = ti.at(i, k);
        if (p >= 0) m.add_entry(p, int(q), sg * a * b);
      }
  }
  Degree d = cat.grading.add(f.degree(), g.degree());
  return Morphism(std::move(src), std::move(tgt), std::move(d), std::move(m));
}

/// The symmetry X (x) Y -> Y (x) X: (x, y) -> eps(|x|, |y|) (y, x).
inline Morphism symmetry(const ObjPtr& xp, const ObjPtr& yp) {
  const GradedObject& x = *xp;
  const GradedObject& y = *yp;
  if (x.cat() != y.cat()) throw ShapeError("symmetry between different instances");
  const auto& cat = x.cat();
  ObjPtr src = tensor_objects(xp, yp);
  ObjPtr tgt = tensor_objects(yp, xp);
  auto si = detail::tensor_index(x, y);
  auto ti = detail::tensor_index(y, x);
  SpMat m(tgt->dim(), src->dim(), cat.field);
  for (size_t q = 0; q < si.pairs.size(); ++q) {
    auto [j, l] = si.pairs[q];
    int p = ti.at(l, j);
    if (p < 0) continue;
    m.add_entry(p, int(q), cat.grading.eps(cat.field, x.degree(j), y.degree(l)));
  }
  return Morphism(std::move(src), std::move(tgt), cat.grading.zero(), std::move(m));
}

struct BiproductData {
  ObjPtr obj;
  Morphism i1, i2, p1, p2;
};

/// Direct sum with injections and projections satisfying the biproduct laws.
inline BiproductData direct_sum(const ObjPtr& xp, const ObjPtr& yp) {
  const GradedObject& x = *xp;
  const GradedObject& y = *yp;
  if (x.cat() != y.cat()) throw ShapeError("direct sum between different instances");
  const auto& cat = x.cat();
  bool clash = false;
  for (int i = 0; i < y.dim(); ++i)
    if (x.index_of(y.name(i)) >= 0) { clash = true; break; }
  std::vector<BasisElt> basis;
  for (int i = 0; i < x.dim(); ++i)
    basis.push_back({clash ? "L." + x.name(i) : x.name(i), x.degree(i)});
  for (int i = 0; i < y.dim(); ++i)
    basis.push_back({clash ? "R." + y.name(i) : y.name(i), y.degree(i)});
  std::optional<SpMat> diff;
  if (cat.has_differential()) {
    SpMat d(x.dim() + y.dim(), x.dim() + y.dim(), cat.field);
    for (int j = 0; j < x.dim(); ++j)
      for (const auto& [i, c] : x.differential().col(j)) d.add_entry(i, j, c);
    for (int j = 0; j < y.dim(); ++j)
      for (const auto& [i, c] : y.differential().col(j))
        d.add_entry(x.dim() + i, x.dim() + j, c);
    diff = std::move(d);
  }
  ObjPtr s = make_object(cat, std::move(basis), std::move(diff));
  Degree z = cat.grading.zero();
  SpMat mi1(s->dim(), x.dim(), cat.field), mi2(s->dim(), y.dim(), cat.field);
  SpMat mp1(x.dim(), s->dim(), cat.field), mp2(y.dim(), s->dim(), cat.field);
  for (int i = 0; i < x.dim(); ++i) {
    mi1.add_entry(i, i, Scalar::one(cat.field));
    mp1.add_entry(i, i, Scalar::one(cat.field));
  }
  for (int i = 0; i < y.dim(); ++i) {
    mi2.add_entry(x.dim() + i, i, Scalar::one(cat.field));
    mp2.add_entry(i, x.dim() + i, Scalar::one(cat.field));
  }
  return {s, Morphism(xp, s, z, std::move(mi1)), Morphism(yp, s, z, std::move(mi2)),
          Morphism(s, xp, z, std::move(mp1)), Morphism(s, yp, z, std::move(mp2))};
}

/// Strict unitors: the matrices are identities, only the endpoint objects
/// differ by basis renaming.
inline Morphism unit_left(const ObjPtr& x) {
  ObjPtr ix = tensor_objects(unit_object(x->cat()), x);
  return Morphism(ix, x, x->cat().grading.zero(), SpMat::identity(x->dim(), x->cat().field));
}
inline Morphism unit_left_inv(const ObjPtr& x) {
  ObjPtr ix = tensor_objects(unit_object(x->cat()), x);
  return Morphism(x, ix, x->cat().grading.zero(), SpMat::identity(x->dim(), x->cat().field));
}
inline Morphism unit_right(const ObjPtr& x) {
  ObjPtr xi = tensor_objects(x, unit_object(x->cat()));
  return Morphism(xi, x, x->cat().grading.zero(), SpMat::identity(x->dim(), x->cat().field));
}
inline Morphism unit_right_inv(const ObjPtr& x) {
  ObjPtr xi = tensor_objects(x, unit_object(x->cat()));
  return Morphism(x, xi, x->cat().grading.zero(), SpMat::identity(x->dim(), x->cat().field));
}

/// Middle interchange (A(x)B)(x)(C(x)D) -> (A(x)C)(x)(B(x)D), the signed
/// permutation id (x) sigma (x) id under strict flattening.
inline Morphism interchange(const ObjPtr& a, const ObjPtr& b, const ObjPtr& c, const ObjPtr& d) {
  Morphism mid = tensor_morphisms(symmetry(b, c), Morphism::identity(d));
  return tensor_morphisms(Morphism::identity(a), mid);
}

/// Internal hom of a closed instance. Basis: elementary maps x_j => y_i in
/// source-major order; degree |y_i| - |x_j|. Chain instances carry the
/// induced differential d(E) = d_Y E - eps E d_X.
inline ObjPtr hom_object(const ObjPtr& xp, const ObjPtr& yp) {
  const GradedObject& x = *xp;
  const GradedObject& y = *yp;
  if (x.cat() != y.cat()) throw ShapeError("hom between different instances");
  const auto& cat = x.cat();
  if (!cat.closed())
    throw UnsupportedError("internal hom is not available in the lp instance");
  std::vector<BasisElt> basis;
  basis.reserve(size_t(x.dim()) * y.dim());
  for (int j = 0; j < x.dim(); ++j)
    for (int i = 0; i < y.dim(); ++i) {
      Degree d = cat.grading.add(y.degree(i), cat.grading.neg(x.degree(j)));
      if (!cat.degree_allowed(d))
        throw ShapeError("hom component degree " + d.str() + " outside the chain window");
      basis.push_back({x.name(j) + "=>" + y.name(i), d});
    }
  std::optional<SpMat> diff;
  if (cat.has_differential()) {
    int n = int(basis.size());
    SpMat dm(n, n, cat.field);
    Degree minus_one = Degree({-1});
    auto pos = [&](int j, int i) { return j * y.dim() + i; };
    for (int j = 0; j < x.dim(); ++j)
      for (int i = 0; i < y.dim(); ++i) {
        int q = pos(j, i);
        for (const auto& [i2, c] : y.differential().col(i)) dm.add_entry(pos(j, i2), q, c);
        Scalar sg = -cat.grading.eps(cat.field, minus_one, basis[size_t(q)].degree);
        // E o d_X: contributions from columns l with d_X(x_l) hitting x_j
        for (int l = 0; l < x.dim(); ++l)
          for (const auto& [jj, c] : x.differential().col(l))
            if (jj == j) dm.add_entry(pos(l, i), q, sg * c);
      }
    diff = std::move(dm);
  }
  return make_object(cat, std::move(basis), std::move(diff));
}

/// Evaluation Hom(X,Y) (x) X -> Y, the counit of the closed structure.
inline Morphism ev_morphism(const ObjPtr& xp, const ObjPtr& yp) {
  ObjPtr h = hom_object(xp, yp);
  ObjPtr src = tensor_objects(h, xp);
  auto si = detail::tensor_index(*h, *xp);
  SpMat m(yp->dim(), src->dim(), xp->cat().field);
  for (size_t q = 0; q < si.pairs.size(); ++q) {
    auto [e, k] = si.pairs[q];
    int j = e / yp->dim(), i = e % yp->dim();
    if (j == k) m.add_entry(i, int(q), Scalar::one(xp->cat().field));
  }
  return Morphism(std::move(src), yp, xp->cat().grading.zero(), std::move(m));
}

/// The unique map theta_bar: W -> Hom(X,Y) with ev (theta_bar (x) id) = theta,
/// for theta: W (x) X -> Y. A pure re-indexing under the strict closed
/// structure.
inline Morphism hom_transpose(const Morphism& theta, const ObjPtr& wp, const ObjPtr& xp) {
  ObjPtr expected = tensor_objects(wp, xp);
  if (!same_object(theta.src(), *expected))
    throw ShapeError("hom_transpose: source is not W (x) X");
  ObjPtr yp = theta.tgt_ptr();
  ObjPtr h = hom_object(xp, yp);
  auto si = detail::tensor_index(*wp, *xp);
  SpMat m(h->dim(), wp->dim(), theta.field());
  for (size_t q = 0; q < si.pairs.size(); ++q) {
    auto [k, j] = si.pairs[q];
    for (const auto& [i, c] : theta.mat().col(int(q)))
      m.add_entry(j * yp->dim() + i, k, c);
  }
  return Morphism(wp, h, theta.degree(), std::move(m));
}

/// Hom(A, g): Hom(A, Y) -> Hom(A, Z) for g: Y -> Z, i.e. post-composition.
inline Morphism hom_postcompose(const ObjPtr& ap, const Morphism& g) {
  ObjPtr hy = hom_object(ap, g.src_ptr());
  ObjPtr hz = hom_object(ap, g.tgt_ptr());
  int dy = g.src().dim(), dz = g.tgt().dim();
  SpMat m(hz->dim(), hy->dim(), g.field());
  for (int j = 0; j < ap->dim(); ++j)
    for (int i = 0; i < dy; ++i)
      for (const auto& [k, c] : g.mat().col(i)) m.add_entry(j * dz + k, j * dy + i, c);
  return Morphism(hy, hz, g.degree(), std::move(m));
}

}  // namespace liecat
