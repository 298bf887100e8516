#pragma once

// Shared builders for the test suites: the bundled example algebras and a
// few independent oracles (counting, brute-force expansion) that the
// library-side computations are checked against.

#include <array>
#include <cstdint>

#include "liecat/points.hpp"

namespace lt {

using namespace liecat;

struct BracketEntry {
  int i, j, k;
  long c;
};

inline LieObject make_lie(const CategoryInstance& cat, std::vector<BasisElt> basis,
                          const std::vector<BracketEntry>& entries) {
  ObjPtr c = make_object(cat, std::move(basis));
  ObjPtr sq = tensor_objects(c, c);
  auto ti = detail::tensor_index(*c, *c);
  SpMat bm(c->dim(), sq->dim(), cat.field);
  for (const auto& e : entries)
    bm.add_entry(e.k, ti.at(e.i, e.j), Scalar::from_int(cat.field, e.c));
  return LieObject(c, Morphism(sq, c, cat.grading.zero(), std::move(bm)));
}

inline LieObject make_lie_with_diff(const CategoryInstance& cat, std::vector<BasisElt> basis,
                                    const std::vector<std::array<int, 2>>& dpairs,
                                    const std::vector<BracketEntry>& entries) {
  int n = int(basis.size());
  SpMat d(n, n, cat.field);
  for (auto [from, to] : dpairs) d.add_entry(to, from, Scalar::one(cat.field));
  ObjPtr c = make_object(cat, std::move(basis), std::move(d));
  ObjPtr sq = tensor_objects(c, c);
  auto ti = detail::tensor_index(*c, *c);
  SpMat bm(c->dim(), sq->dim(), cat.field);
  for (const auto& e : entries)
    bm.add_entry(e.k, ti.at(e.i, e.j), Scalar::from_int(cat.field, e.c));
  return LieObject(c, Morphism(sq, c, cat.grading.zero(), std::move(bm)));
}

// sl2 over a field: basis (h, e, f), [h,e] = 2e, [h,f] = -2f, [e,f] = h.
inline LieObject sl2(FieldTag f = FieldTag::rationals()) {
  auto cat = CategoryInstance::vect(f);
  Degree z = cat.grading.zero();
  return make_lie(cat, {{"h", z}, {"e", z}, {"f", z}},
                  {{0, 1, 1, 2}, {1, 0, 1, -2}, {0, 2, 2, -2}, {2, 0, 2, 2},
                   {1, 2, 0, 1}, {2, 1, 0, -1}});
}

// Heisenberg h3: [x,y] = z, z central.
inline LieObject heisenberg(FieldTag f = FieldTag::rationals()) {
  auto cat = CategoryInstance::vect(f);
  Degree z = cat.grading.zero();
  return make_lie(cat, {{"x", z}, {"y", z}, {"z", z}}, {{0, 1, 2, 1}, {1, 0, 2, -1}});
}

// One odd generator, zero bracket, over Q by default.
inline LieObject odd_one_super(FieldTag f = FieldTag::rationals()) {
  auto cat = CategoryInstance::super_cat(f);
  return make_lie(cat, {{"t", Degree({1})}}, {});
}

// Affine 2-dim algebra [t,v] = v.
inline LieObject affine2(FieldTag f = FieldTag::rationals()) {
  auto cat = CategoryInstance::vect(f);
  Degree z = cat.grading.zero();
  return make_lie(cat, {{"t", z}, {"v", z}}, {{0, 1, 1, 1}, {1, 0, 1, -1}});
}

inline LieObject abelian_n(int n, FieldTag f = FieldTag::rationals()) {
  auto cat = CategoryInstance::vect(f);
  std::vector<BasisElt> basis;
  for (int i = 0; i < n; ++i)
    basis.push_back({"a" + std::to_string(i), cat.grading.zero()});
  return abelian_lie(make_object(cat, std::move(basis)));
}

// Two-term abelian dg example: d(v1) = v0, window wide enough for triple
// tensors of U_3.
inline LieObject dg_two_term(FieldTag f = FieldTag::rationals()) {
  auto cat = CategoryInstance::chain(f, 0, 12);
  return make_lie_with_diff(cat, {{"v0", Degree({0})}, {"v1", Degree({1})}}, {{1, 0}}, {});
}

// Loday-Pirashvili module example: g = span{t, w} with [t,w] = w acting on
// M = span{m} by m.t = -m, with structure map f(m) = w.
inline LieObject lp_module(FieldTag f = FieldTag::rationals()) {
  auto cat = CategoryInstance::lp(f);
  std::vector<BasisElt> basis = {{"t", Degree({0})}, {"w", Degree({0})}, {"m", Degree({1})}};
  SpMat d(3, 3, f);
  d.add_entry(1, 2, Scalar::one(f));  // f(m) = w
  ObjPtr c = make_object(cat, std::move(basis), std::move(d));
  ObjPtr sq = tensor_objects(c, c);
  auto ti = detail::tensor_index(*c, *c);
  SpMat bm(3, sq->dim(), f);
  auto one = Scalar::one(f);
  bm.add_entry(1, ti.at(0, 1), one);   // [t,w] = w
  bm.add_entry(1, ti.at(1, 0), -one);  // [w,t] = -w
  bm.add_entry(2, ti.at(2, 0), -one);  // m.t = [m,t] = -m
  bm.add_entry(2, ti.at(0, 2), one);   // [t,m] = m
  return LieObject(c, Morphism(sq, c, cat.grading.zero(), std::move(bm)));
}

struct MulEntry {
  int i, j, k;
  long c;
};

/// Monoid from structure constants; index 0 is taken as the unit if
/// unit_products is true (then 1*x = x*1 = x entries are filled in).
inline MonoidObject make_monoid(const CategoryInstance& cat, std::vector<BasisElt> basis,
                                const std::vector<MulEntry>& entries, bool unit_products = true) {
  ObjPtr c = make_object(cat, std::move(basis));
  ObjPtr sq = tensor_objects(c, c);
  auto ti = detail::tensor_index(*c, *c);
  SpMat mm(c->dim(), sq->dim(), cat.field);
  if (unit_products) {
    for (int i = 0; i < c->dim(); ++i) {
      mm.add_entry(i, ti.at(0, i), Scalar::one(cat.field));
      if (i != 0) mm.add_entry(i, ti.at(i, 0), Scalar::one(cat.field));
    }
  }
  for (const auto& e : entries)
    mm.add_entry(e.k, ti.at(e.i, e.j), Scalar::from_int(cat.field, e.c));
  SpMat um(c->dim(), 1, cat.field);
  um.add_entry(0, 0, Scalar::one(cat.field));
  return MonoidObject(c, Morphism(sq, c, cat.grading.zero(), std::move(mm)),
                      Morphism(unit_object(cat), c, cat.grading.zero(), std::move(um)));
}

// K[x]/x^2: basis (1, x).
inline MonoidObject dual_numbers(FieldTag f) {
  auto cat = CategoryInstance::vect(f);
  Degree z = cat.grading.zero();
  return make_monoid(cat, {{"one", z}, {"x", z}}, {});
}

// K[n]/n^3 realized by the 3x3 upper-triangular shift: basis (1, n, n2).
inline MonoidObject jordan3_monoid(FieldTag f) {
  auto cat = CategoryInstance::vect(f);
  Degree z = cat.grading.zero();
  return make_monoid(cat, {{"one", z}, {"n", z}, {"n2", z}}, {{1, 1, 2, 1}});
}

// Ground field as a one-dimensional monoid.
inline MonoidObject ground_monoid(FieldTag f) {
  auto cat = CategoryInstance::vect(f);
  return make_monoid(cat, {{"one", cat.grading.zero()}}, {});
}

/// Independent oracle: number of ordered monomials of length <= d in n_even
/// symmetric and n_odd exterior generators.
inline long pbw_count(int n_even, int n_odd, int d) {
  auto binom = [](long n, long k) {
    if (k == 0) return 1L;  // C(n, 0) = 1 even for n = -1 (empty monomial)
    if (k < 0 || k > n) return 0L;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  long total = 0;
  for (int k = 0; k <= d; ++k)
    for (int j = 0; j <= k; ++j)
      total += binom(n_odd, j) * binom(n_even + (k - j) - 1, k - j);
  return total;
}

/// Random homogeneous morphism of a random degree drawn from the degree
/// differences actually present between the two bases.
inline Morphism random_homogeneous(Rng& rng, const ObjPtr& src, const ObjPtr& tgt) {
  const auto& cat = src->cat();
  std::vector<Degree> candidates;
  for (int i = 0; i < tgt->dim(); ++i)
    for (int j = 0; j < src->dim(); ++j) {
      Degree d = cat.grading.add(tgt->degree(i), cat.grading.neg(src->degree(j)));
      bool seen = false;
      for (const auto& c : candidates)
        if (c == d) { seen = true; break; }
      if (!seen) candidates.push_back(d);
    }
  if (candidates.empty()) return Morphism::zero0(src, tgt);
  Degree deg = candidates[size_t(rng.below(candidates.size()))];
  SpMat m(tgt->dim(), src->dim(), cat.field);
  for (int j = 0; j < src->dim(); ++j)
    for (int i = 0; i < tgt->dim(); ++i)
      if (tgt->degree(i) == cat.grading.add(src->degree(j), deg))
        m.add_entry(i, j, rng.scalar(cat.field));
  return Morphism(src, tgt, deg, std::move(m));
}

/// Random object with dims <= 3 and degrees drawn from the given pool.
inline ObjPtr random_object(Rng& rng, const CategoryInstance& cat,
                            const std::vector<Degree>& degree_pool, const std::string& prefix) {
  int n = 1 + int(rng.below(3));
  std::vector<BasisElt> basis;
  for (int i = 0; i < n; ++i)
    basis.push_back({prefix + std::to_string(i),
                     degree_pool[size_t(rng.below(degree_pool.size()))]});
  return make_object(cat, std::move(basis));
}

inline Vec scalar_vec(FieldTag f, std::initializer_list<long> vals) {
  Vec v;
  for (long x : vals) v.push_back(Scalar::from_int(f, x));
  return v;
}

/// Lie action with prescribed operator matrices per actor basis element.
inline LieAction action_from_ops(const LieObject& b, const ObjPtr& x,
                                 const std::vector<SpMat>& ops) {
  ObjPtr src = tensor_objects(b.carrier, x);
  auto ti = detail::tensor_index(*b.carrier, *x);
  SpMat m(x->dim(), src->dim(), b.cat().field);
  for (int i = 0; i < b.carrier->dim(); ++i)
    for (int j = 0; j < x->dim(); ++j) {
      int q = ti.at(i, j);
      if (q < 0) continue;
      for (const auto& [r, c] : ops[size_t(i)].col(j)) m.add_entry(r, q, c);
    }
  return LieAction(b, x, Morphism(src, x, b.cat().grading.zero(), std::move(m)));
}

inline SpMat shift_matrix(FieldTag f, int n) {
  SpMat m(n, n, f);
  for (int i = 0; i + 1 < n; ++i) m.add_entry(i + 1, i, Scalar::one(f));
  return m;
}

/// One sampled instance of the graded interchange law
/// (f' (x) g') o (f (x) g) = eps(deg g', deg f) (f'f (x) g'g).
inline bool tensor_functoriality_sample(Rng& rng, const CategoryInstance& cat,
                                        const std::vector<Degree>& pool) {
  ObjPtr x = random_object(rng, cat, pool, "x");
  ObjPtr y = random_object(rng, cat, pool, "y");
  ObjPtr z = random_object(rng, cat, pool, "z");
  ObjPtr u = random_object(rng, cat, pool, "u");
  ObjPtr v = random_object(rng, cat, pool, "v");
  ObjPtr w = random_object(rng, cat, pool, "w");
  Morphism f = random_homogeneous(rng, x, y), fp = random_homogeneous(rng, y, z);
  Morphism g = random_homogeneous(rng, u, v), gp = random_homogeneous(rng, v, w);
  Morphism lhs = compose(tensor_morphisms(fp, gp), tensor_morphisms(f, g));
  Scalar sign = cat.grading.eps(cat.field, gp.degree(), f.degree());
  Morphism rhs = tensor_morphisms(compose(fp, f), compose(gp, g)).scaled(sign);
  return lhs.mat() == rhs.mat();
}

/// One sampled instance of sigma (f (x) g) = eps(deg f, deg g) (g (x) f) sigma.
inline bool sigma_naturality_sample(Rng& rng, const CategoryInstance& cat,
                                    const std::vector<Degree>& pool) {
  ObjPtr x = random_object(rng, cat, pool, "x");
  ObjPtr y = random_object(rng, cat, pool, "y");
  ObjPtr u = random_object(rng, cat, pool, "u");
  ObjPtr v = random_object(rng, cat, pool, "v");
  Morphism f = random_homogeneous(rng, x, y);
  Morphism g = random_homogeneous(rng, u, v);
  Morphism lhs = compose(symmetry(y, v), tensor_morphisms(f, g));
  Scalar sign = cat.grading.eps(cat.field, f.degree(), g.degree());
  Morphism rhs = compose(tensor_morphisms(g, f), symmetry(x, u)).scaled(sign);
  return lhs.mat() == rhs.mat();
}

/// sigma_{Y,X} sigma_{X,Y} = id on sampled objects.
inline bool sigma_involution_sample(Rng& rng, const CategoryInstance& cat,
                                    const std::vector<Degree>& pool) {
  ObjPtr x = random_object(rng, cat, pool, "x");
  ObjPtr y = random_object(rng, cat, pool, "y");
  Morphism s = symmetry(x, y);
  Morphism back = symmetry(y, x);
  return compose(back, s) == Morphism::identity(tensor_objects(x, y));
}

/// Seeded generator of valid equivariant Lie objects over Vect and Super.
/// Draws from constructive families (zero actions, adjoint actions,
/// derivations, nilpotent representations on abelian carriers) so every
/// sample satisfies the action and equivariance laws exactly.
inline EquivariantLieObject random_equivariant(Rng& rng, bool allow_super) {
  FieldTag q = FieldTag::rationals();
  int pick = int(rng.below(allow_super ? 6 : 4));
  switch (pick) {
    case 0: {  // adjoint action of a classical algebra
      LieObject b = (rng.below(2) == 0) ? sl2(q) : heisenberg(q);
      return EquivariantLieObject(b, LieAction(b, b.carrier, b.bracket));
    }
    case 1: {  // zero action on sl2
      LieObject b = (rng.below(2) == 0) ? abelian_n(2) : affine2(q);
      LieObject x = sl2(q);
      return EquivariantLieObject(
          x, LieAction(b, x.carrier,
                       Morphism::zero0(tensor_objects(b.carrier, x.carrier), x.carrier)));
    }
    case 2: {  // inner derivation of sl2 along a random element
      LieObject b = abelian_n(1);
      LieObject x = sl2(q);
      auto ti = detail::tensor_index(*x.carrier, *x.carrier);
      SpMat op(3, 3, q);
      Vec w(3, Scalar::zero(q));
      for (int i = 0; i < 3; ++i) w[size_t(i)] = rng.scalar(q);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          if (w[size_t(i)].is_zero()) continue;
          for (const auto& [r, c] : x.bracket.mat().col(ti.at(i, j)))
            op.add_entry(r, j, w[size_t(i)] * c);
        }
      return EquivariantLieObject(x, action_from_ops(b, x.carrier, {op}));
    }
    case 3: {  // heisenberg acting through its standard nilpotent rep
      LieObject b = heisenberg(q);
      auto cat = b.cat();
      ObjPtr x = make_object(cat, {{"m0", Degree{}}, {"m1", Degree{}}, {"m2", Degree{}}});
      SpMat tx(3, 3, q), ty(3, 3, q), tz(3, 3, q);
      tx.add_entry(0, 1, Scalar::one(q));
      ty.add_entry(1, 2, Scalar::one(q));
      tz.add_entry(0, 2, Scalar::one(q));
      return EquivariantLieObject(abelian_lie(x), action_from_ops(b, x, {tx, ty, tz}));
    }
    case 4: {  // super: even generator acting on a graded abelian carrier
      auto cat = CategoryInstance::super_cat(q);
      LieObject b = make_lie(cat, {{"t", Degree({0})}}, {});
      ObjPtr x = random_object(rng, cat, {Degree({0}), Degree({1})}, "x");
      SpMat op(x->dim(), x->dim(), q);
      for (int i = 0; i < x->dim(); ++i)
        for (int j = 0; j < x->dim(); ++j)
          if (x->degree(i) == x->degree(j)) op.add_entry(i, j, rng.scalar(q));
      return EquivariantLieObject(abelian_lie(x), action_from_ops(b, x, {op}));
    }
    default: {  // super: odd generator with a square-zero odd operator
      auto cat = CategoryInstance::super_cat(q);
      LieObject b = make_lie(cat, {{"tau", Degree({1})}}, {});
      ObjPtr x = make_object(cat, {{"m", Degree({0})}, {"n", Degree({1})}});
      SpMat op(2, 2, q);
      op.add_entry(1, 0, rng.scalar(q));  // maps the even line into the odd one
      return EquivariantLieObject(abelian_lie(x), action_from_ops(b, x, {op}));
    }
  }
}

inline std::vector<Degree> degree_pool(const CategoryInstance& cat) {
  switch (cat.tag) {
    case CategoryTag::vect:
      return {cat.grading.zero()};
    case CategoryTag::super:
      return {Degree({0}), Degree({1})};
    case CategoryTag::colour:
      return {Degree({0, 0}), Degree({1, 0}), Degree({0, 1}), Degree({1, 1})};
    case CategoryTag::chain: {
      std::vector<Degree> p;
      for (int d = std::max(cat.chain_min, -2); d <= std::min(cat.chain_max, 3); ++d)
        p.push_back(Degree({d}));
      return p;
    }
    case CategoryTag::lp:
      return {Degree({0}), Degree({1})};
  }
  return {cat.grading.zero()};
}

}  // namespace lt
