#pragma once

#include "actions.hpp"
#include "rng.hpp"

namespace liecat {

/// A point over B in the category of Lie objects: a split epimorphism
/// p: A -> B with section s, both Lie morphisms, p s = id.
struct Point {
  LieObject total;  // A
  LieObject base;   // B
  Morphism p;       // A -> B
  Morphism s;       // B -> A

  Point(LieObject a, LieObject b, Morphism proj, Morphism sect)
      : total(std::move(a)), base(std::move(b)), p(std::move(proj)), s(std::move(sect)) {
    if (!same_object(p.src(), *total.carrier) || !same_object(p.tgt(), *base.carrier) ||
        !same_object(s.src(), *base.carrier) || !same_object(s.tgt(), *total.carrier))
      throw ShapeError("point maps have wrong endpoints");
  }
};

inline CheckReport check_point(const Point& pt) {
  CheckReport rep;
  rep.subject = "point";
  {
    LawResult l{"section"};
    l.pass = compose(pt.p, pt.s) == Morphism::identity(pt.base.carrier);
    rep.laws.push_back(std::move(l));
  }
  {
    LawResult l{"p-lie-morphism"};
    l.pass = is_lie_morphism(pt.p, pt.total, pt.base);
    rep.laws.push_back(std::move(l));
  }
  {
    LawResult l{"s-lie-morphism"};
    l.pass = is_lie_morphism(pt.s, pt.base, pt.total);
    rep.laws.push_back(std::move(l));
  }
  return rep;
}

struct KernelData {
  ObjPtr carrier;      // abstract kernel object, basis k0, k1, ...
  Morphism inclusion;  // kernel -> A
  LieObject lie;       // restricted bracket
};

/// Kernel of p with the bracket restricted from the total object.
inline KernelData kernel_functor(const Point& pt) {
  const auto& cat = pt.total.cat();
  std::vector<Vec> ker = kernel_basis(pt.p.mat().dense());
  int kd = int(ker.size());
  const ObjPtr& a = pt.total.carrier;

  std::vector<BasisElt> basis;
  SpMat inc(a->dim(), kd, cat.field);
  for (int k = 0; k < kd; ++k) {
    Degree deg = cat.grading.zero();
    for (int i = 0; i < a->dim(); ++i)
      if (!ker[size_t(k)][size_t(i)].is_zero()) { deg = a->degree(i); break; }
    basis.push_back({"k" + std::to_string(k), deg});
    for (int i = 0; i < a->dim(); ++i)
      if (!ker[size_t(k)][size_t(i)].is_zero()) inc.add_entry(i, k, ker[size_t(k)][size_t(i)]);
  }
  std::optional<SpMat> diff;
  Matrix incd = inc.dense();
  if (cat.has_differential()) {
    SpMat dm(kd, kd, cat.field);
    for (int k = 0; k < kd; ++k) {
      auto sol = solve(incd, a->differential().apply(ker[size_t(k)]));
      if (!sol) throw ShapeError("kernel is not stable under the differential");
      for (int i = 0; i < kd; ++i)
        if (!(*sol)[size_t(i)].is_zero()) dm.add_entry(i, k, (*sol)[size_t(i)]);
    }
    diff = std::move(dm);
  }
  ObjPtr sub = make_object(cat, std::move(basis), std::move(diff));
  Morphism inclusion(sub, a, cat.grading.zero(), std::move(inc));

  ObjPtr ss = tensor_objects(sub, sub);
  Morphism big = compose(pt.total.bracket, tensor_morphisms(inclusion, inclusion));
  SpMat bm(kd, ss->dim(), cat.field);
  for (int q = 0; q < ss->dim(); ++q) {
    auto sol = solve(incd, big.mat().column_vec(q));
    if (!sol) throw ShapeError("kernel is not closed under the bracket");
    for (int k = 0; k < kd; ++k)
      if (!(*sol)[size_t(k)].is_zero()) bm.add_entry(k, q, (*sol)[size_t(k)]);
  }
  LieObject lie(sub, Morphism(ss, sub, cat.grading.zero(), std::move(bm)));
  return KernelData{sub, std::move(inclusion), std::move(lie)};
}

/// The retraction l: A -> Ker with k l = id - s p.
inline Morphism point_retraction(const Point& pt, const KernelData& ker) {
  Morphism defect = Morphism::identity(pt.total.carrier) - compose(pt.s, pt.p);
  Matrix kd = ker.inclusion.mat().dense();
  SpMat lm(ker.carrier->dim(), pt.total.carrier->dim(), pt.total.cat().field);
  for (int j = 0; j < pt.total.carrier->dim(); ++j) {
    auto sol = solve(kd, defect.mat().column_vec(j));
    if (!sol) throw ShapeError("id - s p does not land in the kernel; not a point");
    for (int i = 0; i < ker.carrier->dim(); ++i)
      if (!(*sol)[size_t(i)].is_zero()) lm.add_entry(i, j, (*sol)[size_t(i)]);
  }
  return Morphism(pt.total.carrier, ker.carrier, pt.total.cat().grading.zero(), std::move(lm));
}

/// W: a point determines the kernel with the unique action theta satisfying
/// k theta = b_A (s (x) k).
inline EquivariantLieObject point_to_action(const Point& pt) {
  KernelData ker = kernel_functor(pt);
  const auto& cat = pt.total.cat();
  Morphism rhs = compose(pt.total.bracket, tensor_morphisms(pt.s, ker.inclusion));
  Matrix kd = ker.inclusion.mat().dense();
  ObjPtr src = tensor_objects(pt.base.carrier, ker.carrier);
  SpMat th(ker.carrier->dim(), src->dim(), cat.field);
  for (int q = 0; q < src->dim(); ++q) {
    auto sol = solve(kd, rhs.mat().column_vec(q));
    if (!sol) throw ShapeError("b_A (s (x) k) does not land in the kernel");
    for (int i = 0; i < ker.carrier->dim(); ++i)
      if (!(*sol)[size_t(i)].is_zero()) th.add_entry(i, q, (*sol)[size_t(i)]);
  }
  LieAction theta(pt.base, ker.carrier,
                  Morphism(src, ker.carrier, cat.grading.zero(), std::move(th)));
  return EquivariantLieObject(ker.lie, std::move(theta));
}

struct SemidirectData {
  Point point;
  BiproductData sum;  // injections/projections of B (+) X
};

/// W^{-1}: the semidirect product B |x X of an equivariant Lie object, the
/// bracket assembled blockwise from b_B, theta, -theta sigma and b_X.
inline SemidirectData action_to_point_data(const EquivariantLieObject& e) {
  const LieObject& b = e.base();
  const LieObject& x = e.x;
  BiproductData sum = direct_sum(b.carrier, x.carrier);
  const ObjPtr& a = sum.obj;

  Morphism bb = compose(sum.i1, compose(b.bracket, tensor_morphisms(sum.p1, sum.p1)));
  Morphism bx = compose(sum.i2, compose(x.bracket, tensor_morphisms(sum.p2, sum.p2)));
  Morphism mixed = compose(sum.i2, compose(e.theta.act, tensor_morphisms(sum.p1, sum.p2)));
  Morphism swapped = compose(sum.i2,
                             compose(e.theta.act,
                                     compose(tensor_morphisms(sum.p1, sum.p2),
                                             symmetry(a, a))));
  Morphism bracket = bb + bx + mixed - swapped;
  LieObject total(a, std::move(bracket));
  Point pt(std::move(total), b, sum.p1, sum.i1);
  return SemidirectData{std::move(pt), std::move(sum)};
}

inline Point action_to_point(const EquivariantLieObject& e) {
  return action_to_point_data(e).point;
}

/// Fullness of W: lifts a morphism f between kernel actions to the point
/// morphism g = k' f l + s' p.
inline Morphism lift_morphism(const Point& p1, const Point& p2, const Morphism& f,
                              const KernelData& k1, const KernelData& k2) {
  if (!same_object(f.src(), *k1.carrier) || !same_object(f.tgt(), *k2.carrier))
    throw ShapeError("lift: morphism does not connect the two kernels");
  Morphism l = point_retraction(p1, k1);
  return compose(k2.inclusion, compose(f, l)) + compose(p2.s, p1.p);
}

inline Morphism lift_morphism(const Point& p1, const Point& p2, const Morphism& f) {
  return lift_morphism(p1, p2, f, kernel_functor(p1), kernel_functor(p2));
}

/// Is g a morphism of points (p' g = p, g s = s', Lie morphism)?
inline CheckReport check_point_morphism(const Morphism& g, const Point& p1, const Point& p2) {
  CheckReport rep;
  rep.subject = "point-morphism";
  rep.laws.push_back({"over-base", compose(p2.p, g) == p1.p, {}, false, ""});
  rep.laws.push_back({"under-section", compose(g, p1.s) == p2.s, {}, false, ""});
  CheckReport lm = check_lie_morphism(g, p1.total, p2.total);
  for (auto& l : lm.laws) rep.laws.push_back(std::move(l));
  return rep;
}

/// The truncated algebraic exponent of X along B: the equivariant object
/// R = (Hom(U_d(B), X), convolution bracket, translation action) and its
/// point form B |x R.
struct ExponentObject {
  LieObject b, x;
  int bound;
  TruncatedUEA u;
  EquivariantLieObject r;
  SemidirectData form;
  Morphism eval_at_unit;  // R -> X

  const Point& point() const { return form.point; }
};

inline ExponentObject exponent(const LieObject& b, const LieObject& x, int d) {
  if (!b.cat().closed()) throw UnsupportedError("exponent requires a closed instance");
  if (d < 1) throw TruncationError("exponent truncation bound must be >= 1");
  TruncatedUEA u = uea(b, d);
  LieObject r_lie = convolution_lie(u.hopf, x);
  MonoidAction transl = exp_translation_action(u.mon(), x.carrier);
  LieAction theta = monoid_to_lie_action(MonoidAction(u.mon(), r_lie.carrier, transl.act), u);
  EquivariantLieObject r(r_lie, std::move(theta));
  SemidirectData form = action_to_point_data(r);

  // evaluation at the unit word: Hom(U, X) -> X
  const ObjPtr& h = r_lie.carrier;
  SpMat evm(x.carrier->dim(), h->dim(), b.cat().field);
  for (int k = 0; k < u.dim(); ++k)
    if (u.word_len[size_t(k)] == 0)
      for (int i = 0; i < x.carrier->dim(); ++i)
        evm.add_entry(i, k * x.carrier->dim() + i, Scalar::one(b.cat().field));
  Morphism eval(h, x.carrier, b.cat().grading.zero(), std::move(evm));
  return ExponentObject{b, x, d, std::move(u), std::move(r), std::move(form), std::move(eval)};
}

/// Row predicate marking the exact filtration window of R = Hom(U_d, X):
/// coordinates whose word can still absorb one letter.
inline std::function<bool(int)> exponent_row_guard(const ExponentObject& e) {
  int xd = e.x.carrier->dim();
  std::vector<int> lens = e.u.word_len;
  int bound = e.bound;
  return [xd, lens, bound](int row) { return lens[size_t(row / xd)] + 1 <= bound; };
}

/// Down transpose of the exponent adjunction: a point morphism
/// F: P -> B |x R restricts to h = ev_1 (R-component of F) k: Ker P -> X.
inline Morphism transpose_down(const ExponentObject& e, const Point&, const Morphism& f,
                               const KernelData& ker) {
  Morphism pi_r = e.form.sum.p2;
  return compose(e.eval_at_unit, compose(pi_r, compose(f, ker.inclusion)));
}
inline Morphism transpose_down(const ExponentObject& e, const Point& p, const Morphism& f) {
  return transpose_down(e, p, f, kernel_functor(p));
}

/// Up transpose: h: Ker P -> X induces f(x) = (w -> h(w . x)) into R and then
/// the point morphism g = lift(f). Requires the kernel action to be
/// nilpotent inside the bound.
inline Morphism transpose_up(const ExponentObject& e, const Point& p, const Morphism& h,
                             const KernelData& ker, const EquivariantLieObject& w) {
  if (!same_object(h.src(), *ker.carrier) || !same_object(h.tgt(), *e.x.carrier))
    throw ShapeError("transpose_up: map does not go Ker P -> X");
  auto bound = action_nilpotency_bound(w.theta, e.bound);
  if (!bound)
    throw TruncationError("kernel action is not nilpotent within the bound " +
                          std::to_string(e.bound));
  const auto& cat = e.b.cat();
  int xd = e.x.carrier->dim();
  int kd = ker.carrier->dim();
  std::vector<SpMat> ops;
  for (int i = 0; i < e.b.carrier->dim(); ++i) ops.push_back(w.theta.actor_operator(i));
  SpMat fm(e.r.x.carrier->dim(), kd, cat.field);
  for (size_t widx = 0; widx < e.u.words.size(); ++widx) {
    SpMat pw = SpMat::identity(kd, cat.field);
    const auto& word = e.u.words[widx];
    for (auto it = word.rbegin(); it != word.rend(); ++it) pw = ops[size_t(*it)] * pw;
    SpMat hw = h.mat() * pw;  // Ker -> X, the w-component of f
    for (int j = 0; j < kd; ++j)
      for (const auto& [i, c] : hw.col(j)) fm.add_entry(int(widx) * xd + i, j, c);
  }
  Morphism f(ker.carrier, e.r.x.carrier, cat.grading.zero(), std::move(fm));
  KernelData exp_ker = kernel_functor(e.point());
  // identify R with the kernel of the exponent point (i2 followed by l)
  Morphism into_kernel = compose(point_retraction(e.point(), exp_ker), e.form.sum.i2);
  return lift_morphism(p, e.point(), compose(into_kernel, f), ker, exp_ker);
}
inline Morphism transpose_up(const ExponentObject& e, const Point& p, const Morphism& h) {
  KernelData ker = kernel_functor(p);
  EquivariantLieObject w = point_to_action(p);
  return transpose_up(e, p, h, ker, w);
}

namespace detail {

/// Degree-zero cells (i, j) of candidate maps src -> tgt, in column-major
/// order; all structure-preserving maps live inside this grid.
inline std::vector<std::pair<int, int>> degree_zero_cells(const GradedObject& src,
                                                          const GradedObject& tgt) {
  std::vector<std::pair<int, int>> cells;
  for (int j = 0; j < src.dim(); ++j)
    for (int i = 0; i < tgt.dim(); ++i)
      if (src.degree(j) == tgt.degree(i)) cells.push_back({i, j});
  return cells;
}

inline SpMat cells_to_matrix(const std::vector<std::pair<int, int>>& cells, const Vec& coords,
                             int rows, int cols, FieldTag f) {
  SpMat m(rows, cols, f);
  for (size_t c = 0; c < cells.size(); ++c)
    if (!coords[c].is_zero()) m.add_entry(cells[c].first, cells[c].second, coords[c]);
  return m;
}

/// Exhausts the affine solution space of linear constraints over F_2 and
/// keeps the candidates passing the quadratic filter. The linear side is
/// given as an evaluation hook (it is linear in the candidate by
/// construction) together with its required constant value.
inline std::vector<SpMat> enumerate_f2(
    const GradedObject& src, const GradedObject& tgt,
    const std::function<Vec(const SpMat&)>& linear_part, const Vec& linear_rhs,
    const std::function<bool(const SpMat&)>& filter, int max_free = 24) {
  FieldTag f = FieldTag::prime(2);
  auto cells = degree_zero_cells(src, tgt);
  int nc = int(cells.size());
  int rows = int(linear_rhs.size());

  Matrix sys(rows, nc, f);
  for (int c = 0; c < nc; ++c) {
    SpMat e(tgt.dim(), src.dim(), f);
    e.add_entry(cells[size_t(c)].first, cells[size_t(c)].second, Scalar::one(f));
    Vec img = linear_part(e);
    for (int r = 0; r < rows; ++r) sys.at(r, c) = img[size_t(r)];
  }
  auto particular = solve(sys, linear_rhs);
  std::vector<SpMat> out;
  if (!particular) return out;
  auto free_dirs = kernel_basis(sys);
  if (int(free_dirs.size()) > max_free)
    throw ShapeError("enumeration size guard exceeded: " + std::to_string(free_dirs.size()) +
                     " free parameters");
  uint64_t combos = 1ull << free_dirs.size();
  for (uint64_t mask = 0; mask < combos; ++mask) {
    Vec coords = *particular;
    for (size_t b = 0; b < free_dirs.size(); ++b)
      if (mask & (1ull << b))
        for (int c = 0; c < nc; ++c) coords[size_t(c)] += free_dirs[b][size_t(c)];
    SpMat g = cells_to_matrix(cells, coords, tgt.dim(), src.dim(), f);
    if (filter(g)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace detail

/// All Lie morphisms src -> tgt over F_2, optionally post-filtered.
inline std::vector<Morphism> enumerate_lie_homs_f2(
    const LieObject& src, const LieObject& tgt,
    const std::function<bool(const Morphism&)>& extra = nullptr) {
  FieldTag f = FieldTag::prime(2);
  if (src.cat().field != f || tgt.cat().field != f)
    throw ShapeError("enumeration requires the field F_2");
  bool has_diff = src.cat().has_differential();
  int drows = has_diff ? tgt.dim() * src.dim() : 0;
  auto linear = [&](const SpMat& g) {
    Vec v(size_t(drows), Scalar::zero(f));
    if (has_diff) {
      SpMat defect = tgt.carrier->differential() * g - g * src.carrier->differential();
      for (int j = 0; j < src.dim(); ++j)
        for (const auto& [i, c] : defect.col(j)) v[size_t(i) * src.dim() + j] = c;
    }
    return v;
  };
  Vec rhs(size_t(drows), Scalar::zero(f));
  auto filter = [&](const SpMat& g) {
    Morphism m(src.carrier, tgt.carrier, src.cat().grading.zero(), g);
    Morphism defect = compose(m, src.bracket) - compose(tgt.bracket, tensor_morphisms(m, m));
    return defect.is_zero();
  };
  std::vector<Morphism> out;
  for (auto& g : detail::enumerate_f2(*src.carrier, *tgt.carrier, linear, rhs, filter)) {
    Morphism m(src.carrier, tgt.carrier, src.cat().grading.zero(), std::move(g));
    if (!extra || extra(m)) out.push_back(std::move(m));
  }
  return out;
}

/// All monoid morphisms src -> tgt over F_2.
inline std::vector<Morphism> enumerate_monoid_homs_f2(const MonoidObject& src,
                                                      const MonoidObject& tgt) {
  FieldTag f = FieldTag::prime(2);
  if (src.cat().field != f) throw ShapeError("enumeration requires the field F_2");
  // linear: g u = u'
  auto linear = [&](const SpMat& g) {
    Vec img = (g * src.u.mat()).column_vec(0);
    return img;
  };
  Vec rhs = tgt.u.mat().column_vec(0);
  auto filter = [&](const SpMat& g) {
    Morphism m(src.carrier, tgt.carrier, src.cat().grading.zero(), g);
    Morphism defect = compose(m, src.m) - compose(tgt.m, tensor_morphisms(m, m));
    return defect.is_zero();
  };
  std::vector<Morphism> out;
  for (auto& g : detail::enumerate_f2(*src.carrier, *tgt.carrier, linear, rhs, filter))
    out.push_back(Morphism(src.carrier, tgt.carrier, src.cat().grading.zero(), std::move(g)));
  return out;
}

/// All point morphisms src -> tgt over F_2 (maps over the base, under the
/// sections, preserving brackets).
inline std::vector<Morphism> enumerate_point_homs_f2(const Point& src, const Point& tgt) {
  FieldTag f = FieldTag::prime(2);
  if (src.total.cat().field != f) throw ShapeError("enumeration requires the field F_2");
  if (!same_object(*src.base.carrier, *tgt.base.carrier))
    throw ShapeError("points are not over a common base");
  int bd = src.base.carrier->dim();
  int ad = src.total.dim();
  auto linear = [&](const SpMat& g) {
    SpMat over = tgt.p.mat() * g;          // must equal src.p
    SpMat under = g * src.s.mat();         // must equal tgt.s
    Vec v;
    v.reserve(size_t(bd) * ad + size_t(tgt.total.dim()) * bd);
    for (int j = 0; j < ad; ++j)
      for (int i = 0; i < bd; ++i) v.push_back(over.entry(i, j));
    for (int j = 0; j < bd; ++j)
      for (int i = 0; i < tgt.total.dim(); ++i) v.push_back(under.entry(i, j));
    return v;
  };
  Vec rhs;
  for (int j = 0; j < ad; ++j)
    for (int i = 0; i < bd; ++i) rhs.push_back(src.p.mat().entry(i, j));
  for (int j = 0; j < bd; ++j)
    for (int i = 0; i < tgt.total.dim(); ++i) rhs.push_back(tgt.s.mat().entry(i, j));
  auto filter = [&](const SpMat& g) {
    Morphism m(src.total.carrier, tgt.total.carrier, src.total.cat().grading.zero(), g);
    Morphism defect =
        compose(m, src.total.bracket) - compose(tgt.total.bracket, tensor_morphisms(m, m));
    return defect.is_zero();
  };
  std::vector<Morphism> out;
  for (auto& g : detail::enumerate_f2(*src.total.carrier, *tgt.total.carrier, linear, rhs, filter))
    out.push_back(
        Morphism(src.total.carrier, tgt.total.carrier, src.total.cat().grading.zero(),
                 std::move(g)));
  return out;
}

/// Seeded generator of Lie morphisms src -> tgt. Candidates come from
/// constructive families (zero, rank-one maps, dense maps, exponentials of
/// nilpotent inner derivations) and are filtered against the morphism law,
/// so everything returned is exact and valid.
inline std::vector<Morphism> sample_lie_morphisms(Rng& rng, const LieObject& src,
                                                  const LieObject& tgt, int want) {
  FieldTag f = src.cat().field;
  std::vector<Morphism> out;
  auto push_if_valid = [&](Morphism m) {
    if (int(out.size()) >= want) return;
    if (is_lie_morphism(m, src, tgt)) out.push_back(std::move(m));
  };
  push_if_valid(Morphism::zero0(src.carrier, tgt.carrier));

  bool same_shape = same_object(*src.carrier, *tgt.carrier) &&
                    src.bracket.mat() == tgt.bracket.mat();
  int guard = 0;
  while (int(out.size()) < want && guard++ < 40 * want) {
    int family = int(rng.below(same_shape ? 3 : 2));
    if (family == 0) {
      // rank one: x -> phi(x) v
      SpMat m(tgt.dim(), src.dim(), f);
      int row = int(rng.below(uint64_t(tgt.dim())));
      for (int j = 0; j < src.dim(); ++j)
        if (src.carrier->degree(j) == tgt.carrier->degree(row))
          m.add_entry(row, j, rng.scalar(f));
      push_if_valid(Morphism(src.carrier, tgt.carrier, src.cat().grading.zero(), m));
    } else if (family == 1) {
      // dense degree-0 candidate
      SpMat m(tgt.dim(), src.dim(), f);
      for (int j = 0; j < src.dim(); ++j)
        for (int i = 0; i < tgt.dim(); ++i)
          if (src.carrier->degree(j) == tgt.carrier->degree(i)) m.add_entry(i, j, rng.scalar(f));
      push_if_valid(Morphism(src.carrier, tgt.carrier, src.cat().grading.zero(), m));
    } else {
      // exp(ad_w) for a nilpotent inner derivation: always an automorphism
      auto ti = detail::tensor_index(*src.carrier, *src.carrier);
      SpMat ad(src.dim(), src.dim(), f);
      int w = int(rng.below(uint64_t(src.dim())));
      Scalar t = rng.scalar(f);
      for (int j = 0; j < src.dim(); ++j) {
        int q = ti.at(w, j);
        if (q < 0) continue;
        for (const auto& [r, c] : src.bracket.mat().col(q)) ad.add_entry(r, j, t * c);
      }
      SpMat power = SpMat::identity(src.dim(), f);
      SpMat total(src.dim(), src.dim(), f);
      Scalar fact = Scalar::one(f);
      bool nil = false;
      for (int k = 0; k <= src.dim(); ++k) {
        if (k > 0) {
          power = power * ad;
          fact = fact * Scalar::from_int(f, k).inverse();
        }
        if (power.is_zero()) { nil = true; break; }
        total = total + power.scaled(fact);
      }
      if (nil)
        push_if_valid(Morphism(src.carrier, tgt.carrier, src.cat().grading.zero(), total));
    }
  }
  return out;
}

struct AdjunctionOptions {
  int bound = 2;
  bool enumerate_f2 = false;
  uint64_t seed = kDefaultSeed;
  int samples = 20;
};

struct AdjunctionResult {
  CheckReport report;
  long point_hom_count = -1;
  long lie_hom_count = -1;
  int sampled = 0;
};

/// Verifies the adjunction Ker_B -| exponent at the given truncation: the
/// two transposes are mutually inverse on sampled (or exhaustively
/// enumerated) morphisms, with naturality squares in both arguments.
inline AdjunctionResult adjunction_check(const Point& p, const LieObject& x,
                                         const AdjunctionOptions& opts) {
  AdjunctionResult res;
  res.report.subject = "adjunction";
  ExponentObject e = exponent(p.base, x, opts.bound);
  KernelData ker = kernel_functor(p);
  EquivariantLieObject w = point_to_action(p);
  auto bound = action_nilpotency_bound(w.theta, opts.bound);
  if (!bound)
    throw TruncationError("kernel action is not nilpotent within the bound " +
                          std::to_string(opts.bound));
  Rng rng(opts.seed);

  std::vector<Morphism> hs = sample_lie_morphisms(rng, ker.lie, x, opts.samples);
  res.sampled = int(hs.size());
  {
    LawResult l{"transpose-down-up-identity"};
    for (const auto& h : hs) {
      Morphism g = transpose_up(e, p, h, ker, w);
      if (transpose_down(e, p, g, ker).mat() != h.mat()) {
        l.pass = false;
        break;
      }
    }
    res.report.laws.push_back(std::move(l));
  }
  {
    LawResult l{"transpose-up-is-point-morphism"};
    for (const auto& h : hs) {
      Morphism g = transpose_up(e, p, h, ker, w);
      if (!check_point_morphism(g, p, e.point()).pass()) {
        l.pass = false;
        break;
      }
    }
    res.report.laws.push_back(std::move(l));
  }
  {
    LawResult l{"transpose-up-down-identity"};
    for (const auto& h : hs) {
      Morphism g = transpose_up(e, p, h, ker, w);
      Morphism g2 = transpose_up(e, p, transpose_down(e, p, g, ker), ker, w);
      if (g2.mat() != g.mat()) {
        l.pass = false;
        break;
      }
    }
    res.report.laws.push_back(std::move(l));
  }
  {
    // naturality in the point: gamma: P -> P from lifted equivariant kernel
    // endomorphisms; down(F o gamma) = down(F) o Ker(gamma)
    LawResult l{"naturality-in-the-point"};
    std::vector<Morphism> gammas;
    for (const auto& fk : sample_lie_morphisms(rng, ker.lie, ker.lie, 6)) {
      // keep the equivariant ones
      Morphism lhs = compose(fk, w.theta.act);
      Morphism rhs = compose(w.theta.act,
                             tensor_morphisms(Morphism::identity(p.base.carrier), fk));
      if (lhs.mat() == rhs.mat()) gammas.push_back(lift_morphism(p, p, fk, ker, ker));
    }
    for (const auto& h : hs) {
      Morphism g = transpose_up(e, p, h, ker, w);
      for (const auto& gamma : gammas) {
        Morphism left = transpose_down(e, p, compose(g, gamma), ker);
        Morphism kg = compose(point_retraction(p, ker), compose(gamma, ker.inclusion));
        Morphism right = compose(transpose_down(e, p, g, ker), kg);
        if (left.mat() != right.mat()) {
          l.pass = false;
          break;
        }
      }
      if (!l.pass) break;
    }
    res.report.laws.push_back(std::move(l));
  }
  {
    // naturality in the target: xi: X -> X'; down(Exp(xi) o F) = xi o down(F)
    LawResult l{"naturality-in-the-target"};
    std::vector<Morphism> xis = sample_lie_morphisms(rng, x, x, 4);
    for (const auto& xi : xis) {
      Morphism hx = hom_postcompose(e.u.carrier(), xi);
      // Exp(xi) = id_B (+) Hom(U, xi) as a point morphism
      Morphism expxi = compose(e.form.sum.i1, e.form.sum.p1) +
                       compose(e.form.sum.i2, compose(hx, e.form.sum.p2));
      if (!check_point_morphism(expxi, e.point(), e.point()).pass()) {
        l.pass = false;
        l.note = "Exp(xi) failed point-morphism validation";
        break;
      }
      for (const auto& h : hs) {
        Morphism g = transpose_up(e, p, h, ker, w);
        Morphism left = transpose_down(e, p, compose(expxi, g), ker);
        Morphism right = compose(xi, transpose_down(e, p, g, ker));
        if (left.mat() != right.mat()) {
          l.pass = false;
          break;
        }
      }
      if (!l.pass) break;
    }
    res.report.laws.push_back(std::move(l));
  }

  if (opts.enumerate_f2) {
    LawResult l{"hom-set-cardinalities-match"};
    auto point_homs = enumerate_point_homs_f2(p, e.point());
    auto lie_homs = enumerate_lie_homs_f2(ker.lie, x);
    res.point_hom_count = long(point_homs.size());
    res.lie_hom_count = long(lie_homs.size());
    l.pass = point_homs.size() == lie_homs.size();
    res.report.laws.push_back(std::move(l));

    LawResult lb{"transpose-down-is-a-bijection"};
    // down maps the enumerated point homs injectively onto the lie homs
    std::vector<SpMat> images;
    for (const auto& g : point_homs) {
      Morphism h = transpose_down(e, p, g, ker);
      for (const auto& seen : images)
        if (seen == h.mat()) { lb.pass = false; lb.note = "not injective"; }
      images.push_back(h.mat());
      bool found = false;
      for (const auto& hh : lie_homs)
        if (hh.mat() == h.mat()) { found = true; break; }
      if (!found) { lb.pass = false; lb.note = "image is not a lie morphism"; }
    }
    for (const auto& hh : lie_homs) {
      bool found = false;
      for (const auto& seen : images)
        if (seen == hh.mat()) { found = true; break; }
      if (!found) { lb.pass = false; lb.note = "not surjective"; }
    }
    res.report.laws.push_back(std::move(lb));
  }
  return res;
}

/// Nilpotency of the span of a family of carrier elements inside a monoid:
/// true when every (d+1)-fold product of elements of the span vanishes.
inline bool span_nilpotent_of_class(const MonoidObject& a, const std::vector<Vec>& gens, int d) {
  FieldTag f = a.cat().field;
  std::vector<Vec> layer;
  {
    EchelonSpan seed(a.dim(), f);
    for (const auto& g : gens)
      if (seed.add(g)) layer.push_back(g);
  }
  if (layer.empty()) return true;
  for (int k = 1; k <= d; ++k) {
    std::vector<Vec> next;
    EchelonSpan span(a.dim(), f);
    for (const auto& g : gens)
      for (const auto& m : layer) {
        Vec prod = a.mul_vec(g, m);
        if (span.add(prod)) next.push_back(prod);
      }
    layer = std::move(next);
    if (layer.empty()) return true;
  }
  return false;  // a nonzero (d+1)-fold product exists
}

}  // namespace liecat
