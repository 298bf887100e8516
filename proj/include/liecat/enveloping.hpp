#pragma once

#include <map>
#include <numeric>

#include "monoid.hpp"

namespace liecat {

/// Degree-truncated free monoid on an object: carrier (+)_{k<=d} X^{(x)k}
/// with concatenation, zero past the length bound. Words are enumerated by
/// length, then lexicographically in letter indices.
struct FreeMonoid {
  MonoidObject mon;
  int bound;
  std::vector<std::vector<int>> words;
  std::map<std::vector<int>, int> index;

  int word_index(const std::vector<int>& w) const {
    auto it = index.find(w);
    return it == index.end() ? -1 : it->second;
  }
};

inline FreeMonoid free_monoid_truncated(const ObjPtr& x, int d) {
  if (d < 0) throw TruncationError("free monoid bound must be >= 0");
  const auto& cat = x->cat();
  int n = x->dim();
  auto word_degree = [&](const std::vector<int>& w) {
    Degree deg = cat.grading.zero();
    for (int letter : w) deg = cat.grading.add(deg, x->degree(letter));
    return deg;
  };
  std::vector<std::vector<int>> words{{}};
  for (int len = 1; len <= d; ++len) {
    std::vector<int> w(size_t(len), 0);
    if (n == 0) break;
    while (true) {
      if (cat.degree_allowed(word_degree(w))) {
        words.push_back(w);
      } else if (cat.tensor_policy() == TensorPolicy::error_outside) {
        throw ShapeError("free-monoid word degree falls outside the chain window");
      }  // truncating instances silently drop the word, like their tensor
      int pos = len - 1;
      while (pos >= 0 && ++w[size_t(pos)] == n) {
        w[size_t(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
  }
  std::vector<BasisElt> basis;
  basis.reserve(words.size());
  for (const auto& w : words) {
    std::string name;
    Degree deg = cat.grading.zero();
    for (size_t i = 0; i < w.size(); ++i) {
      if (i) name += "*";
      name += x->name(w[i]);
      deg = cat.grading.add(deg, x->degree(w[i]));
    }
    if (w.empty()) name = "1";
    basis.push_back({std::move(name), std::move(deg)});
  }
  std::optional<SpMat> diff;
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < words.size(); ++i) index[words[i]] = int(i);
  if (cat.has_differential()) {
    // Leibniz over the letters with the instance sign on the prefix degree
    SpMat dm(int(words.size()), int(words.size()), cat.field);
    Degree minus_one = Degree({-1});
    for (size_t q = 0; q < words.size(); ++q) {
      const auto& w = words[q];
      Degree prefix = cat.grading.zero();
      for (size_t pos = 0; pos < w.size(); ++pos) {
        Scalar sg = cat.grading.eps(cat.field, minus_one, prefix);
        for (const auto& [to, c] : x->differential().col(w[pos])) {
          auto w2 = w;
          w2[pos] = to;
          auto it = index.find(w2);
          if (it != index.end()) dm.add_entry(it->second, int(q), sg * c);
        }
        prefix = cat.grading.add(prefix, x->degree(w[pos]));
      }
    }
    diff = std::move(dm);
  }
  ObjPtr carrier = make_object(cat, std::move(basis), std::move(diff));

  ObjPtr sq = tensor_objects(carrier, carrier);
  auto ti = detail::tensor_index(*carrier, *carrier);
  SpMat mm(carrier->dim(), sq->dim(), cat.field);
  for (size_t q = 0; q < ti.pairs.size(); ++q) {
    auto [a, b] = ti.pairs[q];
    if (int(words[size_t(a)].size() + words[size_t(b)].size()) > d) continue;
    std::vector<int> cat_word = words[size_t(a)];
    cat_word.insert(cat_word.end(), words[size_t(b)].begin(), words[size_t(b)].end());
    auto it = index.find(cat_word);
    if (it == index.end()) continue;  // degree-truncated word: the product is zero
    mm.add_entry(it->second, int(q), Scalar::one(cat.field));
  }
  SpMat um(carrier->dim(), 1, cat.field);
  um.add_entry(0, 0, Scalar::one(cat.field));
  Morphism m(sq, carrier, cat.grading.zero(), std::move(mm));
  Morphism u(unit_object(cat), carrier, cat.grading.zero(), std::move(um));
  return FreeMonoid{MonoidObject(carrier, std::move(m), std::move(u)), d, std::move(words),
                    std::move(index)};
}

/// The enveloping monoid of B, truncated at word length d: the free monoid
/// modulo the span of e (xy - eps yx - [x,y]) f over all basis pairs and all
/// framing words that fit inside the bound. Representatives are the echelon
/// survivors in graded-lexicographic word order (elimination prefers the
/// longest, lexicographically largest word), which reproduces the familiar
/// ordered-monomial basis over the rationals.
struct TruncatedUEA {
  LieObject b;
  int bound;
  BimonoidObject hopf;
  Morphism nu;    // B -> carrier, the universal morphism
  Morphism proj;  // F_d -> carrier
  Morphism sect;  // carrier -> F_d, picks representative words
  std::vector<int> word_len;
  std::vector<std::vector<int>> words;  // representative words
  FreeMonoid free_mon;

  const ObjPtr& carrier() const { return hopf.mon.carrier; }
  const MonoidObject& mon() const { return hopf.mon; }
  int dim() const { return carrier()->dim(); }
  FiltrationGuard guard() const { return {word_len, bound}; }

  int word_index(const std::vector<int>& w) const {
    for (size_t i = 0; i < words.size(); ++i)
      if (words[i] == w) return int(i);
    return -1;
  }
};

namespace detail {

inline Vec relator_vector(const FreeMonoid& f, const LieObject& b, const std::vector<int>& e,
                          int i, int j, const std::vector<int>& t) {
  const auto& cat = b.cat();
  Vec v(size_t(f.mon.dim()), Scalar::zero(cat.field));
  auto put = [&](std::vector<int> mid, const Scalar& c) {
    std::vector<int> w = e;
    w.insert(w.end(), mid.begin(), mid.end());
    w.insert(w.end(), t.begin(), t.end());
    int idx = f.word_index(w);
    if (idx >= 0) v[size_t(idx)] += c;  // dropped words contribute zero
  };
  put({i, j}, Scalar::one(cat.field));
  put({j, i}, -cat.grading.eps(cat.field, b.carrier->degree(i), b.carrier->degree(j)));
  auto ti = tensor_index(*b.carrier, *b.carrier);
  int q = ti.at(i, j);
  if (q >= 0)
    for (const auto& [k, c] : b.bracket.mat().col(q)) put({k}, -c);
  return v;
}

}  // namespace detail

inline TruncatedUEA uea(const LieObject& b, int d) {
  if (d < 1) throw TruncationError("enveloping truncation bound must be >= 1");
  const auto& cat = b.cat();
  FreeMonoid f = free_monoid_truncated(b.carrier, d);
  int n = b.carrier->dim();
  int fdim = f.mon.dim();

  // elimination priority: reversed enumeration = longest, lex-largest first
  std::vector<int> priority(size_t(fdim), 0);
  for (int i = 0; i < fdim; ++i) priority[size_t(i)] = fdim - 1 - i;
  EchelonSpan span(fdim, cat.field, priority);

  std::vector<Vec> generators;
  for (int len_e = 0; len_e + 2 <= d; ++len_e)
    for (int len_t = 0; len_e + 2 + len_t <= d; ++len_t) {
      // enumerate framing words of the given lengths
      std::vector<std::vector<int>> lefts, rights;
      for (const auto& w : f.words) {
        if (int(w.size()) == len_e) lefts.push_back(w);
        if (int(w.size()) == len_t) rights.push_back(w);
      }
      for (const auto& e : lefts)
        for (const auto& t : rights)
          for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
              Vec v = detail::relator_vector(f, b, e, i, j, t);
              generators.push_back(v);
              span.add(std::move(v));
            }
    }

  if (cat.has_differential())
    for (const auto& g : generators)
      if (!span.contains(f.mon.carrier->differential().apply(g)))
        throw ShapeError("relation span is not stable under the differential");

  std::vector<int> reps = span.representatives();
  int udim = int(reps.size());
  std::vector<int> pos(size_t(fdim), -1);
  for (int k = 0; k < udim; ++k) pos[size_t(reps[size_t(k)])] = k;

  std::vector<BasisElt> basis;
  std::vector<int> word_len;
  std::vector<std::vector<int>> words;
  for (int r : reps) {
    basis.push_back(f.mon.carrier->basis()[size_t(r)]);
    words.push_back(f.words[size_t(r)]);
    word_len.push_back(int(f.words[size_t(r)].size()));
  }

  SpMat projm(udim, fdim, cat.field);
  for (int j = 0; j < fdim; ++j) {
    Vec e(size_t(fdim), Scalar::zero(cat.field));
    e[size_t(j)] = Scalar::one(cat.field);
    Vec r = span.reduce(std::move(e));
    for (int i = 0; i < fdim; ++i)
      if (!r[size_t(i)].is_zero()) projm.add_entry(pos[size_t(i)], j, r[size_t(i)]);
  }
  SpMat sectm(fdim, udim, cat.field);
  for (int k = 0; k < udim; ++k)
    sectm.add_entry(reps[size_t(k)], k, Scalar::one(cat.field));

  std::optional<SpMat> diff;
  if (cat.has_differential())
    diff = projm * f.mon.carrier->differential() * sectm;
  ObjPtr carrier = make_object(cat, std::move(basis), std::move(diff));

  Morphism proj(f.mon.carrier, carrier, cat.grading.zero(), projm);
  Morphism sect(carrier, f.mon.carrier, cat.grading.zero(), sectm);

  // multiplication: concatenate representatives, then reduce
  Morphism m = compose(proj, compose(f.mon.m, tensor_morphisms(sect, sect)));
  Morphism u = compose(proj, f.mon.u);
  MonoidObject umon(carrier, retarget(m, tensor_objects(carrier, carrier), carrier),
                    std::move(u));

  // nu: B -> U via the length-one words
  SpMat incm(fdim, n, cat.field);
  for (int i = 0; i < n; ++i) incm.add_entry(f.index.at({i}), i, Scalar::one(cat.field));
  Morphism nu = compose(proj, Morphism(b.carrier, f.mon.carrier, cat.grading.zero(),
                                       std::move(incm)));

  // comultiplication: multiplicative extension of x -> x(x)1 + 1(x)x
  MonoidObject uu = monoid_tensor(umon, umon);
  ObjPtr sq = uu.carrier;
  Vec unit_u = umon.unit_vec();
  auto pair_elt = [&](const Vec& a, const Vec& bv) {
    // plain outer product into the tensor index of U (x) U
    auto ti = detail::tensor_index(*carrier, *carrier);
    Vec out(size_t(sq->dim()), Scalar::zero(cat.field));
    for (size_t qq = 0; qq < ti.pairs.size(); ++qq) {
      auto [i2, j2] = ti.pairs[qq];
      if (!a[size_t(i2)].is_zero() && !bv[size_t(j2)].is_zero())
        out[qq] = a[size_t(i2)] * bv[size_t(j2)];
    }
    return out;
  };
  SpMat com(sq->dim(), udim, cat.field);
  for (int k = 0; k < udim; ++k) {
    Vec v = pair_elt(unit_u, unit_u);
    for (int letter : words[size_t(k)]) {
      Vec x = nu.mat().column_vec(letter);
      Vec prim = pair_elt(x, unit_u);
      Vec prim2 = pair_elt(unit_u, x);
      for (size_t z = 0; z < prim.size(); ++z) prim[z] += prim2[z];
      v = uu.mul_vec(v, prim);
    }
    com.set_column(k, v);
  }
  Morphism comul(carrier, sq, cat.grading.zero(), std::move(com));

  // counit: kills every word of positive length
  SpMat counitm(1, udim, cat.field);
  for (int k = 0; k < udim; ++k)
    if (words[size_t(k)].empty()) counitm.add_entry(0, k, Scalar::one(cat.field));
  Morphism counit(carrier, unit_object(cat), cat.grading.zero(), std::move(counitm));

  // antipode: graded anti-endomorphism with s(x) = -x on generators
  SpMat antm(udim, udim, cat.field);
  for (int k = 0; k < udim; ++k) {
    Vec sv = unit_u;
    Degree prefix = cat.grading.zero();
    for (int letter : words[size_t(k)]) {
      Vec x = nu.mat().column_vec(letter);
      for (auto& c : x) c = -c;
      Scalar sg = cat.grading.eps(cat.field, prefix, b.carrier->degree(letter));
      Vec next = umon.mul_vec(x, sv);
      for (auto& c : next) c *= sg;
      sv = std::move(next);
      prefix = cat.grading.add(prefix, b.carrier->degree(letter));
    }
    antm.set_column(k, sv);
  }
  Morphism antipode(carrier, carrier, cat.grading.zero(), std::move(antm));

  BimonoidObject hopf(std::move(umon), std::move(comul), std::move(counit), std::move(antipode));
  return TruncatedUEA{b,
                      d,
                      std::move(hopf),
                      std::move(nu),
                      std::move(proj),
                      std::move(sect),
                      std::move(word_len),
                      std::move(words),
                      std::move(f)};
}

/// The monoid morphism U_d(B) -> A extending g: B -> A along nu: each
/// representative word goes to the ordered product of the images of its
/// letters. When g is a Lie morphism into L(A) and A kills all (d+1)-fold
/// products of the images, this is the adjoint transpose of g.
inline Morphism extend_along_nu(const TruncatedUEA& u, const MonoidObject& a,
                                const Morphism& g) {
  if (!same_object(g.src(), *u.b.carrier) || !same_object(g.tgt(), *a.carrier))
    throw ShapeError("extension: map does not go B -> A");
  const auto& cat = a.cat();
  SpMat m(a.dim(), u.dim(), cat.field);
  for (int k = 0; k < u.dim(); ++k) {
    Vec v = a.unit_vec();
    for (int letter : u.words[size_t(k)]) v = a.mul_vec(v, g.mat().column_vec(letter));
    for (int i = 0; i < a.dim(); ++i)
      if (!v[size_t(i)].is_zero()) m.add_entry(i, k, v[size_t(i)]);
  }
  return Morphism(u.carrier(), a.carrier, cat.grading.zero(), std::move(m));
}

struct PrimitiveData {
  std::vector<Vec> vectors;  // coordinates in the ambient carrier
  ObjPtr sub;                // abstract carrier of the primitive subspace
  Morphism inclusion;        // sub -> A
  LieObject lie;             // restricted commutator bracket
};

/// Primitive subspace {x : d(x) = x(x)1 + 1(x)x} of a bimonoid, with the
/// commutator bracket restricted to it. Throws if the subspace fails to be
/// closed under the bracket.
inline PrimitiveData primitives(const BimonoidObject& a) {
  const auto& cat = a.cat();
  Morphism delta = delta_monoid(a.mon);
  Matrix defect = (a.comul - delta).mat().dense();
  std::vector<Vec> ker = kernel_basis(defect);
  int pdim = int(ker.size());
  const ObjPtr& c = a.carrier();

  std::vector<BasisElt> basis;
  for (int k = 0; k < pdim; ++k) {
    Degree deg = cat.grading.zero();
    for (int i = 0; i < c->dim(); ++i)
      if (!ker[size_t(k)][size_t(i)].is_zero()) { deg = c->degree(i); break; }
    basis.push_back({"p" + std::to_string(k), deg});
  }
  std::optional<SpMat> diff;
  SpMat inc(c->dim(), pdim, cat.field);
  for (int k = 0; k < pdim; ++k)
    for (int i = 0; i < c->dim(); ++i)
      if (!ker[size_t(k)][size_t(i)].is_zero()) inc.add_entry(i, k, ker[size_t(k)][size_t(i)]);

  EchelonSpan span(c->dim(), cat.field);
  for (const auto& v : ker) span.add(v);

  LieObject big = commutator_lie(a.mon);
  if (cat.has_differential()) {
    // the primitive subspace of a dg bimonoid is d-stable
    SpMat dm(pdim, pdim, cat.field);
    Matrix incd = inc.dense();
    for (int k = 0; k < pdim; ++k) {
      Vec img = c->differential().apply(ker[size_t(k)]);
      if (!span.contains(img)) throw ShapeError("primitives not stable under the differential");
      auto sol = solve(incd, img);
      for (int i = 0; i < pdim; ++i)
        if (!(*sol)[size_t(i)].is_zero()) dm.add_entry(i, k, (*sol)[size_t(i)]);
    }
    diff = std::move(dm);
  }
  ObjPtr sub = make_object(cat, std::move(basis), std::move(diff));
  Morphism inclusion(sub, c, cat.grading.zero(), std::move(inc));

  // restrict the commutator bracket and verify closure
  ObjPtr ss = tensor_objects(sub, sub);
  auto ti = detail::tensor_index(*sub, *sub);
  SpMat bm(pdim, ss->dim(), cat.field);
  Matrix incd = inclusion.mat().dense();
  Morphism restricted = compose(big.bracket, tensor_morphisms(inclusion, inclusion));
  for (size_t q = 0; q < ti.pairs.size(); ++q) {
    Vec big_pair = restricted.mat().column_vec(int(q));
    if (!span.contains(big_pair))
      throw ShapeError("primitive subspace is not closed under the commutator bracket");
    auto sol = solve(incd, big_pair);
    for (int k = 0; k < pdim; ++k)
      if (!(*sol)[size_t(k)].is_zero()) bm.add_entry(k, int(q), (*sol)[size_t(k)]);
  }
  LieObject lie(sub, Morphism(ss, sub, cat.grading.zero(), std::move(bm)));
  return PrimitiveData{std::move(ker), sub, std::move(inclusion), std::move(lie)};
}

}  // namespace liecat
