#pragma once

#include <string>
#include <vector>

#include "monoidal.hpp"

namespace liecat {

/// Outcome of one law inside a validation report.
struct LawResult {
  std::string law;
  bool pass = true;
  std::vector<std::string> witness;  // first failing basis tuple, lexicographic
  bool guarded = false;              // true when restricted by a filtration guard
  std::string note;
};

struct CheckReport {
  std::string subject;
  std::vector<LawResult> laws;

  bool pass() const {
    for (const auto& l : laws)
      if (!l.pass) return false;
    return true;
  }

  const LawResult* find(const std::string& law) const {
    for (const auto& l : laws)
      if (l.law == law) return &l;
    return nullptr;
  }

  std::string text() const {
    std::string s = subject + ": " + (pass() ? "pass" : "FAIL") + "\n";
    for (const auto& l : laws) {
      s += "  " + l.law;
      if (l.law.size() < 30) s += std::string(30 - l.law.size(), ' ');
      s += l.pass ? " pass" : " FAIL";
      if (l.guarded) s += " (guarded)";
      if (!l.witness.empty()) {
        s += "  witness (";
        for (size_t i = 0; i < l.witness.size(); ++i) {
          if (i) s += ",";
          s += l.witness[i];
        }
        s += ")";
      }
      if (!l.note.empty()) s += "  [" + l.note + "]";
      s += "\n";
    }
    return s;
  }
};

namespace detail {

/// First failing pair (x_j, y_l) of a defect map out of X (x) Y.
inline std::vector<std::string> pair_witness(const SpMat& m, const ObjPtr& x, const ObjPtr& y) {
  int q = m.first_nonzero_col();
  if (q < 0) return {};
  auto ti = tensor_index(*x, *y);
  auto [j, l] = ti.pairs[size_t(q)];
  return {x->name(j), y->name(l)};
}
inline std::vector<std::string> pair_witness(const Morphism& m, const ObjPtr& x,
                                             const ObjPtr& y) {
  return pair_witness(m.mat(), x, y);
}

/// First failing triple of a defect map out of X (x) (Y (x) Z).
inline std::vector<std::string> triple_witness(const SpMat& m, const ObjPtr& x, const ObjPtr& y,
                                               const ObjPtr& z) {
  int q = m.first_nonzero_col();
  if (q < 0) return {};
  ObjPtr yz = tensor_objects(y, z);
  auto outer = tensor_index(*x, *yz);
  auto inner = tensor_index(*y, *z);
  auto [j, ql] = outer.pairs[size_t(q)];
  auto [l, k] = inner.pairs[size_t(ql)];
  return {x->name(j), y->name(l), z->name(k)};
}
inline std::vector<std::string> triple_witness(const Morphism& m, const ObjPtr& x,
                                               const ObjPtr& y, const ObjPtr& z) {
  return triple_witness(m.mat(), x, y, z);
}

}  // namespace detail

}  // namespace liecat
