#pragma once

#include <string>

#include "grading.hpp"

namespace liecat {

enum class CategoryTag : uint8_t { vect, super, colour, chain, lp };

inline std::string tag_name(CategoryTag t) {
  switch (t) {
    case CategoryTag::vect: return "vect";
    case CategoryTag::super: return "super";
    case CategoryTag::colour: return "colour";
    case CategoryTag::chain: return "chain";
    case CategoryTag::lp: return "lp";
  }
  return "?";
}

/// How a tensor product treats basis pairs whose degree lands outside the
/// instance's allowed window.
enum class TensorPolicy : uint8_t { free_range, error_outside, truncate_outside };

/// One concrete symmetric monoidal category. Associators and unitors are
/// strict (basis flattening); every nontrivial coherence datum lives in the
/// bicharacter.
struct CategoryInstance {
  CategoryTag tag = CategoryTag::vect;
  FieldTag field = FieldTag::rationals();
  GradeGroup grading = GradeGroup::trivial();
  int chain_min = 0, chain_max = 0;  // chain only; fixed window

  static CategoryInstance vect(FieldTag f) { return {CategoryTag::vect, f, GradeGroup::trivial(), 0, 0}; }
  static CategoryInstance super_cat(FieldTag f) {
    return {CategoryTag::super, f, GradeGroup::super(), 0, 0};
  }
  static CategoryInstance colour(FieldTag f, GradeGroup g) {
    return {CategoryTag::colour, f, std::move(g), 0, 0};
  }
  static CategoryInstance chain(FieldTag f, int min_deg, int max_deg) {
    if (min_deg > max_deg) throw ShapeError("chain degree window is empty");
    return {CategoryTag::chain, f, GradeGroup::integers(), min_deg, max_deg};
  }
  /// Linear maps V -> W with the infinitesimal tensor product. Encoded as
  /// two-term complexes in degrees {0,1} with no Koszul signs; the tensor
  /// silently drops the degree-2 part, which is the defining truncation.
  static CategoryInstance lp(FieldTag f) {
    return {CategoryTag::lp, f, GradeGroup::integers_unsigned(), 0, 1};
  }

  bool closed() const { return tag != CategoryTag::lp; }
  bool has_differential() const { return tag == CategoryTag::chain || tag == CategoryTag::lp; }

  TensorPolicy tensor_policy() const {
    if (tag == CategoryTag::chain) return TensorPolicy::error_outside;
    if (tag == CategoryTag::lp) return TensorPolicy::truncate_outside;
    return TensorPolicy::free_range;
  }

  bool degree_allowed(const Degree& d) const {
    if (tag == CategoryTag::chain || tag == CategoryTag::lp) {
      int v = d.c[0];
      return chain_min <= v && v <= chain_max;
    }
    return true;
  }

  bool operator==(const CategoryInstance& o) const {
    return tag == o.tag && field == o.field && grading == o.grading && chain_min == o.chain_min &&
           chain_max == o.chain_max;
  }
  bool operator!=(const CategoryInstance& o) const { return !(*this == o); }

  std::string str() const {
    std::string s = tag_name(tag) + "/" + field.str();
    if (tag == CategoryTag::chain)
      s += "[" + std::to_string(chain_min) + ".." + std::to_string(chain_max) + "]";
    return s;
  }
};

}  // namespace liecat
