#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "category.hpp"
#include "sparse.hpp"

namespace liecat {

struct BasisElt {
  std::string name;
  Degree degree;
};

/// Finite-dimensional object of a category instance: a named, graded basis,
/// plus a degree -1 differential where the instance carries one (chain
/// complexes; the structure map of a Loday-Pirashvili object plays the same
/// role).
class GradedObject {
 public:
  GradedObject(CategoryInstance cat, std::vector<BasisElt> basis,
               std::optional<SpMat> differential = std::nullopt)
      : cat_(std::move(cat)), basis_(std::move(basis)), diff_(std::move(differential)) {
    for (auto& b : basis_) b.degree = cat_.grading.normalize(b.degree);
    validate();
    uint64_t h = 1469598103934665603ull;
    auto mix = [&h](uint64_t v) { h = (h ^ v) * 1099511628211ull; };
    mix(uint64_t(cat_.tag));
    mix(uint64_t(cat_.field.kind) * 131 + cat_.field.p);
    for (const auto& b : basis_) {
      for (char c : b.name) mix(uint64_t(uint8_t(c)));
      for (auto d : b.degree.c) mix(uint64_t(uint32_t(d)) + 7);
    }
    mix(diff_ ? 2 : 1);
    if (diff_) mix(diff_->nnz() * 31 + 5);
    hash_ = h;
  }

  const CategoryInstance& cat() const { return cat_; }
  int dim() const { return int(basis_.size()); }
  const std::vector<BasisElt>& basis() const { return basis_; }
  const BasisElt& elt(int i) const { return basis_[size_t(i)]; }
  const Degree& degree(int i) const { return basis_[size_t(i)].degree; }
  const std::string& name(int i) const { return basis_[size_t(i)].name; }
  uint64_t hash() const { return hash_; }

  bool has_differential() const { return diff_.has_value(); }
  const SpMat& differential() const {
    if (!diff_) throw ShapeError("object carries no differential");
    return *diff_;
  }

  /// Index of the first basis element with this name. Tensor powers of word
  /// algebras can repeat display names (the pair structure is positional);
  /// user-facing objects are checked for uniqueness by the loaders.
  int index_of(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
  }

  bool has_unique_names() const { return index_.size() == basis_.size(); }

  bool operator==(const GradedObject& o) const {
    if (hash_ != o.hash_ || dim() != o.dim() || cat_ != o.cat_) return false;
    for (int i = 0; i < dim(); ++i)
      if (basis_[i].name != o.basis_[i].name || basis_[i].degree != o.basis_[i].degree)
        return false;
    if (diff_.has_value() != o.diff_.has_value()) return false;
    if (diff_ && *diff_ != *o.diff_) return false;
    return true;
  }
  bool operator!=(const GradedObject& o) const { return !(*this == o); }

 private:
  void validate() {
    for (int i = 0; i < dim(); ++i) {
      const auto& b = basis_[size_t(i)];
      if (b.name.empty()) throw ShapeError("empty basis name");
      index_.emplace(b.name, i);
      if (int(b.degree.c.size()) != cat_.grading.rank())
        throw ShapeError("degree rank mismatch on '" + b.name + "'");
      if (!cat_.degree_allowed(b.degree))
        throw ShapeError("degree " + b.degree.str() + " of '" + b.name +
                         "' outside the instance window");
    }
    if (diff_) {
      if (!cat_.has_differential())
        throw ShapeError("differential given in an instance without one");
      if (diff_->rows() != dim() || diff_->cols() != dim() || diff_->field() != cat_.field)
        throw ShapeError("differential shape mismatch");
      // homogeneity of degree -1
      Degree minus_one = cat_.grading.normalize(Degree({-1}));
      for (int j = 0; j < dim(); ++j)
        for (const auto& [i, c] : diff_->col(j)) {
          (void)c;
          if (degree(i) != cat_.grading.add(degree(j), minus_one))
            throw ShapeError("differential not homogeneous of degree -1");
        }
      SpMat dd = (*diff_) * (*diff_);
      if (!dd.is_zero()) throw ShapeError("differential does not square to zero");
    } else if (cat_.tag == CategoryTag::lp) {
      // an LP object always has a structure map; absent means zero
      diff_ = SpMat(dim(), dim(), cat_.field);
    } else if (cat_.tag == CategoryTag::chain) {
      diff_ = SpMat(dim(), dim(), cat_.field);
    }
  }

  CategoryInstance cat_;
  std::vector<BasisElt> basis_;
  std::optional<SpMat> diff_;
  std::map<std::string, int> index_;
  uint64_t hash_ = 0;
};

using ObjPtr = std::shared_ptr<const GradedObject>;

inline ObjPtr make_object(CategoryInstance cat, std::vector<BasisElt> basis,
                          std::optional<SpMat> differential = std::nullopt) {
  return std::make_shared<const GradedObject>(std::move(cat), std::move(basis),
                                              std::move(differential));
}

/// The unit object: one basis element "1" in degree zero.
inline ObjPtr unit_object(const CategoryInstance& cat) {
  return make_object(cat, {BasisElt{"1", cat.grading.zero()}});
}

inline ObjPtr zero_object(const CategoryInstance& cat) { return make_object(cat, {}); }

inline bool same_object(const GradedObject& a, const GradedObject& b) {
  return &a == &b || a == b;
}

/// Joins two basis names for a tensor pair. The join is flat, so the two
/// ways of bracketing a triple tensor enumerate identical names and the
/// associator really is an identity. Word algebras can therefore repeat
/// display names inside a tensor square; identity is positional.
inline std::string tensor_name(const std::string& a, const std::string& b) {
  return a + "*" + b;
}

}  // namespace liecat
