#pragma once

#include <map>

#include "bundle.hpp"
#include "func_expr.hpp"
#include "linalg.hpp"

namespace weilcalc {

using IdxTuple = std::vector<int>;  // strictly increasing coordinate indices

// Sorts a coordinate tuple in place; returns the permutation sign, or 0 if an
// index repeats.
int sort_sign(IdxTuple& idx);

// Sign of the permutation sorting the concatenation (a, b) of two already
// increasing tuples, or 0 if they intersect.
int merge_sign(const IdxTuple& a, const IdxTuple& b, IdxTuple& merged);

// V-valued differential form of fixed degree on a coordinate model, stored as
// an antisymmetric component table over strictly increasing index tuples.
class VForm {
 public:
  VForm() = default;
  VForm(BundlePtr bundle, int degree) : bundle_(std::move(bundle)), degree_(degree) {
    if (degree_ < 0) throw std::invalid_argument("negative form degree");
  }

  static VForm zero(const BundlePtr& b, int degree) { return VForm(b, degree); }

  const BundlePtr& bundle() const { return bundle_; }
  const ModelPtr& model() const { return bundle_->model; }
  int degree() const { return degree_; }
  bool is_zero() const { return comps_.empty(); }

  // Component on an arbitrary tuple; antisymmetry applied. Degrees above the
  // model dimension are identically zero.
  FuncExpr component(const IdxTuple& idx, int frame) const;
  void set_component(const IdxTuple& idx, int frame, const FuncExpr& val);
  void add_component(const IdxTuple& idx, int frame, const FuncExpr& val);

  const std::map<std::pair<IdxTuple, int>, FuncExpr>& components() const { return comps_; }

  VForm operator+(const VForm& o) const;
  VForm operator-(const VForm& o) const;
  VForm operator-() const;
  VForm scaled(const Rat& c) const;
  VForm scaled(const FuncExpr& f) const;
  VForm& operator+=(const VForm& o) { return *this = *this + o; }

  // Interior product with a vector field given by components X^i.
  VForm interior(const std::vector<FuncExpr>& field) const;
  VForm interior_coord(int i) const;  // X = d/dx_i

  friend bool operator==(const VForm& a, const VForm& b) {
    return same_bundle(a.bundle_, b.bundle_) && a.degree_ == b.degree_ && a.comps_ == b.comps_;
  }

 private:
  BundlePtr bundle_;
  int degree_ = 0;
  std::map<std::pair<IdxTuple, int>, FuncExpr> comps_;
};

// (df ^ w), with df the differential of a scalar function.
VForm wedge_df(const FuncExpr& f, const VForm& w);

// (s ^ w) for a scalar-valued form s given as component table over tuples.
class ScalarForm {
 public:
  ScalarForm() = default;
  ScalarForm(ModelPtr model, int degree) : model_(std::move(model)), degree_(degree) {}
  static ScalarForm d(const FuncExpr& f);
  static ScalarForm coord_diff(const ModelPtr& m, int i);  // dx_i

  const ModelPtr& model() const { return model_; }
  int degree() const { return degree_; }
  FuncExpr component(const IdxTuple& idx) const;
  void add_component(const IdxTuple& idx, const FuncExpr& val);
  const std::map<IdxTuple, FuncExpr>& components() const { return comps_; }

 private:
  ModelPtr model_;
  int degree_ = 0;
  std::map<IdxTuple, FuncExpr> comps_;
};

VForm wedge(const ScalarForm& s, const VForm& w);

// All strictly increasing tuples of the given length drawn from {0..n-1}.
std::vector<IdxTuple> increasing_tuples(int n, int len);

// Apply a pointwise endomorphism (matrix acting on frame indices).
VForm apply_matrix(const ExprMat& m, const VForm& w);

// End(V)-valued forms are VForms over end_bundle(V). The wedge action of an
// End-valued t-form on a V-valued u-form:
//   (T ^ w)(X_1..X_{t+u}) = sum over (t,u)-shuffles of sgn * T(..) . w(..).
VForm end_wedge_apply(const VForm& endform, const VForm& w);

// V-valued pairing of two scalar..-ish helpers used by brackets and metrics
// live in fiber.hpp / hodge.hpp.

}  // namespace weilcalc
