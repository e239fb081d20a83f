#pragma once

#include "connection.hpp"
#include "fiber.hpp"

namespace weilcalc {

// Constant-coefficient metric on the base, with orientation. Pseudo-
// Riemannian signatures are supported for diagonal metrics via negative
// diagonal entries.
struct BaseMetric {
  RatMat g;
  int orientation = 1;  // +-1

  static BaseMetric euclidean(int n);

  int dim() const { return static_cast<int>(g.size()); }
  bool is_diagonal() const;
  int negative_index() const;  // count of negative diagonal entries (diagonal case)
  Rat det_g() const { return det(g); }
  Rat abs_det_g() const;
  RatMat inverse_g() const;

  // Positive-definite (all leading principal minors positive) or diagonal
  // with nonzero entries.
  bool validate(std::string* why = nullptr) const;

  // Restriction to a coordinate subset (block metric along a foliation).
  BaseMetric restricted(const std::vector<int>& coords) const;
};

// A form scaled by the formal positive factor sqrt(|det g|)^power; the Hodge
// star produces these and the codifferential consumes them, so pure rational
// data survives end to end.
struct ScaledVForm {
  VForm form;
  int sqrt_power = 0;

  bool is_zero() const { return form.is_zero(); }
  friend bool operator==(const ScaledVForm& a, const ScaledVForm& b) {
    return (a.form.is_zero() && b.form.is_zero()) ||
           (a.sqrt_power == b.sqrt_power && a.form == b.form);
  }
  ScaledVForm operator+(const ScaledVForm& o) const;
  ScaledVForm operator-(const ScaledVForm& o) const;
  ScaledVForm scaled(const Rat& c) const { return {form.scaled(c), sqrt_power}; }
};

// Hodge star with respect to a constant metric. When leaf_coords is given,
// it is the leafwise star on the block metric: the input must be a leafwise
// form (components within the leaf coordinates).
ScaledVForm hodge_star(const BaseMetric& m, const VForm& w,
                       const std::vector<int>* leaf_coords = nullptr);
ScaledVForm hodge_star(const BaseMetric& m, const ScaledVForm& w,
                       const std::vector<int>* leaf_coords = nullptr);

// Inverse star, normalized so star_inv(star(w)) == w including the formal
// scale; on degree-k output it equals (-1)^{k(d-k)+s} star / |det g|.
ScaledVForm hodge_star_inv(const BaseMetric& m, const ScaledVForm& w,
                           const std::vector<int>* leaf_coords = nullptr);

// delta^nabla = (-1)^k star^{-1} d^nabla star on degree-k forms; degree 0
// maps to the zero form. The net formal scale is zero, so plain forms come
// back out.
VForm codifferential(const BaseMetric& m, const LinearConnection& conn, const VForm& w,
                     const std::vector<int>* leaf_coords = nullptr);

// Exact value of an integral pairing: coeff * (2*pi)^twopi_power *
// sqrt(|det g|)^sqrt_power. Comparisons are only meaningful between values
// with identical tags.
struct ActionScalar {
  Rat coeff = 0;
  int twopi_power = 0;
  int sqrt_power = 0;

  bool is_zero() const { return coeff == 0; }
  friend bool operator==(const ActionScalar& a, const ActionScalar& b) {
    if (a.coeff == 0 && b.coeff == 0) return true;
    return a.coeff == b.coeff && a.twopi_power == b.twopi_power && a.sqrt_power == b.sqrt_power;
  }
  ActionScalar operator+(const ActionScalar& o) const;
  ActionScalar operator-(const ActionScalar& o) const;
  ActionScalar scaled(const Rat& c) const { return {coeff * c, twopi_power, sqrt_power}; }
  std::string str() const;
};

// Pointwise inner product of equal-degree forms: form indices contracted
// with g^{-1} Gram determinants, frame indices with kappa.
FuncExpr pointwise_inner(const BaseMetric& m, const FiberMetric& kappa, const VForm& a,
                         const VForm& b);

// <<a,b>> = integral over the torus of <a,b> vol; exact. Torus models only.
ActionScalar l2_pairing(const BaseMetric& m, const FiberMetric& kappa, const VForm& a,
                        const VForm& b);
ActionScalar l2_pairing(const BaseMetric& m, const FiberMetric& kappa, const ScaledVForm& a,
                        const ScaledVForm& b);

}  // namespace weilcalc
