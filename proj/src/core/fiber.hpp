#pragma once

#include "connection.hpp"
#include "vform.hpp"

namespace weilcalc {

// Fiberwise Lie bracket on a trivialized bundle: [e_a, e_b] = sum_c f[a][b][c] e_c.
struct FiberBracket {
  BundlePtr bundle;
  std::vector<ExprMat> structure;  // structure[a][b][c]

  static FiberBracket abelian(const BundlePtr& b);

  std::vector<FuncExpr> bracket(const std::vector<FuncExpr>& xi,
                                const std::vector<FuncExpr>& eta) const;

  // ad(xi) as a matrix acting on frame components: ad(xi) eta = [xi, eta].
  ExprMat ad_matrix(const std::vector<FuncExpr>& xi) const;

  // Antisymmetry and the fiberwise Jacobi identity, exactly.
  bool validate(std::string* why = nullptr) const;

  bool is_abelian() const;
};

// [alpha, beta] of bundle-valued forms, fiberwise:
//   ([a,b])(X_1..X_{k+l}) = sum over (k,l)-shuffles of sgn * [a(..), b(..)].
VForm form_bracket(const FiberBracket& br, const VForm& a, const VForm& b);

// Fiber metric kappa_{ab} on a trivialized bundle.
struct FiberMetric {
  BundlePtr bundle;
  ExprMat kappa;

  static FiberMetric euclidean(const BundlePtr& b);

  // Symmetry plus exact nondegeneracy: the determinant must be a nonzero
  // canonical form and nonzero at the origin.
  bool validate(std::string* why = nullptr) const;

  FuncExpr inner(const std::vector<FuncExpr>& xi, const std::vector<FuncExpr>& eta) const;
};

// Does nabla preserve the fiber bracket? (S.1-type condition.)
bool preserves_bracket(const LinearConnection& conn, const FiberBracket& br);

// Is kappa compatible with nabla? X<xi,eta> = <nabla xi,eta> + <xi,nabla eta>.
bool metric_compatible(const LinearConnection& conn, const FiberMetric& kappa);

}  // namespace weilcalc
