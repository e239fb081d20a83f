#pragma once

#include "vform.hpp"

namespace weilcalc {

// Linear connection on a trivialized bundle, as a Christoffel table:
//   nabla_{d/dx_i} e_a = sum_b gamma[i][b][a] e_b.
struct LinearConnection {
  BundlePtr bundle;
  std::vector<ExprMat> gamma;  // gamma[i] is rank x rank, [out][in]

  static LinearConnection trivial(const BundlePtr& b);
};

// Covariant derivative of a section (component vector) along d/dx_i.
std::vector<FuncExpr> covariant_deriv(const LinearConnection& conn,
                                      const std::vector<FuncExpr>& xi, int i);

// Exterior covariant derivative. When leaf_coords is given, only those
// directions are differentiated (the leafwise operator on foliated forms).
VForm d_nabla(const LinearConnection& conn, const VForm& w,
              const std::vector<int>* leaf_coords = nullptr);

// Curvature R(d/dx_i, d/dx_j) e_a as an End(V)-valued 2-form.
VForm curvature_tensor(const LinearConnection& conn);

// Induced connection on End(V): nabla^End E = nabla o E - E o nabla.
LinearConnection end_connection(const LinearConnection& conn);

}  // namespace weilcalc
