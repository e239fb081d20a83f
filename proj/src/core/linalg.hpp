#pragma once

#include <optional>
#include <vector>

#include "func_expr.hpp"

namespace weilcalc {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<std::vector<Rat>>;  // row-major

RatMat identity_mat(int n);
Rat det(const RatMat& m);
std::optional<RatMat> inverse(const RatMat& m);
bool is_positive_definite(const RatMat& m);  // symmetric input, leading minors
RatMat mat_mul(const RatMat& a, const RatMat& b);

// Solver for M x = b with a fixed rational coefficient matrix and FuncExpr
// right-hand sides. The elimination is done once over the rationals; each
// solve applies the recorded row operations and checks consistency of the
// eliminated rows symbolically.
class RationalSolver {
 public:
  explicit RationalSolver(RatMat m);

  int rank() const { return rank_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  // Returns a solution of M x = b, or nullopt if the system is inconsistent.
  // When the kernel is nontrivial, the particular solution with free
  // variables set to zero is returned.
  std::optional<std::vector<FuncExpr>> solve(const std::vector<FuncExpr>& b) const;
  std::optional<RatVec> solve(const RatVec& b) const;

  // Basis of the rational nullspace of M.
  std::vector<RatVec> nullspace() const;

  bool unique() const { return rank_ == cols_; }

 private:
  RatMat m_;        // reduced row echelon form
  RatMat ops_;      // accumulated row operations: ops_ * original = m_
  std::vector<int> pivot_col_;
  int rows_, cols_, rank_;
};

// Matrix of ring elements; used for frame changes and anchors.
using ExprMat = std::vector<std::vector<FuncExpr>>;

// Inverse of an ExprMat whose determinant is a nonzero constant rational
// (the exactly invertible case); nullopt otherwise.
std::optional<ExprMat> inverse_constant_det(const ExprMat& m, const ModelPtr& model);

FuncExpr expr_det(const ExprMat& m, const ModelPtr& model);

}  // namespace weilcalc
