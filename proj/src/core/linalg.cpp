#include "linalg.hpp"

#include <stdexcept>

namespace weilcalc {

RatMat identity_mat(int n) {
  RatMat m(n, RatVec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

RatMat mat_mul(const RatMat& a, const RatMat& b) {
  int n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
  RatMat c(n, RatVec(p, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < p; ++j)
      for (int l = 0; l < k; ++l) c[i][j] += a[i][l] * b[l][j];
  return c;
}

Rat det(const RatMat& m) {
  int n = m.size();
  RatMat a = m;
  Rat d = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      d = -d;
    }
    d *= a[col][col];
    Rat inv = Rat(1) / a[col][col];
    for (int r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      Rat f = a[r][col] * inv;
      for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return d;
}

std::optional<RatMat> inverse(const RatMat& m) {
  int n = m.size();
  RatMat a = m;
  RatMat inv = identity_mat(n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rat f = Rat(1) / a[col][col];
    for (int c = 0; c < n; ++c) {
      a[col][c] *= f;
      inv[col][c] *= f;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rat g = a[r][col];
      for (int c = 0; c < n; ++c) {
        a[r][c] -= g * a[col][c];
        inv[r][c] -= g * inv[col][c];
      }
    }
  }
  return inv;
}

bool is_positive_definite(const RatMat& m) {
  int n = m.size();
  for (int k = 1; k <= n; ++k) {
    RatMat minor(k, RatVec(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) minor[i][j] = m[i][j];
    if (det(minor) <= 0) return false;
  }
  return true;
}

RationalSolver::RationalSolver(RatMat m) : m_(std::move(m)) {
  rows_ = m_.size();
  cols_ = rows_ ? m_[0].size() : 0;
  ops_ = identity_mat(rows_);
  rank_ = 0;
  for (int col = 0; col < cols_ && rank_ < rows_; ++col) {
    int piv = -1;
    for (int r = rank_; r < rows_; ++r)
      if (m_[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m_[piv], m_[rank_]);
    std::swap(ops_[piv], ops_[rank_]);
    Rat f = Rat(1) / m_[rank_][col];
    for (int c = 0; c < cols_; ++c) m_[rank_][c] *= f;
    for (int c = 0; c < rows_; ++c) ops_[rank_][c] *= f;
    for (int r = 0; r < rows_; ++r) {
      if (r == rank_ || m_[r][col] == 0) continue;
      Rat g = m_[r][col];
      for (int c = 0; c < cols_; ++c) m_[r][c] -= g * m_[rank_][c];
      for (int c = 0; c < rows_; ++c) ops_[r][c] -= g * ops_[rank_][c];
    }
    pivot_col_.push_back(col);
    ++rank_;
  }
}

std::optional<std::vector<FuncExpr>> RationalSolver::solve(const std::vector<FuncExpr>& b) const {
  if (static_cast<int>(b.size()) != rows_) throw std::invalid_argument("solver: rhs size");
  ModelPtr model;
  for (const auto& e : b)
    if (e.model()) model = e.model();
  if (!model) throw std::invalid_argument("solver: rhs has no model");
  // transformed rhs: ops_ * b
  std::vector<FuncExpr> tb(rows_, FuncExpr::zero(model));
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < rows_; ++c)
      if (ops_[r][c] != 0 && !b[c].is_zero()) tb[r] += b[c].scaled(ops_[r][c]);
  // consistency of eliminated rows
  for (int r = rank_; r < rows_; ++r)
    if (!tb[r].is_zero()) return std::nullopt;
  std::vector<FuncExpr> x(cols_, FuncExpr::zero(model));
  for (int r = 0; r < rank_; ++r) x[pivot_col_[r]] = tb[r];
  return x;
}

std::optional<RatVec> RationalSolver::solve(const RatVec& b) const {
  if (static_cast<int>(b.size()) != rows_) throw std::invalid_argument("solver: rhs size");
  RatVec tb(rows_, 0);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < rows_; ++c) tb[r] += ops_[r][c] * b[c];
  for (int r = rank_; r < rows_; ++r)
    if (tb[r] != 0) return std::nullopt;
  RatVec x(cols_, 0);
  for (int r = 0; r < rank_; ++r) x[pivot_col_[r]] = tb[r];
  return x;
}

std::vector<RatVec> RationalSolver::nullspace() const {
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivot_col_) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (int freec = 0; freec < cols_; ++freec) {
    if (is_pivot[freec]) continue;
    RatVec v(cols_, 0);
    v[freec] = 1;
    for (int r = 0; r < rank_; ++r) v[pivot_col_[r]] = -m_[r][freec];
    basis.push_back(std::move(v));
  }
  return basis;
}

FuncExpr expr_det(const ExprMat& m, const ModelPtr& model) {
  int n = m.size();
  if (n == 0) return FuncExpr::constant(model, 1);
  // Laplace expansion; matrices here are small (bundle ranks).
  if (n == 1) return m[0][0];
  FuncExpr acc = FuncExpr::zero(model);
  for (int j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    ExprMat minor(n - 1, std::vector<FuncExpr>(n - 1, FuncExpr::zero(model)));
    for (int r = 1; r < n; ++r) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == j) continue;
        minor[r - 1][cc++] = m[r][c];
      }
    }
    FuncExpr cof = m[0][j] * expr_det(minor, model);
    acc = (j % 2 == 0) ? acc + cof : acc - cof;
  }
  return acc;
}

std::optional<ExprMat> inverse_constant_det(const ExprMat& m, const ModelPtr& model) {
  int n = m.size();
  FuncExpr d = expr_det(m, model);
  if (!d.is_constant() || d.is_zero()) return std::nullopt;
  Rat dinv = Rat(1) / d.constant_value();
  ExprMat inv(n, std::vector<FuncExpr>(n, FuncExpr::zero(model)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      ExprMat minor(n - 1, std::vector<FuncExpr>(n - 1, FuncExpr::zero(model)));
      for (int r = 0, rr = 0; r < n; ++r) {
        if (r == j) continue;
        for (int c = 0, cc = 0; c < n; ++c) {
          if (c == i) continue;
          minor[rr][cc++] = m[r][c];
        }
        ++rr;
      }
      FuncExpr cof = expr_det(minor, model).scaled(dinv);
      inv[i][j] = ((i + j) % 2 == 0) ? cof : -cof;
    }
  return inv;
}

}  // namespace weilcalc
