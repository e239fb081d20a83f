#include "fiber.hpp"

#include <sstream>

namespace weilcalc {

FiberBracket FiberBracket::abelian(const BundlePtr& b) {
  int r = b->rank;
  FuncExpr z = FuncExpr::zero(b->model);
  return FiberBracket{b, std::vector<ExprMat>(r, ExprMat(r, std::vector<FuncExpr>(r, z)))};
}

std::vector<FuncExpr> FiberBracket::bracket(const std::vector<FuncExpr>& xi,
                                            const std::vector<FuncExpr>& eta) const {
  int r = bundle->rank;
  std::vector<FuncExpr> out(r, FuncExpr::zero(bundle->model));
  for (int a = 0; a < r; ++a) {
    if (xi[a].is_zero()) continue;
    for (int b = 0; b < r; ++b) {
      if (eta[b].is_zero()) continue;
      for (int c = 0; c < r; ++c)
        if (!structure[a][b][c].is_zero()) out[c] += xi[a] * eta[b] * structure[a][b][c];
    }
  }
  return out;
}

ExprMat FiberBracket::ad_matrix(const std::vector<FuncExpr>& xi) const {
  int r = bundle->rank;
  ExprMat m(r, std::vector<FuncExpr>(r, FuncExpr::zero(bundle->model)));
  for (int a = 0; a < r; ++a) {
    if (xi[a].is_zero()) continue;
    for (int b = 0; b < r; ++b)
      for (int c = 0; c < r; ++c)
        if (!structure[a][b][c].is_zero()) m[c][b] += xi[a] * structure[a][b][c];
  }
  return m;
}

bool FiberBracket::validate(std::string* why) const {
  int r = bundle->rank;
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (int c = 0; c < r; ++c)
        if (!(structure[a][b][c] + structure[b][a][c]).is_zero()) {
          if (why) {
            std::ostringstream os;
            os << "antisymmetry fails at (" << a << "," << b << ")";
            *why = os.str();
          }
          return false;
        }
  auto frame = [&](int a) {
    std::vector<FuncExpr> s(r, FuncExpr::zero(bundle->model));
    s[a] = FuncExpr::constant(bundle->model, 1);
    return s;
  };
  for (int a = 0; a < r; ++a)
    for (int b = a + 1; b < r; ++b)
      for (int c = b + 1; c < r; ++c) {
        std::vector<FuncExpr> jac =
            bracket(bracket(frame(a), frame(b)), frame(c));
        std::vector<FuncExpr> t2 = bracket(bracket(frame(b), frame(c)), frame(a));
        std::vector<FuncExpr> t3 = bracket(bracket(frame(c), frame(a)), frame(b));
        for (int k = 0; k < r; ++k)
          if (!(jac[k] + t2[k] + t3[k]).is_zero()) {
            if (why) {
              std::ostringstream os;
              os << "Jacobi identity fails at frame triple (" << a << "," << b << "," << c << ")";
              *why = os.str();
            }
            return false;
          }
      }
  return true;
}

bool FiberBracket::is_abelian() const {
  for (const auto& m : structure)
    for (const auto& row : m)
      for (const auto& e : row)
        if (!e.is_zero()) return false;
  return true;
}

VForm form_bracket(const FiberBracket& br, const VForm& a, const VForm& b) {
  if (!same_bundle(a.bundle(), b.bundle()) || !same_bundle(a.bundle(), br.bundle))
    throw std::invalid_argument("form_bracket: bundle mismatch");
  int r = br.bundle->rank;
  VForm out(a.bundle(), a.degree() + b.degree());
  if (out.degree() > a.model()->dim) return out;
  for (const auto& [ka, va] : a.components())
    for (const auto& [kb, vb] : b.components()) {
      IdxTuple merged;
      int sign = merge_sign(ka.first, kb.first, merged);
      if (sign == 0) continue;
      for (int c = 0; c < r; ++c) {
        const FuncExpr& f = br.structure[ka.second][kb.second][c];
        if (f.is_zero()) continue;
        FuncExpr val = va * vb * f;
        out.add_component(merged, c, sign == 1 ? val : -val);
      }
    }
  return out;
}

FiberMetric FiberMetric::euclidean(const BundlePtr& b) {
  int r = b->rank;
  ExprMat k(r, std::vector<FuncExpr>(r, FuncExpr::zero(b->model)));
  for (int i = 0; i < r; ++i) k[i][i] = FuncExpr::constant(b->model, 1);
  return FiberMetric{b, k};
}

bool FiberMetric::validate(std::string* why) const {
  int r = bundle->rank;
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      if (!(kappa[a][b] - kappa[b][a]).is_zero()) {
        if (why) *why = "metric is not symmetric";
        return false;
      }
  FuncExpr d = expr_det(kappa, bundle->model);
  if (d.is_zero()) {
    if (why) *why = "metric determinant vanishes identically";
    return false;
  }
  if (d.value_at_origin() == 0) {
    if (why) *why = "metric determinant vanishes at the origin";
    return false;
  }
  return true;
}

FuncExpr FiberMetric::inner(const std::vector<FuncExpr>& xi,
                            const std::vector<FuncExpr>& eta) const {
  FuncExpr out = FuncExpr::zero(bundle->model);
  int r = bundle->rank;
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      if (!kappa[a][b].is_zero() && !xi[a].is_zero() && !eta[b].is_zero())
        out += xi[a] * eta[b] * kappa[a][b];
  return out;
}

bool preserves_bracket(const LinearConnection& conn, const FiberBracket& br) {
  int r = br.bundle->rank, n = br.bundle->model->dim;
  auto frame = [&](int a) {
    std::vector<FuncExpr> s(r, FuncExpr::zero(br.bundle->model));
    s[a] = FuncExpr::constant(br.bundle->model, 1);
    return s;
  };
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < r; ++a)
      for (int b = a + 1; b < r; ++b) {
        auto lhs = covariant_deriv(conn, br.bracket(frame(a), frame(b)), i);
        auto r1 = br.bracket(covariant_deriv(conn, frame(a), i), frame(b));
        auto r2 = br.bracket(frame(a), covariant_deriv(conn, frame(b), i));
        for (int c = 0; c < r; ++c)
          if (!(lhs[c] - r1[c] - r2[c]).is_zero()) return false;
      }
  return true;
}

bool metric_compatible(const LinearConnection& conn, const FiberMetric& kappa) {
  int r = kappa.bundle->rank, n = kappa.bundle->model->dim;
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < r; ++a)
      for (int b = a; b < r; ++b) {
        FuncExpr lhs = kappa.kappa[a][b].partial(i);
        FuncExpr rhs = FuncExpr::zero(kappa.bundle->model);
        for (int c = 0; c < r; ++c) {
          if (!conn.gamma[i][c][a].is_zero()) rhs += conn.gamma[i][c][a] * kappa.kappa[c][b];
          if (!conn.gamma[i][c][b].is_zero()) rhs += conn.gamma[i][c][b] * kappa.kappa[a][c];
        }
        if (!(lhs - rhs).is_zero()) return false;
      }
  return true;
}

}  // namespace weilcalc
