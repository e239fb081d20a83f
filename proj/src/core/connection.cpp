#include "connection.hpp"

namespace weilcalc {

LinearConnection LinearConnection::trivial(const BundlePtr& b) {
  int n = b->model->dim, r = b->rank;
  FuncExpr z = FuncExpr::zero(b->model);
  return LinearConnection{b, std::vector<ExprMat>(n, ExprMat(r, std::vector<FuncExpr>(r, z)))};
}

std::vector<FuncExpr> covariant_deriv(const LinearConnection& conn,
                                      const std::vector<FuncExpr>& xi, int i) {
  int r = conn.bundle->rank;
  std::vector<FuncExpr> out(r, FuncExpr::zero(conn.bundle->model));
  for (int b = 0; b < r; ++b) {
    out[b] = xi[b].partial(i);
    for (int a = 0; a < r; ++a)
      if (!conn.gamma[i][b][a].is_zero() && !xi[a].is_zero())
        out[b] += conn.gamma[i][b][a] * xi[a];
  }
  return out;
}

VForm d_nabla(const LinearConnection& conn, const VForm& w,
              const std::vector<int>* leaf_coords) {
  if (!same_bundle(conn.bundle, w.bundle()))
    throw std::invalid_argument("d_nabla: bundle mismatch");
  const ModelPtr& m = w.model();
  int n = m->dim, r = conn.bundle->rank;
  VForm out(w.bundle(), w.degree() + 1);
  if (out.degree() > n) return out;
  std::vector<int> dirs;
  if (leaf_coords)
    dirs = *leaf_coords;
  else
    for (int i = 0; i < n; ++i) dirs.push_back(i);

  for (const auto& [k, v] : w.components()) {
    const IdxTuple& idx = k.first;
    int a = k.second;
    for (int i : dirs) {
      // dx_i ^ (partial_i + Gamma_i) applied to the component
      IdxTuple merged;
      int sign = merge_sign(IdxTuple{i}, idx, merged);
      if (sign == 0) continue;
      FuncExpr dv = v.partial(i);
      if (!dv.is_zero()) out.add_component(merged, a, sign == 1 ? dv : -dv);
      for (int b = 0; b < r; ++b) {
        if (conn.gamma[i][b][a].is_zero()) continue;
        FuncExpr gv = conn.gamma[i][b][a] * v;
        out.add_component(merged, b, sign == 1 ? gv : -gv);
      }
    }
  }
  return out;
}

VForm curvature_tensor(const LinearConnection& conn) {
  const BundlePtr& V = conn.bundle;
  int n = V->model->dim, r = V->rank;
  VForm R(end_bundle(V), 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int out = 0; out < r; ++out)
        for (int in = 0; in < r; ++in) {
          FuncExpr val = conn.gamma[j][out][in].partial(i) - conn.gamma[i][out][in].partial(j);
          for (int b = 0; b < r; ++b) {
            val += conn.gamma[i][out][b] * conn.gamma[j][b][in];
            val = val - conn.gamma[j][out][b] * conn.gamma[i][b][in];
          }
          if (!val.is_zero()) R.set_component({i, j}, end_index(r, out, in), val);
        }
  return R;
}

LinearConnection end_connection(const LinearConnection& conn) {
  const BundlePtr& V = conn.bundle;
  int n = V->model->dim, r = V->rank;
  BundlePtr E = end_bundle(V);
  LinearConnection out = LinearConnection::trivial(E);
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b) {
        int in = end_index(r, a, b);
        // nabla_i E_{ab} = sum_c gamma[i][c][a] E_{cb} - sum_d gamma[i][b][d] E_{ad}
        for (int c = 0; c < r; ++c) {
          if (!conn.gamma[i][c][a].is_zero())
            out.gamma[i][end_index(r, c, b)][in] += conn.gamma[i][c][a];
          if (!conn.gamma[i][b][c].is_zero())
            out.gamma[i][end_index(r, a, c)][in] += -conn.gamma[i][b][c];
        }
      }
  return out;
}

}  // namespace weilcalc
