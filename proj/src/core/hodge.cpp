#include "hodge.hpp"

#include <sstream>

#include "mutation.hpp"

namespace weilcalc {

BaseMetric BaseMetric::euclidean(int n) { return BaseMetric{identity_mat(n), 1}; }

bool BaseMetric::is_diagonal() const {
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      if (i != j && g[i][j] != 0) return false;
  return true;
}

int BaseMetric::negative_index() const {
  int s = 0;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i][i] < 0) ++s;
  return s;
}

Rat BaseMetric::abs_det_g() const {
  Rat d = det_g();
  return d < 0 ? -d : d;
}

RatMat BaseMetric::inverse_g() const {
  auto inv = inverse(g);
  if (!inv) throw std::invalid_argument("metric is degenerate");
  return *inv;
}

bool BaseMetric::validate(std::string* why) const {
  int n = dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (g[i][j] != g[j][i]) {
        if (why) *why = "base metric is not symmetric";
        return false;
      }
  if (is_diagonal()) {
    for (int i = 0; i < n; ++i)
      if (g[i][i] == 0) {
        if (why) *why = "degenerate diagonal entry";
        return false;
      }
    return true;
  }
  if (!is_positive_definite(g)) {
    if (why) *why = "non-diagonal base metric must be positive-definite";
    return false;
  }
  return true;
}

BaseMetric BaseMetric::restricted(const std::vector<int>& coords) const {
  RatMat sub(coords.size(), RatVec(coords.size()));
  for (std::size_t i = 0; i < coords.size(); ++i)
    for (std::size_t j = 0; j < coords.size(); ++j) sub[i][j] = g[coords[i]][coords[j]];
  return BaseMetric{sub, orientation};
}

ScaledVForm ScaledVForm::operator+(const ScaledVForm& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (sqrt_power != o.sqrt_power)
    throw std::invalid_argument("cannot add forms with different formal scales");
  return {form + o.form, sqrt_power};
}

ScaledVForm ScaledVForm::operator-(const ScaledVForm& o) const {
  return *this + o.scaled(-1);
}

namespace {

// Gram determinant <dx^I, dx^J> with respect to g^{-1}.
Rat gram(const RatMat& ginv, const IdxTuple& I, const IdxTuple& J) {
  int k = I.size();
  if (k == 0) return 1;
  RatMat m(k, RatVec(k));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) m[a][b] = ginv[I[a]][J[b]];
  return det(m);
}

// Maps global coordinate indices to positions within the leaf subset.
IdxTuple to_local(const IdxTuple& idx, const std::vector<int>& coords) {
  IdxTuple out;
  for (int i : idx) {
    auto it = std::find(coords.begin(), coords.end(), i);
    if (it == coords.end())
      throw std::invalid_argument("form has components outside the leaf coordinates");
    out.push_back(static_cast<int>(it - coords.begin()));
  }
  return out;
}

IdxTuple to_global(const IdxTuple& idx, const std::vector<int>& coords) {
  IdxTuple out;
  for (int i : idx) out.push_back(coords[i]);
  return out;
}

}  // namespace

ScaledVForm hodge_star(const BaseMetric& metric, const VForm& w,
                       const std::vector<int>* leaf_coords) {
  std::vector<int> coords;
  if (leaf_coords)
    coords = *leaf_coords;
  else
    for (int i = 0; i < w.model()->dim; ++i) coords.push_back(i);
  BaseMetric m = leaf_coords ? metric.restricted(coords) : metric;
  int d = m.dim();
  int k = w.degree();
  if (k > d) throw std::invalid_argument("hodge_star: degree exceeds metric dimension");
  RatMat ginv = m.inverse_g();

  VForm out(w.bundle(), d - k);
  auto tuples = increasing_tuples(d, k);
  for (const auto& [key, val] : w.components()) {
    IdxTuple J = leaf_coords ? to_local(key.first, coords) : key.first;
    int frame = key.second;
    for (const auto& I : tuples) {
      Rat gIJ = gram(ginv, I, J);
      if (gIJ == 0) continue;
      // complement of I and the sign of (I, I^c) as a permutation of 1..d
      IdxTuple comp;
      {
        std::vector<bool> used(d, false);
        for (int i : I) used[i] = true;
        for (int i = 0; i < d; ++i)
          if (!used[i]) comp.push_back(i);
      }
      IdxTuple all = I;
      all.insert(all.end(), comp.begin(), comp.end());
      int sign = sort_sign(all);
      Rat c = gIJ * sign * m.orientation;
      IdxTuple gcomp = leaf_coords ? to_global(comp, coords) : comp;
      out.add_component(gcomp, frame, val.scaled(c));
    }
  }
  return {out, 1};
}

ScaledVForm hodge_star(const BaseMetric& m, const ScaledVForm& w,
                       const std::vector<int>* leaf_coords) {
  ScaledVForm s = hodge_star(m, w.form, leaf_coords);
  s.sqrt_power += w.sqrt_power;
  return s;
}

ScaledVForm hodge_star_inv(const BaseMetric& metric, const ScaledVForm& w,
                           const std::vector<int>* leaf_coords) {
  BaseMetric m = leaf_coords ? metric.restricted(*leaf_coords) : metric;
  int d = m.dim();
  int k = d - w.form.degree();  // output degree
  int s = m.negative_index();
  ScaledVForm out = hodge_star(metric, w, leaf_coords);
  int sgn = ((k * (d - k) + s) % 2 == 0) ? 1 : -1;
  out = out.scaled(Rat(sgn) / m.abs_det_g());
  out.sqrt_power -= 2;
  return out;
}

VForm codifferential(const BaseMetric& m, const LinearConnection& conn, const VForm& w,
                     const std::vector<int>* leaf_coords) {
  int k = w.degree();
  if (k == 0) return VForm::zero(w.bundle(), 0);
  ScaledVForm sw = hodge_star(m, w, leaf_coords);
  ScaledVForm dsw{d_nabla(conn, sw.form, leaf_coords), sw.sqrt_power};
  ScaledVForm r = hodge_star_inv(m, dsw, leaf_coords);
  int sgn = (k % 2 == 0) ? 1 : -1;
  if (mutation_enabled(Mutation::CodifferentialSignFlipped)) sgn = -sgn;
  if (r.sqrt_power != 0) throw std::logic_error("codifferential: formal scale did not cancel");
  return r.form.scaled(Rat(sgn));
}

ActionScalar ActionScalar::operator+(const ActionScalar& o) const {
  if (coeff == 0) return o;
  if (o.coeff == 0) return *this;
  if (twopi_power != o.twopi_power || sqrt_power != o.sqrt_power)
    throw std::invalid_argument("cannot add action values with different tags");
  return {coeff + o.coeff, twopi_power, sqrt_power};
}

ActionScalar ActionScalar::operator-(const ActionScalar& o) const { return *this + o.scaled(-1); }

std::string ActionScalar::str() const {
  std::ostringstream os;
  os << to_string(coeff);
  if (coeff != 0) {
    if (twopi_power != 0) os << " * (2pi)^" << twopi_power;
    if (sqrt_power != 0) os << " * sqrt(detg)^" << sqrt_power;
  }
  return os.str();
}

FuncExpr pointwise_inner(const BaseMetric& m, const FiberMetric& kappa, const VForm& a,
                         const VForm& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("pointwise_inner: degree mismatch");
  if (!same_bundle(a.bundle(), b.bundle()))
    throw std::invalid_argument("pointwise_inner: bundle mismatch");
  RatMat ginv = m.inverse_g();
  FuncExpr out = FuncExpr::zero(a.model());
  for (const auto& [ka, va] : a.components())
    for (const auto& [kb, vb] : b.components()) {
      Rat gIJ = gram(ginv, ka.first, kb.first);
      if (gIJ == 0) continue;
      const FuncExpr& kf = kappa.kappa[ka.second][kb.second];
      if (kf.is_zero()) continue;
      out += (va * vb * kf).scaled(gIJ);
    }
  return out;
}

ActionScalar l2_pairing(const BaseMetric& m, const FiberMetric& kappa, const VForm& a,
                        const VForm& b) {
  if (a.model()->kind != ModelKind::Torus)
    throw std::domain_error("l2_pairing requires a torus model");
  FuncExpr p = pointwise_inner(m, kappa, a, b);
  return ActionScalar{p.mean_value(), a.model()->dim, 1};
}

ActionScalar l2_pairing(const BaseMetric& m, const FiberMetric& kappa, const ScaledVForm& a,
                        const ScaledVForm& b) {
  ActionScalar s = l2_pairing(m, kappa, a.form, b.form);
  s.sqrt_power += a.sqrt_power + b.sqrt_power;
  return s;
}

}  // namespace weilcalc
