#include "algebroid.hpp"

#include <algorithm>
#include <sstream>

namespace weilcalc {

std::string ValidationReport::str() const {
  if (issues.empty()) return "ok";
  std::ostringstream os;
  for (const auto& i : issues) os << i.identity << " fails at " << i.where << "\n";
  return os.str();
}

std::vector<FuncExpr> AlgebroidPresentation::anchor_of(const Section& s) const {
  std::vector<FuncExpr> vf(dim(), FuncExpr::zero(model));
  for (int a = 0; a < rank(); ++a) {
    if (s[a].is_zero()) continue;
    for (int i = 0; i < dim(); ++i)
      if (!anchor[a][i].is_zero()) vf[i] += s[a] * anchor[a][i];
  }
  return vf;
}

Section AlgebroidPresentation::bracket_frames(int a, int b) const {
  Section out(rank(), FuncExpr::zero(model));
  for (int k = 0; k < rank(); ++k) out[k] = structure[a][b][k];
  return out;
}

Section bracket_sections(const AlgebroidPresentation& A, const Section& x, const Section& y) {
  // [x, y] = sum_{a,b} x_a y_b [e_a,e_b] + sum_b rho(x)(y_b) e_b - sum_a rho(y)(x_a) e_a
  int r = A.rank();
  Section out(r, FuncExpr::zero(A.model));
  for (int a = 0; a < r; ++a) {
    if (x[a].is_zero()) continue;
    for (int b = 0; b < r; ++b) {
      if (y[b].is_zero()) continue;
      for (int k = 0; k < r; ++k)
        if (!A.structure[a][b][k].is_zero()) out[k] += x[a] * y[b] * A.structure[a][b][k];
    }
  }
  auto rx = A.anchor_of(x);
  auto ry = A.anchor_of(y);
  for (int b = 0; b < r; ++b)
    for (int i = 0; i < A.dim(); ++i) {
      if (!rx[i].is_zero()) {
        FuncExpr dyb = y[b].partial(i);
        if (!dyb.is_zero()) out[b] += rx[i] * dyb;
      }
      if (!ry[i].is_zero()) {
        FuncExpr dxb = x[b].partial(i);
        if (!dxb.is_zero()) out[b] += (-ry[i]) * dxb;
      }
    }
  return out;
}

ValidationReport validate(const AlgebroidPresentation& A) {
  ValidationReport rep;
  int r = A.rank(), n = A.dim();
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (int k = 0; k < r; ++k)
        if (!(A.structure[a][b][k] + A.structure[b][a][k]).is_zero()) {
          std::ostringstream os;
          os << "(" << a << "," << b << ")";
          rep.issues.push_back({"bracket antisymmetry", os.str()});
        }

  // anchor morphism: rho([e_a,e_b]) = [rho(e_a), rho(e_b)] as vector fields
  for (int a = 0; a < r; ++a)
    for (int b = a + 1; b < r; ++b) {
      auto lhs = A.anchor_of(A.bracket_frames(a, b));
      for (int i = 0; i < n; ++i) {
        FuncExpr rhs = FuncExpr::zero(A.model);
        for (int j = 0; j < n; ++j) {
          if (!A.anchor[a][j].is_zero()) rhs += A.anchor[a][j] * A.anchor[b][i].partial(j);
          if (!A.anchor[b][j].is_zero()) rhs += (-A.anchor[b][j]) * A.anchor[a][i].partial(j);
        }
        if (!(lhs[i] - rhs).is_zero()) {
          std::ostringstream os;
          os << "(" << a << "," << b << ") component d/dx" << i + 1;
          rep.issues.push_back({"anchor bracket-morphism", os.str()});
          break;
        }
      }
    }

  // Jacobi identity for the Leibniz-extended bracket on frames
  for (int a = 0; a < r; ++a)
    for (int b = a + 1; b < r; ++b)
      for (int c = b + 1; c < r; ++c) {
        Section j1 = bracket_sections(A, A.bracket_frames(a, b), A.frame(c));
        Section j2 = bracket_sections(A, bracket_sections(A, A.frame(b), A.frame(c)), A.frame(a));
        Section j3 = bracket_sections(A, bracket_sections(A, A.frame(c), A.frame(a)), A.frame(b));
        bool bad = false;
        for (int k = 0; k < r && !bad; ++k)
          if (!(j1[k] + j2[k] + j3[k]).is_zero()) bad = true;
        if (bad) {
          std::ostringstream os;
          os << "(" << a << "," << b << "," << c << ")";
          rep.issues.push_back({"Jacobi identity", os.str()});
        }
      }
  return rep;
}

Section Representation::apply_frame(int a, const Section& xi) const {
  int rv = vbundle->rank;
  Section out(rv, FuncExpr::zero(vbundle->model));
  auto rho_a = algebroid->anchor_of(algebroid->frame(a));
  for (int nu = 0; nu < rv; ++nu) {
    for (int mu = 0; mu < rv; ++mu)
      if (!action[a][nu][mu].is_zero() && !xi[mu].is_zero())
        out[nu] += action[a][nu][mu] * xi[mu];
    for (int i = 0; i < algebroid->dim(); ++i)
      if (!rho_a[i].is_zero()) {
        FuncExpr d = xi[nu].partial(i);
        if (!d.is_zero()) out[nu] += rho_a[i] * d;
      }
  }
  return out;
}

Section Representation::apply(const Section& s, const Section& xi) const {
  int rv = vbundle->rank;
  Section out(rv, FuncExpr::zero(vbundle->model));
  for (int a = 0; a < algebroid->rank(); ++a) {
    if (s[a].is_zero()) continue;
    Section t = apply_frame(a, xi);
    for (int nu = 0; nu < rv; ++nu)
      if (!t[nu].is_zero()) out[nu] += s[a] * t[nu];
  }
  return out;
}

RepPtr trivial_rep(const AlgebroidPtr& A, int vrank) {
  BundlePtr V = make_bundle(A->model, vrank, "v");
  FuncExpr z = FuncExpr::zero(A->model);
  std::vector<ExprMat> action(A->rank(), ExprMat(vrank, std::vector<FuncExpr>(vrank, z)));
  return std::make_shared<Representation>(Representation{A, V, std::move(action)});
}

ValidationReport validate_rep(const Representation& rep) {
  ValidationReport out;
  const auto& A = *rep.algebroid;
  int r = A.rank(), rv = rep.vbundle->rank;
  for (int a = 0; a < r; ++a)
    for (int b = a + 1; b < r; ++b) {
      Section bracket = A.bracket_frames(a, b);
      for (int mu = 0; mu < rv; ++mu) {
        Section emu = frame_section(rep.vbundle, mu);
        Section lhs = rep.apply(bracket, emu);
        Section rhs1 = rep.apply_frame(a, rep.apply_frame(b, emu));
        Section rhs2 = rep.apply_frame(b, rep.apply_frame(a, emu));
        bool bad = false;
        for (int nu = 0; nu < rv && !bad; ++nu)
          if (!(lhs[nu] - rhs1[nu] + rhs2[nu]).is_zero()) bad = true;
        if (bad) {
          std::ostringstream os;
          os << "frames (" << a << "," << b << ") on e_" << mu;
          out.issues.push_back({"representation flatness", os.str()});
        }
      }
    }
  return out;
}

RepPtr end_rep(const Representation& rep) {
  // nabla^{A,End}_a E = action_a o E - E o action_a  (plus anchor derivative,
  // which the frame-table form encodes implicitly through apply_frame).
  const auto& A = rep.algebroid;
  int rv = rep.vbundle->rank;
  BundlePtr E = end_bundle(rep.vbundle);
  FuncExpr z = FuncExpr::zero(A->model);
  std::vector<ExprMat> action(A->rank(),
                              ExprMat(rv * rv, std::vector<FuncExpr>(rv * rv, z)));
  for (int a = 0; a < A->rank(); ++a)
    for (int p = 0; p < rv; ++p)
      for (int q = 0; q < rv; ++q) {
        int in = end_index(rv, p, q);
        for (int c = 0; c < rv; ++c) {
          if (!rep.action[a][c][p].is_zero())
            action[a][end_index(rv, c, q)][in] += rep.action[a][c][p];
          if (!rep.action[a][q][c].is_zero())
            action[a][end_index(rv, p, c)][in] += -rep.action[a][q][c];
        }
      }
  return std::make_shared<Representation>(Representation{A, E, std::move(action)});
}

int IdealBundle::local_of_global(int a) const {
  auto it = std::find(frames.begin(), frames.end(), a);
  return it == frames.end() ? -1 : static_cast<int>(it - frames.begin());
}

Section IdealBundle::include(const Section& local) const {
  Section out(algebroid->rank(), FuncExpr::zero(algebroid->model));
  for (std::size_t l = 0; l < frames.size(); ++l) out[frames[l]] = local[l];
  return out;
}

ValidationReport validate_ideal(const AlgebroidPtr& A, const std::vector<int>& frames) {
  ValidationReport rep;
  for (int a : frames)
    for (int i = 0; i < A->dim(); ++i)
      if (!A->anchor[a][i].is_zero()) {
        std::ostringstream os;
        os << "rho(e_" << a << ")";
        rep.issues.push_back({"ideal inside ker rho", os.str()});
        break;
      }
  for (int b = 0; b < A->rank(); ++b)
    for (int a : frames) {
      Section br = A->bracket_frames(b, a);
      for (int k = 0; k < A->rank(); ++k) {
        if (std::find(frames.begin(), frames.end(), k) != frames.end()) continue;
        if (!br[k].is_zero()) {
          std::ostringstream os;
          os << "[e_" << b << ", e_" << a << "]";
          rep.issues.push_back({"ideal bracket closure", os.str()});
          break;
        }
      }
    }
  return rep;
}

IdealPtr make_ideal(const AlgebroidPtr& A, std::vector<int> frames) {
  std::sort(frames.begin(), frames.end());
  auto rep = validate_ideal(A, frames);
  if (!rep.ok()) throw std::invalid_argument("invalid bundle of ideals: " + rep.str());
  int d = frames.size();
  BundlePtr K = make_bundle(A->model, d, "k");
  FuncExpr z = FuncExpr::zero(A->model);
  FiberBracket br{K, std::vector<ExprMat>(d, ExprMat(d, std::vector<FuncExpr>(d, z)))};
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        br.structure[i][j][k] = A->structure[frames[i]][frames[j]][frames[k]];
  return std::make_shared<IdealBundle>(IdealBundle{A, std::move(frames), K, std::move(br)});
}

RepPtr adjoint_rep(const IdealPtr& ideal) {
  const auto& A = ideal->algebroid;
  int d = ideal->frames.size();
  FuncExpr z = FuncExpr::zero(A->model);
  std::vector<ExprMat> action(A->rank(), ExprMat(d, std::vector<FuncExpr>(d, z)));
  for (int a = 0; a < A->rank(); ++a)
    for (int mu = 0; mu < d; ++mu)
      for (int nu = 0; nu < d; ++nu)
        action[a][nu][mu] = A->structure[a][ideal->frames[mu]][ideal->frames[nu]];
  return std::make_shared<Representation>(Representation{A, ideal->kbundle, std::move(action)});
}

VForm lie_derivative_form(const Representation& rep, const Section& alpha, const VForm& w) {
  const ModelPtr& model = w.model();
  int n = model->dim, rv = rep.vbundle->rank;
  auto rho = rep.algebroid->anchor_of(alpha);
  VForm out(w.bundle(), w.degree());
  for (const auto& [key, val] : w.components()) {
    // nabla^A_alpha of the component: rho(alpha) derivative plus the action
    FuncExpr acc = FuncExpr::zero(model);
    for (int i = 0; i < n; ++i)
      if (!rho[i].is_zero()) {
        FuncExpr d = val.partial(i);
        if (!d.is_zero()) acc += rho[i] * d;
      }
    out.add_component(key.first, key.second, acc);
    for (int a = 0; a < rep.algebroid->rank(); ++a) {
      if (alpha[a].is_zero()) continue;
      for (int nu = 0; nu < rv; ++nu)
        if (!rep.action[a][nu][key.second].is_zero())
          out.add_component(key.first, nu, alpha[a] * rep.action[a][nu][key.second] * val);
    }
    // - sum_j w(..., [rho(alpha), d/dx_{i_j}], ...) = + sum_j d(rho^l)/dx_{i_j} w(..., d/dx_l, ...)
    const IdxTuple& idx = key.first;
    for (std::size_t j = 0; j < idx.size(); ++j)
      for (int l = 0; l < n; ++l) {
        FuncExpr c = rho[l].partial(idx[j]);
        if (c.is_zero()) continue;
        IdxTuple modified = idx;
        modified[j] = l;
        out.add_component(modified, key.second, c * val);
      }
  }
  return out;
}

SymValued lie_derivative(const Representation& rep, const Section& alpha, const SymValued& gamma) {
  SymValued out(gamma.vbundle(), gamma.slot_rank(), gamma.sym_degree(), gamma.form_degree());
  // form-and-value part
  for (const auto& [key, val] : gamma.table())
    out.add_component(key, lie_derivative_form(rep, alpha, val));
  if (gamma.sym_degree() == 0) return out;

  // - sum_j gamma(b_1, ..., [alpha, e_{b_j}], ..., b_k), computed per output
  // multiset; candidates are the stored keys with one entry swapped.
  const auto& A = *rep.algebroid;
  std::vector<Section> brackets(A.rank());
  for (int b = 0; b < A.rank(); ++b) brackets[b] = bracket_sections(A, alpha, A.frame(b));

  std::set<std::vector<int>> outputs;
  for (const auto& [key, val] : gamma.table()) {
    (void)val;
    for (std::size_t pos = 0; pos < key.size(); ++pos)
      for (int b = 0; b < A.rank(); ++b) {
        std::vector<int> cand = key;
        cand[pos] = b;
        std::sort(cand.begin(), cand.end());
        outputs.insert(std::move(cand));
      }
  }
  for (const auto& B : outputs) {
    VForm acc(gamma.vbundle(), gamma.form_degree());
    for (std::size_t j = 0; j < B.size(); ++j) {
      const Section& br = brackets[B[j]];
      if (section_is_zero(br)) continue;
      std::vector<int> rest = B;
      rest.erase(rest.begin() + j);
      for (int b = 0; b < A.rank(); ++b) {
        if (br[b].is_zero()) continue;
        std::vector<int> filled = rest;
        filled.push_back(b);
        VForm g = gamma.component(std::move(filled));
        if (g.is_zero()) continue;
        acc += g.scaled(br[b]);
      }
    }
    if (!acc.is_zero()) out.add_component(B, acc.scaled(Rat(-1)));
  }
  return out;
}

AlgebroidPtr make_action_algebroid(const std::vector<RatMat>& structure_consts,
                                   const ExprMat& action_fields, const ModelPtr& model,
                                   std::string* error) {
  int r = structure_consts.size();
  int n = model->dim;
  FuncExpr z = FuncExpr::zero(model);
  AlgebroidPresentation A;
  A.model = model;
  A.bundle = make_bundle(model, r, "e");
  A.anchor = action_fields;
  A.structure.assign(r, ExprMat(r, std::vector<FuncExpr>(r, z)));
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (int k = 0; k < r; ++k)
        A.structure[a][b][k] = FuncExpr::constant(model, structure_consts[a][b][k]);
  // action must be a homomorphism: [X_a, X_b] = X_{[e_a,e_b]}
  for (int a = 0; a < r; ++a)
    for (int b = a + 1; b < r; ++b)
      for (int i = 0; i < n; ++i) {
        FuncExpr lie = FuncExpr::zero(model);
        for (int j = 0; j < n; ++j) {
          if (!action_fields[a][j].is_zero()) lie += action_fields[a][j] * action_fields[b][i].partial(j);
          if (!action_fields[b][j].is_zero()) lie += (-action_fields[b][j]) * action_fields[a][i].partial(j);
        }
        FuncExpr target = FuncExpr::zero(model);
        for (int k = 0; k < r; ++k)
          if (structure_consts[a][b][k] != 0)
            target += action_fields[k][i].scaled(structure_consts[a][b][k]);
        if (!(lie - target).is_zero()) {
          if (error) {
            std::ostringstream os;
            os << "action is not a Lie algebra homomorphism at generators (" << a << "," << b
               << ")";
            *error = os.str();
          }
          return nullptr;
        }
      }
  return std::make_shared<AlgebroidPresentation>(std::move(A));
}

bool ad_invariant(const IdealPtr& ideal, const FiberMetric& kappa) {
  const auto& A = *ideal->algebroid;
  int d = ideal->frames.size();
  for (int a = 0; a < A.rank(); ++a) {
    auto rho_a = A.anchor_of(A.frame(a));
    for (int mu = 0; mu < d; ++mu)
      for (int nu = mu; nu < d; ++nu) {
        FuncExpr lhs = FuncExpr::zero(A.model);
        for (int i = 0; i < A.dim(); ++i)
          if (!rho_a[i].is_zero()) lhs += rho_a[i] * kappa.kappa[mu][nu].partial(i);
        // [e_a, xi] as a local ideal section
        FuncExpr rhs = FuncExpr::zero(A.model);
        for (int l = 0; l < d; ++l) {
          const FuncExpr& c1 = A.structure[a][ideal->frames[mu]][ideal->frames[l]];
          if (!c1.is_zero()) rhs += c1 * kappa.kappa[l][nu];
          const FuncExpr& c2 = A.structure[a][ideal->frames[nu]][ideal->frames[l]];
          if (!c2.is_zero()) rhs += c2 * kappa.kappa[mu][l];
        }
        if (!(lhs - rhs).is_zero()) return false;
      }
  }
  return true;
}

std::string ratmat_str(const RatMat& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < m[i].size(); ++j) os << (j ? " " : "") << to_string(m[i][j]);
  }
  os << "]";
  return os.str();
}

}  // namespace weilcalc
