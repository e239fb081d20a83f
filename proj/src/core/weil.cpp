#include "weil.hpp"

#include <algorithm>

#include "mutation.hpp"

namespace weilcalc {

WeilCochain::WeilCochain(AlgebroidPtr A, RepPtr rep, int p, int q)
    : A_(std::move(A)), rep_(std::move(rep)), p_(p), q_(q) {
  if (p_ < 0 || q_ < 0) throw std::invalid_argument("WeilCochain bidegree must be nonnegative");
  tables_.resize(p_ + 1);
}

VForm WeilCochain::component(int k, const std::vector<int>& anti,
                             const std::vector<int>& sym) const {
  int deg = std::max(q_ - k, 0);
  if (!level_nonzero(k)) return VForm::zero(vbundle(), deg);
  std::vector<int> a = anti;
  int sign = sort_sign(a);
  if (sign == 0) return VForm::zero(vbundle(), deg);
  std::vector<int> s = sym;
  std::sort(s.begin(), s.end());
  auto it = tables_[k].find({a, s});
  if (it == tables_[k].end()) return VForm::zero(vbundle(), deg);
  return sign == 1 ? it->second : -it->second;
}

void WeilCochain::set_component(int k, const std::vector<int>& anti, const std::vector<int>& sym,
                                const VForm& w) {
  if (!level_nonzero(k)) {
    if (!w.is_zero()) throw std::invalid_argument("nonzero component at vanishing level");
    return;
  }
  std::vector<int> a = anti;
  int sign = sort_sign(a);
  if (sign == 0) return;
  std::vector<int> s = sym;
  std::sort(s.begin(), s.end());
  if (static_cast<int>(a.size()) != p_ - k || static_cast<int>(s.size()) != k)
    throw std::invalid_argument("component arity mismatch");
  if (w.degree() != q_ - k) throw std::invalid_argument("component degree mismatch");
  Key key{a, s};
  tables_[k].erase(key);
  if (!w.is_zero()) tables_[k].emplace(key, sign == 1 ? w : -w);
}

void WeilCochain::add_component(int k, const std::vector<int>& anti, const std::vector<int>& sym,
                                const VForm& w) {
  if (w.is_zero()) return;
  VForm cur = component(k, anti, sym);
  set_component(k, anti, sym, cur + w);
}

SymValued WeilCochain::sym_slice(int k, const std::vector<int>& anti) const {
  SymValued out(vbundle(), A_->rank(), k, std::max(q_ - k, 0));
  if (!level_nonzero(k)) return out;
  std::vector<int> a = anti;
  int sign = sort_sign(a);
  if (sign == 0) return out;
  for (const auto& [key, val] : tables_[k]) {
    if (key.first != a) continue;
    out.add_component(key.second, sign == 1 ? val : -val);
  }
  return out;
}

bool WeilCochain::is_zero() const {
  for (const auto& t : tables_)
    if (!t.empty()) return false;
  return true;
}

WeilCochain WeilCochain::operator+(const WeilCochain& o) const {
  if (p_ != o.p_ || q_ != o.q_) throw std::invalid_argument("cochain bidegree mismatch");
  WeilCochain out = *this;
  for (int k = 0; k <= p_; ++k)
    for (const auto& [key, val] : o.tables_[k]) out.add_component(k, key.first, key.second, val);
  return out;
}

WeilCochain WeilCochain::operator-(const WeilCochain& o) const { return *this + o.scaled(-1); }

WeilCochain WeilCochain::scaled(const Rat& c) const {
  WeilCochain out(A_, rep_, p_, q_);
  if (c == 0) return out;
  for (int k = 0; k <= p_; ++k)
    for (const auto& [key, val] : tables_[k]) out.tables_[k].emplace(key, val.scaled(c));
  return out;
}

bool operator==(const WeilCochain& a, const WeilCochain& b) {
  if (a.p_ != b.p_ || a.q_ != b.q_) return false;
  for (int k = 0; k <= a.p_; ++k)
    if (a.tables_[k] != b.tables_[k]) return false;
  return true;
}

VForm WeilCochain::eval(int k, const std::vector<Section>& anti,
                        const std::vector<Section>& sym) const {
  if (static_cast<int>(anti.size()) != p_ - k || static_cast<int>(sym.size()) != k)
    throw std::invalid_argument("eval arity mismatch");
  std::vector<int> prefix;
  return eval_rec(k, prefix, anti, 0, sym);
}

VForm WeilCochain::eval_rec(int k, std::vector<int>& prefix, const std::vector<Section>& anti,
                            std::size_t next, const std::vector<Section>& sym) const {
  const int deg = std::max(q_ - k, 0);
  if (next == anti.size()) {
    // all antisymmetric arguments frozen to frames; symmetric slots are
    // function-linear, so expand them multilinearly
    if (!level_nonzero(k)) return VForm::zero(vbundle(), deg);
    return sym_slice(k, prefix).apply(sym);
  }
  const Section& s = anti[next];
  VForm acc(vbundle(), deg);
  int jsign = (prefix.size() % 2 == 0) ? 1 : -1;
  for (int a = 0; a < A_->rank(); ++a) {
    const FuncExpr& fa = s[a];
    if (fa.is_zero()) continue;
    prefix.push_back(a);
    VForm head = eval_rec(k, prefix, anti, next + 1, sym);
    prefix.pop_back();
    if (!head.is_zero()) acc += head.scaled(fa);
    if (fa.is_constant()) continue;  // df = 0
    // Leibniz tail: the expanded argument moves into a new symmetric slot
    std::vector<Section> sym2 = sym;
    sym2.push_back(A_->frame(a));
    VForm tail = eval_rec(k + 1, prefix, anti, next + 1, sym2);
    if (!tail.is_zero()) {
      VForm t = wedge_df(fa, tail);
      acc += jsign == 1 ? t : -t;
    }
  }
  return acc;
}

WeilCochain delta(const WeilCochain& c) {
  const AlgebroidPtr& A = c.algebroid();
  const RepPtr& rep = c.rep();
  int p = c.p(), q = c.q();
  int r = A->rank();
  WeilCochain out(A, rep, p + 1, q);
  int tail_sign = mutation_enabled(Mutation::DeltaTailSignFlipped) ? 1 : -1;

  for (int k = 0; k <= p + 1; ++k) {
    if (q - k < 0) continue;
    int anti_n = p + 1 - k;
    int lvl_sign = (k % 2 == 0) ? 1 : -1;
    for (const auto& anti : increasing_tuples(r, anti_n)) {
      // symmetric multisets of size k
      std::vector<std::vector<int>> syms;
      {
        std::vector<int> cur(k, 0);
        for (;;) {
          bool sorted = true;
          for (int i = 1; i < k; ++i)
            if (cur[i - 1] > cur[i]) sorted = false;
          if (sorted) syms.push_back(cur);
          int i = k - 1;
          while (i >= 0 && cur[i] == r - 1) cur[i--] = 0;
          if (i < 0) break;
          ++cur[i];
        }
        if (k == 0) syms.assign(1, {});
      }
      for (const auto& sym : syms) {
        VForm acc(c.vbundle(), q - k);
        // Lie-derivative terms
        if (k <= p) {
          for (int i = 0; i < anti_n; ++i) {
            std::vector<int> rest;
            for (int j = 0; j < anti_n; ++j)
              if (j != i) rest.push_back(anti[j]);
            SymValued slice = c.sym_slice(k, rest);
            if (slice.is_zero()) continue;
            SymValued ld = lie_derivative(*rep, A->frame(anti[i]), slice);
            VForm v = ld.component(sym);
            if (v.is_zero()) continue;
            acc += (i % 2 == 0) ? v : -v;
          }
          // bracket terms
          for (int i = 0; i < anti_n; ++i)
            for (int j = i + 1; j < anti_n; ++j) {
              Section br = A->bracket_frames(anti[i], anti[j]);
              if (section_is_zero(br)) continue;
              std::vector<Section> args;
              args.push_back(br);
              for (int l = 0; l < anti_n; ++l)
                if (l != i && l != j) args.push_back(A->frame(anti[l]));
              std::vector<Section> symargs;
              for (int b : sym) symargs.push_back(A->frame(b));
              VForm v = c.eval(k, args, symargs);
              if (v.is_zero()) continue;
              acc += ((i + j) % 2 == 0) ? v : -v;
            }
        }
        // interior-product tail
        if (k >= 1 && c.level_nonzero(k - 1)) {
          for (std::size_t j = 0; j < sym.size(); ++j) {
            std::vector<int> rest_sym;
            for (std::size_t l = 0; l < sym.size(); ++l)
              if (l != j) rest_sym.push_back(sym[l]);
            VForm ck1 = c.component(k - 1, anti, rest_sym);
            if (ck1.is_zero()) continue;
            VForm v = ck1.interior(A->anchor_of(A->frame(sym[j])));
            if (v.is_zero()) continue;
            acc += tail_sign == 1 ? v : -v;
          }
        }
        if (!acc.is_zero()) out.set_component(k, anti, sym, acc.scaled(Rat(lvl_sign)));
      }
    }
  }
  return out;
}

WeilCochain delta0(const VForm& gamma, const AlgebroidPtr& A, const RepPtr& rep) {
  WeilCochain out(A, rep, 1, gamma.degree());
  for (int a = 0; a < A->rank(); ++a) {
    VForm lead = lie_derivative_form(*rep, A->frame(a), gamma);
    out.set_component(0, {a}, {}, lead);
    if (gamma.degree() >= 1) {
      VForm sym = gamma.interior(A->anchor_of(A->frame(a)));
      out.set_component(1, {}, {a}, sym);
    }
  }
  return out;
}

bool is_cocycle(const WeilCochain& c) { return delta(c).is_zero(); }

bool is_coboundary_of(const VForm& gamma, const WeilCochain& c) {
  if (c.p() != 1) throw std::invalid_argument("is_coboundary_of expects a level-1 cochain");
  return delta0(gamma, c.algebroid(), c.rep()) == c;
}

WeilCochain d_nabla_weil(const LinearConnection& conn, const WeilCochain& c) {
  if (!same_bundle(conn.bundle, c.vbundle()))
    throw std::invalid_argument("d_nabla_weil: connection bundle mismatch");
  const AlgebroidPtr& A = c.algebroid();
  int p = c.p(), q = c.q(), r = A->rank();
  WeilCochain out(A, c.rep(), p, q + 1);
  int corr_sign = mutation_enabled(Mutation::DNablaCorrectionSignFlipped) ? 1 : -1;

  for (int k = 0; k <= p; ++k) {
    if (q + 1 - k < 0) continue;
    int anti_n = p - k;
    int lvl_sign = (k % 2 == 0) ? 1 : -1;
    for (const auto& anti : increasing_tuples(r, anti_n)) {
      std::vector<std::vector<int>> syms;
      {
        std::vector<int> cur(k, 0);
        for (;;) {
          bool sorted = true;
          for (int i = 1; i < k; ++i)
            if (cur[i - 1] > cur[i]) sorted = false;
          if (sorted) syms.push_back(cur);
          int i = k - 1;
          while (i >= 0 && cur[i] == r - 1) cur[i--] = 0;
          if (i < 0) break;
          ++cur[i];
        }
        if (k == 0) syms.assign(1, {});
      }
      for (const auto& sym : syms) {
        VForm acc(c.vbundle(), q + 1 - k);
        if (c.level_nonzero(k)) {
          VForm ck = c.component(k, anti, sym);
          if (!ck.is_zero()) acc += d_nabla(conn, ck);
        }
        if (k >= 1 && c.level_nonzero(k - 1)) {
          for (std::size_t j = 0; j < sym.size(); ++j) {
            std::vector<int> rest_sym;
            for (std::size_t l = 0; l < sym.size(); ++l)
              if (l != j) rest_sym.push_back(sym[l]);
            std::vector<int> anti2;
            anti2.push_back(sym[j]);
            anti2.insert(anti2.end(), anti.begin(), anti.end());
            VForm v = c.component(k - 1, anti2, rest_sym);
            if (v.is_zero()) continue;
            acc += corr_sign == 1 ? v : -v;
          }
        }
        if (!acc.is_zero()) out.set_component(k, anti, sym, acc.scaled(Rat(lvl_sign)));
      }
    }
  }
  return out;
}

WeilCochain invariance_form(const LinearConnection& conn, const RepPtr& rep) {
  if (!same_bundle(conn.bundle, rep->vbundle))
    throw std::invalid_argument("invariance_form: bundle mismatch");
  const AlgebroidPtr& A = rep->algebroid;
  int rv = rep->vbundle->rank;
  BundlePtr EV = end_bundle(rep->vbundle);
  RepPtr erep = end_rep(*rep);
  WeilCochain out(A, erep, 1, 1);

  LinearConnection econn = end_connection(conn);
  VForm R = curvature_tensor(conn);

  for (int a = 0; a < A->rank(); ++a) {
    auto rho_a = A->anchor_of(A->frame(a));
    // theta(e_a) = action_a - sum_i rho_a^i Gamma_i, an End(V)-valued 0-form
    VForm theta(EV, 0);
    for (int out_f = 0; out_f < rv; ++out_f)
      for (int in_f = 0; in_f < rv; ++in_f) {
        FuncExpr v = rep->action[a][out_f][in_f];
        for (int i = 0; i < A->dim(); ++i)
          if (!rho_a[i].is_zero() && !conn.gamma[i][out_f][in_f].is_zero())
            v += (-rho_a[i]) * conn.gamma[i][out_f][in_f];
        if (!v.is_zero()) theta.set_component({}, end_index(rv, out_f, in_f), v);
      }
    // T(e_a) = d^{nabla End} theta(e_a) - iota_{rho(e_a)} R
    VForm T = d_nabla(econn, theta);
    if (!mutation_enabled(Mutation::InvarianceCurvatureDropped)) T = T - R.interior(rho_a);
    out.set_component(0, {a}, {}, T);
    out.set_component(1, {}, {a}, theta);
  }
  return out;
}

WeilCochain invariance_wedge(const WeilCochain& t_theta, const WeilCochain& c) {
  if (t_theta.p() != 1 || t_theta.q() != 1)
    throw std::invalid_argument("invariance_wedge: (T,theta) must live in W^{1,1}");
  const AlgebroidPtr& A = c.algebroid();
  int p = c.p(), q = c.q(), r = A->rank();
  WeilCochain out(A, c.rep(), p + 1, q + 1);

  for (int k = 0; k <= p + 1; ++k) {
    if (q + 1 - k < 0) continue;
    int anti_n = p + 1 - k;
    for (const auto& anti : increasing_tuples(r, anti_n)) {
      std::vector<std::vector<int>> syms;
      {
        std::vector<int> cur(k, 0);
        for (;;) {
          bool sorted = true;
          for (int i = 1; i < k; ++i)
            if (cur[i - 1] > cur[i]) sorted = false;
          if (sorted) syms.push_back(cur);
          int i = k - 1;
          while (i >= 0 && cur[i] == r - 1) cur[i--] = 0;
          if (i < 0) break;
          ++cur[i];
        }
        if (k == 0) syms.assign(1, {});
      }
      for (const auto& sym : syms) {
        VForm acc(c.vbundle(), q + 1 - k);
        if (k <= p) {
          for (int i = 0; i < anti_n; ++i) {
            VForm T = t_theta.component(0, {anti[i]}, {});
            if (T.is_zero()) continue;
            std::vector<int> rest;
            for (int j = 0; j < anti_n; ++j)
              if (j != i) rest.push_back(anti[j]);
            VForm ck = c.component(k, rest, sym);
            if (ck.is_zero()) continue;
            VForm v = end_wedge_apply(T, ck);
            if (v.is_zero()) continue;
            acc += (i % 2 == 0) ? v : -v;
          }
        }
        if (k >= 1 && c.level_nonzero(k - 1)) {
          for (std::size_t j = 0; j < sym.size(); ++j) {
            VForm th = t_theta.component(1, {}, {sym[j]});
            if (th.is_zero()) continue;
            std::vector<int> rest_sym;
            for (std::size_t l = 0; l < sym.size(); ++l)
              if (l != j) rest_sym.push_back(sym[l]);
            VForm v = c.component(k - 1, anti, rest_sym);
            if (v.is_zero()) continue;
            acc += end_wedge_apply(th, v);
          }
        }
        if (!acc.is_zero()) out.set_component(k, anti, sym, acc);
      }
    }
  }
  return out;
}

FuncExpr random_expr(std::mt19937_64& rng, const ModelPtr& m) {
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> pick(0, 5);
  FuncExpr f = FuncExpr::constant(m, coef(rng));
  if (m->kind == ModelKind::Affine) {
    for (int t = 0; t < 2; ++t) {
      if (pick(rng) < 3) continue;
      std::vector<long> e(m->dim, 0);
      e[pick(rng) % m->dim] = 1 + pick(rng) % 2;
      f += FuncExpr::monomial(m, e, coef(rng));
    }
  } else {
    for (int t = 0; t < 2; ++t) {
      if (pick(rng) < 3) continue;
      std::vector<long> k(m->dim, 0);
      k[pick(rng) % m->dim] = 1 + pick(rng) % 2;
      if (pick(rng) % 2)
        f += FuncExpr::cosine(m, k, coef(rng));
      else
        f += FuncExpr::sine(m, k, coef(rng));
    }
  }
  return f;
}

VForm random_vform(std::mt19937_64& rng, const BundlePtr& b, int degree) {
  VForm w(b, degree);
  if (degree > b->model->dim) return w;
  std::uniform_int_distribution<int> pick(0, 3);
  for (const auto& idx : increasing_tuples(b->model->dim, degree))
    for (int a = 0; a < b->rank; ++a) {
      if (pick(rng) != 0) continue;  // sparse
      FuncExpr f = random_expr(rng, b->model);
      if (!f.is_zero()) w.add_component(idx, a, f);
    }
  if (w.is_zero() && degree <= b->model->dim) {
    // keep sweeps from silently testing zero
    std::vector<int> idx;
    for (int i = 0; i < degree; ++i) idx.push_back(i);
    w.set_component(idx, 0, random_expr(rng, b->model) + FuncExpr::constant(b->model, 1));
  }
  return w;
}

Section random_section(std::mt19937_64& rng, const BundlePtr& b) {
  Section s(b->rank, FuncExpr::zero(b->model));
  for (int a = 0; a < b->rank; ++a) s[a] = random_expr(rng, b->model);
  return s;
}

WeilCochain random_cochain(std::mt19937_64& rng, const AlgebroidPtr& A, const RepPtr& rep, int p,
                           int q) {
  WeilCochain c(A, rep, p, q);
  int r = A->rank();
  for (int k = 0; k <= p; ++k) {
    if (q - k < 0) continue;
    if (q - k > A->dim()) continue;
    for (const auto& anti : increasing_tuples(r, p - k)) {
      std::vector<int> sym(k, 0);
      for (;;) {
        bool sorted = true;
        for (int i = 1; i < k; ++i)
          if (sym[i - 1] > sym[i]) sorted = false;
        if (sorted) {
          VForm w = random_vform(rng, rep->vbundle, q - k);
          if (!w.is_zero()) c.set_component(k, anti, sym, w);
        }
        if (k == 0) break;
        int i = k - 1;
        while (i >= 0 && sym[i] == r - 1) sym[i--] = 0;
        if (i < 0) break;
        ++sym[i];
      }
    }
  }
  return c;
}

}  // namespace weilcalc
