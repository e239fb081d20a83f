#include "vform.hpp"

#include <algorithm>

namespace weilcalc {

int sort_sign(IdxTuple& idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i)
    for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
      if (idx[j - 1] == idx[j]) return 0;
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  return sign;
}

int merge_sign(const IdxTuple& a, const IdxTuple& b, IdxTuple& merged) {
  merged = a;
  merged.insert(merged.end(), b.begin(), b.end());
  return sort_sign(merged);
}

std::vector<IdxTuple> increasing_tuples(int n, int len) {
  std::vector<IdxTuple> out;
  if (len < 0 || len > n) return out;
  IdxTuple cur(len);
  for (int i = 0; i < len; ++i) cur[i] = i;
  for (;;) {
    out.push_back(cur);
    int i = len - 1;
    while (i >= 0 && cur[i] == n - len + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < len; ++j) cur[j] = cur[j - 1] + 1;
  }
  if (len == 0) out.assign(1, IdxTuple{});
  return out;
}

FuncExpr VForm::component(const IdxTuple& idx, int frame) const {
  IdxTuple s = idx;
  int sign = sort_sign(s);
  if (sign == 0) return FuncExpr::zero(model());
  auto it = comps_.find({s, frame});
  if (it == comps_.end()) return FuncExpr::zero(model());
  return sign == 1 ? it->second : -it->second;
}

void VForm::set_component(const IdxTuple& idx, int frame, const FuncExpr& val) {
  IdxTuple s = idx;
  int sign = sort_sign(s);
  if (sign == 0) {
    if (!val.is_zero()) throw std::invalid_argument("repeated index with nonzero value");
    return;
  }
  if (static_cast<int>(s.size()) != degree_) throw std::invalid_argument("tuple size != degree");
  if (frame < 0 || frame >= bundle_->rank) throw std::out_of_range("frame index");
  comps_.erase({s, frame});
  if (!val.is_zero()) comps_.emplace(std::make_pair(s, frame), sign == 1 ? val : -val);
}

void VForm::add_component(const IdxTuple& idx, int frame, const FuncExpr& val) {
  if (val.is_zero()) return;
  IdxTuple s = idx;
  int sign = sort_sign(s);
  if (sign == 0) return;
  if (static_cast<int>(s.size()) != degree_) throw std::invalid_argument("tuple size != degree");
  auto key = std::make_pair(s, frame);
  auto it = comps_.find(key);
  FuncExpr next = (it == comps_.end()) ? (sign == 1 ? val : -val)
                                       : it->second + (sign == 1 ? val : -val);
  if (it != comps_.end()) comps_.erase(it);
  if (!next.is_zero()) comps_.emplace(key, next);
}

VForm VForm::operator+(const VForm& o) const {
  if (!same_bundle(bundle_, o.bundle_) || degree_ != o.degree_)
    throw std::invalid_argument("VForm shape mismatch in addition");
  VForm out = *this;
  for (const auto& [k, v] : o.comps_) out.add_component(k.first, k.second, v);
  return out;
}

VForm VForm::operator-() const { return scaled(Rat(-1)); }
VForm VForm::operator-(const VForm& o) const { return *this + (-o); }

VForm VForm::scaled(const Rat& c) const {
  VForm out(bundle_, degree_);
  if (c == 0) return out;
  for (const auto& [k, v] : comps_) out.comps_.emplace(k, v.scaled(c));
  return out;
}

VForm VForm::scaled(const FuncExpr& f) const {
  VForm out(bundle_, degree_);
  if (f.is_zero()) return out;
  for (const auto& [k, v] : comps_) out.add_component(k.first, k.second, v * f);
  return out;
}

VForm VForm::interior(const std::vector<FuncExpr>& field) const {
  VForm out(bundle_, degree_ == 0 ? 0 : degree_ - 1);
  if (degree_ == 0) return out;
  for (const auto& [k, v] : comps_) {
    const IdxTuple& idx = k.first;
    for (std::size_t pos = 0; pos < idx.size(); ++pos) {
      const FuncExpr& xi = field[idx[pos]];
      if (xi.is_zero()) continue;
      IdxTuple rest;
      for (std::size_t j = 0; j < idx.size(); ++j)
        if (j != pos) rest.push_back(idx[j]);
      FuncExpr term = xi * v;
      out.add_component(rest, k.second, pos % 2 == 0 ? term : -term);
    }
  }
  return out;
}

VForm VForm::interior_coord(int i) const {
  std::vector<FuncExpr> field(model()->dim, FuncExpr::zero(model()));
  field[i] = FuncExpr::constant(model(), 1);
  return interior(field);
}

ScalarForm ScalarForm::d(const FuncExpr& f) {
  ScalarForm s(f.model(), 1);
  for (int i = 0; i < f.model()->dim; ++i) {
    FuncExpr df = f.partial(i);
    if (!df.is_zero()) s.comps_.emplace(IdxTuple{i}, df);
  }
  return s;
}

ScalarForm ScalarForm::coord_diff(const ModelPtr& m, int i) {
  ScalarForm s(m, 1);
  s.comps_.emplace(IdxTuple{i}, FuncExpr::constant(m, 1));
  return s;
}

FuncExpr ScalarForm::component(const IdxTuple& idx) const {
  IdxTuple s = idx;
  int sign = sort_sign(s);
  if (sign == 0) return FuncExpr::zero(model_);
  auto it = comps_.find(s);
  if (it == comps_.end()) return FuncExpr::zero(model_);
  return sign == 1 ? it->second : -it->second;
}

void ScalarForm::add_component(const IdxTuple& idx, const FuncExpr& val) {
  if (val.is_zero()) return;
  IdxTuple s = idx;
  int sign = sort_sign(s);
  if (sign == 0) return;
  auto it = comps_.find(s);
  FuncExpr next = (it == comps_.end()) ? (sign == 1 ? val : -val)
                                       : it->second + (sign == 1 ? val : -val);
  if (it != comps_.end()) comps_.erase(it);
  if (!next.is_zero()) comps_.emplace(s, next);
}

VForm wedge(const ScalarForm& s, const VForm& w) {
  VForm out(w.bundle(), s.degree() + w.degree());
  if (s.degree() + w.degree() > w.model()->dim) return out;
  for (const auto& [si, sv] : s.components())
    for (const auto& [wk, wv] : w.components()) {
      IdxTuple merged;
      int sign = merge_sign(si, wk.first, merged);
      if (sign == 0) continue;
      FuncExpr val = sv * wv;
      out.add_component(merged, wk.second, sign == 1 ? val : -val);
    }
  return out;
}

VForm wedge_df(const FuncExpr& f, const VForm& w) { return wedge(ScalarForm::d(f), w); }

VForm apply_matrix(const ExprMat& m, const VForm& w) {
  VForm out(w.bundle(), w.degree());
  for (const auto& [k, v] : w.components()) {
    int a = k.second;
    for (int b = 0; b < w.bundle()->rank; ++b) {
      if (m[b][a].is_zero()) continue;
      out.add_component(k.first, b, m[b][a] * v);
    }
  }
  return out;
}

VForm end_wedge_apply(const VForm& endform, const VForm& w) {
  int r = w.bundle()->rank;
  if (endform.bundle()->rank != r * r)
    throw std::invalid_argument("end_wedge_apply: endomorphism bundle rank mismatch");
  VForm out(w.bundle(), endform.degree() + w.degree());
  if (out.degree() > w.model()->dim) return out;
  for (const auto& [tk, tv] : endform.components()) {
    int outf = tk.second / r, inf = tk.second % r;
    for (const auto& [wk, wv] : w.components()) {
      if (wk.second != inf) continue;
      IdxTuple merged;
      int sign = merge_sign(tk.first, wk.first, merged);
      if (sign == 0) continue;
      FuncExpr val = tv * wv;
      out.add_component(merged, outf, sign == 1 ? val : -val);
    }
  }
  return out;
}

}  // namespace weilcalc
