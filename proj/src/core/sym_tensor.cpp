#include "sym_tensor.hpp"

#include <algorithm>
#include <functional>

#include "mutation.hpp"

namespace weilcalc {

Section frame_section(const BundlePtr& b, int a) {
  Section s(b->rank, FuncExpr::zero(b->model));
  s[a] = FuncExpr::constant(b->model, 1);
  return s;
}

Section zero_section(const BundlePtr& b) { return Section(b->rank, FuncExpr::zero(b->model)); }

bool section_is_zero(const Section& s) {
  for (const auto& e : s)
    if (!e.is_zero()) return false;
  return true;
}

VForm SymValued::component(std::vector<int> multiset) const {
  std::sort(multiset.begin(), multiset.end());
  auto it = table_.find(multiset);
  if (it == table_.end()) return VForm::zero(vbundle_, form_degree_);
  return it->second;
}

void SymValued::add_component(std::vector<int> multiset, const VForm& w) {
  if (w.is_zero()) return;
  std::sort(multiset.begin(), multiset.end());
  auto it = table_.find(multiset);
  if (it == table_.end()) {
    table_.emplace(std::move(multiset), w);
  } else {
    it->second += w;
    if (it->second.is_zero()) table_.erase(it);
  }
}

SymValued SymValued::operator+(const SymValued& o) const {
  SymValued out = *this;
  for (const auto& [k, v] : o.table_) out.add_component(k, v);
  return out;
}

SymValued SymValued::operator-(const SymValued& o) const { return *this + o.scaled(-1); }

SymValued SymValued::scaled(const Rat& c) const {
  SymValued out(vbundle_, slot_rank_, sym_degree_, form_degree_);
  if (c == 0) return out;
  for (const auto& [k, v] : table_) out.table_.emplace(k, v.scaled(c));
  return out;
}

SymValued SymValued::partial_apply(const std::vector<Section>& sections) const {
  int used = sections.size();
  if (used == 0) return *this;
  if (used > sym_degree_) throw std::invalid_argument("partial_apply: too many sections");
  SymValued out(vbundle_, slot_rank_, sym_degree_ - used, form_degree_);
  std::vector<int> choice(used, 0);
  for (;;) {
    FuncExpr coeff = FuncExpr::constant(model(), 1);
    bool zero = false;
    for (int i = 0; i < used && !zero; ++i) {
      if (sections[i][choice[i]].is_zero())
        zero = true;
      else
        coeff = coeff * sections[i][choice[i]];
    }
    if (!zero) {
      std::vector<int> chosen(choice.begin(), choice.end());
      std::sort(chosen.begin(), chosen.end());
      for (const auto& [key, val] : table_) {
        std::vector<int> rest;
        std::size_t ci = 0;
        for (std::size_t ki = 0; ki < key.size(); ++ki) {
          if (ci < chosen.size() && key[ki] == chosen[ci])
            ++ci;
          else
            rest.push_back(key[ki]);
        }
        if (ci != chosen.size()) continue;
        out.add_component(rest, val.scaled(coeff));
      }
    }
    int i = used - 1;
    while (i >= 0 && choice[i] == slot_rank_ - 1) {
      choice[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++choice[i];
  }
  return out;
}

VForm SymValued::apply(const std::vector<Section>& sections) const {
  if (static_cast<int>(sections.size()) != sym_degree_)
    throw std::invalid_argument("apply: slot count mismatch");
  if (sym_degree_ == 0) return component({});
  return partial_apply(sections).component({});
}

namespace {

int perm_sign_by_inversions(const std::vector<int>& perm) {
  int inv = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

// Ordered selections of l distinct positions from {0..m-1}, each with the
// sign of the permutation (selection, complement ascending).
std::vector<std::pair<std::vector<int>, int>> ordered_selections(int m, int l) {
  std::vector<std::pair<std::vector<int>, int>> out;
  std::vector<int> sel;
  std::vector<bool> used(m, false);
  std::function<void()> rec = [&]() {
    if (static_cast<int>(sel.size()) == l) {
      std::vector<int> perm = sel;
      for (int i = 0; i < m; ++i)
        if (!used[i]) perm.push_back(i);
      out.emplace_back(sel, perm_sign_by_inversions(perm));
      return;
    }
    for (int i = 0; i < m; ++i) {
      if (used[i]) continue;
      used[i] = true;
      sel.push_back(i);
      rec();
      sel.pop_back();
      used[i] = false;
    }
  };
  rec();
  return out;
}

// Remove a sub-multiset from a sorted key; false if not contained.
bool remove_submultiset(const std::vector<int>& key, const std::vector<int>& sub,
                        std::vector<int>& rest) {
  rest.clear();
  std::size_t ci = 0;
  for (std::size_t ki = 0; ki < key.size(); ++ki) {
    if (ci < sub.size() && key[ki] == sub[ci])
      ++ci;
    else
      rest.push_back(key[ki]);
  }
  return ci == sub.size();
}

}  // namespace

SymValued dot_wedge(const SymValued& gamma, const std::vector<VForm>& thetas,
                    const std::vector<int>& theta_to_slot) {
  int l = thetas.size();
  if (l == 0) return gamma;
  if (l > gamma.sym_degree()) throw std::invalid_argument("dot_wedge: more 1-forms than slots");
  for (const auto& t : thetas)
    if (t.degree() != 1) throw std::invalid_argument("dot_wedge: thetas must be 1-forms");
  int k = gamma.form_degree();
  int outdeg = k + l;
  const ModelPtr& model = gamma.model();
  SymValued out(gamma.vbundle(), gamma.slot_rank(), gamma.sym_degree() - l, outdeg);
  if (outdeg > model->dim) return out;

  auto sels = ordered_selections(outdeg, l);

  Rat prefactor = 1;
  if (mutation_enabled(Mutation::WedgeDotPrefactorWrong)) {
    Rat lf = 1;
    for (int i = 2; i <= l; ++i) lf *= i;
    prefactor = Rat(1) / lf;
  }

  int srank = thetas[0].bundle()->rank;
  for (const IdxTuple& T : increasing_tuples(model->dim, outdeg)) {
    for (const auto& [sel, sgn] : sels) {
      IdxTuple rest;
      std::vector<bool> in_sel(outdeg, false);
      for (int p : sel) in_sel[p] = true;
      for (int p = 0; p < outdeg; ++p)
        if (!in_sel[p]) rest.push_back(T[p]);

      std::vector<int> wsel(l, 0);
      for (;;) {
        FuncExpr coeff = FuncExpr::constant(model, Rat(sgn) * prefactor);
        bool zero = false;
        std::vector<int> slots;
        for (int i = 0; i < l && !zero; ++i) {
          FuncExpr c = thetas[i].component({T[sel[i]]}, wsel[i]);
          if (c.is_zero())
            zero = true;
          else {
            coeff = coeff * c;
            slots.push_back(theta_to_slot[wsel[i]]);
          }
        }
        if (!zero) {
          std::sort(slots.begin(), slots.end());
          std::vector<int> restkey;
          for (const auto& [key, val] : gamma.table()) {
            if (!remove_submultiset(key, slots, restkey)) continue;
            for (int frame = 0; frame < gamma.vbundle()->rank; ++frame) {
              FuncExpr gv = val.component(rest, frame);
              if (gv.is_zero()) continue;
              VForm add(gamma.vbundle(), outdeg);
              add.add_component(T, frame, coeff * gv);
              out.add_component(restkey, add);
            }
          }
        }
        int i = l - 1;
        while (i >= 0 && wsel[i] == srank - 1) {
          wsel[i] = 0;
          --i;
        }
        if (i < 0) break;
        ++wsel[i];
      }
    }
  }
  return out;
}

SymValued dot_wedge_one(const SymValued& gamma, const VForm& theta,
                        const std::vector<int>& theta_to_slot) {
  if (gamma.sym_degree() < 1) throw std::invalid_argument("dot_wedge_one: no symmetric slot");
  int l = theta.degree();
  int k = gamma.form_degree();
  int outdeg = k + l;
  const ModelPtr& model = gamma.model();
  SymValued out(gamma.vbundle(), gamma.slot_rank(), gamma.sym_degree() - 1, outdeg);
  if (outdeg > model->dim) return out;

  // (l,k)-shuffles of positions with their signs
  std::vector<std::pair<IdxTuple, int>> shuffles;
  for (const IdxTuple& pick : increasing_tuples(outdeg, l)) {
    std::vector<int> perm(pick.begin(), pick.end());
    std::vector<bool> used(outdeg, false);
    for (int p : pick) used[p] = true;
    for (int p = 0; p < outdeg; ++p)
      if (!used[p]) perm.push_back(p);
    shuffles.emplace_back(pick, perm_sign_by_inversions(perm));
  }

  for (const IdxTuple& T : increasing_tuples(model->dim, outdeg)) {
    for (const auto& [sel, sgn] : shuffles) {
      IdxTuple targ, rest;
      std::vector<bool> in_sel(outdeg, false);
      for (int p : sel) in_sel[p] = true;
      for (int p = 0; p < outdeg; ++p) (in_sel[p] ? targ : rest).push_back(T[p]);
      for (int w = 0; w < theta.bundle()->rank; ++w) {
        FuncExpr tv = theta.component(targ, w);
        if (tv.is_zero()) continue;
        int slot = theta_to_slot[w];
        std::vector<int> restkey;
        for (const auto& [key, val] : gamma.table()) {
          if (!remove_submultiset(key, {slot}, restkey)) continue;
          for (int frame = 0; frame < gamma.vbundle()->rank; ++frame) {
            FuncExpr gv = val.component(rest, frame);
            if (gv.is_zero()) continue;
            VForm add(gamma.vbundle(), outdeg);
            add.add_component(T, frame, tv.scaled(sgn) * gv);
            out.add_component(restkey, add);
          }
        }
      }
    }
  }
  return out;
}

}  // namespace weilcalc
