#pragma once

#include "vform.hpp"

namespace weilcalc {

using Section = std::vector<FuncExpr>;  // frame components

Section frame_section(const BundlePtr& b, int a);
Section zero_section(const BundlePtr& b);
bool section_is_zero(const Section& s);

// Element of Omega^k(M; S^j(A*) (x) V): a form-valued, fully symmetric,
// function-linear table over multisets of A-frame indices.
class SymValued {
 public:
  SymValued() = default;
  SymValued(BundlePtr vbundle, int slot_rank, int sym_degree, int form_degree)
      : vbundle_(std::move(vbundle)),
        slot_rank_(slot_rank),
        sym_degree_(sym_degree),
        form_degree_(form_degree) {}

  const BundlePtr& vbundle() const { return vbundle_; }
  const ModelPtr& model() const { return vbundle_->model; }
  int slot_rank() const { return slot_rank_; }
  int sym_degree() const { return sym_degree_; }
  int form_degree() const { return form_degree_; }
  bool is_zero() const { return table_.empty(); }

  VForm component(std::vector<int> multiset) const;
  void add_component(std::vector<int> multiset, const VForm& w);
  const std::map<std::vector<int>, VForm>& table() const { return table_; }

  SymValued operator+(const SymValued& o) const;
  SymValued operator-(const SymValued& o) const;
  SymValued scaled(const Rat& c) const;

  // Multilinear evaluation: fills the first `sections.size()` symmetric
  // slots; remaining slots stay open.
  SymValued partial_apply(const std::vector<Section>& sections) const;

  // Full evaluation to a plain form (sections.size() == sym_degree).
  VForm apply(const std::vector<Section>& sections) const;

  friend bool operator==(const SymValued& a, const SymValued& b) {
    return a.sym_degree_ == b.sym_degree_ && a.form_degree_ == b.form_degree_ &&
           a.table_ == b.table_;
  }

 private:
  BundlePtr vbundle_;
  int slot_rank_ = 0;
  int sym_degree_ = 0;
  int form_degree_ = 0;
  std::map<std::vector<int>, VForm> table_;
};

// Pairing of a symbol-slot form with bundle-valued 1-forms:
//   (gamma . (theta_1..theta_l))(X_1..X_{k+l})
//     = (1/k!) sum over permutations of sgn * gamma(theta_1(X_..), ...)(X_..),
// consuming l symmetric slots. theta_to_slot maps the theta bundle's frame
// indices into slot frame indices (the inclusion of the ideal into A).
SymValued dot_wedge(const SymValued& gamma, const std::vector<VForm>& thetas,
                    const std::vector<int>& theta_to_slot);

// Single pairing against a theta of arbitrary form degree l (shuffle sum with
// the 1/(k! l!) normalization reduced to shuffles).
SymValued dot_wedge_one(const SymValued& gamma, const VForm& theta,
                        const std::vector<int>& theta_to_slot);

}  // namespace weilcalc
