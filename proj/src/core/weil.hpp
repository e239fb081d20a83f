#pragma once

#include <random>

#include "algebroid.hpp"

namespace weilcalc {

// Weil cochain of bidegree (p,q) with values in a representation V: a
// sequence (c_0,...,c_p) of frame-component tables. c_k is stored on keys
// (a_1<...<a_{p-k} | b_1<=...<=b_k) with values in Omega^{q-k}(M;V);
// evaluation on arbitrary sections expands the antisymmetric arguments by
// the Leibniz identity
//   c_k(f a_1, a_2,.. | .) = f c_k(a_1,.. | .) + df ^ c_{k+1}(a_2,.. | a_1, .).
class WeilCochain {
 public:
  using Key = std::pair<std::vector<int>, std::vector<int>>;  // (anti asc, sym sorted)

  WeilCochain() = default;
  WeilCochain(AlgebroidPtr A, RepPtr rep, int p, int q);

  int p() const { return p_; }
  int q() const { return q_; }
  const AlgebroidPtr& algebroid() const { return A_; }
  const RepPtr& rep() const { return rep_; }
  const BundlePtr& vbundle() const { return rep_->vbundle; }

  int value_degree(int k) const { return q_ - k; }
  bool level_nonzero(int k) const { return k >= 0 && k <= p_ && q_ - k >= 0; }

  // Component with antisymmetry sign in the first block; arbitrary input
  // order, repeated antisymmetric indices give zero.
  VForm component(int k, const std::vector<int>& anti, const std::vector<int>& sym) const;
  void set_component(int k, const std::vector<int>& anti, const std::vector<int>& sym,
                     const VForm& w);
  void add_component(int k, const std::vector<int>& anti, const std::vector<int>& sym,
                     const VForm& w);
  const std::map<Key, VForm>& table(int k) const { return tables_[k]; }

  // c_k with the antisymmetric block filled by frames and all symmetric
  // slots open.
  SymValued sym_slice(int k, const std::vector<int>& anti) const;

  // Leibniz evaluation on arbitrary sections.
  VForm eval(int k, const std::vector<Section>& anti, const std::vector<Section>& sym) const;

  bool is_zero() const;
  WeilCochain operator+(const WeilCochain& o) const;
  WeilCochain operator-(const WeilCochain& o) const;
  WeilCochain scaled(const Rat& c) const;

  friend bool operator==(const WeilCochain& a, const WeilCochain& b);

 private:
  VForm eval_rec(int k, std::vector<int>& prefix, const std::vector<Section>& anti,
                 std::size_t next, const std::vector<Section>& sym) const;

  AlgebroidPtr A_;
  RepPtr rep_;
  int p_ = 0, q_ = 0;
  std::vector<std::map<Key, VForm>> tables_;
};

// Simplicial differential W^{p,q} -> W^{p+1,q}: Koszul leading term plus the
// correction terms with alternating level signs and the interior-product
// tail against the anchor.
WeilCochain delta(const WeilCochain& c);

// delta at level p=0: gamma in Omega^q(M;V) to ((L^A gamma), (iota_rho gamma)).
WeilCochain delta0(const VForm& gamma, const AlgebroidPtr& A, const RepPtr& rep);

bool is_cocycle(const WeilCochain& c);
bool is_coboundary_of(const VForm& gamma, const WeilCochain& c);

// Exterior covariant derivative W^{p,q} -> W^{p,q+1} for a linear connection
// on the value bundle:
//   (-1)^k (d c)_k(a|b) = d^nabla c_k(a|b) - sum_i c_{k-1}(b_i, a | b without b_i).
WeilCochain d_nabla_weil(const LinearConnection& conn, const WeilCochain& c);

// A-invariance form of a connection on a representation, as a Weil cochain
// (T, theta) in W^{1,1}(A; End V):
//   theta(a) = nabla^A_a - nabla_{rho(a)},  T(a) = d^{nabla End} theta(a) - iota_{rho(a)} R.
WeilCochain invariance_form(const LinearConnection& conn, const RepPtr& rep);

// (T,theta) ^ c in W^{p+1,q+1}(A;V), the commutator defect of d^nabla and delta.
WeilCochain invariance_wedge(const WeilCochain& t_theta, const WeilCochain& c);

// Seeded random data for property sweeps.
FuncExpr random_expr(std::mt19937_64& rng, const ModelPtr& m);
VForm random_vform(std::mt19937_64& rng, const BundlePtr& b, int degree);
WeilCochain random_cochain(std::mt19937_64& rng, const AlgebroidPtr& A, const RepPtr& rep, int p,
                           int q);
Section random_section(std::mt19937_64& rng, const BundlePtr& b);

}  // namespace weilcalc
