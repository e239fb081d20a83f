#pragma once

#include <memory>

#include "connection.hpp"
#include "fiber.hpp"
#include "sym_tensor.hpp"

namespace weilcalc {

struct ValidationIssue {
  std::string identity;
  std::string where;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
  std::string str() const;
};

// Trivialized Lie algebroid: anchor matrix and structure functions over a
// coordinate model.
//   rho(e_a) = sum_i anchor[a][i] d/dx_i,   [e_a,e_b] = sum_k structure[a][b][k] e_k.
struct AlgebroidPresentation {
  ModelPtr model;
  BundlePtr bundle;
  ExprMat anchor;                  // rank x dim
  std::vector<ExprMat> structure;  // [a][b][k]

  int rank() const { return bundle->rank; }
  int dim() const { return model->dim; }

  Section frame(int a) const { return frame_section(bundle, a); }
  std::vector<FuncExpr> anchor_of(const Section& s) const;
  Section bracket_frames(int a, int b) const;
};

using AlgebroidPtr = std::shared_ptr<const AlgebroidPresentation>;

// Leibniz/bilinear extension of the frame bracket to arbitrary sections.
Section bracket_sections(const AlgebroidPresentation& A, const Section& x, const Section& y);

// Antisymmetry, anchor bracket-morphism and Jacobi identity, exactly on
// frames; failures are reported with the offending frame tuple.
ValidationReport validate(const AlgebroidPresentation& A);

// Flat A-connection on a trivialized bundle V:
//   nabla^A_{e_a} e_mu = sum_nu action[a][nu][mu] e_nu.
struct Representation {
  AlgebroidPtr algebroid;
  BundlePtr vbundle;
  std::vector<ExprMat> action;  // [a][out][in]

  Section apply_frame(int a, const Section& xi) const;
  // Leibniz extension to arbitrary sections of A.
  Section apply(const Section& s, const Section& xi) const;
};

using RepPtr = std::shared_ptr<const Representation>;

RepPtr trivial_rep(const AlgebroidPtr& A, int vrank);

// Flatness of the action: nabla^A_{[e_a,e_b]} = [nabla^A_a, nabla^A_b].
ValidationReport validate_rep(const Representation& rep);

// Induced representation on End(V).
RepPtr end_rep(const Representation& rep);

// Bundle of ideals spanned by a subset of the frame.
struct IdealBundle {
  AlgebroidPtr algebroid;
  std::vector<int> frames;  // sorted A-frame indices spanning the ideal
  BundlePtr kbundle;
  FiberBracket bracket;  // restricted structure functions

  int local_of_global(int a) const;
  Section include(const Section& local) const;  // k-section as A-section
};

using IdealPtr = std::shared_ptr<const IdealBundle>;

// Checks rho|ideal = 0 and bracket closure, then builds the fiber bracket.
IdealPtr make_ideal(const AlgebroidPtr& A, std::vector<int> frames);
ValidationReport validate_ideal(const AlgebroidPtr& A, const std::vector<int>& frames);

// Adjoint representation of A on a bundle of ideals: nabla^A_alpha xi = [alpha, xi].
RepPtr adjoint_rep(const IdealPtr& ideal);

// Lie derivative of a symbol-slot form along a section, by the chain rule
// over the representation, the bracket in symmetric slots, and the anchor on
// form arguments.
SymValued lie_derivative(const Representation& rep, const Section& alpha, const SymValued& gamma);

// Same for a plain V-valued form (no symmetric slots).
VForm lie_derivative_form(const Representation& rep, const Section& alpha, const VForm& w);

// Action algebroid g x M for a Lie algebra action by vector fields.
// structure: constant structure functions of g; action[a][i]: the vector
// field of the a-th generator.
AlgebroidPtr make_action_algebroid(const std::vector<RatMat>& structure_consts,
                                   const ExprMat& action_fields, const ModelPtr& model,
                                   std::string* error = nullptr);

// Ad-invariance of a metric on an ideal: rho(alpha)<xi,eta> = <[alpha,xi],eta> + <xi,[alpha,eta]>.
bool ad_invariant(const IdealPtr& ideal, const FiberMetric& kappa);

std::string ratmat_str(const RatMat& m);

}  // namespace weilcalc
