#pragma once

namespace weilcalc {

// Fault injection for the verification suites. Each value names a single
// deliberate corruption of one formula site; the negative-control suite
// enables one at a time and demands that at least one identity check fails,
// guarding the suites against vacuous passes. All mutations are off in
// normal operation.
enum class Mutation {
  None = 0,
  DeltaTailSignFlipped,        // simplicial differential: sign of the interior-product tail
  DNablaCorrectionSignFlipped, // exterior covariant derivative: sign of the correction sum
  HorizontalDotWedgeDropped,   // horizontal projection at p=1: drop the pairing term
  CurvingBracketDropped,       // curving deformation: drop the -1/2 [gamma,gamma] term
  WedgeDotPrefactorWrong,      // pairing of symbol slots: extra 1/l! prefactor
  InvarianceCurvatureDropped,  // A-invariance form: drop the iota_rho R term
  CurvatureSymbolSignFlipped,  // explicit curvature route: flip the sign of -U(h alpha)
  CouplingFiberBracketDropped, // coupling bracket: drop the fiber bracket term
  CodifferentialSignFlipped,   // codifferential: flip the (-1)^k prefix
  SCondThirdTermDropped,       // rewritten condition on U: drop the covariant-derivative term
};

void set_mutation(Mutation m);
Mutation active_mutation();
bool mutation_enabled(Mutation m);

// RAII guard for enabling a mutation within one check.
struct MutationGuard {
  explicit MutationGuard(Mutation m) { set_mutation(m); }
  ~MutationGuard() { set_mutation(Mutation::None); }
};

}  // namespace weilcalc
