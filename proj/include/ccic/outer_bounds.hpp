#pragma once
// Every Gaussian outer bound of the toolkit: the eight symmetric closed forms,
// the rho-parameterized pre-relaxation forms, the regime-specialized
// relaxations, and the two reference regions.

#include <complex>
#include <vector>

#include "ccic/channel.hpp"
#include "ccic/polytope.hpp"

namespace ccic {

enum class OuterBoundId {
  CutsetP_C,  // 11a
  CutsetP_I,  // 11b
  CutsetC,    // 11c
  SumTuni,    // 11d
  SumTuniC,   // 11e
  SumPV,      // 11f
  TwoPpPc,    // 11g
  PpTwoPc,    // 11h
};

const char* outer_bound_tag(OuterBoundId id);

// The eight half-planes of the symmetric outer-bound lemma, in the fixed order
// 11a..11h, labels = outer_bound_tag. Additive log(2) constants are kept in the
// constraint's additive_const field (rhs includes them).
RatePolytope outer_symmetric(double S, double I, double C);

// Pre-relaxation bounds evaluated at the given input correlation rho, in the
// same 11a..11h order, |rho| <= 1 required.
RatePolytope outer_general_rho(const ChannelParams& p, std::complex<double> rho);

// The matching rho-free forms after the per-term maximizations, including their
// relaxation constants, for the same parameters. Element k upper-bounds element
// k of outer_general_rho for every admissible rho; for symmetric parameters it
// coincides with outer_symmetric.
RatePolytope outer_general_rho_free(const ChannelParams& p);

// Regime-specialized relaxed outer regions (labels outGreeniA.., outGreeniiA..,
// outRedA.., outYellowA..). Throws on a regime mismatch with the exponent-level
// classification implied by (S, I, C).
RatePolytope outer_regime(double S, double I, double C, Regime r);

enum class ReferenceKind { NonCausalCIC, ClassicalIC };

RatePolytope outer_reference(double S, double I, double C, ReferenceKind kind);

// Right-hand sides of the four C-dependent symmetric constraints (11e, 11f,
// 11g, 11h), used by the monotonicity-in-C sweep.
std::vector<double> c_dependent_rhs(double S, double I, double C);

}  // namespace ccic
