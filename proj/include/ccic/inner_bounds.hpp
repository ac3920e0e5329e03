#pragma once
// Achievable regions for Gaussian signaling: the raw split-rate decoding
// systems, the FME'd closed forms, the dirty-paper coefficients, and the
// regime-specialized regions with their printed power splits.

#include <complex>

#include "ccic/channel.hpp"
#include "ccic/gaussian_stats.hpp"
#include "ccic/polytope.hpp"

namespace ccic {

// Which auxiliaries are switched off. E1 drops S1 and Z1 (no precoding at the
// primary Tx); E2 drops U1 (no common non-cooperative primary message).
enum class Scheme { E1_noS1Z1, E2_noU1 };

struct PowerSplit {
  // squared magnitudes; primary shares sum to 1, cognitive shares sum to 1
  double a1sq = 0.0, b1sq = 0.0, c1sq = 0.0, d1sq = 0.0;
  double a2sq = 0.0, b2sq = 0.0, c2sq = 0.0;

  void validate(Scheme s) const;  // share sums within 1e-12; d1 = 0 in E1
};

struct DpcCoefficients {
  std::complex<double> lambda_U{0.0, 0.0};
  std::complex<double> lambda_T{0.0, 0.0};
};

struct InnerOptions {
  double k1 = 0.0;  // I(Yc; V1); lower-bounding by 0 keeps the region achievable
  double k2 = 0.0;  // I(Yp; S1 | V1, U2)
};

// The full Gaussian signal model for the scheme: basis variables are the
// auxiliaries plus the three noises, derived variables Xp, Xc, Tf, Yp, Yc (and
// U2, T2 via the lambda precoding in E2).
LinearGaussianModel signal_model(const ChannelParams& p, const PowerSplit& s,
                                 Scheme scheme);

// The printed closed forms for lambda_U, lambda_T. Throws when b2 = 0 or
// c2 = 0 (the corresponding message is absent) unless there is nothing to
// pre-cancel at all.
DpcCoefficients dpc_coefficients(const ChannelParams& p, const PowerSplit& s);

// Linear system over {R1, R2, r10c, r11c, r10n, r11n, r20n, r22n}: the 18
// decoding constraints with every MI term evaluated on signal_model, the rate
// composition equalities, nonnegativity, and the scheme's zeroed split rate.
// With binning_inequalities the binning rates r20np, r22np become explicit
// variables bounded below by I(U2;S1) and I(U2,T2;S1); by default they are
// substituted at equality.
HPolyhedron raw_constraint_system(const ChannelParams& p, const PowerSplit& s,
                                  Scheme scheme,
                                  bool binning_inequalities = false);

// The 12-constraint (E1) or 10-constraint (E2) printed region; labels
// c1C1..c12C1 / c1C2..c10C2. E2 adds opts.k1 / opts.k1+opts.k2 where printed.
RatePolytope inner_closed_form(const ChannelParams& p, const PowerSplit& s,
                               Scheme scheme, const InnerOptions& opts = {});

// Exact k1 = I(Yc;V1) and k2 = I(Yp;S1|V1,U2) on the E2 signal model.
InnerOptions exact_k_terms(const ChannelParams& p, const PowerSplit& s);

// FME outputs that the hand derivation discards by a coding argument (when
// they bind, reclassifying the common message as private does better), so they
// are absent from inner_closed_form yet still cut the fixed-split polyhedron.
// Intersecting inner_closed_form with these rows reproduces the projection of
// raw_constraint_system exactly; labels name the combination (e.g. "c9+c18").
RatePolytope redundant_fme_rows(const ChannelParams& p, const PowerSplit& s,
                                Scheme scheme);

Scheme scheme_for_regime(Regime r);  // Green -> E1, Red/Yellow -> E2

// The printed splits. check_regime validates (S,I,C) against the regime's
// exponent classification; the formulas themselves are defined for any gains.
PowerSplit power_split_for_regime(double S, double I, double C, Regime r,
                                  bool check_regime = true);

// The regime regions exactly as printed (labels lowGreeniA.. etc.). Negative
// right-hand sides are clamped at 0 when clamp is set (a rate region always
// contains the origin); the ledger uses the unclamped constants.
RatePolytope inner_regime(double S, double I, double C, Regime r,
                          bool clamp = true);

}  // namespace ccic
