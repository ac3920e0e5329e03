#pragma once
// Channel parameterizations, the symmetric exponent model, and regime
// classification for the symmetric GCCIC.

#include <string>

namespace ccic {

struct ChannelParams {
  double snr_p = 0.0;
  double snr_c = 0.0;
  double inr_p = 0.0;
  double inr_c = 0.0;
  double coop = 0.0;  // the C link
  double theta_p = 0.0;
  double theta_c = 0.0;

  // The 2x2 IC matrix [[sqrt(snr_p), sqrt(inr_c) e^{j theta_c}],
  //                    [sqrt(inr_p) e^{j theta_p}, sqrt(snr_c)]] must be full
  // rank for the bounds that assume it.
  bool ic_matrix_full_rank() const;
  void validate() const;  // finite, nonnegative gains
};

struct SymmetricParams {
  double S = 0.0;      // linear SNR
  double alpha = 0.0;  // interference exponent
  double beta = 0.0;   // cooperation exponent
};

enum class Regime {
  GreenI,
  GreenII,
  Red,
  Yellow,
  BlueStrongInterference,
  BlueStrongCooperation,
};

const char* regime_name(Regime r);

// snr_p = snr_c = S, inr_p = inr_c = S^alpha, coop = S^beta; phases default 0.
ChannelParams expand_symmetric(const SymmetricParams& p, double theta_p = 0.0,
                               double theta_c = 0.0);

// (S + I + 2 sqrt(I*S*I/(1+I))) * (1+I); C >= delta_threshold is the
// absolute-level version of beta >= alpha + 1.
double delta_threshold(double S, double I);

// Exponent-level classification; boundary ties resolve downward (beta exactly
// at a boundary belongs to the lower-cooperation regime). Requires S > 1.
Regime classify_regime(const SymmetricParams& p);

// Absolute-level strong-cooperation predicate C >= delta_threshold(S, I).
bool strong_cooperation_level(double S, double I, double C);

// classify_regime on the exponents recovered from linear gains:
// alpha = log I / log S, beta = log C / log S. Requires S > 1.
Regime classify_regime_gains(double S, double I, double C);

}  // namespace ccic
