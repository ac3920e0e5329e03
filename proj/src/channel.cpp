#include "ccic/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace ccic {

bool ChannelParams::ic_matrix_full_rank() const {
  // det = sqrt(snr_p snr_c) - sqrt(inr_p inr_c) e^{j(theta_p + theta_c)}
  const double mag_direct = std::sqrt(snr_p * snr_c);
  const double mag_cross = std::sqrt(inr_p * inr_c);
  const double re = mag_direct - mag_cross * std::cos(theta_p + theta_c);
  const double im = -mag_cross * std::sin(theta_p + theta_c);
  const double scale = std::max(mag_direct, mag_cross);
  return std::hypot(re, im) > 1e-12 * std::max(scale, 1.0);
}

void ChannelParams::validate() const {
  for (double g : {snr_p, snr_c, inr_p, inr_c, coop})
    if (!(g >= 0.0) || !std::isfinite(g))
      throw std::invalid_argument("ChannelParams: gains must be finite and >= 0");
}

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::GreenI: return "GreenI";
    case Regime::GreenII: return "GreenII";
    case Regime::Red: return "Red";
    case Regime::Yellow: return "Yellow";
    case Regime::BlueStrongInterference: return "BlueStrongInterference";
    case Regime::BlueStrongCooperation: return "BlueStrongCooperation";
  }
  return "?";
}

ChannelParams expand_symmetric(const SymmetricParams& p, double theta_p,
                               double theta_c) {
  if (!(p.S >= 0.0) || !(p.alpha >= 0.0) || !(p.beta >= 0.0))
    throw std::invalid_argument("expand_symmetric: S, alpha, beta must be >= 0");
  ChannelParams cp;
  cp.snr_p = cp.snr_c = p.S;
  cp.inr_p = cp.inr_c = std::pow(p.S, p.alpha);
  cp.coop = std::pow(p.S, p.beta);
  cp.theta_p = theta_p;
  cp.theta_c = theta_c;
  return cp;
}

double delta_threshold(double S, double I) {
  return (S + I + 2.0 * std::sqrt(I * S * I / (1.0 + I))) * (1.0 + I);
}

Regime classify_regime(const SymmetricParams& p) {
  if (!(p.S > 1.0))
    throw std::invalid_argument("classify_regime: S must exceed 1 in linear scale");
  if (p.alpha >= 1.0) return Regime::BlueStrongInterference;
  if (p.beta >= p.alpha + 1.0) return Regime::BlueStrongCooperation;
  if (p.beta > 1.0) return Regime::Yellow;
  if (p.beta > std::max(p.alpha, 1.0 - p.alpha)) return Regime::Red;
  const double green_split = std::max(2.0 * p.alpha - 1.0, 0.0);
  return p.beta > green_split ? Regime::GreenII : Regime::GreenI;
}

bool strong_cooperation_level(double S, double I, double C) {
  return C >= delta_threshold(S, I);
}

Regime classify_regime_gains(double S, double I, double C) {
  if (!(S > 1.0))
    throw std::invalid_argument("classify_regime: S must exceed 1 in linear scale");
  SymmetricParams sp;
  sp.S = S;
  const double logS = std::log(S);
  // I = 0 or C = 0 map to exponent -inf, which flows through the comparisons
  // in classify_regime with the intended meaning.
  sp.alpha = std::log(I) / logS;
  sp.beta = std::log(C) / logS;
  return classify_regime(sp);
}

}  // namespace ccic
