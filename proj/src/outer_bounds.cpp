#include "ccic/outer_bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace ccic {

namespace {

const double kLog3 = std::log2(3.0);

double lg(double x) { return std::log2(1.0 + x); }  // log2(1+x)

double sq(double x) { return x * x; }

}  // namespace

const char* outer_bound_tag(OuterBoundId id) {
  switch (id) {
    case OuterBoundId::CutsetP_C: return "CutsetP_C";
    case OuterBoundId::CutsetP_I: return "CutsetP_I";
    case OuterBoundId::CutsetC: return "CutsetC";
    case OuterBoundId::SumTuni: return "SumTuni";
    case OuterBoundId::SumTuniC: return "SumTuniC";
    case OuterBoundId::SumPV: return "SumPV";
    case OuterBoundId::TwoPpPc: return "TwoPpPc";
    case OuterBoundId::PpTwoPc: return "PpTwoPc";
  }
  return "?";
}

RatePolytope outer_symmetric(double S, double I, double C) {
  if (S < 0 || I < 0 || C < 0)
    throw std::invalid_argument("outer_symmetric: gains must be >= 0");
  const double sum_tuni = lg(S / (1.0 + I)) + lg(sq(std::sqrt(S) + std::sqrt(I)));
  const double delta_11g = lg(C / (1.0 + I + S)) + lg(I + S * (1.0 + C) / (1.0 + I + C));
  const double delta_11h = lg(C + I + S / (1.0 + I));

  RatePolytope P;
  P.add(1, 0, lg(C + S), "CutsetP_C");
  P.add(1, 0, lg(sq(std::sqrt(S) + std::sqrt(I))), "CutsetP_I");
  P.add(0, 1, lg(S), "CutsetC");
  P.add(1, 1, sum_tuni, "SumTuni");
  P.add(1, 1, lg((S + C) / (1.0 + I)) + lg(sq(std::sqrt(S) + std::sqrt(I))),
        "SumTuniC");
  P.add(1, 1,
        lg(C + I + S / (1.0 + I)) + lg(I + S * (1.0 + C) / (1.0 + C + I)) + 2.0,
        "SumPV", 2.0);
  P.add(2, 1, sum_tuni + delta_11g + 1.0, "TwoPpPc", 1.0);
  P.add(1, 2, sum_tuni + delta_11h + 1.0, "PpTwoPc", 1.0);
  return P;
}

RatePolytope outer_general_rho(const ChannelParams& cp, std::complex<double> rho) {
  cp.validate();
  if (std::abs(rho) > 1.0 + 1e-12)
    throw std::invalid_argument("outer_general_rho: |rho| must be <= 1");
  const double r2 = std::min(std::norm(rho), 1.0);
  const double one_m = 1.0 - r2;
  // Re{rho e^{-j theta_c}} and Re{rho e^{+j theta_p}}
  const double re_c = (rho * std::polar(1.0, -cp.theta_c)).real();
  const double re_p = (rho * std::polar(1.0, cp.theta_p)).real();
  const double S_p = cp.snr_p, S_c = cp.snr_c, I_p = cp.inr_p, I_c = cp.inr_c,
               C = cp.coop;

  RatePolytope P;
  P.add(1, 0, lg((C + S_p) * one_m), "CutsetP_C");
  P.add(1, 0, lg(S_p + I_c + 2.0 * std::sqrt(S_p * I_c) * re_c), "CutsetP_I");
  P.add(0, 1, lg(one_m * S_c), "CutsetC");
  P.add(1, 1,
        lg(S_c * one_m / (1.0 + I_c * one_m)) +
            lg(S_p + I_c + 2.0 * std::sqrt(S_p * I_c) * re_c),
        "SumTuni");
  P.add(1, 1,
        lg((S_p + C) * one_m / (1.0 + I_p * one_m)) +
            lg(S_c + I_p + 2.0 * std::sqrt(S_c * I_p) * re_p),
        "SumTuniC");
  P.add(1, 1,
        lg((S_p + I_c + 2.0 * std::sqrt(S_p * I_c) * re_c +
            one_m * (I_p * I_c + C * I_c)) /
           (1.0 + C + I_p)) +
            lg((C + S_c + I_p + 2.0 * std::sqrt(S_c * I_p) * re_p +
                one_m * (I_p * I_c + C * S_c + I_c * C)) /
               (1.0 + I_c)),
        "SumPV");
  P.add(2, 1,
        lg(S_p + I_c + 2.0 * std::sqrt(S_p * I_c) * re_c) +
            lg(S_p * one_m / (1.0 + (C + I_p) * one_m)) +
            lg((C + S_c + I_p + 2.0 * std::sqrt(S_c * I_p) * re_p +
                one_m * (I_p * I_c + C * S_c + I_c * C)) /
               (1.0 + I_c)),
        "TwoPpPc");
  P.add(1, 2,
        lg(S_c + I_p + 2.0 * std::sqrt(S_c * I_p) * re_p) +
            lg(S_c * one_m / (1.0 + I_c * one_m)) +
            lg((S_p + I_c + 2.0 * std::sqrt(S_p * I_c) * re_c +
                one_m * (I_p * I_c + C * I_c)) /
               (1.0 + C + I_p)) +
            lg(C / (1.0 + I_p)),
        "PpTwoPc");
  return P;
}

RatePolytope outer_general_rho_free(const ChannelParams& cp) {
  cp.validate();
  const double S_p = cp.snr_p, S_c = cp.snr_c, I_p = cp.inr_p, I_c = cp.inr_c,
               C = cp.coop;
  RatePolytope P;
  P.add(1, 0, lg(C + S_p), "CutsetP_C");
  P.add(1, 0, lg(sq(std::sqrt(S_p) + std::sqrt(I_c))), "CutsetP_I");
  P.add(0, 1, lg(S_c), "CutsetC");
  P.add(1, 1, lg(S_c / (1.0 + I_c)) + lg(sq(std::sqrt(S_p) + std::sqrt(I_c))),
        "SumTuni");
  P.add(1, 1, lg((S_p + C) / (1.0 + I_p)) + lg(sq(std::sqrt(S_c) + std::sqrt(I_p))),
        "SumTuniC");
  P.add(1, 1,
        lg(I_c + S_p / (1.0 + C + I_p)) +
            lg(C + I_p + S_c * (1.0 + C) / (1.0 + I_c)) + 2.0,
        "SumPV", 2.0);
  P.add(2, 1,
        lg(sq(std::sqrt(S_p) + std::sqrt(I_c))) + lg(S_p / (1.0 + I_p + C)) +
            lg(C + I_p + S_c * (1.0 + C) / (1.0 + I_c)) + 1.0,
        "TwoPpPc", 1.0);
  P.add(1, 2,
        lg(sq(std::sqrt(S_c) + std::sqrt(I_p))) + lg(S_c / (1.0 + I_c)) +
            lg(I_c + S_p / (1.0 + C + I_p)) + lg(C / (1.0 + I_p)) + 1.0,
        "PpTwoPc", 1.0);
  return P;
}

RatePolytope outer_regime(double S, double I, double C, Regime r) {
  if (classify_regime_gains(S, I, C) != r)
    throw std::invalid_argument("outer_regime: parameters do not lie in regime " +
                                std::string(regime_name(r)));
  RatePolytope P;
  switch (r) {
    case Regime::GreenI:
      P.add(1, 0, lg(S) + 1.0, "outGreeniA", 1.0);
      P.add(0, 1, lg(S), "outGreeniB");
      P.add(1, 1, lg(S / (1.0 + I)) + lg(S + I) + 1.0, "outGreeniC", 1.0);
      P.add(1, 1, 2.0 * lg(I + S / (1.0 + I)) + 4.0, "outGreeniD", 4.0);
      P.add(2, 1, lg(S + I) + lg(S / (1.0 + I)) + lg(I + S / (1.0 + I)) + 4.0,
            "outGreeniE", 4.0);
      P.add(1, 2, lg(S + I) + lg(S / (1.0 + I)) + lg(I + S / (1.0 + I)) + 3.0,
            "outGreeniF", 3.0);
      break;
    case Regime::GreenII:
      P.add(1, 0, lg(S) + 1.0, "outGreeniiA", 1.0);
      P.add(0, 1, lg(S), "outGreeniiB");
      P.add(1, 1, lg(S + I) + lg(S / (1.0 + I)) + 1.0, "outGreeniiC", 1.0);
      P.add(1, 1,
            lg(I + S / (1.0 + I)) + lg(I + S * (1.0 + C) / (1.0 + I + C)) + 3.0,
            "outGreeniiD", 3.0);
      P.add(2, 1,
            lg(S / (1.0 + I)) + lg(S + I) + lg(I + S * (1.0 + C) / (1.0 + C + I)) +
                3.0,
            "outGreeniiE", 3.0);
      P.add(1, 2, lg(I + S / (1.0 + I)) + lg(S / (1.0 + I)) + lg(S + I) + 3.0,
            "outGreeniiF", 3.0);
      break;
    case Regime::Red:
      P.add(1, 0, lg(C + S), "outRedA");
      P.add(1, 0, lg(S + I) + 1.0, "outRedB", 1.0);
      P.add(0, 1, lg(S), "outRedC");
      P.add(1, 1, lg(S / (1.0 + I)) + lg(S + I) + 1.0, "outRedD", 1.0);
      P.add(1, 2, lg(S + I) + lg(S / (1.0 + I)) + lg(C) + 2.0 + kLog3, "outRedE",
            2.0 + kLog3);
      break;
    case Regime::Yellow:
      P.add(1, 0, lg(C) + 1.0, "outYellowA", 1.0);
      P.add(1, 0, lg(S + I) + 1.0, "outYellowB", 1.0);
      P.add(0, 1, lg(S), "outYellowC");
      P.add(1, 1, lg(S / (1.0 + I)) + lg(S + I) + 1.0, "outYellowE", 1.0);
      break;
    default:
      throw std::invalid_argument(
          "outer_regime: no regime-specialized outer region for " +
          std::string(regime_name(r)));
  }
  return P;
}

RatePolytope outer_reference(double S, double I, double C, ReferenceKind kind) {
  if (S < 0 || I < 0 || C < 0)
    throw std::invalid_argument("outer_reference: gains must be >= 0");
  RatePolytope P;
  if (kind == ReferenceKind::NonCausalCIC) {
    P.add(1, 0, lg(sq(std::sqrt(S) + std::sqrt(I))), "ncCIC_Rp");
    P.add(0, 1, lg(S), "ncCIC_Rc");
    P.add(1, 1, lg(S / (1.0 + I)) + lg(sq(std::sqrt(S) + std::sqrt(I))),
          "ncCIC_sum");
  } else {
    P.add(1, 0, lg(S) + 2.0, "classicIC_Rp", 2.0);
    P.add(0, 1, lg(S), "classicIC_Rc");
    P.add(1, 1, lg(S) + lg(S / (1.0 + I)) + 2.0, "classicIC_sumA", 2.0);
    P.add(1, 1, 2.0 * lg(I + S / (1.0 + I)) + 4.0, "classicIC_sumB", 4.0);
    P.add(2, 1,
          lg(S + I) + std::log2((1.0 + S) / (1.0 + I)) + lg(I + S / (1.0 + I)) +
              5.0,
          "classicIC_2PpPc", 5.0);
    P.add(1, 2,
          lg(S + I) + std::log2((1.0 + S) / (1.0 + I)) + lg(I + S / (1.0 + I)) +
              4.0,
          "classicIC_Pp2Pc", 4.0);
  }
  return P;
}

std::vector<double> c_dependent_rhs(double S, double I, double C) {
  const auto P = outer_symmetric(S, I, C);
  return {P.constraints[4].rhs, P.constraints[5].rhs, P.constraints[6].rhs,
          P.constraints[7].rhs};
}

}  // namespace ccic
