#include "ccic/inner_bounds.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace ccic {

namespace {

const double kLog3 = std::log2(3.0);

double lg(double x) { return std::log2(1.0 + x); }

}  // namespace

void PowerSplit::validate(Scheme s) const {
  for (double v : {a1sq, b1sq, c1sq, d1sq, a2sq, b2sq, c2sq})
    if (!(v >= 0.0) || !(v <= 1.0 + 1e-12))
      throw std::invalid_argument("PowerSplit: shares must lie in [0,1]");
  if (std::abs(a1sq + b1sq + c1sq + d1sq - 1.0) > 1e-12)
    throw std::invalid_argument("PowerSplit: primary shares must sum to 1");
  if (std::abs(a2sq + b2sq + c2sq - 1.0) > 1e-12)
    throw std::invalid_argument("PowerSplit: cognitive shares must sum to 1");
  if (s == Scheme::E1_noS1Z1 && d1sq != 0.0)
    throw std::invalid_argument("PowerSplit: d1 is not part of the E1 scheme");
}

namespace {

// lambda_U, lambda_T with zero-guards (absent message or nothing to cancel
// gives 0); the throwing policy lives in dpc_coefficients.
DpcCoefficients dpc_internal(const ChannelParams& p, const PowerSplit& s) {
  DpcCoefficients d;
  const std::complex<double> num =
      std::sqrt(p.inr_p) * std::polar(1.0, p.theta_p + p.theta_c) *
          std::sqrt(s.a1sq) +
      std::sqrt(p.snr_c) * std::sqrt(s.a2sq);
  if (std::abs(num) == 0.0) return d;
  const double leak = p.inr_p * (s.c1sq + s.d1sq);
  if (p.snr_c * s.b2sq > 0.0) {
    const double den_u = p.snr_c * s.b2sq + p.snr_c * s.c2sq + 1.0 + leak;
    d.lambda_U = (p.snr_c * s.b2sq / den_u) * num /
                 (std::sqrt(p.snr_c) * std::sqrt(s.b2sq));
  }
  if (p.snr_c * s.c2sq > 0.0) {
    const double den_t = p.snr_c * s.c2sq + 1.0 + leak;
    d.lambda_T = (p.snr_c * s.c2sq / den_t) *
                 (num - std::sqrt(p.snr_c) * std::sqrt(s.b2sq) * d.lambda_U) /
                 (std::sqrt(p.snr_c) * std::sqrt(s.c2sq));
  }
  return d;
}

}  // namespace

DpcCoefficients dpc_coefficients(const ChannelParams& p, const PowerSplit& s) {
  p.validate();
  s.validate(Scheme::E2_noU1);
  const std::complex<double> num =
      std::sqrt(p.inr_p) * std::polar(1.0, p.theta_p + p.theta_c) *
          std::sqrt(s.a1sq) +
      std::sqrt(p.snr_c) * std::sqrt(s.a2sq);
  if (std::abs(num) > 0.0 && (p.snr_c * s.b2sq == 0.0 || p.snr_c * s.c2sq == 0.0))
    throw std::invalid_argument(
        "dpc_coefficients: b2 = 0 or c2 = 0 (absent message) with a nonzero "
        "interference term to pre-cancel");
  return dpc_internal(p, s);
}

LinearGaussianModel signal_model(const ChannelParams& p, const PowerSplit& s,
                                 Scheme scheme) {
  p.validate();
  s.validate(scheme);
  LinearGaussianModel m;
  const std::complex<double> ej_tc = std::polar(1.0, p.theta_c);
  const std::complex<double> ej_tp = std::polar(1.0, p.theta_p);

  if (scheme == Scheme::E1_noS1Z1) {
    for (const char* b : {"U1", "V1", "T1", "U2", "T2", "Zp", "Zc", "Zf"})
      m.basis(b);
    m.define("Xp", {{"U1", std::sqrt(s.a1sq)},
                    {"V1", std::sqrt(s.b1sq)},
                    {"T1", std::sqrt(s.c1sq)}});
    m.define("Xc", {{"U2", std::sqrt(s.a2sq)}, {"T2", std::sqrt(s.b2sq)}});
  } else {
    for (const char* b : {"S1", "V1", "Z1", "T1", "U2p", "T2p", "Zp", "Zc", "Zf"})
      m.basis(b);
    m.define("Xp", {{"S1", std::sqrt(s.a1sq) * ej_tc},
                    {"V1", std::sqrt(s.b1sq)},
                    {"Z1", std::sqrt(s.c1sq)},
                    {"T1", std::sqrt(s.d1sq)}});
    m.define("Xc", {{"S1", std::sqrt(s.a2sq)},
                    {"U2p", std::sqrt(s.b2sq)},
                    {"T2p", std::sqrt(s.c2sq)}});
    const DpcCoefficients d = dpc_internal(p, s);
    m.define("U2", {{"U2p", 1.0}, {"S1", d.lambda_U}});
    m.define("T2", {{"T2p", 1.0}, {"S1", d.lambda_T}});
  }
  m.define("Tf", {{"Xp", std::sqrt(p.coop)}, {"Zf", 1.0}});
  m.define("Yp", {{"Xp", std::sqrt(p.snr_p)},
                  {"Xc", std::sqrt(p.inr_c) * ej_tc},
                  {"Zp", 1.0}});
  m.define("Yc", {{"Xp", std::sqrt(p.inr_p) * ej_tp},
                  {"Xc", std::sqrt(p.snr_c)},
                  {"Zc", 1.0}});
  return m;
}

namespace {

// one decoding constraint: rate coefficients over
// (r10c, r11c, r10n, r11n, r20n, r22n), MI term sets, and how the binning
// rates enter (kNone / kMinusBinU [-(R20n'-I(U2;S1))] / kMinusBoth / kMinusBinT)
enum BinCorrection { kNone, kMinusBinU, kMinusBoth, kMinusBinT };

struct DecodingRow {
  const char* tag;
  std::array<int, 6> coef;
  std::vector<const char*> targets, observed, given;
  BinCorrection corr;
};

const std::vector<DecodingRow>& decoding_rows() {
  static const std::vector<DecodingRow> rows = {
      {"c1", {1, 1, 0, 0, 0, 0}, {"Z1", "V1"}, {"Tf"}, {"U2", "T2", "Xc", "S1"}, kNone},
      {"c2", {0, 1, 0, 0, 0, 0}, {"Z1"}, {"Tf"}, {"U2", "T2", "Xc", "S1", "V1"}, kNone},
      {"c3", {1, 1, 1, 1, 1, 0}, {"V1", "U1", "T1", "S1", "Z1", "U2"}, {"Yp"}, {}, kMinusBinU},
      {"c4", {0, 1, 1, 1, 1, 0}, {"U1", "T1", "S1", "Z1", "U2"}, {"Yp"}, {"V1"}, kMinusBinU},
      {"c5", {0, 1, 1, 1, 0, 0}, {"U1", "T1", "S1", "Z1"}, {"Yp"}, {"V1", "U2"}, kNone},
      {"c6", {0, 1, 0, 1, 1, 0}, {"T1", "S1", "Z1", "U2"}, {"Yp"}, {"V1", "U1"}, kMinusBinU},
      {"c7", {0, 0, 1, 1, 1, 0}, {"U1", "T1", "U2"}, {"Yp"}, {"S1", "Z1", "V1"}, kMinusBinU},
      {"c8", {0, 1, 0, 1, 0, 0}, {"T1", "S1", "Z1"}, {"Yp"}, {"V1", "U1", "U2"}, kNone},
      {"c9", {0, 1, 0, 0, 1, 0}, {"S1", "Z1", "U2"}, {"Yp"}, {"V1", "U1", "T1"}, kMinusBinU},
      {"c10", {0, 0, 1, 1, 0, 0}, {"U1", "T1"}, {"Yp"}, {"S1", "Z1", "V1", "U2"}, kNone},
      {"c11", {0, 0, 0, 1, 1, 0}, {"T1", "U2"}, {"Yp"}, {"S1", "Z1", "V1", "U1"}, kMinusBinU},
      {"c12", {0, 1, 0, 0, 0, 0}, {"S1", "Z1"}, {"Yp"}, {"V1", "U1", "T1", "U2"}, kNone},
      {"c13", {0, 0, 0, 1, 0, 0}, {"T1"}, {"Yp"}, {"S1", "Z1", "V1", "U1", "U2"}, kNone},
      {"c14", {1, 0, 1, 0, 1, 1}, {"U2", "T2", "V1", "U1"}, {"Yc"}, {}, kMinusBoth},
      {"c15", {0, 0, 1, 0, 1, 1}, {"U2", "T2", "U1"}, {"Yc"}, {"V1"}, kMinusBoth},
      {"c16", {0, 0, 0, 0, 1, 1}, {"U2", "T2"}, {"Yc"}, {"V1", "U1"}, kMinusBoth},
      {"c17", {0, 0, 1, 0, 0, 1}, {"T2", "U1"}, {"Yc"}, {"U2", "V1"}, kMinusBinT},
      {"c18", {0, 0, 0, 0, 0, 1}, {"T2"}, {"Yc"}, {"U2", "V1", "U1"}, kMinusBinT},
  };
  return rows;
}

std::vector<std::string> present(const LinearGaussianModel& m,
                                 const std::vector<const char*>& names) {
  std::vector<std::string> out;
  for (const char* n : names)
    if (m.has(n)) out.emplace_back(n);
  return out;
}

}  // namespace

HPolyhedron raw_constraint_system(const ChannelParams& p, const PowerSplit& s,
                                  Scheme scheme, bool binning_inequalities) {
  const LinearGaussianModel model = signal_model(p, s, scheme);
  std::vector<std::string> labels;
  for (const char* l :
       {"Tf", "Yp", "Yc", "Xc", "V1", "U1", "T1", "U2", "T2", "S1", "Z1"})
    if (model.has(l)) labels.emplace_back(l);
  const CovSpec spec = model.cov_spec(labels);

  auto mi = [&](const std::vector<const char*>& t, const std::vector<const char*>& o,
                const std::vector<const char*>& g) {
    return conditional_mi(spec, present(model, t), present(model, o),
                          present(model, g));
  };
  const double i_u2_s1 = mi({"S1"}, {"U2"}, {});
  const double i_s1_t2_u2 = mi({"S1"}, {"T2"}, {"U2"});
  const double i_u2t2_s1 = mi({"S1"}, {"U2", "T2"}, {});

  HPolyhedron H;
  H.labels = {"R1", "R2", "r10c", "r11c", "r10n", "r11n", "r20n", "r22n"};
  if (binning_inequalities) {
    H.labels.push_back("r20np");
    H.labels.push_back("r22np");
  }
  const int d = H.dim();
  auto row = [&](std::vector<std::pair<int, long long>> entries, double rhs) {
    std::vector<long long> a(d, 0);
    for (auto [i, v] : entries) a[i] = v;
    H.add_row(std::move(a), rhs);
  };

  // rate composition equalities R1 = r10c+r11c+r10n+r11n, R2 = r20n+r22n
  row({{0, 1}, {2, -1}, {3, -1}, {4, -1}, {5, -1}}, 0.0);
  row({{0, -1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}}, 0.0);
  row({{1, 1}, {6, -1}, {7, -1}}, 0.0);
  row({{1, -1}, {6, 1}, {7, 1}}, 0.0);
  // nonnegativity
  for (int i = 0; i < d; ++i) row({{i, -1}}, 0.0);
  // the scheme's absent message carries no rate
  if (scheme == Scheme::E1_noS1Z1)
    row({{3, 1}}, 0.0);  // r11c rides on S1,Z1
  else
    row({{4, 1}}, 0.0);  // r10n rides on U1

  for (const auto& r : decoding_rows()) {
    std::vector<std::pair<int, long long>> entries;
    for (int i = 0; i < 6; ++i)
      if (r.coef[i] != 0) entries.push_back({2 + i, r.coef[i]});
    double rhs = mi(r.targets, r.observed, r.given);
    if (binning_inequalities) {
      switch (r.corr) {
        case kNone: break;
        case kMinusBinU: entries.push_back({8, 1}); rhs += i_u2_s1; break;
        case kMinusBoth: entries.push_back({8, 1}); entries.push_back({9, 1}); break;
        case kMinusBinT: entries.push_back({9, 1}); break;
      }
    } else {
      switch (r.corr) {
        case kNone: break;
        case kMinusBinU: break;  // -(R20n' - I(U2;S1)) = 0 at equality
        case kMinusBoth: rhs -= i_u2_s1 + i_s1_t2_u2; break;
        case kMinusBinT: rhs -= i_s1_t2_u2; break;
      }
    }
    row(std::move(entries), rhs);
  }
  if (binning_inequalities) {
    row({{8, -1}}, -i_u2_s1);            // R20n' >= I(U2;S1)
    row({{8, -1}, {9, -1}}, -i_u2t2_s1);  // R20n' + R22n' >= I(U2,T2;S1)
  }
  return H;
}

RatePolytope inner_closed_form(const ChannelParams& p, const PowerSplit& s,
                               Scheme scheme, const InnerOptions& opts) {
  p.validate();
  s.validate(scheme);
  if (opts.k1 < 0.0 || opts.k2 < 0.0)
    throw std::invalid_argument("InnerOptions: k1, k2 must be >= 0");
  const double Sp = p.snr_p, Sc = p.snr_c, Ip = p.inr_p, Ic = p.inr_c, C = p.coop;
  RatePolytope P;

  if (scheme == Scheme::E1_noS1Z1) {
    const double a1c1 = s.a1sq + s.c1sq;
    const double t_pc = std::log2((1.0 + Sp + Ic) / (1.0 + Ic * s.b2sq));
    const double t_coop = std::log2((1.0 + C) / (1.0 + C * a1c1));
    const double t_priv2 = lg(Sp * a1c1 / (1.0 + Ic * s.b2sq));
    const double t_rc = lg(Sc / (1.0 + Ip * s.c1sq));
    const double t_rc_b2 = lg(Sc * s.b2sq / (1.0 + Ip * s.c1sq));
    const double t_c1 = lg(Sp * s.c1sq / (1.0 + Ic * s.b2sq));
    const double t_cc = std::log2((1.0 + Sc + Ip) / (1.0 + Ip * s.c1sq));
    const double t_mid = std::log2((1.0 + Sp * a1c1 + Ic) / (1.0 + Ic * s.b2sq));
    const double t_sc_a1 = lg((Sc + Ip * s.a1sq) / (1.0 + Ip * s.c1sq));
    const double t_c1_ic = std::log2((1.0 + Sp * s.c1sq + Ic) / (1.0 + Ic * s.b2sq));
    const double t_mac = lg((Ip * s.a1sq + Sc * s.b2sq) / (1.0 + Ip * s.c1sq));

    P.add(1, 0, t_pc, "c1C1");
    P.add(1, 0, t_coop + t_priv2, "c2C1");
    P.add(0, 1, t_rc, "c3C1");
    P.add(1, 1, t_pc + t_rc_b2, "c4C1");
    P.add(1, 1, t_c1 + t_cc, "c5C1");
    P.add(1, 1, t_coop + t_mid + t_rc_b2, "c6C1");
    P.add(1, 1, t_coop + t_c1 + t_sc_a1, "c7C1");
    P.add(1, 1, t_coop + t_c1_ic + t_mac, "c8C1");
    P.add(2, 1, t_coop + t_c1 + t_pc + t_mac, "c9C1");
    P.add(2, 1, 2.0 * t_coop + t_c1 + t_mid + t_mac, "c10C1");
    P.add(1, 2, t_c1_ic + t_mac + t_cc, "c11C1");
    P.add(1, 2, t_coop + t_c1_ic + t_rc_b2 + t_sc_a1, "c12C1");
    return P;
  }

  const double c1d1 = s.c1sq + s.d1sq;
  const double coh =
      std::pow(std::sqrt(Sp * s.a1sq) + std::sqrt(Ic * s.a2sq), 2);
  const double m_coop = lg(C * (s.b1sq + s.c1sq) / (1.0 + C * s.d1sq));
  const double m_d1 = lg(Sp * s.d1sq / (1.0 + Ic * s.c2sq));
  const double m_sat = std::log2(
      (1.0 + Sp + Ic + 2.0 * std::sqrt(Sp * Ic * s.a1sq * s.a2sq)) /
      (1.0 + Ic * s.c2sq));
  const double m_rc = lg(Sc * (s.b2sq + s.c2sq) / (1.0 + Ip * c1d1));
  const double m_d1b2 = lg((Sp * s.d1sq + Ic * s.b2sq) / (1.0 + Ic * s.c2sq));
  const double m_c2 = lg(Sc * s.c2sq / (1.0 + Ip * c1d1));
  const double m_coop_c1 = lg(C * s.c1sq / (1.0 + C * s.d1sq));
  const double m_c1d1 = lg(Sp * c1d1 / (1.0 + Ic * s.c2sq));
  const double m_joint = lg((Sp * c1d1 + coh + Ic * s.b2sq) / (1.0 + Ic * s.c2sq));
  const double m_joint_c1 =
      lg((Sp * s.c1sq + coh + Ic * s.b2sq) / (1.0 + Ic * s.c2sq));

  P.add(1, 0, m_coop + m_d1, "c1C2");
  P.add(1, 0, m_sat, "c2C2");
  P.add(0, 1, m_rc, "c3C2");
  P.add(1, 1, m_coop + m_d1b2 + m_c2, "c4C2");
  P.add(1, 1, m_sat + m_c2, "c5C2");
  P.add(1, 1, m_coop_c1 + m_d1 + m_rc + opts.k1, "c6C2");
  P.add(1, 1, m_c1d1 + m_rc + opts.k1 + opts.k2, "c7C2");
  P.add(1, 2, m_joint + m_rc + m_c2 + opts.k1, "c8C2");
  P.add(1, 2, m_coop_c1 + m_d1b2 + m_rc + m_c2 + opts.k1, "c9C2");
  P.add(1, 3, m_joint_c1 + m_d1b2 + m_rc + 2.0 * m_c2 + opts.k1, "c10C2");
  return P;
}

RatePolytope redundant_fme_rows(const ChannelParams& p, const PowerSplit& s,
                                Scheme scheme) {
  // rhs values of the decoding rows (binning at equality); they are the last
  // 18 rows of the raw system, in c1..c18 order.
  const HPolyhedron raw = raw_constraint_system(p, s, scheme, false);
  auto c = [&](int k) { return raw.rows[raw.rows.size() - 18 + (k - 1)].rhs; };
  RatePolytope P;
  if (scheme == Scheme::E1_noS1Z1) {
    P.add(0, 1, c(9) + c(18), "c9+c18");
    P.add(1, 0, c(1) + c(13) + c(17), "c1+c13+c17");
    P.add(1, 2, c(11) + c(14) + c(18), "c11+c14+c18");
  } else {
    P.add(0, 1, c(11) + c(18), "c11+c18");
    P.add(0, 1, c(9) + c(18), "c9+c18");
    P.add(1, 2, c(11) + c(12) + c(14) + c(18), "c11+c12+c14+c18");
  }
  return P;
}

InnerOptions exact_k_terms(const ChannelParams& p, const PowerSplit& s) {
  const LinearGaussianModel m = signal_model(p, s, Scheme::E2_noU1);
  const CovSpec spec = m.cov_spec({"S1", "V1", "U2", "Yp", "Yc"});
  InnerOptions k;
  k.k1 = conditional_mi(spec, {"V1"}, {"Yc"}, {});
  k.k2 = conditional_mi(spec, {"S1"}, {"Yp"}, {"V1", "U2"});
  return k;
}

Scheme scheme_for_regime(Regime r) {
  switch (r) {
    case Regime::GreenI:
    case Regime::GreenII:
      return Scheme::E1_noS1Z1;
    case Regime::Red:
    case Regime::Yellow:
      return Scheme::E2_noU1;
    default:
      throw std::invalid_argument("no printed scheme for regime " +
                                  std::string(regime_name(r)));
  }
}

PowerSplit power_split_for_regime(double S, double I, double C, Regime r,
                                  bool check_regime) {
  if (S < 0 || I < 0 || C < 0)
    throw std::invalid_argument("power_split_for_regime: gains must be >= 0");
  if (check_regime && classify_regime_gains(S, I, C) != r)
    throw std::invalid_argument(
        "power_split_for_regime: parameters do not lie in regime " +
        std::string(regime_name(r)));
  PowerSplit s;
  switch (r) {
    case Regime::GreenI:
      s.c1sq = 1.0 / (1.0 + I);
      s.a1sq = 1.0 - s.c1sq;
      s.b2sq = 1.0 / (1.0 + I);
      s.a2sq = 1.0 - s.b2sq;
      break;
    case Regime::GreenII: {
      const double mic = std::min(I, C);
      s.a1sq = 1.0 / (2.0 * (1.0 + mic));
      s.c1sq = 1.0 / (2.0 * (1.0 + I));
      s.b1sq = I <= C ? I / (1.0 + I)
                      : (C + I + 2.0 * C * I) / (2.0 * (1.0 + C) * (1.0 + I));
      s.b2sq = 1.0 / (1.0 + I);
      s.a2sq = 1.0 - s.b2sq;
      break;
    }
    case Regime::Red:
      s.a1sq = s.b1sq = (I + C + 2.0 * I * C) / (4.0 * (1.0 + I) * (1.0 + C));
      s.c1sq = 1.0 / (2.0 * (1.0 + I));
      s.d1sq = 1.0 / (2.0 * (1.0 + C));
      s.c2sq = 1.0 / (1.0 + I);
      s.b2sq = I / (1.0 + I);
      break;
    case Regime::Yellow:
      s.a1sq = s.b1sq = I / (2.0 * (1.0 + I));
      s.c1sq = 1.0 / (1.0 + I);
      s.b2sq = I / (1.0 + I);
      s.c2sq = 1.0 / (1.0 + I);
      break;
    default:
      throw std::invalid_argument("no printed power split for regime " +
                                  std::string(regime_name(r)));
  }
  return s;
}

RatePolytope inner_regime(double S, double I, double C, Regime r, bool clamp) {
  if (classify_regime_gains(S, I, C) != r)
    throw std::invalid_argument("inner_regime: parameters do not lie in regime " +
                                std::string(regime_name(r)));
  RatePolytope raw;
  switch (r) {
    case Regime::GreenI:
      raw.add(1, 0, lg(S) - 1.0, "lowGreeniA", -1.0);
      raw.add(0, 1, lg(S) - 1.0, "lowGreeniB", -1.0);
      raw.add(1, 1, lg(S + I) + lg(S / (1.0 + I)) - 2.0, "lowGreeniC", -2.0);
      raw.add(1, 1, 2.0 * lg(I + S / (1.0 + I)) - 2.0, "lowGreeniD", -2.0);
      raw.add(2, 1, lg(S / (1.0 + I)) + lg(S + I) + lg(I + S / (1.0 + I)) - 3.0,
              "lowGreeniE", -3.0);
      raw.add(1, 2, lg(I + S / (1.0 + I)) + lg(S / (1.0 + I)) + lg(S + I) - 3.0,
              "lowGreeniF", -3.0);
      break;
    case Regime::GreenII: {
      const double mic = std::min(I, C);
      raw.add(1, 0, lg(S) - 4.0, "lowGreeniiA", -4.0);
      raw.add(0, 1, lg(S) - 1.0, "lowGreeniiB", -1.0);
      raw.add(1, 1, lg(S + I) + lg(S / (1.0 + I)) - 3.0, "lowGreeniiC", -3.0);
      raw.add(1, 1, lg(I + S / (1.0 + I)) + lg(S / (1.0 + I)) + lg(mic) - 5.0,
              "lowGreeniiD", -5.0);
      raw.add(2, 1, 2.0 * lg(S / (1.0 + I)) + lg(S + I) + lg(mic) - 6.0,
              "lowGreeniiE", -6.0);
      raw.add(2, 1,
              2.0 * lg(S / (1.0 + I)) + lg(I + S / (1.0 + mic)) + 2.0 * lg(mic) -
                  9.0,
              "lowGreeniiF", -9.0);
      raw.add(1, 2, lg(I + S / (1.0 + I)) + lg(S / (1.0 + I)) + lg(S + I) - 4.0,
              "lowGreeniiG", -4.0);
      break;
    }
    case Regime::Red:
      raw.add(1, 0, lg(C + S) - 5.0, "lowRedA", -5.0);
      raw.add(1, 0, lg(S + I) - 1.0, "lowRedB", -1.0);
      raw.add(0, 1, lg(S) - kLog3, "lowRedC", -kLog3);
      raw.add(1, 1,
              lg(C) + lg(S / (1.0 + C) + I) + lg(S / (1.0 + I)) - 5.0 - kLog3,
              "lowRedD", -5.0 - kLog3);
      raw.add(1, 1, lg(S + I) + lg(S / (1.0 + I)) - 1.0 - kLog3, "lowRedE",
              -1.0 - kLog3);
      raw.add(1, 1, lg(C / (1.0 + I)) + lg(S / (1.0 + C)) + lg(S) - 4.0 - kLog3,
              "lowRedF", -4.0 - kLog3);
      raw.add(1, 1, lg(S) + lg(S / (1.0 + I) + S / (1.0 + C)) - 2.0 - kLog3,
              "lowRedG", -2.0 - kLog3);
      raw.add(1, 2, lg(S + I) + lg(S / (1.0 + I)) + lg(S) - 3.0 - 2.0 * kLog3,
              "lowRedH", -3.0 - 2.0 * kLog3);
      raw.add(1, 2,
              lg(S) + lg(S / (1.0 + I)) + lg(I + S / (1.0 + C)) +
                  lg(C / (1.0 + I)) - 4.0 - 2.0 * kLog3,
              "lowRedI", -4.0 - 2.0 * kLog3);
      raw.add(1, 3,
              lg(S + I) + 2.0 * lg(S / (1.0 + I)) + lg(I + S / (1.0 + C)) +
                  lg(S) - 5.0 - 3.0 * kLog3,
              "lowRedL", -5.0 - 3.0 * kLog3);
      break;
    case Regime::Yellow:
      raw.add(1, 0, lg(C) - 1.0, "lowYellowA", -1.0);
      raw.add(1, 0, lg(S + I) - 1.0, "lowYellowB", -1.0);
      raw.add(0, 1, lg(S) - 1.0, "lowYellowC", -1.0);
      raw.add(1, 1, lg(C) + lg(S + I) - 3.0, "lowYellowD", -3.0);
      raw.add(1, 1, lg(C / (1.0 + I)) + lg(S) - 1.0, "lowYellowE", -1.0);
      raw.add(1, 1, lg(S / (1.0 + I)) + lg(S) - 2.0, "lowYellowF", -2.0);
      raw.add(1, 2, lg(S) + lg(S / (1.0 + I)) + lg(S + I) - 4.0, "lowYellowG",
              -4.0);
      raw.add(1, 2, lg(C / (1.0 + I)) + lg(S + I) + lg(S) - 3.0, "lowYellowH",
              -3.0);
      raw.add(1, 3, 2.0 * lg(S + I) + lg(S) + lg(S / (1.0 + I)) - 6.0,
              "lowYellowI", -6.0);
      break;
    default:
      throw std::invalid_argument("no printed inner region for regime " +
                                  std::string(regime_name(r)));
  }
  if (clamp)
    for (auto& c : raw.constraints) c.rhs = std::max(c.rhs, 0.0);
  return raw;
}

}  // namespace ccic
