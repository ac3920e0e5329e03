#include "ccic/certify.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "ccic/inner_bounds.hpp"

namespace ccic {

double regime_budget(Regime r) {
  switch (r) {
    case Regime::GreenI:
    case Regime::GreenII:
    case Regime::Red:
      return 5.0;
    case Regime::Yellow:
      return 2.0;
    case Regime::BlueStrongInterference:
    case Regime::BlueStrongCooperation:
      return 1.0;
  }
  return 0.0;
}

double regime_per_user_constant(Regime r) {
  switch (r) {
    case Regime::GreenI: return 3.0;
    case Regime::GreenII: return 5.0;
    case Regime::Red: return 5.0;
    case Regime::Yellow: return 2.0;
    default:
      throw std::invalid_argument("no printed ledger constant for regime " +
                                  std::string(regime_name(r)));
  }
}

std::vector<RatePolytope> candidate_inner_regions(double S, double I, double C) {
  ChannelParams cp;
  cp.snr_p = cp.snr_c = S;
  cp.inr_p = cp.inr_c = I;
  cp.coop = C;
  std::vector<RatePolytope> out;
  for (Regime r : {Regime::GreenI, Regime::GreenII, Regime::Red, Regime::Yellow}) {
    const PowerSplit split = power_split_for_regime(S, I, C, r, false);
    const Scheme scheme = scheme_for_regime(r);
    InnerOptions opts;
    if (scheme == Scheme::E2_noU1) opts = exact_k_terms(cp, split);
    out.push_back(inner_closed_form(cp, split, scheme, opts));
  }
  return out;
}

std::vector<GapReport> certify_gap_sweep(const std::vector<double>& S_list,
                                         const std::vector<double>& alpha_list,
                                         const std::vector<double>& beta_list) {
  std::vector<GapReport> reports;
  for (double S : S_list) {
    if (!(S > 1.0))
      throw std::invalid_argument("certify_gap_sweep: S must exceed 1 in linear scale");
    for (double alpha : alpha_list) {
      for (double beta : beta_list) {
        GapReport rep;
        rep.snr = S;
        rep.alpha = alpha;
        rep.beta = beta;
        rep.regime = classify_regime({S, alpha, beta});
        rep.budget = regime_budget(rep.regime);
        const double I = std::pow(S, alpha);
        const double C = std::pow(S, beta);
        if (rep.regime == Regime::BlueStrongInterference ||
            rep.regime == Regime::BlueStrongCooperation) {
          rep.external = true;
          const RatePolytope outer = outer_symmetric(S, I, C);
          double best = std::numeric_limits<double>::infinity();
          Point2 best_v;
          for (const auto& inner : candidate_inner_regions(S, I, C)) {
            Point2 v;
            const double g = gap_to_within(outer, inner, &v);
            if (g < best) {
              best = g;
              best_v = v;
            }
          }
          rep.gap = best;
          rep.binding_vertex = best_v;
          rep.certified = rep.gap <= rep.budget + 1e-6;
        } else {
          const RatePolytope outer = outer_regime(S, I, C, rep.regime);
          const RatePolytope inner = inner_regime(S, I, C, rep.regime);
          rep.gap = gap_to_within(outer, inner, &rep.binding_vertex);
          rep.certified = rep.gap <= rep.budget + 1e-6;
        }
        reports.push_back(rep);
      }
    }
  }
  return reports;
}

namespace {

double rhs_of(const RatePolytope& P, const std::string& label) {
  for (const auto& c : P.constraints)
    if (c.label == label) return c.rhs;
  throw std::invalid_argument("no constraint labeled " + label);
}

const LinearRateConstraint& row_of(const RatePolytope& P, const std::string& label) {
  for (const auto& c : P.constraints)
    if (c.label == label) return c;
  throw std::invalid_argument("no constraint labeled " + label);
}

}  // namespace

std::vector<LedgerEntry> constraint_ledger(double S, double I, double C, Regime r) {
  const RatePolytope inner = inner_regime(S, I, C, r, /*clamp=*/false);
  const RatePolytope outer = outer_regime(S, I, C, r);

  struct Pair {
    const char* in;
    std::vector<const char*> out;
  };
  std::vector<Pair> pairs;
  switch (r) {
    case Regime::GreenI:
      pairs = {{"lowGreeniA", {"outGreeniA"}}, {"lowGreeniB", {"outGreeniB"}},
               {"lowGreeniC", {"outGreeniC"}}, {"lowGreeniD", {"outGreeniD"}},
               {"lowGreeniE", {"outGreeniE"}}, {"lowGreeniF", {"outGreeniF"}}};
      break;
    case Regime::GreenII:
      pairs = {{"lowGreeniiA", {"outGreeniiA"}}, {"lowGreeniiB", {"outGreeniiB"}},
               {"lowGreeniiC", {"outGreeniiC"}}, {"lowGreeniiD", {"outGreeniiD"}},
               {"lowGreeniiE", {"outGreeniiE"}}, {"lowGreeniiF", {"outGreeniiE"}},
               {"lowGreeniiG", {"outGreeniiF"}}};
      break;
    case Regime::Red:
      pairs = {{"lowRedA", {"outRedA"}},
               {"lowRedB", {"outRedB"}},
               {"lowRedC", {"outRedC"}},
               {"lowRedD", {"outRedD"}},
               {"lowRedE", {"outRedD"}},
               {"lowRedF", {"outRedD"}},
               {"lowRedG", {"outRedD"}},
               {"lowRedH", {"outRedC", "outRedD"}},
               {"lowRedI", {"outRedE"}},
               {"lowRedL", {"outRedC", "outRedE"}}};
      break;
    case Regime::Yellow:
      pairs = {{"lowYellowA", {"outYellowA"}},
               {"lowYellowB", {"outYellowB"}},
               {"lowYellowC", {"outYellowC"}},
               {"lowYellowD", {"outYellowA", "outYellowC"}},
               {"lowYellowE", {"outYellowE"}},
               {"lowYellowF", {"outYellowE"}},
               {"lowYellowG", {"outYellowC", "outYellowE"}},
               {"lowYellowH", {"outYellowC", "outYellowE"}},
               {"lowYellowI", {"outYellowC", "outYellowC", "outYellowE"}}};
      break;
    default:
      throw std::invalid_argument("no printed ledger for regime " +
                                  std::string(regime_name(r)));
  }

  std::vector<LedgerEntry> ledger;
  for (const auto& pr : pairs) {
    const auto& in_row = row_of(inner, pr.in);
    double outer_sum = 0.0;
    LedgerEntry e;
    e.regime = r;
    e.inner_label = pr.in;
    for (const char* o : pr.out) {
      outer_sum += rhs_of(outer, o);
      e.outer_labels.emplace_back(o);
    }
    e.per_user_slack = (outer_sum - in_row.rhs) / (in_row.coeff_p + in_row.coeff_c);
    ledger.push_back(e);
  }
  return ledger;
}

GdofEstimate gdof_estimate(double alpha, double beta,
                           const std::vector<double>& S_list) {
  GdofEstimate est;
  for (size_t i = 0; i < S_list.size(); ++i) {
    const double S = S_list[i];
    if (!(S > 1.0))
      throw std::invalid_argument("gdof_estimate: S values must exceed 1");
    if (i > 0 && !(S > S_list[i - 1]))
      throw std::invalid_argument("gdof_estimate: S_list must be ascending");
    const double I = std::pow(S, alpha);
    const double C = std::pow(S, beta);
    const double norm = 2.0 * std::log2(1.0 + S);
    est.d_outer.push_back(support2d(outer_symmetric(S, I, C), 1.0, 1.0) / norm);
    double best = 0.0;
    for (const auto& inner : candidate_inner_regions(S, I, C))
      best = std::max(best, support2d(inner, 1.0, 1.0));
    est.d_inner.push_back(best / norm);
  }
  // d(S) = d_inf + a / log2(1+S): two-point Richardson extrapolation
  if (S_list.size() >= 2) {
    const size_t n = S_list.size();
    const double L1 = std::log2(1.0 + S_list[n - 2]);
    const double L2 = std::log2(1.0 + S_list[n - 1]);
    est.d_outer_limit =
        (est.d_outer[n - 1] * L2 - est.d_outer[n - 2] * L1) / (L2 - L1);
    est.d_inner_limit =
        (est.d_inner[n - 1] * L2 - est.d_inner[n - 2] * L1) / (L2 - L1);
  } else if (!S_list.empty()) {
    est.d_outer_limit = est.d_outer.back();
    est.d_inner_limit = est.d_inner.back();
  }
  return est;
}

ReferenceComparison reference_comparison(double S, double alpha, double beta) {
  const double I = std::pow(S, alpha);
  const double C = std::pow(S, beta);
  ReferenceComparison rc;
  if (C >= std::max(S, I)) {
    rc.kind = ReferenceKind::NonCausalCIC;
  } else if (C <= std::min(S, I * (1.0 + I) / (1.0 + S))) {
    rc.kind = ReferenceKind::ClassicalIC;
  } else {
    throw std::invalid_argument(
        "reference_comparison: parameters satisfy neither reference validity set");
  }
  const RatePolytope sym = outer_symmetric(S, I, C);
  const RatePolytope ref = outer_reference(S, I, C, rc.kind);
  rc.gap_outer_in_reference = gap_to_within(sym, ref);
  rc.gap_reference_in_outer = gap_to_within(ref, sym);
  return rc;
}

}  // namespace ccic
