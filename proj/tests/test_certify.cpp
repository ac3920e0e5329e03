#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "ccic/certify.hpp"
#include "ccic/channel.hpp"
#include "ccic/inner_bounds.hpp"
#include "ccic/outer_bounds.hpp"
#include "ccic/polytope.hpp"

using namespace ccic;

TEST_CASE("budgets and per-user constants") {
  CHECK(regime_budget(Regime::GreenI) == 5.0);
  CHECK(regime_budget(Regime::GreenII) == 5.0);
  CHECK(regime_budget(Regime::Red) == 5.0);
  CHECK(regime_budget(Regime::Yellow) == 2.0);
  CHECK(regime_budget(Regime::BlueStrongInterference) == 1.0);
  CHECK(regime_budget(Regime::BlueStrongCooperation) == 1.0);

  CHECK(regime_per_user_constant(Regime::GreenI) == 3.0);
  CHECK(regime_per_user_constant(Regime::GreenII) == 5.0);
  CHECK(regime_per_user_constant(Regime::Red) == 5.0);
  CHECK(regime_per_user_constant(Regime::Yellow) == 2.0);
  CHECK_THROWS(regime_per_user_constant(Regime::BlueStrongInterference));
}

TEST_CASE("single-point certification") {
  const double S = 1e4;  // 40 dB
  auto reports = certify_gap_sweep({S}, {0.5}, {0.3});
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].regime == Regime::GreenII);
  CHECK(reports[0].certified);
  CHECK(!reports[0].external);
  CHECK(reports[0].gap <= 5.0 + 1e-6);

  reports = certify_gap_sweep({S}, {0.5}, {1.2});
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].regime == Regime::Yellow);
  CHECK(reports[0].certified);
  CHECK(reports[0].gap <= 2.0 + 1e-6);

  // Blue points carry the external 1-bit budget, never a certification claim
  reports = certify_gap_sweep({S}, {1.5}, {0.3});
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].external);
  CHECK(!reports[0].certified);
  CHECK(reports[0].budget == 1.0);

  CHECK_THROWS(certify_gap_sweep({1.0}, {0.5}, {0.3}));
}

TEST_CASE("small sweep stays within the budgets") {
  const auto reports =
      certify_gap_sweep({1e2, 1e4}, {0.2, 0.5, 0.8}, {0.05, 0.45, 0.85, 1.25});
  CHECK(reports.size() == 24);
  for (const auto& g : reports) {
    if (g.external) continue;
    CHECK(g.certified);
    CHECK(g.gap <= g.budget + 1e-6);
    CHECK(g.gap >= 0.0);
  }
}

TEST_CASE("ledger: GreenI pairing gives exactly the printed slacks") {
  const double S = 1e4, I = 1e3, C = 10.0;  // alpha 0.75, beta 0.25
  const auto ledger = constraint_ledger(S, I, C, Regime::GreenI);
  REQUIRE(!ledger.empty());
  bool found = false;
  for (const auto& e : ledger) {
    // the budget direction is the sound one; a negative slack just means the
    // inner row never binds inside the outer region
    CHECK(e.per_user_slack <= regime_per_user_constant(Regime::GreenI) + 1e-9);
    if (e.inner_label == "lowGreeniA") {
      found = true;
      REQUIRE(e.outer_labels.size() == 1);
      CHECK(e.outer_labels[0] == "outGreeniA");
      // (log S + 1) - (log S - 1) = 2 bits per user
      CHECK(e.per_user_slack == doctest::Approx(2.0).epsilon(1e-12));
    }
  }
  CHECK(found);
}

TEST_CASE("ledger: Red and Yellow spot slacks") {
  const auto red = constraint_ledger(100, 10, 50, Regime::Red);
  bool found = false;
  for (const auto& e : red)
    if (e.inner_label == "lowRedC") {
      found = true;
      CHECK(e.outer_labels == std::vector<std::string>{"outRedC"});
      CHECK(e.per_user_slack == doctest::Approx(std::log2(3.0)).epsilon(1e-12));
    }
  CHECK(found);

  const auto yellow = constraint_ledger(100, 10, 500, Regime::Yellow);
  found = false;
  for (const auto& e : yellow) {
    CHECK(e.per_user_slack <= 2.0 + 1e-9);
    if (e.inner_label == "lowYellowD") {
      found = true;
      CHECK(e.outer_labels.size() == 2);  // paired against two outer rows, weight 2
    }
  }
  CHECK(found);
}

TEST_CASE("candidate inner regions are real rate regions") {
  const auto regions = candidate_inner_regions(1e4, 100.0, 50.0);
  CHECK(regions.size() == 4);
  for (const auto& P : regions) {
    CHECK(!P.constraints.empty());
    CHECK(contains(P, {0.0, 0.0}, 1e-9));
    CHECK_NOTHROW(vertices2d(P));
  }
}

TEST_CASE("gdof: decoupled channel reaches 1 degree of freedom per user") {
  const auto est = gdof_estimate(0.0, 0.0, {1e9, 1e12});
  CHECK(est.d_outer_limit == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(est.d_inner_limit == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(est.d_outer.size() == 2);
  CHECK(est.d_outer.back() >= est.d_inner.back() - 1e-9);
}

TEST_CASE("gdof: more cooperation never hurts the outer curve") {
  double last = 0.0;
  for (double beta : {0.0, 0.5, 1.0, 1.5}) {
    const auto est = gdof_estimate(0.6, beta, {1e9, 1e12});
    CHECK(est.d_outer.back() >= last - 1e-9);
    last = est.d_outer.back();
  }
}

TEST_CASE("gdof: outer bound saturates at full cooperation") {
  // beta above alpha+1 cannot buy more than beta = alpha+1
  const auto at = gdof_estimate(0.5, 1.5, {1e9, 1e12});
  const auto above = gdof_estimate(0.5, 1.9, {1e9, 1e12});
  CHECK(std::abs(above.d_outer.back() - at.d_outer.back()) <
        (at.d_outer.back() - at.d_inner.back()) + 1e-3);
}

TEST_CASE("gdof input validation") {
  CHECK_THROWS(gdof_estimate(0.5, 0.5, {1e12, 1e9}));  // not ascending
  CHECK_THROWS(gdof_estimate(0.5, 0.5, {0.5, 1e9}));   // S <= 1
}

TEST_CASE("reference comparison picks the valid baseline") {
  // beta large: C >= max{S, I} -> non-causal cognitive baseline
  const auto nc = reference_comparison(1e4, 0.5, 1.2);
  CHECK(nc.kind == ReferenceKind::NonCausalCIC);
  CHECK(nc.gap_outer_in_reference >= 0.0);
  CHECK(nc.gap_reference_in_outer >= 0.0);

  // beta tiny: C below the classical-IC ceiling I(1+I)/(1+S)
  const auto ic = reference_comparison(1e4, 0.5, 0.0005);
  CHECK(ic.kind == ReferenceKind::ClassicalIC);
  CHECK(ic.gap_outer_in_reference >= 0.0);

  // in between, neither validity set applies
  CHECK_THROWS(reference_comparison(1e4, 0.5, 0.7));
}
