#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>

#include "ccic/channel.hpp"
#include "ccic/outer_bounds.hpp"
#include "ccic/polytope.hpp"

using namespace ccic;

namespace {

double lg(double x) { return std::log2(1.0 + x); }

ChannelParams symmetric(double S, double I, double C) {
  ChannelParams p;
  p.snr_p = p.snr_c = S;
  p.inr_p = p.inr_c = I;
  p.coop = C;
  return p;
}

}  // namespace

TEST_CASE("symmetric bounds: spot values") {
  // zero gains: only the additive constants survive and the origin is feasible
  const RatePolytope zero = outer_symmetric(0, 0, 0);
  for (const auto& c : zero.constraints) CHECK(c.rhs == doctest::Approx(c.additive_const));
  CHECK(contains(zero, {0.0, 0.0}, 1e-12));

  const RatePolytope a = outer_symmetric(1, 0, 0);
  CHECK(a.constraints[0].rhs == doctest::Approx(1.0));  // Rp <= log2(2)
  CHECK(a.constraints[2].rhs == doctest::Approx(1.0));  // Rc <= log2(2)

  const RatePolytope b = outer_symmetric(3, 1, 0);
  const double expect = lg((std::sqrt(3.0) + 1.0) * (std::sqrt(3.0) + 1.0));
  CHECK(b.constraints[1].rhs == doctest::Approx(expect).epsilon(1e-12));
  CHECK(b.constraints[1].rhs == doctest::Approx(3.0815).epsilon(1e-4));
}

TEST_CASE("symmetric bounds: coefficients and tags are the printed eight") {
  const RatePolytope P = outer_symmetric(100, 10, 50);
  REQUIRE(P.constraints.size() == 8);
  const double cp[8] = {1, 1, 0, 1, 1, 1, 2, 1};
  const double cc[8] = {0, 0, 1, 1, 1, 1, 1, 2};
  const char* tags[8] = {"CutsetP_C", "CutsetP_I", "CutsetC", "SumTuni",
                         "SumTuniC", "SumPV",     "TwoPpPc", "PpTwoPc"};
  for (int i = 0; i < 8; ++i) {
    CHECK(P.constraints[i].coeff_p == cp[i]);
    CHECK(P.constraints[i].coeff_c == cc[i]);
    CHECK(P.constraints[i].label == tags[i]);
    CHECK(P.constraints[i].label == outer_bound_tag(static_cast<OuterBoundId>(i)));
  }
  CHECK_THROWS(outer_symmetric(-1, 0, 0));
}

TEST_CASE("rho forms: special values") {
  const ChannelParams p = symmetric(100, 10, 50);
  const RatePolytope at0 = outer_general_rho(p, 0.0);
  CHECK(at0.constraints[0].rhs == doctest::Approx(lg(150.0)).epsilon(1e-12));
  // rho = e^{j theta_c} aligns the interference path fully coherently
  const RatePolytope aligned = outer_general_rho(p, std::polar(1.0, p.theta_c));
  const double coherent = lg((std::sqrt(100.0) + std::sqrt(10.0)) *
                             (std::sqrt(100.0) + std::sqrt(10.0)));
  CHECK(aligned.constraints[1].rhs == doctest::Approx(coherent).epsilon(1e-12));
  CHECK_THROWS(outer_general_rho(p, std::complex<double>(1.2, 0.0)));
}

TEST_CASE("rho sweep never beats the symmetric forms by more than 2 bits") {
  const ChannelParams p = symmetric(100, 10, 50);
  const RatePolytope sym = outer_symmetric(100, 10, 50);
  for (int ir = 0; ir <= 10; ++ir)
    for (int ip = 0; ip < 16; ++ip) {
      const auto rho = std::polar(ir / 10.0, 2.0 * M_PI * ip / 16.0);
      const RatePolytope at = outer_general_rho(p, rho);
      for (size_t k = 0; k < at.constraints.size(); ++k)
        CHECK(at.constraints[k].rhs <= sym.constraints[k].rhs + 2.0 + 1e-9);
    }
}

TEST_CASE("rho-free forms dominate every rho") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> db(0.0, 30.0);
  for (int t = 0; t < 5; ++t) {
    ChannelParams p;
    p.snr_p = std::pow(10.0, db(rng) / 10.0);
    p.snr_c = std::pow(10.0, db(rng) / 10.0);
    p.inr_p = std::pow(10.0, db(rng) / 10.0);
    p.inr_c = std::pow(10.0, db(rng) / 10.0);
    p.coop = std::pow(10.0, db(rng) / 10.0);
    const RatePolytope free = outer_general_rho_free(p);
    for (int ir = 0; ir <= 10; ++ir)
      for (int ip = 0; ip < 8; ++ip) {
        const auto rho = std::polar(ir / 10.0, 2.0 * M_PI * ip / 8.0);
        const RatePolytope at = outer_general_rho(p, rho);
        for (size_t k = 0; k < at.constraints.size(); ++k)
          CHECK(at.constraints[k].rhs <= free.constraints[k].rhs + 1e-9);
      }
  }
}

TEST_CASE("rho-free forms reduce to the symmetric lemma at symmetric points") {
  const ChannelParams p = symmetric(316.227766, 17.78279, 56.234132);
  const RatePolytope free = outer_general_rho_free(p);
  const RatePolytope sym = outer_symmetric(p.snr_p, p.inr_p, p.coop);
  REQUIRE(free.constraints.size() == sym.constraints.size());
  for (size_t k = 0; k < sym.constraints.size(); ++k)
    CHECK(free.constraints[k].rhs == doctest::Approx(sym.constraints[k].rhs).epsilon(1e-12));
}

TEST_CASE("regime relaxations contain the symmetric region") {
  struct Pt { double S, I, C; Regime r; };
  const Pt pts[] = {{1e4, 1e3, 10.0, Regime::GreenI},
                    {1e4, 100.0, 31.62, Regime::GreenII},
                    {1e4, 10.0, 1585.0, Regime::Red},
                    {1e4, 100.0, 1e5, Regime::Yellow}};
  for (const auto& pt : pts) {
    const RatePolytope relaxed = outer_regime(pt.S, pt.I, pt.C, pt.r);
    const RatePolytope sym = outer_symmetric(pt.S, pt.I, pt.C);
    for (const Point2& v : vertices2d(sym)) CHECK(contains(relaxed, v, 1e-9));
  }
}

TEST_CASE("regime outer spot values") {
  const RatePolytope yellow = outer_regime(100, 10, 500, Regime::Yellow);
  REQUIRE(yellow.constraints.size() == 4);
  CHECK(yellow.constraints[2].label == "outYellowC");
  CHECK(yellow.constraints[2].rhs == doctest::Approx(std::log2(101.0)).epsilon(1e-12));

  const RatePolytope red = outer_regime(100, 10, 50, Regime::Red);
  CHECK(red.constraints[4].label == "outRedE");
  CHECK(red.constraints[4].coeff_p == 1);
  CHECK(red.constraints[4].coeff_c == 2);
  CHECK(red.constraints[4].rhs ==
        doctest::Approx(lg(110.0) + lg(100.0 / 11.0) + lg(50.0) + 2.0 + std::log2(3.0))
            .epsilon(1e-12));
  CHECK(red.constraints[4].additive_const == doctest::Approx(2.0 + std::log2(3.0)));

  CHECK_THROWS(outer_regime(100, 10, 500, Regime::Red));  // regime mismatch
  CHECK_THROWS(outer_regime(1e4, 10.0, 1e9, Regime::BlueStrongCooperation));
}

TEST_CASE("reference regions") {
  const RatePolytope nc = outer_reference(1, 0, 0, ReferenceKind::NonCausalCIC);
  REQUIRE(nc.constraints.size() == 3);
  CHECK(nc.constraints[0].rhs == doctest::Approx(1.0));
  CHECK(nc.constraints[1].rhs == doctest::Approx(1.0));
  CHECK(nc.constraints[2].rhs == doctest::Approx(2.0));

  const RatePolytope ic = outer_reference(0, 0, 0, ReferenceKind::ClassicalIC);
  REQUIRE(ic.constraints.size() == 6);
  for (const auto& c : ic.constraints) CHECK(c.rhs == doctest::Approx(c.additive_const));

  // C >= max{S, I}: the symmetric region sits inside the non-causal reference
  const double S = 1e3, I = 100.0, C = 1e4;
  const RatePolytope sym = outer_symmetric(S, I, C);
  const RatePolytope ref = outer_reference(S, I, C, ReferenceKind::NonCausalCIC);
  for (const Point2& v : vertices2d(sym)) CHECK(contains(ref, v, 1e-9));
}

TEST_CASE("the four C-dependent right-hand sides are nondecreasing in C") {
  const auto rhs = c_dependent_rhs(100, 10, 50);
  const RatePolytope sym = outer_symmetric(100, 10, 50);
  REQUIRE(rhs.size() == 4);
  for (int k = 0; k < 4; ++k) CHECK(rhs[k] == sym.constraints[4 + k].rhs);
  std::vector<double> prev;
  for (int i = 0; i < 50; ++i) {
    const double C = std::pow(10.0, -2.0 + 8.0 * i / 49.0);
    const auto v = c_dependent_rhs(300.0, 20.0, C);
    if (!prev.empty())
      for (int k = 0; k < 4; ++k) CHECK(v[k] >= prev[k] - 1e-9);
    prev = v;
  }
}
