#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "ccic/polytope.hpp"

using namespace ccic;

namespace {

bool has_vertex(const std::vector<Point2>& verts, double p, double c) {
  return std::any_of(verts.begin(), verts.end(), [&](const Point2& v) {
    return std::abs(v.p - p) < 1e-9 && std::abs(v.c - c) < 1e-9;
  });
}

// random bounded feasible system: per-variable nonnegativity, a simplex cap,
// and a few extra rows with small integer coefficients
HPolyhedron random_system(std::mt19937_64& rng, int dim) {
  std::uniform_int_distribution<int> coeff(-1, 3);
  std::uniform_real_distribution<double> rhs(0.5, 6.0);
  HPolyhedron H;
  for (int i = 0; i < dim; ++i) H.labels.push_back("x" + std::to_string(i));
  for (int i = 0; i < dim; ++i) {
    std::vector<long long> a(dim, 0);
    a[i] = -1;
    H.add_row(a, 0.0);
  }
  H.add_row(std::vector<long long>(dim, 1), rhs(rng) + 4.0);
  const int extra = 3 + (int)(rng() % 5);
  for (int k = 0; k < extra; ++k) {
    std::vector<long long> a(dim, 0);
    for (int i = 0; i < dim; ++i) a[i] = coeff(rng);
    if (std::all_of(a.begin(), a.end(), [](long long v) { return v == 0; })) a[0] = 1;
    H.add_row(a, rhs(rng));  // rhs > 0 keeps the origin feasible
  }
  return H;
}

}  // namespace

TEST_CASE("vertices of the unit box") {
  RatePolytope P;
  P.add(1, 0, 1);
  P.add(0, 1, 1);
  const auto v = vertices2d(P);
  CHECK(v.size() == 4);
  CHECK(has_vertex(v, 0, 0));
  CHECK(has_vertex(v, 1, 0));
  CHECK(has_vertex(v, 1, 1));
  CHECK(has_vertex(v, 0, 1));
}

TEST_CASE("vertices of the clipped square") {
  RatePolytope P;
  P.add(1, 0, 2);
  P.add(0, 1, 2);
  P.add(1, 1, 3);
  const auto v = vertices2d(P);
  CHECK(v.size() == 5);
  for (auto [p, c] : {std::pair{0.0, 0.0}, {2.0, 0.0}, {2.0, 1.0}, {1.0, 2.0}, {0.0, 2.0}})
    CHECK(has_vertex(v, p, c));
  // counterclockwise order: positive cross products all the way around
  for (size_t i = 0; i + 2 < v.size(); ++i) {
    const double cross = (v[i + 1].p - v[i].p) * (v[i + 2].c - v[i].c) -
                         (v[i + 1].c - v[i].c) * (v[i + 2].p - v[i].p);
    CHECK(cross >= -1e-12);
  }
}

TEST_CASE("slack constraint flagged redundant") {
  RatePolytope P;
  P.add(1, 0, 1);
  P.add(0, 1, 1);
  P.add(1, 1, 5);
  CHECK(vertices2d(P).size() == 4);
  const auto active = constraint_active2d(P);
  CHECK(active[0]);
  CHECK(active[1]);
  CHECK(!active[2]);
}

TEST_CASE("unbounded region throws") {
  RatePolytope P;
  P.add(1, 0, 1);  // Rc free
  CHECK_THROWS(vertices2d(P));
}

TEST_CASE("containment with tolerance") {
  RatePolytope box;
  box.add(1, 0, 1);
  box.add(0, 1, 1);
  CHECK(contains(box, {0.5, 0.5}, 1e-9));
  CHECK(contains(box, {1.0 + 1e-12, 0.0}, 1e-9));
  RatePolytope half;
  half.add(1, 2, 3);
  CHECK(!contains(half, {1.0, 1.01}, 1e-9));
  CHECK(!contains(box, {-1e-3, 0.5}, 1e-9));
}

TEST_CASE("support function and set comparison") {
  RatePolytope box;
  box.add(1, 0, 1);
  box.add(0, 1, 1);
  CHECK(support2d(box, 1, 0) == doctest::Approx(1.0));
  CHECK(support2d(box, 1, 1) == doctest::Approx(2.0));

  RatePolytope boxr = box;
  boxr.add(1, 1, 7);  // redundant
  CHECK(set_equal(box, boxr, 1e-9));

  RatePolytope boxeps;
  boxeps.add(1, 0, 1.0 + 1e-9);
  boxeps.add(0, 1, 1.0 + 1e-9);
  CHECK(set_equal(box, boxeps, 1e-7));

  RatePolytope tri;
  tri.add(1, 1, 2);
  CHECK(!set_equal(box, tri, 1e-7));  // support along (1,0) differs: 1 vs 2
  CHECK(set_deviation(box, tri) == doctest::Approx(1.0));
}

TEST_CASE("gap_to_within basics") {
  RatePolytope P;
  P.add(1, 0, 2);
  P.add(0, 1, 2);
  P.add(1, 1, 3);
  CHECK(gap_to_within(P, P) == 0.0);  // exactly, not approximately

  RatePolytope inner;
  inner.add(1, 0, 1);
  inner.add(0, 1, 1);
  inner.add(1, 1, 1.5);
  Point2 binding;
  CHECK(gap_to_within(P, inner, &binding) == doctest::Approx(1.0));
  CHECK(binding.p == doctest::Approx(2.0));
  CHECK(binding.c == doctest::Approx(0.0));

  // shaving 0.7 off the single-rate constraints only shifts by exactly 0.7
  RatePolytope shaved;
  shaved.add(1, 0, 1.3);
  shaved.add(0, 1, 1.3);
  shaved.add(1, 1, 3);
  CHECK(gap_to_within(P, shaved) == doctest::Approx(0.7));
}

TEST_CASE("gap_to_within is monotone when the inner region shrinks") {
  RatePolytope outer;
  outer.add(1, 0, 3);
  outer.add(0, 1, 2);
  outer.add(2, 1, 7);
  RatePolytope inner = outer;
  double last = gap_to_within(outer, inner);
  for (int k = 0; k < 5; ++k) {
    for (auto& c : inner.constraints) c.rhs -= 0.25;
    const double g = gap_to_within(outer, inner);
    CHECK(g >= last - 1e-12);
    last = g;
  }
}

TEST_CASE("fme eliminates a chained variable") {
  HPolyhedron H;
  H.labels = {"x", "z"};
  H.add_row({0, 1}, 3.0);    // z <= 3
  H.add_row({0, -1}, -1.0);  // z >= 1
  H.add_row({1, -1}, 0.0);   // x <= z
  H.add_row({-1, 0}, 0.0);
  const HPolyhedron G = fme_project(H, {"z"});
  RatePolytope P;
  for (const auto& r : G.rows)
    if (r.a[G.index_of("x")] > 0) P.add(1, 0, r.rhs);
  REQUIRE(!P.constraints.empty());
  double best = 1e9;
  for (const auto& c : P.constraints) best = std::min(best, c.rhs);
  CHECK(best == doctest::Approx(3.0));
}

TEST_CASE("fme drops an unconstrained variable") {
  HPolyhedron H;
  H.labels = {"x", "y", "z"};
  H.add_row({1, 0, 0}, 1.0);
  H.add_row({0, 1, 0}, 1.0);
  H.add_row({0, 0, 1}, 5.0);
  H.add_row({0, 0, -1}, 0.0);
  H.add_row({-1, 0, 0}, 0.0);
  H.add_row({0, -1, 0}, 0.0);
  const RatePolytope P = to_rate_polytope(fme_project(H, {"z"}), "x", "y");
  RatePolytope box;
  box.add(1, 0, 1);
  box.add(0, 1, 1);
  CHECK(set_equal(P, box, 1e-9));
}

TEST_CASE("fme detects infeasibility") {
  HPolyhedron H;
  H.labels = {"x"};
  H.add_row({1}, -1.0);  // x <= -1
  H.add_row({-1}, 0.0);  // x >= 0
  CHECK_THROWS(fme_project(H, {"x"}));
}

TEST_CASE("simplex shadow via both projectors") {
  HPolyhedron H;
  H.labels = {"x", "y", "z"};
  H.add_row({1, 1, 1}, 1.0);
  H.add_row({-1, 0, 0}, 0.0);
  H.add_row({0, -1, 0}, 0.0);
  H.add_row({0, 0, -1}, 0.0);
  RatePolytope tri;
  tri.add(1, 1, 1);
  CHECK(set_equal(to_rate_polytope(fme_project(H, {"z"}), "x", "y"), tri, 1e-9));
  CHECK(set_equal(project_by_vertices(H, "x", "y"), tri, 1e-9));
}

TEST_CASE("random systems: fme agrees with the vertex oracle") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 30; ++t) {
    const int dim = 3 + (int)(rng() % 4);
    const HPolyhedron H = random_system(rng, dim);
    std::vector<std::string> elim(H.labels.begin() + 2, H.labels.end());
    const RatePolytope via_fme = to_rate_polytope(fme_project(H, elim), "x0", "x1");
    const RatePolytope via_verts = project_by_vertices(H, "x0", "x1");
    CHECK(set_deviation(via_fme, via_verts) < 1e-7);
  }
}

TEST_CASE("elimination order does not change the shadow") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 10; ++t) {
    const int dim = 4 + (int)(rng() % 3);
    const HPolyhedron H = random_system(rng, dim);
    std::vector<std::string> order(H.labels.begin() + 2, H.labels.end());
    const RatePolytope first = to_rate_polytope(fme_project(H, order), "x0", "x1");
    std::shuffle(order.begin(), order.end(), rng);
    const RatePolytope second = to_rate_polytope(fme_project(H, order), "x0", "x1");
    CHECK(set_deviation(first, second) < 1e-9);
  }
}

TEST_CASE("equality rows are pinned by the vertex oracle") {
  // x + y = 1 crossed with z in [0, 2], keep (x, z): the shadow is a rectangle
  HPolyhedron H;
  H.labels = {"x", "y", "z"};
  H.add_row({1, 1, 0}, 1.0);
  H.add_row({-1, -1, 0}, -1.0);
  H.add_row({0, 0, 1}, 2.0);
  H.add_row({0, 0, -1}, 0.0);
  H.add_row({-1, 0, 0}, 0.0);
  H.add_row({0, -1, 0}, 0.0);
  RatePolytope rect;
  rect.add(1, 0, 1);
  rect.add(0, 1, 2);
  CHECK(set_equal(project_by_vertices(H, "x", "z"), rect, 1e-9));
}
