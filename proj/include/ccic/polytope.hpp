#pragma once
// 2-D rate polytopes and a general-dimension Fourier-Motzkin projector.
//
// Conventions:
//  - RatePolytope: { (Rp,Rc) >= 0 : coeff_p*Rp + coeff_c*Rc <= rhs }, rhs in bits.
//  - HPolyhedron: integer coefficient rows a.x <= rhs over labeled variables.
//    Integer coefficients keep FME pairing exact; right-hand sides are floating
//    mutual-information values.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ccic {

struct Point2 {
  double p = 0.0;
  double c = 0.0;
};

struct LinearRateConstraint {
  double coeff_p = 0.0;
  double coeff_c = 0.0;
  double rhs = 0.0;          // total right-hand side in bits (gain part + additive_const)
  double additive_const = 0.0;  // the log(2)/log(3) style constant kept explicit
  std::string label;
};

struct RatePolytope {
  std::vector<LinearRateConstraint> constraints;

  void add(double cp, double cc, double rhs, std::string label = "",
           double additive_const = 0.0) {
    constraints.push_back({cp, cc, rhs, additive_const, std::move(label)});
  }
};

// Vertex set of the feasible region in counterclockwise order starting from the
// vertex with the lexicographically smallest (angle) around the centroid.
// Throws std::runtime_error on an unbounded region.
std::vector<Point2> vertices2d(const RatePolytope& P);

// Flags for each constraint whether it supports a vertex (non-redundant).
std::vector<bool> constraint_active2d(const RatePolytope& P);

bool contains(const RatePolytope& P, Point2 pt, double tol);

// Support function max{ d.x : x in P } for a direction with dx,dy >= 0.
double support2d(const RatePolytope& P, double dx, double dy);

// Support-function agreement over 64 uniformly spaced directions in the
// nonnegative quadrant.
bool set_equal(const RatePolytope& A, const RatePolytope& B, double tol);

// Largest support-function deviation over the 64 comparison directions.
double set_deviation(const RatePolytope& A, const RatePolytope& B);

// Minimal per-user shift g >= 0 such that outer - g*(1,1) satisfies every
// constraint of `inner`: g = max over inner rows of
// (sup_outer(a) - rhs) / (a_p + a_c). This mirrors the pairing proofs, which
// compare each achievable constraint against a combination of outer bounds per
// user. Returns exactly 0 when `outer` is already contained in `inner`;
// binding_vertex reports the outer vertex behind the worst row.
double gap_to_within(const RatePolytope& outer, const RatePolytope& inner,
                     Point2* binding_vertex = nullptr);

struct HRow {
  std::vector<long long> a;
  double rhs = 0.0;
};

struct HPolyhedron {
  std::vector<std::string> labels;
  std::vector<HRow> rows;

  int dim() const { return static_cast<int>(labels.size()); }
  int index_of(const std::string& label) const;
  void add_row(std::vector<long long> a, double rhs);
};

// Fourier-Motzkin elimination of the listed variables in order. Every system
// this artifact feeds in carries explicit nonnegativity rows, which makes the
// componentwise dominance prune between stages sound. Throws on a detected
// infeasibility (contradictory variable-free row).
HPolyhedron fme_project(HPolyhedron H, const std::vector<std::string>& eliminate);

// Brute-force oracle: enumerate vertices by d-subset intersection, filter
// feasible points, project onto (keep_x, keep_y) and return the convex hull as
// half-planes. Opposite-row pairs (equalities) are pinned into every basis.
// Assumes a bounded system; requires dim <= 10.
RatePolytope project_by_vertices(const HPolyhedron& H, const std::string& keep_x,
                                 const std::string& keep_y);

// View a 2-variable HPolyhedron as a RatePolytope over (x_label, y_label).
RatePolytope to_rate_polytope(const HPolyhedron& H, const std::string& x_label,
                              const std::string& y_label);

}  // namespace ccic
