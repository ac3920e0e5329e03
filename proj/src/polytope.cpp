#include "ccic/polytope.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace ccic {

namespace {

constexpr double kBox = 1e6;  // synthetic bound used to flag unboundedness

double feas_tol(double rhs) { return 1e-9 + 1e-12 * std::fabs(rhs); }

struct Line {
  double a, b, r;  // a*x + b*y = r
};

bool intersect(const Line& l1, const Line& l2, Point2* out) {
  const double det = l1.a * l2.b - l2.a * l1.b;
  const double scale = std::max({std::fabs(l1.a), std::fabs(l1.b), std::fabs(l2.a),
                                 std::fabs(l2.b), 1.0});
  if (std::fabs(det) < 1e-12 * scale * scale) return false;
  out->p = (l1.r * l2.b - l2.r * l1.b) / det;
  out->c = (l1.a * l2.r - l2.a * l1.r) / det;
  return true;
}

bool feasible(const RatePolytope& P, Point2 pt, double extra_tol = 0.0) {
  if (pt.p < -1e-9 - extra_tol || pt.c < -1e-9 - extra_tol) return false;
  for (const auto& con : P.constraints) {
    if (con.coeff_p * pt.p + con.coeff_c * pt.c >
        con.rhs + feas_tol(con.rhs) + extra_tol)
      return false;
  }
  return true;
}

}  // namespace

std::vector<Point2> vertices2d(const RatePolytope& P) {
  std::vector<Line> lines;
  lines.push_back({1.0, 0.0, 0.0});  // Rp = 0
  lines.push_back({0.0, 1.0, 0.0});  // Rc = 0
  for (const auto& con : P.constraints)
    lines.push_back({con.coeff_p, con.coeff_c, con.rhs});
  // box lines catch unbounded regions
  lines.push_back({1.0, 0.0, kBox});
  lines.push_back({0.0, 1.0, kBox});

  std::vector<Point2> pts;
  for (size_t i = 0; i < lines.size(); ++i)
    for (size_t j = i + 1; j < lines.size(); ++j) {
      Point2 pt;
      if (!intersect(lines[i], lines[j], &pt)) continue;
      if (feasible(P, pt)) pts.push_back(pt);
    }

  // dedup
  std::vector<Point2> uniq;
  for (const auto& pt : pts) {
    bool found = false;
    for (const auto& q : uniq)
      if (std::fabs(q.p - pt.p) < 1e-8 && std::fabs(q.c - pt.c) < 1e-8) {
        found = true;
        break;
      }
    if (!found) uniq.push_back(pt);
  }
  for (const auto& pt : uniq)
    if (pt.p > kBox - 1.0 || pt.c > kBox - 1.0)
      throw std::runtime_error("vertices2d: region is unbounded");

  if (uniq.empty()) return uniq;
  double cx = 0, cy = 0;
  for (const auto& pt : uniq) {
    cx += pt.p;
    cy += pt.c;
  }
  cx /= static_cast<double>(uniq.size());
  cy /= static_cast<double>(uniq.size());
  std::sort(uniq.begin(), uniq.end(), [&](const Point2& u, const Point2& v) {
    return std::atan2(u.c - cy, u.p - cx) < std::atan2(v.c - cy, v.p - cx);
  });
  return uniq;
}

std::vector<bool> constraint_active2d(const RatePolytope& P) {
  const auto verts = vertices2d(P);
  std::vector<bool> active(P.constraints.size(), false);
  for (size_t i = 0; i < P.constraints.size(); ++i) {
    const auto& con = P.constraints[i];
    for (const auto& v : verts) {
      const double lhs = con.coeff_p * v.p + con.coeff_c * v.c;
      if (std::fabs(lhs - con.rhs) < 1e-7 * (1.0 + std::fabs(con.rhs))) {
        active[i] = true;
        break;
      }
    }
  }
  return active;
}

bool contains(const RatePolytope& P, Point2 pt, double tol) {
  if (pt.p < -tol || pt.c < -tol) return false;
  for (const auto& con : P.constraints)
    if (con.coeff_p * pt.p + con.coeff_c * pt.c > con.rhs + tol) return false;
  return true;
}

double support2d(const RatePolytope& P, double dx, double dy) {
  const auto verts = vertices2d(P);
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& v : verts) best = std::max(best, dx * v.p + dy * v.c);
  return best;
}

namespace {

std::vector<Point2> comparison_directions() {
  std::vector<Point2> dirs;
  for (int k = 0; k < 64; ++k) {
    const double th = (M_PI / 2.0) * static_cast<double>(k) / 63.0;
    dirs.push_back({std::cos(th), std::sin(th)});
  }
  return dirs;
}

}  // namespace

double set_deviation(const RatePolytope& A, const RatePolytope& B) {
  const auto va = vertices2d(A);
  const auto vb = vertices2d(B);
  auto support = [](const std::vector<Point2>& verts, double dx, double dy) {
    double best = 0.0;
    for (const auto& v : verts) best = std::max(best, dx * v.p + dy * v.c);
    return best;
  };
  double dev = 0.0;
  for (const auto& d : comparison_directions())
    dev = std::max(dev, std::fabs(support(va, d.p, d.c) - support(vb, d.p, d.c)));
  return dev;
}

bool set_equal(const RatePolytope& A, const RatePolytope& B, double tol) {
  return set_deviation(A, B) <= tol;
}

double gap_to_within(const RatePolytope& outer, const RatePolytope& inner,
                     Point2* binding_vertex) {
  const auto overts = vertices2d(outer);
  bool contained = true;
  for (const auto& v : overts)
    if (!contains(inner, v, 1e-9)) {
      contained = false;
      break;
    }
  if (contained) {
    if (binding_vertex) *binding_vertex = {0.0, 0.0};
    return 0.0;
  }
  // per-user shift g so that outer - g*(1,1) satisfies every inner constraint:
  // for a row (ap, ac, r) we need sup_outer(ap, ac) - g*(ap+ac) <= r
  double gap = 0.0;
  Point2 binding{0.0, 0.0};
  for (const auto& c : inner.constraints) {
    const double wsum = c.coeff_p + c.coeff_c;
    if (wsum <= 0.0) continue;
    double sup = -std::numeric_limits<double>::infinity();
    Point2 arg{0.0, 0.0};
    for (const auto& v : overts) {
      const double val = c.coeff_p * v.p + c.coeff_c * v.c;
      if (val > sup) {
        sup = val;
        arg = v;
      }
    }
    const double g = (sup - c.rhs) / wsum;
    if (g > gap) {
      gap = g;
      binding = arg;
    }
  }
  if (binding_vertex) *binding_vertex = binding;
  return gap;
}

int HPolyhedron::index_of(const std::string& label) const {
  for (int i = 0; i < dim(); ++i)
    if (labels[i] == label) return i;
  throw std::invalid_argument("HPolyhedron: unknown variable " + label);
}

void HPolyhedron::add_row(std::vector<long long> a, double rhs) {
  if (static_cast<int>(a.size()) != dim())
    throw std::invalid_argument("HPolyhedron: row length mismatch");
  rows.push_back({std::move(a), rhs});
}

namespace {

void normalize_row(HRow& row) {
  long long g = 0;
  for (long long v : row.a) g = std::gcd(g, std::llabs(v));
  if (g > 1) {
    for (auto& v : row.a) v /= g;
    row.rhs /= static_cast<double>(g);
  }
}

// Dedup + componentwise dominance prune. Sound whenever the system constrains
// all remaining variables to be nonnegative (every system built here carries
// explicit -x_i <= 0 rows): if a_j >= a_i componentwise and rhs_j <= rhs_i,
// row i is implied by row j together with x >= 0.
void prune_rows(std::vector<HRow>& rows) {
  std::map<std::vector<long long>, double> best;
  for (auto& row : rows) {
    auto it = best.find(row.a);
    if (it == best.end())
      best.emplace(row.a, row.rhs);
    else
      it->second = std::min(it->second, row.rhs);
  }
  std::vector<HRow> uniq;
  uniq.reserve(best.size());
  for (auto& [a, rhs] : best) uniq.push_back({a, rhs});

  // A row with a single negative coefficient is a lower bound (x_k >= -rhs);
  // it must never be dropped by dominance, because dominance implications lean
  // on exactly these rows (dropping -x <= 0 via x <= 0 would be circular).
  auto is_lower_bound = [](const HRow& r) {
    int nz = 0;
    bool negative = false;
    for (long long v : r.a)
      if (v != 0) {
        ++nz;
        negative = v < 0;
      }
    return nz == 1 && negative;
  };

  std::vector<bool> drop(uniq.size(), false);
  for (size_t i = 0; i < uniq.size(); ++i) {
    if (drop[i] || is_lower_bound(uniq[i])) continue;
    for (size_t j = 0; j < uniq.size(); ++j) {
      if (i == j || drop[j]) continue;
      bool dominates = true;
      for (size_t k = 0; k < uniq[i].a.size(); ++k)
        if (uniq[j].a[k] < uniq[i].a[k]) {
          dominates = false;
          break;
        }
      if (dominates && uniq[j].rhs <= uniq[i].rhs + 1e-12) {
        drop[i] = true;
        break;
      }
    }
  }
  rows.clear();
  for (size_t i = 0; i < uniq.size(); ++i)
    if (!drop[i]) rows.push_back(std::move(uniq[i]));
}

void eliminate_var(HPolyhedron& H, int k) {
  std::vector<HRow> pos, neg, zero;
  for (auto& row : H.rows) {
    if (row.a[k] > 0)
      pos.push_back(std::move(row));
    else if (row.a[k] < 0)
      neg.push_back(std::move(row));
    else
      zero.push_back(std::move(row));
  }
  std::vector<HRow> next = std::move(zero);
  for (const auto& p : pos)
    for (const auto& n : neg) {
      const long long mp = -n.a[k];
      const long long mn = p.a[k];
      HRow row;
      row.a.resize(p.a.size());
      for (size_t i = 0; i < p.a.size(); ++i) row.a[i] = p.a[i] * mp + n.a[i] * mn;
      row.rhs = p.rhs * static_cast<double>(mp) + n.rhs * static_cast<double>(mn);
      normalize_row(row);
      next.push_back(std::move(row));
    }

  // drop the eliminated column; detect contradictory variable-free rows
  std::vector<HRow> kept;
  for (auto& row : next) {
    row.a.erase(row.a.begin() + k);
    bool all_zero = true;
    for (long long v : row.a)
      if (v != 0) {
        all_zero = false;
        break;
      }
    if (all_zero) {
      if (row.rhs < -1e-7)
        throw std::runtime_error("fme_project: infeasible system detected");
      continue;
    }
    kept.push_back(std::move(row));
  }
  H.labels.erase(H.labels.begin() + k);
  H.rows = std::move(kept);
  prune_rows(H.rows);
}

}  // namespace

HPolyhedron fme_project(HPolyhedron H, const std::vector<std::string>& eliminate) {
  for (const auto& label : eliminate) eliminate_var(H, H.index_of(label));
  return H;
}

namespace {

std::vector<Point2> convex_hull(std::vector<Point2> pts) {
  // snap to a fixed grid first: solver roundoff otherwise produces points a few
  // ulps apart whose near-zero cross products can pop a genuine corner
  auto snap = [](double v) { return std::round(v * 1e9) / 1e9; };
  for (auto& pt : pts) {
    pt.p = snap(pt.p);
    pt.c = snap(pt.c);
    if (pt.p == 0.0) pt.p = 0.0;  // normalize -0
    if (pt.c == 0.0) pt.c = 0.0;
  }
  std::sort(pts.begin(), pts.end(), [](const Point2& a, const Point2& b) {
    return a.p < b.p || (a.p == b.p && a.c < b.c);
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const Point2& a, const Point2& b) {
                          return a.p == b.p && a.c == b.c;
                        }),
            pts.end());
  if (pts.size() < 3) return pts;
  auto cross = [](const Point2& o, const Point2& a, const Point2& b) {
    return (a.p - o.p) * (b.c - o.c) - (a.c - o.c) * (b.p - o.p);
  };
  std::vector<Point2> hull(2 * pts.size());
  size_t k = 0;
  for (const auto& pt : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pt) <= 0.0) --k;
    hull[k++] = pt;
  }
  const size_t lower = k + 1;
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], *it) <= 0.0) --k;
    hull[k++] = *it;
  }
  hull.resize(k - 1);
  return hull;
}

}  // namespace

RatePolytope project_by_vertices(const HPolyhedron& H, const std::string& keep_x,
                                 const std::string& keep_y) {
  const int d = H.dim();
  if (d > 10) throw std::invalid_argument("project_by_vertices: dimension > 10");
  const int ix = H.index_of(keep_x);
  const int iy = H.index_of(keep_y);

  std::vector<std::vector<double>> A;
  std::vector<double> b;
  for (const auto& row : H.rows) {
    std::vector<double> a(row.a.begin(), row.a.end());
    A.push_back(std::move(a));
    b.push_back(row.rhs);
  }
  const int m = static_cast<int>(A.size());

  // opposite-row pairs encode equalities; pin one of each into every basis so
  // the enumeration only picks the remaining d - f rows
  std::vector<int> forced;
  std::vector<bool> in_pair(m, false);
  for (int i = 0; i < m; ++i) {
    if (in_pair[i]) continue;
    for (int j = i + 1; j < m; ++j) {
      if (in_pair[j] || H.rows[j].a.size() != H.rows[i].a.size()) continue;
      bool neg = H.rows[j].rhs == -H.rows[i].rhs;
      for (int c = 0; c < d && neg; ++c)
        if (H.rows[j].a[c] != -H.rows[i].a[c]) neg = false;
      if (neg) {
        in_pair[i] = in_pair[j] = true;
        forced.push_back(i);
        break;
      }
    }
  }
  std::vector<int> cand;
  for (int i = 0; i < m; ++i)
    if (!in_pair[i]) cand.push_back(i);
  const int f = static_cast<int>(forced.size());
  const int pick = d - f;
  if (pick < 0 || pick > static_cast<int>(cand.size()))
    throw std::invalid_argument("project_by_vertices: degenerate system");

  std::vector<Point2> projected;
  Eigen::MatrixXd M(d, d);
  Eigen::VectorXd rhs(d);
  std::vector<int> comb(pick);
  std::iota(comb.begin(), comb.end(), 0);
  const int nc = static_cast<int>(cand.size());
  auto advance = [&]() {
    int i = pick - 1;
    while (i >= 0 && comb[i] == nc - pick + i) --i;
    if (i < 0) return false;
    ++comb[i];
    for (int j = i + 1; j < pick; ++j) comb[j] = comb[j - 1] + 1;
    return true;
  };
  auto load_row = [&](int r, int src) {
    for (int cidx = 0; cidx < d; ++cidx) M(r, cidx) = A[src][cidx];
    rhs(r) = b[src];
  };
  do {
    for (int r = 0; r < f; ++r) load_row(r, forced[r]);
    for (int r = 0; r < pick; ++r) load_row(f + r, cand[comb[r]]);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(M);
    if (!lu.isInvertible()) continue;
    const Eigen::VectorXd x = lu.solve(rhs);
    if (!x.allFinite()) continue;  // near-singular basis: NaN would poison the hull
    bool ok = true;
    for (int r = 0; r < m && ok; ++r) {
      double lhs = 0.0;
      for (int cidx = 0; cidx < d; ++cidx) lhs += A[r][cidx] * x(cidx);
      if (lhs > b[r] + 1e-6 * (1.0 + std::fabs(b[r]))) ok = false;
    }
    if (ok) projected.push_back({x(ix), x(iy)});
  } while (advance() && projected.size() < 200000);

  const auto hull = convex_hull(projected);
  RatePolytope P;
  if (hull.empty()) return P;
  if (hull.size() == 1) {
    P.add(1, 0, hull[0].p, "pt_x");
    P.add(0, 1, hull[0].c, "pt_y");
    return P;
  }
  for (size_t i = 0; i < hull.size(); ++i) {
    const Point2& p1 = hull[i];
    const Point2& p2 = hull[(i + 1) % hull.size()];
    if (hull.size() == 2 && i == 1) break;
    double nx = p2.c - p1.c;
    double ny = -(p2.p - p1.p);
    const double nn = std::hypot(nx, ny);
    if (nn < 1e-12) continue;
    nx /= nn;
    ny /= nn;
    P.add(nx, ny, nx * p1.p + ny * p1.c, "hull_edge_" + std::to_string(i));
    if (hull.size() == 2)  // a segment bounds both sides
      P.add(-nx, -ny, -(nx * p1.p + ny * p1.c), "hull_edge_rev");
  }
  // keep the projection inside the hull along the axis directions too
  double max_x = 0, max_y = 0;
  for (const auto& pt : hull) {
    max_x = std::max(max_x, pt.p);
    max_y = std::max(max_y, pt.c);
  }
  P.add(1, 0, max_x, "hull_box_x");
  P.add(0, 1, max_y, "hull_box_y");
  return P;
}

RatePolytope to_rate_polytope(const HPolyhedron& H, const std::string& x_label,
                              const std::string& y_label) {
  const int ix = H.index_of(x_label);
  const int iy = H.index_of(y_label);
  if (H.dim() != 2)
    throw std::invalid_argument("to_rate_polytope: system must be 2-dimensional");
  RatePolytope P;
  int n = 0;
  for (const auto& row : H.rows)
    P.add(static_cast<double>(row.a[ix]), static_cast<double>(row.a[iy]), row.rhs,
          "row_" + std::to_string(n++));
  return P;
}

}  // namespace ccic
