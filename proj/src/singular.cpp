#include "sglab/singular.hpp"

#include <algorithm>

#include "sglab/error.hpp"
#include "sglab/poly.hpp"

namespace sglab {

namespace {

using UPoly = Poly<CycNum>;
using BPoly = Poly<UPoly>;  // outer variable b, inner variable a

// Affine chart: coordinate `unit` pinned to 1, affine pair (ia, ib).
struct Chart {
  int unit, ia, ib;
};

BPoly chart_poly(const Curve& c, const Chart& ch) {
  int d = c.degree();
  const auto& lst = monomial_list(d);
  std::vector<std::vector<CycNum>> grid(static_cast<size_t>(d + 1),
                                        std::vector<CycNum>(static_cast<size_t>(d + 1)));
  for (size_t idx = 0; idx < c.coeffs().size(); ++idx) {
    if (c.coeffs()[idx].is_zero()) continue;
    int ea = lst[idx][static_cast<size_t>(ch.ia)];
    int eb = lst[idx][static_cast<size_t>(ch.ib)];
    grid[static_cast<size_t>(eb)][static_cast<size_t>(ea)] =
        grid[static_cast<size_t>(eb)][static_cast<size_t>(ea)] + c.coeffs()[idx];
  }
  std::vector<UPoly> rows;
  for (auto& row : grid) rows.emplace_back(std::move(row));
  return BPoly(std::move(rows));
}

BPoly inner_derivative(const BPoly& f) {
  std::vector<UPoly> rows;
  for (const auto& g : f.c) rows.push_back(derivative(g));
  return BPoly(std::move(rows));
}

BPoly outer_derivative(const BPoly& f) {
  if (f.c.size() <= 1) return BPoly();
  std::vector<UPoly> rows;
  for (size_t j = 1; j < f.c.size(); ++j)
    rows.push_back(scale_poly(f.c[j], CycNum(static_cast<long>(j))));
  return BPoly(std::move(rows));
}

UPoly eval_inner(const BPoly& f, const CycNum& a0) {
  std::vector<CycNum> out;
  for (const auto& g : f.c) out.push_back(eval_poly(g, a0));
  return UPoly(std::move(out));
}

UPoly squarefree_part(const UPoly& g) {
  if (g.deg() <= 0) return g;
  UPoly r = poly_gcd(g, derivative(g));
  return divmod(g, r).first;
}

// Exact roots of a squarefree polynomial of degree <= 2 (via cyc_sqrt for
// quadratics); nullopt when the degree is too high or the square root is
// unreachable.
std::optional<std::vector<CycNum>> small_roots(const UPoly& s) {
  if (s.deg() <= 0) return std::vector<CycNum>{};
  if (s.deg() == 1) return std::vector<CycNum>{-(s.c[0] / s.c[1])};
  if (s.deg() > 2) return std::nullopt;
  CycNum disc = s.c[1] * s.c[1] - CycNum(4) * s.c[2] * s.c[0];
  auto sq = cyc_sqrt(disc);
  if (!sq.has_value()) return std::nullopt;
  CycNum den = (CycNum(2) * s.c[2]).inv();
  CycNum r1 = (-s.c[1] + *sq) * den;
  CycNum r2 = (-s.c[1] - *sq) * den;
  std::vector<CycNum> out{r1};
  if (!(r1 == r2)) out.push_back(r2);
  return out;
}

enum class ChartStatus { clean, found, inconclusive };

struct ChartResult {
  ChartStatus status;
  std::vector<ProjPoint> pts;
};

ProjPoint chart_point(const Chart& ch, const CycNum& a0, const CycNum& b0) {
  std::array<CycNum, 3> v{CycNum(0), CycNum(0), CycNum(0)};
  v[static_cast<size_t>(ch.unit)] = CycNum(1);
  v[static_cast<size_t>(ch.ia)] = a0;
  v[static_cast<size_t>(ch.ib)] = b0;
  return ProjPoint(std::move(v[0]), std::move(v[1]), std::move(v[2]));
}

bool gradient_vanishes(const Curve& c, const ProjPoint& p) {
  if (!eval(c, p).is_zero()) return false;
  auto g = gradient(c, p);
  return g[0].is_zero() && g[1].is_zero() && g[2].is_zero();
}

ChartResult scan_one_chart(const Curve& orig, const Curve& work, const ProjTransform& back,
                           const Chart& ch) {
  BPoly f = chart_poly(work, ch);
  if (f.is_zero()) return {ChartStatus::inconclusive, {}};
  BPoly fa = inner_derivative(f);
  BPoly fb = outer_derivative(f);
  UPoly r1 = resultant(fa, fb);
  UPoly r2 = resultant(f, fa);
  UPoly r3 = resultant(f, fb);
  UPoly g = poly_gcd(poly_gcd(r1, r2), r3);
  if (g.is_zero()) return {ChartStatus::inconclusive, {}};
  auto roots_a = small_roots(squarefree_part(g));
  if (!roots_a.has_value()) return {ChartStatus::inconclusive, {}};
  std::vector<ProjPoint> verified;
  for (const CycNum& a0 : *roots_a) {
    UPoly fiber = poly_gcd(poly_gcd(eval_inner(f, a0), eval_inner(fa, a0)), eval_inner(fb, a0));
    if (fiber.is_zero()) return {ChartStatus::inconclusive, {}};
    auto roots_b = small_roots(squarefree_part(fiber));
    if (!roots_b.has_value()) return {ChartStatus::inconclusive, {}};
    for (const CycNum& b0 : *roots_b) {
      ProjPoint cand = back(chart_point(ch, a0, b0));
      if (gradient_vanishes(orig, cand)) verified.push_back(cand);
    }
  }
  if (verified.empty()) return {ChartStatus::clean, {}};
  return {ChartStatus::found, std::move(verified)};
}

}  // namespace

SingularScan find_unique_singular_point(const Curve& c) {
  const Chart charts[3] = {{2, 0, 1}, {1, 0, 2}, {0, 1, 2}};
  std::vector<ProjPoint> found;
  bool undecided = false;
  for (const Chart& ch : charts) {
    // In-chart coordinate changes retried when the elimination degenerates:
    // identity, two shears a += t*b, the (a, b) swap, and a sheared swap.
    std::vector<Mat3> attempts;
    for (int kind = 0; kind < 5; ++kind) {
      Mat3 m{};
      for (size_t i = 0; i < 3; ++i) m[i][i] = CycNum(1);
      size_t a = static_cast<size_t>(ch.ia), b = static_cast<size_t>(ch.ib);
      if (kind == 1) m[a][b] = CycNum(1);
      if (kind == 2) m[a][b] = CycNum(2);
      if (kind == 3 || kind == 4) {
        m[a][a] = CycNum(0);
        m[b][b] = CycNum(0);
        m[a][b] = CycNum(1);
        m[b][a] = CycNum(1);
        if (kind == 4) m[a][a] = CycNum(3);
      }
      attempts.push_back(std::move(m));
    }
    bool decided = false;
    for (const Mat3& m : attempts) {
      ProjTransform w(m);
      Curve work = transform_curve(c, w);
      ChartResult r = scan_one_chart(c, work, w.inverse(), ch);
      if (r.status == ChartStatus::inconclusive) continue;
      if (r.status == ChartStatus::found)
        for (auto& p : r.pts) found.push_back(std::move(p));
      decided = true;
      break;
    }
    if (!decided) undecided = true;
  }
  std::sort(found.begin(), found.end(),
            [](const ProjPoint& a, const ProjPoint& b) { return ProjPoint::cmp(a, b) < 0; });
  found.erase(std::unique(found.begin(), found.end()), found.end());
  if (found.size() > 1) return {SingularOutcome::fail, std::nullopt, "multiple singular points"};
  if (found.size() == 1) return {SingularOutcome::unique_singular, found[0], ""};
  if (undecided) return {SingularOutcome::fail, std::nullopt, "elimination stayed degenerate"};
  return {SingularOutcome::smooth, std::nullopt, ""};
}

TangentCone tangent_cone(const Curve& c, const ProjPoint& s) {
  if (!eval(c, s).is_zero() || !is_singular(c, s))
    fail(Errc::domain, "tangent cone requested at a non-singular point");
  int unit = 0;
  while (s[unit].is_zero()) ++unit;  // canonical lead, s[unit] = 1
  int ia = unit == 0 ? 1 : 0;
  int ib = unit == 2 ? 1 : 2;
  Mat3 m{};
  for (size_t i = 0; i < 3; ++i) m[i][i] = CycNum(1);
  m[static_cast<size_t>(ia)][static_cast<size_t>(unit)] = -s[ia];
  m[static_cast<size_t>(ib)][static_cast<size_t>(unit)] = -s[ib];
  ProjTransform tr(m);
  Curve g = transform_curve(c, tr);
  auto coeff_at = [&](int ea, int eb) -> const CycNum& {
    int e[3];
    e[unit] = c.degree() - ea - eb;
    e[ia] = ea;
    e[ib] = eb;
    return g.coeffs()[monomial_index(c.degree(), e[0], e[1], e[2])];
  };
  const CycNum& qa = coeff_at(2, 0);
  const CycNum& qb = coeff_at(1, 1);
  const CycNum& qc = coeff_at(0, 2);
  if (qa.is_zero() && qb.is_zero() && qc.is_zero())
    fail(Errc::chart_construction, "singular point is worse than a double point");
  auto chart_line = [&](const CycNum& alpha, const CycNum& beta) {
    std::array<CycNum, 3> w{CycNum(0), CycNum(0), CycNum(0)};
    w[static_cast<size_t>(ia)] = alpha;
    w[static_cast<size_t>(ib)] = beta;
    ProjLine translated(std::move(w[0]), std::move(w[1]), std::move(w[2]));
    return tr.inverse().map_line(translated);
  };
  CycNum disc = qb * qb - CycNum(4) * qa * qc;
  TangentCone cone;
  if (disc.is_zero()) {
    cone.kind = ConeKind::cusp;
    if (!qa.is_zero())
      cone.lines.push_back(chart_line(CycNum(2) * qa, qb));
    else
      cone.lines.push_back(chart_line(CycNum(0), CycNum(1)));
    return cone;
  }
  cone.kind = ConeKind::node;
  if (qa.is_zero()) {
    cone.lines.push_back(chart_line(CycNum(0), CycNum(1)));
    cone.lines.push_back(chart_line(qb, qc));
  } else {
    auto sq = cyc_sqrt(disc);
    if (!sq.has_value())
      fail(Errc::chart_construction,
           "tangent cone does not split over the reachable cyclotomic tower");
    cone.lines.push_back(chart_line(CycNum(2) * qa, qb - *sq));
    cone.lines.push_back(chart_line(CycNum(2) * qa, qb + *sq));
  }
  std::sort(cone.lines.begin(), cone.lines.end(),
            [](const ProjLine& a, const ProjLine& b) { return ProjLine::cmp(a, b) < 0; });
  return cone;
}

}  // namespace sglab
