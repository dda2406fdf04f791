#include "sglab/cubic_group.hpp"

#include <algorithm>

#include "sglab/error.hpp"
#include "sglab/singular.hpp"

namespace sglab {

namespace {

CycNum dot(const std::array<CycNum, 3>& a, const std::array<CycNum, 3>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

ProjPoint combo(const CycNum& al, const ProjPoint& p, const CycNum& be, const ProjPoint& q) {
  return ProjPoint(al * p[0] + be * q[0], al * p[1] + be * q[1], al * p[2] + be * q[2]);
}

Curve bare(const Curve& c) { return Curve(c.degree(), c.coeffs()); }

ProjLine unit_line(int i) {
  std::array<CycNum, 3> v{CycNum(0), CycNum(0), CycNum(0)};
  v[static_cast<size_t>(i)] = CycNum(1);
  return ProjLine(std::move(v[0]), std::move(v[1]), std::move(v[2]));
}

ProjLine line_of(const Curve& comp) {
  return ProjLine(comp.coeffs()[0], comp.coeffs()[1], comp.coeffs()[2]);
}

Curve entry_curve(int d, std::initializer_list<std::array<int, 4>> terms) {
  std::vector<CycNum> c(static_cast<size_t>(monomial_count(d)));
  for (const auto& t : terms) c[monomial_index(d, t[0], t[1], t[2])] = CycNum(t[3]);
  return Curve(d, std::move(c));
}

const CycNum& cf(const Curve& g, int i, int j, int k) {
  return g.coeffs()[monomial_index(g.degree(), i, j, k)];
}

void expect_only(const Curve& g, std::initializer_list<std::array<int, 3>> allowed,
                 const char* what) {
  const auto& lst = monomial_list(g.degree());
  for (size_t idx = 0; idx < g.coeffs().size(); ++idx) {
    if (g.coeffs()[idx].is_zero()) continue;
    bool ok = false;
    for (const auto& m : allowed)
      ok = ok || (m[0] == lst[idx][0] && m[1] == lst[idx][1] && m[2] == lst[idx][2]);
    if (!ok) fail(Errc::chart_construction, std::string(what) + ": unexpected normal-form term");
  }
}

const std::vector<ProjPoint>& standard_points() {
  static const std::vector<ProjPoint> pts = [] {
    const long raw[][3] = {{1, 0, 0}, {0, 1, 0},  {0, 0, 1},  {1, 1, 0},  {1, -1, 0}, {1, 0, 1},
                           {1, 0, -1}, {0, 1, 1}, {0, 1, -1}, {1, 1, 1},  {1, -1, 1}, {1, 1, -1},
                           {1, -1, -1}, {1, 2, 0}, {1, 0, 2}, {0, 1, 2},  {1, 2, 3},  {1, -2, 3}};
    std::vector<ProjPoint> v;
    for (const auto& r : raw) v.emplace_back(CycNum(r[0]), CycNum(r[1]), CycNum(r[2]));
    return v;
  }();
  return pts;
}

ProjTransform shear_z(const CycNum& u, const CycNum& v) {
  // Point map whose curve action substitutes z -> z + u*x + v*y.
  Mat3 m{};
  m[0][0] = CycNum(1);
  m[1][1] = CycNum(1);
  m[2][2] = CycNum(1);
  m[2][0] = -u;
  m[2][1] = -v;
  return ProjTransform(std::move(m));
}

ProjTransform shear_y(const CycNum& e) {
  // Curve action substitutes y -> y + e*x.
  Mat3 m{};
  m[0][0] = CycNum(1);
  m[1][1] = CycNum(1);
  m[2][2] = CycNum(1);
  m[1][0] = -e;
  return ProjTransform(std::move(m));
}

}  // namespace

const char* cubic_kind_name(CubicKind k) {
  switch (k) {
    case CubicKind::three_nonconcurrent_lines: return "three-nonconcurrent-lines";
    case CubicKind::three_concurrent_lines: return "three-concurrent-lines";
    case CubicKind::conic_plus_line_2pt: return "conic-plus-line-2pt";
    case CubicKind::conic_plus_line_1pt: return "conic-plus-line-1pt";
    case CubicKind::nodal: return "nodal";
    case CubicKind::cuspidal: return "cuspidal";
    case CubicKind::smooth: return "smooth";
  }
  return "unknown";
}

bool cubic_kind_multiplicative(CubicKind k) {
  return k == CubicKind::three_nonconcurrent_lines || k == CubicKind::conic_plus_line_2pt ||
         k == CubicKind::nodal;
}

bool cubic_kind_additive(CubicKind k) {
  return k == CubicKind::three_concurrent_lines || k == CubicKind::conic_plus_line_1pt ||
         k == CubicKind::cuspidal;
}

ProjPoint chord_tangent_third(const Curve& c, const ProjPoint& p, const ProjPoint& q) {
  if (c.degree() != 3) fail(Errc::kind_mismatch, "chord-tangent needs a cubic");
  if (!eval(c, p).is_zero() || !eval(c, q).is_zero())
    fail(Errc::not_on_curve, "chord endpoint off the cubic");
  if (p != q) {
    CycNum b = dot(gradient(c, p), q.coords());
    CycNum a = dot(gradient(c, q), p.coords());
    if (a.is_zero() && b.is_zero())
      fail(Errc::chart_construction, "chord lies inside the cubic");
    return combo(a, p, -b, q);
  }
  auto g = gradient(c, p);
  if (g[0].is_zero() && g[1].is_zero() && g[2].is_zero())
    fail(Errc::domain, "tangent construction at a singular point");
  ProjLine tl(g[0], g[1], g[2]);
  auto basis = line_point_basis(tl);
  ProjPoint r = (basis[0] == p) ? basis[1] : basis[0];
  CycNum fr = eval(c, r);
  CycNum a = dot(gradient(c, r), p.coords());
  if (fr.is_zero() && a.is_zero())
    fail(Errc::chart_construction, "tangent line lies inside the cubic");
  return combo(fr, p, -a, r);
}

ProjPoint chord_tangent_add(const Curve& c, const ProjPoint& o, const ProjPoint& p,
                            const ProjPoint& q) {
  return chord_tangent_third(c, o, chord_tangent_third(c, p, q));
}

ProjPoint chord_tangent_neg(const Curve& c, const ProjPoint& o, const ProjPoint& p) {
  return chord_tangent_third(c, p, o);
}

bool is_inflection(const Curve& c, const ProjPoint& p) {
  if (!eval(c, p).is_zero()) return false;
  if (is_singular(c, p)) return false;
  return chord_tangent_third(c, p, p) == p;
}

const ProjPoint& GroupMap::identity_point() const {
  if (!base_.has_value()) fail(Errc::domain, "this cubic kind has no identity point");
  return *base_;
}

namespace {

struct BuildState {
  explicit BuildState(CubicKind k) : kind(k) {}
  CubicKind kind;
  ProjTransform to_normal = ProjTransform::identity();
  CycNum tau = CycNum(0);
  std::optional<ProjPoint> base;
  int conic_comp = -1;
  int line_comp = -1;
};

BuildState make_three_lines(const Curve& cubic, const std::array<ProjLine, 3>& lines) {
  BuildState st{CubicKind::three_nonconcurrent_lines};
  if (!concurrent(lines[0], lines[1], lines[2])) {
    st.to_normal =
        transform_mapping_lines(lines, {unit_line(0), unit_line(1), unit_line(2)});
    Curve img = transform_curve(bare(cubic), st.to_normal);
    if (!(img == entry_curve(3, {{1, 1, 1, 1}})))
      fail(Errc::chart_construction, "triangle normalization failed");
    st.tau = CycNum(1);
    return st;
  }
  st.kind = CubicKind::three_concurrent_lines;
  const auto& a1 = lines[0].coeffs();
  const auto& a2 = lines[1].coeffs();
  const auto& a3 = lines[2].coeffs();
  // Write the third covector in the pencil basis: a3 = alpha*a1 + beta*a2.
  const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  CycNum alpha, beta;
  bool solved = false;
  for (const auto& pr : pairs) {
    size_t r = static_cast<size_t>(pr[0]), s = static_cast<size_t>(pr[1]);
    CycNum d = a1[r] * a2[s] - a1[s] * a2[r];
    if (d.is_zero()) continue;
    CycNum dinv = d.inv();
    alpha = (a3[r] * a2[s] - a3[s] * a2[r]) * dinv;
    beta = (a1[r] * a3[s] - a1[s] * a3[r]) * dinv;
    solved = true;
    break;
  }
  if (!solved) fail(Errc::kind_mismatch, "line components are not independent");
  for (size_t i = 0; i < 3; ++i)
    if (!(alpha * a1[i] + beta * a2[i] == a3[i]))
      fail(Errc::chart_construction, "pencil decomposition failed");
  if (alpha.is_zero() || beta.is_zero())
    fail(Errc::kind_mismatch, "line components are not distinct");
  Mat3 rows{};
  for (size_t i = 0; i < 3; ++i) {
    rows[0][i] = alpha * a1[i];
    rows[1][i] = beta * a2[i];
  }
  for (int u = 0; u < 3; ++u) {
    Mat3 trial = rows;
    trial[2][static_cast<size_t>(u)] = CycNum(1);
    if (!det3(trial).is_zero()) {
      rows = trial;
      break;
    }
  }
  st.to_normal = ProjTransform(rows);
  Curve img = transform_curve(bare(cubic), st.to_normal);
  if (!(img == entry_curve(3, {{2, 1, 0, 1}, {1, 2, 0, 1}})))
    fail(Errc::chart_construction, "concurrent-pencil normalization failed");
  return st;
}

BuildState make_conic_line(const Curve& cubic, const Curve& conic, const ProjLine& line,
                           int conic_comp, int line_comp) {
  // Conic smoothness via the symmetric matrix determinant.
  const CycNum two(2);
  Mat3 sym{};
  sym[0][0] = two * cf(conic, 2, 0, 0);
  sym[1][1] = two * cf(conic, 0, 2, 0);
  sym[2][2] = two * cf(conic, 0, 0, 2);
  sym[0][1] = sym[1][0] = cf(conic, 1, 1, 0);
  sym[0][2] = sym[2][0] = cf(conic, 1, 0, 1);
  sym[1][2] = sym[2][1] = cf(conic, 0, 1, 1);
  if (det3(sym).is_zero()) fail(Errc::kind_mismatch, "conic component is degenerate");

  auto basis = line_point_basis(line);
  const ProjPoint& u = basis[0];
  const ProjPoint& w = basis[1];
  CycNum qa = eval(conic, u);
  CycNum qb = dot(gradient(conic, u), w.coords());
  CycNum qc = eval(conic, w);
  CycNum disc = qb * qb - CycNum(4) * qa * qc;

  BuildState st{CubicKind::conic_plus_line_2pt};
  st.conic_comp = conic_comp;
  st.line_comp = line_comp;
  std::array<ProjLine, 3> dst{unit_line(0), unit_line(2), unit_line(1)};
  ProjTransform frame = ProjTransform::identity();
  if (!disc.is_zero()) {
    auto sq = cyc_sqrt(disc);
    if (!sq.has_value())
      fail(Errc::chart_construction,
           "conic-line intersection lies outside the reachable cyclotomic tower");
    ProjPoint q1 = qa.is_zero() ? u : combo(-qb + *sq, u, two * qa, w);
    ProjPoint q2 = qa.is_zero() ? combo(qc, u, -qb, w) : combo(-qb - *sq, u, two * qa, w);
    // orient the chart so that on x^2 = yz with the line x = 0 it reads t/u
    if (ProjPoint::cmp(q1, q2) < 0) std::swap(q1, q2);
    frame = transform_mapping_lines({line, tangent_line(conic, q1), tangent_line(conic, q2)},
                                    dst);
    st.tau = CycNum(1);
  } else {
    st.kind = CubicKind::conic_plus_line_1pt;
    ProjPoint q = qa.is_zero() ? u : combo(-qb, u, two * qa, w);
    std::optional<ProjPoint> r;
    for (const ProjPoint& aux : standard_points()) {
      if (aux == q) continue;
      CycNum br = dot(gradient(conic, q), aux.coords());
      if (br.is_zero()) continue;  // line through q and aux is the tangent
      CycNum cr = eval(conic, aux);
      r = combo(-cr, q, br, aux);
      break;
    }
    if (!r.has_value()) fail(Errc::chart_construction, "no auxiliary conic point found");
    dst = {unit_line(2), unit_line(1), unit_line(0)};
    frame = transform_mapping_lines({line, tangent_line(conic, *r), join(q, *r)}, dst);
  }
  Curve conic_img = transform_curve(bare(conic), frame);
  expect_only(conic_img, {{{2, 0, 0}}, {{0, 1, 1}}}, "conic normalization");
  if (cf(conic_img, 2, 0, 0).is_zero() || cf(conic_img, 0, 1, 1).is_zero())
    fail(Errc::chart_construction, "conic normalization failed");
  CycNum g = cf(conic_img, 0, 1, 1);  // canonical scale makes the x^2 term 1
  ProjTransform dfix = ProjTransform::diagonal(CycNum(1), -g, CycNum(1));
  st.to_normal = dfix * frame;
  Curve img = transform_curve(bare(cubic), st.to_normal);
  Curve expected = (st.kind == CubicKind::conic_plus_line_2pt)
                       ? entry_curve(3, {{3, 0, 0, 1}, {1, 1, 1, -1}})
                       : entry_curve(3, {{2, 0, 1, 1}, {0, 1, 2, -1}});
  if (!(img == expected)) fail(Errc::chart_construction, "conic-line normalization failed");
  return st;
}

BuildState make_nodal(const Curve& cubic, const TangentCone& cone) {
  BuildState st{CubicKind::nodal};
  // row order picked so the chart is the stereographic slope y/x on the
  // reference curve xyz + x^3 + y^3
  Mat3 rows{};
  for (size_t i = 0; i < 3; ++i) {
    rows[0][i] = cone.lines[1][static_cast<int>(i)];
    rows[1][i] = cone.lines[0][static_cast<int>(i)];
  }
  for (int u = 0; u < 3; ++u) {
    Mat3 trial = rows;
    trial[2][static_cast<size_t>(u)] = CycNum(1);
    if (!det3(trial).is_zero()) {
      rows = trial;
      break;
    }
  }
  ProjTransform frame(rows);
  Curve g1 = transform_curve(bare(cubic), frame);
  expect_only(g1, {{{3, 0, 0}}, {{2, 1, 0}}, {{1, 2, 0}}, {{0, 3, 0}}, {{1, 1, 1}}},
              "nodal normalization");
  const CycNum& cc = cf(g1, 1, 1, 1);
  if (cc.is_zero()) fail(Errc::chart_construction, "nodal normalization lost the node");
  CycNum ccinv = cc.inv();
  ProjTransform fix = shear_z(-(cf(g1, 2, 1, 0) * ccinv), -(cf(g1, 1, 2, 0) * ccinv));
  Curve g2 = transform_curve(g1, fix);
  expect_only(g2, {{{3, 0, 0}}, {{0, 3, 0}}, {{1, 1, 1}}}, "nodal normalization");
  const CycNum& c2 = cf(g2, 1, 1, 1);
  CycNum p = cf(g2, 3, 0, 0) / c2;
  CycNum q = cf(g2, 0, 3, 0) / c2;
  if (p.is_zero() || q.is_zero())
    fail(Errc::chart_construction, "nodal cubic is reducible");
  st.to_normal = fix * frame;
  st.tau = -(p / q);
  return st;
}

BuildState make_cuspidal(const Curve& cubic, const ProjPoint& s, const TangentCone& cone) {
  BuildState st{CubicKind::cuspidal};
  const ProjLine& t = cone.lines[0];
  auto basis = line_point_basis(t);
  const ProjPoint& c2pt = (basis[0] == s) ? basis[1] : basis[0];
  int lead = 0;
  while (t[lead].is_zero()) ++lead;
  Mat3 cols{};
  cols[static_cast<size_t>(lead)][0] = t[lead].inv();
  for (size_t i = 0; i < 3; ++i) {
    cols[i][1] = c2pt[static_cast<int>(i)];
    cols[i][2] = s[static_cast<int>(i)];
  }
  ProjTransform frame = ProjTransform(std::move(cols)).inverse();
  Curve g1 = transform_curve(bare(cubic), frame);
  expect_only(g1, {{{2, 0, 1}}, {{3, 0, 0}}, {{2, 1, 0}}, {{1, 2, 0}}, {{0, 3, 0}}},
              "cuspidal normalization");
  const CycNum& a1 = cf(g1, 2, 0, 1);
  const CycNum& q1 = cf(g1, 0, 3, 0);
  if (a1.is_zero() || q1.is_zero())
    fail(Errc::chart_construction, "cuspidal cubic is reducible");
  ProjTransform fix1 = shear_y(-(cf(g1, 1, 2, 0) / (CycNum(3) * q1)));
  Curve g2 = transform_curve(g1, fix1);
  expect_only(g2, {{{2, 0, 1}}, {{3, 0, 0}}, {{2, 1, 0}}, {{0, 3, 0}}}, "cuspidal normalization");
  const CycNum& a2 = cf(g2, 2, 0, 1);
  CycNum a2inv = a2.inv();
  ProjTransform fix2 = shear_z(-(cf(g2, 3, 0, 0) * a2inv), -(cf(g2, 2, 1, 0) * a2inv));
  Curve g3 = transform_curve(g2, fix2);
  expect_only(g3, {{{2, 0, 1}}, {{0, 3, 0}}}, "cuspidal normalization");
  if (cf(g3, 0, 3, 0).is_zero()) fail(Errc::chart_construction, "cuspidal normalization failed");
  st.to_normal = fix2 * (fix1 * frame);
  return st;
}

BuildState make_smooth(const Curve& cubic, const ProjPoint* base) {
  BuildState st{CubicKind::smooth};
  if (base != nullptr) {
    if (!eval(cubic, *base).is_zero())
      fail(Errc::chart_construction, "supplied base point is off the cubic");
    if (!is_inflection(cubic, *base))
      fail(Errc::chart_construction, "supplied base point is not an inflection");
    st.base = *base;
    return st;
  }
  for (const ProjPoint& cand : standard_points()) {
    if (!eval(cubic, cand).is_zero()) continue;
    if (is_singular(cubic, cand)) continue;
    if (is_inflection(cubic, cand)) {
      st.base = cand;
      return st;
    }
  }
  fail(Errc::chart_construction,
       "no inflection found among standard candidates; supply a base point");
}

}  // namespace

GroupMap GroupMap::build_impl(const Curve& c, const ProjPoint* base) {
  if (c.degree() != 3) fail(Errc::kind_mismatch, "group construction requires a cubic");
  std::vector<std::pair<Curve, int>> comps;
  if (c.has_components())
    comps = c.components();
  else
    comps.emplace_back(bare(c), 1);
  for (const auto& [comp, mult] : comps)
    if (mult != 1) fail(Errc::kind_mismatch, "non-reduced cubics have no group chart");

  BuildState st{CubicKind::smooth};
  if (comps.size() == 3) {
    std::array<ProjLine, 3> lines{line_of(comps[0].first), line_of(comps[1].first),
                                  line_of(comps[2].first)};
    if (lines[0] == lines[1] || lines[1] == lines[2] || lines[0] == lines[2])
      fail(Errc::kind_mismatch, "line components are not distinct");
    st = make_three_lines(c, lines);
  } else if (comps.size() == 2) {
    int conic_idx = comps[0].first.degree() == 2 ? 0 : 1;
    int line_idx = 1 - conic_idx;
    st = make_conic_line(c, comps[static_cast<size_t>(conic_idx)].first,
                         line_of(comps[static_cast<size_t>(line_idx)].first), conic_idx,
                         line_idx);
  } else {
    SingularScan scan = find_unique_singular_point(bare(c));
    if (scan.outcome == SingularOutcome::fail)
      fail(Errc::chart_construction, "singular locus scan failed: " + scan.note);
    if (scan.outcome == SingularOutcome::smooth) {
      st = make_smooth(c, base);
    } else {
      TangentCone cone = tangent_cone(bare(c), *scan.point);
      st = (cone.kind == ConeKind::node) ? make_nodal(c, cone)
                                         : make_cuspidal(c, *scan.point, cone);
    }
  }
  GroupMap m(st.kind, bare(c), std::move(comps), std::move(st.to_normal), std::move(st.tau));
  m.base_ = std::move(st.base);
  m.conic_comp_ = st.conic_comp;
  m.line_comp_ = st.line_comp;
  return m;
}

GroupMap GroupMap::build(const Curve& c) { return build_impl(c, nullptr); }

GroupMap GroupMap::build(const Curve& c, const ProjPoint& base) { return build_impl(c, &base); }

GroupElement GroupMap::rho(const ProjPoint& p) const {
  if (!eval(cubic_, p).is_zero()) fail(Errc::domain, "point is off the cubic");
  if (is_singular(cubic_, p)) fail(Errc::domain, "singular points carry no group value");
  int comp = 0;  // 1-based, matching the rho_1, rho_2, ... chart names
  for (size_t i = 0; i < comps_.size(); ++i) {
    if (eval(comps_[i].first, p).is_zero()) {
      comp = static_cast<int>(i) + 1;
      break;
    }
  }
  if (comp == 0) fail(Errc::domain, "point is on no component");
  GroupElement e{kind_, CycNum(0), std::nullopt, comp};
  if (kind_ == CubicKind::smooth) {
    e.point = p;
    return e;
  }
  ProjPoint n = to_normal_(p);
  switch (kind_) {
    case CubicKind::three_nonconcurrent_lines:
      e.value = comp == 1 ? n[1] / n[2] : (comp == 2 ? -(n[2] / n[0]) : n[0] / n[1]);
      break;
    case CubicKind::three_concurrent_lines:
      e.value = comp == 1 ? n[2] / n[1] : (comp == 2 ? -(n[2] / n[0]) : n[2] / n[0]);
      break;
    case CubicKind::conic_plus_line_2pt:
      e.value = comp == conic_comp_ + 1 ? n[0] / n[2] : -(n[2] / n[1]);
      break;
    case CubicKind::conic_plus_line_1pt:
      e.value = comp == conic_comp_ + 1 ? n[0] / n[2] : -(n[1] / n[0]);
      break;
    case CubicKind::nodal:
    case CubicKind::cuspidal:
      e.value = n[1] / n[0];
      break;
    case CubicKind::smooth:
      break;
  }
  return e;
}

bool GroupMap::group_sum_is_zero(const ProjPoint& p, const ProjPoint& q,
                                 const ProjPoint& r) const {
  GroupElement e1 = rho(p), e2 = rho(q), e3 = rho(r);
  if (p == q || q == r || p == r)
    fail(Errc::component_balance, "group sum needs three distinct points");
  std::vector<int> cnt(comps_.size(), 0);
  cnt[static_cast<size_t>(e1.component_index - 1)]++;
  cnt[static_cast<size_t>(e2.component_index - 1)]++;
  cnt[static_cast<size_t>(e3.component_index - 1)]++;
  for (size_t i = 0; i < comps_.size(); ++i)
    if (cnt[i] != comps_[i].first.degree())
      fail(Errc::component_balance, "triple does not meet every component in its degree");
  if (kind_ == CubicKind::smooth) {
    ProjPoint s = chord_tangent_add(cubic_, *base_, p, q);
    ProjPoint t = chord_tangent_add(cubic_, *base_, s, r);
    return t == *base_;
  }
  if (cubic_kind_multiplicative(kind_)) return e1.value * e2.value * e3.value == tau_;
  return (e1.value + e2.value + e3.value).is_zero();
}

std::string GroupMap::describe() const {
  std::string out = std::string("kind: ") + cubic_kind_name(kind_) + "\n";
  out += std::string("group: ") + (kind_ == CubicKind::smooth
                                       ? "chord-tangent"
                                       : (cubic_kind_multiplicative(kind_) ? "multiplicative"
                                                                           : "additive")) +
         "\n";
  switch (kind_) {
    case CubicKind::three_nonconcurrent_lines:
      out += "chart 1: y/z on x=0\nchart 2: -z/x on y=0\nchart 3: x/y on z=0\n";
      out += "criterion: product of values equals 1\n";
      break;
    case CubicKind::three_concurrent_lines:
      out += "chart 1: z/y on x=0\nchart 2: -z/x on y=0\nchart 3: z/x on x+y=0\n";
      out += "criterion: sum of values equals 0\n";
      break;
    case CubicKind::conic_plus_line_2pt:
      out += "chart[conic]: x/z on x^2=yz\nchart[line]: -z/y on x=0\n";
      out += "criterion: product of values equals 1\n";
      break;
    case CubicKind::conic_plus_line_1pt:
      out += "chart[conic]: x/z on x^2=yz\nchart[line]: -y/x on z=0\n";
      out += "criterion: sum of values equals 0\n";
      break;
    case CubicKind::nodal:
      out += "chart: y/x on xyz + p*x^3 + q*y^3\n";
      out += "criterion: product of values equals tau = " + emit_cyc(tau_) + "\n";
      break;
    case CubicKind::cuspidal:
      out += "chart: y/x on x^2*z + c*y^3\ncriterion: sum of values equals 0\n";
      break;
    case CubicKind::smooth:
      out += "chart: chord-tangent sums with identity " + emit_point(*base_) + "\n";
      out += "criterion: (p + q) + r equals the identity\n";
      break;
  }
  return out;
}

}  // namespace sglab
