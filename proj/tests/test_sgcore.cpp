#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "sglab/classify.hpp"
#include "sglab/config.hpp"
#include "sglab/error.hpp"

using namespace sglab;

namespace {

ProjPoint pt(long x, long y, long z) { return ProjPoint(CycNum(x), CycNum(y), CycNum(z)); }

Configuration config_of(std::vector<ProjPoint> pts, unsigned order = 1) {
  Configuration a;
  a.order = order;
  a.points = std::move(pts);
  return a;
}

Curve xyz_curve() {
  std::vector<CycNum> c(static_cast<size_t>(monomial_count(3)), CycNum(0));
  c[monomial_index(3, 1, 1, 1)] = CycNum(1);
  return Curve(3, c);
}

Curve from_entries(int d, const std::vector<std::tuple<int, int, int, long>>& entries) {
  std::vector<CycNum> c(static_cast<size_t>(monomial_count(d)), CycNum(0));
  for (const auto& [i, j, k, v] : entries) c[monomial_index(d, i, j, k)] = CycNum(v);
  return Curve(d, c);
}

ProjTransform int_transform(std::array<std::array<long, 3>, 3> m) {
  Mat3 mm;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) mm[static_cast<size_t>(r)][static_cast<size_t>(c)] = CycNum(m[static_cast<size_t>(r)][static_cast<size_t>(c)]);
  return ProjTransform(mm);
}

// Random small-coordinate configuration with distinct points.
Configuration random_config(std::mt19937& rng, size_t target) {
  std::vector<ProjPoint> pts;
  auto coord = [&]() { return static_cast<long>(rng() % 7) - 3; };
  while (pts.size() < target) {
    long x = coord(), y = coord(), z = coord();
    if (x == 0 && y == 0 && z == 0) continue;
    ProjPoint p{CycNum(x), CycNum(y), CycNum(z)};
    bool dup = false;
    for (const auto& q : pts) dup = dup || q == p;
    if (!dup) pts.push_back(p);
  }
  return config_of(std::move(pts));
}

}  // namespace

TEST_CASE("fermat configuration and its determinant law") {
  Configuration f3 = fermat_config(3);
  CHECK(f3.points.size() == 9);
  CHECK(f3.order == 3);
  CHECK(f3.labels.size() == 9);
  CHECK(f3.labels[0] == "a0");
  CHECK(f3.labels[4] == "b1");
  CHECK(f3.labels[8] == "c2");
  CHECK_THROWS_AS(fermat_config(2), Error);

  // the nullspace fit through all nine points must be the triangle cubic
  auto fit = fit_curve(f3.points, 3);
  REQUIRE(fit.has_value());
  CHECK(*fit == xyz_curve());
  CHECK(!fit_curve(f3.points, 2).has_value());

  // determinant oracle: (a_r, b_s, c_t) collinear exactly on one congruence
  for (unsigned n = 3; n <= 5; ++n) {
    Configuration f = fermat_config(n);
    for (unsigned r = 0; r < n; ++r)
      for (unsigned s = 0; s < n; ++s)
        for (unsigned t = 0; t < n; ++t) {
          bool col = collinear(f.points[r], f.points[n + s], f.points[2 * n + t]);
          CHECK(col == (r == (s + t) % n));
        }
  }
}

TEST_CASE("line index bookkeeping") {
  Configuration row = config_of({pt(0, 1, 1), pt(0, 1, 2), pt(0, 1, 3)});
  LineIncidenceIndex idx = build_index(row);
  REQUIRE(idx.size() == 1);
  CHECK(idx.begin()->second == std::vector<size_t>{0, 1, 2});

  Configuration tri = config_of({pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)});
  LineIncidenceIndex tdx = build_index(tri);
  CHECK(tdx.size() == 3);
  for (const auto& [l, list] : tdx) CHECK(list.size() == 2);

  // full enumeration for F_3: three component lines plus n^2 = 9 cross lines,
  // every one of them carrying exactly three points
  Configuration f3 = fermat_config(3);
  LineIncidenceIndex fdx = build_index(f3);
  CHECK(fdx.size() == 12);
  size_t pairs = 0;
  for (const auto& [l, list] : fdx) {
    CHECK(list.size() == 3);
    pairs += list.size() * (list.size() - 1) / 2;
  }
  CHECK(pairs == 36);  // C(9, 2): every pair on exactly one line

  Configuration dup = config_of({pt(1, 0, 0), pt(0, 1, 0), pt(2, 0, 0)});
  CHECK_THROWS_AS(build_index(dup), Error);
  CHECK_THROWS_AS(build_index(config_of({pt(1, 0, 0)})), Error);
}

TEST_CASE("sg reports") {
  // brute-force first: the triple loop fixes |T| before the formula is trusted
  Configuration f3 = fermat_config(3);
  CHECK(collinear_triples_naive(f3) == 72);
  SGReport rep = sg_check(f3);
  CHECK(rep.is_sg);
  CHECK(rep.ordinary_lines.empty());
  CHECK(rep.triple_count == 72);
  CHECK(rep.line_size_histogram == std::map<size_t, size_t>{{3, 12}});

  for (unsigned n = 4; n <= 5; ++n) {
    Configuration f = fermat_config(n);
    long formula = 3L * n * (n - 1) * (n - 2) + 6L * n * n;
    SGReport r = sg_check(f);
    CHECK(r.is_sg);
    CHECK(r.triple_count == formula);
    CHECK(r.triple_count == collinear_triples_naive(f));
  }

  Configuration tri = config_of({pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)});
  SGReport trep = sg_check(tri);
  CHECK(!trep.is_sg);
  CHECK(trep.ordinary_lines.size() == 3);
  CHECK(trep.triple_count == 0);

  Configuration f5 = fermat_config(5);
  f5.points.erase(f5.points.begin());
  f5.labels.erase(f5.labels.begin());
  SGReport mrep = sg_check(f5);
  CHECK(!mrep.is_sg);
  CHECK(!mrep.ordinary_lines.empty());
  LineIncidenceIndex mdx = build_index(f5);
  for (const auto& l : mrep.ordinary_lines) CHECK(mdx.at(l).size() == 2);

  // collinear sets are not Sylvester-Gallai and carry no ordinary line
  Configuration row = config_of({pt(0, 1, 1), pt(0, 1, 2), pt(0, 1, 3), pt(0, 1, 4)});
  SGReport rrep = sg_check(row);
  CHECK(!rrep.is_sg);
  CHECK(rrep.ordinary_lines.empty());
  CHECK(rrep.triple_count == 24);

  CHECK_THROWS_AS(sg_check(config_of({pt(1, 0, 0), pt(0, 1, 0)})), Error);
}

TEST_CASE("ordered triple counts between classes") {
  Configuration f3 = fermat_config(3);
  LineIncidenceIndex idx = build_index(f3);
  std::vector<size_t> cls_a{0, 1, 2}, cls_b{3, 4, 5}, cls_c{6, 7, 8};
  // one point per class in fixed class order: one tuple per cross line
  CHECK(triples_between(f3, idx, cls_a, cls_b, cls_c) == 9);
  CHECK(triples_between_naive(f3, cls_a, cls_b, cls_c) == 9);

  Configuration line4 = config_of({pt(1, 0, 1), pt(1, 0, 2), pt(1, 0, 3), pt(1, 0, 4)});
  LineIncidenceIndex ldx = build_index(line4);
  std::vector<size_t> all{0, 1, 2, 3};
  CHECK(triples_between(line4, ldx, all, all, all) == 24);
  CHECK(triples_between_naive(line4, all, all, all) == 24);

  Configuration split = config_of({pt(1, 0, 1), pt(1, 0, 2), pt(1, 0, 3), pt(1, 0, 4), pt(0, 1, 0)});
  LineIncidenceIndex sdx = build_index(split);
  CHECK(triples_between(split, sdx, {0, 1}, {2, 3}, {4}) == 0);

  CHECK_THROWS_AS(triples_between(line4, ldx, {0, 9}, all, all), Error);

  std::mt19937 rng(20240612);
  for (int trial = 0; trial < 10; ++trial) {
    Configuration a = random_config(rng, 12 + rng() % 8);
    LineIncidenceIndex adx = build_index(a);
    auto subset = [&]() {
      std::vector<size_t> s;
      for (size_t i = 0; i < a.points.size(); ++i)
        if (rng() % 2 == 0) s.push_back(i);
      return s;
    };
    std::vector<size_t> ai = subset(), aj = subset(), ak = subset();
    CHECK(triples_between(a, adx, ai, aj, ak) == triples_between_naive(a, ai, aj, ak));
  }
}

TEST_CASE("triple formula equals the naive loop on random configurations") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    Configuration a = random_config(rng, 10 + rng() % 12);
    CHECK(sg_check(a).triple_count == collinear_triples_naive(a));
  }
  Configuration f4 = fermat_config(4);
  long formula = 3L * 4 * 3 * 2 + 6L * 16;
  CHECK(sg_check(f4).triple_count == formula);
  CHECK(collinear_triples_naive(f4) == formula);
}

TEST_CASE("concurrent pencil checker") {
  // three lines through [0:0:1] carrying 5, 1, 1 points; 5 > m - 2 = 1
  std::vector<ProjPoint> pts;
  for (long t = 1; t <= 5; ++t) pts.push_back(pt(0, 1, t));
  pts.push_back(pt(1, 0, 1));
  pts.push_back(pt(1, 1, 1));
  Configuration vee = config_of(pts);
  auto found = concurrent_lines_check(vee);
  REQUIRE(found.has_value());
  CHECK(build_index(vee).at(*found).size() == 2);

  // the concurrency point may belong to the set itself
  pts.push_back(pt(0, 0, 1));
  Configuration withv = config_of(pts);
  auto found2 = concurrent_lines_check(withv);
  REQUIRE(found2.has_value());
  CHECK(build_index(withv).at(*found2).size() == 2);

  // a Sylvester-Gallai set can never satisfy the hypothesis
  CHECK(!concurrent_lines_check(fermat_config(3)).has_value());

  Configuration row = config_of({pt(0, 1, 1), pt(0, 1, 2), pt(0, 1, 3)});
  CHECK_THROWS_AS(concurrent_lines_check(row), Error);
}

TEST_CASE("tangent pencil counts") {
  // triangle: a pencil line is deficient exactly when it passes through one
  // of the three vertices
  CHECK(tangent_count(xyz_curve(), pt(1, 2, 3)) == 3);

  // transversal conic plus line x(x^2 - yz): two tangents from the point to
  // the conic plus the two lines through the crossings
  Curve cl = from_entries(3, {{3, 0, 0, 1}, {1, 1, 1, -1}});
  CHECK(tangent_count(cl, pt(1, 1, 2)) == 4);

  // smooth cubic: the dual curve has degree 6, so a generic point lies on
  // six tangent lines
  Curve smooth = from_entries(3, {{0, 2, 1, 1}, {3, 0, 0, -1}, {1, 0, 2, 1}});
  long sc = tangent_count(smooth, pt(1, 1, 1));
  CHECK(sc == 6);
  CHECK(sc <= 9);

  // nodal cubic: class 6 - 2 = 4, plus the line through the node
  Curve nodal = from_entries(3, {{0, 2, 1, 1}, {3, 0, 0, -1}, {2, 0, 1, -1}});
  CHECK(tangent_count(nodal, pt(1, 2, 3)) == 5);

  // cuspidal cubic: class 6 - 3 = 3, plus the line through the cusp
  Curve cusp = from_entries(3, {{0, 2, 1, 1}, {3, 0, 0, -1}});
  CHECK(tangent_count(cusp, pt(1, 2, 3)) == 4);

  // sample points are validated against the curve
  CHECK(tangent_count(smooth, pt(1, 1, 1), {pt(0, 1, 0)}) == 6);
  CHECK_THROWS_AS(tangent_count(smooth, pt(1, 1, 1), {pt(1, 2, 3)}), Error);
  CHECK_THROWS_AS(tangent_count(smooth, pt(0, 1, 0)), Error);  // on the cubic
  CHECK_THROWS_AS(tangent_count(Curve(2, {CycNum(1), CycNum(0), CycNum(0), CycNum(0), CycNum(-1), CycNum(0)}), pt(1, 1, 1)), Error);
}

TEST_CASE("structure pipeline round trips") {
  // untransformed reference configuration
  Configuration f3 = fermat_config(3);
  StructureVerdict v3 = classify(f3);
  REQUIRE(v3.kind == VerdictKind::fermat_equivalent);
  CHECK(v3.m == 3);
  REQUIRE(v3.to_fermat.has_value());
  Configuration back3 = transform_config(f3, *v3.to_fermat);
  std::vector<ProjPoint> want = fermat_config(3).points;
  auto as_sorted = [](std::vector<ProjPoint> p) {
    std::sort(p.begin(), p.end(), [](const ProjPoint& x, const ProjPoint& y) {
      return ProjPoint::cmp(x, y) < 0;
    });
    return p;
  };
  CHECK(as_sorted(back3.points) == as_sorted(want));
  REQUIRE(v3.fitted.has_value());
  CHECK(v3.fitted->components().size() == 3);
  REQUIRE(v3.classes.size() == 3);
  for (const auto& cls : v3.classes) CHECK(cls.size() == 3);
  REQUIRE(v3.cosets.size() == 3);
  for (const auto& cert : v3.cosets) {
    REQUIRE(cert.has_value());
    CHECK(cert->m == 3);
    CHECK(cert->sym_diff == 0);
  }
  for (const auto& g : v3.grids) CHECK(g.doubling_constant == Rational(1));

  // projective invariance: transformed copies classify back to the reference
  Configuration f5 = fermat_config(5);
  std::vector<ProjTransform> ts = {
      int_transform({{{2, 1, 0}, {0, 1, 1}, {1, 0, 3}}}),
      int_transform({{{1, -1, 2}, {3, 1, 0}, {0, 2, 1}}}),
  };
  for (const auto& t : ts) {
    Configuration moved = transform_config(f5, t);
    StructureVerdict v = classify(moved);
    REQUIRE(v.kind == VerdictKind::fermat_equivalent);
    CHECK(v.m == 5);
    REQUIRE(v.to_fermat.has_value());
    Configuration back = transform_config(moved, *v.to_fermat);
    CHECK(as_sorted(back.points) == as_sorted(fermat_config(5).points));
  }

  // a deleted point breaks the SG property and surfaces an ordinary line
  Configuration broken = fermat_config(5);
  broken.points.erase(broken.points.begin() + 3);
  broken.labels.erase(broken.labels.begin() + 3);
  StructureVerdict vb = classify(broken);
  REQUIRE(vb.kind == VerdictKind::ordinary_line);
  REQUIRE(vb.ordinary.has_value());
  CHECK(build_index(broken).at(*vb.ordinary).size() == 2);
  CHECK(vb.stage == 0);
}

TEST_CASE("classifier parameters and degenerate paths") {
  Configuration f3 = fermat_config(3);
  ClassifierParams bad;
  bad.epsilon = rat(1, 2);
  bad.delta = rat(1, 4);
  CHECK_THROWS_AS(classify(f3, bad), Error);
  ClassifierParams badd;
  badd.d = 1;
  CHECK_THROWS_AS(classify(f3, badd), Error);

  // a subgroup-search cap below the true order leaves the pipeline inconclusive
  ClassifierParams capped;
  capped.max_m = 2;
  StructureVerdict vc = classify(f3, capped);
  CHECK(vc.kind == VerdictKind::inconclusive);
  CHECK(!vc.reason.empty());
  CHECK(vc.stage == 5);

  Configuration row = config_of({pt(0, 1, 1), pt(0, 1, 2), pt(0, 1, 3)});
  StructureVerdict vr = classify(row);
  CHECK(vr.kind == VerdictKind::inconclusive);
  CHECK(vr.reason.find("collinear") != std::string::npos);

  // points on concurrent lines with a two-point line settle at the precheck
  std::vector<ProjPoint> pts;
  for (long t = 1; t <= 4; ++t) pts.push_back(pt(0, 1, t));
  for (long t = 1; t <= 4; ++t) pts.push_back(pt(1, 0, t));
  for (long t = 1; t <= 2; ++t) pts.push_back(pt(1, 1, t));
  StructureVerdict vv = classify(config_of(pts));
  REQUIRE(vv.kind == VerdictKind::ordinary_line);
  CHECK(std::string(verdict_kind_name(vv.kind)) == "ordinary-line");
}

TEST_CASE("configuration dedup") {
  Configuration a;
  a.points = {pt(1, 0, 0), pt(2, 0, 0), pt(0, 1, 0)};
  a.labels = {"p", "q", "r"};
  CHECK(dedup_points(a) == 1);
  CHECK(a.points.size() == 2);
  CHECK(a.labels == std::vector<std::string>{"p", "r"});
  CHECK(dedup_points(a) == 0);
}
