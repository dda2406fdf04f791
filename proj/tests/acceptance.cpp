// Acceptance gate: one line per criterion, [PASS] or [FAIL], exit code =
// number of failed criteria.  Every tolerance is pinned here in code.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sglab/classify.hpp"
#include "sglab/config.hpp"
#include "sglab/error.hpp"

using namespace sglab;
using Clock = std::chrono::steady_clock;

namespace {

constexpr long kFermatCheckBudgetMs = 5000;  // per-n wall clock bound
constexpr int kRandomConfigs = 50;           // triple-count oracle trials
constexpr size_t kMaxConfigSize = 60;
constexpr int kSamplesPerComponent = 30;     // group-law sampling density
constexpr int kAssocTriples = 500;           // associativity sample size
constexpr long kSymDiffFactor = 7;           // recovery bound: sym_diff <= 7K
constexpr int kTransformsPerN = 10;          // canonicalization trials
constexpr int kConcurrentConfigs = 25;
constexpr int kTangentPoints = 20;
constexpr long kTangentBound = 9;

long ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

ProjPoint pt(long x, long y, long z) { return ProjPoint(CycNum(x), CycNum(y), CycNum(z)); }

Curve from_entries(int d, const std::vector<std::tuple<int, int, int, long>>& entries) {
  std::vector<CycNum> c(static_cast<size_t>(monomial_count(d)), CycNum(0));
  for (const auto& [i, j, k, v] : entries) c[monomial_index(d, i, j, k)] = CycNum(v);
  return Curve(d, c);
}

struct PointLess {
  bool operator()(const ProjPoint& a, const ProjPoint& b) const {
    return ProjPoint::cmp(a, b) < 0;
  }
};

bool same_point_set(std::vector<ProjPoint> a, std::vector<ProjPoint> b) {
  if (a.size() != b.size()) return false;
  std::sort(a.begin(), a.end(), PointLess{});
  std::sort(b.begin(), b.end(), PointLess{});
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

// --- criterion 1: Fermat configurations are Sylvester-Gallai ---------------

bool fermat_sg_property(std::string& detail) {
  long worst = 0;
  for (unsigned n = 3; n <= 12; ++n) {
    auto t0 = Clock::now();
    SGReport rep = sg_check(fermat_config(n));
    long ms = ms_since(t0);
    worst = std::max(worst, ms);
    if (!rep.is_sg || !rep.ordinary_lines.empty()) {
      detail = "n=" + std::to_string(n) + " is not Sylvester-Gallai";
      return false;
    }
    if (ms >= kFermatCheckBudgetMs) {
      detail = "n=" + std::to_string(n) + " took " + std::to_string(ms) + " ms";
      return false;
    }
  }
  detail = "n=3..12 all SG with zero ordinary lines, slowest run " + std::to_string(worst) + " ms";
  return true;
}

// --- criterion 2: collinearity law of F_n -----------------------------------

bool fermat_collinearity_law(std::string& detail) {
  for (unsigned n = 3; n <= 8; ++n) {
    Configuration f = fermat_config(n);
    long members = 0;
    bool have_shift = false;
    unsigned shift = 0;
    for (unsigned r = 0; r < n; ++r)
      for (unsigned s = 0; s < n; ++s)
        for (unsigned t = 0; t < n; ++t) {
          if (!collinear(f.points[r], f.points[n + s], f.points[2 * n + t])) continue;
          ++members;
          unsigned c = (r + 2 * n - s - t) % n;  // r - s - t mod n
          if (!have_shift) {
            shift = c;
            have_shift = true;
          } else if (c != shift) {
            detail = "n=" + std::to_string(n) + ": collinear triples span two congruence classes";
            return false;
          }
        }
    if (members != static_cast<long>(n) * n) {
      detail = "n=" + std::to_string(n) + ": " + std::to_string(members) +
               " collinear triples, expected n^2";
      return false;
    }
    if (shift != 0) {
      detail = "n=" + std::to_string(n) + ": unexpected congruence constant";
      return false;
    }
  }
  detail = "n=3..8 exhaustive: collinear (a_r,b_s,c_t) = exactly the coset r == s+t (mod n)";
  return true;
}

// --- criterion 3: triple-count oracle equivalence ---------------------------

Configuration random_config(std::mt19937& rng, size_t target) {
  std::vector<ProjPoint> pts;
  auto coord = [&]() { return static_cast<long>(rng() % 9) - 4; };
  auto push = [&](const ProjPoint& p) {
    for (const auto& q : pts)
      if (q == p) return;
    pts.push_back(p);
  };
  while (pts.size() < 4) {
    long x = coord(), y = coord(), z = coord();
    if (x || y || z) push(ProjPoint(CycNum(x), CycNum(y), CycNum(z)));
  }
  while (pts.size() < target) {
    if (rng() % 3 == 0) {
      // force extra collinear triples: third point on the join of two others
      size_t i = rng() % pts.size(), j = rng() % pts.size();
      if (i == j) continue;
      long t = 1 + static_cast<long>(rng() % 3);
      ProjPoint p(pts[i][0] * CycNum(t) + pts[j][0], pts[i][1] * CycNum(t) + pts[j][1],
                  pts[i][2] * CycNum(t) + pts[j][2]);
      push(p);
    } else {
      long x = coord(), y = coord(), z = coord();
      if (x || y || z) push(ProjPoint(CycNum(x), CycNum(y), CycNum(z)));
    }
  }
  Configuration a;
  a.order = 1;
  a.points = std::move(pts);
  return a;
}

bool triple_count_equivalence(std::string& detail) {
  std::mt19937 rng(424243);
  for (int trial = 0; trial < kRandomConfigs; ++trial) {
    size_t size = 20 + rng() % (kMaxConfigSize - 20 + 1);
    Configuration a = random_config(rng, size);
    long fast = sg_check(a).triple_count;
    long naive = collinear_triples_naive(a);
    if (fast != naive) {
      detail = "random trial " + std::to_string(trial) + ": index " + std::to_string(fast) +
               " vs naive " + std::to_string(naive);
      return false;
    }
  }
  for (unsigned n = 3; n <= 10; ++n) {
    Configuration f = fermat_config(n);
    long fast = sg_check(f).triple_count;
    long naive = collinear_triples_naive(f);
    long closed = 3L * n * (n - 1) * (n - 2) + 6L * n * n;
    if (fast != naive || fast != closed) {
      detail = "F_" + std::to_string(n) + ": index " + std::to_string(fast) + ", naive " +
               std::to_string(naive) + ", closed form " + std::to_string(closed);
      return false;
    }
  }
  if (sg_check(fermat_config(3)).triple_count != 72) {
    detail = "F_3 triple count is not 72";
    return false;
  }
  detail = std::to_string(kRandomConfigs) + " random configurations (|A| <= " +
           std::to_string(kMaxConfigSize) + ") and F_3..F_10 agree; F_3 count 72";
  return true;
}

// --- criterion 4: group law on all seven cubic kinds ------------------------

struct KindSample {
  const char* name;
  Curve curve;
  std::vector<std::vector<ProjPoint>> components;  // sampled smooth points
};

KindSample three_lines_sample() {
  KindSample s{"three-nonconcurrent-lines", from_entries(3, {{1, 1, 1, 1}}), {}};
  std::vector<ProjPoint> l1, l2, l3;
  for (long u = 1; u <= kSamplesPerComponent; ++u) {
    l1.push_back(pt(0, u, 1));
    l2.push_back(pt(u, 0, 1));
    l3.push_back(pt(1, u, 0));
  }
  s.components = {l1, l2, l3};
  return s;
}

KindSample concurrent_sample() {
  // x y (x + y): all three lines through [0:0:1]
  KindSample s{"three-concurrent-lines",
               from_entries(3, {{2, 1, 0, 1}, {1, 2, 0, 1}}), {}};
  std::vector<ProjPoint> l1, l2, l3;
  for (long u = 1; u <= kSamplesPerComponent; ++u) {
    l1.push_back(pt(0, 1, u));
    l2.push_back(pt(1, 0, u));
    l3.push_back(ProjPoint(CycNum(1), CycNum(-1), CycNum(u)));
  }
  s.components = {l1, l2, l3};
  return s;
}

KindSample conic_2pt_sample() {
  // (x^2 - yz) x: the line meets the conic at [0:1:0] and [0:0:1]
  KindSample s{"conic-plus-line-2pt", from_entries(3, {{3, 0, 0, 1}, {1, 1, 1, -1}}), {}};
  std::vector<ProjPoint> conic, line;
  for (long t = 1; t <= kSamplesPerComponent; ++t) {
    conic.push_back(ProjPoint(CycNum(t), CycNum(t * t), CycNum(1)));
    line.push_back(pt(0, 1, t));
  }
  s.components = {conic, line};
  return s;
}

KindSample conic_1pt_sample() {
  // (x^2 - yz) z: the line z = 0 is tangent to the conic at [0:1:0]
  KindSample s{"conic-plus-line-1pt", from_entries(3, {{2, 0, 1, 1}, {0, 1, 2, -1}}), {}};
  std::vector<ProjPoint> conic, line;
  for (long t = 1; t <= kSamplesPerComponent; ++t) {
    conic.push_back(ProjPoint(CycNum(t), CycNum(t * t), CycNum(1)));
    line.push_back(pt(1, t, 0));
  }
  s.components = {conic, line};
  return s;
}

KindSample nodal_sample() {
  // y^2 z = x^3 + x^2 z, node at [0:0:1]; rational parameterization
  KindSample s{"nodal", from_entries(3, {{0, 2, 1, 1}, {3, 0, 0, -1}, {2, 0, 1, -1}}), {}};
  std::vector<ProjPoint> comp;
  for (long t = 2; comp.size() < kSamplesPerComponent; ++t)
    comp.push_back(ProjPoint(CycNum(t * t - 1), CycNum(t * (t * t - 1)), CycNum(1)));
  s.components = {comp};
  return s;
}

KindSample cuspidal_sample() {
  // y^2 z = x^3, cusp at [0:0:1]
  KindSample s{"cuspidal", from_entries(3, {{0, 2, 1, 1}, {3, 0, 0, -1}}), {}};
  std::vector<ProjPoint> comp;
  for (long t = 1; comp.size() < kSamplesPerComponent; ++t)
    comp.push_back(ProjPoint(CycNum(t * t), CycNum(t * t * t), CycNum(1)));
  s.components = {comp};
  return s;
}

KindSample smooth_sample() {
  // y^2 z = x^3 - 2 z^3 with the infinite-order point (3, 5)
  KindSample s{"smooth", from_entries(3, {{0, 2, 1, 1}, {3, 0, 0, -1}, {0, 0, 3, 2}}), {}};
  ProjPoint o = pt(0, 1, 0);
  ProjPoint g = pt(3, 5, 1);
  std::vector<ProjPoint> comp;
  ProjPoint acc = g;
  for (int k = 1; k <= kSamplesPerComponent / 2; ++k) {
    comp.push_back(acc);
    ProjPoint neg = chord_tangent_third(s.curve, o, acc);
    comp.push_back(neg);
    acc = chord_tangent_add(s.curve, o, acc, g);
  }
  s.components = {comp};
  return s;
}

bool group_law_all_kinds(std::string& detail) {
  std::vector<KindSample> kinds = {three_lines_sample(), concurrent_sample(),
                                   conic_2pt_sample(),   conic_1pt_sample(),
                                   nodal_sample(),       cuspidal_sample(),
                                   smooth_sample()};
  long checked = 0;
  for (const auto& ks : kinds) {
    // declare the component split when the cubic is reducible
    Curve cubic = ks.curve;
    if (ks.components.size() == 3) {
      auto l = [&](int i, int j, int k) { return from_entries(1, {{1, 0, 0, i}, {0, 1, 0, j}, {0, 0, 1, k}}); };
      if (std::string(ks.name) == "three-nonconcurrent-lines")
        cubic.set_components({{l(1, 0, 0), 1}, {l(0, 1, 0), 1}, {l(0, 0, 1), 1}});
      else
        cubic.set_components({{l(1, 0, 0), 1}, {l(0, 1, 0), 1}, {l(1, 1, 0), 1}});
    } else if (ks.components.size() == 2) {
      Curve conic = from_entries(2, {{2, 0, 0, 1}, {0, 1, 1, -1}});
      Curve line = std::string(ks.name) == "conic-plus-line-2pt"
                       ? from_entries(1, {{1, 0, 0, 1}})
                       : from_entries(1, {{0, 0, 1, 1}});
      cubic.set_components({{conic, 1}, {line, 1}});
    }
    GroupMap gm = GroupMap::build(cubic);

    // exhaustive balanced triples over the sampled points
    auto check = [&](const ProjPoint& p, const ProjPoint& q, const ProjPoint& r) -> bool {
      bool col = collinear(p, q, r);
      if (p == q || q == r || p == r) return true;  // balanced triples are distinct here
      bool grp = gm.group_sum_is_zero(p, q, r);
      ++checked;
      return col == grp;
    };
    bool ok = true;
    if (ks.components.size() == 3) {
      for (const auto& p : ks.components[0])
        for (const auto& q : ks.components[1])
          for (const auto& r : ks.components[2])
            ok = ok && check(p, q, r);
    } else if (ks.components.size() == 2) {
      const auto& conic = ks.components[0];
      const auto& line = ks.components[1];
      for (size_t i = 0; i < conic.size(); ++i)
        for (size_t j = i + 1; j < conic.size(); ++j)
          for (const auto& r : line) ok = ok && check(conic[i], conic[j], r);
    } else {
      const auto& c0 = ks.components[0];
      for (size_t i = 0; i < c0.size(); ++i)
        for (size_t j = i + 1; j < c0.size(); ++j)
          for (size_t k = j + 1; k < c0.size(); ++k) ok = ok && check(c0[i], c0[j], c0[k]);
    }
    if (!ok) {
      detail = std::string(ks.name) + ": group criterion disagrees with collinearity";
      return false;
    }
  }
  detail = "7 kinds, " + std::to_string(kSamplesPerComponent) + " points per component, " +
           std::to_string(checked) + " balanced triples, zero exceptions";
  return true;
}

// --- criterion 5: chord-tangent group axioms --------------------------------

struct SmoothSample {
  Curve curve;
  ProjPoint base;
  std::vector<ProjPoint> points;
};

SmoothSample weierstrass_sample() {
  // y^2 z = x^3 - x z^2 over Q(zeta_5): torsion plus the point
  // [-20 : 6 sqrt(5) : 25], sqrt(5) = zeta - zeta^2 - zeta^3 + zeta^4
  SmoothSample s{from_entries(3, {{0, 2, 1, 1}, {3, 0, 0, -1}, {1, 0, 2, 1}}), pt(0, 1, 0), {}};
  CycNum z = zeta(5);
  CycNum sqrt5 = z - z.pow(2) - z.pow(3) + z.pow(4);
  ProjPoint gen(CycNum(-20), CycNum(6) * sqrt5, CycNum(25));
  std::vector<ProjPoint> torsion = {s.base, pt(0, 0, 1), pt(1, 0, 1), pt(-1, 0, 1)};
  ProjPoint acc = gen;
  for (int k = 1; k <= 8; ++k) {
    for (const auto& t : torsion) s.points.push_back(chord_tangent_add(s.curve, s.base, acc, t));
    acc = chord_tangent_add(s.curve, s.base, acc, gen);
  }
  return s;
}

SmoothSample second_smooth_sample() {
  SmoothSample s{from_entries(3, {{0, 2, 1, 1}, {3, 0, 0, -1}, {0, 0, 3, 2}}), pt(0, 1, 0), {}};
  ProjPoint g = pt(3, 5, 1);
  ProjPoint acc = g;
  for (int k = 1; k <= 16; ++k) {
    s.points.push_back(acc);
    s.points.push_back(chord_tangent_third(s.curve, s.base, acc));
    acc = chord_tangent_add(s.curve, s.base, acc, g);
  }
  return s;
}

bool chord_tangent_axioms(std::string& detail) {
  std::mt19937 rng(515151);
  for (const SmoothSample& s : {weierstrass_sample(), second_smooth_sample()}) {
    for (const auto& p : s.points) {
      if (chord_tangent_add(s.curve, s.base, p, s.base) != p) {
        detail = "identity law fails";
        return false;
      }
      ProjPoint neg = chord_tangent_third(s.curve, s.base, p);
      if (chord_tangent_add(s.curve, s.base, p, neg) != s.base) {
        detail = "inverse law fails";
        return false;
      }
    }
    for (int trial = 0; trial < kAssocTriples; ++trial) {
      const ProjPoint& p = s.points[rng() % s.points.size()];
      const ProjPoint& q = s.points[rng() % s.points.size()];
      const ProjPoint& r = s.points[rng() % s.points.size()];
      ProjPoint left = chord_tangent_add(s.curve, s.base, chord_tangent_add(s.curve, s.base, p, q), r);
      ProjPoint right = chord_tangent_add(s.curve, s.base, p, chord_tangent_add(s.curve, s.base, q, r));
      if (left != right) {
        detail = "associativity fails at trial " + std::to_string(trial);
        return false;
      }
    }
  }
  detail = "identity/inverse on all sampled points; associativity on " +
           std::to_string(kAssocTriples) + " triples per curve, two smooth cubics, exact";
  return true;
}

// --- criterion 6: subgroup recovery under corruption ------------------------

bool subgroup_recovery(std::string& detail) {
  std::mt19937 rng(626262);
  for (int m = 4; m <= 24; ++m) {
    std::vector<int> ks = {0, 1, m / 10};
    for (int k : ks) {
      CycNum lambda = CycNum(2);
      ValueSet a;
      CycNum z = zeta(static_cast<unsigned>(m));
      for (int j = 0; j < m; ++j) a.insert(lambda * z.pow(j));
      // corrupt: drop K members, add K rational outsiders
      for (int i = 0; i < k; ++i) {
        auto it = a.begin();
        std::advance(it, rng() % a.size());
        a.erase(it);
        a.insert(CycNum(static_cast<long>(3 + i + m)));
      }
      auto cert = recover_subgroup(a, 24);
      if (!cert) {
        detail = "m=" + std::to_string(m) + " K=" + std::to_string(k) + ": no certificate";
        return false;
      }
      if (cert->sym_diff > kSymDiffFactor * k) {
        detail = "m=" + std::to_string(m) + " K=" + std::to_string(k) +
                 ": sym_diff=" + std::to_string(cert->sym_diff);
        return false;
      }
      if (k == 0 && (cert->m != m || cert->sym_diff != 0)) {
        detail = "m=" + std::to_string(m) + " K=0: recovered m=" + std::to_string(cert->m) +
                 " sym_diff=" + std::to_string(cert->sym_diff);
        return false;
      }
    }
  }
  detail = "m=4..24, K in {0,1,floor(m/10)}: sym_diff <= 7K throughout, exact at K=0";
  return true;
}

// --- criterion 7: end-to-end canonicalization -------------------------------

bool canonicalization_round_trip(std::string& detail) {
  std::mt19937 rng(737373);
  for (unsigned n : {3u, 5u, 7u}) {
    Configuration f = fermat_config(n);
    for (int trial = 0; trial < kTransformsPerN; ++trial) {
      ProjTransform t = ProjTransform::identity();
      while (true) {
        Mat3 m;
        for (auto& row : m)
          for (auto& e : row) e = CycNum(static_cast<long>(rng() % 9) - 4);
        try {
          t = ProjTransform(m);
          break;
        } catch (const Error&) {
          continue;  // singular draw, roll again
        }
      }
      Configuration moved = transform_config(f, t);
      StructureVerdict v = classify(moved);
      if (v.kind != VerdictKind::fermat_equivalent || v.m != n || !v.to_fermat) {
        detail = "n=" + std::to_string(n) + " trial " + std::to_string(trial) + ": verdict " +
                 verdict_kind_name(v.kind) + (v.reason.empty() ? "" : " (" + v.reason + ")");
        return false;
      }
      Configuration back = transform_config(moved, *v.to_fermat);
      if (!same_point_set(back.points, f.points)) {
        detail = "n=" + std::to_string(n) + " trial " + std::to_string(trial) +
                 ": returned transform does not reproduce the reference points";
        return false;
      }
    }
  }
  detail = "n in {3,5,7} x 10 random transforms: fermat-equivalent, correct m, bit-exact round trip";
  return true;
}

// --- criterion 8: concurrent-lines configurations admit ordinary lines ------

bool concurrent_lines_detection(std::string& detail) {
  std::mt19937 rng(848484);
  int built = 0;
  while (built < kConcurrentConfigs) {
    int m = 3 + built % 3;
    long coord = static_cast<long>(rng() % 7) - 3;
    ProjPoint v(CycNum(coord), CycNum(static_cast<long>(rng() % 7) - 3), CycNum(1));
    // m distinct lines through v
    std::vector<ProjLine> lines;
    while (static_cast<int>(lines.size()) < m) {
      ProjPoint q(CycNum(static_cast<long>(rng() % 11) - 5), CycNum(static_cast<long>(rng() % 11) - 5),
                  CycNum(1 + static_cast<long>(rng() % 3)));
      if (q == v) continue;
      ProjLine l = join(v, q);
      bool dup = false;
      for (const auto& l0 : lines) dup = dup || l0 == l;
      if (!dup) lines.push_back(l);
    }
    // populate: the first line is heavy with m points (> m-2), others get 1-2
    Configuration a;
    a.order = 1;
    auto add_on_line = [&](const ProjLine& l, int count) {
      auto [p0, p1] = line_point_basis(l);
      long t = 1;
      while (count > 0) {
        ProjPoint cand(p0[0] + p1[0] * CycNum(t), p0[1] + p1[1] * CycNum(t),
                       p0[2] + p1[2] * CycNum(t));
        ++t;
        if (cand == v) continue;
        bool dup = false;
        for (const auto& q : a.points) dup = dup || q == cand;
        if (dup) continue;
        a.points.push_back(cand);
        --count;
      }
    };
    add_on_line(lines[0], m);
    for (int i = 1; i < m; ++i) add_on_line(lines[i], 1 + static_cast<int>(rng() % 2));
    if (rng() % 2 == 0) a.points.push_back(v);

    auto found = concurrent_lines_check(a);
    if (!found) {
      detail = "configuration " + std::to_string(built) + " (m=" + std::to_string(m) +
               "): no ordinary line found";
      return false;
    }
    if (build_index(a).at(*found).size() != 2) {
      detail = "configuration " + std::to_string(built) + ": witness line is not ordinary";
      return false;
    }
    ++built;
  }
  detail = std::to_string(kConcurrentConfigs) +
           " pencil configurations (m in {3,4,5}, heavy line > m-2): ordinary line found in all";
  return true;
}

// --- criterion 9: deficient-line count is at most 9 -------------------------

bool tangent_count_bound(std::string& detail) {
  std::mt19937 rng(959595);
  std::vector<Curve> cubics = {
      from_entries(3, {{1, 1, 1, 1}}),                            // three lines
      from_entries(3, {{0, 2, 1, 1}, {3, 0, 0, -1}, {1, 0, 2, 1}}),  // smooth
      from_entries(3, {{3, 0, 0, 1}, {1, 1, 1, -1}}),             // conic plus line
  };
  long worst = 0;
  for (const auto& c : cubics) {
    int done = 0;
    while (done < kTangentPoints) {
      ProjPoint p(CycNum(static_cast<long>(rng() % 15) - 7), CycNum(static_cast<long>(rng() % 15) - 7),
                  CycNum(static_cast<long>(rng() % 15) - 7));
      bool zero = p[0].is_zero() && p[1].is_zero() && p[2].is_zero();
      if (zero || eval(c, p).is_zero()) continue;
      long count = tangent_count(c, p);
      worst = std::max(worst, count);
      if (count > kTangentBound) {
        detail = "count " + std::to_string(count) + " exceeds " + std::to_string(kTangentBound);
        return false;
      }
      ++done;
    }
  }
  detail = "3 cubics x " + std::to_string(kTangentPoints) +
           " off-curve points: deficient-line count <= 9 (max seen " + std::to_string(worst) + ")";
  return true;
}

// --- criterion 10: expansion measurements -----------------------------------

bool expansion_measurements(std::string& detail) {
  double norm_low = 1e300, norm_high = 0.0;
  for (int m = 6; m <= 18; ++m) {
    // A = H_m; the shift x+1 vanishes at -1, so even m measure on the
    // admissible subset H_m minus the zero of psi
    ValueSet a;
    CycNum z = zeta(static_cast<unsigned>(m));
    for (int j = 0; j < m; ++j) a.insert(z.pow(j));
    a.erase(CycNum(-1));
    MobiusMap shift(CycNum(1), CycNum(1), CycNum(0), CycNum(1));
    ExpansionReport rep = expansion_report(a, shift, ExpansionMode::two_pt);
    long grown = std::max(rep.size_a, rep.size_psi);
    if (grown <= m) {
      detail = "m=" + std::to_string(m) + ": max(|A:A|, |psi(A):psi(A)|) = " +
               std::to_string(grown) + " <= m";
      return false;
    }
    norm_low = std::min(norm_low, rep.normalized);
    norm_high = std::max(norm_high, rep.normalized);
  }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "m=6..18: max(|A:A|, |psi(A):psi(A)|) > m throughout; normalized size "
                "(exponent 1+1/40) spans %.3f..%.3f, reported only",
                norm_low, norm_high);
  detail = buf;
  return true;
}

struct Criterion {
  const char* name;
  std::function<bool(std::string&)> fn;
};

}  // namespace

int main() {
  std::vector<Criterion> table = {
      {"fermat-sg-property", fermat_sg_property},
      {"fermat-collinearity-law", fermat_collinearity_law},
      {"triple-count-oracle-equivalence", triple_count_equivalence},
      {"group-law-all-kinds", group_law_all_kinds},
      {"chord-tangent-axioms", chord_tangent_axioms},
      {"subgroup-recovery", subgroup_recovery},
      {"canonicalization-round-trip", canonicalization_round_trip},
      {"concurrent-lines-detection", concurrent_lines_detection},
      {"tangent-count-bound", tangent_count_bound},
      {"expansion-measurements", expansion_measurements},
  };
  int failures = 0;
  for (size_t i = 0; i < table.size(); ++i) {
    std::string detail;
    bool ok = false;
    try {
      ok = table[i].fn(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (!ok) ++failures;
    std::printf("[%s] %02zu %s: %s\n", ok ? "PASS" : "FAIL", i + 1, table[i].name,
                detail.c_str());
    std::fflush(stdout);
  }
  return failures;
}
