#include "sglab/classify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sglab/error.hpp"
#include "sglab/poly.hpp"

namespace sglab {

namespace {

using UP = Poly<CycNum>;

struct PointLess {
  bool operator()(const ProjPoint& a, const ProjPoint& b) const {
    return ProjPoint::cmp(a, b) < 0;
  }
};

// m pencil lines through v cover the rest of the set; the hypothesis asks for
// one line with more than m-2 covered points (v itself never counted).
bool pencil_hypothesis(const Configuration& a, const ProjPoint& v) {
  std::map<ProjLine, long, ProjLineLess> groups;
  size_t covered = 0;
  for (const auto& p : a.points) {
    if (p == v) continue;
    ++groups[join(v, p)];
    ++covered;
  }
  if (covered < 2 || groups.size() < 2) return false;
  long m = static_cast<long>(groups.size());
  for (const auto& [l, k] : groups)
    if (k > m - 2) return true;
  return false;
}

std::optional<ProjLine> first_ordinary(const LineIncidenceIndex& idx) {
  for (const auto& [l, list] : idx)
    if (list.size() == 2) return l;
  return std::nullopt;
}

// Binary form of F(alpha p + beta q) in (alpha, beta); entry k holds the
// coefficient of alpha^(d-k) beta^k as a polynomial in the pencil parameter
// carried by q.
std::array<UP, 4> restrict_binary(const Curve& c, const ProjPoint& p, const std::array<UP, 3>& q) {
  std::array<UP, 4> out{};
  const auto& mons = monomial_list(3);
  for (size_t mi = 0; mi < mons.size(); ++mi) {
    const CycNum& coef = c.coeffs()[mi];
    if (coef.is_zero()) continue;
    std::vector<UP> acc{UP::constant(coef)};
    auto mul_linear = [&](const CycNum& pc, const UP& qc, int times) {
      for (int t = 0; t < times; ++t) {
        std::vector<UP> nxt(acc.size() + 1);
        for (size_t s = 0; s < acc.size(); ++s) {
          nxt[s] = nxt[s] + scale_poly(acc[s], pc);
          nxt[s + 1] = nxt[s + 1] + acc[s] * qc;
        }
        acc = std::move(nxt);
      }
    };
    mul_linear(p[0], q[0], mons[mi][0]);
    mul_linear(p[1], q[1], mons[mi][1]);
    mul_linear(p[2], q[2], mons[mi][2]);
    for (size_t s = 0; s < 4; ++s) out[s] = out[s] + acc[s];
  }
  return out;
}

// Discriminant of the binary cubic a A^3 + b A^2 B + c A B^2 + d B^3.
UP binary_cubic_disc(const std::array<UP, 4>& f) {
  const UP &a = f[0], &b = f[1], &c = f[2], &d = f[3];
  return scale_poly(a * b * c * d, CycNum(18)) - scale_poly(b * b * b * d, CycNum(4)) +
         b * b * c * c - scale_poly(a * c * c * c, CycNum(4)) -
         scale_poly(a * a * d * d, CycNum(27));
}

// Splits off every linear factor of the fitted curve that shows up as a
// configuration line, heaviest lines first.
ProjLine line_of_curve(const Curve& c) {
  return ProjLine(c.coeffs()[0], c.coeffs()[1], c.coeffs()[2]);
}

// Splits off linear factors that match heavy configuration lines.  The
// leftover factor is returned when one remains; a fully split curve yields
// an empty leftover.
std::pair<std::vector<ProjLine>, std::optional<Curve>> peel_lines(const Curve& curve,
                                                                  const LineIncidenceIndex& idx) {
  std::vector<std::pair<size_t, const ProjLine*>> cands;
  for (const auto& [l, list] : idx) cands.emplace_back(list.size(), &l);
  std::stable_sort(cands.begin(), cands.end(),
                   [](const auto& x, const auto& y) { return x.first > y.first; });
  std::optional<Curve> rest = curve;
  std::vector<ProjLine> lines;
  for (const auto& [cnt, lp] : cands) {
    while (rest) {
      if (rest->degree() == 1) {
        if (line_of_curve(*rest) == *lp) {
          lines.push_back(*lp);
          rest.reset();
        }
        break;
      }
      auto q = divide_by_line(*rest, *lp);
      if (!q) break;
      lines.push_back(*lp);
      rest = *q;
    }
    if (!rest) break;
  }
  return {std::move(lines), std::move(rest)};
}

bool same_point_set(const std::vector<ProjPoint>& a, const std::vector<ProjPoint>& b) {
  if (a.size() != b.size()) return false;
  std::vector<ProjPoint> x = a, y = b;
  PointLess less;
  std::sort(x.begin(), x.end(), less);
  std::sort(y.begin(), y.end(), less);
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i] != y[i]) return false;
  return true;
}

}  // namespace

const char* verdict_kind_name(VerdictKind k) {
  switch (k) {
    case VerdictKind::fermat_equivalent:
      return "fermat-equivalent";
    case VerdictKind::ordinary_line:
      return "ordinary-line";
    default:
      return "inconclusive";
  }
}

std::optional<ProjLine> concurrent_lines_check(const Configuration& a) {
  if (a.points.size() < 3) fail(Errc::degenerate_input, "concurrency check needs at least 3 points");
  LineIncidenceIndex idx = build_index(a);
  if (idx.size() == 1) fail(Errc::degenerate_input, "configuration is collinear");

  // candidate concurrency points: the set itself plus meets of index lines
  // (all pairs while the index is small, heavy pairs against all otherwise)
  std::vector<ProjPoint> cands;
  std::set<ProjPoint, PointLess> seen;
  auto add = [&](const ProjPoint& p) {
    if (seen.insert(p).second) cands.push_back(p);
  };
  for (const auto& p : a.points) add(p);
  std::vector<const ProjLine*> lines, heavy;
  for (const auto& [l, list] : idx) {
    lines.push_back(&l);
    if (list.size() >= 3) heavy.push_back(&l);
  }
  if (lines.size() <= 64) {
    for (size_t i = 0; i < lines.size(); ++i)
      for (size_t j = i + 1; j < lines.size(); ++j) add(meet(*lines[i], *lines[j]));
  } else {
    for (const ProjLine* h : heavy)
      for (const ProjLine* l : lines)
        if (h != l) add(meet(*h, *l));
  }

  for (const auto& v : cands) {
    if (!pencil_hypothesis(a, v)) continue;
    auto ord = first_ordinary(idx);
    if (!ord) fail(Errc::domain, "concurrency hypothesis holds but no ordinary line exists");
    return ord;
  }
  return std::nullopt;
}

long tangent_count(const Curve& c, const ProjPoint& p, const std::vector<ProjPoint>& sample) {
  if (c.degree() != 3) fail(Errc::kind_mismatch, "tangent_count needs a cubic");
  if (eval(c, p).is_zero()) fail(Errc::on_curve, "pencil center lies on the cubic");
  for (const auto& s : sample) {
    if (!eval(c, s).is_zero())
      fail(Errc::not_on_curve, "sample point off the cubic: " + emit_point(s));
    if (is_singular(c, s)) fail(Errc::domain, "sample point is singular: " + emit_point(s));
  }

  // basis line {x_k = 0} avoiding p; the pencil runs over q(u) = e_i + u e_j
  int k = 0;
  for (int t = 0; t < 3; ++t)
    if (!p[t].is_zero()) k = t;
  int i = (k + 1) % 3, j = (k + 2) % 3;
  std::array<UP, 3> qu{}, qinf{};
  qu[static_cast<size_t>(i)] = UP::constant(CycNum(1));
  qu[static_cast<size_t>(j)] = UP(std::vector<CycNum>{CycNum(0), CycNum(1)});
  qinf[static_cast<size_t>(j)] = UP::constant(CycNum(1));

  // F(p) != 0 keeps the restricted cubic at full degree, so a line is
  // deficient exactly when the discriminant vanishes
  UP d6 = binary_cubic_disc(restrict_binary(c, p, qu));
  UP dinf = binary_cubic_disc(restrict_binary(c, p, qinf));
  if (d6.is_zero()) fail(Errc::domain, "every line through the point meets the cubic deficiently");
  UP g = poly_gcd(d6, derivative(d6));
  long count = d6.deg() - g.deg();
  if (dinf.is_zero()) ++count;
  return count;
}

StructureVerdict classify(const Configuration& a, const ClassifierParams& prm) {
  if (prm.d < 2) fail(Errc::degenerate_input, "classifier needs d >= 2");
  if (!(prm.epsilon > 0 && prm.epsilon <= prm.delta && prm.delta < 1))
    fail(Errc::degenerate_input, "classifier needs 0 < epsilon <= delta < 1");
  const size_t n = a.points.size();
  Rational sig = prm.significance != 0 ? prm.significance : prm.delta / Rational(100 * prm.d);
  int max_m = prm.max_m > 0 ? prm.max_m : static_cast<int>(2 * n);

  StructureVerdict v;

  // stage 0: non-SG inputs settle immediately
  SGReport rep = sg_check(a);
  if (!rep.is_sg) {
    if (!rep.ordinary_lines.empty()) {
      v.kind = VerdictKind::ordinary_line;
      v.ordinary = rep.ordinary_lines.front();
    } else {
      v.reason = "configuration is collinear";
    }
    return v;
  }
  LineIncidenceIndex idx = build_index(a);

  try {
    // stage 1: exact curve fit through the whole set (full coverage clears
    // the (1 - epsilon) n bar by construction)
    v.stage = 1;
    std::optional<Curve> fit;
    for (int d = 1; d <= prm.d && !fit; ++d) fit = fit_curve(a.points, d);
    if (!fit) {
      v.reason = "no curve of degree <= " + std::to_string(prm.d) + " through the configuration";
      return v;
    }

    // stage 2: recover the component split from heavy configuration lines.
    // Small sets may lie on a whole pencil of cubics (|A| = 9 gives the
    // Hesse pencil), so a cover by three configuration lines pins down the
    // split-cubic member exactly and takes precedence over the fit.
    v.stage = 2;
    std::optional<Curve> cover;
    {
      size_t need = std::max<size_t>((n + 2) / 3, 2);
      std::vector<const ProjLine*> big;
      for (const auto& [l, list] : idx)
        if (list.size() >= need) big.push_back(&l);
      for (size_t i = 0; i < big.size() && !cover; ++i)
        for (size_t j = i + 1; j < big.size() && !cover; ++j)
          for (size_t k = j + 1; k < big.size() && !cover; ++k) {
            bool all = true;
            for (const auto& p : a.points)
              if (!big[i]->contains(p) && !big[j]->contains(p) && !big[k]->contains(p)) {
                all = false;
                break;
              }
            if (!all) continue;
            Curve l0 = line_curve(*big[i]), l1 = line_curve(*big[j]), l2 = line_curve(*big[k]);
            Curve prod = curve_product(curve_product(l0, l1), l2);
            prod.set_components({{l0, 1}, {l1, 1}, {l2, 1}});
            cover = std::move(prod);
          }
    }
    Curve cubic = *fit;
    if (cover) {
      cubic = *cover;
    } else {
      auto [lines, rest] = peel_lines(*fit, idx);
      std::vector<std::pair<Curve, int>> comps;
      for (const auto& l : lines) {
        Curve lc = line_curve(l);
        bool found = false;
        for (auto& [c0, m0] : comps)
          if (c0 == lc) {
            ++m0;
            found = true;
            break;
          }
        if (!found) comps.emplace_back(std::move(lc), 1);
      }
      if (rest) comps.emplace_back(*rest, 1);
      cubic.set_components(std::move(comps));
    }
    v.fitted = cubic;

    ComponentPartition part = assign_components(a.points, cubic);
    // a set point in the singular locus forces an ordinary line: every line
    // through a double point meets the cubic in at most one further point
    for (size_t ei : part.err) {
      for (size_t pj = 0; pj < n; ++pj) {
        if (pj == ei) continue;
        auto it = idx.find(join(a.points[ei], a.points[pj]));
        if (it != idx.end() && it->second.size() == 2) {
          v.kind = VerdictKind::ordinary_line;
          v.ordinary = it->first;
          return v;
        }
      }
      v.reason = "point " + emit_point(a.points[ei]) +
                 " lies in the singular locus yet no ordinary line passes through it";
      return v;
    }

    std::vector<size_t> comp_of_class;
    for (size_t ci = 0; ci < part.parts.size(); ++ci) {
      if (part.parts[ci].empty()) continue;
      if (Rational(static_cast<long>(part.parts[ci].size())) >=
          sig * Rational(static_cast<long>(n))) {
        v.classes.push_back(part.parts[ci]);
        comp_of_class.push_back(ci);
      }
    }
    if (v.classes.empty()) {
      v.reason = "no significant component class";
      return v;
    }

    // stage 3: concurrent significant lines hand off to the pencil checker
    v.stage = 3;
    bool all_lines = true;
    for (size_t ci : comp_of_class)
      if (cubic.components()[ci].first.degree() != 1) all_lines = false;
    if (all_lines && comp_of_class.size() >= 3) {
      std::array<ProjLine, 3> ls = {line_of_curve(cubic.components()[comp_of_class[0]].first),
                                    line_of_curve(cubic.components()[comp_of_class[1]].first),
                                    line_of_curve(cubic.components()[comp_of_class[2]].first)};
      if (concurrent(ls[0], ls[1], ls[2])) {
        auto ord = concurrent_lines_check(a);
        if (ord) {
          v.kind = VerdictKind::ordinary_line;
          v.ordinary = ord;
          return v;
        }
      }
    }

    // stage 4: group charts, grid statistics, coset recovery per class
    v.stage = 4;
    if (cubic.degree() != 3) {
      v.reason = "fitted curve has degree " + std::to_string(cubic.degree()) +
                 "; the group analysis needs a cubic";
      return v;
    }
    GroupMap gm = GroupMap::build(cubic);
    std::vector<std::vector<GroupElement>> elems(v.classes.size());
    for (size_t qi = 0; qi < v.classes.size(); ++qi)
      for (size_t pi : v.classes[qi]) elems[qi].push_back(gm.rho(a.points[pi]));
    bool mult = cubic_kind_multiplicative(gm.kind());
    for (size_t qi = 0; qi < v.classes.size(); ++qi) {
      if (gm.kind() != CubicKind::smooth)
        v.grids.push_back(grid_constant(elems[qi], Rational(1)).stats);
      if (!mult) {
        v.cosets.push_back(std::nullopt);
        continue;
      }
      ValueSet vals;
      for (const auto& e : elems[qi]) vals.insert(e.value);
      v.cosets.push_back(recover_subgroup(vals, max_m));
    }

    // stage 5: Fermat normalization for three non-concurrent lines
    v.stage = 5;
    if (gm.kind() == CubicKind::three_nonconcurrent_lines) {
      bool exact = v.classes.size() == 3 && v.cosets.size() == 3;
      for (const auto& cert : v.cosets)
        if (!cert || cert->sym_diff != 0) exact = false;
      if (!exact) {
        v.reason = "triangle cubic without exact coset certificates";
        return v;
      }
      unsigned m = static_cast<unsigned>(v.cosets[0]->m);
      if (v.cosets[1]->m != static_cast<int>(m) || v.cosets[2]->m != static_cast<int>(m)) {
        v.reason = "coset certificates disagree on the subgroup order";
        return v;
      }
      if (m < 3) {
        v.reason = "recovered subgroup is too small for a Fermat configuration";
        return v;
      }
      // lambda per component position (component i carries chart rho_{i+1})
      std::array<CycNum, 3> lam = {CycNum(1), CycNum(1), CycNum(1)};
      for (size_t qi = 0; qi < 3; ++qi) lam[comp_of_class[qi]] = v.cosets[qi]->lambda;
      CycNum prod = lam[0] * lam[1] * lam[2];
      auto ord = root_of_unity_order(prod);
      if (!ord || m % *ord != 0) {
        v.reason = "coset representatives do not multiply into the subgroup";
        return v;
      }
      // scale normal coordinates so the three chart cosets become the
      // canonical -H_m, H_m, -H_m of the reference configuration
      CycNum s1 = -((lam[0] * lam[1]).inv());
      CycNum s2 = lam[1].inv();
      ProjTransform total = ProjTransform::diagonal(CycNum(1), s1, s2) * gm.to_normal();
      Configuration img = transform_config(a, total);
      Configuration want = fermat_config(m);
      if (!same_point_set(img.points, want.points)) {
        v.reason = "normalized point set differs from the Fermat configuration";
        return v;
      }
      v.kind = VerdictKind::fermat_equivalent;
      v.to_fermat = total;
      v.m = m;
      return v;
    }

    // stage 6: tangent-line family search on the remaining kinds
    v.stage = 6;
    for (size_t pi = 0; pi < n; ++pi) {
      const ProjPoint& p = a.points[pi];
      if (is_singular(cubic, p)) continue;
      ProjLine t = tangent_line(cubic, p);
      long cnt = 0;
      for (const auto& q : a.points)
        if (t.contains(q)) ++cnt;
      if (cnt == 2) {
        v.kind = VerdictKind::ordinary_line;
        v.ordinary = t;
        return v;
      }
    }
    v.reason = std::string("tangent-line family of the ") + cubic_kind_name(gm.kind()) +
               " cubic contains no ordinary line";
    return v;
  } catch (const Error& e) {
    v.kind = VerdictKind::inconclusive;
    v.reason = e.what();
    return v;
  }
}

}  // namespace sglab
