#include "sglab/addcomb.hpp"

#include <cmath>

#include "sglab/error.hpp"

namespace sglab {

ValueSet scalar_difference_set(const ValueSet& a, GroupModel model) {
  ValueSet out;
  for (const CycNum& x : a)
    for (const CycNum& y : a) {
      if (model == GroupModel::additive) {
        out.insert(x - y);
      } else {
        if (y.is_zero()) fail(Errc::domain, "ratio set over a set containing zero");
        out.insert(x / y);
      }
    }
  return out;
}

namespace {

GroupModel model_of(const std::vector<GroupElement>& q) {
  if (q.empty()) return GroupModel::additive;
  CubicKind kind = q.front().kind;
  for (const auto& e : q)
    if (e.kind != kind) fail(Errc::kind_mismatch, "elements come from different cubic kinds");
  if (kind == CubicKind::smooth)
    fail(Errc::kind_mismatch, "chord-tangent elements carry no scalar difference set");
  return cubic_kind_multiplicative(kind) ? GroupModel::multiplicative : GroupModel::additive;
}

}  // namespace

ValueSet difference_set(const std::vector<GroupElement>& q) {
  GroupModel model = model_of(q);
  ValueSet vals;
  for (const auto& e : q) vals.insert(e.value);
  return scalar_difference_set(vals, model);
}

GridVerdict grid_constant(const std::vector<GroupElement>& q, const Rational& c) {
  if (q.empty()) fail(Errc::degenerate_input, "grid verdict over an empty set");
  GroupModel model = model_of(q);
  ValueSet vals;
  for (const auto& e : q) vals.insert(e.value);
  ValueSet diff = scalar_difference_set(vals, model);
  GridVerdict v;
  v.stats.set_size = static_cast<int>(vals.size());
  v.stats.diff_or_ratio_size = static_cast<int>(diff.size());
  v.stats.doubling_constant =
      Rational(static_cast<long>(diff.size())) / Rational(static_cast<long>(vals.size()));
  v.stats.group_kind = model;
  v.is_grid = v.stats.doubling_constant <= c;
  return v;
}

std::optional<CosetCertificate> recover_subgroup(const ValueSet& a, int max_m) {
  if (a.empty()) fail(Errc::degenerate_input, "subgroup recovery over an empty set");
  if (max_m < 1) fail(Errc::degenerate_input, "subgroup recovery needs max_m >= 1");
  for (const CycNum& x : a)
    if (x.is_zero()) fail(Errc::domain, "zero has no finite multiplicative order");

  const std::vector<CycNum> av(a.begin(), a.end());
  const long n = static_cast<long>(av.size());
  const CycNum one(1);

  std::optional<CosetCertificate> best;
  auto better = [&](long sym, int m, const CycNum& lam) {
    if (!best) return true;
    if (sym != best->sym_diff) return sym < best->sym_diff;
    if (m != best->m) return m < best->m;
    bool lam_is_one = lam == one, best_is_one = best->lambda == one;
    if (lam_is_one != best_is_one) return lam_is_one;
    return CycNum::cmp(lam, best->lambda) < 0;
  };

  for (const CycNum& lam : av) {
    CycNum linv = lam.inv();
    // a is in lam*H_m exactly when a/lam is a root of unity of order dividing m
    std::vector<int> hits(static_cast<size_t>(max_m) + 1, 0);
    for (const CycNum& x : av) {
      auto ord = root_of_unity_order(x * linv);
      if (!ord.has_value()) continue;
      int d = static_cast<int>(*ord);
      if (d > max_m) continue;
      for (int m = d; m <= max_m; m += d) hits[static_cast<size_t>(m)]++;
    }
    for (int m = 1; m <= max_m; ++m) {
      long sym = n + m - 2 * hits[static_cast<size_t>(m)];
      if (better(sym, m, lam)) best = CosetCertificate{m, lam, sym};
    }
  }
  if (!best || best->sym_diff > n) return std::nullopt;
  return best;
}

MobiusMap::MobiusMap(CycNum a, CycNum b, CycNum c, CycNum d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if ((a_ * d_ - b_ * c_).is_zero())
    fail(Errc::degenerate_input, "mobius map needs ad - bc != 0");
}

std::optional<CycNum> MobiusMap::operator()(const CycNum& x) const {
  CycNum den = c_ * x + d_;
  if (den.is_zero()) return std::nullopt;
  return (a_ * x + b_) / den;
}

long mobius_incidences_naive(const ValuePairSet& pairs, const std::vector<MobiusMap>& maps) {
  long count = 0;
  for (const auto& m : maps)
    for (const auto& [x, y] : pairs) {
      auto v = m(x);
      if (v.has_value() && *v == y) ++count;
    }
  return count;
}

long mobius_incidences(const ValuePairSet& pairs, const std::vector<MobiusMap>& maps) {
  // evaluate each map once per distinct abscissa, then probe the pair set
  ValueSet xs;
  for (const auto& [x, y] : pairs) xs.insert(x);
  long count = 0;
  for (const auto& m : maps)
    for (const CycNum& x : xs) {
      auto v = m(x);
      if (v.has_value() && pairs.count({x, *v}) != 0) ++count;
    }
  return count;
}

const char* expansion_mode_name(ExpansionMode mode) {
  switch (mode) {
    case ExpansionMode::two_pt: return "two-pt";
    case ExpansionMode::one_pt: return "one-pt";
    case ExpansionMode::mixed: return "mixed";
  }
  return "unknown";
}

ExpansionReport expansion_report(const ValueSet& a, const MobiusMap& psi, ExpansionMode mode) {
  if (a.empty()) fail(Errc::degenerate_input, "expansion report over an empty set");
  ValueSet image;
  for (const CycNum& x : a) {
    if (x.is_zero()) fail(Errc::domain, "expansion set must avoid zero");
    auto v = psi(x);
    if (!v.has_value()) fail(Errc::domain, "expansion set hits a pole of psi");
    if (v->is_zero()) fail(Errc::domain, "expansion set hits a zero of psi");
    image.insert(*v);
  }
  ExpansionReport r;
  r.mode = mode;
  r.set_size = static_cast<int>(a.size());
  GroupModel first =
      mode == ExpansionMode::two_pt ? GroupModel::multiplicative : GroupModel::additive;
  GroupModel second =
      mode == ExpansionMode::one_pt ? GroupModel::additive : GroupModel::multiplicative;
  r.size_a = static_cast<long>(scalar_difference_set(a, first).size());
  r.size_psi = static_cast<long>(scalar_difference_set(image, second).size());
  r.max_size = std::max(r.size_a, r.size_psi);
  r.normalized = static_cast<double>(r.max_size) /
                 std::pow(static_cast<double>(r.set_size), 1.0 + 1.0 / 40.0);
  return r;
}

}  // namespace sglab
