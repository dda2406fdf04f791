#include "sglab/config.hpp"

#include <algorithm>

#include "sglab/error.hpp"

namespace sglab {

namespace {

struct PointLess {
  bool operator()(const ProjPoint& a, const ProjPoint& b) const {
    return ProjPoint::cmp(a, b) < 0;
  }
};

}  // namespace

size_t dedup_points(Configuration& a) {
  std::map<ProjPoint, size_t, PointLess> seen;
  std::vector<ProjPoint> pts;
  std::vector<std::string> labels;
  const bool labeled = a.labels.size() == a.points.size();
  for (size_t i = 0; i < a.points.size(); ++i) {
    if (seen.emplace(a.points[i], i).second) {
      pts.push_back(a.points[i]);
      if (labeled) labels.push_back(a.labels[i]);
    }
  }
  size_t dropped = a.points.size() - pts.size();
  a.points = std::move(pts);
  a.labels = std::move(labels);
  return dropped;
}

Configuration fermat_config(unsigned n) {
  if (n < 3) fail(Errc::degenerate_input, "fermat_config needs n >= 3");
  CycNum z = zeta(n);
  Configuration a;
  a.order = n;
  auto push = [&](char cls, unsigned j, CycNum x, CycNum y, CycNum w) {
    a.points.emplace_back(std::move(x), std::move(y), std::move(w));
    a.labels.push_back(cls + std::to_string(j));
  };
  for (unsigned j = 0; j < n; ++j) push('a', j, CycNum(0), -z.pow(j), CycNum(1));
  for (unsigned j = 0; j < n; ++j) push('b', j, -z.pow(j), CycNum(0), CycNum(1));
  for (unsigned j = 0; j < n; ++j) push('c', j, CycNum(1), -z.pow(j), CycNum(0));
  return a;
}

Configuration transform_config(const Configuration& a, const ProjTransform& t) {
  Configuration out;
  out.order = a.order;
  out.labels = a.labels;
  out.points.reserve(a.points.size());
  for (const auto& p : a.points) out.points.push_back(t(p));
  return out;
}

LineIncidenceIndex build_index(const Configuration& a) {
  const auto& pts = a.points;
  if (pts.size() < 2) fail(Errc::degenerate_input, "index needs at least 2 points");
  LineIncidenceIndex idx;
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j) {
      if (pts[i] == pts[j])
        fail(Errc::degenerate_input, "duplicate point in configuration: " + emit_point(pts[i]));
      auto& list = idx[join(pts[i], pts[j])];
      list.push_back(i);
      list.push_back(j);
    }
  for (auto& [l, list] : idx) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return idx;
}

SGReport sg_check(const Configuration& a) {
  if (a.points.size() < 3) fail(Errc::degenerate_input, "sg_check needs at least 3 points");
  LineIncidenceIndex idx = build_index(a);
  SGReport rep;
  for (const auto& [l, list] : idx) {
    size_t k = list.size();
    ++rep.line_size_histogram[k];
    if (k == 2) rep.ordinary_lines.push_back(l);
    long lk = static_cast<long>(k);
    rep.triple_count += lk * (lk - 1) * (lk - 2);
  }
  bool all_collinear = idx.size() == 1;
  rep.is_sg = !all_collinear && rep.ordinary_lines.empty();
  return rep;
}

long collinear_triples_naive(const Configuration& a) {
  const auto& p = a.points;
  long count = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = 0; j < p.size(); ++j)
      for (size_t k = 0; k < p.size(); ++k) {
        if (i == j || j == k || i == k) continue;
        if (collinear(p[i], p[j], p[k])) ++count;
      }
  return count;
}

long triples_between(const Configuration& a, const LineIncidenceIndex& idx,
                     const std::vector<size_t>& ai, const std::vector<size_t>& aj,
                     const std::vector<size_t>& ak) {
  size_t n = a.points.size();
  std::vector<char> in_i(n, 0), in_j(n, 0), in_k(n, 0);
  auto mark = [&](const std::vector<size_t>& s, std::vector<char>& flag) {
    for (size_t idx_pt : s) {
      if (idx_pt >= n) fail(Errc::degenerate_input, "triples_between: index out of range");
      flag[idx_pt] = 1;
    }
  };
  mark(ai, in_i);
  mark(aj, in_j);
  mark(ak, in_k);
  long count = 0;
  for (const auto& [l, list] : idx) {
    // inclusion-exclusion over the coincidence pattern of (x, y, z)
    long ci = 0, cj = 0, ck = 0, cij = 0, cjk = 0, cik = 0, cijk = 0;
    for (size_t p : list) {
      ci += in_i[p];
      cj += in_j[p];
      ck += in_k[p];
      cij += in_i[p] & in_j[p];
      cjk += in_j[p] & in_k[p];
      cik += in_i[p] & in_k[p];
      cijk += in_i[p] & in_j[p] & in_k[p];
    }
    count += ci * cj * ck - cij * ck - cjk * ci - cik * cj + 2 * cijk;
  }
  return count;
}

long triples_between_naive(const Configuration& a, const std::vector<size_t>& ai,
                           const std::vector<size_t>& aj, const std::vector<size_t>& ak) {
  const auto& p = a.points;
  long count = 0;
  for (size_t x : ai)
    for (size_t y : aj)
      for (size_t z : ak) {
        if (x == y || y == z || x == z) continue;
        if (collinear(p[x], p[y], p[z])) ++count;
      }
  return count;
}

}  // namespace sglab
