#pragma once

#include <map>
#include <string>
#include <vector>

#include "sglab/projective.hpp"

namespace sglab {

// Finite labeled point set over Q(zeta_N).  Loaders are expected to
// canonicalize and deduplicate before handing the set to the checkers.
struct Configuration {
  unsigned order = 1;
  std::vector<ProjPoint> points;
  std::vector<std::string> labels;  // empty, or one label per point
};

// Drops repeated canonical points in place (first occurrence wins) and
// returns how many were removed, so loaders can warn.
size_t dedup_points(Configuration& a);

// The 3n points a_j = [0 : -z^j : 1], b_j = [-z^j : 0 : 1], c_j = [1 : -z^j : 0]
// over Q(zeta_n), labeled a0..a{n-1}, b0.., c0...  Requires n >= 3.
Configuration fermat_config(unsigned n);

Configuration transform_config(const Configuration& a, const ProjTransform& t);

struct ProjLineLess {
  bool operator()(const ProjLine& a, const ProjLine& b) const {
    return ProjLine::cmp(a, b) < 0;
  }
};

// Canonical line -> sorted indices of incident points.  Every unordered pair
// of distinct points lands in exactly one entry; every list has length >= 2.
using LineIncidenceIndex = std::map<ProjLine, std::vector<size_t>, ProjLineLess>;

LineIncidenceIndex build_index(const Configuration& a);

struct SGReport {
  bool is_sg = false;
  std::vector<ProjLine> ordinary_lines;          // every line with exactly 2 points
  long triple_count = 0;                         // ordered proper collinear triples
  std::map<size_t, size_t> line_size_histogram;  // incidence-list length -> count
};

// is_sg holds iff the set is non-collinear and no line carries exactly two
// points.  |T| is summed per line as k(k-1)(k-2).
SGReport sg_check(const Configuration& a);

// Triple-loop oracle for |T|; kept separate from the per-line formula so the
// two routes can be compared.
long collinear_triples_naive(const Configuration& a);

// Ordered collinear triples (x, y, z) of pairwise distinct points with
// x in ai, y in aj, z in ak (index sets into a.points).  The fast route
// intersects each index line with the three sets; the naive route is the
// defining triple loop.
long triples_between(const Configuration& a, const LineIncidenceIndex& idx,
                     const std::vector<size_t>& ai, const std::vector<size_t>& aj,
                     const std::vector<size_t>& ak);
long triples_between_naive(const Configuration& a, const std::vector<size_t>& ai,
                           const std::vector<size_t>& aj, const std::vector<size_t>& ak);

}  // namespace sglab
