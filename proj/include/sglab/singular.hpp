#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sglab/curve.hpp"

namespace sglab {

// Exact singular-locus scan for curves expected to have at most one singular
// point (irreducible cubics).  `smooth` certifies the absence of singular
// points; `fail` means the scan could not decide (reducible input, several
// singular points, or a root living outside the reachable field tower).
enum class SingularOutcome { smooth, unique_singular, fail };

struct SingularScan {
  SingularOutcome outcome;
  std::optional<ProjPoint> point;
  std::string note;
};

SingularScan find_unique_singular_point(const Curve& c);

// Tangent cone at an isolated double point: two distinct lines (node) or one
// repeated line (cusp).  Throws chart-construction when the quadratic part
// does not split over the reachable field tower or the point is worse than a
// double point.
enum class ConeKind { node, cusp };

struct TangentCone {
  ConeKind kind;
  std::vector<ProjLine> lines;  // 2 for node (sorted), 1 for cusp
};

TangentCone tangent_cone(const Curve& c, const ProjPoint& s);

}  // namespace sglab
