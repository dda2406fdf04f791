#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sglab/curve.hpp"

namespace sglab {

// The seven uniformization classes of plane cubics.  Multiplicative group:
// triangle, transversal conic+line, nodal.  Additive group: concurrent
// lines, tangent conic+line, cuspidal.  Chord-tangent: smooth.
enum class CubicKind {
  three_nonconcurrent_lines,
  three_concurrent_lines,
  conic_plus_line_2pt,
  conic_plus_line_1pt,
  nodal,
  cuspidal,
  smooth,
};

const char* cubic_kind_name(CubicKind k);
bool cubic_kind_multiplicative(CubicKind k);
bool cubic_kind_additive(CubicKind k);

struct GroupElement {
  CubicKind kind;
  CycNum value;                    // scalar charts; unused for smooth cubics
  std::optional<ProjPoint> point;  // chord-tangent representative
  int component_index = 0;         // 1-based, matching the chart names rho_1, rho_2, ...
};

// Third intersection of the line through p and q (tangent when p = q) with
// the cubic, computed by exact division of the restricted cubic by its known
// roots.
ProjPoint chord_tangent_third(const Curve& c, const ProjPoint& p, const ProjPoint& q);
ProjPoint chord_tangent_add(const Curve& c, const ProjPoint& o, const ProjPoint& p,
                            const ProjPoint& q);
ProjPoint chord_tangent_neg(const Curve& c, const ProjPoint& o, const ProjPoint& p);
// True when the tangent at p meets the cubic with multiplicity three.
bool is_inflection(const Curve& c, const ProjPoint& p);

// Exact coordinate charts onto the group of each cubic kind: curves are
// moved to a fixed normal position per kind and the chart read off there.
// Collinearity of a balanced smooth triple is equivalent to the group
// criterion (product equals tau for multiplicative kinds, sum equals zero
// for additive ones, chord-tangent sum equals the base inflection when
// smooth).
class GroupMap {
 public:
  static GroupMap build(const Curve& c);
  static GroupMap build(const Curve& c, const ProjPoint& base);

  CubicKind kind() const { return kind_; }
  const Curve& cubic() const { return cubic_; }
  const std::vector<std::pair<Curve, int>>& components() const { return comps_; }
  const ProjTransform& to_normal() const { return to_normal_; }
  const CycNum& tau() const { return tau_; }
  const ProjPoint& identity_point() const;

  GroupElement rho(const ProjPoint& p) const;
  bool group_sum_is_zero(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r) const;
  std::string describe() const;

 private:
  GroupMap(CubicKind kind, Curve cubic, std::vector<std::pair<Curve, int>> comps,
           ProjTransform to_normal, CycNum tau)
      : kind_(kind),
        cubic_(std::move(cubic)),
        comps_(std::move(comps)),
        to_normal_(std::move(to_normal)),
        tau_(std::move(tau)) {}

  static GroupMap build_impl(const Curve& c, const ProjPoint* base);

  CubicKind kind_;
  Curve cubic_;
  std::vector<std::pair<Curve, int>> comps_;
  ProjTransform to_normal_;
  CycNum tau_;
  std::optional<ProjPoint> base_;
  int conic_comp_ = -1;
  int line_comp_ = -1;
};

}  // namespace sglab
