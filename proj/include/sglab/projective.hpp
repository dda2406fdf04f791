#pragma once

#include <array>
#include <string>
#include <string_view>

#include "sglab/cyclotomic.hpp"

namespace sglab {

// Point of the projective plane over the cyclotomic field tower.
// Coordinates are stored canonically: first nonzero coordinate equals 1,
// and all three entries share one cyclotomic order.  Equality is therefore
// plain coordinate equality.
class ProjPoint {
 public:
  ProjPoint(CycNum x, CycNum y, CycNum z);

  const std::array<CycNum, 3>& coords() const { return c_; }
  const CycNum& operator[](int i) const { return c_[static_cast<size_t>(i)]; }

  bool operator==(const ProjPoint& o) const;
  bool operator!=(const ProjPoint& o) const { return !(*this == o); }
  // Total order on canonical forms (for sorted containers / dedup).
  static int cmp(const ProjPoint& a, const ProjPoint& b);

 private:
  std::array<CycNum, 3> c_;
};

// Line a*x + b*y + c*z = 0, same canonical-scale convention as ProjPoint.
class ProjLine {
 public:
  ProjLine(CycNum a, CycNum b, CycNum c);

  const std::array<CycNum, 3>& coeffs() const { return c_; }
  const CycNum& operator[](int i) const { return c_[static_cast<size_t>(i)]; }

  bool contains(const ProjPoint& p) const;

  bool operator==(const ProjLine& o) const;
  bool operator!=(const ProjLine& o) const { return !(*this == o); }
  static int cmp(const ProjLine& a, const ProjLine& b);

 private:
  std::array<CycNum, 3> c_;
};

using Mat3 = std::array<std::array<CycNum, 3>, 3>;

CycNum det3(const Mat3& m);

// Exact determinant test; coincident points count as collinear.
bool collinear(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r);
bool concurrent(const ProjLine& a, const ProjLine& b, const ProjLine& c);

// Cross-product join/meet.  Equal arguments raise degenerate-join.
ProjLine join(const ProjPoint& p, const ProjPoint& q);
ProjPoint meet(const ProjLine& a, const ProjLine& b);

// Invertible 3x3 matrix acting on points by multiplication followed by
// canonicalization.  Lines move by the inverse transpose so that incidence
// is preserved.
class ProjTransform {
 public:
  explicit ProjTransform(Mat3 m);  // throws degenerate-frame if det = 0

  static ProjTransform identity();
  static ProjTransform diagonal(const CycNum& a, const CycNum& b, const CycNum& c);

  ProjPoint operator()(const ProjPoint& p) const;
  ProjLine map_line(const ProjLine& l) const;

  ProjTransform inverse() const;
  // Composition: (a * b)(p) = a(b(p)).
  ProjTransform operator*(const ProjTransform& o) const;

  const Mat3& matrix() const { return m_; }
  const CycNum& det() const { return det_; }

 private:
  ProjTransform(Mat3 m, CycNum d) : m_(std::move(m)), det_(std::move(d)) {}
  Mat3 m_;
  CycNum det_;
};

// The unique transform taking src_i to dst_i that also matches the two dual
// unit points (sum of the three canonical line covectors on each side).
// Concurrent triples raise degenerate-frame.
ProjTransform transform_mapping_lines(const std::array<ProjLine, 3>& src,
                                      const std::array<ProjLine, 3>& dst);

// Two distinct points spanning the line, chosen deterministically.
std::array<ProjPoint, 2> line_point_basis(const ProjLine& l);

// Text form "[<scalar> : <scalar> : <scalar>]" with cycfield scalar encoding.
std::string emit_point(const ProjPoint& p);
ProjPoint parse_point(std::string_view text);
std::string emit_line(const ProjLine& l);
ProjLine parse_line(std::string_view text);

}  // namespace sglab
