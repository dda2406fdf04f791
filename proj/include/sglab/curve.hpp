#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sglab/projective.hpp"

namespace sglab {

// Dense homogeneous polynomials of degree d use a fixed monomial order:
// exponent triples (i,j,k), i+j+k = d, sorted by i descending then j
// descending.  Index 0 is always x^d, the last index is z^d.
int monomial_count(int d);
const std::vector<std::array<int, 3>>& monomial_list(int d);
size_t monomial_index(int d, int i, int j, int k);

CycNum eval_raw(int d, const std::vector<CycNum>& coeffs, const std::array<CycNum, 3>& v);

// Plane curve of degree d: nonzero dense coefficient vector, stored with the
// same canonical scale as points (first nonzero coefficient = 1, one shared
// cyclotomic order).  An optional component list records a factorization
// (component, multiplicity); the scaled product must reproduce the curve.
class Curve {
 public:
  Curve(int degree, std::vector<CycNum> coeffs);

  int degree() const { return d_; }
  const std::vector<CycNum>& coeffs() const { return c_; }
  const CycNum& coeff(int i, int j, int k) const { return c_[monomial_index(d_, i, j, k)]; }

  bool operator==(const Curve& o) const;
  bool operator!=(const Curve& o) const { return !(*this == o); }

  bool has_components() const { return !comps_.empty(); }
  const std::vector<std::pair<Curve, int>>& components() const { return comps_; }
  void set_components(std::vector<std::pair<Curve, int>> comps);

 private:
  int d_;
  std::vector<CycNum> c_;
  std::vector<std::pair<Curve, int>> comps_;
};

CycNum eval(const Curve& c, const ProjPoint& p);
std::array<CycNum, 3> gradient(const Curve& c, const ProjPoint& p);
// Throws not-on-curve when eval(c, p) != 0.
bool is_singular(const Curve& c, const ProjPoint& p);
// Gradient covector at a smooth point of the curve.
ProjLine tangent_line(const Curve& c, const ProjPoint& p);

Curve line_curve(const ProjLine& l);
Curve curve_product(const Curve& a, const Curve& b);
// Image of the curve under the point map t (components transform memberwise).
Curve transform_curve(const Curve& c, const ProjTransform& t);
// Quotient when the linear form divides the curve exactly, otherwise nullopt.
std::optional<Curve> divide_by_line(const Curve& c, const ProjLine& l);

// Exact nullspace of the points-by-monomials evaluation matrix.  When it is
// nonzero, returns the reduced-row-echelon solution with the first free
// column set to 1 and later free columns set to 0.
std::optional<Curve> fit_curve(const std::vector<ProjPoint>& points, int d);

// parts[i] collects indices of points lying smoothly on exactly component i;
// err collects points off the curve or in its singular locus.
struct ComponentPartition {
  std::vector<std::vector<size_t>> parts;
  std::vector<size_t> err;
};
ComponentPartition assign_components(const std::vector<ProjPoint>& pts, const Curve& c);

// One "i,j,k: <scalar>" line per nonzero coefficient, in storage order.
std::vector<std::string> emit_curve_entries(const Curve& c);
Curve parse_curve_entries(const std::vector<std::string>& lines);

}  // namespace sglab
