#pragma once

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sglab/rational.hpp"

namespace sglab {

unsigned euler_phi(unsigned n);
std::vector<unsigned> divisors(unsigned n);

// Coefficients of the N-th cyclotomic polynomial, ascending degree, monic,
// length euler_phi(N) + 1. Computed once per order and cached.
const std::vector<mpz_class>& cyclotomic_poly(unsigned n);

// An element of Q(zeta_N). Coefficients are kept reduced modulo Phi_N, so
// the vector has exactly euler_phi(N) entries and equality at a fixed order
// is plain vector comparison. Values are immutable once constructed.
class CycNum {
 public:
  CycNum();  // zero at order 1
  CycNum(long v);
  CycNum(const Rational& r);
  // Reduces the given polynomial-in-zeta coefficients modulo Phi_N.
  CycNum(unsigned order, std::vector<Rational> coeffs);

  unsigned order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  Rational rational_value() const;  // pre: is_rational()

  // The same value viewed in Q(zeta_M); requires order() | M.
  CycNum promoted(unsigned m) const;

  CycNum operator-() const;
  CycNum operator+(const CycNum& b) const;
  CycNum operator-(const CycNum& b) const;
  CycNum operator*(const CycNum& b) const;
  CycNum operator/(const CycNum& b) const;
  CycNum inv() const;
  CycNum pow(long e) const;

  bool operator==(const CycNum& b) const;
  bool operator!=(const CycNum& b) const { return !(*this == b); }

  // Total order used for canonical sorting and map keys. Values of equal
  // order compare lexicographically; mixed orders compare after promotion
  // to the lcm.
  static int cmp(const CycNum& a, const CycNum& b);

  // Numeric rendering under zeta -> exp(2*pi*i*k/N); reports and the
  // square-root search only, never predicates.
  std::complex<double> to_complex(unsigned k = 1) const;

  // Promotion cap: binary operations refuse to promote past this order.
  static unsigned max_order();
  static void set_max_order(unsigned m);

 private:
  unsigned order_;
  std::vector<Rational> c_;
};

CycNum zeta(unsigned n);

// embed(a, M) maps zeta_N to zeta_M^(M/N); requires a.order() | M.
CycNum embed(const CycNum& a, unsigned m);

// Promotes both to the lcm of their orders (within the configured cap).
void promote_pair(CycNum& a, CycNum& b);
unsigned common_order(const std::vector<const CycNum*>& xs);

// Text encoding "N:[c0,c1,...]" with rationals as "p" or "p/q".
std::string emit_cyc(const CycNum& a);
CycNum parse_cyc(std::string_view text);

// Multiplicative order as a root of unity, if the value is one. Roots of
// unity inside Q(zeta_N) have order dividing N (2N for odd N).
std::optional<unsigned> root_of_unity_order(const CycNum& a);

// Exact square root inside a cyclotomic field when one can be found. The
// search may promote the order (at most doubling it); every candidate is
// verified exactly before being returned.
std::optional<CycNum> cyc_sqrt(const CycNum& a);

}  // namespace sglab
