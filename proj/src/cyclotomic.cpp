#include "sglab/cyclotomic.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "sglab/error.hpp"

namespace sglab {

namespace {

std::atomic<unsigned> g_max_order{4096};

// --- small polynomial helpers over Rational, ascending coefficients ---

int poly_deg(const std::vector<Rational>& p) {
  for (size_t i = p.size(); i-- > 0;)
    if (p[i] != 0) return static_cast<int>(i);
  return -1;
}

void poly_trim(std::vector<Rational>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}


std::vector<Rational> poly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

// Division with remainder; divisor need not be monic. Both normalized.
void poly_divmod(std::vector<Rational> num, const std::vector<Rational>& den,
                 std::vector<Rational>& quot, std::vector<Rational>& rem) {
  int dd = poly_deg(den);
  if (dd < 0) fail(Errc::division_by_zero, "polynomial division by zero");
  poly_trim(num);
  quot.assign(num.size() > static_cast<size_t>(dd) ? num.size() - dd : 0, Rational(0));
  while (poly_deg(num) >= dd) {
    int dn = poly_deg(num);
    Rational c = num[dn] / den[dd];
    quot[dn - dd] = c;
    for (int i = 0; i <= dd; ++i) num[dn - dd + i] -= c * den[i];
    num[dn] = 0;  // kill rounding-free residue exactly
    poly_trim(num);
  }
  poly_trim(quot);
  rem = std::move(num);
}

struct PhiCache {
  std::mutex mu;
  std::map<unsigned, std::vector<mpz_class>> table;
};

PhiCache& phi_cache() {
  static PhiCache c;
  return c;
}

// Exact division of integer polynomials, ascending coefficients.
std::vector<mpz_class> zpoly_div(std::vector<mpz_class> num, const std::vector<mpz_class>& den) {
  size_t dd = den.size() - 1;
  size_t dn = num.size() - 1;
  std::vector<mpz_class> quot(dn - dd + 1);
  for (size_t k = dn - dd + 1; k-- > 0;) {
    mpz_class c = num[k + dd] / den[dd];
    quot[k] = c;
    for (size_t i = 0; i <= dd; ++i) num[k + i] -= c * den[i];
  }
  return quot;
}

std::vector<mpz_class> compute_phi(unsigned n);

// Map references are stable, so returning into the cache is safe; the
// computation itself runs without the lock held to keep recursion sane.
const std::vector<mpz_class>& phi_of(unsigned n) {
  auto& cache = phi_cache();
  {
    std::lock_guard<std::mutex> lock(cache.mu);
    auto it = cache.table.find(n);
    if (it != cache.table.end()) return it->second;
  }
  std::vector<mpz_class> value = compute_phi(n);
  std::lock_guard<std::mutex> lock(cache.mu);
  return cache.table.emplace(n, std::move(value)).first->second;
}

std::vector<mpz_class> compute_phi(unsigned n) {
  if (n == 1) return {mpz_class(-1), mpz_class(1)};  // x - 1
  std::vector<mpz_class> num(n + 1, mpz_class(0));   // x^n - 1
  num[0] = -1;
  num[n] = 1;
  for (unsigned d : divisors(n)) {
    if (d == n) continue;
    num = zpoly_div(std::move(num), phi_of(d));
  }
  return num;
}

// Reduce coefficients in place modulo Phi_N and resize to euler_phi(N).
void reduce_mod_phi(std::vector<Rational>& c, unsigned order) {
  unsigned ph = euler_phi(order);
  if (c.size() > ph) {
    const auto& phi = phi_of(order);  // monic, degree ph
    for (size_t i = c.size(); i-- > ph;) {
      if (c[i] == 0) continue;
      Rational t = c[i];
      c[i] = 0;
      for (unsigned j = 0; j < ph; ++j) c[i - ph + j] -= t * Rational(phi[j]);
    }
  }
  c.resize(ph, Rational(0));
}

unsigned lcm_u(unsigned a, unsigned b) {
  return static_cast<unsigned>(std::lcm<unsigned long, unsigned long>(a, b));
}

}  // namespace

unsigned euler_phi(unsigned n) {
  if (n == 0) fail(Errc::invalid_order, "euler_phi(0)");
  unsigned result = n;
  unsigned m = n;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<unsigned> divisors(unsigned n) {
  std::vector<unsigned> ds;
  for (unsigned i = 1; i * i <= n; ++i) {
    if (n % i == 0) {
      ds.push_back(i);
      if (i != n / i) ds.push_back(n / i);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

const std::vector<mpz_class>& cyclotomic_poly(unsigned n) {
  if (n == 0) fail(Errc::invalid_order, "cyclotomic_poly(0)");
  return phi_of(n);
}

CycNum::CycNum() : order_(1), c_{Rational(0)} {}

CycNum::CycNum(long v) : order_(1), c_{Rational(v)} {}

CycNum::CycNum(const Rational& r) : order_(1), c_{r} {}

CycNum::CycNum(unsigned order, std::vector<Rational> coeffs) : order_(order), c_(std::move(coeffs)) {
  if (order_ == 0) fail(Errc::invalid_order, "CycNum with order 0");
  reduce_mod_phi(c_, order_);
}

bool CycNum::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool CycNum::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rational CycNum::rational_value() const {
  if (!is_rational()) fail(Errc::domain, "rational_value of non-rational " + emit_cyc(*this));
  return c_[0];
}

CycNum CycNum::promoted(unsigned m) const {
  if (m == order_) return *this;
  if (m == 0 || m % order_ != 0)
    fail(Errc::order_mismatch,
         "cannot embed order " + std::to_string(order_) + " into " + std::to_string(m));
  unsigned step = m / order_;
  std::vector<Rational> out;
  out.resize((c_.size() - 1) * static_cast<size_t>(step) + 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) out[i * step] = c_[i];
  return CycNum(m, std::move(out));
}

unsigned CycNum::max_order() { return g_max_order.load(); }

void CycNum::set_max_order(unsigned m) {
  if (m == 0) fail(Errc::invalid_order, "max order 0");
  g_max_order.store(m);
}

void promote_pair(CycNum& a, CycNum& b) {
  if (a.order() == b.order()) return;
  unsigned l = static_cast<unsigned>(std::lcm<unsigned long, unsigned long>(a.order(), b.order()));
  if (l > CycNum::max_order())
    fail(Errc::order_mismatch, "promotion to order " + std::to_string(l) + " exceeds cap " +
                                   std::to_string(CycNum::max_order()));
  a = a.promoted(l);
  b = b.promoted(l);
}

unsigned common_order(const std::vector<const CycNum*>& xs) {
  unsigned l = 1;
  for (const CycNum* x : xs) {
    l = static_cast<unsigned>(std::lcm<unsigned long, unsigned long>(l, x->order()));
    if (l > CycNum::max_order())
      fail(Errc::order_mismatch, "promotion to order " + std::to_string(l) + " exceeds cap " +
                                     std::to_string(CycNum::max_order()));
  }
  return l;
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

CycNum CycNum::operator+(const CycNum& b) const {
  CycNum x = *this, y = b;
  promote_pair(x, y);
  for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
  return x;
}

CycNum CycNum::operator-(const CycNum& b) const {
  CycNum x = *this, y = b;
  promote_pair(x, y);
  for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] -= y.c_[i];
  return x;
}

CycNum CycNum::operator*(const CycNum& b) const {
  CycNum x = *this, y = b;
  promote_pair(x, y);
  std::vector<Rational> prod = poly_mul(x.c_, y.c_);
  return CycNum(x.order_, std::move(prod));
}

CycNum CycNum::inv() const {
  if (is_zero()) fail(Errc::division_by_zero, "inverse of zero");
  if (is_rational()) {
    CycNum r = *this;
    r.c_[0] = Rational(1) / r.c_[0];
    return r;
  }
  // Extended Euclid against Phi_N; Phi_N is irreducible over Q, so any
  // nonzero reduced value is coprime to it.
  const auto& phi_z = phi_of(order_);
  std::vector<Rational> r0(phi_z.size());
  for (size_t i = 0; i < phi_z.size(); ++i) r0[i] = Rational(phi_z[i]);
  std::vector<Rational> r1 = c_;
  poly_trim(r1);
  std::vector<Rational> t0{}, t1{Rational(1)};
  while (poly_deg(r1) > 0) {
    std::vector<Rational> q, rem;
    poly_divmod(r0, r1, q, rem);
    r0 = std::move(r1);
    r1 = std::move(rem);
    std::vector<Rational> t2 = poly_mul(q, t1);
    std::vector<Rational> tn = t0;
    if (tn.size() < t2.size()) tn.resize(t2.size(), Rational(0));
    for (size_t i = 0; i < t2.size(); ++i) tn[i] -= t2[i];
    poly_trim(tn);
    t0 = std::move(t1);
    t1 = std::move(tn);
  }
  if (poly_deg(r1) != 0) fail(Errc::domain, "inverse failed: shared factor with Phi_N");
  Rational lead = r1[0];
  for (auto& x : t1) x /= lead;
  return CycNum(order_, std::move(t1));
}

CycNum CycNum::operator/(const CycNum& b) const { return *this * b.inv(); }

CycNum CycNum::pow(long e) const {
  if (e == 0) return CycNum(1L).promoted(order_);
  CycNum base = e < 0 ? inv() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1 : static_cast<unsigned long>(e);
  CycNum acc = CycNum(1L).promoted(order_);
  while (k > 0) {
    if (k & 1) acc = acc * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return acc;
}

bool CycNum::operator==(const CycNum& b) const { return cmp(*this, b) == 0; }

int CycNum::cmp(const CycNum& a, const CycNum& b) {
  if (a.order_ == b.order_) {
    for (size_t i = 0; i < a.c_.size(); ++i) {
      int c = ::cmp(a.c_[i], b.c_[i]);
      if (c != 0) return c < 0 ? -1 : 1;
    }
    return 0;
  }
  CycNum x = a, y = b;
  promote_pair(x, y);
  return cmp(x, y);
}

std::complex<double> CycNum::to_complex(unsigned k) const {
  std::complex<double> acc(0.0, 0.0);
  const double tau = 6.283185307179586476925286766559;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    double arg = tau * static_cast<double>((static_cast<unsigned long long>(i) * k) % order_) /
                 static_cast<double>(order_);
    acc += c_[i].get_d() * std::complex<double>(std::cos(arg), std::sin(arg));
  }
  return acc;
}

CycNum zeta(unsigned n) {
  if (n == 0) fail(Errc::invalid_order, "zeta(0)");
  if (n == 1) return CycNum(1L);
  std::vector<Rational> c{Rational(0), Rational(1)};
  return CycNum(n, std::move(c));
}

CycNum embed(const CycNum& a, unsigned m) { return a.promoted(m); }

std::string emit_cyc(const CycNum& a) {
  std::ostringstream os;
  os << a.order() << ":[";
  const auto& c = a.coeffs();
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) os << ",";
    os << emit_rational(c[i]);
  }
  os << "]";
  return os.str();
}

CycNum parse_cyc(std::string_view text) {
  size_t colon = text.find(':');
  if (colon == std::string_view::npos) fail(Errc::parse_error, "scalar missing ':'");
  unsigned order = 0;
  {
    std::string head(text.substr(0, colon));
    if (head.empty()) fail(Errc::parse_error, "scalar missing order");
    for (char ch : head)
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        fail(Errc::parse_error, "bad scalar order: " + head);
    try {
      order = static_cast<unsigned>(std::stoul(head));
    } catch (const std::exception&) {
      fail(Errc::parse_error, "bad scalar order: " + head);
    }
  }
  if (order == 0) fail(Errc::invalid_order, "scalar with order 0");
  std::string_view rest = text.substr(colon + 1);
  if (rest.size() < 2 || rest.front() != '[' || rest.back() != ']')
    fail(Errc::parse_error, "scalar coefficients must be bracketed");
  std::string_view body = rest.substr(1, rest.size() - 2);
  std::vector<Rational> coeffs;
  size_t pos = 0;
  while (pos <= body.size()) {
    size_t comma = body.find(',', pos);
    std::string_view item =
        comma == std::string_view::npos ? body.substr(pos) : body.substr(pos, comma - pos);
    size_t a = item.find_first_not_of(" \t");
    size_t b = item.find_last_not_of(" \t");
    if (a == std::string_view::npos) fail(Errc::parse_error, "empty scalar coefficient");
    coeffs.push_back(parse_rational(item.substr(a, b - a + 1)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (coeffs.empty() || coeffs.size() > order)
    fail(Errc::parse_error, "scalar with " + std::to_string(coeffs.size()) + " coefficients at order " +
                                std::to_string(order));
  return CycNum(order, std::move(coeffs));
}

std::optional<unsigned> root_of_unity_order(const CycNum& a) {
  if (a.is_zero()) return std::nullopt;
  unsigned n = a.order();
  unsigned m0 = (n % 2 == 0) ? n : 2 * n;
  CycNum one = CycNum(1L).promoted(a.order());
  if (a.pow(m0) != one) return std::nullopt;
  for (unsigned d : divisors(m0))
    if (a.pow(d) == one) return d;
  return std::nullopt;
}

namespace {

bool rationalize(double x, long max_den, Rational& out) {
  // Continued-fraction reconstruction with an exactness window; callers
  // verify the final candidate exactly, so this only needs to be close.
  if (!std::isfinite(x)) return false;
  double target = x;
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int it = 0; it < 64; ++it) {
    double fl = std::floor(x);
    if (fl > 9e17 || fl < -9e17) return false;
    long a = static_cast<long>(fl);
    long p2 = a * p1 + p0;
    long q2 = a * q1 + q0;
    if (q2 > max_den || q2 < 0) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    double approx = static_cast<double>(p1) / static_cast<double>(q1);
    if (std::abs(approx - target) <= 1e-9 * std::max(1.0, std::abs(target))) {
      out = rat(p1, q1);
      return true;
    }
    double frac = x - fl;
    if (frac < 1e-14) break;
    x = 1.0 / frac;
  }
  if (q1 == 0) return false;
  out = rat(p1, q1);
  return std::abs(static_cast<double>(p1) / static_cast<double>(q1) - target) <=
         1e-7 * std::max(1.0, std::abs(target));
}

// Search for s in Q(zeta_order) with s*s == target, by reconstructing the
// coefficient vector from numeric embeddings and verifying exactly.
std::optional<CycNum> sqrt_numeric(const CycNum& target_in, unsigned order) {
  unsigned ph = euler_phi(order);
  if (ph > 20) return std::nullopt;
  CycNum target = target_in.promoted(order);
  std::vector<unsigned> units;
  for (unsigned k = 1; k < order; ++k)
    if (std::gcd(k, order) == 1) units.push_back(k);
  if (order == 1) units.push_back(1);

  // Conjugate pairing k <-> order-k keeps the sign search at 2^(ph/2).
  std::vector<unsigned> reps;
  std::vector<int> partner(units.size(), -1);
  std::map<unsigned, size_t> unit_index;
  for (size_t i = 0; i < units.size(); ++i) unit_index[units[i]] = i;
  std::vector<bool> seen(units.size(), false);
  for (size_t i = 0; i < units.size(); ++i) {
    if (seen[i]) continue;
    unsigned k = units[i];
    unsigned conj = (order - k % order) % order;
    seen[i] = true;
    reps.push_back(k);
    auto it = unit_index.find(conj);
    if (it != unit_index.end() && it->second != i) {
      partner[reps.size() - 1] = static_cast<int>(it->second);
      seen[it->second] = true;
    }
  }

  size_t n = units.size();
  // Embedding matrix A[r][i] = zeta^(i * k_r); invert once numerically.
  std::vector<std::vector<std::complex<double>>> aug(n,
                                                     std::vector<std::complex<double>>(2 * n));
  const double tau = 6.283185307179586476925286766559;
  for (size_t r = 0; r < n; ++r) {
    for (size_t i = 0; i < n; ++i) {
      double arg = tau * static_cast<double>((i * units[r]) % order) / order;
      aug[r][i] = std::complex<double>(std::cos(arg), std::sin(arg));
    }
    aug[r][n + r] = 1.0;
  }
  for (size_t col = 0; col < n; ++col) {
    size_t best = col;
    for (size_t r = col + 1; r < n; ++r)
      if (std::abs(aug[r][col]) > std::abs(aug[best][col])) best = r;
    if (std::abs(aug[best][col]) < 1e-12) return std::nullopt;
    std::swap(aug[col], aug[best]);
    std::complex<double> piv = aug[col][col];
    for (size_t j = 0; j < 2 * n; ++j) aug[col][j] /= piv;
    for (size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      std::complex<double> f = aug[r][col];
      if (std::abs(f) == 0.0) continue;
      for (size_t j = 0; j < 2 * n; ++j) aug[r][j] -= f * aug[col][j];
    }
  }

  std::vector<std::complex<double>> root(n);
  for (size_t r = 0; r < n; ++r) root[r] = std::sqrt(target.to_complex(units[r]));

  size_t sign_bits = reps.size();
  if (sign_bits > 16) return std::nullopt;
  std::vector<std::complex<double>> v(n);
  for (unsigned long long mask = 0; mask < (1ull << sign_bits); ++mask) {
    for (size_t ri = 0; ri < reps.size(); ++ri) {
      size_t idx = unit_index[reps[ri]];
      std::complex<double> val = ((mask >> ri) & 1) ? -root[idx] : root[idx];
      v[idx] = val;
      if (partner[ri] >= 0) v[static_cast<size_t>(partner[ri])] = std::conj(val);
    }
    std::vector<Rational> coeffs(n);
    bool ok = true;
    for (size_t i = 0; i < n && ok; ++i) {
      std::complex<double> s(0.0, 0.0);
      for (size_t r = 0; r < n; ++r) s += aug[i][n + r] * v[r];
      if (std::abs(s.imag()) > 1e-6 * std::max(1.0, std::abs(s.real()))) {
        ok = false;
        break;
      }
      ok = rationalize(s.real(), 100000000L, coeffs[i]);
    }
    if (!ok) continue;
    CycNum cand(order, coeffs);
    if (cand * cand == target) return cand;
  }
  return std::nullopt;
}

}  // namespace

std::optional<CycNum> cyc_sqrt(const CycNum& a) {
  if (a.is_zero()) return CycNum(0L);
  if (a.is_rational()) {
    Rational r = a.rational_value();
    Rational s;
    if (r > 0 && rational_sqrt(r, s)) return CycNum(s);
    if (r < 0 && rational_sqrt(-r, s)) {
      unsigned l = lcm_u(a.order(), 4);
      if (l <= CycNum::max_order()) return CycNum(s) * zeta(4).promoted(l);
    }
  }
  if (auto got = sqrt_numeric(a, a.order())) return got;
  unsigned twice = 2 * a.order();
  if (twice <= CycNum::max_order()) {
    if (auto got = sqrt_numeric(a, twice)) return got;
  }
  unsigned with_i = lcm_u(a.order(), 4);
  if (with_i != a.order() && with_i != twice && with_i <= CycNum::max_order()) {
    if (auto got = sqrt_numeric(a, with_i)) return got;
  }
  return std::nullopt;
}

}  // namespace sglab
