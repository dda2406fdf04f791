#pragma once

#include <utility>
#include <vector>

#include "sglab/error.hpp"

namespace sglab {

// Univariate polynomial with coefficients in T, ascending powers, trailing
// zeros trimmed (zero polynomial = empty vector).  T needs is_zero(), ring
// arithmetic, and — for divmod/gcd only — inv().
template <typename T>
struct Poly {
  std::vector<T> c;

  Poly() = default;
  explicit Poly(std::vector<T> v) : c(std::move(v)) { trim(); }
  static Poly constant(T v) {
    Poly p;
    if (!v.is_zero()) p.c.push_back(std::move(v));
    return p;
  }

  int deg() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  void trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }
  const T& lead() const { return c.back(); }

  bool operator==(const Poly& o) const {
    if (c.size() != o.c.size()) return false;
    for (size_t i = 0; i < c.size(); ++i)
      if (!(c[i] == o.c[i])) return false;
    return true;
  }
  bool operator!=(const Poly& o) const { return !(*this == o); }
};

template <typename T>
struct RingOne {
  static T get() { return T(1); }
};
template <typename U>
struct RingOne<Poly<U>> {
  static Poly<U> get() { return Poly<U>::constant(RingOne<U>::get()); }
};

template <typename T>
Poly<T> operator+(const Poly<T>& a, const Poly<T>& b) {
  std::vector<T> r(std::max(a.c.size(), b.c.size()), T());
  for (size_t i = 0; i < a.c.size(); ++i) r[i] = a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r[i] = r[i] + b.c[i];
  return Poly<T>(std::move(r));
}

template <typename T>
Poly<T> operator-(const Poly<T>& a) {
  std::vector<T> r(a.c);
  for (auto& x : r) x = -x;
  return Poly<T>(std::move(r));
}

template <typename T>
Poly<T> operator-(const Poly<T>& a, const Poly<T>& b) {
  return a + (-b);
}

template <typename T>
Poly<T> operator*(const Poly<T>& a, const Poly<T>& b) {
  if (a.is_zero() || b.is_zero()) return Poly<T>();
  std::vector<T> r(a.c.size() + b.c.size() - 1, T());
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i].is_zero()) continue;
    for (size_t j = 0; j < b.c.size(); ++j) {
      if (b.c[j].is_zero()) continue;
      r[i + j] = r[i + j] + a.c[i] * b.c[j];
    }
  }
  return Poly<T>(std::move(r));
}

template <typename T>
Poly<T> scale_poly(const Poly<T>& a, const T& s) {
  if (s.is_zero()) return Poly<T>();
  std::vector<T> r(a.c);
  for (auto& x : r) x = x * s;
  return Poly<T>(std::move(r));
}

template <typename T>
Poly<T> derivative(const Poly<T>& a) {
  if (a.c.size() <= 1) return Poly<T>();
  std::vector<T> r(a.c.size() - 1, T());
  for (size_t i = 1; i < a.c.size(); ++i) r[i - 1] = a.c[i] * T(static_cast<long>(i));
  return Poly<T>(std::move(r));
}

template <typename T>
T eval_poly(const Poly<T>& a, const T& x) {
  T acc{};
  for (size_t i = a.c.size(); i-- > 0;) acc = acc * x + a.c[i];
  return acc;
}

// Exact division with remainder; T must be a field (lead().inv()).
template <typename T>
std::pair<Poly<T>, Poly<T>> divmod(const Poly<T>& a, const Poly<T>& b) {
  if (b.is_zero()) fail(Errc::division_by_zero, "polynomial division by zero");
  if (a.deg() < b.deg()) return {Poly<T>(), a};
  std::vector<T> rem(a.c);
  std::vector<T> quot(static_cast<size_t>(a.deg() - b.deg()) + 1, T());
  T linv = b.lead().inv();
  for (int k = a.deg() - b.deg(); k >= 0; --k) {
    T t = rem[static_cast<size_t>(k + b.deg())] * linv;
    if (t.is_zero()) continue;
    quot[static_cast<size_t>(k)] = t;
    for (int i = 0; i <= b.deg(); ++i)
      rem[static_cast<size_t>(k + i)] = rem[static_cast<size_t>(k + i)] - t * b.c[static_cast<size_t>(i)];
  }
  return {Poly<T>(std::move(quot)), Poly<T>(std::move(rem))};
}

// Monic gcd; gcd(0, a) = monic a, gcd(0, 0) = 0.
template <typename T>
Poly<T> poly_gcd(Poly<T> a, Poly<T> b) {
  while (!b.is_zero()) {
    Poly<T> r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) a = scale_poly(a, a.lead().inv());
  return a;
}

template <typename T>
T det_cofactor(const std::vector<std::vector<T>>& m) {
  size_t n = m.size();
  if (n == 0) return RingOne<T>::get();
  if (n == 1) return m[0][0];
  T acc{};
  for (size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<T>> minor(n - 1, std::vector<T>(n - 1, T()));
    for (size_t r = 1; r < n; ++r) {
      size_t cc = 0;
      for (size_t col = 0; col < n; ++col) {
        if (col == j) continue;
        minor[r - 1][cc++] = m[r][col];
      }
    }
    T term = m[0][j] * det_cofactor(minor);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

// Sylvester resultant; zero if either argument is the zero polynomial.
template <typename T>
T resultant(const Poly<T>& a, const Poly<T>& b) {
  if (a.is_zero() || b.is_zero()) return T{};
  int da = a.deg(), db = b.deg();
  if (da == 0 && db == 0) return RingOne<T>::get();
  size_t n = static_cast<size_t>(da + db);
  std::vector<std::vector<T>> m(n, std::vector<T>(n, T()));
  for (int r = 0; r < db; ++r)
    for (int i = 0; i <= da; ++i)
      m[static_cast<size_t>(r)][static_cast<size_t>(r + i)] = a.c[static_cast<size_t>(da - i)];
  for (int r = 0; r < da; ++r)
    for (int i = 0; i <= db; ++i)
      m[static_cast<size_t>(db + r)][static_cast<size_t>(r + i)] = b.c[static_cast<size_t>(db - i)];
  return det_cofactor(m);
}

}  // namespace sglab
