#include "sglab/curve.hpp"

#include <map>
#include <mutex>

#include "sglab/error.hpp"

namespace sglab {

namespace {

std::vector<CycNum> canonical_coeffs(std::vector<CycNum> c, const char* what) {
  size_t lead = c.size();
  for (size_t i = 0; i < c.size(); ++i) {
    if (!c[i].is_zero()) { lead = i; break; }
  }
  if (lead == c.size()) fail(Errc::degenerate_input, std::string(what) + ": zero polynomial");
  CycNum s = c[lead].inv();
  std::vector<const CycNum*> ptrs;
  for (auto& v : c) {
    v = v * s;
    ptrs.push_back(&v);
  }
  unsigned m = common_order(ptrs);
  for (auto& v : c) v = embed(v, m);
  return c;
}

// x^e with e >= 0 (canonical representatives make exponent 0 on a zero base
// possible: 0^0 = 1).
CycNum power_of(const CycNum& x, int e) {
  if (e == 0) return CycNum(1);
  if (x.is_zero()) return CycNum(0);
  return x.pow(e);
}

std::vector<CycNum> mul_dense(int da, const std::vector<CycNum>& a, int db,
                              const std::vector<CycNum>& b) {
  int d = da + db;
  std::vector<CycNum> out(static_cast<size_t>(monomial_count(d)));
  const auto& la = monomial_list(da);
  const auto& lb = monomial_list(db);
  for (size_t ia = 0; ia < a.size(); ++ia) {
    if (a[ia].is_zero()) continue;
    for (size_t ib = 0; ib < b.size(); ++ib) {
      if (b[ib].is_zero()) continue;
      size_t idx = monomial_index(d, la[ia][0] + lb[ib][0], la[ia][1] + lb[ib][1],
                                  la[ia][2] + lb[ib][2]);
      out[idx] = out[idx] + a[ia] * b[ib];
    }
  }
  return out;
}

}  // namespace

int monomial_count(int d) { return (d + 1) * (d + 2) / 2; }

const std::vector<std::array<int, 3>>& monomial_list(int d) {
  static std::mutex mu;
  static std::map<int, std::vector<std::array<int, 3>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  std::vector<std::array<int, 3>> lst;
  for (int i = d; i >= 0; --i)
    for (int j = d - i; j >= 0; --j) lst.push_back({i, j, d - i - j});
  return cache.emplace(d, std::move(lst)).first->second;
}

size_t monomial_index(int d, int i, int j, int k) {
  if (i < 0 || j < 0 || k < 0 || i + j + k != d)
    fail(Errc::domain, "monomial exponents do not match the degree");
  int off = (d - i) * (d - i + 1) / 2;
  return static_cast<size_t>(off + (d - i - j));
}

CycNum eval_raw(int d, const std::vector<CycNum>& coeffs, const std::array<CycNum, 3>& v) {
  const auto& lst = monomial_list(d);
  CycNum acc(0);
  for (size_t idx = 0; idx < coeffs.size(); ++idx) {
    if (coeffs[idx].is_zero()) continue;
    acc = acc + coeffs[idx] * power_of(v[0], lst[idx][0]) * power_of(v[1], lst[idx][1]) *
                    power_of(v[2], lst[idx][2]);
  }
  return acc;
}

Curve::Curve(int degree, std::vector<CycNum> coeffs) : d_(degree) {
  if (degree < 1) fail(Errc::domain, "curve degree must be at least 1");
  if (coeffs.size() != static_cast<size_t>(monomial_count(degree)))
    fail(Errc::domain, "coefficient vector has wrong length for the degree");
  c_ = canonical_coeffs(std::move(coeffs), "curve");
}

bool Curve::operator==(const Curve& o) const {
  if (d_ != o.d_) return false;
  for (size_t i = 0; i < c_.size(); ++i)
    if (!(c_[i] == o.c_[i])) return false;
  return true;
}

void Curve::set_components(std::vector<std::pair<Curve, int>> comps) {
  if (comps.empty()) fail(Errc::domain, "empty component list");
  int total = 0;
  for (const auto& [comp, mult] : comps) {
    if (mult < 1) fail(Errc::domain, "component multiplicity must be positive");
    total += comp.degree() * mult;
  }
  if (total != d_) fail(Errc::domain, "component degrees do not sum to the curve degree");
  std::vector<CycNum> prod{CycNum(1)};
  int pd = 0;
  for (const auto& [comp, mult] : comps) {
    for (int t = 0; t < mult; ++t) {
      prod = mul_dense(pd, prod, comp.degree(), comp.coeffs());
      pd += comp.degree();
    }
  }
  if (!(Curve(pd, std::move(prod)) == *this))
    fail(Errc::domain, "component product does not reproduce the curve");
  comps_ = std::move(comps);
}

CycNum eval(const Curve& c, const ProjPoint& p) { return eval_raw(c.degree(), c.coeffs(), p.coords()); }

std::array<CycNum, 3> gradient(const Curve& c, const ProjPoint& p) {
  const auto& lst = monomial_list(c.degree());
  const auto& cs = c.coeffs();
  std::array<CycNum, 3> g{CycNum(0), CycNum(0), CycNum(0)};
  for (size_t idx = 0; idx < cs.size(); ++idx) {
    if (cs[idx].is_zero()) continue;
    int e[3] = {lst[idx][0], lst[idx][1], lst[idx][2]};
    for (int v = 0; v < 3; ++v) {
      if (e[v] == 0) continue;
      CycNum term = cs[idx] * CycNum(e[v]);
      for (int w = 0; w < 3; ++w)
        term = term * power_of(p[w], w == v ? e[w] - 1 : e[w]);
      g[static_cast<size_t>(v)] = g[static_cast<size_t>(v)] + term;
    }
  }
  return g;
}

bool is_singular(const Curve& c, const ProjPoint& p) {
  if (!eval(c, p).is_zero()) fail(Errc::not_on_curve, "singularity test off the curve");
  auto g = gradient(c, p);
  return g[0].is_zero() && g[1].is_zero() && g[2].is_zero();
}

ProjLine tangent_line(const Curve& c, const ProjPoint& p) {
  if (!eval(c, p).is_zero()) fail(Errc::not_on_curve, "tangent line off the curve");
  auto g = gradient(c, p);
  if (g[0].is_zero() && g[1].is_zero() && g[2].is_zero())
    fail(Errc::degenerate_input, "tangent line at a singular point");
  return ProjLine(std::move(g[0]), std::move(g[1]), std::move(g[2]));
}

Curve line_curve(const ProjLine& l) {
  return Curve(1, {l[0], l[1], l[2]});
}

Curve curve_product(const Curve& a, const Curve& b) {
  return Curve(a.degree() + b.degree(),
               mul_dense(a.degree(), a.coeffs(), b.degree(), b.coeffs()));
}

Curve transform_curve(const Curve& c, const ProjTransform& t) {
  // G = F composed with the inverse point map, so that G(t(p)) = F(p).
  const ProjTransform tinv = t.inverse();
  const Mat3& inv = tinv.matrix();
  std::vector<std::vector<CycNum>> lin(3);
  for (size_t w = 0; w < 3; ++w) lin[w] = {inv[w][0], inv[w][1], inv[w][2]};
  int d = c.degree();
  const auto& lst = monomial_list(d);
  std::vector<CycNum> acc(static_cast<size_t>(monomial_count(d)));
  for (size_t idx = 0; idx < c.coeffs().size(); ++idx) {
    if (c.coeffs()[idx].is_zero()) continue;
    std::vector<CycNum> term{c.coeffs()[idx]};
    int td = 0;
    for (int w = 0; w < 3; ++w)
      for (int e = 0; e < lst[idx][static_cast<size_t>(w)]; ++e) {
        term = mul_dense(td, term, 1, lin[static_cast<size_t>(w)]);
        ++td;
      }
    for (size_t i = 0; i < acc.size(); ++i) acc[i] = acc[i] + term[i];
  }
  Curve out(d, std::move(acc));
  if (c.has_components()) {
    std::vector<std::pair<Curve, int>> comps;
    for (const auto& [comp, mult] : c.components())
      comps.emplace_back(transform_curve(comp, t), mult);
    out.set_components(std::move(comps));
  }
  return out;
}

std::optional<Curve> divide_by_line(const Curve& c, const ProjLine& l) {
  if (c.degree() < 2) fail(Errc::domain, "line quotient would be a constant");
  int var = 0;
  while (l[var].is_zero()) ++var;
  // Synthetic division by the linear form, eliminating the chosen variable
  // from the highest exponent down.
  int d = c.degree();
  CycNum ainv = l[var].inv();
  std::vector<CycNum> rem = c.coeffs();
  std::vector<CycNum> quot(static_cast<size_t>(monomial_count(d - 1)));
  const auto& lst = monomial_list(d);
  // Kill the chosen variable level by level from the top so every cascade
  // lands on a still-unprocessed level.
  std::vector<size_t> order;
  for (int n = d; n >= 1; --n)
    for (size_t idx = 0; idx < lst.size(); ++idx)
      if (lst[idx][var] == n) order.push_back(idx);
  for (size_t idx : order) {
    int e[3] = {lst[idx][0], lst[idx][1], lst[idx][2]};
    CycNum t = rem[idx] * ainv;
    if (t.is_zero()) continue;
    int q[3] = {e[0], e[1], e[2]};
    q[var] -= 1;
    quot[monomial_index(d - 1, q[0], q[1], q[2])] = t;
    rem[idx] = CycNum(0);
    for (int w = 0; w < 3; ++w) {
      if (w == var || l[w].is_zero()) continue;
      int r[3] = {q[0], q[1], q[2]};
      r[w] += 1;
      size_t ridx = monomial_index(d, r[0], r[1], r[2]);
      rem[ridx] = rem[ridx] - t * l[w];
    }
  }
  for (const auto& v : rem)
    if (!v.is_zero()) return std::nullopt;
  return Curve(d - 1, std::move(quot));
}

std::optional<Curve> fit_curve(const std::vector<ProjPoint>& points, int d) {
  if (d < 1) fail(Errc::domain, "curve degree must be at least 1");
  const auto& lst = monomial_list(d);
  size_t m = lst.size();
  std::vector<std::vector<CycNum>> rows;
  rows.reserve(points.size());
  for (const auto& p : points) {
    std::vector<CycNum> row;
    row.reserve(m);
    for (const auto& e : lst)
      row.push_back(power_of(p[0], e[0]) * power_of(p[1], e[1]) * power_of(p[2], e[2]));
    rows.push_back(std::move(row));
  }
  // Reduced row echelon form with the fixed monomial column order.
  std::vector<size_t> pivot_row_of_col(m, SIZE_MAX);
  size_t next_row = 0;
  for (size_t col = 0; col < m && next_row < rows.size(); ++col) {
    size_t sel = SIZE_MAX;
    for (size_t r = next_row; r < rows.size(); ++r) {
      if (!rows[r][col].is_zero()) { sel = r; break; }
    }
    if (sel == SIZE_MAX) continue;
    std::swap(rows[next_row], rows[sel]);
    CycNum inv = rows[next_row][col].inv();
    for (size_t j = col; j < m; ++j) rows[next_row][j] = rows[next_row][j] * inv;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == next_row || rows[r][col].is_zero()) continue;
      CycNum f = rows[r][col];
      for (size_t j = col; j < m; ++j) rows[r][j] = rows[r][j] - f * rows[next_row][j];
    }
    pivot_row_of_col[col] = next_row;
    ++next_row;
  }
  size_t free_col = SIZE_MAX;
  for (size_t col = 0; col < m; ++col) {
    if (pivot_row_of_col[col] == SIZE_MAX) { free_col = col; break; }
  }
  if (free_col == SIZE_MAX) return std::nullopt;
  std::vector<CycNum> sol(m, CycNum(0));
  sol[free_col] = CycNum(1);
  for (size_t col = 0; col < m; ++col) {
    size_t pr = pivot_row_of_col[col];
    if (pr != SIZE_MAX) sol[col] = -rows[pr][free_col];
  }
  return Curve(d, std::move(sol));
}

ComponentPartition assign_components(const std::vector<ProjPoint>& pts, const Curve& c) {
  if (!c.has_components()) fail(Errc::domain, "curve carries no component list");
  ComponentPartition out;
  out.parts.resize(c.components().size());
  for (size_t i = 0; i < pts.size(); ++i) {
    const ProjPoint& p = pts[i];
    if (!eval(c, p).is_zero() || is_singular(c, p)) {
      out.err.push_back(i);
      continue;
    }
    size_t hit = SIZE_MAX;
    size_t nhits = 0;
    for (size_t j = 0; j < c.components().size(); ++j) {
      if (eval(c.components()[j].first, p).is_zero()) {
        hit = j;
        ++nhits;
      }
    }
    if (nhits == 1)
      out.parts[hit].push_back(i);
    else
      out.err.push_back(i);
  }
  return out;
}

std::vector<std::string> emit_curve_entries(const Curve& c) {
  const auto& lst = monomial_list(c.degree());
  std::vector<std::string> out;
  for (size_t idx = 0; idx < c.coeffs().size(); ++idx) {
    if (c.coeffs()[idx].is_zero()) continue;
    out.push_back(std::to_string(lst[idx][0]) + "," + std::to_string(lst[idx][1]) + "," +
                  std::to_string(lst[idx][2]) + ": " + emit_cyc(c.coeffs()[idx]));
  }
  return out;
}

Curve parse_curve_entries(const std::vector<std::string>& lines) {
  if (lines.empty()) fail(Errc::parse_error, "curve: no monomial entries");
  struct Entry {
    int e[3];
    CycNum v;
  };
  std::vector<Entry> entries;
  int d = -1;
  for (const auto& line : lines) {
    size_t colon = line.find(':');
    if (colon == std::string::npos) fail(Errc::parse_error, "curve entry: missing ':'");
    std::string left = line.substr(0, colon);
    int e[3];
    size_t pos = 0;
    for (int t = 0; t < 3; ++t) {
      size_t start = pos;
      while (pos < left.size() && left[pos] >= '0' && left[pos] <= '9') ++pos;
      if (pos == start) fail(Errc::parse_error, "curve entry: bad exponent");
      e[t] = std::stoi(left.substr(start, pos - start));
      if (t < 2) {
        if (pos >= left.size() || left[pos] != ',')
          fail(Errc::parse_error, "curve entry: expected ','");
        ++pos;
      }
    }
    if (pos != left.size()) fail(Errc::parse_error, "curve entry: trailing exponent characters");
    int deg = e[0] + e[1] + e[2];
    if (d < 0) d = deg;
    if (deg != d) fail(Errc::parse_error, "curve entries are not homogeneous");
    size_t vstart = colon + 1;
    while (vstart < line.size() && line[vstart] == ' ') ++vstart;
    entries.push_back({{e[0], e[1], e[2]}, parse_cyc(std::string_view(line).substr(vstart))});
  }
  std::vector<CycNum> coeffs(static_cast<size_t>(monomial_count(d)));
  std::vector<bool> seen(coeffs.size(), false);
  for (auto& en : entries) {
    size_t idx = monomial_index(d, en.e[0], en.e[1], en.e[2]);
    if (seen[idx]) fail(Errc::parse_error, "curve entry repeats a monomial");
    seen[idx] = true;
    coeffs[idx] = std::move(en.v);
  }
  return Curve(d, std::move(coeffs));
}

}  // namespace sglab
