#include "sglab/projective.hpp"

#include <utility>

#include "sglab/error.hpp"

namespace sglab {

namespace {

// Scale so the first nonzero entry is 1, then put all entries on one order.
std::array<CycNum, 3> canonical_triple(std::array<CycNum, 3> c, const char* what) {
  int lead = -1;
  for (int i = 0; i < 3; ++i) {
    if (!c[static_cast<size_t>(i)].is_zero()) { lead = i; break; }
  }
  if (lead < 0) fail(Errc::degenerate_input, std::string(what) + ": zero coordinate triple");
  CycNum s = c[static_cast<size_t>(lead)].inv();
  for (auto& v : c) v = v * s;
  unsigned m = common_order({&c[0], &c[1], &c[2]});
  for (auto& v : c) v = embed(v, m);
  return c;
}

int cmp_triple(const std::array<CycNum, 3>& a, const std::array<CycNum, 3>& b) {
  for (size_t i = 0; i < 3; ++i) {
    int s = CycNum::cmp(a[i], b[i]);
    if (s != 0) return s;
  }
  return 0;
}

std::array<CycNum, 3> cross(const std::array<CycNum, 3>& a, const std::array<CycNum, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1],
          a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

// One scalar token "N:[...]" starting at text[pos]; advances pos past it.
CycNum scan_scalar(std::string_view text, size_t& pos, const char* what) {
  size_t start = pos;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
  if (pos == start || pos >= text.size() || text[pos] != ':')
    fail(Errc::parse_error, std::string(what) + ": expected scalar order");
  ++pos;
  if (pos >= text.size() || text[pos] != '[')
    fail(Errc::parse_error, std::string(what) + ": expected '[' in scalar");
  size_t close = text.find(']', pos);
  if (close == std::string_view::npos)
    fail(Errc::parse_error, std::string(what) + ": unterminated scalar");
  pos = close + 1;
  return parse_cyc(text.substr(start, pos - start));
}

void skip_spaces(std::string_view text, size_t& pos) {
  while (pos < text.size() && text[pos] == ' ') ++pos;
}

std::array<CycNum, 3> parse_triple(std::string_view text, const char* what) {
  size_t pos = 0;
  skip_spaces(text, pos);
  if (pos >= text.size() || text[pos] != '[')
    fail(Errc::parse_error, std::string(what) + ": expected '['");
  ++pos;
  std::array<CycNum, 3> out{};
  for (int i = 0; i < 3; ++i) {
    skip_spaces(text, pos);
    out[static_cast<size_t>(i)] = scan_scalar(text, pos, what);
    skip_spaces(text, pos);
    if (i < 2) {
      if (pos >= text.size() || text[pos] != ':')
        fail(Errc::parse_error, std::string(what) + ": expected ':' separator");
      ++pos;
    }
  }
  if (pos >= text.size() || text[pos] != ']')
    fail(Errc::parse_error, std::string(what) + ": expected ']'");
  ++pos;
  skip_spaces(text, pos);
  if (pos != text.size())
    fail(Errc::parse_error, std::string(what) + ": trailing characters");
  return out;
}

std::string emit_triple(const std::array<CycNum, 3>& c) {
  return "[" + emit_cyc(c[0]) + " : " + emit_cyc(c[1]) + " : " + emit_cyc(c[2]) + "]";
}

}  // namespace

ProjPoint::ProjPoint(CycNum x, CycNum y, CycNum z)
    : c_(canonical_triple({std::move(x), std::move(y), std::move(z)}, "point")) {}

bool ProjPoint::operator==(const ProjPoint& o) const { return cmp_triple(c_, o.c_) == 0; }

int ProjPoint::cmp(const ProjPoint& a, const ProjPoint& b) { return cmp_triple(a.c_, b.c_); }

ProjLine::ProjLine(CycNum a, CycNum b, CycNum c)
    : c_(canonical_triple({std::move(a), std::move(b), std::move(c)}, "line")) {}

bool ProjLine::contains(const ProjPoint& p) const {
  CycNum s = c_[0] * p[0] + c_[1] * p[1] + c_[2] * p[2];
  return s.is_zero();
}

bool ProjLine::operator==(const ProjLine& o) const { return cmp_triple(c_, o.c_) == 0; }

int ProjLine::cmp(const ProjLine& a, const ProjLine& b) { return cmp_triple(a.c_, b.c_); }

CycNum det3(const Mat3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

bool collinear(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r) {
  return det3({p.coords(), q.coords(), r.coords()}).is_zero();
}

bool concurrent(const ProjLine& a, const ProjLine& b, const ProjLine& c) {
  return det3({a.coeffs(), b.coeffs(), c.coeffs()}).is_zero();
}

ProjLine join(const ProjPoint& p, const ProjPoint& q) {
  auto c = cross(p.coords(), q.coords());
  if (c[0].is_zero() && c[1].is_zero() && c[2].is_zero())
    fail(Errc::degenerate_join, "join of coincident points");
  return ProjLine(std::move(c[0]), std::move(c[1]), std::move(c[2]));
}

ProjPoint meet(const ProjLine& a, const ProjLine& b) {
  auto c = cross(a.coeffs(), b.coeffs());
  if (c[0].is_zero() && c[1].is_zero() && c[2].is_zero())
    fail(Errc::degenerate_join, "meet of coincident lines");
  return ProjPoint(std::move(c[0]), std::move(c[1]), std::move(c[2]));
}

ProjTransform::ProjTransform(Mat3 m) : m_(std::move(m)), det_(det3(m_)) {
  if (det_.is_zero()) fail(Errc::degenerate_frame, "transform matrix is singular");
}

ProjTransform ProjTransform::identity() {
  return diagonal(CycNum(1), CycNum(1), CycNum(1));
}

ProjTransform ProjTransform::diagonal(const CycNum& a, const CycNum& b, const CycNum& c) {
  Mat3 m{};
  m[0][0] = a;
  m[1][1] = b;
  m[2][2] = c;
  return ProjTransform(std::move(m));
}

ProjPoint ProjTransform::operator()(const ProjPoint& p) const {
  std::array<CycNum, 3> v{};
  for (size_t i = 0; i < 3; ++i)
    v[i] = m_[i][0] * p[0] + m_[i][1] * p[1] + m_[i][2] * p[2];
  return ProjPoint(std::move(v[0]), std::move(v[1]), std::move(v[2]));
}

ProjLine ProjTransform::map_line(const ProjLine& l) const {
  // Row covector times the inverse: use the adjugate, the determinant factor
  // cancels under canonicalization.
  Mat3 adj{};
  for (size_t i = 0; i < 3; ++i) {
    for (size_t j = 0; j < 3; ++j) {
      size_t i1 = (i + 1) % 3, i2 = (i + 2) % 3;
      size_t j1 = (j + 1) % 3, j2 = (j + 2) % 3;
      adj[j][i] = m_[i1][j1] * m_[i2][j2] - m_[i1][j2] * m_[i2][j1];
    }
  }
  std::array<CycNum, 3> v{};
  for (size_t j = 0; j < 3; ++j)
    v[j] = l[0] * adj[0][j] + l[1] * adj[1][j] + l[2] * adj[2][j];
  return ProjLine(std::move(v[0]), std::move(v[1]), std::move(v[2]));
}

ProjTransform ProjTransform::inverse() const {
  Mat3 inv{};
  CycNum d = det_.inv();
  for (size_t i = 0; i < 3; ++i) {
    for (size_t j = 0; j < 3; ++j) {
      size_t i1 = (i + 1) % 3, i2 = (i + 2) % 3;
      size_t j1 = (j + 1) % 3, j2 = (j + 2) % 3;
      inv[j][i] = (m_[i1][j1] * m_[i2][j2] - m_[i1][j2] * m_[i2][j1]) * d;
    }
  }
  return ProjTransform(std::move(inv), det_.inv());
}

ProjTransform ProjTransform::operator*(const ProjTransform& o) const {
  Mat3 r{};
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j)
      r[i][j] = m_[i][0] * o.m_[0][j] + m_[i][1] * o.m_[1][j] + m_[i][2] * o.m_[2][j];
  return ProjTransform(std::move(r), det_ * o.det_);
}

ProjTransform transform_mapping_lines(const std::array<ProjLine, 3>& src,
                                      const std::array<ProjLine, 3>& dst) {
  // With L = rows of canonical covectors, the point map L sends line i to the
  // coordinate line x_i = 0 and the dual unit point l1+l2+l3 to [1:1:1]; the
  // requested map is then Ldst^-1 * Lsrc.
  auto rows = [](const std::array<ProjLine, 3>& t, const char* side) {
    Mat3 m{t[0].coeffs(), t[1].coeffs(), t[2].coeffs()};
    if (det3(m).is_zero())
      fail(Errc::degenerate_frame, std::string(side) + " line triple is concurrent");
    return ProjTransform(std::move(m));
  };
  ProjTransform ls = rows(src, "source");
  ProjTransform ld = rows(dst, "destination");
  return ld.inverse() * ls;
}

std::array<ProjPoint, 2> line_point_basis(const ProjLine& l) {
  std::array<std::array<CycNum, 3>, 3> units = {{{CycNum(1), CycNum(0), CycNum(0)},
                                                 {CycNum(0), CycNum(1), CycNum(0)},
                                                 {CycNum(0), CycNum(0), CycNum(1)}}};
  std::vector<ProjPoint> found;
  for (const auto& e : units) {
    auto v = cross(e, l.coeffs());
    if (v[0].is_zero() && v[1].is_zero() && v[2].is_zero()) continue;
    ProjPoint p(std::move(v[0]), std::move(v[1]), std::move(v[2]));
    bool dup = false;
    for (const auto& q : found) dup = dup || q == p;
    if (!dup) found.push_back(std::move(p));
    if (found.size() == 2) return {found[0], found[1]};
  }
  fail(Errc::degenerate_input, "line has no point basis");  // unreachable for valid lines
}

std::string emit_point(const ProjPoint& p) { return emit_triple(p.coords()); }

ProjPoint parse_point(std::string_view text) {
  auto t = parse_triple(text, "point");
  return ProjPoint(std::move(t[0]), std::move(t[1]), std::move(t[2]));
}

std::string emit_line(const ProjLine& l) { return emit_triple(l.coeffs()); }

ProjLine parse_line(std::string_view text) {
  auto t = parse_triple(text, "line");
  return ProjLine(std::move(t[0]), std::move(t[1]), std::move(t[2]));
}

}  // namespace sglab
