#include "sglab/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "sglab/error.hpp"

namespace sglab {

namespace {

[[noreturn]] void fail_at(long line, size_t col, const std::string& what) {
  fail(Errc::parse_error,
       "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what);
}

// Sequential key/value reader.  Blank lines and '#' comments are skipped;
// every other line must be "key: value" (or a bare "key:").
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::string& key, std::string& val) {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++line_;
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      if (raw.empty() || raw[0] == '#') continue;
      size_t colon = raw.find(':');
      if (colon == std::string::npos || colon == 0)
        fail_at(line_, 1, "expected 'key: value'");
      key = raw.substr(0, colon);
      if (key.find(' ') != std::string::npos)
        fail_at(line_, 1, "key contains a space");
      if (colon + 1 == raw.size()) {
        val.clear();
        val_col_ = colon + 2;
      } else {
        if (raw[colon + 1] != ' ') fail_at(line_, colon + 2, "expected a space after ':'");
        val = raw.substr(colon + 2);
        val_col_ = colon + 3;
      }
      return true;
    }
    return false;
  }

  long line() const { return line_; }
  size_t value_col() const { return val_col_; }

  // First non-blank line must be "sglab <kind> <version>"; only version 1
  // of each format exists.
  void expect_header(const std::string& kind) {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++line_;
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      if (raw.empty() || raw[0] == '#') continue;
      std::string want = "sglab " + kind + " 1";
      if (raw == want) return;
      if (raw.rfind("sglab " + kind + " ", 0) == 0)
        fail_at(line_, 1, "unsupported " + kind + " format version '" +
                              raw.substr(6 + kind.size() + 1) + "' (this tool reads version 1)");
      fail_at(line_, 1, "expected header '" + want + "'");
    }
    fail_at(line_ + 1, 1, "missing 'sglab " + kind + " 1' header");
  }

 private:
  std::istream& in_;
  long line_ = 0;
  size_t val_col_ = 1;
};

[[noreturn]] void unknown_key(const LineReader& r, const std::string& kind, const std::string& key) {
  fail_at(r.line(), 1, "unknown key '" + key + "' in sglab " + kind + " version 1");
}

// Re-raise scalar/point parse failures with the file position attached.
template <typename F>
auto parse_field(const LineReader& r, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    fail_at(r.line(), r.value_col(), e.what());
  }
}

unsigned parse_order_value(const LineReader& r, const std::string& val) {
  if (val.empty() || val.find_first_not_of("0123456789") != std::string::npos)
    fail_at(r.line(), r.value_col(), "order must be a positive integer");
  unsigned long n = 0;
  try {
    n = std::stoul(val);
  } catch (const std::exception&) {
    n = 0;
  }
  if (n == 0 || n > 1000000) fail_at(r.line(), r.value_col(), "order out of range");
  return static_cast<unsigned>(n);
}

}  // namespace

ConfigFile parse_config_file(std::istream& in) {
  LineReader r(in);
  r.expect_header("config");
  ConfigFile f;
  bool have_order = false;
  std::string key, val;
  while (r.next(key, val)) {
    if (key == "order") {
      if (have_order) fail_at(r.line(), 1, "duplicate 'order' line");
      if (!f.config.points.empty()) fail_at(r.line(), 1, "'order' must precede the points");
      f.config.order = parse_order_value(r, val);
      have_order = true;
    } else if (key == "point") {
      if (!have_order) fail_at(r.line(), 1, "'point' before 'order'");
      ProjPoint p = parse_field(r, [&] { return parse_point(val); });
      for (int i = 0; i < 3; ++i)
        if (f.config.order % p[i].order() != 0)
          fail_at(r.line(), r.value_col(),
                  "point uses field order " + std::to_string(p[i].order()) +
                      " which does not divide the declared order " +
                      std::to_string(f.config.order));
      f.config.points.push_back(std::move(p));
    } else if (key == "label") {
      if (f.config.labels.size() + 1 != f.config.points.size())
        fail_at(r.line(), 1, "'label' must follow the point it names");
      f.config.labels.push_back(val);
    } else if (key == "curve") {
      long k = -1;
      if (!val.empty() && val.find_first_not_of("0123456789") == std::string::npos)
        k = std::stol(val);
      if (k < 1 || k > 100000) fail_at(r.line(), r.value_col(), "curve entry count out of range");
      long at = r.line();
      std::vector<std::string> entries;
      for (long i = 0; i < k; ++i) {
        if (!r.next(key, val)) fail_at(r.line() + 1, 1, "curve block cut short");
        if (key != "entry")
          fail_at(r.line(), 1, "expected 'entry' inside a curve block, found '" + key + "'");
        entries.push_back(val);
      }
      try {
        f.curves.push_back(parse_curve_entries(entries));
      } catch (const Error& e) {
        fail_at(at, 1, e.what());
      }
    } else if (key == "entry") {
      fail_at(r.line(), 1, "'entry' outside a curve block");
    } else {
      unknown_key(r, "config", key);
    }
  }
  if (!have_order) fail_at(r.line() + 1, 1, "missing 'order' line");
  if (!f.config.labels.empty() && f.config.labels.size() != f.config.points.size())
    fail_at(r.line() + 1, 1,
            "labels cover " + std::to_string(f.config.labels.size()) + " of " +
                std::to_string(f.config.points.size()) + " points");
  return f;
}

void emit_config_file(std::ostream& out, const ConfigFile& f) {
  out << "sglab config 1\n";
  out << "order: " << f.config.order << "\n";
  for (size_t i = 0; i < f.config.points.size(); ++i) {
    out << "point: " << emit_point(f.config.points[i]) << "\n";
    if (!f.config.labels.empty()) out << "label: " << f.config.labels[i] << "\n";
  }
  for (const auto& c : f.curves) {
    auto entries = emit_curve_entries(c);
    out << "curve: " << entries.size() << "\n";
    for (const auto& e : entries) out << "entry: " << e << "\n";
  }
}

ValuesFile parse_values_file(std::istream& in) {
  LineReader r(in);
  r.expect_header("values");
  ValuesFile f;
  std::string key, val;
  while (r.next(key, val)) {
    if (key == "value")
      f.values.push_back(parse_field(r, [&] { return parse_cyc(val); }));
    else
      unknown_key(r, "values", key);
  }
  return f;
}

void emit_values_file(std::ostream& out, const ValuesFile& f) {
  out << "sglab values 1\n";
  for (const auto& v : f.values) out << "value: " << emit_cyc(v) << "\n";
}

PairsFile parse_pairs_file(std::istream& in) {
  LineReader r(in);
  r.expect_header("pairs");
  PairsFile f;
  std::string key, val;
  while (r.next(key, val)) {
    if (key == "pair") {
      size_t sep = val.find(" ; ");
      if (sep == std::string::npos)
        fail_at(r.line(), r.value_col(), "expected 'pair: <value> ; <value>'");
      CycNum x = parse_field(r, [&] { return parse_cyc(val.substr(0, sep)); });
      CycNum y = parse_field(r, [&] { return parse_cyc(val.substr(sep + 3)); });
      f.pairs.emplace_back(std::move(x), std::move(y));
    } else {
      unknown_key(r, "pairs", key);
    }
  }
  return f;
}

void emit_pairs_file(std::ostream& out, const PairsFile& f) {
  out << "sglab pairs 1\n";
  for (const auto& [x, y] : f.pairs)
    out << "pair: " << emit_cyc(x) << " ; " << emit_cyc(y) << "\n";
}

namespace {

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::parse_error, "cannot open '" + path + "' for reading");
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(Errc::parse_error, "cannot open '" + path + "' for writing");
  return out;
}

}  // namespace

ConfigFile load_config_file(const std::string& path) {
  auto in = open_in(path);
  return parse_config_file(in);
}

void save_config_file(const std::string& path, const ConfigFile& f) {
  auto out = open_out(path);
  emit_config_file(out, f);
  if (!out) fail(Errc::parse_error, "write to '" + path + "' failed");
}

ValuesFile load_values_file(const std::string& path) {
  auto in = open_in(path);
  return parse_values_file(in);
}

void save_values_file(const std::string& path, const ValuesFile& f) {
  auto out = open_out(path);
  emit_values_file(out, f);
  if (!out) fail(Errc::parse_error, "write to '" + path + "' failed");
}

PairsFile load_pairs_file(const std::string& path) {
  auto in = open_in(path);
  return parse_pairs_file(in);
}

void save_pairs_file(const std::string& path, const PairsFile& f) {
  auto out = open_out(path);
  emit_pairs_file(out, f);
  if (!out) fail(Errc::parse_error, "write to '" + path + "' failed");
}

void emit_report(std::ostream& out, const std::vector<ReportRow>& rows) {
  out << "sglab report 1\n";
  for (const auto& [k, v] : rows) out << k << ": " << v << "\n";
}

}  // namespace sglab
