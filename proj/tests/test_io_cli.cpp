#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "sglab/config.hpp"
#include "sglab/error.hpp"
#include "sglab/io.hpp"

using namespace sglab;

namespace {

std::string emit_str(const ConfigFile& f) {
  std::ostringstream out;
  emit_config_file(out, f);
  return out.str();
}

ConfigFile parse_str(const std::string& s) {
  std::istringstream in(s);
  return parse_config_file(in);
}

std::string error_message(const std::string& text) {
  try {
    parse_str(text);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::parse_error);
    return e.what();
  }
  return "";
}

Curve triangle_curve() {
  std::vector<CycNum> c(static_cast<size_t>(monomial_count(3)), CycNum(0));
  c[monomial_index(3, 1, 1, 1)] = CycNum(1);
  return Curve(3, c);
}

}  // namespace

TEST_CASE("config emit/parse round trip") {
  ConfigFile f;
  f.config = fermat_config(5);
  f.curves.push_back(triangle_curve());

  std::string text = emit_str(f);
  ConfigFile back = parse_str(text);
  CHECK(back.config.order == 5);
  CHECK(back.config.points == f.config.points);
  CHECK(back.config.labels == f.config.labels);
  REQUIRE(back.curves.size() == 1);
  CHECK(back.curves[0] == f.curves[0]);
  // canonical files re-emit byte for byte
  CHECK(emit_str(back) == text);

  // labels are optional as a block
  ConfigFile plain;
  plain.config = fermat_config(3);
  plain.config.labels.clear();
  ConfigFile pback = parse_str(emit_str(plain));
  CHECK(pback.config.points == plain.config.points);
  CHECK(pback.config.labels.empty());
}

TEST_CASE("golden fermat file") {
  // frozen at first generation; a change here is a format break
  const std::string golden =
      "sglab config 1\n"
      "order: 3\n"
      "point: [3:[0,0] : 3:[1,0] : 3:[-1,0]]\n"
      "label: a0\n"
      "point: [3:[0,0] : 3:[1,0] : 3:[1,1]]\n"
      "label: a1\n"
      "point: [3:[0,0] : 3:[1,0] : 3:[0,-1]]\n"
      "label: a2\n"
      "point: [3:[1,0] : 3:[0,0] : 3:[-1,0]]\n"
      "label: b0\n"
      "point: [3:[1,0] : 3:[0,0] : 3:[1,1]]\n"
      "label: b1\n"
      "point: [3:[1,0] : 3:[0,0] : 3:[0,-1]]\n"
      "label: b2\n"
      "point: [3:[1,0] : 3:[-1,0] : 3:[0,0]]\n"
      "label: c0\n"
      "point: [3:[1,0] : 3:[0,-1] : 3:[0,0]]\n"
      "label: c1\n"
      "point: [3:[1,0] : 3:[1,1] : 3:[0,0]]\n"
      "label: c2\n";
  ConfigFile f;
  f.config = fermat_config(3);
  CHECK(emit_str(f) == golden);
  CHECK(parse_str(golden).config.points == f.config.points);
}

TEST_CASE("config parse tolerances and failures") {
  // comments, blank lines, and CRLF endings are accepted
  ConfigFile ok = parse_str(
      "# produced by hand\n"
      "sglab config 1\r\n"
      "\n"
      "order: 1\r\n"
      "point: [1:[1] : 1:[0] : 1:[0]]\n"
      "# trailing comment\n");
  CHECK(ok.config.points.size() == 1);

  auto has = [](const std::string& msg, const std::string& part) {
    return msg.find(part) != std::string::npos;
  };

  CHECK(has(error_message("sglab config 2\norder: 1\n"), "version"));
  CHECK(has(error_message("sglab values 1\n"), "expected header"));
  CHECK(has(error_message(""), "missing"));
  CHECK(has(error_message("sglab config 1\norder: 1\ncolor: red\n"),
            "unknown key 'color' in sglab config version 1"));
  CHECK(has(error_message("sglab config 1\norder: 1\nlabel: a\n"), "label"));
  CHECK(has(error_message("sglab config 1\npoint: [1:[1] : 1:[0] : 1:[0]]\n"), "'order'"));
  CHECK(has(error_message("sglab config 1\norder: 1\norder: 2\n"), "duplicate"));
  CHECK(has(error_message("sglab config 1\norder: 0\n"), "order"));
  CHECK(has(error_message("sglab config 1\norder: x\n"), "order"));
  CHECK(has(error_message("sglab config 1\n"), "missing 'order'"));
  CHECK(has(error_message("sglab config 1\norder: 1\nentry: 1,0,0: 1:[1]\n"),
            "outside a curve block"));
  CHECK(has(error_message("sglab config 1\norder: 1\ncurve: 2\nentry: 1,0,0: 1:[1]\n"),
            "cut short"));
  CHECK(has(error_message("sglab config 1\norder: 1\ncurve: 1\npoint: [1:[1] : 1:[0] : 1:[0]]\n"),
            "expected 'entry'"));
  CHECK(has(error_message("sglab config 1\norder: 1\nnocolon\n"), "key: value"));

  // labels must pair with points one to one
  std::string two_pts =
      "sglab config 1\norder: 1\npoint: [1:[1] : 1:[0] : 1:[0]]\nlabel: p\n"
      "label: q\n";
  CHECK(has(error_message(two_pts), "label"));

  // a coordinate in a bigger field than the file declares is rejected
  std::string msg = error_message(
      "sglab config 1\norder: 2\npoint: [3:[0,0] : 3:[1,0] : 3:[-1,0]]\n");
  CHECK(has(msg, "does not divide"));
  CHECK(has(msg, "line 3"));

  // scalar syntax errors carry the position of the value
  std::string bad = error_message("sglab config 1\norder: 1\npoint: zzz\n");
  CHECK(has(bad, "line 3"));
  CHECK(has(bad, "column 8"));
}

TEST_CASE("values and pairs files") {
  ValuesFile v;
  v.values.push_back(CycNum(rat(1, 2)));
  v.values.push_back(zeta(6));
  std::ostringstream out;
  emit_values_file(out, v);
  std::istringstream in(out.str());
  ValuesFile back = parse_values_file(in);
  REQUIRE(back.values.size() == 2);
  CHECK(back.values[0] == v.values[0]);
  CHECK(back.values[1] == v.values[1]);
  {
    std::ostringstream again;
    emit_values_file(again, back);
    CHECK(again.str() == out.str());
  }

  std::istringstream badv("sglab values 1\npoint: [1:[1] : 1:[0] : 1:[0]]\n");
  CHECK_THROWS_AS(parse_values_file(badv), Error);

  PairsFile p;
  p.pairs.emplace_back(CycNum(2), zeta(4));
  p.pairs.emplace_back(CycNum(rat(-1, 3)), CycNum(0));
  std::ostringstream pout;
  emit_pairs_file(pout, p);
  std::istringstream pin(pout.str());
  PairsFile pback = parse_pairs_file(pin);
  REQUIRE(pback.pairs.size() == 2);
  CHECK(pback.pairs[0] == p.pairs[0]);
  CHECK(pback.pairs[1] == p.pairs[1]);
  {
    std::ostringstream again;
    emit_pairs_file(again, pback);
    CHECK(again.str() == pout.str());
  }

  std::istringstream badp("sglab pairs 1\npair: 1:[1]\n");
  CHECK_THROWS_AS(parse_pairs_file(badp), Error);
}

TEST_CASE("report emission") {
  std::ostringstream out;
  emit_report(out, {{"command", "verify"}, {"is-sg", "true"}});
  CHECK(out.str() == "sglab report 1\ncommand: verify\nis-sg: true\n");
}
