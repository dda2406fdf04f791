// Command-line front end: generation, verification, classification, and
// measurement of point configurations over cyclotomic coordinates.
#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "sglab/classify.hpp"
#include "sglab/config.hpp"
#include "sglab/error.hpp"
#include "sglab/io.hpp"

using namespace sglab;

namespace {

using Clock = std::chrono::steady_clock;

// Rows accumulate in emission order; elapsed-ms is the only
// non-reproducible field.
struct Report {
  std::vector<ReportRow> rows;
  Clock::time_point t0 = Clock::now();

  void add(std::string k, std::string v) { rows.emplace_back(std::move(k), std::move(v)); }
  void add(std::string k, long v) { add(std::move(k), std::to_string(v)); }

  void finish() {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    add("elapsed-ms", static_cast<long>(ms));
    add("status", "ok");
    emit_report(std::cout, rows);
  }
};

struct Globals {
  unsigned long seed = 20240101;
  int threads = 1;
  long limit = 8;

  void echo(Report& r) const {
    r.add("seed", std::to_string(seed));
    r.add("threads", std::to_string(threads));
  }
};

CycNum parse_scalar(const std::string& s) {
  if (s.find(':') != std::string::npos) return parse_cyc(s);
  return CycNum(parse_rational(s));
}

std::string trimmed(const std::string& s) {
  size_t b = s.find_first_not_of(' ');
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(' ');
  return s.substr(b, e - b + 1);
}

MobiusMap parse_map_flag(const std::string& s) {
  std::vector<CycNum> parts;
  size_t start = 0;
  while (parts.size() < 5) {
    size_t sep = s.find(';', start);
    std::string piece = trimmed(sep == std::string::npos ? s.substr(start)
                                                         : s.substr(start, sep - start));
    if (piece.empty()) fail(Errc::parse_error, "--map: empty entry in '" + s + "'");
    parts.push_back(parse_scalar(piece));
    if (sep == std::string::npos) break;
    start = sep + 1;
  }
  if (parts.size() != 4)
    fail(Errc::parse_error, "--map wants four ';'-separated scalars 'a;b;c;d'");
  return MobiusMap(parts[0], parts[1], parts[2], parts[3]);
}

std::string emit_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

void add_sg_rows(Report& r, const Configuration& a, const SGReport& rep, long limit) {
  r.add("order", static_cast<long>(a.order));
  r.add("points", static_cast<long>(a.points.size()));
  r.add("is-sg", rep.is_sg ? "true" : "false");
  r.add("triples", rep.triple_count);
  r.add("ordinary-lines", static_cast<long>(rep.ordinary_lines.size()));
  long shown = 0;
  for (const auto& l : rep.ordinary_lines) {
    if (shown >= limit) break;
    r.add("ordinary-line", emit_line(l));
    ++shown;
  }
  for (const auto& [size, count] : rep.line_size_histogram)
    r.add("lines-of-size-" + std::to_string(size), static_cast<long>(count));
}

int cmd_gen(const Globals& g, const std::string& kind, int n, const std::string& out) {
  Report r;
  r.add("command", "gen");
  r.add("kind", kind);
  r.add("n", n);
  g.echo(r);
  ConfigFile f;
  f.config = fermat_config(static_cast<unsigned>(n));
  save_config_file(out, f);
  r.add("output", out);
  r.add("order", static_cast<long>(f.config.order));
  r.add("points", static_cast<long>(f.config.points.size()));
  r.finish();
  return 0;
}

int cmd_verify(const Globals& g, const std::string& in) {
  Report r;
  r.add("command", "verify");
  r.add("input", in);
  g.echo(r);
  r.add("limit", g.limit);
  ConfigFile f = load_config_file(in);
  SGReport rep = sg_check(f.config);
  add_sg_rows(r, f.config, rep, g.limit);
  r.finish();
  return 0;
}

int cmd_classify(const Globals& g, const std::string& in, int d, const std::string& delta,
                 const std::string& epsilon, int max_m) {
  Report r;
  r.add("command", "classify");
  r.add("input", in);
  g.echo(r);
  r.add("d", d);
  r.add("delta", delta);
  r.add("epsilon", epsilon);
  r.add("max-m", max_m);
  ConfigFile f = load_config_file(in);
  ClassifierParams prm;
  prm.d = d;
  prm.delta = parse_rational(delta);
  prm.epsilon = parse_rational(epsilon);
  prm.max_m = max_m;
  StructureVerdict v = classify(f.config, prm);
  r.add("verdict", verdict_kind_name(v.kind));
  r.add("stage", v.stage);
  if (!v.reason.empty()) r.add("reason", v.reason);
  if (v.ordinary) r.add("ordinary-line", emit_line(*v.ordinary));
  if (v.kind == VerdictKind::fermat_equivalent) r.add("m", static_cast<long>(v.m));
  if (!v.classes.empty()) {
    r.add("classes", static_cast<long>(v.classes.size()));
    std::string sizes;
    for (const auto& c : v.classes) sizes += (sizes.empty() ? "" : " ") + std::to_string(c.size());
    r.add("class-sizes", sizes);
  }
  for (size_t i = 0; i < v.grids.size(); ++i) {
    const GridStats& gs = v.grids[i];
    r.add("grid-" + std::to_string(i),
          "size=" + std::to_string(gs.set_size) +
              " diff-or-ratio-size=" + std::to_string(gs.diff_or_ratio_size) +
              " doubling=" + emit_rational(gs.doubling_constant) +
              " model=" + (gs.group_kind == GroupModel::multiplicative ? "multiplicative" : "additive"));
  }
  for (size_t i = 0; i < v.cosets.size(); ++i) {
    if (!v.cosets[i]) {
      r.add("coset-" + std::to_string(i), "none");
      continue;
    }
    r.add("coset-" + std::to_string(i), "m=" + std::to_string(v.cosets[i]->m) +
                                            " sym-diff=" + std::to_string(v.cosets[i]->sym_diff) +
                                            " lambda=" + emit_cyc(v.cosets[i]->lambda));
  }
  if (v.to_fermat) {
    const Mat3& m = v.to_fermat->matrix();
    for (int row = 0; row < 3; ++row)
      r.add("transform-row-" + std::to_string(row),
            emit_cyc(m[static_cast<size_t>(row)][0]) + " ; " + emit_cyc(m[static_cast<size_t>(row)][1]) +
                " ; " + emit_cyc(m[static_cast<size_t>(row)][2]));
  }
  r.finish();
  return 0;
}

int cmd_measure_triples(const Globals& g, const std::string& in) {
  Report r;
  r.add("command", "measure triples");
  r.add("input", in);
  g.echo(r);
  ConfigFile f = load_config_file(in);
  SGReport rep = sg_check(f.config);
  add_sg_rows(r, f.config, rep, g.limit);
  r.finish();
  return 0;
}

int cmd_measure_grids(const Globals& g, const std::string& in, const std::string& model,
                      const std::string& cflag) {
  Report r;
  r.add("command", "measure grids");
  r.add("input", in);
  g.echo(r);
  r.add("model", model);
  r.add("grid-const", cflag);
  ValuesFile f = load_values_file(in);
  CubicKind kind = model == "multiplicative" ? CubicKind::three_nonconcurrent_lines
                                             : CubicKind::three_concurrent_lines;
  std::vector<GroupElement> q;
  for (const auto& v : f.values) q.push_back(GroupElement{kind, v, std::nullopt, 1});
  GridVerdict verdict = grid_constant(q, parse_rational(cflag));
  r.add("set-size", verdict.stats.set_size);
  r.add("diff-or-ratio-size", verdict.stats.diff_or_ratio_size);
  r.add("doubling", emit_rational(verdict.stats.doubling_constant));
  r.add("is-grid", verdict.is_grid ? "true" : "false");
  r.finish();
  return 0;
}

int cmd_measure_expansion(const Globals& g, const std::string& in, const std::string& map,
                          const std::string& mode) {
  Report r;
  r.add("command", "measure expansion");
  r.add("input", in);
  g.echo(r);
  r.add("map", map);
  r.add("mode", mode);
  ValuesFile f = load_values_file(in);
  ValueSet a(f.values.begin(), f.values.end());
  MobiusMap psi = parse_map_flag(map);
  ExpansionMode m = mode == "two-pt"   ? ExpansionMode::two_pt
                    : mode == "one-pt" ? ExpansionMode::one_pt
                                       : ExpansionMode::mixed;
  ExpansionReport rep = expansion_report(a, psi, m);
  r.add("set-size", rep.set_size);
  r.add("size-a", rep.size_a);
  r.add("size-psi", rep.size_psi);
  r.add("max-size", rep.max_size);
  r.add("normalized", emit_double(rep.normalized));
  r.finish();
  return 0;
}

int cmd_measure_mobius(const Globals& g, const std::string& in,
                       const std::vector<std::string>& maps) {
  Report r;
  r.add("command", "measure mobius");
  r.add("input", in);
  g.echo(r);
  PairsFile f = load_pairs_file(in);
  ValuePairSet pairs(f.pairs.begin(), f.pairs.end());
  std::vector<MobiusMap> family;
  for (const auto& m : maps) {
    r.add("map", m);
    family.push_back(parse_map_flag(m));
  }
  r.add("pairs", static_cast<long>(pairs.size()));
  // two independent routes, both reported; a disagreement is a library bug
  long fast = mobius_incidences(pairs, family);
  long naive = mobius_incidences_naive(pairs, family);
  r.add("incidences", fast);
  r.add("incidences-naive", naive);
  r.add("routes-agree", fast == naive ? "true" : "false");
  r.finish();
  return fast == naive ? 0 : 2;
}

int cmd_describe(const Globals& g, const std::string& in) {
  Report r;
  r.add("command", "describe");
  r.add("input", in);
  g.echo(r);
  ConfigFile f = load_config_file(in);
  if (f.curves.empty()) fail(Errc::domain, "describe needs a curve in the input file");
  Curve c = f.curves[0];
  if (f.curves.size() > 1) {
    // several curve blocks are read as the factors of a product
    std::vector<std::pair<Curve, int>> comps;
    for (const auto& part : f.curves) {
      bool merged = false;
      for (auto& [c0, m0] : comps)
        if (c0 == part) {
          ++m0;
          merged = true;
          break;
        }
      if (!merged) comps.emplace_back(part, 1);
    }
    c = f.curves[0];
    for (size_t i = 1; i < f.curves.size(); ++i) c = curve_product(c, f.curves[i]);
    c.set_components(std::move(comps));
  }
  GroupMap gm = GroupMap::build(c);
  std::string desc = gm.describe();
  size_t start = 0;
  while (start < desc.size()) {
    size_t nl = desc.find('\n', start);
    std::string line = desc.substr(start, nl == std::string::npos ? std::string::npos : nl - start);
    if (!line.empty()) {
      size_t colon = line.find(": ");
      if (colon == std::string::npos)
        r.add("note", line);
      else
        r.add(line.substr(0, colon), line.substr(colon + 2));
    }
    if (nl == std::string::npos) break;
    start = nl + 1;
  }
  r.add("tau", emit_cyc(gm.tau()));
  const Mat3& m = gm.to_normal().matrix();
  for (int row = 0; row < 3; ++row)
    r.add("to-normal-row-" + std::to_string(row),
          emit_cyc(m[static_cast<size_t>(row)][0]) + " ; " + emit_cyc(m[static_cast<size_t>(row)][1]) +
              " ; " + emit_cyc(m[static_cast<size_t>(row)][2]));
  r.finish();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic laboratory for point configurations in the complex projective plane"};
  app.require_subcommand(1);

  Globals g;
  app.add_option("--seed", g.seed, "seed for randomized subcommands")->capture_default_str();
  app.add_option("--threads", g.threads, "worker cap (output is thread-count independent)")
      ->capture_default_str();
  app.add_option("--limit", g.limit, "cap on listed witnesses")->capture_default_str();

  auto* gen = app.add_subcommand("gen", "generate a configuration file");
  std::string gen_kind, gen_out;
  int gen_n = 0;
  gen->add_option("kind", gen_kind, "configuration family")
      ->required()
      ->check(CLI::IsMember({"fermat"}));
  gen->add_option("n", gen_n, "family parameter")->required();
  gen->add_option("out", gen_out, "output path")->required();

  auto* verify = app.add_subcommand("verify", "check the Sylvester-Gallai property");
  std::string verify_in;
  verify->add_option("in", verify_in, "configuration file")->required();

  auto* classify_cmd = app.add_subcommand("classify", "run the structure pipeline");
  std::string cl_in, cl_delta = "1/5", cl_epsilon = "1/20";
  int cl_d = 3, cl_max_m = 0;
  classify_cmd->add_option("in", cl_in, "configuration file")->required();
  classify_cmd->add_option("--d", cl_d, "maximal fitting degree")->capture_default_str();
  classify_cmd->add_option("--delta", cl_delta, "structure tolerance")->capture_default_str();
  classify_cmd->add_option("--epsilon", cl_epsilon, "coverage slack (at most delta)")
      ->capture_default_str();
  classify_cmd->add_option("--max-m", cl_max_m, "subgroup search cap (0 = automatic)")
      ->capture_default_str();

  auto* measure = app.add_subcommand("measure", "measurement subcommands");
  measure->require_subcommand(1);

  auto* m_triples = measure->add_subcommand("triples", "collinear triple count of a configuration");
  std::string mt_in;
  m_triples->add_option("in", mt_in, "configuration file")->required();

  auto* m_grids = measure->add_subcommand("grids", "doubling statistics of a value set");
  std::string mg_in, mg_model = "multiplicative", mg_const = "1";
  m_grids->add_option("in", mg_in, "values file")->required();
  m_grids->add_option("--model", mg_model, "group model")
      ->check(CLI::IsMember({"additive", "multiplicative"}))
      ->capture_default_str();
  m_grids->add_option("--grid-const", mg_const, "doubling threshold C")->capture_default_str();

  auto* m_exp = measure->add_subcommand("expansion", "expansion of a value set under a map");
  std::string me_in, me_map = "1;1;0;1", me_mode = "two-pt";
  m_exp->add_option("in", me_in, "values file")->required();
  m_exp->add_option("--map", me_map, "Moebius map 'a;b;c;d' for (a x + b)/(c x + d)")
      ->capture_default_str();
  m_exp->add_option("--mode", me_mode, "measurement mode")
      ->check(CLI::IsMember({"two-pt", "one-pt", "mixed"}))
      ->capture_default_str();

  auto* m_mob = measure->add_subcommand("mobius", "incidences of pairs on a map family");
  std::string mm_in;
  std::vector<std::string> mm_maps;
  m_mob->add_option("in", mm_in, "pairs file")->required();
  m_mob->add_option("--map", mm_maps, "Moebius map 'a;b;c;d' (repeatable)")->required();

  auto* describe = app.add_subcommand("describe", "print the group charts of a curve");
  std::string de_in;
  describe->add_option("in", de_in, "configuration file with a curve")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (*gen) return cmd_gen(g, gen_kind, gen_n, gen_out);
    if (*verify) return cmd_verify(g, verify_in);
    if (*classify_cmd) return cmd_classify(g, cl_in, cl_d, cl_delta, cl_epsilon, cl_max_m);
    if (*m_triples) return cmd_measure_triples(g, mt_in);
    if (*m_grids) return cmd_measure_grids(g, mg_in, mg_model, mg_const);
    if (*m_exp) return cmd_measure_expansion(g, me_in, me_map, me_mode);
    if (*m_mob) return cmd_measure_mobius(g, mm_in, mm_maps);
    if (*describe) return cmd_describe(g, de_in);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Errc::parse_error ? 1 : 2;
  }
  return 1;
}
