#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "sglab/addcomb.hpp"
#include "sglab/config.hpp"
#include "sglab/curve.hpp"

namespace sglab {

// Line-oriented exchange formats under a versioned header.  Every scalar is
// rendered through the exact emitters, so parse(emit(x)) = x field by field.
// Unknown keys are rejected, naming the format version that refused them.

struct ConfigFile {
  Configuration config;
  std::vector<Curve> curves;
};

struct ValuesFile {
  std::vector<CycNum> values;
};

struct PairsFile {
  std::vector<std::pair<CycNum, CycNum>> pairs;
};

ConfigFile parse_config_file(std::istream& in);
void emit_config_file(std::ostream& out, const ConfigFile& f);

ValuesFile parse_values_file(std::istream& in);
void emit_values_file(std::ostream& out, const ValuesFile& f);

PairsFile parse_pairs_file(std::istream& in);
void emit_pairs_file(std::ostream& out, const PairsFile& f);

// Path wrappers; a path that cannot be opened is a usage-level error.
ConfigFile load_config_file(const std::string& path);
void save_config_file(const std::string& path, const ConfigFile& f);
ValuesFile load_values_file(const std::string& path);
void save_values_file(const std::string& path, const ValuesFile& f);
PairsFile load_pairs_file(const std::string& path);
void save_pairs_file(const std::string& path, const PairsFile& f);

// Reports are key/value rows in emission order: identical rows give
// byte-identical output.
using ReportRow = std::pair<std::string, std::string>;
void emit_report(std::ostream& out, const std::vector<ReportRow>& rows);

}  // namespace sglab
