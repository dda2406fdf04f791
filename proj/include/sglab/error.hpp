#pragma once

#include <stdexcept>
#include <string>

namespace sglab {

// Failure taxonomy shared by the whole library. Parse/usage problems map to
// CLI exit code 1, everything else to exit code 2.
enum class Errc {
  invalid_order,
  order_mismatch,
  division_by_zero,
  parse_error,
  degenerate_join,
  degenerate_frame,
  not_on_curve,
  on_curve,
  component_balance,
  chart_construction,
  kind_mismatch,
  degenerate_input,
  domain,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& what);

}  // namespace sglab
