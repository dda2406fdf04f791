#include "sglab/error.hpp"

namespace sglab {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::invalid_order: return "invalid-order";
    case Errc::order_mismatch: return "order-mismatch";
    case Errc::division_by_zero: return "division-by-zero";
    case Errc::parse_error: return "parse-error";
    case Errc::degenerate_join: return "degenerate-join";
    case Errc::degenerate_frame: return "degenerate-frame";
    case Errc::not_on_curve: return "not-on-curve";
    case Errc::on_curve: return "on-curve";
    case Errc::component_balance: return "component-balance";
    case Errc::chart_construction: return "chart-construction";
    case Errc::kind_mismatch: return "kind-mismatch";
    case Errc::degenerate_input: return "degenerate-input";
    case Errc::domain: return "domain";
  }
  return "unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace sglab
