#include "zkq/io.hpp"

#include "zkq/parse.hpp"

namespace zkq {

ordered_json json_of(const Rational& r) { return r.str(); }

ordered_json json_of(const LaurentPoly& p) {
  ordered_json terms = ordered_json::array();
  for (const auto& [m, c] : p.terms()) {
    terms.push_back({{"z", m.l}, {"u", m.i}, {"c", c.str()}});
  }
  return {{"expr", to_string(p)}, {"terms", std::move(terms)}};
}

ordered_json json_of(const HbarSeries& s) {
  ordered_json orders = ordered_json::array();
  for (int n = 0; n <= s.order(); ++n) {
    if (s.coeff(n).is_zero() && n > 0) continue;
    ordered_json entry = json_of(s.coeff(n));
    orders.push_back({{"h", n}, {"expr", entry["expr"]}, {"terms", entry["terms"]}});
  }
  return {{"expr", to_string(s)}, {"orders", std::move(orders)}};
}

ordered_json make_envelope(const std::string& command, ordered_json payload,
                           const std::vector<std::string>& warnings) {
  ordered_json env;
  env["schema_version"] = "1";
  env["command"] = command;
  env["payload"] = std::move(payload);
  env["warnings"] = warnings;
  return env;
}

std::string render(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace zkq
