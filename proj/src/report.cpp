#include "qfermi/report.hpp"

namespace qfermi {

nlohmann::json IdentityReport::to_json() const {
  auto fails = nlohmann::json::array();
  for (const auto& f : failures) {
    fails.push_back({{"r", f.r}, {"n", f.n}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  }
  return {{"identity", identity},
          {"checked", checked},
          {"failures", std::move(fails)},
          {"pass", passed()}};
}

}  // namespace qfermi
