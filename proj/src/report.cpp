#include "gl22/report.hpp"

#include <json.hpp>

namespace gl22 {

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = schema;
  j["tool"] = tool;
  j["suite"] = suite;
  j["seed"] = seed;
  j["samples"] = samples;
  j["pass"] = all_pass();
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json jc;
    jc["name"] = c.name;
    jc["residual"] = c.residual;
    jc["threshold"] = c.threshold;
    jc["pass"] = c.pass;
    j["checks"].push_back(jc);
  }
  return j.dump(2);
}

}  // namespace gl22
