#include "unibound/distribution_json.hpp"

#include <fstream>
#include <sstream>

#include "unibound/errors.hpp"

namespace unibound {
namespace {

std::vector<double> number_array(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  const auto& arr = j.at(key);
  if (!arr.is_array()) throw InputError(std::string("field \"") + key + "\" must be an array");
  std::vector<double> out;
  out.reserve(arr.size());
  for (const auto& v : arr) {
    if (!v.is_number()) throw InputError(std::string("field \"") + key + "\" must hold numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace

nlohmann::json to_json(const Distribution& dist) {
  if (const auto* pmf = std::get_if<DiscretePmf>(&dist)) {
    return {{"type", "discrete"}, {"points", pmf->points()}, {"probs", pmf->probs()}};
  }
  const auto& density = std::get<StepDensity>(dist);
  return {{"type", "piecewise"},
          {"breakpoints", density.breakpoints()},
          {"heights", density.heights()}};
}

Distribution distribution_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("distribution must be a JSON object");
  if (!j.contains("type") || !j.at("type").is_string()) {
    throw InputError("distribution needs a string field \"type\"");
  }
  const auto type = j.at("type").get<std::string>();
  if (type == "discrete") return DiscretePmf(number_array(j, "points"), number_array(j, "probs"));
  if (type == "piecewise") {
    return StepDensity(number_array(j, "breakpoints"), number_array(j, "heights"));
  }
  throw InputError("unknown distribution type \"" + type + "\"");
}

Distribution parse_distribution(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return distribution_from_json(j);
}

Distribution load_distribution(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_distribution(buf.str());
}

}  // namespace unibound
