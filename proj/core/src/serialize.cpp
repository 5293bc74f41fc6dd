#include "tlfrac/serialize.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace tlfrac {

std::string expansion_to_json(const HolderExpansion& x) {
  nlohmann::json j;
  j["H"] = x.hurst();
  j["f0"] = x.f0();
  j["f1"] = x.f1();
  auto levels = nlohmann::json::array();
  for (int m = 0; m <= x.max_level(); ++m) {
    levels.push_back(std::vector<double>(x.level(m).begin(), x.level(m).end()));
  }
  j["levels"] = std::move(levels);
  return j.dump();
}

HolderExpansion expansion_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("expansion JSON parse failed: ") + e.what());
  }
  if (!j.is_object() || !j.contains("H") || !j.contains("f0") || !j.contains("f1") ||
      !j.contains("levels") || !j["levels"].is_array()) {
    throw std::invalid_argument("expansion JSON must hold H, f0, f1 and a levels array");
  }
  std::vector<std::vector<double>> levels;
  for (const auto& lvl : j["levels"]) {
    if (!lvl.is_array()) throw std::invalid_argument("levels entries must be arrays");
    levels.push_back(lvl.get<std::vector<double>>());
  }
  try {
    return HolderExpansion(j["H"].get<double>(), j["f0"].get<double>(),
                           j["f1"].get<double>(), std::move(levels));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("expansion JSON field type: ") + e.what());
  }
}

void save_expansion(const HolderExpansion& x, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << expansion_to_json(x) << '\n';
  if (!out) throw std::runtime_error("write failed: " + path);
}

HolderExpansion load_expansion(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return expansion_from_json(text);
}

}  // namespace tlfrac
