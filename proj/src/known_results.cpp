#include "artin/known_results.hpp"

#include <json.hpp>

#include "known_results_data.hpp"

namespace artin {

const std::string& known_results_text() {
  static const std::string text = detail::known_results_json;
  return text;
}

std::optional<std::string> known_result_reference(const std::string& cls,
                                                  const std::string& property) {
  static const nlohmann::json table = nlohmann::json::parse(known_results_text());
  for (const auto& entry : table.at("classes")) {
    if (entry.at("class").get<std::string>() != cls) continue;
    const auto& props = entry.at("properties");
    if (auto it = props.find(property); it != props.end()) return it->get<std::string>();
  }
  return std::nullopt;
}

}  // namespace artin
