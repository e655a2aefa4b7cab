#pragma once

#include <optional>
#include <string>

namespace artin {

/// Literature reference for a (class, property) pair from the bundled table,
/// e.g. ("fc", "center_trivial").  Empty optional when the table records no
/// such result.
std::optional<std::string> known_result_reference(const std::string& cls,
                                                  const std::string& property);

/// Raw JSON text of the bundled table (same content as data/known_results.json).
const std::string& known_results_text();

}  // namespace artin
