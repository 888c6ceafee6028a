#include "hefib/indices.hpp"

namespace hefib {

std::optional<std::string> SingularityIndices::validate() const {
  if (g < 2) return "fiber genus must be >= 2, got " + std::to_string(g);
  for (const auto& [j, v] : s) {
    if (j < 2 || j > g + 2) {
      return "index " + std::to_string(j) + " out of range [2, " +
             std::to_string(g + 2) + "]";
    }
    if (j >= 3 && v < 0) {
      return "s_" + std::to_string(j) + " must be >= 0, got " + v.str();
    }
  }
  if (g % 2 == 0 && at(g + 2) != 0) {
    return "s_" + std::to_string(g + 2) + " must vanish when g is even (g = " +
           std::to_string(g) + ")";
  }
  return std::nullopt;
}

void SingularityIndices::require_valid() const {
  if (auto err = validate()) throw ValidationError(*err);
}

}  // namespace hefib
