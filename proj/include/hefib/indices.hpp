#pragma once

#include <map>
#include <optional>
#include <string>

#include "hefib/rational.hpp"

namespace hefib {

// Singularity index data of a relatively minimal hyperelliptic fibration of
// fiber genus g: a sparse vector s_j indexed by j in {2, ..., g+2}.
//
// Conventions enforced by validate():
//   * g >= 2;
//   * s_2 may be any integer (it is an intersection number, not a count);
//   * s_j >= 0 for j >= 3 (these count branch-curve singularities);
//   * s_{g+2} = 0 when g is even;
//   * absent entries mean 0.
//
// Index-slot convention used throughout the formula engine: the even-index
// sums run over j = 2k with 2 <= k <= floor((g+1)/2), so they stop at
// j <= g+1 and never touch j = g+2.  Odd-index sums come in two flavors:
// the n-based formulas run k up to floor((g+1)/2), so for odd g their top
// term addresses j = g+2; the s_2-based formulas run k up to floor(g/2)
// (j <= g+1) and carry s_{g+2} in a dedicated term instead.  Both address
// the same stored slot s_{g+2}.
struct SingularityIndices {
  int g = 2;
  std::map<int, Int> s;

  Int at(int j) const {
    auto it = s.find(j);
    return it == s.end() ? Int(0) : it->second;
  }

  void set(int j, Int v) {
    if (v == 0) {
      s.erase(j);
    } else {
      s[j] = std::move(v);
    }
  }

  // Error message if the data is malformed, std::nullopt when valid.
  std::optional<std::string> validate() const;

  // Throwing variant of validate().
  void require_valid() const;

  bool operator==(const SingularityIndices&) const = default;
};

}  // namespace hefib
