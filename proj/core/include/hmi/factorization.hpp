#pragma once

#include <string>
#include <vector>

#include "hmi/face.hpp"

namespace hmi {

// f = prod f_{C_j} / prod f_{S_j}. separators[j-1] = C_j meet (C_1 u ... u C_{j-1}),
// so there is one separator per clique after the first; empty separators are
// kept.
struct Factorization {
  std::vector<Face> cliques;
  std::vector<Face> separators;

  // Each separator lies inside a single earlier clique.
  bool has_running_intersection() const;

  // "f{123} f{234} f{345} / f{23} f{34}"; empty separators are not printed.
  std::string to_string() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

// Separators for cliques taken in the given order.
Factorization with_separators(std::vector<Face> cliques);

}  // namespace hmi
