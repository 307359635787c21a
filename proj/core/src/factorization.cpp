#include "hmi/factorization.hpp"

namespace hmi {

bool Factorization::has_running_intersection() const {
  if (separators.size() + (cliques.empty() ? 0 : 1) != cliques.size()) return false;
  for (std::size_t j = 0; j < separators.size(); ++j) {
    bool covered = false;
    for (std::size_t i = 0; i <= j && !covered; ++i) covered = separators[j].subset_of(cliques[i]);
    if (!covered) return false;
  }
  return true;
}

std::string Factorization::to_string() const {
  std::string out;
  for (Face c : cliques) {
    if (!out.empty()) out += ' ';
    out += "f{" + c.to_string() + "}";
  }
  std::string below;
  for (Face s : separators) {
    if (s.empty()) continue;
    if (!below.empty()) below += ' ';
    below += "f{" + s.to_string() + "}";
  }
  if (!below.empty()) out += " / " + below;
  return out;
}

Factorization with_separators(std::vector<Face> cliques) {
  Factorization out;
  Face seen;
  for (std::size_t j = 0; j < cliques.size(); ++j) {
    if (j > 0) out.separators.push_back(cliques[j] & seen);
    seen = seen | cliques[j];
  }
  out.cliques = std::move(cliques);
  return out;
}

}  // namespace hmi
