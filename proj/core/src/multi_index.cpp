#include "hmi/multi_index.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "hmi/error.hpp"

namespace hmi {

MultiIndex::MultiIndex(std::size_t p) : entries_(p, 0) {}

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int v : entries_)
    if (v < 0) throw Error("multi-index entries must be non-negative");
}

MultiIndex::MultiIndex(std::initializer_list<int> entries)
    : MultiIndex(std::vector<int>(entries)) {}

MultiIndex MultiIndex::unit(std::size_t p, std::size_t i) {
  if (i < 1 || i > p) throw Error("unit vector index out of range");
  MultiIndex e(p);
  e.entries_[i - 1] = 1;
  return e;
}

MultiIndex MultiIndex::parse(std::string_view text) {
  std::vector<int> entries;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  while (true) {
    skip_space();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw ParseError("expected non-negative integer in multi-index", pos);
    long value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      if (value > 1'000'000) throw ParseError("multi-index entry too large", pos);
      ++pos;
    }
    entries.push_back(static_cast<int>(value));
    skip_space();
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError("expected ',' in multi-index", pos);
    ++pos;
  }
  return MultiIndex(std::move(entries));
}

int MultiIndex::manhattan_norm() const noexcept {
  return std::accumulate(entries_.begin(), entries_.end(), 0);
}

int MultiIndex::plus_norm() const noexcept {
  int odd = static_cast<int>(std::count_if(entries_.begin(), entries_.end(),
                                           [](int v) { return v % 2 == 1; }));
  return manhattan_norm() + odd;
}

bool MultiIndex::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](int v) { return v == 0; });
}

bool MultiIndex::is_binary() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](int v) { return v <= 1; });
}

bool MultiIndex::divides(const MultiIndex& other) const {
  check_dimensions(other);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i] > other.entries_[i]) return false;
  return true;
}

MultiIndex& MultiIndex::operator+=(const MultiIndex& other) {
  check_dimensions(other);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

MultiIndex& MultiIndex::operator-=(const MultiIndex& other) {
  check_dimensions(other);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < other.entries_[i])
      throw Error("multi-index subtraction would go negative");
    entries_[i] -= other.entries_[i];
  }
  return *this;
}

std::string MultiIndex::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries_[i]);
  }
  return out;
}

std::string MultiIndex::compact() const {
  bool small = std::all_of(entries_.begin(), entries_.end(), [](int v) { return v < 10; });
  if (!small) return "{" + to_string() + "}";
  std::string out;
  for (int v : entries_) out += static_cast<char>('0' + v);
  return out;
}

void MultiIndex::check_dimensions(const MultiIndex& other) const {
  if (entries_.size() != other.entries_.size())
    throw Error("multi-index dimension mismatch: " + std::to_string(entries_.size()) +
                " vs " + std::to_string(other.entries_.size()));
}

}  // namespace hmi
