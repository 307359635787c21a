#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hmi {

// A vector k in N^p. Doubles as a derivative order D^k, a moment index m_k,
// a monomial exponent x^k and the multiplicity vector of a multiset.
//
// Ordering is lexicographic on the entries; indices of different dimension
// compare by length first only through std::vector's rules, so callers keep
// dimensions consistent within a container.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t p);
  explicit MultiIndex(std::vector<int> entries);
  MultiIndex(std::initializer_list<int> entries);

  // e_i with 1-based i.
  static MultiIndex unit(std::size_t p, std::size_t i);

  // "1,0,2" -> (1,0,2). Whitespace around entries is ignored.
  static MultiIndex parse(std::string_view text);

  std::size_t size() const noexcept { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  std::span<const int> entries() const noexcept { return entries_; }

  // ||k||_1
  int manhattan_norm() const noexcept;
  // ||k||_1^+ : ||k||_1 plus one for every odd entry.
  int plus_norm() const noexcept;

  bool is_zero() const noexcept;
  bool is_binary() const noexcept;
  // Componentwise <=.
  bool divides(const MultiIndex& other) const;

  MultiIndex& operator+=(const MultiIndex& other);
  // Throws if any entry would become negative.
  MultiIndex& operator-=(const MultiIndex& other);
  friend MultiIndex operator+(MultiIndex a, const MultiIndex& b) { return a += b; }
  friend MultiIndex operator-(MultiIndex a, const MultiIndex& b) { return a -= b; }

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
    return a.entries_ <=> b.entries_;
  }

  // "1,0,2"
  std::string to_string() const;
  // "102" when all entries are single digits, otherwise "{1,0,12}".
  std::string compact() const;

 private:
  void check_dimensions(const MultiIndex& other) const;

  std::vector<int> entries_;
};

}  // namespace hmi
