#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hmi {

// Vertices are labelled 1..kMaxVertices.
inline constexpr int kMaxVertices = 64;

// A subset of {1..64} stored as a bit set (vertex v is bit v-1). Used for
// faces of simplicial complexes, supports of square-free monomials, edge
// sets of networks and cliques of graphs.
class Face {
 public:
  constexpr Face() = default;
  Face(std::initializer_list<int> vertices);

  static constexpr Face from_mask(std::uint64_t mask) {
    Face f;
    f.bits_ = mask;
    return f;
  }
  static Face from_vertices(std::span<const int> vertices);
  // {1..p}
  static Face range(int p);
  // "134" or "1,3,4" or "{1,3,4}"; also accepts "{}" for the empty face.
  static Face parse(std::string_view text);

  std::uint64_t mask() const noexcept { return bits_; }
  bool empty() const noexcept { return bits_ == 0; }
  int size() const noexcept;
  bool contains(int v) const;
  int max_vertex() const noexcept;
  int min_vertex() const noexcept;
  std::vector<int> vertices() const;

  void insert(int v);
  void erase(int v);
  Face with(int v) const;
  Face without(int v) const;

  bool subset_of(Face other) const noexcept { return (bits_ & ~other.bits_) == 0; }
  bool intersects(Face other) const noexcept { return (bits_ & other.bits_) != 0; }

  friend constexpr Face operator|(Face a, Face b) { return from_mask(a.bits_ | b.bits_); }
  friend constexpr Face operator&(Face a, Face b) { return from_mask(a.bits_ & b.bits_); }
  // Set difference.
  friend constexpr Face operator-(Face a, Face b) { return from_mask(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(Face a, Face b) = default;

  // "123" when every vertex is a single digit, "1.10.12" otherwise, "{}" if empty.
  std::string to_string() const;

 private:
  std::uint64_t bits_ = 0;
};

// Order by size, then lexicographically on the sorted vertex list.
// {15,24,123,345} is in canonical order.
bool canonical_less(Face a, Face b);
void sort_canonical(std::vector<Face>& faces);

// "{15,24,123,345}"
std::string to_string(std::span<const Face> faces);

// Inclusion-maximal / inclusion-minimal members, deduplicated, canonical order.
std::vector<Face> maximal_elements(std::vector<Face> faces);
std::vector<Face> minimal_elements(std::vector<Face> faces);

// Inclusion-minimal sets meeting every edge of the hypergraph (Berge's
// incremental algorithm). No edges gives {{}}; an empty edge gives {}.
std::vector<Face> minimal_transversals(std::span<const Face> edges);

void check_vertex(int v);

}  // namespace hmi
