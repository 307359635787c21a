#include "hmi/face.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

#include "hmi/error.hpp"

namespace hmi {

void check_vertex(int v) {
  if (v < 1 || v > kMaxVertices)
    throw Error("vertex " + std::to_string(v) + " outside 1.." + std::to_string(kMaxVertices));
}

Face::Face(std::initializer_list<int> vertices) {
  for (int v : vertices) insert(v);
}

Face Face::from_vertices(std::span<const int> vertices) {
  Face f;
  for (int v : vertices) f.insert(v);
  return f;
}

Face Face::range(int p) {
  if (p < 0 || p > kMaxVertices)
    throw Error("vertex count " + std::to_string(p) + " outside 0.." + std::to_string(kMaxVertices));
  return from_mask(p == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << p) - 1);
}

Face Face::parse(std::string_view text) {
  std::string body;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) body += c;
  if (!body.empty() && body.front() == '{') {
    if (body.back() != '}') throw ParseError("unbalanced '{' in vertex set", 0);
    body = body.substr(1, body.size() - 2);
  }
  Face f;
  if (body.empty()) return f;
  bool separated = body.find_first_of(",.") != std::string::npos;
  if (!separated) {
    for (std::size_t i = 0; i < body.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(body[i])) || body[i] == '0')
        throw ParseError("expected vertex digit 1-9", i);
      f.insert(body[i] - '0');
    }
    return f;
  }
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t stop = body.find_first_of(",.", start);
    if (stop == std::string::npos) stop = body.size();
    std::string token = body.substr(start, stop - start);
    if (token.empty() || !std::all_of(token.begin(), token.end(),
                                      [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ParseError("expected vertex number", start);
    if (token.size() > 3) throw ParseError("vertex number too large", start);
    f.insert(std::stoi(token));
    start = stop + 1;
  }
  return f;
}

int Face::size() const noexcept { return std::popcount(bits_); }

bool Face::contains(int v) const {
  check_vertex(v);
  return (bits_ >> (v - 1)) & 1U;
}

int Face::max_vertex() const noexcept { return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_); }

int Face::min_vertex() const noexcept { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }

std::vector<int> Face::vertices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) out.push_back(std::countr_zero(rest) + 1);
  return out;
}

void Face::insert(int v) {
  check_vertex(v);
  bits_ |= std::uint64_t{1} << (v - 1);
}

void Face::erase(int v) {
  check_vertex(v);
  bits_ &= ~(std::uint64_t{1} << (v - 1));
}

Face Face::with(int v) const {
  Face f = *this;
  f.insert(v);
  return f;
}

Face Face::without(int v) const {
  Face f = *this;
  f.erase(v);
  return f;
}

std::string Face::to_string() const {
  if (empty()) return "{}";
  bool small = max_vertex() <= 9;
  std::string out;
  for (int v : vertices()) {
    if (!small && !out.empty()) out += '.';
    out += std::to_string(v);
  }
  return out;
}

bool canonical_less(Face a, Face b) {
  if (a.size() != b.size()) return a.size() < b.size();
  // With equal sizes, the lexicographically smaller vertex list is the one
  // whose lowest differing vertex belongs to it.
  std::uint64_t diff = a.mask() ^ b.mask();
  if (diff == 0) return false;
  std::uint64_t lowest = diff & (~diff + 1);
  return (a.mask() & lowest) != 0;
}

void sort_canonical(std::vector<Face>& faces) {
  std::sort(faces.begin(), faces.end(), canonical_less);
}

std::string to_string(std::span<const Face> faces) {
  std::string out = "{";
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (i) out += ',';
    out += faces[i].to_string();
  }
  return out + "}";
}

std::vector<Face> maximal_elements(std::vector<Face> faces) {
  // Larger sets first so a candidate only needs checking against kept ones.
  std::sort(faces.begin(), faces.end(), [](Face a, Face b) { return a.size() > b.size(); });
  std::vector<Face> kept;
  for (Face f : faces) {
    bool dominated = std::any_of(kept.begin(), kept.end(), [&](Face k) { return f.subset_of(k); });
    if (!dominated) kept.push_back(f);
  }
  sort_canonical(kept);
  return kept;
}

std::vector<Face> minimal_elements(std::vector<Face> faces) {
  std::sort(faces.begin(), faces.end(), [](Face a, Face b) { return a.size() < b.size(); });
  std::vector<Face> kept;
  for (Face f : faces) {
    bool dominated = std::any_of(kept.begin(), kept.end(), [&](Face k) { return k.subset_of(f); });
    if (!dominated) kept.push_back(f);
  }
  sort_canonical(kept);
  return kept;
}

std::vector<Face> minimal_transversals(std::span<const Face> edges) {
  std::vector<Face> ordered = minimal_elements(std::vector<Face>(edges.begin(), edges.end()));
  std::vector<Face> current{Face{}};
  for (Face edge : ordered) {
    if (edge.empty()) return {};
    std::vector<Face> next;
    next.reserve(current.size() * 2);
    for (Face t : current) {
      if (t.intersects(edge)) {
        next.push_back(t);
      } else {
        for (int v : edge.vertices()) next.push_back(t.with(v));
      }
    }
    current = minimal_elements(std::move(next));
  }
  return current;
}

}  // namespace hmi
