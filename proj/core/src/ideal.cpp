#include "hmi/ideal.hpp"

#include <algorithm>
#include <cctype>
#include <deque>

#include "hmi/error.hpp"

namespace hmi {

SquareFreeIdeal::SquareFreeIdeal(Face variables, std::vector<Face> generators) : variables_(variables) {
  for (Face g : generators)
    if (!g.subset_of(variables))
      throw Error("generator " + g.to_string() + " uses a variable outside " + variables.to_string());
  generators_ = minimal_elements(std::move(generators));
}

SquareFreeIdeal::SquareFreeIdeal(int p, std::vector<Face> generators)
    : SquareFreeIdeal(Face::range(p), std::move(generators)) {}

bool SquareFreeIdeal::is_unit() const noexcept {
  return generators_.size() == 1 && generators_.front().empty();
}

bool SquareFreeIdeal::contains(Face support) const {
  return std::any_of(generators_.begin(), generators_.end(),
                     [&](Face g) { return g.subset_of(support); });
}

bool SquareFreeIdeal::contains(const MultiIndex& exponent) const {
  Face support;
  for (std::size_t i = 0; i < exponent.size(); ++i)
    if (exponent[i] > 0) support.insert(static_cast<int>(i) + 1);
  return contains(support);
}

namespace {

std::string monomial_string(Face support) {
  if (support.empty()) return "1";
  std::string out;
  for (int v : support.vertices()) {
    if (!out.empty()) out += '*';
    out += "x" + std::to_string(v);
  }
  return out;
}

}  // namespace

std::string SquareFreeIdeal::to_string() const {
  if (generators_.empty()) return "0";
  std::string out;
  for (Face g : generators_) {
    if (!out.empty()) out += ", ";
    out += monomial_string(g);
  }
  return out;
}

Face parse_monomial(std::string_view text) {
  Face support;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (i < text.size() && text[i] == '1') {
    ++i;
    skip();
    if (i != text.size()) throw ParseError("unexpected text after monomial 1", i);
    return support;
  }
  while (true) {
    skip();
    if (i >= text.size() || text[i] != 'x') throw ParseError("expected variable x<n>", i);
    ++i;
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i || i - start > 3) throw ParseError("expected variable number", start);
    int v = std::stoi(std::string(text.substr(start, i - start)));
    if (v < 1 || v > kMaxVertices) throw ParseError("variable number out of range", start);
    if (support.contains(v)) throw ParseError("repeated variable; monomials must be square-free", start);
    support.insert(v);
    skip();
    if (i == text.size()) break;
    if (text[i] != '*') throw ParseError("expected '*'", i);
    ++i;
  }
  return support;
}

SquareFreeIdeal parse_ideal(std::string_view text, int p) {
  std::vector<Face> generators;
  std::string_view trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.remove_suffix(1);
  if (trimmed != "0") {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t stop = text.find(',', start);
      if (stop == std::string_view::npos) stop = text.size();
      try {
        generators.push_back(parse_monomial(text.substr(start, stop - start)));
      } catch (const ParseError& e) {
        throw ParseError(std::string(e.what()).substr(0, std::string(e.what()).find(" (at byte")),
                         start + e.offset());
      }
      start = stop + 1;
    }
  }
  for (Face g : generators)
    if (g.max_vertex() > p)
      throw Error("variable x" + std::to_string(g.max_vertex()) + " exceeds p=" + std::to_string(p));
  return SquareFreeIdeal(p, std::move(generators));
}

SquareFreeIdeal stanley_reisner(const SimplicialComplex& complex) {
  return SquareFreeIdeal(complex.ground(), minimal_nonfaces(complex));
}

SimplicialComplex complex_of(const SquareFreeIdeal& ideal) {
  // J is a face iff no generator lies inside J iff V \ J meets every generator.
  std::vector<Face> facets;
  for (Face t : minimal_transversals(ideal.generators())) facets.push_back(ideal.variables() - t);
  return SimplicialComplex(ideal.variables(), std::move(facets));
}

Graph generator_graph(const SquareFreeIdeal& ideal) {
  Graph g(ideal.variables());
  for (Face gen : ideal.generators()) {
    if (gen.size() != 2) throw Error("generator " + gen.to_string() + " is not of degree 2");
    g.add_edge(gen.min_vertex(), gen.max_vertex());
  }
  return g;
}

bool has_2linear_resolution(const SquareFreeIdeal& ideal, const ChordalityTest& chordal) {
  for (Face gen : ideal.generators())
    if (gen.size() != 2) return false;
  Graph complement = generator_graph(ideal).complement();
  return chordal ? chordal(complement) : is_chordal(complement);
}

Face FerrerShape::variables() const {
  Face out;
  for (int r : rows) out.insert(r);
  for (int c : columns) out.insert(c);
  return out;
}

SquareFreeIdeal FerrerShape::ideal() const {
  std::vector<Face> generators;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < lambda[i]; ++j) generators.push_back(Face{rows[i], columns[static_cast<std::size_t>(j)]});
  return SquareFreeIdeal(variables(), std::move(generators));
}

std::optional<FerrerShape> recognize_ferrer(const SquareFreeIdeal& ideal) {
  if (ideal.is_zero()) return std::nullopt;
  for (Face gen : ideal.generators())
    if (gen.size() != 2) return std::nullopt;
  Graph g = generator_graph(ideal);

  // Two-colour from the lowest non-isolated variable; a staircase table is
  // connected apart from empty columns, so one search must reach every edge.
  Face touched;
  for (Face gen : ideal.generators()) touched = touched | gen;
  std::vector<int> colour(kMaxVertices + 1, -1);
  int start = touched.min_vertex();
  colour[start] = 0;
  std::deque<int> queue{start};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int u : g.neighbors(v).vertices()) {
      if (colour[u] == -1) {
        colour[u] = 1 - colour[v];
        queue.push_back(u);
      } else if (colour[u] == colour[v]) {
        return std::nullopt;
      }
    }
  }
  FerrerShape shape;
  for (int v : touched.vertices()) {
    if (colour[v] == -1) return std::nullopt;
    (colour[v] == 0 ? shape.rows : shape.columns).push_back(v);
  }
  auto by_degree = [&](int a, int b) {
    int da = g.neighbors(a).size();
    int db = g.neighbors(b).size();
    return da != db ? da > db : a < b;
  };
  std::sort(shape.rows.begin(), shape.rows.end(), by_degree);
  std::sort(shape.columns.begin(), shape.columns.end(), by_degree);
  for (int r : shape.rows) {
    int length = g.neighbors(r).size();
    for (int j = 0; j < length; ++j)
      if (!g.adjacent(r, shape.columns[static_cast<std::size_t>(j)])) return std::nullopt;
    shape.lambda.push_back(length);
  }
  for (int v : (ideal.variables() - touched).vertices()) shape.columns.push_back(v);
  return shape;
}

Factorization ferrer_cliques(const FerrerShape& shape) {
  // Row i together with every row below it and the columns beyond lambda_i
  // is a clique of the complement graph (lambda is non-increasing).
  std::vector<Face> candidates;
  for (std::size_t i = 0; i < shape.rows.size(); ++i) {
    Face clique;
    for (std::size_t r = i; r < shape.rows.size(); ++r) clique.insert(shape.rows[r]);
    for (std::size_t c = static_cast<std::size_t>(shape.lambda[i]); c < shape.columns.size(); ++c)
      clique.insert(shape.columns[c]);
    candidates.push_back(clique);
  }
  Face all_columns;
  for (int c : shape.columns) all_columns.insert(c);
  if (!all_columns.empty()) candidates.push_back(all_columns);

  std::vector<Face> kept;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < candidates.size() && !dominated; ++j)
      dominated = j != i && candidates[i].subset_of(candidates[j]) &&
                  (candidates[i] != candidates[j] || j < i);
    if (!dominated) kept.push_back(candidates[i]);
  }
  return with_separators(std::move(kept));
}

}  // namespace hmi
