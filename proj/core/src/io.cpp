#include "hmi/io.hpp"

#include <fstream>
#include <sstream>

#include "hmi/error.hpp"

namespace hmi {

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte == 0 ? 0 : e.byte - 1);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw Error("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw Error(std::string("missing key \"") + key + "\"");
  return *it;
}

int as_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw Error(what + " must be an integer");
  return j.get<int>();
}

double as_double(const Json& j, const std::string& what) {
  if (!j.is_number()) throw Error(what + " must be a number");
  return j.get<double>();
}

Face face_from_json(const Json& j, const std::string& what) {
  if (!j.is_array()) throw Error(what + " must be an array of vertices");
  Face f;
  for (const Json& v : j) {
    int x = as_int(v, what + " entry");
    if (x < 1 || x > kMaxVertices) throw Error(what + " vertex " + std::to_string(x) + " out of range");
    if (f.contains(x)) throw Error(what + " repeats vertex " + std::to_string(x));
    f.insert(x);
  }
  return f;
}

Json face_to_json(Face f) { return f.vertices(); }

Face ground_from_json(const Json& j) {
  if (j.contains("vertices")) {
    Face ground = face_from_json(j["vertices"], "vertices");
    if (j.contains("p") && as_int(j["p"], "p") < ground.max_vertex()) throw Error("vertices exceed p");
    return ground;
  }
  int p = as_int(field(j, "p"), "p");
  if (p < 1 || p > kMaxVertices) throw Error("p must be in 1.." + std::to_string(kMaxVertices));
  return Face::range(p);
}

void write_ground(Json& out, Face ground) {
  out["p"] = ground.max_vertex();
  if (ground != Face::range(ground.max_vertex())) out["vertices"] = face_to_json(ground);
}

Rational rational_from_json(const Json& j, const std::string& what) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(BigInt(j.dump()));
  if (j.is_number()) return parse_rational(j.dump());
  throw Error(what + " must be a number or a rational string");
}

}  // namespace

Json to_json(const SimplicialComplex& complex) {
  Json out;
  write_ground(out, complex.ground());
  Json facets = Json::array();
  for (Face f : complex.facets()) facets.push_back(face_to_json(f));
  out["facets"] = facets;
  return out;
}

SimplicialComplex complex_from_json(const Json& j) {
  Face ground = ground_from_json(j);
  const Json& list = field(j, "facets");
  if (!list.is_array()) throw Error("facets must be an array");
  std::vector<Face> faces;
  for (const Json& f : list) faces.push_back(face_from_json(f, "facet"));
  return SimplicialComplex(ground, std::move(faces));
}

Json to_json(const SquareFreeIdeal& ideal) {
  Json out;
  write_ground(out, ideal.variables());
  Json gens = Json::array();
  for (Face g : ideal.generators()) gens.push_back(face_to_json(g));
  out["generators"] = gens;
  return out;
}

SquareFreeIdeal ideal_from_json(const Json& j) {
  Face vars = ground_from_json(j);
  const Json& list = field(j, "generators");
  if (!list.is_array()) throw Error("generators must be an array");
  std::vector<Face> gens;
  for (const Json& g : list) gens.push_back(face_from_json(g, "generator"));
  return SquareFreeIdeal(vars, std::move(gens));
}

Json to_json(const Factorization& factorization) {
  Json out;
  Json cliques = Json::array();
  for (Face c : factorization.cliques) cliques.push_back(face_to_json(c));
  Json separators = Json::array();
  for (Face s : factorization.separators) separators.push_back(face_to_json(s));
  out["cliques"] = cliques;
  out["separators"] = separators;
  return out;
}

Json to_json(const GaussianSpec& spec) {
  Json out;
  out["mean"] = std::vector<double>(spec.mean.data(), spec.mean.data() + spec.mean.size());
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < spec.precision.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < spec.precision.cols(); ++k) row.push_back(spec.precision(i, k));
    rows.push_back(row);
  }
  out["precision"] = rows;
  return out;
}

GaussianSpec gaussian_from_json(const Json& j) {
  const Json& mean = field(j, "mean");
  const Json& precision = field(j, "precision");
  if (!mean.is_array() || !precision.is_array()) throw Error("mean and precision must be arrays");
  GaussianSpec spec;
  auto p = static_cast<Eigen::Index>(mean.size());
  spec.mean.resize(p);
  for (Eigen::Index i = 0; i < p; ++i) spec.mean(i) = as_double(mean[static_cast<std::size_t>(i)], "mean entry");
  if (static_cast<Eigen::Index>(precision.size()) != p) throw Error("precision must have one row per mean entry");
  spec.precision.resize(p, p);
  for (Eigen::Index i = 0; i < p; ++i) {
    const Json& row = precision[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != p) throw Error("precision must be square");
    for (Eigen::Index k = 0; k < p; ++k) spec.precision(i, k) = as_double(row[static_cast<std::size_t>(k)], "precision entry");
  }
  spec.validate();
  return spec;
}

Json to_json(const MECSpec& spec) {
  Json out;
  out["p"] = spec.p;
  Json coeffs = Json::object();
  for (auto it = spec.coeffs.rbegin(); it != spec.coeffs.rend(); ++it)
    coeffs[it->first.compact()] = to_string(it->second);
  out["coeffs"] = coeffs;
  return out;
}

MECSpec mec_from_json(const Json& j) {
  MECSpec spec;
  int p = as_int(field(j, "p"), "p");
  if (p < 1 || p > kMaxVertices) throw Error("p must be in 1.." + std::to_string(kMaxVertices));
  spec.p = static_cast<std::size_t>(p);
  const Json& coeffs = field(j, "coeffs");
  if (!coeffs.is_object()) throw Error("coeffs must be an object");
  for (const auto& [key, value] : coeffs.items()) {
    MultiIndex s;
    if (key.find(',') != std::string::npos) {
      s = MultiIndex::parse(key);
    } else {
      std::vector<int> digits;
      for (char c : key) {
        if (c < '0' || c > '9') throw Error("MEC index \"" + key + "\" is not a digit string");
        digits.push_back(c - '0');
      }
      s = MultiIndex(std::move(digits));
    }
    Rational a = rational_from_json(value, "MEC coefficient");
    if (!spec.coeffs.emplace(s, a).second) throw Error("MEC index \"" + key + "\" repeated");
  }
  spec.validate();
  return spec;
}

Json to_json(const Network& network) {
  Json out;
  out["nodes"] = network.nodes();
  Json edges = Json::array();
  for (const NetworkEdge& e : network.edges()) edges.push_back(Json{{"id", e.id}, {"u", e.u}, {"v", e.v}});
  out["edges"] = edges;
  out["input"] = network.input();
  out["output"] = network.output();
  return out;
}

Network network_from_json(const Json& j) {
  const Json& nodes = field(j, "nodes");
  const Json& edges = field(j, "edges");
  if (!nodes.is_array() || !edges.is_array()) throw Error("nodes and edges must be arrays");
  std::vector<int> node_list;
  for (const Json& n : nodes) node_list.push_back(as_int(n, "node"));
  std::vector<NetworkEdge> edge_list;
  for (const Json& e : edges)
    edge_list.push_back(NetworkEdge{as_int(field(e, "id"), "edge id"), as_int(field(e, "u"), "edge u"),
                                    as_int(field(e, "v"), "edge v")});
  return Network(std::move(node_list), std::move(edge_list), as_int(field(j, "input"), "input"),
                 as_int(field(j, "output"), "output"));
}

ExactMomentTable moments_from_json(const Json& j) {
  if (!j.is_object() || j.empty()) throw Error("moment table must be a non-empty JSON object");
  std::size_t p = MultiIndex::parse(j.begin().key()).size();
  ExactMomentTable table(p);
  for (const auto& [key, value] : j.items()) table.set(MultiIndex::parse(key), rational_from_json(value, "moment " + key));
  return table;
}

Json to_json(const ExactMomentTable& table) {
  Json out = Json::object();
  for (const auto& [k, v] : table) out[k.to_string()] = to_string(v);
  return out;
}

DensityOracle density_from_json(const Json& j, const IntegrationOptions& options) {
  std::string family = j.is_object() && j.contains("family") ? j["family"].get<std::string>() : "gaussian";
  if (family == "gaussian") return gaussian_density(gaussian_from_json(j));
  if (family == "mec") {
    const Json& box = field(j, "box");
    if (!box.is_array() || box.size() != 2) throw Error("box must be [lower, upper]");
    return mec_density(mec_from_json(j), as_double(box[0], "box lower"), as_double(box[1], "box upper"), options);
  }
  if (family == "product") {
    std::vector<Univariate> factors;
    for (const Json& f : field(j, "factors")) {
      Univariate u;
      std::string kind = field(f, "kind").get<std::string>();
      if (kind == "normal") {
        u.kind = Univariate::Kind::Normal;
      } else if (kind == "logistic") {
        u.kind = Univariate::Kind::Logistic;
      } else {
        throw Error("unknown univariate kind \"" + kind + "\"");
      }
      u.location = f.contains("location") ? as_double(f["location"], "location") : 0.0;
      u.scale = f.contains("scale") ? as_double(f["scale"], "scale") : 1.0;
      factors.push_back(u);
    }
    return product_density(std::move(factors));
  }
  throw Error("unknown density family \"" + family + "\"");
}

}  // namespace hmi
