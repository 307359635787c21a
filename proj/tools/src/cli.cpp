#include "hmi_cli/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iomanip>
#include <optional>
#include <sstream>

#include "hmi/diffcum.hpp"
#include "hmi/error.hpp"
#include "hmi/hierarchy.hpp"
#include "hmi/ideal.hpp"
#include "hmi/io.hpp"
#include "hmi/logdensity.hpp"
#include "hmi/nerve.hpp"
#include "hmi/network.hpp"
#include "hmi/partitions.hpp"
#include "hmi/simplicial.hpp"

namespace hmi::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  int threads = 1;

  std::string complex_path;
  std::string ideal_path;
  std::string generators;
  int p = 0;
  std::string strip;
  bool sequential = false;
  std::string network_path;
  std::string points_path;
  double radius = -1;
  std::string radii;
  int max_dim = -1;
  std::string k;
  std::string partition;
  std::string moments_path;
  std::string poly;
  std::string n;
  int total_degree = 0;
  std::string gaussian_path;
  double tolerance = 0;
  std::string mec_path;
  std::string density_path;
  std::string xi;
  double eps = 0;
  bool edge = false;
  std::string eps_seq = "0.4,0.2,0.1,0.05";
  int nodes = 16;
  bool monte_carlo = false;
  std::size_t samples = 200000;
  double step = 1e-3;
  std::string method = "partition";
  std::string set_i;
  std::string set_j;
  std::string set_k;
  bool pairwise = false;
};

std::string fmt(double x) {
  std::ostringstream s;
  s << std::setprecision(12) << x;
  return s.str();
}

std::string join(const std::vector<int>& xs, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + std::to_string(xs[i]);
  return out;
}

std::vector<double> parse_doubles(const std::string& text, const char* what) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find(',', start);
    if (stop == std::string::npos) stop = text.size();
    std::string cell = text.substr(start, stop - start);
    try {
      std::size_t used = 0;
      out.push_back(std::stod(cell, &used));
      if (cell.find_first_not_of(' ', used) != std::string::npos) throw std::invalid_argument(cell);
    } catch (const std::exception&) {
      throw ParseError(std::string("bad number in ") + what, start);
    }
    start = stop + 1;
  }
  return out;
}


SimplicialComplex load_complex(const Options& o) {
  if (o.complex_path.empty()) throw UsageError("--complex is required");
  return complex_from_json(parse_json(read_file(o.complex_path)));
}

SquareFreeIdeal load_ideal(const Options& o) {
  if (!o.ideal_path.empty()) return ideal_from_json(parse_json(read_file(o.ideal_path)));
  if (!o.generators.empty()) {
    if (o.p < 1) throw UsageError("--generators needs --p");
    return parse_ideal(o.generators, o.p);
  }
  throw UsageError("give --ideal FILE or --generators TEXT --p N");
}

Network load_network(const Options& o) {
  if (o.network_path.empty()) throw UsageError("--network is required");
  return network_from_json(parse_json(read_file(o.network_path)));
}

MultiIndex load_k(const Options& o) {
  if (o.k.empty()) throw UsageError("--k is required");
  return MultiIndex::parse(o.k);
}

SparsePolynomial load_poly(const Options& o) {
  if (o.poly.empty()) throw UsageError("--poly is required");
  if (o.p < 1) throw UsageError("--poly needs --p");
  return parse_poly(o.poly, static_cast<std::size_t>(o.p));
}

IntegrationOptions integration(const Options& o) {
  IntegrationOptions opts;
  opts.nodes = o.nodes;
  opts.threads = o.threads;
  opts.monte_carlo = o.monte_carlo;
  opts.samples = o.samples;
  if (const char* seed = std::getenv("HMI_SEED")) {
    try {
      opts.seed = std::stoull(seed);
    } catch (const std::exception&) {
      throw UsageError("HMI_SEED must be a non-negative integer");
    }
  }
  return opts;
}

DensityOracle load_density(const Options& o) {
  if (o.density_path.empty()) throw UsageError("--density is required");
  return density_from_json(parse_json(read_file(o.density_path)), integration(o));
}

std::vector<double> load_xi(const Options& o) {
  if (o.xi.empty()) throw UsageError("--xi is required");
  return parse_doubles(o.xi, "--xi");
}

FiniteDifferenceOptions differences(const Options& o) {
  FiniteDifferenceOptions opts;
  opts.relative_step = o.step;
  return opts;
}

Json faces_json(const std::vector<Face>& faces) {
  Json out = Json::array();
  for (Face f : faces) out.push_back(f.vertices());
  return out;
}

Json exponent_json(const MultiIndex& k) { return std::vector<int>(k.entries().begin(), k.entries().end()); }

Json poly_json(const SparsePolynomial& g) {
  Json out;
  out["p"] = g.dimension();
  Json terms = Json::array();
  for (const auto& [e, c] : g.terms()) terms.push_back(Json{{"exponent", exponent_json(e)}, {"coeff", to_string(c)}});
  out["terms"] = terms;
  out["text"] = g.to_string();
  return out;
}

Partition parse_partition(const std::string& text, int p) {
  std::string body;
  for (char c : text)
    if (c != '{' && c != '}' && c != ' ') body += c;
  std::vector<std::vector<int>> blocks;
  int max_var = 0;
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t stop = body.find('|', start);
    if (stop == std::string::npos) stop = body.size();
    std::vector<int> vars;
    for (std::size_t i = start; i < stop; ++i) {
      if (body[i] < '1' || body[i] > '9') throw ParseError("partition blocks are digit strings like 13|3", i);
      vars.push_back(body[i] - '0');
      max_var = std::max(max_var, vars.back());
    }
    if (vars.empty()) throw ParseError("empty block in partition", start);
    blocks.push_back(vars);
    start = stop + 1;
  }
  if (p == 0) p = max_var;
  if (max_var > p) throw Error("partition uses variable " + std::to_string(max_var) + " beyond p");
  Partition out;
  for (const auto& vars : blocks) {
    std::vector<int> e(static_cast<std::size_t>(p), 0);
    for (int v : vars) ++e[static_cast<std::size_t>(v - 1)];
    out.blocks.emplace_back(std::move(e));
  }
  std::sort(out.blocks.begin(), out.blocks.end(), std::greater<>());
  return out;
}

void emit(std::ostream& out, const Options& o, const std::string& text, const Json& json) {
  if (o.format == "json") {
    out << json.dump(2) << "\n";
  } else {
    out << text << "\n";
  }
}

std::string report_text(const EstimateReport& r) {
  std::string out = r.quantity + " k=" + r.k.to_string() + " method=" + r.method + " value=" + fmt(r.value);
  if (r.metadata.contains("scaled")) out += " scaled=" + fmt(r.metadata["scaled"].get<double>());
  return out;
}

int dispatch(const std::string& cmd, const Options& o, std::ostream& out) {
  if (cmd == "sr") {
    SquareFreeIdeal ideal = stanley_reisner(load_complex(o));
    emit(out, o, ideal.to_string(), to_json(ideal));
  } else if (cmd == "complex-of") {
    SimplicialComplex complex = complex_of(load_ideal(o));
    emit(out, o, complex.to_string(), to_json(complex));
  } else if (cmd == "dual") {
    SimplicialComplex dual = alexander_dual(load_complex(o));
    emit(out, o, dual.to_string(), to_json(dual));
  } else if (cmd == "decompose") {
    auto witness = decomposition_witness(load_complex(o));
    Json j;
    j["decomposable"] = !witness.has_value();
    if (witness) {
      j["witness"] = witness->kind == DecompositionWitness::Kind::ChordlessCycle
                         ? Json{{"chordless_cycle", witness->cycle}}
                         : Json{{"nonface", witness->nonface.vertices()}};
    }
    emit(out, o, witness ? "not decomposable: " + witness->to_string() : "decomposable", j);
  } else if (cmd == "factorize") {
    Factorization f = factorize(load_complex(o));
    emit(out, o, f.to_string(), to_json(f));
  } else if (cmd == "marginalize") {
    if (o.strip.empty()) throw UsageError("--strip is required");
    Face strip = Face::parse(o.strip);
    std::vector<int> order = strip.vertices();
    if (!o.ideal_path.empty() || !o.generators.empty()) {
      SquareFreeIdeal ideal = load_ideal(o);
      ideal = ideal_marginalize(ideal, strip);
      Json j = to_json(ideal);
      emit(out, o, ideal.to_string() + " over {" + ideal.variables().to_string() + "}", j);
      return kExitOk;
    }
    SimplicialComplex complex = load_complex(o);
    if (o.sequential) {
      for (int v : order) complex = marginalize(complex, Face{v});
    } else {
      complex = marginalize(complex, strip);
    }
    emit(out, o, complex.to_string() + " over {" + complex.ground().to_string() + "}", to_json(complex));
  } else if (cmd == "linear-resolution") {
    bool linear = has_2linear_resolution(load_ideal(o));
    emit(out, o, linear ? "2-linear" : "not 2-linear", Json{{"two_linear", linear}});
  } else if (cmd == "ferrer") {
    auto shape = recognize_ferrer(load_ideal(o));
    if (!shape) {
      emit(out, o, "not Ferrer", Json{{"ferrer", false}});
      return kExitOk;
    }
    Factorization cliques = ferrer_cliques(*shape);
    std::string text = "rows " + join(shape->rows) + "\ncolumns " + join(shape->columns) + "\nlambda " +
                       join(shape->lambda) + "\ncliques " + to_string(cliques.cliques) + "\nseparators " +
                       to_string(cliques.separators);
    Json j;
    j["ferrer"] = true;
    j["rows"] = shape->rows;
    j["columns"] = shape->columns;
    j["lambda"] = shape->lambda;
    j["cliques"] = faces_json(cliques.cliques);
    j["separators"] = faces_json(cliques.separators);
    emit(out, o, text, j);
  } else if (cmd == "network-cuts" || cmd == "network-paths") {
    Network net = load_network(o);
    std::vector<Face> sets = cmd == "network-cuts" ? minimal_cuts(net) : minimal_paths(net);
    emit(out, o, to_string(sets), faces_json(sets));
  } else if (cmd == "network-ideals") {
    Network net = load_network(o);
    SquareFreeIdeal cuts = cut_ideal(net);
    SquareFreeIdeal paths = path_ideal(net);
    emit(out, o, "cut ideal: " + cuts.to_string() + "\npath ideal: " + paths.to_string(),
         Json{{"cut_ideal", to_json(cuts)}, {"path_ideal", to_json(paths)}});
  } else if (cmd == "network-duality") {
    DualityReport r = verify_cut_path_duality(load_network(o));
    auto word = [](bool b) { return b ? std::string("pass") : std::string("fail"); };
    std::string text = "cut complex " + r.cut_complex.to_string() + "\npath complex " + r.path_complex.to_string() +
                       "\ncut facets are path complements: " + word(r.cut_facets_are_path_complements) +
                       "\ndual of cut complex is path complex: " + word(r.dual_is_path_complex) +
                       "\ndual is an involution: " + word(r.dual_is_involution);
    Json j;
    j["cut_complex"] = to_json(r.cut_complex);
    j["path_complex"] = to_json(r.path_complex);
    j["cut_facets_are_path_complements"] = r.cut_facets_are_path_complements;
    j["dual_is_path_complex"] = r.dual_is_path_complex;
    j["dual_is_involution"] = r.dual_is_involution;
    emit(out, o, text, j);
    return r.ok() ? kExitOk : kExitDomainError;
  } else if (cmd == "nerve") {
    if (o.points_path.empty()) throw UsageError("--points is required");
    PointCloud cloud = parse_point_csv(read_file(o.points_path));
    NerveOptions opts;
    opts.max_dim = o.max_dim;
    opts.threads = o.threads;
    if (!o.radii.empty()) {
      std::vector<double> radii = parse_doubles(o.radii, "--filtration");
      std::string text;
      Json j = Json::array();
      for (const FiltrationStep& s : filtration(cloud, radii, opts)) {
        if (!text.empty()) text += "\n";
        text += "r=" + fmt(s.radius) + " " + s.complex.to_string() + (s.decomposable ? " decomposable" : " not-decomposable");
        j.push_back(Json{{"radius", s.radius}, {"complex", to_json(s.complex)}, {"decomposable", s.decomposable}});
      }
      emit(out, o, text, j);
    } else {
      if (o.radius < 0) throw UsageError("give --radius R or --filtration R1,R2,...");
      SimplicialComplex complex = nerve_complex(cloud, o.radius, opts);
      emit(out, o, complex.to_string(), to_json(complex));
    }
  } else if (cmd == "partitions") {
    MultiIndex k = load_k(o);
    std::string text;
    Json j = Json::array();
    for (const Partition& part : enumerate_partitions(k)) {
      Rational c = collapse_number(part);
      if (!text.empty()) text += "\n";
      text += part.to_string() + " c=" + to_string(c);
      Json blocks = Json::array();
      for (const MultiIndex& b : part.blocks) blocks.push_back(exponent_json(b));
      j.push_back(Json{{"partition", part.to_string()}, {"blocks", blocks}, {"collapse", to_string(c)}});
    }
    emit(out, o, text, j);
  } else if (cmd == "collapse") {
    if (o.partition.empty()) throw UsageError("--partition is required");
    Rational c = collapse_number(parse_partition(o.partition, o.p));
    emit(out, o, to_string(c), Json{{"collapse", to_string(c)}});
  } else if (cmd == "cumulant-from-moments") {
    if (o.moments_path.empty()) throw UsageError("--moments is required");
    ExactMomentTable table = moments_from_json(parse_json(read_file(o.moments_path)));
    Rational kappa = cumulant_from_moments(load_k(o), table);
    emit(out, o, to_string(kappa), Json{{"k", o.k}, {"cumulant", to_string(kappa)}});
  } else if (cmd == "chain-rule") {
    std::string text;
    Json j = Json::array();
    for (const ChainRuleTerm& t : chain_rule_terms(load_k(o))) {
      if (!text.empty()) text += "\n";
      text += t.to_string();
      Json inner = Json::array();
      for (const MultiIndex& m : t.inner) inner.push_back(exponent_json(m));
      j.push_back(Json{{"coefficient", to_string(t.coefficient)}, {"outer_order", t.outer_order}, {"inner", inner}});
    }
    emit(out, o, text, j);
  } else if (cmd == "parse-poly") {
    SparsePolynomial g = load_poly(o);
    emit(out, o, g.to_string(), poly_json(g));
  } else if (cmd == "check-model") {
    HierarchyVerdict v = check_hierarchical(load_poly(o), load_complex(o));
    Json j{{"hierarchical", v.hierarchical}};
    std::string text = "hierarchical";
    if (!v.hierarchical) {
      SparsePolynomial mono = SparsePolynomial::monomial(*v.term);
      j["term"] = exponent_json(*v.term);
      j["nonface"] = v.nonface->vertices();
      text = "not hierarchical: term " + mono.to_string() + " has non-face support {" + v.nonface->to_string() + "}";
    }
    emit(out, o, text, j);
  } else if (cmd == "artinian") {
    SparsePolynomial g = load_poly(o);
    Json j;
    std::string text;
    if (!o.n.empty()) {
      bool ok = artinian_degree_check(g, MultiIndex::parse(o.n));
      j["artinian"] = ok;
      text = std::string("artinian ") + (ok ? "true" : "false");
    }
    if (o.total_degree > 0) {
      bool ok = total_degree_cumulant_check(g, o.total_degree);
      j["total_degree"] = ok;
      text += (text.empty() ? "" : "\n") + std::string("total-degree ") + (ok ? "true" : "false");
    }
    if (text.empty()) throw UsageError("give --n n1,..,np and/or --total-degree d");
    emit(out, o, text, j);
  } else if (cmd == "gaussian-ideal") {
    if (o.gaussian_path.empty()) throw UsageError("--gaussian is required");
    SquareFreeIdeal ideal = gaussian_ideal(gaussian_from_json(parse_json(read_file(o.gaussian_path))), o.tolerance);
    emit(out, o, ideal.to_string(), to_json(ideal));
  } else if (cmd == "mec") {
    if (o.mec_path.empty()) throw UsageError("--mec is required");
    MECSpec spec = mec_from_json(parse_json(read_file(o.mec_path)));
    SparsePolynomial g = mec_polynomial(spec);
    SimplicialComplex support = mec_support_complex(spec);
    emit(out, o, "g = " + g.to_string() + "\nsupport " + support.to_string(),
         Json{{"polynomial", poly_json(g)}, {"support", to_json(support)}});
  } else if (cmd == "local-moment") {
    if (!(o.eps > 0)) throw UsageError("--eps must be positive");
    std::vector<double> xi = load_xi(o);
    CubeWindow window = o.edge ? CubeWindow::from_edge(xi, o.eps) : CubeWindow(xi, o.eps);
    EstimateReport r = local_moment(load_density(o), window, load_k(o), integration(o));
    emit(out, o, report_text(r), r.to_json());
  } else if (cmd == "diff-moment") {
    EstimateReport r = differential_moment(load_density(o), load_xi(o), load_k(o), differences(o));
    emit(out, o, report_text(r), r.to_json());
  } else if (cmd == "diff-cumulant") {
    CumulantMethod method;
    if (o.method == "partition") {
      method = CumulantMethod::PartitionSum;
    } else if (o.method == "logderiv") {
      method = CumulantMethod::LogDerivative;
    } else {
      throw UsageError("--method must be partition or logderiv");
    }
    EstimateReport r = differential_cumulant(load_density(o), load_xi(o), load_k(o), method, differences(o));
    emit(out, o, report_text(r), r.to_json());
  } else if (cmd == "limit-probe") {
    std::vector<double> eps = parse_doubles(o.eps_seq, "--eps-seq");
    LimitProbeReport r =
        limit_matches_differential(load_density(o), load_xi(o), load_k(o), eps, integration(o), differences(o));
    std::string text = r.verdict() + " target=" + fmt(r.target);
    for (std::size_t i = 0; i < r.eps.size(); ++i)
      text += "\neps=" + fmt(r.eps[i]) + " scaled=" + fmt(r.scaled[i]) + " error=" + fmt(r.errors[i]);
    emit(out, o, text, r.to_json());
  } else if (cmd == "ci-generators") {
    if (o.p < 1) throw UsageError("--p is required");
    std::vector<MultiIndex> gens;
    if (o.pairwise) {
      gens = pairwise_generators(o.p);
    } else {
      if (o.set_i.empty() || o.set_j.empty()) throw UsageError("give --I and --J (and --K), or --pairwise");
      Face i = Face::parse(o.set_i);
      Face j = Face::parse(o.set_j);
      Face k = o.set_k.empty() ? Face::range(o.p) - i - j : Face::parse(o.set_k);
      gens = ci_to_generators(CIStatement(o.p, i, j, k));
    }
    std::string text;
    Json j = Json::array();
    for (const MultiIndex& g : gens) {
      if (!text.empty()) text += "\n";
      text += g.to_string();
      j.push_back(exponent_json(g));
    }
    emit(out, o, text, j);
  } else {
    throw UsageError("unknown subcommand " + cmd);
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"hierarchical models, monomial ideals and differential cumulants", "hmi"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--threads", o.threads, "worker threads for quadrature and nerve tests")->check(CLI::PositiveNumber);

  auto complex_opt = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--complex", o.complex_path, "simplicial complex JSON");
    if (required) opt->required();
  };
  auto ideal_opts = [&](CLI::App* sub) {
    sub->add_option("--ideal", o.ideal_path, "ideal JSON");
    sub->add_option("--generators", o.generators, "e.g. \"x1*x4, x1*x5\"");
    sub->add_option("--p", o.p, "number of variables");
  };
  auto density_opts = [&](CLI::App* sub) {
    sub->add_option("--density", o.density_path, "density JSON")->required();
    sub->add_option("--xi", o.xi, "point, comma separated")->required();
    sub->add_option("--k", o.k, "multi-index, e.g. 1,1")->required();
  };
  auto quadrature_opts = [&](CLI::App* sub) {
    sub->add_option("--nodes", o.nodes, "Gauss-Legendre nodes per axis")->check(CLI::Range(1, 256));
    sub->add_flag("--monte-carlo", o.monte_carlo, "uniform sampling (seed from HMI_SEED)");
    sub->add_option("--samples", o.samples, "Monte Carlo sample count");
  };
  auto step_opt = [&](CLI::App* sub) {
    sub->add_option("--step", o.step, "relative finite-difference step")->check(CLI::PositiveNumber);
  };

  complex_opt(app.add_subcommand("sr", "Stanley-Reisner ideal of a complex"), true);
  ideal_opts(app.add_subcommand("complex-of", "complex of a square-free ideal"));
  complex_opt(app.add_subcommand("dual", "Alexander dual"), true);
  complex_opt(app.add_subcommand("decompose", "decomposability with witness"), true);
  complex_opt(app.add_subcommand("factorize", "clique/separator factorization"), true);
  {
    auto* sub = app.add_subcommand("marginalize", "strip vertices from a complex or ideal");
    complex_opt(sub, false);
    ideal_opts(sub);
    sub->add_option("--strip", o.strip, "vertices, e.g. 1 or 1,2")->required();
    sub->add_flag("--sequential", o.sequential, "strip one vertex at a time, in increasing order");
  }
  ideal_opts(app.add_subcommand("linear-resolution", "2-linear resolution test"));
  ideal_opts(app.add_subcommand("ferrer", "Ferrer shape and cliques"));
  for (const char* name : {"network-cuts", "network-paths", "network-ideals", "network-duality"}) {
    auto* sub = app.add_subcommand(name, "two-terminal network");
    sub->add_option("--network", o.network_path, "network JSON")->required();
  }
  {
    auto* sub = app.add_subcommand("nerve", "nerve complex of equal balls");
    sub->add_option("--points", o.points_path, "CSV, one point per row")->required();
    sub->add_option("--radius", o.radius, "ball radius");
    sub->add_option("--filtration", o.radii, "increasing radii, comma separated");
    sub->add_option("--max-dim", o.max_dim, "largest face dimension");
  }
  app.add_subcommand("partitions", "multiset partitions of k")->add_option("--k", o.k, "multi-index")->required();
  {
    auto* sub = app.add_subcommand("collapse", "collapse number of a partition");
    sub->add_option("--partition", o.partition, "e.g. {13|3}")->required();
    sub->add_option("--p", o.p, "dimension (default: largest variable)");
  }
  {
    auto* sub = app.add_subcommand("cumulant-from-moments", "exact cumulant from a moment table");
    sub->add_option("--k", o.k, "multi-index")->required();
    sub->add_option("--moments", o.moments_path, "moment table JSON")->required();
  }
  app.add_subcommand("chain-rule", "chain-rule expansion of D^k g(h)")->add_option("--k", o.k, "multi-index")->required();
  {
    auto* sub = app.add_subcommand("parse-poly", "canonical form of a polynomial");
    sub->add_option("--poly", o.poly, "polynomial text")->required();
    sub->add_option("--p", o.p, "number of variables")->required();
  }
  {
    auto* sub = app.add_subcommand("check-model", "is the log-density hierarchical for the complex");
    sub->add_option("--poly", o.poly, "log-density polynomial")->required();
    sub->add_option("--p", o.p, "number of variables")->required();
    complex_opt(sub, true);
  }
  {
    auto* sub = app.add_subcommand("artinian", "Artinian and total-degree checks");
    sub->add_option("--poly", o.poly, "polynomial")->required();
    sub->add_option("--p", o.p, "number of variables")->required();
    sub->add_option("--n", o.n, "Artinian exponents n1,..,np");
    sub->add_option("--total-degree", o.total_degree, "cumulant order d");
  }
  {
    auto* sub = app.add_subcommand("gaussian-ideal", "ideal of a Gaussian precision pattern");
    sub->add_option("--gaussian", o.gaussian_path, "Gaussian JSON")->required();
    sub->add_option("--tol", o.tolerance, "entries with |value| <= tol count as zero");
  }
  app.add_subcommand("mec", "MEC polynomial and support complex")
      ->add_option("--mec", o.mec_path, "MEC JSON")
      ->required();
  {
    auto* sub = app.add_subcommand("local-moment", "local moment over a cube window");
    density_opts(sub);
    sub->add_option("--eps", o.eps, "window half-width")->required();
    sub->add_flag("--edge", o.edge, "read --eps as the cube edge length");
    quadrature_opts(sub);
  }
  {
    auto* sub = app.add_subcommand("diff-moment", "differential moment");
    density_opts(sub);
    step_opt(sub);
  }
  {
    auto* sub = app.add_subcommand("diff-cumulant", "differential cumulant");
    density_opts(sub);
    step_opt(sub);
    sub->add_option("--method", o.method, "partition or logderiv");
  }
  {
    auto* sub = app.add_subcommand("limit-probe", "scaled local cumulant against the differential cumulant");
    density_opts(sub);
    sub->add_option("--eps-seq", o.eps_seq, "decreasing half-widths");
    quadrature_opts(sub);
    step_opt(sub);
  }
  {
    auto* sub = app.add_subcommand("ci-generators", "zero-cumulant orders of a CI statement");
    sub->add_option("--p", o.p, "number of variables")->required();
    sub->add_option("--I", o.set_i, "index set I, e.g. 1");
    sub->add_option("--J", o.set_j, "index set J");
    sub->add_option("--K", o.set_k, "conditioning set (default: the rest)");
    sub->add_flag("--pairwise", o.pairwise, "all pairs e_i + e_j");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "hmi: " << e.what() << "\n";
    return kExitUsage;
  }
  std::string cmd = app.get_subcommands().front()->get_name();
  try {
    return dispatch(cmd, o, out);
  } catch (const UsageError& e) {
    err << "hmi " << cmd << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "hmi " << cmd << ": " << e.what() << "\n";
    return kExitDomainError;
  }
}

}  // namespace hmi::cli
