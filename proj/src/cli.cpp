#include "laytrop/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "laytrop/congruence.hpp"
#include "laytrop/errors.hpp"
#include "laytrop/kapranov.hpp"
#include "laytrop/parse.hpp"
#include "laytrop/polyfun.hpp"
#include "laytrop/tropicalization.hpp"

namespace laytrop::cli {

using json = nlohmann::ordered_json;

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

std::string join(const std::vector<std::string>& xs, char sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += sep;
    s += xs[i];
  }
  return s;
}

Flavors flavors_of(const CommandRequest& req) { return {req.layers, GFlavor::RationalMax}; }

Point parse_point(const std::string& text, Flavors f) {
  Point p;
  for (const auto& part : split(text, ',')) p.push_back(parse_scalar(part, f));
  if (p.empty()) throw UsageError("empty --point");
  return p;
}

std::vector<LayeredPolynomial> parse_polys(const CommandRequest& req, std::optional<std::size_t> nvars) {
  if (req.inputs.empty()) throw UsageError(req.subcommand + " needs at least one polynomial");
  std::vector<LayeredPolynomial> out;
  std::size_t arity = nvars.value_or(0);
  if (!nvars) {
    // Parse once to learn the widest arity so every member shares it.
    for (const auto& text : req.inputs)
      arity = std::max(arity, parse_polynomial(text, {flavors_of(req), req.laurent, std::nullopt}).nvars());
  }
  for (const auto& text : req.inputs) out.push_back(parse_polynomial(text, {flavors_of(req), req.laurent, arity}));
  return out;
}

GridSpec parse_grid(const std::string& text, std::size_t n, const std::optional<std::string>& layers, Flavors f) {
  GridSpec g;
  g.flavors = f;
  auto axes = split(text, ',');
  if (axes.size() != 1 && axes.size() != n)
    throw UsageError("--grid needs one axis spec or one per variable (" + std::to_string(n) + ")");
  for (std::size_t k = 0; k < n; ++k) {
    auto fields = split(axes.size() == 1 ? axes[0] : axes[k], ':');
    if (fields.size() != 3) throw UsageError("axis spec must be lower:upper:step, got '" + text + "'");
    g.axes.push_back({parse_rational(fields[0]), parse_rational(fields[1]), parse_rational(fields[2])});
  }
  if (layers) {
    for (const auto& l : split(*layers, ','))
      g.layers.push_back(l == "inf" ? SortingLayer::infinity(f.layers)
                                    : SortingLayer::natural(static_cast<std::uint64_t>(std::stoull(l)), f.layers));
  }
  return g;
}

json layer_json(const SortingLayer& l) {
  if (l.is_infinite()) return "inf";
  return l.count();
}

json point_record(const Point& p) {
  json values = json::array(), layers = json::array();
  for (const auto& c : p) {
    values.push_back(to_string(c.rational()));
    layers.push_back(c.layer().to_string());
  }
  return {{"point", values}, {"layers", layers}};
}

void write_points_csv(std::ostream& out, const std::vector<json>& records) {
  out << "point,layers,layering\n";
  for (const auto& r : records) {
    std::vector<std::string> pv, lv;
    for (const auto& v : r["point"]) pv.push_back(v.get<std::string>());
    for (const auto& v : r["layers"]) lv.push_back(v.get<std::string>());
    out << join(pv, ';') << ',' << join(lv, ';') << ',' << (r.contains("layering") ? r["layering"].get<std::string>() : "")
        << '\n';
  }
}

// --- subcommands ------------------------------------------------------------

int cmd_eval(const CommandRequest& req, std::ostream& out) {
  if (!req.point) throw UsageError("eval needs --point");
  Point a = parse_point(*req.point, flavors_of(req));
  auto fs = parse_polys(req, a.size());
  const auto& f = fs.front();
  LayeredScalar v = eval(f, a);
  json dom = json::array();
  for (auto i : dominant_part(f, a)) dom.push_back(LayeredPolynomial(f.nvars(), {f.monomial(i)}, f.laurent()).to_string());
  if (req.format == Format::Csv) {
    out << "value,layer,corner_root,cluster_root\n"
        << to_string(v.rational()) << ',' << v.layer().to_string() << ',' << is_corner_root(f, a) << ','
        << is_cluster_root(f, a) << '\n';
    return 0;
  }
  json j = {{"value", to_string(v.rational())},
            {"layer", v.layer().to_string()},
            {"dominant", dom},
            {"corner_root", is_corner_root(f, a)},
            {"cluster_root", is_cluster_root(f, a)}};
  out << j.dump() << '\n';
  return 0;
}

int cmd_trop(const CommandRequest& req, std::ostream& out) {
  if (req.inputs.size() != 1) throw UsageError("trop takes exactly one Puiseux polynomial");
  auto f = parse_puiseux_polynomial(req.inputs[0], req.var);
  auto t = trop_poly(TropicalizationContext{req.layers}, f);
  if (req.format == Format::Csv) {
    out << "degree,layer,value\n";
    for (const auto& m : t.monomials())
      out << m.exponent[0] << ',' << m.coefficient.layer().to_string() << ',' << to_string(m.coefficient.rational())
          << '\n';
    return 0;
  }
  json terms = json::array();
  for (const auto& m : t.monomials())
    terms.push_back({{"degree", m.exponent[0]},
                     {"layer", m.coefficient.layer().to_string()},
                     {"value", to_string(m.coefficient.rational())}});
  out << json{{"poly", t.to_string()}, {"terms", terms}}.dump() << '\n';
  return 0;
}

int cmd_explode(const CommandRequest& req, std::ostream& out) {
  if (req.inputs.size() != 1) throw UsageError("explode takes exactly one Puiseux polynomial");
  auto f = parse_puiseux_polynomial(req.inputs[0], req.var);
  if (f.is_zero()) throw DomainError("cannot explode the zero polynomial");
  auto x = explode_poly(f);
  if (req.format == Format::Csv) {
    out << "degree,sort,value\n";
    for (const auto& [d, s] : x) out << d << ',' << to_string(s.sort) << ',' << to_string(s.value) << '\n';
    return 0;
  }
  json terms = json::array();
  for (const auto& [d, s] : x)
    terms.push_back({{"degree", d}, {"sort", to_string(s.sort)}, {"value", to_string(s.value)}});
  out << json{{"poly", to_string(x, req.var)}, {"terms", terms}}.dump() << '\n';
  return 0;
}

int cmd_roots(const CommandRequest& req, std::ostream& out) {
  auto fs = parse_polys(req, std::size_t{1});
  auto roots = univariate_corner_roots(fs.front());
  if (req.format == Format::Csv) {
    out << "root,mult\n";
    for (const auto& r : roots) out << to_string(r.root) << ',' << r.multiplicity << '\n';
    return 0;
  }
  json j = json::array();
  for (const auto& r : roots) j.push_back({{"root", to_string(r.root)}, {"mult", r.multiplicity}});
  out << j.dump() << '\n';
  return 0;
}

int cmd_locus(const CommandRequest& req, std::ostream& out) {
  if (!req.grid) throw UsageError("locus needs --grid");
  auto fs = parse_polys(req, std::nullopt);
  GridSpec grid = parse_grid(*req.grid, fs.front().nvars(), req.grid_layers, flavors_of(req));
  ScanOptions opts{req.threads};
  std::vector<Point> pts;
  if (req.locus_mode == "corner") pts = corner_locus(fs, grid, opts);
  else if (req.locus_mode == "combined") pts = combined_locus(fs, grid, opts);
  else throw UsageError("--mode must be corner or combined");
  std::vector<json> records;
  for (const auto& p : pts) {
    json r = point_record(p);
    r["layering"] = layering_map_set(fs, p).to_string();
    records.push_back(std::move(r));
  }
  if (req.format == Format::Csv) {
    write_points_csv(out, records);
    return 0;
  }
  out << json(records).dump() << '\n';
  return 0;
}

int cmd_layering(const CommandRequest& req, std::ostream& out) {
  if (!req.point) throw UsageError("layering needs --point");
  Point a = parse_point(*req.point, flavors_of(req));
  auto fs = parse_polys(req, a.size());
  SortingLayer l = layering_map_set(fs, a);
  if (req.format == Format::Csv) {
    out << "layer\n" << l.to_string() << '\n';
    return 0;
  }
  out << json{{"layer", layer_json(l)}}.dump() << '\n';
  return 0;
}

int cmd_essential(const CommandRequest& req, std::ostream& out) {
  auto fs = parse_polys(req, std::nullopt);
  const auto& f = fs.front();
  std::optional<GridSpec> sample;
  if (req.grid) sample = parse_grid(*req.grid, f.nvars(), std::nullopt, flavors_of(req));
  auto ess = essential_monomials(f, sample);
  json mons = json::array();
  for (auto i : ess.indices) mons.push_back(LayeredPolynomial(f.nvars(), {f.monomial(i)}, f.laurent()).to_string());
  if (req.format == Format::Csv) {
    out << "monomial\n";
    for (const auto& m : mons) out << m.get<std::string>() << '\n';
    return 0;
  }
  out << json{{"monomials", mons}, {"exact", ess.exact}}.dump() << '\n';
  return 0;
}

Point point_from_json(const json& j, Flavors f) {
  if (!j.is_array()) throw DomainError("each point must be an array");
  Point p;
  for (const auto& c : j) {
    if (c.is_string()) p.push_back(parse_scalar(c.get<std::string>(), f));
    else if (c.is_number_integer()) p.push_back(LayeredScalar::tangible(Rational(c.get<long>()), f));
    else throw DomainError("point coordinates must be strings or integers");
  }
  return p;
}

int cmd_congruence(const CommandRequest& req, std::ostream& out) {
  if (req.inputs.size() != 1) throw UsageError("congruence takes one JSON file");
  std::ifstream in(req.inputs[0]);
  if (!in) throw UsageError("cannot open '" + req.inputs[0] + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), 1, e.byte);
  }
  Flavors f = flavors_of(req);
  if (doc.contains("L")) f.layers = parse_lflavor(doc["L"].get<std::string>());
  bool laurent = doc.value("laurent", req.laurent);
  std::uint64_t seed = doc.value("seed", req.seed);

  std::vector<Point> pts;
  for (const auto& p : doc.at("points")) pts.push_back(point_from_json(p, f));
  FinitePointSet search(std::move(pts));
  if (search.empty()) throw DomainError("congruence needs at least one point");
  std::size_t n = search.points().front().size();

  CongruenceGenerators gens;
  for (const auto& pair : doc.value("pairs", json::array())) {
    if (!pair.is_array() || pair.size() != 2) throw DomainError("each pair must be [f, g]");
    PolynomialSyntax syn{f, laurent, n};
    gens.emplace_back(parse_polynomial(pair[0].get<std::string>(), syn), parse_polynomial(pair[1].get<std::string>(), syn));
  }

  auto rep = zariski_roundtrip(gens, search, seed);
  std::vector<json> variety, rebuilt;
  for (const auto& p : rep.variety.points.points()) variety.push_back(point_record(p));
  for (const auto& p : rep.reconstructed.points()) rebuilt.push_back(point_record(p));
  if (req.format == Format::Csv) {
    write_points_csv(out, variety);
  } else {
    json j = {{"pass", rep.pass()},
              {"search_points", rep.search_points},
              {"diagonal", rep.variety.diagonal},
              {"variety", variety},
              {"reconstructed", rebuilt},
              {"probe_pairs", rep.probe_pairs},
              {"roundtrip", rep.roundtrip},
              {"antitone_generators", rep.antitone_generators},
              {"antitone_points", rep.antitone_points},
              {"union_law", rep.union_law}};
    out << j.dump() << '\n';
  }
  return rep.pass() ? 0 : 1;
}

int cmd_kapranov(const CommandRequest& req, std::ostream& out) {
  auto batch = kapranov_batch(req.degree, req.trials, req.seed);
  if (req.format == Format::Csv) {
    out << "pass,trials,failures\n" << batch.pass << ',' << batch.trials << ',' << batch.failures.size() << '\n';
  } else {
    json failures = json::array();
    for (const auto& f : batch.failures)
      failures.push_back({{"poly", f.poly},
                          {"roots", f.roots},
                          {"corner_roots", f.corner_roots},
                          {"valuations", f.valuations}});
    out << json{{"pass", batch.pass},
                {"trials", batch.trials},
                {"degree", req.degree},
                {"seed", req.seed},
                {"failures", failures}}
               .dump()
        << '\n';
  }
  return batch.pass ? 0 : 1;
}

}  // namespace

int execute(const CommandRequest& req, std::ostream& out, std::ostream& err) {
  try {
    const std::string& s = req.subcommand;
    if (s == "eval") return cmd_eval(req, out);
    if (s == "trop") return cmd_trop(req, out);
    if (s == "explode") return cmd_explode(req, out);
    if (s == "roots") return cmd_roots(req, out);
    if (s == "locus") return cmd_locus(req, out);
    if (s == "layering") return cmd_layering(req, out);
    if (s == "essential") return cmd_essential(req, out);
    if (s == "congruence") return cmd_congruence(req, out);
    if (s == "kapranov") return cmd_kapranov(req, out);
    throw UsageError("unknown subcommand '" + s + "'");
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    err << "syntax error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact layered tropical algebra"};
  app.require_subcommand(1);
  CommandRequest req;
  std::string lname = "nat";
  std::string format = "json";

  auto common = [&](CLI::App* sub) {
    sub->add_option("--L", lname, "sorting semiring: trivial | super | nat")
        ->check(CLI::IsMember({"trivial", "super", "nat"}));
    sub->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  };
  auto polys = [&](CLI::App* sub) {
    common(sub);
    sub->add_option("polynomials", req.inputs, "layered polynomial text")->required();
    sub->add_flag("--laurent", req.laurent, "allow negative exponents");
  };

  auto* eval_cmd = app.add_subcommand("eval", "evaluate a layered polynomial at a point");
  polys(eval_cmd);
  eval_cmd->add_option("--point", req.point, "comma-separated scalars")->required();

  auto* trop_cmd = app.add_subcommand("trop", "tropicalize a Puiseux polynomial");
  common(trop_cmd);
  trop_cmd->add_option("polynomial", req.inputs, "Puiseux polynomial text")->required();
  trop_cmd->add_option("--var", req.var, "polynomial variable name");

  auto* explode_cmd = app.add_subcommand("explode", "exploded tropicalization of a Puiseux polynomial");
  common(explode_cmd);
  explode_cmd->add_option("polynomial", req.inputs, "Puiseux polynomial text")->required();
  explode_cmd->add_option("--var", req.var, "polynomial variable name");

  auto* roots_cmd = app.add_subcommand("roots", "exact corner roots of a univariate polynomial");
  polys(roots_cmd);

  auto* locus_cmd = app.add_subcommand("locus", "corner or combined locus on a grid");
  polys(locus_cmd);
  locus_cmd->add_option("--grid", req.grid, "lower:upper:step, once or per variable (comma-separated)")->required();
  locus_cmd->add_option("--layers", req.grid_layers, "comma-separated layers for grid points");
  locus_cmd->add_option("--mode", req.locus_mode, "corner | combined")->check(CLI::IsMember({"corner", "combined"}));

  auto* layering_cmd = app.add_subcommand("layering", "layering map of a set of polynomials at a point");
  polys(layering_cmd);
  layering_cmd->add_option("--point", req.point, "comma-separated scalars")->required();

  auto* essential_cmd = app.add_subcommand("essential", "essential monomials");
  polys(essential_cmd);
  essential_cmd->add_option("--grid", req.grid, "sample grid for more than three variables");

  auto* cong_cmd = app.add_subcommand("congruence", "variety / congruence roundtrip from a JSON file");
  common(cong_cmd);
  cong_cmd->add_option("file", req.inputs, "JSON {points: [...], pairs: [[f, g], ...]}")->required();
  cong_cmd->add_option("--seed", req.seed, "probe family seed");
  cong_cmd->add_flag("--laurent", req.laurent, "allow negative exponents");

  auto* kap_cmd = app.add_subcommand("kapranov", "random checks of the univariate root/corner correspondence");
  common(kap_cmd);
  kap_cmd->add_option("--degree", req.degree, "number of linear factors")->check(CLI::Range(1, 12));
  kap_cmd->add_option("--trials", req.trials, "number of random polynomials");
  kap_cmd->add_option("--seed", req.seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  req.subcommand = app.get_subcommands().front()->get_name();
  req.layers = parse_lflavor(lname);
  req.format = format == "csv" ? Format::Csv : Format::Json;
  if (const char* env = std::getenv("LAYTROP_THREADS")) {
    try {
      req.threads = static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      err << "usage error: LAYTROP_THREADS must be a non-negative integer\n";
      return 2;
    }
  }
  return execute(req, out, err);
}

}  // namespace laytrop::cli
