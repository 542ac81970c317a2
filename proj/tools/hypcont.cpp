// Command-line front end: recog, olsson, roc, verify, rewrite, charlist, callroc, catalog.
// Exit codes: 0 ok, 1 usage error or failed verification, 2 parse error, 3 unsupported subseries,
// 4 incomplete simplification (partial output printed), 5 no overlap between convergence regions.

#include "CLI11.hpp"
#include "json.hpp"

#include "hypcont/catalog.hpp"
#include "hypcont/numeric.hpp"
#include "hypcont/olsson.hpp"
#include "hypcont/parse.hpp"
#include "hypcont/rewrite.hpp"
#include "hypcont/roc.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace hypcont;
using Json = nlohmann::ordered_json;

namespace {

enum Exit { Ok = 0, Usage = 1, ParseFailure = 2, Unsupported = 3, Partial = 4, NoOverlap = 5 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json as_json(const std::string& text) { return Json::parse(text); }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct RecogArgs {
  std::string indices, series, format = "text";
};

int cmd_recog(const RecogArgs& a) {
  auto idx = parse_indices(a.indices);
  HypSeries s = parse_series(a.series, idx);
  Catalog cat(Catalog::default_path());
  Recognition r = serrecog(s, cat);
  std::optional<NamedCall> call;
  if (r.series.indices.size() == 2) {
    try {
      call = serrecog2var(s, cat);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::UnknownSeries) throw;
    }
  }
  if (a.format == "json") {
    Json j;
    j["schema"] = "hypcont.recog/1";
    j["name"] = r.name ? Json(*r.name) : Json(nullptr);
    j["prefactor"] = r.prefactor.grammar();
    j["indices"] = Json::array();
    for (const auto& i : r.series.indices) j["indices"].push_back(i.name);
    j["series"] = grammar(r.series);
    j["characteristic_list"] = r.chars.forms_str();
    j["call"] = call ? Json(call->str()) : Json(nullptr);
    std::cout << j.dump(2) << "\n";
  } else if (a.format == "latex") {
    std::cout << latex(TermSum{{Term{r.prefactor, r.series}}}) << "\n";
  } else {
    std::cout << r.str() << "\n";
    if (call) std::cout << call->str() << "\n";
  }
  return Ok;
}

struct OlssonArgs {
  int q = 1;
  std::string indices, series, format = "text";
  std::vector<std::string> apply;
  bool sim = false, roc = false;
};

int cmd_olsson(const OlssonArgs& a) {
  auto idx = parse_indices(a.indices);
  HypSeries s = parse_series(a.series, idx);
  static const std::map<std::string, OlssonOption> names{{"sum", OlssonOption::Sum},   {"one", OlssonOption::One},
                                                          {"inf", OlssonOption::Inf},   {"pet1", OlssonOption::Pet1},
                                                          {"pet2", OlssonOption::Pet2}, {"pet3", OlssonOption::Pet3}};
  std::set<OlssonOption> opts;
  for (const auto& n : a.apply) opts.insert(names.at(n));
  if (a.apply.size() > opts.size()) throw Error(ErrorKind::InvalidOptions, "--apply repeated");
  std::set<OlssonOption> transform_only = opts;
  if (a.sim) opts.insert(OlssonOption::Sim);
  if (a.roc) opts.insert(OlssonOption::Roc);

  OlssonResult r;
  try {
    r = olsson(a.q, idx, s, opts);
  } catch (const SimIncomplete& e) {
    OlssonResult pending = olsson(a.q, idx, s, transform_only);
    if (a.format == "json") {
      Json j;
      j["schema"] = "hypcont.olsson/1";
      j["complete"] = false;
      j["pending"] = Json::array();
      for (const auto& f : pending.pending) j["pending"].push_back(f.str());
      j["partial"] = e.partial().grammar();
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << pending.str() << "\n" << e.partial().str() << "\n";
    }
    std::cerr << "error: simplification incomplete: " << e.what() << "\n";
    return Partial;
  }

  if (a.format == "json") {
    Json j;
    j["schema"] = "hypcont.olsson/1";
    j["complete"] = true;
    if (r.terms) {
      j["terms"] = as_json(terms_to_json(*r.terms));
    } else {
      j["pending"] = Json::array();
      for (const auto& f : r.pending) j["pending"].push_back(f.str());
    }
    if (r.region) {
      j["region"] = r.region->str();
      j["region_simplified"] = r.region->simplified_str();
      j["region_tree"] = as_json(r.region->json());
    }
    std::cout << j.dump(2) << "\n";
  } else if (a.format == "latex") {
    if (r.region) std::cout << "% region: " << r.region->str() << "\n";
    std::cout << (r.terms ? latex(*r.terms) : latex(r.pending)) << "\n";
  } else {
    std::cout << r.str() << "\n";
  }
  return Ok;
}

struct RocArgs {
  std::string indices = "m,n", num, den, vars, format = "text", plot_data;
  int samples = 200;
  bool simplify = false;
};

std::vector<IndexForm> index_forms(const std::vector<LinearForm>& forms, const std::vector<Index>& idx,
                                   const std::string& flag) {
  std::vector<IndexForm> out;
  for (const auto& f : forms) {
    if (!f.is_index_only()) throw Error(ErrorKind::Parse, flag + ": '" + f.str() + "' is not an index-only form");
    out.emplace_back(f.coeff(idx[0]), idx.size() > 1 ? f.coeff(idx[1]) : 0);
  }
  return out;
}

int cmd_roc(const RocArgs& a) {
  auto idx = parse_indices(a.indices);
  if (idx.size() > 2) throw Error(ErrorKind::NotTwoVariable, "roc handles one or two indices");
  auto num = index_forms(parse_form_list(a.num, idx), idx, "--num");
  auto den = index_forms(parse_form_list(a.den, idx), idx, "--den");
  std::vector<VarExpr> vars =
      a.vars.empty() ? (idx.size() == 1 ? std::vector<VarExpr>{VarExpr::var("x")}
                                        : std::vector<VarExpr>{VarExpr::var("x"), VarExpr::var("y")})
                     : parse_var_list(a.vars);
  if (vars.size() != idx.size()) throw Error(ErrorKind::Parse, "--vars needs one expression per index");

  Region region;
  std::string text;
  Json j;
  j["schema"] = "hypcont.roc/1";
  if (idx.size() == 1) {
    std::vector<std::int64_t> n1, d1;
    for (const auto& [m, n] : num) n1.push_back(m);
    for (const auto& [m, n] : den) d1.push_back(m);
    region = roc1(n1, d1, vars[0]);
    text = region.str();
  } else {
    Roc2Result r = roc2(num, den, vars[0], vars[1]);
    region = r.region;
    text = r.str();
    j["R"] = r.rect.R.str();
    j["S"] = r.rect.S.str();
    j["curves"] = region.curves_str();
  }
  if (!region.implicits.empty())
    std::cerr << "warning: a boundary curve has degree above 2 in s and is kept as an implicit curve\n";
  if (a.format == "json") {
    j["region"] = region.str();
    j["region_tree"] = as_json(region.json());
    std::cout << j.dump(2) << "\n";
  } else if (a.simplify) {
    auto linear = region.linear_str();
    std::cout << "{" << (linear ? *linear : region.min_str()) << "}\n";
  } else {
    std::cout << text << "\n";
  }
  if (!a.plot_data.empty()) {
    std::ofstream out(a.plot_data);
    if (!out) throw UsageError("cannot write " + a.plot_data);
    out << plot_csv(region, a.samples);
  }
  return Ok;
}

struct VerifyArgs {
  std::string indices, lhs, rhs_file, params;
  std::vector<std::string> at;
  int points = 5, terms = 200;
  double tol = 1e-8;
  std::uint64_t seed = 1;
};

int cmd_verify(const VerifyArgs& a) {
  auto idx = parse_indices(a.indices);
  HypSeries lhs = parse_series(a.lhs, idx);
  std::string text = read_file(a.rhs_file);
  // Accept the whole olsson report as well as a bare term sum.
  Json doc = Json::parse(text, nullptr, false);
  if (!doc.is_discarded() && doc.value("schema", "") == "hypcont.olsson/1") {
    if (!doc.contains("terms")) throw Error(ErrorKind::Parse, a.rhs_file + ": olsson report without simplified terms");
    text = doc["terms"].dump();
  }
  TermSum rhs = terms_from_json(text);
  Bindings params = parse_bindings(a.params);
  EvalConfig cfg;
  cfg.tolerance = a.tol;
  cfg.max_terms_per_index = a.terms;
  VerificationReport rep;
  if (!a.at.empty()) {
    std::vector<Point> pts;
    for (const auto& p : a.at) pts.push_back(parse_point(p));
    rep = verify_at(lhs, rhs, params, pts, cfg);
  } else {
    if (a.points < 1) throw UsageError("--points must be at least 1");
    SampleConfig sc;
    sc.n_points = a.points;
    sc.seed = a.seed;
    auto lhs_region = common_roc(callroc(TermSum{{Term{FactorProduct(1), lhs}}}));
    rep = verify_transformation(lhs, rhs, lhs_region, common_roc(callroc(rhs)), params, sc, cfg);
  }
  std::cout << rep.json() << "\n";
  return rep.pass() ? Ok : Usage;
}

struct CatalogArgs {
  std::string name, num, den, format = "text";
};

int cmd_catalog_add(const CatalogArgs& a) {
  Catalog cat(Catalog::default_path());
  auto idx = canonical_indices(3);
  cat.add(pattern_from_forms(a.name, parse_form_list(a.num, idx), parse_form_list(a.den, idx)));
  std::cout << "added " << a.name << " to " << Catalog::default_path().string() << "\n";
  return Ok;
}

int cmd_catalog_remove(const CatalogArgs& a) {
  Catalog cat(Catalog::default_path());
  cat.remove(a.name);
  std::cout << "removed " << a.name << "\n";
  return Ok;
}

int cmd_catalog_list(const CatalogArgs& a) {
  Catalog cat(Catalog::default_path());
  if (a.format == "json") {
    Json j;
    j["schema"] = "hypcont.catalog/1";
    j["builtin"] = Json::array();
    j["user"] = Json::array();
    for (const auto& p : cat.builtin()) j["builtin"].push_back(p.name);
    for (const auto& p : cat.user()) j["user"].push_back(p.name);
    std::cout << j.dump(2) << "\n";
    return Ok;
  }
  for (const auto& p : cat.builtin()) std::cout << p.name << "\n";
  for (const auto& p : cat.user()) std::cout << p.name << " (user)\n";
  return Ok;
}

struct RewriteArgs {
  std::string rule, indices, expr, index, format = "text";
};

int cmd_rewrite(const RewriteArgs& a) {
  auto idx = parse_indices(a.indices);
  FactorProduct x = parse_factors(a.expr, idx);
  FactorProduct y;
  if (a.rule == "gammatopoch")
    y = gamma_to_poch(x, idx, false);
  else if (a.rule == "gammatopoch-repeat")
    y = gamma_to_poch(x, idx, true);
  else if (a.rule == "positivepoch")
    y = positive_poch(x, idx);
  else if (a.rule == "pochdim")
    y = poch_dim(x);
  else if (a.rule == "unsim")
    y = unsim(x, a.index.empty() ? idx.front() : Index{a.index});
  else
    y = sim(x, idx);
  if (a.format == "json") {
    Json j;
    j["schema"] = "hypcont.rewrite/1";
    j["rule"] = a.rule;
    j["result"] = y.grammar();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (a.format == "latex" ? y.latex() : y.str()) << "\n";
  }
  return Ok;
}

struct SeriesArgs {
  std::string indices, series, format = "text";
};

int cmd_charlist(const SeriesArgs& a) {
  auto idx = parse_indices(a.indices);
  CharacteristicList c = characteristic_list(parse_series(a.series, idx));
  if (a.format == "json") {
    Json j;
    j["schema"] = "hypcont.charlist/1";
    j["forms"] = c.forms_str();
    j["list"] = c.str();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << c.str() << "\n";
  }
  return Ok;
}

int cmd_callroc(const SeriesArgs& a) {
  auto idx = parse_indices(a.indices);
  CommonRegion r = common_roc(callroc(TermSum{{Term{FactorProduct(1), parse_series(a.series, idx)}}}));
  if (a.format == "json") {
    Json j;
    j["schema"] = "hypcont.callroc/1";
    j["region"] = r.simplified_str();
    j["region_tree"] = as_json(r.json());
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "{" << r.simplified_str() << "}\n";
  }
  return Ok;
}

int exit_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::Parse: return ParseFailure;
    case ErrorKind::UnsupportedSubseries: return Unsupported;
    case ErrorKind::SimIncomplete: return Partial;
    case ErrorKind::EmptyOverlap: return NoOverlap;
    default: return Usage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Analytic continuation of multivariable hypergeometric series"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"text", "json", "latex"};

  RecogArgs ra;
  auto* recog = app.add_subcommand("recog", "Recognize a series against the catalog");
  recog->add_option("--indices", ra.indices, "Summation indices, e.g. m,n")->required();
  recog->add_option("--series", ra.series, "Summand in the series grammar")->required();
  recog->add_option("--format", ra.format)->check(CLI::IsMember(formats));

  OlssonArgs oa;
  auto* ols = app.add_subcommand("olsson", "Continue a series through a 2F1 or pFq subseries");
  ols->add_option("--q", oa.q, "Position of the summed index (1-based)")->required();
  ols->add_option("--indices", oa.indices)->required();
  ols->add_option("--series", oa.series)->required();
  ols->add_option("--apply", oa.apply, "sum, one, inf, pet1, pet2 or pet3")
      ->check(CLI::IsMember({"sum", "one", "inf", "pet1", "pet2", "pet3"}))
      ->take_all();
  ols->add_flag("--sim", oa.sim, "Re-expand and simplify");
  ols->add_flag("--roc", oa.roc, "Also compute the common convergence region");
  ols->add_option("--format", oa.format)->check(CLI::IsMember(formats));

  RocArgs rca;
  auto* roc = app.add_subcommand("roc", "Convergence region from a characteristic list");
  roc->add_option("--indices", rca.indices, "Summation indices (default m,n)");
  roc->add_option("--num", rca.num, "Numerator forms, e.g. m+n,m,n")->required();
  roc->add_option("--den", rca.den, "Denominator forms without the factorials")->required();
  roc->add_option("--vars", rca.vars, "Variable expressions, e.g. x/y,y");
  roc->add_option("--format", rca.format)->check(CLI::IsMember({"text", "json"}));
  roc->add_option("--plot-data", rca.plot_data, "Write boundary samples r,s as CSV");
  roc->add_flag("--simplify", rca.simplify, "Print only the region, with linear boundaries merged");
  roc->add_option("--samples", rca.samples, "Number of boundary samples")->check(CLI::PositiveNumber);

  RewriteArgs wa;
  auto* rw = app.add_subcommand("rewrite", "Apply one rewrite rule to a factor product");
  rw->add_option("--rule", wa.rule)
      ->required()
      ->check(CLI::IsMember({"gammatopoch", "gammatopoch-repeat", "positivepoch", "pochdim", "unsim", "sim"}));
  rw->add_option("--indices", wa.indices, "Indices the rule acts on, in priority order")->required();
  rw->add_option("--expr", wa.expr, "Factor product in the series grammar")->required();
  rw->add_option("--index", wa.index, "Index split off by unsim (default: first of --indices)");
  rw->add_option("--format", wa.format)->check(CLI::IsMember(formats));

  SeriesArgs cla;
  auto* chl = app.add_subcommand("charlist", "Characteristic list of a series");
  chl->add_option("--indices", cla.indices)->required();
  chl->add_option("--series", cla.series)->required();
  chl->add_option("--format", cla.format)->check(CLI::IsMember({"text", "json"}));

  SeriesArgs cra;
  auto* cr = app.add_subcommand("callroc", "Convergence region of a one- or two-index series");
  cr->add_option("--indices", cra.indices)->required();
  cr->add_option("--series", cra.series)->required();
  cr->add_option("--format", cra.format)->check(CLI::IsMember({"text", "json"}));

  VerifyArgs va;
  auto* ver = app.add_subcommand("verify", "Compare a series with a stored continuation numerically");
  ver->add_option("--indices", va.indices)->required();
  ver->add_option("--lhs", va.lhs, "Original series in the series grammar")->required();
  ver->add_option("--rhs", va.rhs_file, "Term sum JSON written by olsson --format json")->required();
  ver->add_option("--params", va.params, "Parameter values, e.g. a=1/3,b=1/7");
  ver->add_option("--points", va.points, "Number of sampled points");
  ver->add_option("--at", va.at, "Explicit point, e.g. x=0.1,y=0.85 (repeatable)");
  ver->add_option("--tol", va.tol, "Relative tolerance");
  ver->add_option("--seed", va.seed);
  ver->add_option("--terms", va.terms, "Truncation per index")->check(CLI::PositiveNumber);

  CatalogArgs ca;
  auto* cat = app.add_subcommand("catalog", "Manage user characteristic lists (file from HYP_CATALOG)");
  cat->require_subcommand(1);
  auto* add = cat->add_subcommand("add", "Store a pattern written over m, n (and p)");
  add->add_option("--name", ca.name)->required();
  add->add_option("--num", ca.num)->required();
  add->add_option("--den", ca.den)->required();
  auto* rem = cat->add_subcommand("remove", "Remove a user pattern");
  rem->add_option("--name", ca.name)->required();
  auto* list = cat->add_subcommand("list", "List pattern names");
  list->add_option("--format", ca.format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? Ok : Usage;
  }

  try {
    if (recog->parsed()) return cmd_recog(ra);
    if (ols->parsed()) return cmd_olsson(oa);
    if (roc->parsed()) return cmd_roc(rca);
    if (ver->parsed()) return cmd_verify(va);
    if (rw->parsed()) return cmd_rewrite(wa);
    if (chl->parsed()) return cmd_charlist(cla);
    if (cr->parsed()) return cmd_callroc(cra);
    if (add->parsed()) return cmd_catalog_add(ca);
    if (rem->parsed()) return cmd_catalog_remove(ca);
    if (list->parsed()) return cmd_catalog_list(ca);
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_for(e);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Usage;
  }
  return Usage;
}
