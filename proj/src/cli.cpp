#include "dgakit/cli.hpp"

#include "dgakit/cochain.hpp"
#include "dgakit/errors.hpp"
#include "dgakit/minimal.hpp"
#include "dgakit/obstruction.hpp"
#include "dgakit/presentation.hpp"
#include "dgakit/recurrence.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace dgakit {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Collected output of a subcommand: text lines and the same data as JSON.
struct Report {
  std::vector<std::string> lines;
  Json json = Json::object();
  bool ok = true;  // false turns into exit status 1
  std::string failure;

  void line(const std::string& s) { lines.push_back(s); }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string ends(const std::string& s, std::size_t n) { return s.size() >= n ? s.substr(s.size() - n) : s; }

Vector parse_vector(const std::string& text) {
  Vector v;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) v.push_back(parse_rational(item));
  }
  return v;
}

std::string join(const Vector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return "[" + s + "]";
}

Json json_vector(const Vector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

std::string opt_rational(const std::optional<Rational>& q) { return q ? to_string(*q) : "none"; }

// Inputs shared by the algebra subcommands.
struct ModelInput {
  std::string model;
  std::string file;
  std::string name;
  mutable std::string resolved;  // name of the loaded algebra

  void attach(CLI::App* cmd) {
    cmd->add_option("--model", model, "canned model name");
    cmd->add_option("--file", file, "presentation file");
    cmd->add_option("--dga", name, "dga declared in the file");
  }

  FreeCDGA load() const {
    if (!model.empty() && !file.empty()) throw UsageError("give either --model or --file, not both");
    if (!model.empty()) {
      resolved = model;
      return canned_model(model);
    }
    if (file.empty()) throw UsageError("an algebra is required: --model NAME or --file PATH --dga NAME");
    Workspace ws = build_workspace(parse_presentation(read_file(file)));
    if (name.empty()) {
      if (ws.algebras.size() != 1) throw UsageError("--dga is required when the file declares several algebras");
      resolved = ws.algebras.begin()->first;
      return ws.algebras.begin()->second;
    }
    resolved = name;
    return ws.algebra(name);
  }
};

struct ComplexInput {
  std::string path;
  std::string name;

  void attach(CLI::App* cmd) {
    cmd->add_option("--complex", path, "complex file (.cx) or presentation file")->required();
    cmd->add_option("--name", name, "complex declared in a presentation file");
  }

  SimplicialPair load() const {
    const std::string text = read_file(path);
    if (ends(path, 3) == ".cx") return parse_complex(text);
    Workspace ws = build_workspace(parse_presentation(text));
    if (name.empty()) {
      if (ws.complexes.size() != 1) throw UsageError("--name is required when the file declares several complexes");
      return ws.complexes.begin()->second;
    }
    return ws.complex(name);
  }
};

int max_degree(const FreeCDGA& M) {
  int n = 0;
  for (const auto& g : M.generators()) n = std::max(n, g.degree);
  return n;
}

std::vector<long> parse_weights(const std::string& text, const FreeCDGA& M) {
  std::vector<long> w;
  if (text.empty()) return w;
  for (const auto& q : parse_vector(text)) {
    if (!is_integral(q)) throw UsageError("weights must be integers");
    w.push_back(q.get_num().get_si());
  }
  if (w.size() != M.size()) throw UsageError("one weight per generator is required");
  return w;
}

// ---------------------------------------------------------------------------

Report cmd_validate(const std::string& file) {
  Report r;
  Workspace ws = build_workspace(parse_presentation(read_file(file)));
  Json items = Json::array();
  for (const auto& [kind, name] : ws.order) {
    Json item{{"kind", kind}, {"name", name}};
    std::string status = "ok";
    if (kind == "dga") {
      const FreeCDGA& A = ws.algebra(name);
      item["generators"] = A.size();
      item["minimal"] = A.is_minimal();
      status = std::string("ok (d^2 = 0") + (A.is_minimal() ? ", minimal)" : ")");
    } else if (kind == "morphism") {
      const bool chain = ws.morphism(name).is_chain_map();
      item["chain_map"] = chain;
      if (!chain) {
        status = "NotChainMap";
        r.ok = false;
      }
    } else if (kind == "homotopy") {
      const Homotopy& H = ws.homotopy(name);
      bool valid = H.is_chain_map();
      const auto& [from, to] = ws.endpoints.at(name);
      if (valid && from && to) valid = validate_homotopy(H, ws.morphism(*from), ws.morphism(*to));
      item["valid"] = valid;
      if (!valid) {
        status = "NotChainMap";
        r.ok = false;
      }
    } else if (kind == "complex") {
      const SimplicialPair& X = ws.complex(name);
      item["dimension"] = X.dimension();
      status = "ok (dimension " + std::to_string(X.dimension()) + ")";
    }
    item["status"] = status;
    r.line(kind + " " + name + ": " + status);
    items.push_back(item);
  }
  r.json["declarations"] = items;
  if (!r.ok) r.failure = "NotChainMap: a declared map is not compatible with the differentials";
  return r;
}

Report cmd_minmodel(const ModelInput& in, int degree) {
  Report r;
  const FreeCDGA A = in.load();
  MinimalModel mm = minimal_model_of(A, degree);
  const std::string name = "M_" + in.resolved;
  r.line(print_declaration(describe_algebra(name, mm.model)));
  Json gens = Json::array();
  for (std::uint32_t i = 0; i < mm.model.size(); ++i) {
    const auto& g = mm.model.generators()[i];
    gens.push_back({{"name", g.name},
                    {"degree", g.degree},
                    {"d", mm.model.format(mm.model.d_of(i))},
                    {"image", A.format(mm.map.image(i))}});
    r.line("map " + g.name + " -> " + A.format(mm.map.image(i)));
  }
  Json dims = Json::array();
  std::string dims_line;
  for (int k = 0; k <= degree; ++k) {
    const auto a = A.cohomology_dim(k);
    const auto m = mm.model.cohomology_dim(k);
    dims.push_back({{"degree", k}, {"input", a}, {"model", m}});
    dims_line += (k ? " " : "") + std::to_string(m);
    if (a != m) r.ok = false;
  }
  r.line("cohomology through degree " + std::to_string(degree) + ": " + dims_line);
  r.json["generators"] = gens;
  r.json["cohomology"] = dims;
  if (!r.ok) r.failure = "InternalError: cohomology of the model differs from the input";
  return r;
}

Report cmd_periods(const ModelInput& in, int degree, const std::string& weights) {
  Report r;
  const FreeCDGA M = in.load();
  PullbackTarget P = pullback_target(M, degree, parse_weights(weights, M));
  PeriodsResult res = homotopy_periods(P.phi, P.ledger, degree);
  Json symbols = Json::array();
  for (std::size_t i = 0; i < res.run.symbols.size(); ++i) {
    const std::string& s = res.run.symbols[i];
    if (s.empty()) continue;
    const std::string d = res.run.target.format(res.run.integrands[i]);
    const std::string w = to_string(res.run.ledger.atom(s));
    r.line("symbol " + s + ": d = " + d + ", weight " + w);
    symbols.push_back({{"symbol", s}, {"d", d}, {"weight", w}});
  }
  Json items = Json::array();
  for (const auto& I : res.integrands) {
    const std::string text = res.run.target.format(I.integrand);
    r.line("integrand " + I.generator + ": " + text);
    r.line("weight " + I.generator + ": " + opt_rational(I.weight));
    items.push_back({{"generator", I.generator}, {"integrand", text}, {"weight", opt_rational(I.weight)}});
  }
  if (res.integrands.empty()) r.line("no generators of degree " + std::to_string(degree));
  r.json["symbols"] = symbols;
  r.json["integrands"] = items;
  return r;
}

Report cmd_reduce(const ModelInput& in, int degree, const std::string& weights) {
  Report r;
  const FreeCDGA M = in.load();
  PullbackTarget P = pullback_target(M, degree, parse_weights(weights, M));
  PeriodsResult res = homotopy_periods(P.phi, P.ledger, degree);
  const FreeCDGA& T = res.run.target;
  Json items = Json::array();
  for (const auto& I : res.integrands) {
    ReductionResult red = reduce_weight(T, I.integrand, res.run.ledger);
    r.line("integrand " + I.generator + ": " + T.format(I.integrand));
    r.line("raw weight " + I.generator + ": " + opt_rational(I.weight));
    Json steps = Json::array();
    for (const auto& s : red.steps) {
      r.line("step " + to_string(s.from_weight) + " -> " + to_string(s.to_weight) + ": subtract d(" +
             T.format(s.primitive) + ")");
      steps.push_back({{"from", to_string(s.from_weight)},
                       {"to", to_string(s.to_weight)},
                       {"primitive", T.format(s.primitive)}});
    }
    r.line("reduced " + I.generator + ": " + T.format(red.reduced));
    r.line("reduced weight " + I.generator + ": " + opt_rational(red.weight));
    items.push_back({{"generator", I.generator},
                     {"integrand", T.format(I.integrand)},
                     {"raw_weight", opt_rational(I.weight)},
                     {"steps", steps},
                     {"correction", T.format(red.correction)},
                     {"reduced", T.format(red.reduced)},
                     {"reduced_weight", opt_rational(red.weight)}});
  }
  r.json["integrands"] = items;
  return r;
}

Report cmd_concat(const std::string& file, const std::string& first, const std::string& second) {
  Report r;
  Workspace ws = build_workspace(parse_presentation(read_file(file)));
  const Homotopy& Phi = ws.homotopy(first);
  const Homotopy& Psi = ws.homotopy(second);
  Concatenation c = concatenate(Phi, Psi);
  const FreeCDGA& S = Phi.source();
  const FreeCDGA& T = Phi.target();
  const bool valid = validate_homotopy(c.xi, Phi.endpoint(0), Psi.endpoint(1));
  r.line(std::string("endpoints: ") + (valid ? "exact" : "FAILED"));
  Json items = Json::array();
  bool additive = true;
  for (std::uint32_t v = 0; v < c.xi.defined(); ++v) {
    const std::string& g = S.generators()[v].name;
    const Element triangle = integrate_lower_triangle(T, apply_square(S, T, c.square, S.d_of(v)));
    r.line("xi " + g + " = " + format(T, c.xi.image(v)));
    r.line("defect " + g + ": " + T.format(c.additivity_defect[v]));
    r.line("triangle " + g + ": " + T.format(triangle));
    additive = additive && c.additivity_defect[v].is_zero();
    items.push_back({{"generator", g},
                     {"xi", format(T, c.xi.image(v))},
                     {"defect", T.format(c.additivity_defect[v])},
                     {"triangle", T.format(triangle)}});
  }
  r.line(std::string("additive: ") + (additive ? "true" : "false"));
  r.json["endpoints_exact"] = valid;
  r.json["additive"] = additive;
  r.json["generators"] = items;
  if (!valid) {
    r.ok = false;
    r.failure = "InternalError: concatenation failed endpoint validation";
  }
  return r;
}

Report cmd_nullhomotopy(const ModelInput& in, int through, bool positive) {
  Report r;
  const FreeCDGA M = in.load();
  Json items = Json::array();
  if (positive) {
    auto grading = detect_positive_weights(M);
    if (!grading) fail("InvalidGrading", "no positive weights on the given generator basis");
    PullbackTarget P = pullback_target(M, max_degree(M) + 1);
    PositiveWeightNullhomotopy res = positive_weight_nullhomotopy(P.phi, *grading, P.ledger);
    const bool valid = validate_homotopy(res.Phi, res.zero, res.phi);
    const WeightFiltration W = weight_filtration(M, max_degree(M));
    r.line(std::string("valid: ") + (valid ? "true" : "false"));
    for (std::uint32_t v = 0; v < M.size(); ++v) {
      const auto& g = M.generators()[v];
      const std::string& s = res.symbols[v];
      const int level = W.level_of[v];
      const std::string w = s.empty() ? "none" : to_string(res.ledger.atom(s));
      const int bound = g.degree + level - 1;
      r.line(g.name + ": weight " + std::to_string(grading->weights[v]) + ", level " + std::to_string(level) +
             ", Phi = " + format(res.target, res.Phi.image(v)));
      if (!s.empty())
        r.line("  " + s + ": d = " + res.target.format(res.target.d_of(*res.target.index_of(s))) + ", weight " + w +
               " (bound " + std::to_string(bound) + ")");
      items.push_back({{"generator", g.name},
                       {"weight", grading->weights[v]},
                       {"level", level},
                       {"symbol", s},
                       {"symbol_weight", w},
                       {"bound", bound},
                       {"Phi", format(res.target, res.Phi.image(v))}});
    }
    r.json["valid"] = valid;
    r.ok = valid;
    if (!valid) r.failure = "InternalError: positive-weight nullhomotopy failed validation";
  } else {
    const int n = through > 0 ? through : max_degree(M);
    PullbackTarget P = pullback_target(M, n + 1);
    NullhomotopyRun run = sullivan_nullhomotopy(P.phi, P.ledger, n);
    bool within = true;
    for (std::uint32_t v = 0; v < run.Phi.defined(); ++v) {
      const auto& g = M.generators()[v];
      auto w = run.ledger.weight(run.target, run.Phi.image(v));
      const int bound = 2 * g.degree - 2;
      const bool ok = !w || *w <= bound;
      within = within && ok;
      r.line(g.name + ": weight " + opt_rational(w) + " (bound " + std::to_string(bound) + "), Phi = " +
             format(run.target, run.Phi.image(v)));
      items.push_back({{"generator", g.name},
                       {"weight", opt_rational(w)},
                       {"bound", bound},
                       {"Phi", format(run.target, run.Phi.image(v))}});
    }
    r.line(std::string("within 2k-2: ") + (within ? "true" : "false"));
    r.json["within_bound"] = within;
  }
  r.json["generators"] = items;
  return r;
}

Report cmd_distortion(const ModelInput& in, int degree, const std::string& functional) {
  Report r;
  const FreeCDGA M = in.load();
  std::size_t count = 0;
  for (const auto& g : M.generators()) count += g.degree == degree;
  if (count == 0) throw UsageError("no generators of degree " + std::to_string(degree));
  Vector alpha = functional.empty() ? Vector(count) : parse_vector(functional);
  if (functional.empty()) alpha[0] = 1;
  if (alpha.size() != count) throw UsageError("functional needs " + std::to_string(count) + " entries");
  const Rational e = predict_distortion_exponent(M, degree, alpha);
  const HurewiczImage h = hurewicz_image(M, degree);
  r.line("hurewicz image dimension: " + std::to_string(h.basis.size()));
  r.line("exponent: " + to_string(e));
  r.json["hurewicz_dimension"] = h.basis.size();
  r.json["exponent"] = to_string(e);
  return r;
}

Report cmd_iso(const ComplexInput& in, int k, const std::string& side, std::size_t cap) {
  Report r;
  const SimplicialPair X = in.load();
  if (side != "forms" && side != "chains") throw UsageError("--side must be forms or chains");
  IsoperimetricResult res = iso_constant(X, k, side == "forms" ? IsoSide::Forms : IsoSide::Chains, cap);
  r.line((side == "forms" ? "C1 = " : "C2 = ") + to_string(res.constant));
  r.line("extremal: " + join(res.extremal));
  r.line("optimizer: " + join(res.optimizer));
  r.line("candidates: " + std::to_string(res.vertices));
  r.json["side"] = side;
  r.json["constant"] = to_string(res.constant);
  r.json["extremal"] = json_vector(res.extremal);
  r.json["optimizer"] = json_vector(res.optimizer);
  r.json["candidates"] = res.vertices;
  return r;
}

Report cmd_duality(const ComplexInput& in, int k, std::size_t cap) {
  Report r;
  DualityReport d = duality_check(in.load(), k, cap);
  if (d.equal) {
    r.line("C1 = C2 = " + to_string(d.forms.constant) + ", equal: true");
  } else {
    r.line("C1 = " + to_string(d.forms.constant) + ", C2 = " + to_string(d.chains.constant) + ", equal: false");
  }
  r.json["C1"] = to_string(d.forms.constant);
  r.json["C2"] = to_string(d.chains.constant);
  r.json["equal"] = d.equal;
  return r;
}

Report cmd_round(const ComplexInput& in, int n, const std::string& c, const std::string& w) {
  Report r;
  RoundingResult res = guth_round(in.load(), n, parse_vector(c), parse_vector(w));
  r.line("b: " + join(res.b));
  r.line("rounded: " + join(res.rounded));
  r.line("remainder: " + join(res.remainder));
  r.line(std::string("snapped: ") + (res.snapped ? "true" : "false"));
  r.line(std::string("within bound: ") + (res.within_bound ? "true" : "false"));
  r.json["b"] = json_vector(res.b);
  r.json["rounded"] = json_vector(res.rounded);
  r.json["remainder"] = json_vector(res.remainder);
  r.json["snapped"] = res.snapped;
  r.json["within_bound"] = res.within_bound;
  return r;
}

Report cmd_bounds(const RecurrenceOptions& o, bool table) {
  Report r;
  RecurrenceReport rep = weird_recurrence(o);
  r.line("kappa: " + format_scientific(rep.kappa));
  r.line("crossing: " + format_scientific(rep.crossing));
  r.line("ratio non-increasing: " + std::string(rep.ratio_nonincreasing ? "true" : "false"));
  r.line("max ratio: " + format_scientific(rep.max_ratio));
  Json rows = Json::array();
  for (const auto& row : rep.rows) {
    if (table)
      r.line(format_scientific(row.L) + " gamma " + format_scientific(row.gamma) + " ratio " +
             format_scientific(row.ratio));
    rows.push_back({{"L", row.L}, {"rho", row.rho}, {"gamma", row.gamma}, {"ratio", row.ratio}});
  }
  r.json["kappa"] = rep.kappa;
  r.json["crossing"] = format_scientific(rep.crossing);
  r.json["crossing_value"] = rep.crossing;
  r.json["ratio_nonincreasing"] = rep.ratio_nonincreasing;
  r.json["max_ratio"] = rep.max_ratio;
  r.json["rows"] = rows;
  return r;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with free graded-commutative DGAs, homotopies and cochains"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "emit JSON");

  std::string file;
  auto* validate = app.add_subcommand("validate", "parse a presentation file and check every declaration");
  validate->add_option("file", file, "presentation file")->required();
  validate->add_flag("--json", json, "emit JSON");

  ModelInput model;
  int degree = 0;
  std::string weights;
  auto* minmodel = app.add_subcommand("minmodel", "minimal model through a degree");
  model.attach(minmodel);
  minmodel->add_option("--degree", degree, "degree bound")->required();
  minmodel->add_flag("--json", json, "emit JSON");

  auto* periods = app.add_subcommand("periods", "homotopy-period integrands of the generic pullback");
  model.attach(periods);
  periods->add_option("--degree", degree, "sphere dimension n")->required();
  periods->add_option("--weights", weights, "comma-separated ledger weights per generator");
  periods->add_flag("--json", json, "emit JSON");

  auto* reduce = app.add_subcommand("reduce", "period integrands reduced by exact corrections");
  model.attach(reduce);
  reduce->add_option("--degree", degree, "sphere dimension n")->required();
  reduce->add_option("--weights", weights, "comma-separated ledger weights per generator");
  reduce->add_flag("--json", json, "emit JSON");

  std::string first, second;
  auto* concat = app.add_subcommand("concat", "concatenate two homotopies declared in a file");
  concat->add_option("--file", file, "presentation file")->required();
  concat->add_option("--first", first, "homotopy from f to g")->required();
  concat->add_option("--second", second, "homotopy from g to h")->required();
  concat->add_flag("--json", json, "emit JSON");

  int through = 0;
  bool positive = false;
  auto* nullh = app.add_subcommand("nullhomotopy", "stepwise nullhomotopy of the generic pullback");
  model.attach(nullh);
  nullh->add_option("--through", through, "last degree processed (default: all generators)");
  nullh->add_flag("--positive-weights", positive, "use the detected positive-weight grading");
  nullh->add_flag("--json", json, "emit JSON");

  std::string functional;
  auto* distortion = app.add_subcommand("distortion", "predicted distortion exponent in a degree");
  model.attach(distortion);
  distortion->add_option("--degree", degree, "degree n")->required();
  distortion->add_option("--functional", functional, "comma-separated values on the degree-n generators");
  distortion->add_flag("--json", json, "emit JSON");

  ComplexInput cx;
  int k = 1;
  std::string side = "forms";
  std::size_t cap = 12;
  auto* iso = app.add_subcommand("iso", "isoperimetric constant of a simplicial pair");
  cx.attach(iso);
  iso->add_option("--k", k, "cochain degree")->required();
  iso->add_option("--side", side, "forms or chains");
  iso->add_option("--cap", cap, "largest number of simplices to enumerate over");
  iso->add_flag("--json", json, "emit JSON");

  auto* duality = app.add_subcommand("duality", "compare the forms and chains constants");
  cx.attach(duality);
  duality->add_option("--k", k, "cochain degree")->required();
  duality->add_option("--cap", cap, "largest number of simplices to enumerate over");
  duality->add_flag("--json", json, "emit JSON");

  int n = 1;
  std::string cvec, wvec;
  auto* round = app.add_subcommand("round", "nearest-integer rounding of a coboundary witness");
  cx.attach(round);
  round->add_option("--n", n, "cochain degree")->required();
  round->add_option("--c", cvec, "integral cocycle, comma-separated")->required();
  round->add_option("--w", wvec, "rational cocycle, comma-separated")->required();
  round->add_flag("--json", json, "emit JSON");

  RecurrenceOptions ro;
  bool table = false;
  auto* bounds = app.add_subcommand("bounds", "iterate the nullhomotopy length recurrence");
  bounds->add_option("--kappa", ro.kappa, "exponent constant (default sqrt(2 ln(2 C C')))");
  bounds->add_option("--C", ro.C, "constant C");
  bounds->add_option("--Cprime", ro.Cprime, "constant C'");
  bounds->add_option("--n", ro.n, "sphere dimension");
  bounds->add_option("--lmin", ro.Lmin, "smallest L");
  bounds->add_option("--lmax", ro.Lmax, "largest L");
  bounds->add_option("--samples", ro.samples_per_decade, "samples per decade");
  bounds->add_flag("--table", table, "print every sample");
  bounds->add_flag("--json", json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    Report r;
    if (name == "validate") r = cmd_validate(file);
    else if (name == "minmodel") r = cmd_minmodel(model, degree);
    else if (name == "periods") r = cmd_periods(model, degree, weights);
    else if (name == "reduce") r = cmd_reduce(model, degree, weights);
    else if (name == "concat") r = cmd_concat(file, first, second);
    else if (name == "nullhomotopy") r = cmd_nullhomotopy(model, through, positive);
    else if (name == "distortion") r = cmd_distortion(model, degree, functional);
    else if (name == "iso") r = cmd_iso(cx, k, side, cap);
    else if (name == "duality") r = cmd_duality(cx, k, cap);
    else if (name == "round") r = cmd_round(cx, n, cvec, wvec);
    else r = cmd_bounds(ro, table);
    if (json) {
      Json doc{{"command", name}, {"ok", r.ok}};
      for (auto& [key, value] : r.json.items()) doc[key] = value;
      out << doc.dump(2) << "\n";
    } else {
      for (const auto& l : r.lines) out << l << (l.empty() || l.back() != '\n' ? "\n" : "");
    }
    if (!r.ok) {
      err << "error: " << r.failure << "\n";
      return 1;
    }
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    if (json) out << Json{{"command", name}, {"ok", false}, {"error", e.kind()}, {"detail", e.detail()}}.dump(2) << "\n";
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back("dgakit");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace dgakit
