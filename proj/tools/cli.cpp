#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rankcalc/error.hpp"
#include "rankcalc/functor.hpp"
#include "rankcalc/mesh.hpp"
#include "rankcalc/qrank.hpp"
#include "rankcalc/rank_function.hpp"
#include "rankcalc/text_format.hpp"

namespace rankcalc::cli {

namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

constexpr const char* kSchema = "rankcalc-report/1";

struct Report {
  json result = json::object();
  json diagnostics = json::array();
  std::ostringstream human;
  int status = 0;

  void note(const std::string& code, const std::string& message, const char* severity = "warning") {
    diagnostics.push_back({{"severity", severity}, {"code", code}, {"message", message}});
  }
};

std::string read_text(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(Errc::io_error, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw Error(Errc::io_error, "cannot write '" + path + "'");
}

Execution execution(const CommandRequest& r) { return r.serial ? Execution::serial : Execution::parallel; }

Category load_category(const std::string& path, std::istream& in, Execution exec) {
  auto p = parse_presentation(read_text(path, in));
  const auto report = validate(p, exec);
  if (!report.ok()) {
    const auto& v = report.violations.front();
    throw Error(Errc::invalid_presentation, "'" + path + "' is not a valid presentation: " +
                                                violation_name(v.kind) + ": " + v.detail);
  }
  return make_category(std::move(p));
}

// The category named on the command line wins over the one named in the file;
// paths inside files are relative to the file.
std::string category_path(const CommandRequest& r, const std::optional<std::string>& from_file,
                          const std::string& file_path) {
  if (!r.category.empty()) return r.category;
  if (!from_file) throw Error(Errc::usage, "no category: pass --cat or add a 'category' line to '" + file_path + "'");
  fs::path p(*from_file);
  if (p.is_relative() && file_path != "-") p = fs::path(file_path).parent_path() / p;
  return p.string();
}

std::string require(const std::string& value, const char* flag) {
  if (value.empty()) throw Error(Errc::usage, std::string("missing required option ") + flag);
  return value;
}

RankFunction load_rank(const CommandRequest& r, std::istream& in, Report& report) {
  const std::string path = require(r.rank, "--rank");
  const RankFile file = parse_rank_file(read_text(path, in));
  const Category c = load_category(category_path(r, file.category_path, path), in, execution(r));
  const auto& p = *c;
  if (file.kind == RankFile::Kind::coefficients) {
    Vector coef(p.size());
    for (const auto& [name, value] : file.entries) coef[p.id(name)] = value;
    return RankFunction(c, std::move(coef));
  }
  std::vector<std::optional<Rational>> slots(p.size());
  for (const auto& [name, value] : file.entries) slots[p.id(name)] = value;
  Vector values(p.size());
  for (ObjectId x = 0; x < p.size(); ++x) {
    if (!slots[x]) throw Error(Errc::missing_value, "no value given for " + p.name(x));
    values[x] = *slots[x];
  }
  auto solved = from_object_values(c, values, false);
  if (solved.status == SolveStatus::no_solution)
    throw Error(Errc::no_solution, "the object values are not those of any rank function on this category");
  if (solved.status == SolveStatus::non_unique)
    throw Error(Errc::non_unique, "the object values do not determine the rank function (kernel dimension " +
                                      std::to_string(solved.kernel.size()) + ")");
  report.note("Recovered", "coefficients recovered from object values", "info");
  return *solved.function;
}

json names_json(const CategoryPresentation& p, const std::vector<ObjectId>& ids) {
  json a = json::array();
  for (auto x : ids) a.push_back(p.name(x));
  return a;
}

json vector_json(const Vector& v) {
  json a = json::array();
  for (const auto& c : v) a.push_back(to_string(c));
  return a;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

std::vector<std::string> names(const CategoryPresentation& p, const std::vector<ObjectId>& ids) {
  std::vector<std::string> out;
  for (auto x : ids) out.push_back(p.name(x));
  return out;
}

std::size_t sigma_order(const CategoryPresentation& p) {
  std::size_t order = 1;
  for (const auto& o : sigma_orbits(p)) order = std::lcm(order, o.size());
  return order;
}

void summarize(const CategoryPresentation& p, Report& report) {
  std::vector<std::size_t> sizes;
  for (const auto& o : sigma_orbits(p)) sizes.push_back(o.size());
  report.result["indecomposables"] = p.size();
  report.result["period"] = p.period() ? json(*p.period()) : json(nullptr);
  report.result["sigma_order"] = sigma_order(p);
  report.result["sigma_orbit_sizes"] = sizes;
  report.result["triangles"] = p.triangles().size();
}

std::string period_text(const CategoryPresentation& p) {
  return p.period() ? "period " + std::to_string(*p.period())
                    : "no declared period (sigma order " + std::to_string(sigma_order(p)) + ")";
}

// --- subcommands -----------------------------------------------------------

void cmd_validate(const CommandRequest& r, std::istream& in, Report& report) {
  const auto p = parse_presentation(read_text(r.input, in));
  const auto v = validate(p, execution(r));
  report.result["valid"] = v.ok();
  summarize(p, report);
  json violations = json::array();
  for (const auto& x : v.violations)
    violations.push_back({{"kind", violation_name(x.kind)}, {"detail", x.detail}, {"location", x.location}});
  report.result["violations"] = violations;
  if (v.ok()) {
    std::vector<std::string> sizes;
    for (const auto& o : sigma_orbits(p)) sizes.push_back(std::to_string(o.size()));
    report.human << "valid: " << p.size() << " indecomposables, " << period_text(p) << "\n";
    report.human << "sigma-orbits: " << sizes.size() << " (sizes " << join(sizes, ", ") << ")\n";
    report.human << "triangles: " << p.triangles().size() << ", all pass\n";
  } else {
    report.status = 1;
    report.human << "invalid: " << v.violations.size() << " violation" << (v.violations.size() == 1 ? "" : "s") << "\n";
    for (const auto& x : v.violations) report.human << "  " << violation_name(x.kind) << ": " << x.detail << "\n";
    report.note("InvalidPresentation", std::to_string(v.violations.size()) + " violations", "error");
  }
}

// Returns true when the presentation itself was written to `out`.
bool cmd_build_an(const CommandRequest& r, std::ostream& out, Report& report) {
  if (r.n < 1) throw Error(Errc::usage, "--n must be at least 1");
  const auto p = cluster_category_an(r.n, r.window, execution(r));
  const std::string text = serialize_presentation(p);
  if (r.output.empty()) {
    out << text;
    return true;
  }
  write_text(r.output, text);
  report.result["n"] = r.n;
  summarize(p, report);
  report.result["output"] = r.output;
  report.human << "wrote " << r.output << ": " << p.size() << " indecomposables, " << period_text(p) << ", "
               << p.triangles().size() << " AR triangles\n";
  return false;
}

void cmd_simples(const CommandRequest& r, std::istream& in, Report& report) {
  const Category c = load_category(require(r.category, "--cat"), in, execution(r));
  const auto& p = *c;
  const auto orbit = orbit_index(p);
  json list = json::array();
  for (ObjectId z = 0; z < p.size(); ++z) {
    // The presenting triangle ends at z and its connecting map has image S_z.
    std::optional<std::string> presenting;
    for (const auto& t : p.triangles()) {
      if (!(t.g.target == ObjectExpr::single(z))) continue;
      const auto dv = image_dim_vector(p, t.h, execution(r));
      bool simple = true;
      for (ObjectId w = 0; w < p.size(); ++w) simple = simple && dv[w] == (w == z ? 1u : 0u);
      if (simple) {
        presenting = t.name;
        break;
      }
    }
    list.push_back({{"simple", "S_" + p.name(z)},
                    {"anchor", p.name(z)},
                    {"orbit", orbit[z] + 1},
                    {"presenting_triangle", presenting ? json(*presenting) : json(nullptr)}});
    report.human << "S_" << p.name(z) << "  orbit " << orbit[z] + 1 << "  "
                 << (presenting ? "presented by " + *presenting : std::string("no presenting triangle listed")) << "\n";
  }
  report.result["simples"] = list;
}

void cmd_orbits(const CommandRequest& r, std::istream& in, Report& report) {
  const Category c = load_category(require(r.category, "--cat"), in, execution(r));
  const auto& p = *c;
  json list = json::array();
  std::size_t k = 0;
  for (const auto& o : sigma_orbits(p)) {
    list.push_back(names_json(p, o));
    report.human << "orbit " << ++k << " (" << o.size() << "): " << join(names(p, o), " ") << "\n";
  }
  report.result["orbits"] = list;
}

json check_json(const CategoryPresentation& p, const FactorizationCheck& check) {
  json w = json::array();
  for (const auto& x : check.witnesses)
    w.push_back({{"source", p.name(x.source)}, {"target", p.name(x.target)}, {"morphism", vector_json(x.morphism)}});
  return {{"holds", check.holds}, {"witnesses", w}};
}

void human_check(std::ostream& os, const char* label, const CategoryPresentation& p, const FactorizationCheck& c) {
  os << label << ": " << (c.holds ? "yes" : "no");
  if (!c.holds) {
    const auto& w = c.witnesses.front();
    os << " (first witness in Hom(" << p.name(w.source) << ", " << p.name(w.target) << ")";
    if (c.witnesses.size() > 1) os << ", " << c.witnesses.size() << " failing pairs";
    os << ")";
  }
  os << "\n";
}

void cmd_decompose(const CommandRequest& r, std::istream& in, Report& report) {
  const RankFunction rho = load_rank(r, in, report);
  const auto& p = rho.category();
  const auto exec = execution(r);
  json coef = json::object();
  for (ObjectId z = 0; z < p.size(); ++z) coef[p.name(z)] = to_string(rho.coefficient(z));
  report.result["coefficients"] = coef;

  const auto d = decompose(rho);
  json terms = json::array();
  report.human << "decomposition:";
  if (d.terms.empty()) report.human << " 0";
  report.human << "\n";
  for (const auto& t : d.terms) {
    terms.push_back({{"orbit", names_json(p, t.orbit)}, {"multiplicity", t.multiplicity.get_str()}});
    report.human << "  " << t.multiplicity.get_str() << " x orbit of " << p.name(t.orbit.front()) << " {"
                 << join(names(p, t.orbit), ", ") << "}\n";
  }
  report.result["decomposition"] = terms;

  const bool have_generators = p.generators().declared();
  const auto cls = classify(rho, have_generators);
  if (!have_generators)
    report.note("GeneratorsUnknown", "the presentation declares no generators; primality not decided");
  report.result["classification"] = {{"integral", cls.integral},
                                     {"irreducible", cls.irreducible},
                                     {"basic", cls.basic},
                                     {"prime", cls.prime ? json(*cls.prime) : json(nullptr)},
                                     {"morphism_faithful", cls.morphism_faithful}};
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  report.human << "integral: " << yn(cls.integral) << "\nirreducible: " << yn(cls.irreducible)
               << "\nbasic: " << yn(cls.basic)
               << "\nprime: " << (cls.prime ? yn(*cls.prime) : "unknown (no generators declared)")
               << "\nmorphism-faithful: " << yn(cls.morphism_faithful) << "\n";

  const auto idem = is_idempotent(rho, exec);
  const auto loc = is_localising(rho, exec);
  report.result["idempotent"] = check_json(p, idem);
  report.result["localising"] = check_json(p, loc);
  human_check(report.human, "idempotent", p, idem);
  human_check(report.human, "localising", p, loc);
}

MorphismMatrix resolve_morphism(const CategoryPresentation& p, const std::string& spec) {
  if (spec.rfind("id:", 0) == 0) return identity_morphism(p, p.parse_object(spec.substr(3)));
  if (spec.rfind("basis:", 0) == 0) {
    std::vector<std::string> parts;
    std::stringstream ss(spec.substr(6));
    for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
    if (parts.size() != 3) throw Error(Errc::usage, "basis morphisms are written basis:X:Y:k");
    const auto x = p.id(parts[0]), y = p.id(parts[1]);
    std::size_t k = 0;
    try {
      k = std::stoul(parts[2]);
    } catch (const std::exception&) {
      throw Error(Errc::usage, "basis index '" + parts[2] + "' is not a number");
    }
    if (k < 1 || k > p.hom_dim(x, y))
      throw Error(Errc::usage, "basis index " + parts[2] + " out of range for Hom(" + parts[0] + ", " + parts[1] + ")");
    return basis_morphism(p, x, y, k - 1);
  }
  if (const auto* m = p.find_morphism(spec)) return *m;
  throw Error(Errc::unknown_object, "no morphism named '" + spec + "'");
}

void cmd_eval(const CommandRequest& r, std::istream& in, Report& report) {
  if (r.morphism.empty() == r.object.empty()) throw Error(Errc::usage, "eval needs exactly one of --morphism, --object");
  const RankFunction rho = load_rank(r, in, report);
  const auto& p = rho.category();
  Rational value;
  if (!r.morphism.empty()) {
    value = evaluate(rho, resolve_morphism(p, r.morphism), execution(r));
    report.result["morphism"] = r.morphism;
  } else {
    value = evaluate_on_object(rho, p.parse_object(r.object));
    report.result["object"] = r.object;
  }
  report.result["value"] = to_string(value);
  report.human << to_string(value) << "\n";
}

std::vector<Triangle> selected_triangles(const CategoryPresentation& p, const std::vector<std::string>& wanted) {
  if (wanted.empty()) return p.triangles();
  std::vector<Triangle> out;
  for (const auto& name : wanted) {
    const auto it = std::find_if(p.triangles().begin(), p.triangles().end(),
                                 [&](const Triangle& t) { return t.name == name; });
    if (it == p.triangles().end()) throw Error(Errc::unknown_object, "no triangle named '" + name + "'");
    out.push_back(*it);
  }
  return out;
}

void cmd_check(const CommandRequest& r, std::istream& in, Report& report) {
  const std::string path = require(r.values, "--values");
  const RankFile file = parse_rank_file(read_text(path, in));
  const Category c = load_category(category_path(r, file.category_path, path), in, execution(r));
  const auto& p = *c;
  std::vector<std::optional<Rational>> values(p.size());
  if (file.kind == RankFile::Kind::object_values) {
    for (const auto& [name, v] : file.entries) values[p.id(name)] = v;
  } else {
    Vector coef(p.size());
    for (const auto& [name, v] : file.entries) coef[p.id(name)] = v;
    const auto ob = object_values(RankFunction(c, coef));
    for (ObjectId x = 0; x < p.size(); ++x) values[x] = ob[x];
  }
  const auto axioms = check_axioms(c, values, selected_triangles(p, r.triangles));
  json list = json::array();
  for (const auto& a : axioms.results) {
    const char* state = !a.checked ? "skipped" : a.pass ? "pass" : "fail";
    list.push_back({{"axiom", axiom_name(a.axiom)}, {"status", state}, {"detail", a.detail}});
    report.human << axiom_name(a.axiom) << ": " << state;
    if (!a.detail.empty() && (!a.pass || !a.checked)) report.human << " (" << a.detail << ")";
    report.human << "\n";
  }
  report.result["axioms"] = list;
  if (axioms.function) {
    json coef = json::object();
    for (ObjectId z = 0; z < p.size(); ++z) coef[p.name(z)] = to_string(axioms.function->coefficient(z));
    report.result["coefficients"] = coef;
  }
  if (!axioms.ok()) {
    report.status = 1;
    report.note("AxiomViolation", "some axioms fail", "error");
  }
}

void cmd_qconvert(const CommandRequest& r, std::istream& in, Report& report) {
  const std::string path = require(r.values, "--values");
  const QValuesFile file = parse_qvalues_file(read_text(path, in));
  const std::string instance_text = !r.instance.empty() ? r.instance : file.instance;
  if (instance_text.empty()) throw Error(Errc::usage, "no instance: pass --instance or add an 'instance' line");
  const auto inst = OrderedModuleInstance::parse(instance_text);
  if (!q_plus_one_regular(inst))
    throw Error(Errc::not_regular, "q+1 is not regular on " + inst.name() + "; conversion refused");
  const Category c = load_category(category_path(r, file.category_path, path), in, execution(r));
  const auto& p = *c;
  report.result["instance"] = inst.name();
  report.result["q_plus_one_regular"] = q_plus_one_regular(inst);

  std::vector<ModuleElement> values(p.size());
  std::optional<QRankFunction> rho;
  if (file.kind == RankFile::Kind::coefficients) {
    std::vector<ModuleElement> all(p.size());
    for (const auto& [name, v] : file.entries) all[p.id(name)] = v;
    rho = QRankFunction(c, inst, all);
    for (ObjectId x = 0; x < p.size(); ++x) values[x] = objects_from_morphisms(*rho, ObjectExpr::single(x));
  } else {
    std::vector<bool> seen(p.size(), false);
    for (const auto& [name, v] : file.entries) {
      values[p.id(name)] = inst.normalize(v);
      seen[p.id(name)] = true;
    }
    for (ObjectId x = 0; x < p.size(); ++x)
      if (!seen[x]) throw Error(Errc::missing_value, "no value given for " + p.name(x));
  }
  json objects = json::object();
  for (ObjectId x = 0; x < p.size(); ++x) objects[p.name(x)] = format_polynomial(values[x]);
  report.result["object_values"] = objects;

  json conversions = json::array();
  for (const auto& t : selected_triangles(p, r.triangles)) {
    const auto z = morphisms_from_objects(inst, p, values, t);
    json entry = {{"triangle", t.name}, {"morphism", t.f_name}, {"value", format_polynomial(z)}};
    report.human << "rho(" << (t.f_name.empty() ? t.name + ".f" : t.f_name) << ") = " << format_polynomial(z);
    if (rho) {
      const auto direct = q_evaluate(*rho, t.f);
      entry["direct"] = format_polynomial(direct);
      report.human << "  (direct: " << format_polynomial(direct) << ")";
    }
    report.human << "\n";
    conversions.push_back(entry);
  }
  report.result["conversions"] = conversions;
}

bool cmd_export_dot(const CommandRequest& r, std::istream& in, std::ostream& out, Report& report) {
  const Category c = load_category(require(r.category, "--cat"), in, execution(r));
  const auto& p = *c;
  static const char* palette[] = {"#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e", "#e6ab02", "#a6761d", "#666666"};
  const auto orbit = orbit_index(p);
  const auto counts = irreducible_counts(p, validate(p, execution(r)), execution(r));
  std::ostringstream dot;
  dot << "digraph ar_quiver {\n";
  for (ObjectId x = 0; x < p.size(); ++x)
    dot << "  \"" << p.name(x) << "\" [color=\"" << palette[orbit[x] % 8] << "\", orbit=" << orbit[x] + 1 << "];\n";
  std::size_t arrows = 0;
  for (ObjectId x = 0; x < p.size(); ++x)
    for (ObjectId y = 0; y < p.size(); ++y)
      for (std::size_t k = 0; k < counts[x * p.size() + y]; ++k, ++arrows)
        dot << "  \"" << p.name(x) << "\" -> \"" << p.name(y) << "\";\n";
  dot << "}\n";
  if (r.output.empty()) {
    out << dot.str();
    return true;
  }
  write_text(r.output, dot.str());
  report.result["vertices"] = p.size();
  report.result["arrows"] = arrows;
  report.result["output"] = r.output;
  report.human << "wrote " << r.output << ": " << p.size() << " vertices, " << arrows << " arrows\n";
  return false;
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::parse_error:
    case Errc::io_error:
    case Errc::usage:
      return 2;
    default:
      return 1;
  }
}

}  // namespace

ParsedCommand parse_command_line(const std::vector<std::string>& args, const char* env_format, std::ostream& out,
                                 std::ostream& err) {
  CommandRequest req;
  std::string format = env_format ? env_format : "human";
  std::size_t window = 0;

  CLI::App app{"Rank functions on finitely presented triangulated categories", "rankcalc"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", format, "Output mode (default from RANKCALC_FORMAT)")
      ->check(CLI::IsMember({"human", "structured"}));
  app.add_flag("--serial", req.serial, "Use the serial reference kernels");

  auto* validate_cmd = app.add_subcommand("validate", "Validate a presentation (default: stdin)");
  validate_cmd->add_option("file", req.input, "Presentation file, '-' for stdin");

  auto* build = app.add_subcommand("build-an", "Cluster category of type A_n as a presentation");
  build->add_option("--n", req.n, "Rank n >= 1")->required();
  auto* window_opt = build->add_option("--window", window, "Search window in tau-steps");
  build->add_option("-o,--output", req.output, "Write to a file instead of stdout");

  auto* simples = app.add_subcommand("simples", "Simple functors and their presenting triangles");
  simples->add_option("--cat", req.category, "Presentation file")->required();

  auto* orbits = app.add_subcommand("orbits", "Sigma-orbits of indecomposables");
  orbits->add_option("--cat", req.category, "Presentation file")->required();

  auto* decompose_cmd = app.add_subcommand("decompose", "Decompose and classify a rank function");
  decompose_cmd->add_option("--rank", req.rank, "Rank-function file")->required();
  decompose_cmd->add_option("--cat", req.category, "Presentation file (overrides the rank file)");

  auto* eval = app.add_subcommand("eval", "Evaluate a rank function");
  eval->add_option("--rank", req.rank, "Rank-function file")->required();
  eval->add_option("--cat", req.category, "Presentation file (overrides the rank file)");
  eval->add_option("--morphism", req.morphism, "NAME, id:EXPR or basis:X:Y:k");
  eval->add_option("--object", req.object, "Object expression such as T1+T2");

  auto* check = app.add_subcommand("check", "Check the rank-function axioms on object values");
  check->add_option("--values", req.values, "Value file")->required();
  check->add_option("--cat", req.category, "Presentation file (overrides the value file)");
  check->add_option("--triangle", req.triangles, "Restrict to these triangles");

  auto* qconvert = app.add_subcommand("qconvert", "Convert object values to morphism values over an ordered module");
  qconvert->add_option("--values", req.values, "q-value file")->required();
  qconvert->add_option("--instance", req.instance, "integers, periodic:d or laurent");
  qconvert->add_option("--cat", req.category, "Presentation file (overrides the value file)");
  qconvert->add_option("--triangle", req.triangles, "Restrict to these triangles");

  auto* dot = app.add_subcommand("export-dot", "Auslander-Reiten quiver in DOT, colored by Sigma-orbit");
  dot->add_option("--cat", req.category, "Presentation file")->required();
  dot->add_option("-o,--output", req.output, "Write to a file instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    ParsedCommand result;
    result.exit_code = app.exit(e, out, err);
    if (result.exit_code != 0) result.exit_code = 2;
    return result;
  }
  if (format != "human" && format != "structured") {
    err << "error: UsageError: RANKCALC_FORMAT must be 'human' or 'structured'\n";
    return {std::nullopt, 2};
  }
  req.mode = format == "structured" ? OutputMode::structured : OutputMode::human;
  req.subcommand = app.get_subcommands().front()->get_name();
  if (window_opt->count() > 0) req.window = window;
  return {req, 0};
}

int run(const CommandRequest& request, std::istream& in, std::ostream& out, std::ostream& err) {
  Report report;
  bool raw_output = false;
  try {
    const auto& s = request.subcommand;
    if (s == "validate") {
      cmd_validate(request, in, report);
    } else if (s == "build-an") {
      raw_output = cmd_build_an(request, out, report);
    } else if (s == "simples") {
      cmd_simples(request, in, report);
    } else if (s == "orbits") {
      cmd_orbits(request, in, report);
    } else if (s == "decompose") {
      cmd_decompose(request, in, report);
    } else if (s == "eval") {
      cmd_eval(request, in, report);
    } else if (s == "check") {
      cmd_check(request, in, report);
    } else if (s == "qconvert") {
      cmd_qconvert(request, in, report);
    } else if (s == "export-dot") {
      raw_output = cmd_export_dot(request, in, out, report);
    } else {
      throw Error(Errc::usage, "unknown subcommand '" + s + "'");
    }
  } catch (const Error& e) {
    report.status = exit_code_for(e.code());
    report.result = nullptr;
    report.human.str("");
    report.note(errc_name(e.code()), e.what(), "error");
    if (request.mode == OutputMode::human) err << "error: " << errc_name(e.code()) << ": " << e.what() << "\n";
  } catch (const std::exception& e) {
    report.status = 1;
    report.result = nullptr;
    report.human.str("");
    report.note("InternalError", e.what(), "error");
    if (request.mode == OutputMode::human) err << "error: " << e.what() << "\n";
  }
  if (raw_output) return report.status;
  if (request.mode == OutputMode::structured) {
    json doc = {{"schema", kSchema},
                {"command", request.subcommand},
                {"result", report.result},
                {"diagnostics", report.diagnostics}};
    out << doc.dump(2) << "\n";
  } else {
    out << report.human.str();
    for (const auto& d : report.diagnostics)
      if (d["severity"] == "warning") err << "warning: " << d["code"].get<std::string>() << ": " << d["message"].get<std::string>() << "\n";
  }
  return report.status;
}

int main_entry(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const auto parsed = parse_command_line(args, std::getenv("RANKCALC_FORMAT"), std::cout, std::cerr);
  if (!parsed.request) return parsed.exit_code;
  return run(*parsed.request, std::cin, std::cout, std::cerr);
}

}  // namespace rankcalc::cli
