#include "braidkit/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "braidkit/adjunctions.hpp"
#include "braidkit/braid_rep.hpp"
#include "braidkit/errors.hpp"
#include "braidkit/json_io.hpp"
#include "braidkit/primitives.hpp"
#include "braidkit/tensor_bialgebra.hpp"
#include "braidkit/transport.hpp"

namespace braidkit::cli {

namespace {

using json_io::Json;

constexpr std::size_t kDefaultPrimitiveDegree = 4;

// Errors caused by the inputs themselves rather than by a failed check.
bool is_schema_error(const Error& e) {
  return dynamic_cast<const ParseError*>(&e) || dynamic_cast<const ShapeError*>(&e) ||
         dynamic_cast<const FieldMismatch*>(&e) || dynamic_cast<const NotPrime*>(&e) ||
         dynamic_cast<const BadTruncation*>(&e) || dynamic_cast<const BadDegree*>(&e);
}

Json config_json(const RunConfig& c) {
  Json j{{"command", command_name(c.command)}, {"seed", c.seed}};
  auto put = [&](const char* key, const auto& value) {
    if (value) j[key] = *value;
  };
  put("field", c.field);
  put("degree", c.degree);
  put("input", c.input);
  put("braiding", c.braiding);
  put("bialgebra", c.bialgebra);
  put("g", c.g);
  put("out", c.out);
  put("m", c.m);
  put("n", c.n);
  put("dim", c.dim);
  put("grading", c.grading);
  if (c.command == Command::JCheck) j["base"] = c.base;
  return j;
}

Json report_header(const RunConfig& c) {
  return Json{{"tool", "braidkit"}, {"version", BRAIDKIT_VERSION}, {"config", config_json(c)}};
}

// Verdicts become top-level "name": "pass"|"fail" entries; failures are
// located under "violations".
void add_checks(Json& report, const AxiomReport& r) {
  Json violations = report.value("violations", Json::object());
  for (const AxiomCheck& check : r.checks()) {
    report[check.name] = check.passed ? "pass" : "fail";
    if (check.passed) continue;
    Json v{{"detail", check.detail}};
    if (check.violation) {
      v["row"] = check.violation->row;
      v["col"] = check.violation->col;
    }
    violations[check.name] = std::move(v);
  }
  if (!violations.empty()) report["violations"] = std::move(violations);
}

int finish(Json& report, bool passed) {
  report["status"] = passed ? "pass" : "fail";
  return passed ? kExitPass : kExitCheckFailed;
}

std::optional<FieldSpec> field_override(const RunConfig& c) {
  if (!c.field) return std::nullopt;
  try {
    return FieldSpec::parse(*c.field);
  } catch (const Error& e) {
    throw ParseError(std::string("--field: ") + e.what());
  }
}

const std::string& need(const std::optional<std::string>& value, const char* flag) {
  if (!value) throw ParseError(std::string("missing required flag ") + flag);
  return *value;
}

std::size_t need_degree(const RunConfig& c) {
  if (!c.degree) throw ParseError("missing required flag --degree");
  if (*c.degree < 1) throw BadTruncation("--degree must be at least 1");
  return *c.degree;
}

AxiomReport stored_blocks_report(const json_io::BuiltFile& built) {
  AxiomReport r("stored blocks");
  const TruncatedTensorBialgebra& t = built.tensor;
  for (const auto& [key, block] : built.ct_blocks) {
    r.expect_equal("stored_cT[" + std::to_string(key.first) + "," + std::to_string(key.second) + "]",
                   block, t.braid().block(key.first, key.second));
  }
  for (const auto& [n, block] : built.eps_blocks) {
    r.expect_equal("stored_eps[" + std::to_string(n) + "]", block, t.counit(n));
  }
  return r;
}

int cmd_verify(const RunConfig& c, Json& report) {
  const Json doc = json_io::load_file(need(c.input, "--input"));
  const auto field = field_override(c);
  if (doc.is_object() && doc.contains("blocks")) {
    // The braided object must be valid before the stored blocks can be wrapped.
    const BraidedObject v = json_io::braiding_from_json(doc, field);
    report["kind"] = "tensor_bialgebra";
    const AxiomReport yb = check_yang_baxter(v);
    add_checks(report, yb);
    if (!yb.passed()) return finish(report, false);
    const json_io::BuiltFile built = json_io::built_from_json(doc, field);
    report["dim"] = v.dim();
    report["degree"] = built.tensor.degree();
    const AxiomReport axioms = check_truncated_axioms(built.tensor);
    const AxiomReport stored = stored_blocks_report(built);
    add_checks(report, axioms);
    add_checks(report, stored);
    return finish(report, axioms.passed() && stored.passed());
  }
  if (doc.is_object() && doc.contains("m")) {
    const BialgebraData b = json_io::bialgebra_from_json(doc, field);
    report["kind"] = "bialgebra";
    report["dim"] = b.dim();
    const AxiomReport r = check_braided_bialgebra(b);
    add_checks(report, r);
    return finish(report, r.passed());
  }
  const BraidedObject v = json_io::braiding_from_json(doc, field);
  report["kind"] = "braiding";
  report["dim"] = v.dim();
  AxiomReport r = check_yang_baxter(v);
  add_checks(report, r);
  if (c.degree && r.passed()) {
    const AxiomReport t = check_truncated_axioms(TruncatedTensorBialgebra::build(v, need_degree(c)));
    add_checks(report, t);
    return finish(report, t.passed());
  }
  return finish(report, r.passed());
}

int cmd_build(const RunConfig& c, Json& report) {
  const BraidedObject v =
      json_io::braiding_from_json(json_io::load_file(need(c.input, "--input")), field_override(c));
  const std::size_t N = need_degree(c);
  const AxiomReport yb = check_yang_baxter(v);
  if (!yb.passed()) {
    add_checks(report, yb);
    return finish(report, false);
  }
  Json built = json_io::built_to_json(TruncatedTensorBialgebra::build(v, N));
  for (auto& [key, value] : built.items()) report[key] = value;
  return finish(report, true);
}

int cmd_primitives(const RunConfig& c, Json& report) {
  const Json doc = json_io::load_file(need(c.input, "--input"));
  const auto field = field_override(c);
  if (doc.is_object() && doc.contains("m")) {
    const BialgebraData b = json_io::bialgebra_from_json(doc, field);
    const PrimitiveSpace p = primitives(b);
    report["kind"] = "bialgebra";
    report["dims"] = Json::array({p.dim()});
    report["xi"] = json_io::matrix_to_json(p.xi);
    report["c_P"] = json_io::matrix_to_json(p.c_p);
    return finish(report, true);
  }
  const BraidedObject v = json_io::braiding_from_json(doc, field);
  const std::size_t N = c.degree ? need_degree(c) : kDefaultPrimitiveDegree;
  const TruncatedTensorBialgebra t = TruncatedTensorBialgebra::build(v, N);
  report["kind"] = "tensor_bialgebra";
  report["degree"] = N;
  Json dims = Json::array();
  Json bases = Json::object();
  for (std::size_t n = 1; n <= N; ++n) {
    const ExactMatrix xi = primitives_of_tensor(t, n);
    dims.push_back(xi.cols());
    bases[std::to_string(n)] = json_io::matrix_to_json(xi);
  }
  report["dims"] = std::move(dims);
  report["bases"] = std::move(bases);
  return finish(report, true);
}

int cmd_braidrep(const RunConfig& c, Json& report) {
  const BraidedObject v =
      json_io::braiding_from_json(json_io::load_file(need(c.input, "--input")), field_override(c));
  if (!c.m || !c.n) throw ParseError("missing required flags --m and --n");
  const BraidRep rep(v);
  report["matrix"] = json_io::matrix_to_json(rep.block(*c.m, *c.n));
  return finish(report, true);
}

int cmd_transport(const RunConfig& c, Json& report) {
  const Json doc = json_io::load_file(need(c.input, "--input"));
  const FieldSpec field = json_io::resolve_field(doc, field_override(c));
  const bool is_bialgebra = doc.contains("m");
  const std::size_t dim = is_bialgebra ? json_io::bialgebra_from_json(doc, field).dim()
                                       : json_io::braiding_from_json(doc, field).dim();

  std::optional<FunctorData> functor;
  if (c.g) {
    functor = json_io::functor_from_json(json_io::load_file(*c.g), field, dim);
  } else {
    std::mt19937_64 rng(c.seed);
    functor = FunctorData::basis_change(random_invertible(field, dim, rng));
  }
  if (functor->kind() == FunctorKind::BasisChange) {
    report["functor"] = Json{{"g", json_io::matrix_to_json(functor->g())}};
  } else {
    report["functor"] = Json{{"lambda", functor->lambda().to_string()}};
  }
  const AxiomReport coherence = functor->check_coherence(field, dim);
  add_checks(report, coherence);

  if (!is_bialgebra) {
    const BraidedObject v = json_io::braiding_from_json(doc, field);
    const BraidedObject w = transport_braided_object(*functor, v);
    report["braiding"] = json_io::braiding_to_json(w);
    const AxiomReport yb = check_yang_baxter(w);
    add_checks(report, yb);
    const bool morphism = functor->kind() == FunctorKind::ScalarTwist ||
                          check_braided_morphism(functor->g(), v, w);
    report["braided_morphism"] = morphism ? "pass" : "fail";
    return finish(report, coherence.passed() && yb.passed() && morphism);
  }

  const BialgebraData b = json_io::bialgebra_from_json(doc, field);
  const BialgebraData b2 = transport_bialgebra(*functor, b);
  report["bialgebra"] = json_io::bialgebra_to_json(b2);
  const AxiomReport axioms = check_braided_bialgebra(b2);
  add_checks(report, axioms);
  const std::size_t before = primitives(b).dim(), after = primitives(b2).dim();
  report["primitive_dims"] = Json::array({before, after});
  const bool square = check_primfunct_square(*functor, b);
  report["primfunct_square"] = square ? "pass" : "fail";
  return finish(report, coherence.passed() && axioms.passed() && before == after && square);
}

std::vector<int> parse_grading(const std::string& text) {
  std::vector<int> grading;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "0" || item == "1") {
      grading.push_back(item[0] - '0');
    } else {
      throw ParseError("--grading entries must be 0 or 1, got \"" + item + "\"");
    }
  }
  if (grading.empty()) throw ParseError("--grading is empty");
  return grading;
}

int cmd_jcheck(const RunConfig& c, Json& report) {
  const FieldSpec field = field_override(c).value_or(FieldSpec::rationals());
  const std::size_t N = need_degree(c);
  BaseBraiding base;
  if (c.base == "super") {
    base = BaseBraiding::super(parse_grading(need(c.grading, "--grading")));
  } else if (c.base != "flip") {
    throw ParseError("--base must be flip or super");
  }
  std::size_t dim = c.dim.value_or(base.kind == BaseKind::Super ? base.grading.size() : 0);
  if (dim == 0) throw ParseError("missing required flag --dim");
  const AxiomReport r = check_J_compatibility(base, field, dim, N);
  add_checks(report, r);
  return finish(report, r.passed());
}

int cmd_adjunction(const RunConfig& c, Json& report) {
  const auto field = field_override(c);
  const BraidedObject v =
      json_io::braiding_from_json(json_io::load_file(need(c.braiding, "--braiding")), field);
  const BialgebraData b =
      json_io::bialgebra_from_json(json_io::load_file(need(c.bialgebra, "--bialgebra")), field);
  if (!(v.field() == b.field())) throw FieldMismatch("braiding and bialgebra fields differ");
  const std::size_t N = need_degree(c);

  const TruncatedTensorBialgebra t = TruncatedTensorBialgebra::build(v, N);
  const FieldSpec& f = v.field();
  const AlgebraData k{ExactMatrix::identity(f, 1), ExactMatrix::identity(f, 1)};
  AxiomReport all;
  all.merge(check_T_Omega(t, k, counit_blocks(k, N), ExactMatrix::identity(f, 1)), "T_Omega/k.");
  all.merge(check_T_Omega(t, b.algebra, counit_blocks(b.algebra, N), b.c), "T_Omega/B.");
  all.merge(check_triangles_Tbar_P(v, b, N), "Tbar_P.");
  all.merge(check_zeta_coalgebra(b, N), "zeta.");
  add_checks(report, all);
  return finish(report, all.passed());
}

int dispatch(const RunConfig& c, Json& report) {
  switch (c.command) {
    case Command::Verify: return cmd_verify(c, report);
    case Command::Build: return cmd_build(c, report);
    case Command::Primitives: return cmd_primitives(c, report);
    case Command::BraidRep: return cmd_braidrep(c, report);
    case Command::Transport: return cmd_transport(c, report);
    case Command::JCheck: return cmd_jcheck(c, report);
    case Command::AdjunctionCheck: return cmd_adjunction(c, report);
  }
  throw ParseError("unknown command");
}

}  // namespace

std::string command_name(Command c) {
  switch (c) {
    case Command::Verify: return "verify";
    case Command::Build: return "build";
    case Command::Primitives: return "primitives";
    case Command::BraidRep: return "braidrep";
    case Command::Transport: return "transport";
    case Command::JCheck: return "jcheck";
    case Command::AdjunctionCheck: return "adjunction-check";
  }
  return "unknown";
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Json report = report_header(config);
  int status = kExitPass;
  try {
    status = dispatch(config, report);
  } catch (const Error& e) {
    status = is_schema_error(e) ? kExitSchemaError : kExitCheckFailed;
    report["status"] = "error";
    report["error"] = e.what();
    err << "braidkit: " << e.what() << "\n";
  }
  const std::string text = json_io::dump(report);
  if (config.out) {
    std::ofstream file(*config.out, std::ios::binary);
    if (!file) {
      err << "braidkit: cannot write " << *config.out << "\n";
      return kExitSchemaError;
    }
    file << text;
  } else {
    out << text;
  }
  return status;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of braided bialgebra constructions"};
  app.set_version_flag("--version", BRAIDKIT_VERSION);
  app.require_subcommand(1);

  RunConfig config;
  auto common = [&](CLI::App* sub, Command command) {
    sub->add_option("--field", config.field, "q or fp:<p> (files without a field default to q)");
    sub->add_option("--degree", config.degree, "truncation degree N");
    sub->add_option("--seed", config.seed, "seed for randomized choices")->capture_default_str();
    sub->add_option("--out", config.out, "write the report here instead of stdout");
    sub->callback([&config, command] { config.command = command; });
  };

  auto* verify = app.add_subcommand("verify", "check the axioms of a braiding, bialgebra or built file");
  common(verify, Command::Verify);
  verify->add_option("--input", config.input)->required();

  auto* build = app.add_subcommand("build", "dump the truncated tensor bialgebra of a braiding");
  common(build, Command::Build);
  build->add_option("--input", config.input)->required();

  auto* prim = app.add_subcommand("primitives", "primitive elements of a bialgebra or of T(V)");
  common(prim, Command::Primitives);
  prim->add_option("--input", config.input)->required();

  auto* braidrep = app.add_subcommand("braidrep", "the block braiding c_T^{m,n}");
  common(braidrep, Command::BraidRep);
  braidrep->add_option("--input", config.input)->required();
  braidrep->add_option("--m", config.m)->required();
  braidrep->add_option("--n", config.n)->required();

  auto* transport = app.add_subcommand("transport", "transport along a basis change or scalar twist");
  common(transport, Command::Transport);
  transport->add_option("--input", config.input)->required();
  transport->add_option("--g", config.g, "functor file; a seeded random basis change if omitted");

  auto* jcheck = app.add_subcommand("jcheck", "compare T(JV) with the symmetric tensor bialgebra");
  common(jcheck, Command::JCheck);
  jcheck->add_option("--base", config.base)->check(CLI::IsMember({"flip", "super"}));
  jcheck->add_option("--grading", config.grading, "comma-separated parities, e.g. 0,1");
  jcheck->add_option("--dim", config.dim);

  auto* adj = app.add_subcommand("adjunction-check", "triangle identities of the free constructions");
  common(adj, Command::AdjunctionCheck);
  adj->add_option("--braiding", config.braiding)->required();
  adj->add_option("--bialgebra", config.bialgebra)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitSchemaError;
  }
  return run(config, out, err);
}

}  // namespace braidkit::cli
