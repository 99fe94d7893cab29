#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "qsurf/fixtures.hpp"
#include "qsurf/homology.hpp"
#include "qsurf/io.hpp"
#include "qsurf/quasi_lie.hpp"
#include "qsurf/suites.hpp"
#include "qsurf/trace_eval.hpp"

using namespace qsurf;

namespace {

struct RunConfig {
  std::string spec;
  std::string omega;
  std::string x, y, z;
  std::string gate;
  int m = 0;
  std::string rep;
  std::string expr;
  std::uint64_t seed = 1;
  int cases = 100;
  int max_word = 8;
  std::vector<std::string> suites;
  bool gram = false;
  std::string json_out;
};

// Exit codes: 0 all good, 1 a requested check failed, 2 bad input.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

// A spec path, or the name of a built-in fixture when no such file exists.
QuasiSurface load_surface(const RunConfig& c) {
  if (c.spec.empty()) throw InputError("--spec is required");
  if (!std::filesystem::exists(c.spec)) {
    for (const std::string& name : fixture_names())
      if (name == c.spec) return build(fixture_spec(name));
  }
  return build(parse_spec(read_file(c.spec)));
}

GateOrientation orientation(const QuasiSurface& qs, const RunConfig& c) {
  if (c.omega.empty()) return GateOrientation::counterclockwise(qs.gate_count());
  try {
    return GateOrientation::parse(c.omega, qs.gate_count());
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("--omega: ") + e.what());
  }
}

void check_generators(const QuasiSurface& qs, const GroupWord& word, const std::string& flag) {
  for (const Letter& l : word)
    if (l.index >= qs.rank())
      throw InputError(flag + ": unknown generator token 'g" + std::to_string(l.index + 1) + "' (rank " +
                       std::to_string(qs.rank()) + ")");
}

// A loop given as a word, a JSON list of [coefficient, word] pairs, or a
// lane diagram object.
LoopCombination loop_argument(const QuasiSurface& qs, const std::string& text, const std::string& flag) {
  if (text.empty()) throw InputError(flag + " is required");
  const auto start = text.find_first_not_of(" \t\r\n");
  LoopCombination x;
  try {
    if (start != std::string::npos && text[start] == '{') {
      x = LoopCombination::basis(diagram_to_word(qs, parse_diagram(qs, parse_json(text))));
    } else {
      x = parse_loop_expression(text);
    }
  } catch (const ParseError& e) {
    throw InputError(flag + ": " + e.what());
  } catch (const DiagramError& e) {
    throw InputError(flag + ": " + e.what());
  }
  for (const auto& [cls, coeff] : x) check_generators(qs, cls.word(), flag);
  return x;
}

int gate_argument(const QuasiSurface& qs, const RunConfig& c) {
  if (c.gate.empty()) throw InputError("--gate is required");
  try {
    return qs.gate_index(c.gate);
  } catch (const std::out_of_range& e) {
    throw InputError(std::string("--gate: ") + e.what());
  }
}

Json matrix_json(const MatrixX<std::int64_t>& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    out.push_back(row);
  }
  return out;
}

Json echo(const RunConfig& c, const std::string& command, const QuasiSurface* qs) {
  Json j;
  j["command"] = command;
  if (!c.spec.empty()) j["spec"] = c.spec;
  if (qs) j["omega"] = orientation(*qs, c).str();
  return j;
}

struct Outcome {
  Json report;
  bool ok = true;
};

Outcome cmd_validate(const RunConfig& c) {
  const QuasiSurface qs = load_surface(c);
  Json j = echo(c, "validate", nullptr);
  j["valid"] = true;
  j["rank"] = qs.rank();
  j["generators"] = Json::array();
  for (int g = 0; g < qs.rank(); ++g) {
    Json path = Json::array();
    for (const Letter& l : qs.generator_path(g))
      path.push_back(qs.edge_name(l.index) + (l.sign < 0 ? "^-1" : ""));
    j["generators"].push_back({{"name", "g" + std::to_string(g + 1)}, {"edge", qs.edge_name(qs.generator_edge(g))},
                               {"path", path}});
  }
  j["gates"] = Json::array();
  for (int k = 0; k < qs.gate_count(); ++k) {
    Json crossings = Json::array();
    for (int g = 0; g < qs.rank(); ++g) crossings.push_back(qs.gate_crossing_count(k, g));
    j["gates"].push_back({{"id", qs.gate_name(k)},
                          {"disk", qs.gate_disk(k) + 1},
                          {"slot", qs.gate_slot(k) + 1},
                          {"vertex", qs.vertex_name(qs.glued_vertex(k))},
                          {"v", crossings}});
  }
  return {j, true};
}

Outcome cmd_pair(const RunConfig& c, const std::string& command) {
  const QuasiSurface qs = load_surface(c);
  const GateOrientation omega = orientation(qs, c);
  const LoopCombination x = loop_argument(qs, c.x, "--x"), y = loop_argument(qs, c.y, "--y");
  Json j = echo(c, command, &qs);
  j["x"] = to_json(x);
  j["y"] = to_json(y);
  j["result"] = to_json(command == "bracket" ? second_bracket(qs, omega, x, y) : bullet(qs, omega, x, y));
  return {j, true};
}

std::vector<LoopCombination> given_loops(const QuasiSurface& qs, const RunConfig& c) {
  std::vector<LoopCombination> out;
  const std::pair<const std::string*, const char*> flags[] = {{&c.x, "--x"}, {&c.y, "--y"}, {&c.z, "--z"}};
  for (const auto& [text, flag] : flags) {
    if (text->empty()) break;
    out.push_back(loop_argument(qs, *text, flag));
  }
  return out;
}

Outcome cmd_brace(const RunConfig& c) {
  const QuasiSurface qs = load_surface(c);
  const int gate = gate_argument(qs, c);
  std::vector<LoopCombination> xs = given_loops(qs, c);
  const int m = c.m > 0 ? c.m : static_cast<int>(xs.size());
  if (m < 1 || m > 3) throw InputError("--m must be 1, 2 or 3");
  if (static_cast<int>(xs.size()) < m) throw InputError("brace with --m " + std::to_string(m) + " needs that many of --x, --y, --z");
  xs.resize(static_cast<std::size_t>(m));
  Json j = echo(c, "brace", nullptr);
  j["gate"] = c.gate;
  j["m"] = m;
  j["arguments"] = Json::array();
  for (const LoopCombination& x : xs) j["arguments"].push_back(to_json(x));
  j["result"] = to_json(gate_brace_geometric(qs, gate, xs));
  return {j, true};
}

Outcome cmd_triple(const RunConfig& c, const std::string& command) {
  const QuasiSurface qs = load_surface(c);
  const LoopCombination x = loop_argument(qs, c.x, "--x"), y = loop_argument(qs, c.y, "--y"),
                        z = loop_argument(qs, c.z, "--z");
  Json j = echo(c, command, command == "diagnostics" ? &qs : nullptr);
  j["x"] = to_json(x);
  j["y"] = to_json(y);
  j["z"] = to_json(z);
  if (command == "mu") {
    j["result"] = to_json(mu_total(qs, x, y, z));
    return {j, true};
  }
  if (command == "s") {
    j["result"] = to_json(s_bracket(qs, x, y, z));
    return {j, true};
  }
  if (command == "jacobi") {
    const QuasiJacobiReport r = verify_quasi_jacobi(qs, x, y, z);
    j["lhs"] = to_json(r.lhs);
    j["rhs"] = to_json(r.rhs);
    j["equal"] = r.equal;
    return {j, r.equal};
  }
  const PUDiagnostics d = p_and_u_diagnostics(qs, orientation(qs, c), x, y, z);
  j["p"] = to_json(d.p);
  j["p_swapped"] = to_json(d.p_swapped);
  j["u_omega"] = to_json(d.u_omega);
  j["u_reversed"] = to_json(d.u_reversed);
  j["jacobiator"] = to_json(d.jacobiator);
  j["p_is_u_sum"] = d.p_is_u_sum;
  j["jacobiator_is_p_difference"] = d.jacobiator_is_p_difference;
  return {j, d.p_is_u_sum && d.jacobiator_is_p_difference};
}

H1Class homology_argument(const QuasiSurface& qs, const std::string& text, const std::string& flag) {
  H1Class h = H1Class::Zero(qs.rank());
  for (const auto& [cls, coeff] : loop_argument(qs, text, flag)) {
    if (!coeff.fits_slong_p()) throw InputError(flag + ": coefficient out of range");
    h += coeff.get_si() * homology_class(qs, cls);
  }
  return h;
}

Outcome cmd_homology(const RunConfig& c) {
  const QuasiSurface qs = load_surface(c);
  const GateOrientation omega = orientation(qs, c);
  Json j = echo(c, "homology", &qs);
  auto vector_json = [](const H1Class& h) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < h.size(); ++i) out.push_back(h(i));
    return out;
  };
  if (c.gram || (c.x.empty() && c.y.empty())) j["gram"] = matrix_json(intersection_gram(qs, omega));
  if (!c.x.empty()) {
    const H1Class x = homology_argument(qs, c.x, "--x");
    j["x"] = vector_json(x);
    Json v = Json::object();
    for (int k = 0; k < qs.gate_count(); ++k) v[qs.gate_name(k)] = gate_covector(qs, k, x);
    j["v"] = v;
    if (!c.y.empty()) {
      const H1Class y = homology_argument(qs, c.y, "--y");
      j["y"] = vector_json(y);
      j["first_form"] = first_form(qs, omega, x, y);
      j["second_form"] = second_form(qs, omega, x, y);
    }
  }
  return {j, true};
}

Outcome cmd_trace_eval(const RunConfig& c) {
  const QuasiSurface qs = load_surface(c);
  if (c.rep.empty()) throw InputError("--rep is required");
  const std::string rep_text = std::filesystem::exists(c.rep) ? read_file(c.rep) : c.rep;
  std::optional<RepresentationPoint> rho;
  try {
    rho.emplace(parse_representation(parse_json(rep_text), qs.rank()));
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("--rep: ") + e.what());
  } catch (const ParseError& e) {
    throw InputError(std::string("--rep: ") + e.what());
  }
  Json j = echo(c, "trace-eval", nullptr);
  j["rep"] = representation_to_json(*rho);
  if (c.expr.empty() && c.x.empty()) throw InputError("trace-eval needs --expr or loop arguments");
  if (!c.expr.empty()) {
    const LoopCombination e = loop_argument(qs, c.expr, "--expr");
    j["expr"] = to_json(e);
    j["trace"] = to_string(eval_trace(*rho, e));
  }
  const std::vector<LoopCombination> xs = given_loops(qs, c);
  if (!c.gate.empty()) {
    j["gate"] = c.gate;
    j["brace"] = to_string(eval_induced_bracket(qs, *rho, InducedForm::GateBrace, xs, gate_argument(qs, c)));
  } else if (xs.size() == 2) {
    j["bracket"] = to_string(eval_induced_bracket(qs, *rho, InducedForm::SecondBracket, xs));
  } else if (xs.size() == 3) {
    j["mu"] = to_string(eval_induced_bracket(qs, *rho, InducedForm::MuTotal, xs));
  }
  return {j, true};
}

Outcome cmd_selftest(const RunConfig& c) {
  Json j;
  j["command"] = "selftest";
  j["seed"] = c.seed;
  j["cases"] = c.cases;
  j["max_word"] = c.max_word;
  if (c.cases == 0) {
    std::cerr << "warning: --cases 0 runs no random cases; the pass is vacuous\n";
    j["warning"] = "no cases run";
  }
  SuiteOptions options;
  options.seed = c.seed;
  options.cases = c.cases;
  options.max_word = c.max_word;
  std::vector<std::string> names = c.suites;
  if (names.empty())
    for (const NamedSuite& s : all_suites()) names.push_back(s.name);
  bool ok = true;
  j["suites"] = Json::array();
  for (const std::string& name : names) {
    SuiteResult r;
    try {
      r = run_suite(name, options);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    ok = ok && r.passed;
    j["suites"].push_back({{"name", r.name}, {"passed", r.passed}, {"checks", r.checks}, {"failures", r.failures}, {"notes", r.notes}});
  }
  j["passed"] = ok;
  return {j, ok};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Loop operations on quasi-surfaces"};
  app.require_subcommand(1);
  RunConfig c;

  auto common = [&](CLI::App* sub, bool loops) {
    sub->add_option("--spec", c.spec, "quasi-surface JSON file or fixture name")->required();
    sub->add_option("--omega", c.omega, "gate orientation, one + or - per gate");
    if (loops) {
      sub->add_option("--x", c.x, "loop: word, [[coef, word], ...] or lane diagram");
      sub->add_option("--y", c.y, "loop");
      sub->add_option("--z", c.z, "loop");
    }
    sub->add_option("--json-out", c.json_out, "write the report here instead of stdout");
  };

  auto* validate = app.add_subcommand("validate", "check a spec and print its presentation");
  common(validate, false);
  auto* bracket = app.add_subcommand("bracket", "second homotopy intersection form [x,y]");
  common(bracket, true);
  auto* bullet_cmd = app.add_subcommand("bullet", "first homotopy intersection form x . y");
  common(bullet_cmd, true);
  auto* brace = app.add_subcommand("brace", "gate brace of --x, --y, --z");
  common(brace, true);
  brace->add_option("--gate", c.gate, "gate id")->required();
  brace->add_option("--m", c.m, "number of arguments");
  auto* mu = app.add_subcommand("mu", "mu(x,y,z), the sum of the gate 3-braces");
  common(mu, true);
  auto* s = app.add_subcommand("s", "symmetric 3-bracket s(x,y,z)");
  common(s, true);
  auto* homology = app.add_subcommand("homology", "intersection forms in first homology");
  common(homology, true);
  homology->add_flag("--gram", c.gram, "print the Gram matrix of the second form");
  auto* jacobi = app.add_subcommand("jacobi", "compare the Jacobiator with mu(x,y,z) - mu(y,x,z)");
  common(jacobi, true);
  auto* diagnostics = app.add_subcommand("diagnostics", "P and u polynomials of a triple");
  common(diagnostics, true);
  auto* trace_eval = app.add_subcommand("trace-eval", "evaluate at a representation point");
  common(trace_eval, true);
  trace_eval->add_option("--rep", c.rep, "representation JSON (file or inline)")->required();
  trace_eval->add_option("--expr", c.expr, "loop expression whose trace is evaluated");
  trace_eval->add_option("--gate", c.gate, "evaluate the gate brace of the loop arguments");
  auto* selftest = app.add_subcommand("selftest", "run the randomized verification suites");
  selftest->add_option("--seed", c.seed, "random seed");
  selftest->add_option("--cases", c.cases, "cases per suite")->check(CLI::NonNegativeNumber);
  selftest->add_option("--max-word", c.max_word, "longest random word")->check(CLI::PositiveNumber);
  selftest->add_option("--suite", c.suites, "run only these suites");
  selftest->add_option("--json-out", c.json_out, "write the report here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  Outcome outcome;
  try {
    if (*validate) outcome = cmd_validate(c);
    else if (*bracket) outcome = cmd_pair(c, "bracket");
    else if (*bullet_cmd) outcome = cmd_pair(c, "bullet");
    else if (*brace) outcome = cmd_brace(c);
    else if (*mu) outcome = cmd_triple(c, "mu");
    else if (*s) outcome = cmd_triple(c, "s");
    else if (*jacobi) outcome = cmd_triple(c, "jacobi");
    else if (*diagnostics) outcome = cmd_triple(c, "diagnostics");
    else if (*homology) outcome = cmd_homology(c);
    else if (*trace_eval) outcome = cmd_trace_eval(c);
    else outcome = cmd_selftest(c);
  } catch (const std::exception& e) {
    // Validation, parse and input errors all end up here.
    Json err;
    err["error"] = e.what();
    std::cout << err.dump(2) << "\n";
    return 2;
  }

  const std::string text = outcome.report.dump(2) + "\n";
  if (c.json_out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(c.json_out, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write '" << c.json_out << "'\n";
      return 2;
    }
    out << text;
  }
  return outcome.ok ? 0 : 1;
}
