#include "uqsl2/cli.hpp"

#include "uqsl2/expr.hpp"
#include "uqsl2/serialize.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

namespace uqsl2 {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string family;
  std::vector<std::string> params;
  std::string action_file;
  std::string format = "text";
  std::optional<std::uint32_t> max_degree;
  std::optional<std::uint32_t> cutoff;
  std::size_t window = 10;
  bool all = false;
  std::string label;
  std::string expression;
};

std::uint32_t env_default() {
  const char* v = std::getenv("QPLANE_MAX_DEGREE");
  if (!v || !*v) return 8;
  char* end = nullptr;
  const long n = std::strtol(v, &end, 10);
  if (*end != '\0' || n < 0 || n > 1000) throw UsageError(std::string("bad QPLANE_MAX_DEGREE '") + v + "'");
  return static_cast<std::uint32_t>(n);
}

struct Target {
  std::optional<SeriesFamily> family;
  Action action;
  std::string name;
};

std::optional<SeriesFamily> resolve_family(const Options& o) {
  if (o.family.empty()) {
    if (!o.params.empty()) throw UsageError("--param needs --family");
    return std::nullopt;
  }
  const auto tag = parse_tag(o.family);
  if (!tag) throw UsageError("unknown family '" + o.family + "'");
  std::map<std::string, std::string> params;
  for (const auto& p : o.params) {
    const auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--param expects name=value, got '" + p + "'");
    if (!params.emplace(p.substr(0, eq), p.substr(eq + 1)).second)
      throw UsageError("parameter '" + p.substr(0, eq) + "' given twice");
  }
  try {
    return family_from_params(*tag, params);
  } catch (const InvalidParameter& e) {
    throw UsageError(e.what());
  } catch (const ParseError& e) {
    throw UsageError(std::string("parameter: ") + e.what());
  } catch (const EvalError& e) {
    throw UsageError(std::string("parameter: ") + e.what());
  }
}

Target resolve_target(const Options& o) {
  if (!o.family.empty() && !o.action_file.empty()) throw UsageError("give --family or --action-file, not both");
  if (auto f = resolve_family(o)) return {f, build(*f), family_text(*f)};
  if (o.action_file.empty()) throw UsageError("this command needs --family or --action-file");
  std::ifstream in(o.action_file);
  if (!in) throw UsageError("cannot read " + o.action_file);
  try {
    return {std::nullopt, action_from_json(json::parse(in)), o.action_file};
  } catch (const std::exception& e) {
    throw UsageError(o.action_file + ": " + e.what());
  }
}

bool want_json(const Options& o) { return o.format == "json"; }

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

// --- verbs ---------------------------------------------------------------------

int do_verify(const Options& o, std::ostream& out) {
  const Target t = resolve_target(o);
  const std::uint32_t d = o.max_degree.value_or(env_default());
  if (d < 2) throw UsageError("--max-degree must be at least 2");
  const AxiomReport r = check_module_algebra(t.action, d);
  if (want_json(o)) {
    json j = to_json(r);
    j["action"] = to_json(t.action);
    if (t.family) j["family"] = to_json(*t.family);
    print_json(out, j);
  } else {
    out << "verify " << t.name << " up to degree " << d << ": " << (r.passed ? "PASS" : "FAIL") << " ("
        << r.checks << " checks)\n";
    for (std::size_t i = 0; i < r.failures.size() && i < 20; ++i) {
      const auto& f = r.failures[i];
      out << "  " << f.check << " " << f.relation << " on " << f.monomial.str();
      if (f.right) out << " * " << f.right->str();
      out << ": residual " << f.residual.str() << "\n";
    }
    if (r.failures.size() > 20) out << "  ... " << r.failures.size() - 20 << " more\n";
  }
  return r.passed ? kExitPass : kExitFailure;
}

int do_classify(const Options& o, std::ostream& out) {
  if (o.all + !o.label.empty() + !o.family.empty() != 1)
    throw UsageError("classify needs exactly one of --all, --label, --family");
  if (o.all) {
    const auto s = enumerate_classification();
    if (want_json(o)) {
      print_json(out, to_json(s));
      return kExitPass;
    }
    out << "level-0 candidates:";
    for (const auto& p : s.level0_candidates) out << " " << p.str();
    out << "\nlevel-1 candidates:";
    for (const auto& p : s.level1_candidates) out << " " << p.str();
    out << "\n" << s.total << " label pairs: " << s.nonempty.size() << " nonempty, " << s.empty << " empty\n";
    for (const auto& e : s.nonempty) {
      out << "  " << e.label.str() << "  " << tag_name(e.family);
      if (e.forced)
        out << "  alpha=" << Scalar::q_pow(e.forced->alpha_exp).str()
            << " beta=" << Scalar::q_pow(e.forced->beta_exp).str();
      out << "\n";
    }
    return kExitPass;
  }
  SeriesLabel label;
  if (!o.label.empty()) {
    const auto l = SeriesLabel::parse(o.label);
    if (!l) throw UsageError("cannot parse label '" + o.label + "' (expected e.g. 0*/00;00/00)");
    label = *l;
  } else {
    label = label_of(build(*resolve_family(o)));
  }
  const auto c = classify_label(label);
  if (want_json(o)) {
    print_json(out, to_json(label, c));
  } else {
    out << label.str() << ": ";
    switch (c.kind) {
      case ClassificationOutcome::Kind::Nonempty:
        out << "nonempty, " << tag_name(*c.family);
        if (c.forced)
          out << " (alpha=" << Scalar::q_pow(c.forced->alpha_exp).str()
              << ", beta=" << Scalar::q_pow(c.forced->beta_exp).str() << ")";
        break;
      case ClassificationOutcome::Kind::Empty: out << "empty: " << c.reason; break;
      case ClassificationOutcome::Kind::Excluded: out << "excluded: " << c.reason; break;
    }
    out << "\n";
  }
  return kExitPass;
}

int do_act(const Options& o, std::ostream& out) {
  if (o.expression.empty()) throw UsageError("act needs an expression");
  const Target t = resolve_target(o);
  ExprPtr e;
  try {
    e = parse_expression(o.expression);
  } catch (const ParseError& ex) {
    throw UsageError(ex.what());
  }
  PlanePoly r;
  try {
    r = evaluate(*e, &t.action);
  } catch (const EvalError& ex) {
    throw UsageError(ex.what());
  } catch (const DivisionByZero& ex) {
    throw UsageError(ex.what());
  }
  if (want_json(o)) print_json(out, {{"expression", render(*e)}, {"result", r.str()}});
  else out << r.str() << "\n";
  return kExitPass;
}

int do_decompose(const Options& o, std::ostream& out) {
  const auto f = resolve_family(o);
  if (!f) throw UsageError("decompose needs --family");
  const std::uint32_t cutoff = o.cutoff.value_or(env_default());
  if (cutoff < 4) throw UsageError("--cutoff must be at least 4");
  if (o.window < 1) throw UsageError("--window must be at least 1");
  const auto r = composition_report(*f, cutoff, o.window);
  if (want_json(o)) {
    print_json(out, to_json(r));
  } else {
    out << "decompose " << family_text(*f) << " up to index " << cutoff << ": "
        << (r.verified() ? "VERIFIED" : "NOT VERIFIED") << "\n";
    out << "  basis partition of degree <= " << cutoff << ": " << (r.partition_ok ? "ok" : "broken") << "\n";
    for (const auto& s : r.summands) {
      out << "  " << s.basis.str() << "  " << summand_type_name(s.type) << " " << orientation_name(s.orientation)
          << " weight " << s.weight.str();
      if (s.dim) out << " dim " << *s.dim;
      if (s.quotient_weight) out << " quotient Verma(" << s.quotient_weight->str() << ")";
      if (s.graded) out << " [graded piece]";
      out << (s.verified ? "" : "  FAILED") << "\n";
      if (!s.verified)
        for (const auto& ev : s.evidence) out << "      " << ev << "\n";
    }
    for (const auto& c : r.certificates) out << "  non-split n=" << c.n << ": " << c.statement() << "\n";
  }
  return r.verified() ? kExitPass : kExitFailure;
}

int do_classical(const Options& o, std::ostream& out) {
  const Target t = resolve_target(o);
  const std::uint32_t d = o.max_degree.value_or(env_default());
  if (d < 2) throw UsageError("--max-degree must be at least 2");
  const auto lim = classical_limit(t.action);
  if (const auto* n = std::get_if<NoLimit>(&lim)) {
    if (want_json(o)) print_json(out, {{"no_limit", to_json(*n)}});
    else out << "no classical limit: " << n->what << " = " << n->value << " (" << n->reason << ")\n";
    return kExitFailure;
  }
  const auto& ca = std::get<ClassicalAction>(lim);
  const auto r = check_sl2(ca, d);
  if (want_json(o)) {
    print_json(out, {{"limit", to_json(ca)}, {"sl2", to_json(r)}});
  } else {
    const json j = to_json(ca);
    for (const char* g : {"h", "e", "f"})
      out << g << "(x) = " << j[g]["x"].get<std::string>() << ", " << g << "(y) = " << j[g]["y"].get<std::string>()
          << "\n";
    out << "sl2 relations up to degree " << d << ": " << (r.passed ? "PASS" : "FAIL") << "\n";
    for (const auto& f : r.failures)
      out << "  " << f.relation << " on " << Monomial{f.mx, f.ny}.str() << ": residual " << f.residual.str() << "\n";
  }
  return r.passed ? kExitPass : kExitFailure;
}

int do_report(const Options& o, std::ostream& out) {
  const auto f = resolve_family(o);
  if (!f) throw UsageError("report needs --family");
  const std::uint32_t d = o.max_degree.value_or(env_default());
  const std::uint32_t cutoff = o.cutoff.value_or(std::max<std::uint32_t>(d, 4));
  if (d < 2) throw UsageError("--max-degree must be at least 2");
  if (cutoff < 4) throw UsageError("--cutoff must be at least 4");
  const Action a = build(*f);
  const auto axioms = check_module_algebra(a, d);
  const auto label = label_of(a);
  const auto lim = classical_limit(a);
  std::optional<Sl2Report> sl2;
  if (const auto* ca = std::get_if<ClassicalAction>(&lim)) sl2 = check_sl2(*ca, d);
  const auto comp = composition_report(*f, cutoff, o.window);
  const auto phi = invariant_phi(*f);
  const bool ok = axioms.passed && comp.verified() && (!sl2 || sl2->passed);

  if (want_json(o)) {
    json j = {{"family", to_json(*f)},
              {"action", to_json(a)},
              {"label", label.str()},
              {"phi", phi ? json(phi->str()) : json(nullptr)},
              {"axioms", to_json(axioms)},
              {"composition", to_json(comp)}};
    if (const auto* ca = std::get_if<ClassicalAction>(&lim)) j["classical"] = {{"limit", to_json(*ca)}, {"sl2", to_json(*sl2)}};
    else j["classical"] = {{"no_limit", to_json(std::get<NoLimit>(lim))}};
    j["passed"] = ok;
    print_json(out, j);
  } else {
    out << family_text(*f) << "\n";
    const json aj = to_json(a);
    out << "  k(x) = " << aj["alpha"].get<std::string>() << "*x, k(y) = " << aj["beta"].get<std::string>() << "*y\n";
    out << "  e(x) = " << aj["e_x"].get<std::string>() << ", e(y) = " << aj["e_y"].get<std::string>() << "\n";
    out << "  f(x) = " << aj["f_x"].get<std::string>() << ", f(y) = " << aj["f_y"].get<std::string>() << "\n";
    out << "label " << label.str() << "\n";
    if (phi) out << "invariant phi = " << phi->str() << "\n";
    out << "module algebra axioms up to degree " << d << ": " << (axioms.passed ? "PASS" : "FAIL") << "\n";
    if (const auto* n = std::get_if<NoLimit>(&lim)) out << "classical limit: none (" << n->reason << ")\n";
    else out << "classical limit: sl2 relations " << (sl2->passed ? "PASS" : "FAIL") << "\n";
    out << "decomposition up to index " << cutoff << ": " << (comp.verified() ? "VERIFIED" : "NOT VERIFIED") << " ("
        << comp.summands.size() << " summands)\n";
  }
  return ok ? kExitPass : kExitFailure;
}

void add_target_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--family", o.family, "Trivial, Standard, EB0, FC0, EA0 or FD0");
  cmd->add_option("--param", o.params, "family parameter name=value (repeatable), value in Q(q)")->allow_extra_args(false);
  cmd->add_option("--action-file", o.action_file, "JSON action {alpha, beta, e_x, e_y, f_x, f_y}");
}

void add_format(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"U_q(sl2)-symmetries of the quantum plane"};
  app.require_subcommand(1);
  Options o;

  auto* verify = app.add_subcommand("verify", "check the module algebra axioms");
  add_target_options(verify, o);
  verify->add_option("--max-degree", o.max_degree, "highest monomial degree checked");
  add_format(verify, o);

  auto* classify = app.add_subcommand("classify", "label classification");
  classify->add_flag("--all", o.all, "enumerate every admissible label pair");
  classify->add_option("--label", o.label, "label such as 0*/00;00/00");
  classify->add_option("--family", o.family, "classify the label of a family member");
  classify->add_option("--param", o.params, "family parameter name=value")->allow_extra_args(false);
  add_format(classify, o);

  auto* act = app.add_subcommand("act", "evaluate an expression under an action");
  add_target_options(act, o);
  act->add_option("expression", o.expression, "e.g. e(f(x*y))")->required();
  add_format(act, o);

  auto* decompose = app.add_subcommand("decompose", "composition series up to a cutoff");
  add_target_options(decompose, o);
  decompose->add_option("--cutoff", o.cutoff, "largest summand index");
  decompose->add_option("--window", o.window, "Verma window size");
  add_format(decompose, o);

  auto* classical = app.add_subcommand("classical", "q -> 1 limit and sl2 check");
  add_target_options(classical, o);
  classical->add_option("--max-degree", o.max_degree, "highest monomial degree checked");
  add_format(classical, o);

  auto* report = app.add_subcommand("report", "everything about one family member");
  add_target_options(report, o);
  report->add_option("--max-degree", o.max_degree, "degree for the axiom and sl2 checks");
  report->add_option("--cutoff", o.cutoff, "largest summand index");
  report->add_option("--window", o.window, "Verma window size");
  add_format(report, o);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*verify) return do_verify(o, out);
    if (*classify) return do_classify(o, out);
    if (*act) return do_act(o, out);
    if (*decompose) return do_decompose(o, out);
    if (*classical) return do_classical(o, out);
    if (*report) return do_report(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, out, err);
}

}  // namespace uqsl2
