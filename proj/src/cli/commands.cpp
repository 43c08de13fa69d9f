#include "norden/commands.hpp"

#include "norden/errors.hpp"
#include "norden/indexing.hpp"
#include "norden/report_document.hpp"
#include "norden/spec_file.hpp"
#include "norden/table1.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <set>

namespace norden {

namespace {

struct Source {
  std::string spec;
  std::string family;
};

void add_source(CLI::App* cmd, Source& src) {
  auto* spec = cmd->add_option("spec", src.spec, "algebra spec file");
  auto* fam = cmd->add_option("--family", src.family, "built-in family instead of a spec file")
                  ->check(CLI::IsMember({"table1"}));
  spec->excludes(fam);
  fam->excludes(spec);
}

AlmostNordenAlgebra load(const Source& src) {
  if (!src.family.empty()) return build_table1().algebra;
  if (src.spec.empty()) throw ParseError("either a spec file or --family table1 is required");
  return parse_spec_file(src.spec);
}

/// "l1=1,l2=-1/2" -> assignment covering exactly the algebra's parameters.
Assignment parse_assignment(const std::string& text, const ParameterList& params) {
  Assignment values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(',', pos), text.size());
    const std::string item = text.substr(pos, end - pos);
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("--eval expects name=value pairs, got '" + item + "'");
    std::string name = item.substr(0, eq);
    name.erase(0, name.find_first_not_of(" \t"));
    name.erase(name.find_last_not_of(" \t") + 1);
    if (!params.index_of(name)) throw ParseError("--eval names unknown parameter '" + name + "'");
    if (!values.emplace(name, Rational::parse(item.substr(eq + 1))).second)
      throw ParseError("--eval assigns '" + name + "' twice");
    pos = end + 1;
  }
  for (const auto& n : params.names())
    if (!values.count(n)) throw ParseError("--eval must assign every parameter; '" + n + "' is missing");
  return values;
}

std::string triple(std::size_t i, std::size_t j, std::size_t k) {
  return "(" + std::to_string(to_external(i)) + "," + std::to_string(to_external(j)) + "," +
         std::to_string(to_external(k)) + ")";
}

constexpr std::size_t kMaxListed = 10;

int cmd_check(const AlmostNordenAlgebra& a, std::ostream& out) {
  bool ok = true;
  const auto jac = check_jacobi(a.algebra());
  out << "jacobi: " << (jac.ok() ? "ok" : "FAILED") << '\n';
  for (std::size_t n = 0; n < jac.violations.size() && n < kMaxListed; ++n) {
    const auto& v = jac.violations[n];
    out << "  jacobiator" << triple(v.i, v.j, v.k) << " != 0\n";
  }
  ok &= jac.ok();

  const auto nor = check_norden(a.g(), a.J());
  out << "norden: " << (nor.ok() ? "ok" : "FAILED") << '\n';
  if (!nor.ok()) out << "  " << nor.violation->describe() << '\n';
  ok &= nor.ok();

  const auto inv = check_invariant_metric(a);
  out << "invariant-metric: " << (inv.ok() ? "ok" : "FAILED") << '\n';
  for (std::size_t n = 0; n < inv.violations.size() && n < kMaxListed; ++n) {
    const auto& v = inv.violations[n];
    const auto X = [](std::size_t i) { return "X" + std::to_string(to_external(i)); };
    out << "  g([" << X(v.i) << "," << X(v.j) << "]," << X(v.k) << ") + g([" << X(v.i) << "," << X(v.k) << "],"
        << X(v.j) << ") = " << v.value << '\n';
  }
  if (inv.violations.size() > kMaxListed) out << "  ... " << inv.violations.size() - kMaxListed << " more\n";
  ok &= inv.ok();

  const auto com = check_orthogonal_commutators(a);
  out << "orthogonal-commutators: " << (com.ok() ? "ok" : "FAILED") << '\n';
  for (std::size_t n = 0; n < com.violations.size() && n < kMaxListed; ++n)
    out << "  " << com.violations[n].describe() << '\n';
  if (com.violations.size() > kMaxListed) out << "  ... " << com.violations.size() - kMaxListed << " more\n";
  ok &= com.ok();

  return ok ? exit_ok : exit_check_failed;
}

int cmd_classify(const AlmostNordenAlgebra& a, std::ostream& out) {
  const Tensor3 F = tensor_F(a);
  const Classification c = classify(a, F);
  out << describe(c) << '\n';
  out << "w0: " << (c.w0 ? "true" : "false") << '\n';
  out << "w1: " << (c.w1 ? "true" : "false") << '\n';
  out << "w2: " << (c.w2 ? "true" : "false") << '\n';
  out << "w3: " << (c.w3 ? "true" : "false") << '\n';
  return exit_ok;
}

int cmd_curvature(const AlmostNordenAlgebra& a, std::ostream& out) {
  const ConnectionCoeffs c = levi_civita(a);
  const Tensor4 R = curvature_R(a, c);
  const std::size_t d = a.dim();
  out << "curvature components R(i,j,k,l), i<j, k<l, (i,j)<=(k,l), nonzero only:\n";
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = i; k < d; ++k)
        for (std::size_t l = k + 1; l < d; ++l) {
          if (k == i && l < j) continue;
          if (R(i, j, k, l).is_zero()) continue;
          out << "  R(" << to_external(i) << "," << to_external(j) << "," << to_external(k) << "," << to_external(l)
              << ") = " << R(i, j, k, l) << '\n';
        }
  const auto [rho, tau] = ricci_and_scalar(a, R);
  out << "Ricci tensor (upper triangle, nonzero only):\n";
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j)
      if (!rho(i, j).is_zero()) out << "  rho(" << to_external(i) << "," << to_external(j) << ") = " << rho(i, j) << '\n';
  out << "tau = " << tau << '\n';
  out << "locally symmetric: " << (nabla_R(a, c, R).is_zero() ? "yes" : "no") << '\n';
  return exit_ok;
}

int cmd_report(const AlmostNordenAlgebra& a, const std::string& format, std::ostream& out) {
  const ReportDocument doc = make_document(build_report(a));
  if (format == "json")
    out << to_json(doc).dump(2) << '\n';
  else if (format == "csv")
    out << to_csv(doc);
  else
    out << to_text(doc);
  return exit_ok;
}

int cmd_regress(const AlmostNordenAlgebra& a, const std::optional<Assignment>& values, std::ostream& out) {
  const Table1Family f{a.algebra().parameters(), a};
  if (f.params.size() != 3) throw ParseError("regression needs an algebra with exactly three parameters");
  const RegressionReport r = family_regression(f, values);
  for (const auto& e : r.entries)
    out << (e.passed ? "PASS " : "FAIL ") << e.group << " | " << e.identity << " | expected " << e.expected
        << " | computed " << e.computed << '\n';
  out << r.entries.size() - r.failures().size() << "/" << r.entries.size() << " identities hold\n";
  return r.all_passed() ? exit_ok : exit_check_failed;
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Norden-geometry workbench for Lie algebras", args.empty() ? "nordenctl" : args.front()};
  app.require_subcommand(1);

  Source check_src, classify_src, curvature_src, report_src, regress_src;
  std::string report_eval, report_format = "text", regress_eval;
  bool table1 = false, emit = false;

  auto* check = app.add_subcommand("check", "structural checks: Jacobi, Norden, invariant metric, commutators");
  add_source(check, check_src);
  auto* classify_cmd = app.add_subcommand("classify", "W0/W1/W2/W3 membership");
  add_source(classify_cmd, classify_src);
  auto* curvature = app.add_subcommand("curvature", "curvature tensor, Ricci tensor, scalar curvature");
  add_source(curvature, curvature_src);
  auto* report = app.add_subcommand("report", "full geometry report");
  add_source(report, report_src);
  report->add_option("--eval", report_eval, "substitute every parameter, e.g. l1=1,l2=1/2,l3=-3");
  report->add_option("--format", report_format, "output format")->check(CLI::IsMember({"text", "csv", "json"}));
  auto* regress = app.add_subcommand("regress", "published identities of the three-parameter family");
  add_source(regress, regress_src);
  regress->add_option("--eval", regress_eval, "substitute every parameter before checking");
  auto* family = app.add_subcommand("family", "built-in families");
  family->add_flag("--table1", table1, "the three-parameter six-dimensional family");
  family->add_flag("--emit-spec", emit, "print the family as a spec file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    return exit_usage;
  }

  try {
    if (*check) return cmd_check(load(check_src), out);
    if (*classify_cmd) return cmd_classify(load(classify_src), out);
    if (*curvature) return cmd_curvature(load(curvature_src), out);
    if (*report) {
      AlmostNordenAlgebra a = load(report_src);
      if (!report_eval.empty()) a = a.evaluate(parse_assignment(report_eval, a.algebra().parameters()));
      return cmd_report(a, report_format, out);
    }
    if (*regress) {
      const AlmostNordenAlgebra a = load(regress_src);
      std::optional<Assignment> values;
      if (!regress_eval.empty()) values = parse_assignment(regress_eval, a.algebra().parameters());
      return cmd_regress(a, values, out);
    }
    if (*family) {
      if (!table1 || !emit) {
        err << "usage error: family requires --table1 --emit-spec\n";
        return exit_usage;
      }
      out << emit_spec(build_table1().algebra);
      return exit_ok;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}

} // namespace norden
