#include <doctest.h>

#include "generators.hpp"
#include "norden/commands.hpp"
#include "norden/curvature.hpp"
#include "norden/errors.hpp"
#include "norden/report_document.hpp"
#include "norden/spec_file.hpp"
#include "norden/table1.hpp"

#include <fstream>
#include <sstream>

using namespace norden;

namespace {

std::string fixture(const char* name) { return std::string(NORDEN_FIXTURE_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "nordenctl");
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST_SUITE("spec files") {
  TEST_CASE("canonical and annotated fixtures describe the family") {
    const auto expected = build_table1().algebra;
    CHECK(parse_spec_file(fixture("table1.spec")) == expected);
    CHECK(parse_spec_file(fixture("table1_annotated.spec")) == expected);
  }

  TEST_CASE("emit is byte-identical to the canonical fixture") {
    CHECK(emit_spec(build_table1().algebra) == slurp(fixture("table1.spec")));
  }

  TEST_CASE("parse and emit round trip") {
    for (const char* name : {"table1.spec", "table1_annotated.spec", "abelian2.spec", "non_killing.spec",
                             "table1_perturbed.spec"}) {
      const auto a = parse_spec_file(fixture(name));
      const std::string text = emit_spec(a);
      CHECK(parse_spec(text) == a);
      CHECK(emit_spec(parse_spec(text)) == text);
    }
  }

  TEST_CASE("abelian fixture is Kaehler") {
    const auto a = parse_spec_file(fixture("abelian2.spec"));
    CHECK(a.dim() == 2);
    CHECK(classify(a, tensor_F(a)) == Classification{true, true, true, true});
  }

  TEST_CASE("rejections") {
    CHECK_THROWS_AS(parse_spec_file(fixture("bad_index.spec")), IndexOutOfRange);
    CHECK_THROWS_AS(parse_spec_file(fixture("hermitian.spec")), NordenViolation);
    CHECK_THROWS_AS(parse_spec("dimension = 2\nparameters =\n[brackets]\n2 1 -> 1: 1\n"), ParseError);
    CHECK_THROWS_AS(parse_spec("dimension = 2\nparameters =\n[brackets]\n1 2 -> 1: q\n"), ParseError);
    CHECK_THROWS_AS(parse_spec("dimension = 2\nparameters =\n[nonsense]\n"), ParseError);
    CHECK_THROWS_AS(parse_spec("dimension = 3\nparameters =\n"), ParseError);
    try {
      parse_spec("dimension = 2\nparameters =\n\n[brackets]\n1 2 -> 1: 1 +\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).rfind("line 5:", 0) == 0);
    }
  }
}

TEST_SUITE("report documents") {
  TEST_CASE("json round trip and key set") {
    const ReportDocument d = make_document(build_report(build_table1().algebra));
    const auto j = to_json(d);
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"classification", "theta", "ricci", "tau", "nabla_j_norm",
                                           "locally_symmetric", "sectional", "killing_form"});
    CHECK(document_from_json(j) == d);
    CHECK(document_from_json(nlohmann::ordered_json::parse(j.dump())) == d);
    CHECK_THROWS_AS(document_from_json(nlohmann::ordered_json::parse("{\"tau\": 0}")), ParseError);
  }

  TEST_CASE("csv rows") {
    const auto a = build_table1().algebra.evaluate({{"l1", 1}, {"l2", 1}, {"l3", 1}});
    const std::string csv = to_csv(make_document(build_report(a)));
    CHECK(csv.rfind("quantity,value\n", 0) == 0);
    CHECK(csv.find("\ntau,0\n") != std::string::npos);
    CHECK(csv.find("\nk(a45),1/2\n") != std::string::npos);
    CHECK(csv.find("\nk(a14),0\n") != std::string::npos);
  }
}

TEST_SUITE("command line") {
  TEST_CASE("check") {
    const Run ok = run({"check", "--family", "table1"});
    CHECK(ok.code == exit_ok);
    CHECK(ok.out.find("jacobi: ok") != std::string::npos);
    CHECK(ok.out.find("orthogonal-commutators: ok") != std::string::npos);
    CHECK(run({"check", fixture("table1.spec")}).code == exit_ok);

    const Run bad = run({"check", fixture("table1_perturbed.spec")});
    CHECK(bad.code == exit_check_failed);
    CHECK(bad.out.find("invariant-metric: FAILED") != std::string::npos);
    CHECK(bad.out.find("g([X2,X3],X5) + g([X2,X5],X3) = -1") != std::string::npos);
  }

  TEST_CASE("classify") {
    const Run ab = run({"classify", fixture("abelian2.spec")});
    CHECK(ab.code == exit_ok);
    CHECK(ab.out.find("W0 (Kähler with Norden metric)") != std::string::npos);
    CHECK(run({"classify", "--family", "table1"}).out.find("W3") != std::string::npos);
  }

  TEST_CASE("report formats are deterministic") {
    for (const char* format : {"text", "csv", "json"}) {
      const Run a = run({"report", "--family", "table1", "--format", format});
      const Run b = run({"report", "--family", "table1", "--format", format});
      CHECK(a.code == exit_ok);
      CHECK(a.out == b.out);
    }
    const Run json = run({"report", "--family", "table1", "--format", "json"});
    CHECK(document_from_json(nlohmann::ordered_json::parse(json.out)) ==
          make_document(build_report(build_table1().algebra)));
  }

  TEST_CASE("evaluation arguments") {
    const Run csv = run({"report", "--family", "table1", "--eval", "l1=1,l2=1,l3=1", "--format", "csv"});
    CHECK(csv.code == exit_ok);
    CHECK(csv.out.find("k(a45),1/2") != std::string::npos);
    CHECK(run({"report", "--family", "table1", "--eval", "l1=1,l2=1"}).code == exit_usage);
    CHECK(run({"report", "--family", "table1", "--eval", "l1=1,l2=1,l3=1,q=2"}).code == exit_usage);
    CHECK(run({"report", "--family", "table1", "--eval", "l1=x,l2=1,l3=1"}).code == exit_usage);
  }

  TEST_CASE("regress and family") {
    CHECK(run({"regress", "--family", "table1"}).code == exit_ok);
    CHECK(run({"regress", fixture("table1_perturbed.spec")}).code == exit_check_failed);
    const Run emit = run({"family", "--table1", "--emit-spec"});
    CHECK(emit.code == exit_ok);
    CHECK(emit.out == slurp(fixture("table1.spec")));
  }

  TEST_CASE("usage errors") {
    CHECK(run({}).code == exit_usage);
    CHECK(run({"frobnicate"}).code == exit_usage);
    CHECK(run({"check"}).code == exit_usage);
    CHECK(run({"check", fixture("bad_index.spec")}).code == exit_usage);
    CHECK(run({"check", fixture("does_not_exist.spec")}).code == exit_usage);
    CHECK(run({"curvature", fixture("hermitian.spec")}).code == exit_usage);
  }

  TEST_CASE("curvature on the non-invariant fixture") {
    const Run r = run({"curvature", fixture("non_killing.spec")});
    CHECK(r.code == exit_ok);
    CHECK_FALSE(r.out.empty());
  }
}
