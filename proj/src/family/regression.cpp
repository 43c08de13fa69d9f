#include "norden/table1.hpp"

#include "norden/indexing.hpp"

#include <algorithm>
#include <regex>
#include <set>

namespace norden {

namespace {

// Published values of the family. Each line lists signed, scaled components
// that all equal the same expression: "-2F134" means -2 * F(X1,X3,X4) = value.
struct Block {
  const char* group;
  const char* components;
  const char* value;
};

const Block kFBlocks[] = {
    {"F components",
     "2F116 2F161 -2F134 -2F143 2F223 2F232 2F256 2F265 -F322 -F355 2F413 2F431 2F446 2F464 -2F526 -2F562 2F535 "
     "2F553 -F611 -F644 -2F113 -2F131 -2F146 -2F164 -2F226 -2F262 2F235 2F253 F311 F344 2F416 2F461 -2F434 -2F443 "
     "-2F523 -2F532 -2F556 -2F565 F622 F655",
     "l1"},
    {"F components",
     "-2F115 -2F151 2F124 2F142 F233 F266 -2F323 -2F332 -2F356 -2F365 -2F412 -2F421 -2F445 -2F454 F511 F544 -2F626 "
     "-2F662 2F635 2F653 2F112 2F121 2F145 2F154 -F211 -F244 -2F326 -2F362 2F335 2F353 -2F415 -2F451 2F424 2F442 "
     "-F533 -F566 2F623 2F632 2F656 2F665",
     "l2"},
    {"F components",
     "-F133 -F166 -2F215 -2F251 2F224 2F242 2F313 2F331 2F346 2F364 -F422 -F455 2F512 2F521 2F545 2F554 2F616 2F661 "
     "-2F634 -2F643 F122 F155 -2F212 -2F221 -2F245 -2F254 2F316 2F361 -2F334 -2F343 F433 F466 -2F515 -2F551 2F524 "
     "2F542 -2F613 -2F631 -2F646 -2F664",
     "l3"},
};

const Block kRBlocks[] = {
    {"curvature components", "-R1221 R4554", "1/4*l2^2 + 1/4*l3^2"},
    {"curvature components", "-R1551 R2442", "1/4*l2^2 - 1/4*l3^2"},
    {"curvature components", "-R1331 R4664", "1/4*l1^2 + 1/4*l3^2"},
    {"curvature components", "-R1661 R3443", "1/4*l1^2 - 1/4*l3^2"},
    {"curvature components", "-R2332 R5665", "1/4*l1^2 + 1/4*l2^2"},
    {"curvature components", "-R2662 R3553", "1/4*l1^2 - 1/4*l2^2"},
    {"curvature components", "R1361 R2362 -R4364 -R5365", "1/4*l1^2"},
    {"curvature components", "R1251 R3253 -R4254 -R6256", "1/4*l2^2"},
    {"curvature components", "R2142 R3143 -R5145 -R6146", "1/4*l3^2"},
    {"curvature components",
     "R1561 R2562 R3563 -R4564 -R1261 -R3263 R4264 R5265 -R1351 -R2352 R4354 R6356 R1231 -R4234 -R5235 -R6236",
     "1/4*l1*l2"},
    {"curvature components",
     "-R1341 -R2342 R5345 R6346 R2132 -R4134 -R5135 -R6136 R1461 R2462 R3463 -R5465 -R2162 -R3163 R4164 R5165",
     "1/4*l1*l3"},
    {"curvature components",
     "R3123 -R4124 -R5125 -R6126 -R1241 -R3243 R5245 R6246 -R2152 -R3153 R4154 R6156 R1451 R2452 R3453 -R6456",
     "1/4*l2*l3"},
};

const Block kRicciBlocks[] = {
    {"Ricci tensor", "rho11 rho44 -rho14", "-l3^2"},   {"Ricci tensor", "rho12 -rho15 -rho24 rho45", "l2*l3"},
    {"Ricci tensor", "rho22 rho55 -rho25", "-l2^2"},   {"Ricci tensor", "rho13 -rho16 -rho34 rho46", "l1*l3"},
    {"Ricci tensor", "rho33 rho66 -rho36", "-l1^2"},   {"Ricci tensor", "rho23 -rho26 -rho35 rho56", "l1*l2"},
};

const Block kSectionalBlocks[] = {
    {"holomorphic", "k14 k25 k36", "0"},
    {"totally_real", "-k12 k45", "1/4*l2^2 + 1/4*l3^2"},
    {"totally_real", "k15 -k24", "1/4*l2^2 - 1/4*l3^2"},
    {"totally_real", "-k13 k46", "1/4*l1^2 + 1/4*l3^2"},
    {"totally_real", "k16 -k34", "1/4*l1^2 - 1/4*l3^2"},
    {"totally_real", "-k23 k56", "1/4*l1^2 + 1/4*l2^2"},
    {"totally_real", "k26 -k35", "1/4*l1^2 - 1/4*l2^2"},
};

// Upper-left block L of the Killing form B = 4 [[L, -L], [-L, L]].
const char* kKillingL[3][3] = {
    {"l3^2", "-l2*l3", "-l1*l3"},
    {"-l2*l3", "l2^2", "-l1*l2"},
    {"-l1*l3", "-l1*l2", "l1^2"},
};

struct Component {
  Rational scale;                  // scale * component = block value
  std::vector<std::size_t> index;  // 0-based
};

Component parse_component(const std::string& token) {
  static const std::regex re(R"(^(-?)(\d*)([A-Za-z]+)(\d+)$)");
  std::smatch m;
  if (!std::regex_match(token, m, re)) throw Error("malformed regression token '" + token + "'");
  long scale = m[2].str().empty() ? 1 : std::stol(m[2].str());
  if (!m[1].str().empty()) scale = -scale;
  Component c{Rational(scale), {}};
  for (char ch : m[4].str()) c.index.push_back(from_external(ch - '0', 6));
  return c;
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const std::size_t next = s.find(' ', pos);
    const std::size_t end = next == std::string::npos ? s.size() : next;
    if (end > pos) out.push_back(s.substr(pos, end - pos));
    pos = end + 1;
  }
  return out;
}

std::string label(const std::string& name, const std::vector<std::size_t>& index) {
  std::string s = name + "(";
  for (std::size_t k = 0; k < index.size(); ++k) s += (k ? "," : "") + std::to_string(to_external(index[k]));
  return s + ")";
}

class Runner {
public:
  Runner(const Table1Family& f, const std::optional<Assignment>& values)
      : family_(f), values_(values), algebra_(values ? f.algebra.evaluate(*values) : f.algebra) {}

  RegressionReport run() {
    structure();
    const Tensor3 F = tensor_F(algebra_);
    f_components(F);
    classification(F);
    const ConnectionCoeffs c = levi_civita(algebra_);
    const Tensor4 R = curvature_R(algebra_, c);
    curvature(R);
    ricci(R);
    sectional(R);
    add("square norm of nabla J", "||nabla J||", expect("0"), square_norm_nabla_J(algebra_, F));
    const Tensor5 dR = nabla_R(algebra_, c, R);
    std::string witness = "0";
    dR.for_each([&](const Tensor5::Index& i, const Poly& v) {
      if (witness == "0" && !v.is_zero())
        witness = label("nablaR", {i.begin(), i.end()}) + " = " + v.to_string();
    });
    add_text("local symmetry", "nabla R = 0 (all components)", "0", witness);
    killing();
    return std::move(report_);
  }

private:
  // Expected values are written over l1,l2,l3; rebase them onto the family's
  // own parameter names (same positions), then evaluate if requested.
  Poly expect(const std::string& text) const {
    static const ParameterList canonical({"l1", "l2", "l3"});
    const Poly p = Poly::from_terms(family_.params, Poly::parse(text, canonical).terms());
    return values_ ? p.substitute(*values_) : p;
  }

  void add(const std::string& group, const std::string& identity, const Poly& expected, const Poly& computed) {
    report_.entries.push_back({group, identity, expected.to_string(), computed.to_string(), expected == computed});
  }
  void add_text(const std::string& group, const std::string& identity, const std::string& expected,
                const std::string& computed) {
    report_.entries.push_back({group, identity, expected, computed, expected == computed});
  }
  void add_flag(const std::string& group, const std::string& identity, bool expected, bool computed) {
    add_text(group, identity, expected ? "true" : "false", computed ? "true" : "false");
  }

  void structure() {
    const auto jac = check_jacobi(algebra_.algebra());
    add_text("structure", "Jacobi identity", "ok",
             jac.ok() ? "ok" : std::to_string(jac.violations.size()) + " violating triples");
    const auto nor = check_norden(algebra_.g(), algebra_.J());
    add_text("structure", "Norden compatibility of g and J", "ok", nor.ok() ? "ok" : nor.violation->describe());
    const auto inv = check_invariant_metric(algebra_);
    std::string inv_text = "ok";
    if (!inv.ok()) {
      const auto& v = inv.violations.front();
      inv_text = std::to_string(inv.violations.size()) + " violations, first g([X" + std::to_string(to_external(v.i)) +
                 ",X" + std::to_string(to_external(v.j)) + "],X" + std::to_string(to_external(v.k)) + ") + g([X" +
                 std::to_string(to_external(v.i)) + ",X" + std::to_string(to_external(v.k)) + "],X" +
                 std::to_string(to_external(v.j)) + ") = " + v.value.to_string();
    }
    add_text("structure", "invariant metric", "ok", inv_text);
    const auto com = check_orthogonal_commutators(algebra_);
    add_text("structure", "orthogonal commutators", "ok",
             com.ok() ? "ok" : std::to_string(com.violations.size()) + " violations, first " +
                                   com.violations.front().describe());
  }

  void f_components(const Tensor3& F) {
    std::set<std::vector<std::size_t>> listed;
    for (const auto& b : kFBlocks) {
      const Poly value = expect(b.value);
      for (const auto& tok : split(b.components)) {
        const Component c = parse_component(tok);
        listed.insert(c.index);
        add(b.group, label("F", c.index), value / c.scale, F(c.index[0], c.index[1], c.index[2]));
      }
    }
    std::string witness = "0";
    std::size_t extra = 0;
    F.for_each([&](const Tensor3::Index& i, const Poly& v) {
      if (v.is_zero() || listed.count({i.begin(), i.end()})) return;
      if (extra++ == 0) witness = label("F", {i.begin(), i.end()}) + " = " + v.to_string();
    });
    add_text("F vanishing", "all unlisted F components", "0", witness);
  }

  void classification(const Tensor3& F) {
    const Covector theta = lie_form(algebra_, F);
    for (std::size_t z = 0; z < theta.size(); ++z) add("Lie form", label("theta", {z}), expect("0"), theta[z]);
    const Classification c = classify(algebra_, F);
    add_flag("classification", "W3 (quasi-Kaehler)", true, c.w3);
    add_flag("classification", "W0 (Kaehler)", false, c.w0);
    add_flag("classification", "W1", false, c.w1);
    add_flag("classification", "W2", false, c.w2);
  }

  void curvature(const Tensor4& R) {
    std::set<std::vector<std::size_t>> covered;
    for (const auto& b : kRBlocks) {
      const Poly value = expect(b.value);
      for (const auto& tok : split(b.components)) {
        const Component c = parse_component(tok);
        const auto& x = c.index;
        add(b.group, label("R", x), value / c.scale, R(x[0], x[1], x[2], x[3]));
        // symmetry orbit: antisymmetry in each pair and pair exchange
        for (const auto& o : std::vector<std::vector<std::size_t>>{
                 {x[0], x[1], x[2], x[3]}, {x[1], x[0], x[2], x[3]}, {x[0], x[1], x[3], x[2]},
                 {x[1], x[0], x[3], x[2]}, {x[2], x[3], x[0], x[1]}, {x[3], x[2], x[0], x[1]},
                 {x[2], x[3], x[1], x[0]}, {x[3], x[2], x[1], x[0]}})
          covered.insert(o);
      }
    }
    std::string witness = "0";
    R.for_each([&](const Tensor4::Index& i, const Poly& v) {
      if (witness == "0" && !v.is_zero() && !covered.count({i.begin(), i.end()}))
        witness = label("R", {i.begin(), i.end()}) + " = " + v.to_string();
    });
    add_text("curvature vanishing", "components outside the listed symmetry orbits", "0", witness);

    const Tensor4 shortcut = curvature_R_invariant(algebra_);
    std::string diff = "0";
    R.for_each([&](const Tensor4::Index& i, const Poly& v) {
      if (diff == "0" && !(v == shortcut[i]))
        diff = label("R", {i.begin(), i.end()}) + ": " + v.to_string() + " vs " + shortcut[i].to_string();
    });
    add_text("curvature invariant-metric form", "R = -1/4 g([X_i,X_j],[X_k,X_l])", "0", diff);
  }

  void ricci(const Tensor4& R) {
    const auto [rho, tau] = ricci_and_scalar(algebra_, R);
    for (const auto& b : kRicciBlocks) {
      const Poly value = expect(b.value);
      for (const auto& tok : split(b.components)) {
        const Component c = parse_component(tok);
        add(b.group, label("rho", c.index), value / c.scale, rho(c.index[0], c.index[1]));
      }
    }
    std::string asym = "0";
    for (std::size_t i = 0; i < rho.rows() && asym == "0"; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (!(rho(i, j) == rho(j, i))) asym = label("rho", {i, j});
    add_text("Ricci tensor", "rho symmetric", "0", asym);
    add("scalar curvature", "tau", expect("0"), tau);
  }

  void sectional(const Tensor4& R) {
    for (const auto& b : kSectionalBlocks) {
      const Poly value = expect(b.value);
      for (const auto& tok : split(b.components)) {
        const Component c = parse_component(tok);
        const PlaneSpec p = PlaneSpec::basis(6, c.index[0], c.index[1]);
        const std::string name = "a" + std::to_string(to_external(c.index[0])) + std::to_string(to_external(c.index[1]));
        add_text("plane types", name, b.group, to_string(plane_type(algebra_, p)));
        add("sectional curvatures", "k(" + name + ")", value / c.scale, sectional_curvature(algebra_, R, p));
      }
    }
  }

  void killing() {
    const PolyMatrix B = algebra_.algebra().killing_form();
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = i; j < 6; ++j) {
        Poly e = expect(kKillingL[i % 3][j % 3]) * Rational(4);
        if ((i < 3) != (j < 3)) e = -e;
        add("Killing form", label("B", {i, j}), e, B(i, j));
      }
    add("Killing form", "det B", expect("0"), determinant(B));
  }

  const Table1Family& family_;
  const std::optional<Assignment>& values_;
  AlmostNordenAlgebra algebra_;
  RegressionReport report_;
};

} // namespace

bool RegressionReport::all_passed() const {
  return std::all_of(entries.begin(), entries.end(), [](const RegressionEntry& e) { return e.passed; });
}

std::vector<const RegressionEntry*> RegressionReport::failures() const {
  std::vector<const RegressionEntry*> out;
  for (const auto& e : entries)
    if (!e.passed) out.push_back(&e);
  return out;
}

std::vector<const RegressionEntry*> RegressionReport::group(const std::string& name) const {
  std::vector<const RegressionEntry*> out;
  for (const auto& e : entries)
    if (e.group == name) out.push_back(&e);
  return out;
}

RegressionReport family_regression(const Table1Family& f, const std::optional<Assignment>& values) {
  return Runner(f, values).run();
}

} // namespace norden
