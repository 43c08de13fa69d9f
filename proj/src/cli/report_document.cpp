#include "norden/report_document.hpp"

#include "norden/errors.hpp"
#include "norden/indexing.hpp"

#include <sstream>

namespace norden {

namespace {

std::vector<std::vector<std::string>> render(const PolyMatrix& m) {
  std::vector<std::vector<std::string>> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i].push_back(m(i, j).to_string());
  return out;
}

std::string idx(std::size_t i) { return std::to_string(to_external(i)); }

const char* flag(bool b) { return b ? "true" : "false"; }

} // namespace

ReportDocument make_document(const GeometryReport& r) {
  ReportDocument d;
  d.classification = r.classification;
  for (const auto& t : r.theta) d.theta.push_back(t.to_string());
  d.ricci = render(r.ricci);
  d.tau = r.tau.to_string();
  d.nabla_j_norm = r.nabla_j_norm.to_string();
  d.locally_symmetric = r.locally_symmetric;
  for (const auto& s : r.sectional)
    d.sectional.push_back({s.label(), to_string(s.type), s.value ? std::optional(s.value->to_string()) : std::nullopt});
  d.killing_form = render(r.killing_form);
  return d;
}

nlohmann::ordered_json to_json(const ReportDocument& d) {
  nlohmann::ordered_json j;
  j["classification"] = {{"w0", d.classification.w0},
                         {"w1", d.classification.w1},
                         {"w2", d.classification.w2},
                         {"w3", d.classification.w3}};
  j["theta"] = d.theta;
  j["ricci"] = d.ricci;
  j["tau"] = d.tau;
  j["nabla_j_norm"] = d.nabla_j_norm;
  j["locally_symmetric"] = d.locally_symmetric;
  auto sec = nlohmann::ordered_json::array();
  for (const auto& s : d.sectional) {
    nlohmann::ordered_json e = {{"plane", s.plane}, {"type", s.type}};
    e["value"] = s.value ? nlohmann::ordered_json(*s.value) : nlohmann::ordered_json(nullptr);
    sec.push_back(std::move(e));
  }
  j["sectional"] = std::move(sec);
  j["killing_form"] = d.killing_form;
  return j;
}

ReportDocument document_from_json(const nlohmann::ordered_json& j) {
  try {
    ReportDocument d;
    const auto& c = j.at("classification");
    d.classification = {c.at("w0").get<bool>(), c.at("w1").get<bool>(), c.at("w2").get<bool>(),
                        c.at("w3").get<bool>()};
    d.theta = j.at("theta").get<std::vector<std::string>>();
    d.ricci = j.at("ricci").get<std::vector<std::vector<std::string>>>();
    d.tau = j.at("tau").get<std::string>();
    d.nabla_j_norm = j.at("nabla_j_norm").get<std::string>();
    d.locally_symmetric = j.at("locally_symmetric").get<bool>();
    for (const auto& s : j.at("sectional")) {
      ReportDocument::Sectional e{s.at("plane").get<std::string>(), s.at("type").get<std::string>(), std::nullopt};
      if (!s.at("value").is_null()) e.value = s.at("value").get<std::string>();
      d.sectional.push_back(std::move(e));
    }
    d.killing_form = j.at("killing_form").get<std::vector<std::vector<std::string>>>();
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed report document: ") + e.what());
  }
}

std::string to_csv(const ReportDocument& d) {
  std::ostringstream os;
  os << "quantity,value\n";
  os << "w0," << flag(d.classification.w0) << '\n';
  os << "w1," << flag(d.classification.w1) << '\n';
  os << "w2," << flag(d.classification.w2) << '\n';
  os << "w3," << flag(d.classification.w3) << '\n';
  for (std::size_t i = 0; i < d.theta.size(); ++i) os << "theta(" << idx(i) << ")," << d.theta[i] << '\n';
  for (std::size_t i = 0; i < d.ricci.size(); ++i)
    for (std::size_t j = 0; j < d.ricci[i].size(); ++j)
      os << "rho(" << idx(i) << ";" << idx(j) << ")," << d.ricci[i][j] << '\n';
  os << "tau," << d.tau << '\n';
  os << "nabla_j_norm," << d.nabla_j_norm << '\n';
  os << "locally_symmetric," << flag(d.locally_symmetric) << '\n';
  for (const auto& s : d.sectional) {
    os << "type(" << s.plane << ")," << s.type << '\n';
    os << "k(" << s.plane << ")," << (s.value ? *s.value : "undefined") << '\n';
  }
  for (std::size_t i = 0; i < d.killing_form.size(); ++i)
    for (std::size_t j = 0; j < d.killing_form[i].size(); ++j)
      os << "B(" << idx(i) << ";" << idx(j) << ")," << d.killing_form[i][j] << '\n';
  return os.str();
}

std::string to_text(const ReportDocument& d) {
  std::ostringstream os;
  os << "classification: " << describe(d.classification) << '\n';
  os << "  W0 " << flag(d.classification.w0) << ", W1 " << flag(d.classification.w1) << ", W2 "
     << flag(d.classification.w2) << ", W3 " << flag(d.classification.w3) << "\n\n";
  os << "Lie form theta:\n";
  for (std::size_t i = 0; i < d.theta.size(); ++i) os << "  theta(" << idx(i) << ") = " << d.theta[i] << '\n';
  os << "\nRicci tensor (upper triangle):\n";
  for (std::size_t i = 0; i < d.ricci.size(); ++i)
    for (std::size_t j = i; j < d.ricci[i].size(); ++j)
      os << "  rho(" << idx(i) << "," << idx(j) << ") = " << d.ricci[i][j] << '\n';
  os << "\nscalar curvature tau = " << d.tau << '\n';
  os << "square norm of nabla J = " << d.nabla_j_norm << '\n';
  os << "locally symmetric: " << (d.locally_symmetric ? "yes" : "no") << "\n\n";
  os << "sectional curvatures:\n";
  for (const auto& s : d.sectional)
    os << "  k(" << s.plane << ") [" << s.type << "] = " << (s.value ? *s.value : "undefined") << '\n';
  os << "\nKilling form B (upper triangle):\n";
  for (std::size_t i = 0; i < d.killing_form.size(); ++i)
    for (std::size_t j = i; j < d.killing_form[i].size(); ++j)
      os << "  B(" << idx(i) << "," << idx(j) << ") = " << d.killing_form[i][j] << '\n';
  return os.str();
}

} // namespace norden
