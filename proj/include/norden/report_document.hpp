#pragma once

#include "norden/curvature.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace norden {

/// A GeometryReport rendered to canonical strings, ready for output.
struct ReportDocument {
  struct Sectional {
    std::string plane;                 // "a12"
    std::string type;                  // holomorphic | totally_real | generic | degenerate
    std::optional<std::string> value;  // empty for degenerate planes
    friend bool operator==(const Sectional&, const Sectional&) = default;
  };

  Classification classification;
  std::vector<std::string> theta;
  std::vector<std::vector<std::string>> ricci;
  std::string tau;
  std::string nabla_j_norm;
  bool locally_symmetric = false;
  std::vector<Sectional> sectional;
  std::vector<std::vector<std::string>> killing_form;

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

ReportDocument make_document(const GeometryReport& r);

nlohmann::ordered_json to_json(const ReportDocument& d);
/// Inverse of to_json; throws ParseError on a malformed document.
ReportDocument document_from_json(const nlohmann::ordered_json& j);

/// "quantity,value" rows, e.g. "tau,0" and "k(a45),1/2".
std::string to_csv(const ReportDocument& d);
std::string to_text(const ReportDocument& d);

} // namespace norden
