// ocs/json_io.hpp — machine-readable renderings of statements, EBMS results,
// and analysis reports.  Field names mirror the struct fields; concept
// expressions appear in their canonical text syntax, so everything parses
// back with the statement-language grammar.

#ifndef OCS_JSON_IO_HPP
#define OCS_JSON_IO_HPP

#include <json.hpp>

#include "ocs/analysis.hpp"
#include "ocs/meaning.hpp"

namespace ocs {

[[nodiscard]] nlohmann::json to_json(const OidStatement& s);
[[nodiscard]] nlohmann::json to_json(const OcStatement& s);
[[nodiscard]] nlohmann::json to_json(const DlAxiom& a);
[[nodiscard]] nlohmann::json to_json(const AnalyticTheory& t);
[[nodiscard]] nlohmann::json to_json(const Ebms& e);
[[nodiscard]] nlohmann::json to_json(const DiffReport& r);
[[nodiscard]] nlohmann::json to_json(const ImpactReport& r);
[[nodiscard]] nlohmann::json to_json(const Collection& c);

// Parse-back half of the contract.  Throws std::invalid_argument on a
// document that does not match the schema.
[[nodiscard]] OidStatement oid_statement_from_json(const nlohmann::json& j);
[[nodiscard]] OcStatement oc_statement_from_json(const nlohmann::json& j);
[[nodiscard]] DlAxiom axiom_from_json(const nlohmann::json& j);
[[nodiscard]] Ebms ebms_from_json(const nlohmann::json& j);
[[nodiscard]] DiffReport diff_report_from_json(const nlohmann::json& j);
[[nodiscard]] ImpactReport impact_report_from_json(const nlohmann::json& j);

} // namespace ocs

#endif // OCS_JSON_IO_HPP
