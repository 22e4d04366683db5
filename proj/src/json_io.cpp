#include "ocs/json_io.hpp"

#include <stdexcept>

#include "ocs/parse.hpp"

namespace ocs {

using nlohmann::json;

namespace {

json statements_to_json(const std::set<OidStatement>& statements) {
    json out = json::array();
    for (const auto& s : statements) out.push_back(to_json(s));
    return out;
}

json oids_to_json(const std::set<Oid>& oids) {
    json out = json::array();
    for (const auto& oid : oids) out.push_back(oid.render());
    return out;
}

Oid oid_from_string(const std::string& text) {
    auto oid = Oid::parse(text);
    if (!oid) throw std::invalid_argument("not an OID: " + text);
    return *oid;
}

ConceptExpr concept_from_string(const std::string& text) {
    auto result = parse_concept(text);
    if (auto* diag = std::get_if<ParseDiagnostic>(&result))
        throw std::invalid_argument("bad concept expression: " + diag->message);
    return std::get<ConceptExpr>(result);
}

std::set<OidStatement> statements_from_json(const json& j) {
    std::set<OidStatement> out;
    for (const auto& item : j) out.insert(oid_statement_from_json(item));
    return out;
}

std::set<Oid> oids_from_json(const json& j) {
    std::set<Oid> out;
    for (const auto& item : j) out.insert(oid_from_string(item.get<std::string>()));
    return out;
}

} // namespace

json to_json(const OidStatement& s) {
    return json{{"subject", s.subject().render()},
                {"indicator", to_string(s.indicator())},
                {"condition", to_string(s.condition())},
                {"characterization", serialize_concept(s.characterization())}};
}

json to_json(const OcStatement& s) {
    if (s.kind() == OcStatement::Kind::Hri)
        return json{{"subject", s.subject().render()},
                    {"kind", "HRI"},
                    {"label", s.label()},
                    {"lang", s.lang()}};
    return json{{"subject", s.subject().render()},
                {"kind", "Meta"},
                {"key", s.key()},
                {"value", s.value()}};
}

json to_json(const DlAxiom& a) {
    return json{{"kind", a.kind() == DlAxiom::Kind::Sub ? "Sub" : "Equiv"},
                {"lhs", serialize_concept(a.lhs())},
                {"rhs", serialize_concept(a.rhs())}};
}

json to_json(const AnalyticTheory& t) {
    return json{{"root", t.root.render()},
                {"statements", statements_to_json(t.statements)},
                {"primitives", oids_to_json(t.primitives)}};
}

json to_json(const Ebms& e) {
    json axioms = json::array();
    for (const auto& a : e.non_reverse_translatable) axioms.push_back(to_json(a));
    return json{{"subject", e.subject.render()},
                {"coherent", e.coherent},
                {"asserted", statements_to_json(e.asserted)},
                {"inferred", statements_to_json(e.inferred)},
                {"non_reverse_translatable", std::move(axioms)}};
}

json to_json(const DiffReport& r) {
    json oc_added = json::array();
    for (const auto& s : r.oc_added) oc_added.push_back(to_json(s));
    json oc_removed = json::array();
    for (const auto& s : r.oc_removed) oc_removed.push_back(to_json(s));
    return json{{"oid", r.oid.render()},
                {"kind", to_string(r.kind)},
                {"ebms_delta",
                 json{{"added", statements_to_json(r.ebms_added)},
                      {"removed", statements_to_json(r.ebms_removed)}}},
                {"oc_delta", json{{"added", std::move(oc_added)},
                                  {"removed", std::move(oc_removed)}}},
                {"detail", r.detail}};
}

json to_json(const ImpactReport& r) {
    json affected = json::array();
    for (const auto& [oid, delta] : r.affected)
        affected.push_back(json{{"oid", oid.render()},
                                {"verdict", to_string(delta.verdict())},
                                {"added", statements_to_json(delta.added)},
                                {"removed", statements_to_json(delta.removed)},
                                {"before", to_json(delta.before)},
                                {"after", to_json(delta.after)}});
    json conflicts = json::array();
    for (const auto& c : r.conflicts)
        conflicts.push_back(json{{"oid", c.subject.render()},
                                 {"base", to_json(c.base)},
                                 {"incoming", to_json(c.incoming)}});
    return json{{"verdict", to_string(r.verdict)},
                {"imported", oids_to_json(r.imported)},
                {"coherence_breaks", oids_to_json(r.coherence_breaks)},
                {"conflicts", std::move(conflicts)},
                {"affected", std::move(affected)}};
}

json to_json(const Collection& c) {
    json components = json::array();
    for (const auto& [oid, component] : c.components()) {
        json oc = json::array();
        for (const auto& s : component.oc_statements) oc.push_back(to_json(s));
        components.push_back(json{{"oid", oid.render()},
                                  {"oid_statements", statements_to_json(component.oid_statements)},
                                  {"oc_statements", std::move(oc)}});
    }
    return json{{"version", c.version_label()},
                {"primitives", oids_to_json(c.primitive_references())},
                {"components", std::move(components)}};
}

OidStatement oid_statement_from_json(const json& j) {
    const std::string indicator = j.at("indicator").get<std::string>();
    const std::string condition = j.at("condition").get<std::string>();
    Indicator ind;
    if (indicator == "Analytic") ind = Indicator::Analytic;
    else if (indicator == "Synthetic") ind = Indicator::Synthetic;
    else throw std::invalid_argument("bad indicator: " + indicator);
    Condition cond;
    if (condition == "has_NC") cond = Condition::NC;
    else if (condition == "has_SC") cond = Condition::SC;
    else if (condition == "has_NSC") cond = Condition::NSC;
    else throw std::invalid_argument("bad condition: " + condition);
    return OidStatement(oid_from_string(j.at("subject").get<std::string>()), ind, cond,
                        concept_from_string(j.at("characterization").get<std::string>()));
}

OcStatement oc_statement_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    const Oid subject = oid_from_string(j.at("subject").get<std::string>());
    if (kind == "HRI")
        return OcStatement::hri(subject, j.at("label").get<std::string>(),
                                j.at("lang").get<std::string>());
    if (kind == "Meta")
        return OcStatement::meta(subject, j.at("key").get<std::string>(),
                                 j.at("value").get<std::string>());
    throw std::invalid_argument("bad OC statement kind: " + kind);
}

DlAxiom axiom_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    const ConceptExpr lhs = concept_from_string(j.at("lhs").get<std::string>());
    const ConceptExpr rhs = concept_from_string(j.at("rhs").get<std::string>());
    if (kind == "Sub") return DlAxiom::sub(lhs, rhs);
    if (kind == "Equiv") return DlAxiom::equiv(lhs, rhs);
    throw std::invalid_argument("bad axiom kind: " + kind);
}

Ebms ebms_from_json(const json& j) {
    Ebms out;
    out.subject = oid_from_string(j.at("subject").get<std::string>());
    out.coherent = j.at("coherent").get<bool>();
    out.asserted = statements_from_json(j.at("asserted"));
    out.inferred = statements_from_json(j.at("inferred"));
    for (const auto& a : j.at("non_reverse_translatable"))
        out.non_reverse_translatable.insert(axiom_from_json(a));
    return out;
}

DiffReport diff_report_from_json(const json& j) {
    DiffReport out;
    out.oid = oid_from_string(j.at("oid").get<std::string>());
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "Identical") out.kind = DiffKind::Identical;
    else if (kind == "AnnotationOnly") out.kind = DiffKind::AnnotationOnly;
    else if (kind == "SyntheticOrSufficientOnly") out.kind = DiffKind::SyntheticOrSufficientOnly;
    else if (kind == "MeaningAffecting") out.kind = DiffKind::MeaningAffecting;
    else if (kind == "Incoherent") out.kind = DiffKind::Incoherent;
    else throw std::invalid_argument("bad diff kind: " + kind);
    out.ebms_added = statements_from_json(j.at("ebms_delta").at("added"));
    out.ebms_removed = statements_from_json(j.at("ebms_delta").at("removed"));
    for (const auto& s : j.at("oc_delta").at("added")) out.oc_added.insert(oc_statement_from_json(s));
    for (const auto& s : j.at("oc_delta").at("removed"))
        out.oc_removed.insert(oc_statement_from_json(s));
    out.detail = j.at("detail").get<std::vector<std::string>>();
    return out;
}

ImpactReport impact_report_from_json(const json& j) {
    ImpactReport out;
    const std::string verdict = j.at("verdict").get<std::string>();
    if (verdict == "NoChange") out.verdict = ImpactVerdict::NoChange;
    else if (verdict == "Extended") out.verdict = ImpactVerdict::Extended;
    else if (verdict == "MeaningAltered") out.verdict = ImpactVerdict::MeaningAltered;
    else if (verdict == "IncoherenceIntroduced") out.verdict = ImpactVerdict::IncoherenceIntroduced;
    else throw std::invalid_argument("bad impact verdict: " + verdict);
    out.imported = oids_from_json(j.at("imported"));
    out.coherence_breaks = oids_from_json(j.at("coherence_breaks"));
    for (const auto& c : j.at("conflicts"))
        out.conflicts.push_back(NscConflict{oid_from_string(c.at("oid").get<std::string>()),
                                            oid_statement_from_json(c.at("base")),
                                            oid_statement_from_json(c.at("incoming"))});
    for (const auto& entry : j.at("affected")) {
        EbmsDelta delta{ebms_from_json(entry.at("before")), ebms_from_json(entry.at("after")),
                        statements_from_json(entry.at("added")),
                        statements_from_json(entry.at("removed"))};
        out.affected.emplace(oid_from_string(entry.at("oid").get<std::string>()),
                             std::move(delta));
    }
    return out;
}

} // namespace ocs
