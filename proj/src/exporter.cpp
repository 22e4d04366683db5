#include "ocs/exporter.hpp"

#include <set>

#include "ocs/dl_bridge.hpp"
#include "ocs/reasoner.hpp"

namespace ocs {

namespace {

bool unreserved(unsigned char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
           c == '-' || c == '.' || c == '_' || c == '~';
}

std::string_view base_or(const std::string& own, const std::string& fallback) {
    std::string_view b = own.empty() ? fallback : own;
    while (b.ends_with('/')) b.remove_suffix(1);
    return b;
}

std::string quoted_literal(const std::string& text) {
    std::string out = "\"";
    for (char c : text) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

} // namespace

std::string percent_encode(const std::string& text) {
    static const char* hex = "0123456789ABCDEF";
    std::string out;
    out.reserve(text.size());
    for (unsigned char c : text) {
        if (unreserved(c)) {
            out.push_back(static_cast<char>(c));
        } else {
            out.push_back('%');
            out.push_back(hex[c >> 4]);
            out.push_back(hex[c & 0x0F]);
        }
    }
    return out;
}

std::string oid_iri(const Oid& oid, const std::string& base_iri) {
    return std::string(base_or(oid.iri_base, base_iri)) + "/" + oid.render();
}

std::string unit_iri(const LexicalUnit& unit, const std::string& base_iri) {
    return std::string(base_or({}, base_iri)) + "/nl/" + percent_encode(unit.text) + "@" +
           unit.lang;
}

namespace {

struct OwlWriter {
    const std::string& base;
    std::string out;

    std::string ref(const std::string& iri) { return "<" + iri + ">"; }

    std::string render(const ConceptExpr& e) {
        using Kind = ConceptExpr::Kind;
        switch (e.kind()) {
            case Kind::Top: return "owl:Thing";
            case Kind::Bottom: return "owl:Nothing";
            case Kind::Atom: return ref(oid_iri(e.atom_oid(), base));
            case Kind::NlAtom: return ref(unit_iri(e.lexical_unit(), base));
            case Kind::Not: return "ObjectComplementOf(" + render(e.child()) + ")";
            case Kind::Exists:
                return "ObjectSomeValuesFrom(" + ref(oid_iri(e.role(), base)) + " " +
                       render(e.filler()) + ")";
            case Kind::Forall:
                return "ObjectAllValuesFrom(" + ref(oid_iri(e.role(), base)) + " " +
                       render(e.filler()) + ")";
            case Kind::And:
            case Kind::Or: {
                std::string body = e.kind() == Kind::And ? "ObjectIntersectionOf("
                                                         : "ObjectUnionOf(";
                bool first = true;
                for (const auto& op : e.operands()) {
                    if (!std::exchange(first, false)) body.push_back(' ');
                    body += render(op);
                }
                body.push_back(')');
                return body;
            }
        }
        return "owl:Thing";
    }

    void line(const std::string& text) {
        out += text;
        out.push_back('\n');
    }
};

} // namespace

std::string export_owl_functional(const Collection& c, const ExportOptions& options) {
    OwlWriter w{options.base_iri, {}};
    w.line("Prefix(owl:=<http://www.w3.org/2002/07/owl#>)");
    w.line("Prefix(rdfs:=<http://www.w3.org/2000/01/rdf-schema#>)");
    w.line("Ontology(" + w.ref(options.base_iri));
    if (!c.version_label().empty())
        w.line("Annotation(owl:versionInfo " + quoted_literal(c.version_label()) + ")");

    // Signature over every statement of the collection.
    std::set<DlAxiom> axioms;
    for (const auto& [oid, component] : c.components())
        for (const auto& s : component.oid_statements) axioms.insert(translate(s));
    Tbox tbox(std::move(axioms));
    std::set<Oid> classes = tbox.signature().classes;
    for (const auto& [oid, component] : c.components())
        if (!tbox.signature().roles.contains(oid)) classes.insert(oid);

    for (const auto& oid : classes) w.line("Declaration(Class(" + w.ref(oid_iri(oid, w.base)) + "))");
    for (const auto& role : tbox.signature().roles)
        w.line("Declaration(ObjectProperty(" + w.ref(oid_iri(role, w.base)) + "))");
    for (const auto& unit : tbox.signature().units) {
        w.line("Declaration(Class(" + w.ref(unit_iri(unit, w.base)) + "))");
        w.line("AnnotationAssertion(rdfs:label " + w.ref(unit_iri(unit, w.base)) + " " +
               quoted_literal(unit.text) + "@" + unit.lang + ")");
    }

    const std::string indicator_prop = w.base + "/meta/indicator";
    for (const auto& [oid, component] : c.components()) {
        for (const auto& s : component.oid_statements) {
            const DlAxiom axiom = translate(s);
            std::string annotation;
            if (s.indicator() == Indicator::Synthetic)
                annotation = "Annotation(" + w.ref(indicator_prop) + " \"Synthetic\") ";
            if (axiom.kind() == DlAxiom::Kind::Equiv)
                w.line("EquivalentClasses(" + annotation + w.render(axiom.lhs()) + " " +
                       w.render(axiom.rhs()) + ")");
            else
                w.line("SubClassOf(" + annotation + w.render(axiom.lhs()) + " " +
                       w.render(axiom.rhs()) + ")");
        }
        for (const auto& s : component.oc_statements) {
            if (s.kind() == OcStatement::Kind::Hri)
                w.line("AnnotationAssertion(rdfs:label " + w.ref(oid_iri(s.subject(), w.base)) +
                       " " + quoted_literal(s.label()) + "@" + s.lang() + ")");
            else
                w.line("AnnotationAssertion(" + w.ref(w.base + "/meta/" + s.key()) + " " +
                       w.ref(oid_iri(s.subject(), w.base)) + " " + quoted_literal(s.value()) +
                       ")");
        }
    }
    w.line(")");
    return w.out;
}

} // namespace ocs
