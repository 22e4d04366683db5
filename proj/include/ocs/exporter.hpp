// ocs/exporter.hpp — OWL functional-style rendering of a collection.
//
// OIDs become IRIs under the base namespace; lexical-unit class names become
// IRIs under <base>/nl/ by percent-encoding the text and appending the raw
// @lang suffix, which is reversible and collision-free per (text, lang).
// HRIs become rdfs:label annotations, Meta entries become annotations under
// <base>/meta/, and axioms translated from synthetic statements carry an
// axiom annotation so the analytic/synthetic distinction survives export.

#ifndef OCS_EXPORTER_HPP
#define OCS_EXPORTER_HPP

#include <string>

#include "ocs/statement.hpp"

namespace ocs {

struct ExportOptions {
    // Used for every Oid without its own iri_base, and for the /nl/ and
    // /meta/ namespaces.
    std::string base_iri = "http://example.org/ocs";
};

[[nodiscard]] std::string export_owl_functional(const Collection& c,
                                                const ExportOptions& options = {});

// IRI building blocks, exposed for tests.
[[nodiscard]] std::string percent_encode(const std::string& text);
[[nodiscard]] std::string oid_iri(const Oid& oid, const std::string& base_iri);
[[nodiscard]] std::string unit_iri(const LexicalUnit& unit, const std::string& base_iri);

} // namespace ocs

#endif // OCS_EXPORTER_HPP
