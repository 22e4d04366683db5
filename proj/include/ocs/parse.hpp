// ocs/parse.hpp — the pipe-separated statement syntax and the .ocs collection
// file format.
//
// Line grammar:
//   OID | Analytic|Synthetic | has_NC|has_SC|has_NSC | <concept>
//   OID | HRI | "label"@lang
//   OID | Meta | key | value
//
// Concept grammar (ASCII keywords, Unicode aliases in parentheses):
//   expr  := or
//   or    := and ( ("or"|⊔) and )*
//   and   := unary ( ("and"|⊓) unary )*
//   unary := ("not"|¬) unary | quant | atom | "(" expr ")"
//   quant := ("some"|∃) OID "." unary | ("only"|∀) OID "." unary
//   atom  := OID | STRING "@" LANGTAG | ("top"|⊤) | ("bottom"|⊥)
//
// Collection files are line-oriented UTF-8 (LF or CRLF): `#` starts a
// comment, blank lines are ignored, and the pragma `@version <label>` sets
// the collection's version label.

#ifndef OCS_PARSE_HPP
#define OCS_PARSE_HPP

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ocs/statement.hpp"

namespace ocs {

enum class Severity : std::uint8_t { Warning, Error };

// One parser finding.  Positions are 1-based; columns count Unicode code
// points.  `code` is a stable short identifier suitable for filtering.
struct ParseDiagnostic {
    int line = 1;
    int column = 1;
    Severity severity = Severity::Error;
    std::string code;
    std::string message;
};

struct ParseOptions {
    // Rejects `bottom`/⊥ and `only`/∀ in statement characterizations.
    bool strict_profile = false;
};

using StatementResult = std::variant<OidStatement, OcStatement, ParseDiagnostic>;
using ConceptResult = std::variant<ConceptExpr, ParseDiagnostic>;

// Parses one logical line.  `line_no` is used for diagnostic positions.
[[nodiscard]] StatementResult parse_statement(std::string_view line, int line_no = 1,
                                              const ParseOptions& options = {});

// Parses a bare concept expression; the result is normalized.
[[nodiscard]] ConceptResult parse_concept(std::string_view text, int line_no = 1,
                                          const ParseOptions& options = {});

struct CollectionParse {
    Collection collection;
    std::vector<ParseDiagnostic> diagnostics;

    [[nodiscard]] bool ok() const {
        for (const auto& d : diagnostics)
            if (d.severity == Severity::Error) return false;
        return true;
    }
};

// Parses a whole .ocs file.  Errors are aggregated per line and a partial
// collection is always returned.  Duplicate statements collapse with a
// warning; an HRI label reused across distinct OIDs warns as well.
[[nodiscard]] CollectionParse parse_collection(std::string_view text,
                                               const ParseOptions& options = {});

// ── Serialization ───────────────────────────────────────────────────────────
// Canonical ASCII rendering.  parse(serialize(x)) == x under canonical
// equality for every well-formed statement and expression.

[[nodiscard]] std::string serialize_concept(const ConceptExpr& e);
[[nodiscard]] std::string serialize_statement(const OidStatement& s);
[[nodiscard]] std::string serialize_statement(const OcStatement& s);

// `lhs sub rhs` / `lhs equiv rhs`, operands in concept syntax.
[[nodiscard]] std::string serialize_axiom(const DlAxiom& a);

// Serializes all statements of a collection, components in OID order,
// preceded by a `@version` pragma when the label is non-empty.
[[nodiscard]] std::string serialize_collection(const Collection& c);

} // namespace ocs

#endif // OCS_PARSE_HPP
