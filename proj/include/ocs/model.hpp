// ocs/model.hpp — identifiers, lexical units, and class expressions.
//
// Everything here is an immutable value type.  Expressions are shared
// persistent trees; copying is O(1) and structural comparison is total, so
// the same ordering drives set membership, canonical forms, and byte-stable
// output everywhere downstream.

#ifndef OCS_MODEL_HPP
#define OCS_MODEL_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ocs {

// ── Oid ─────────────────────────────────────────────────────────────────────
// An ontological identifier.  Rendered form is `prefix "_" local`, e.g.
// "OID_02" or "IAO_0000115".  `iri_base` is presentation-only (used when
// exporting) and never takes part in comparison: two Oids are the same
// identifier iff prefix and local match exactly.

struct Oid {
    std::string prefix;   // [A-Za-z][A-Za-z0-9]*
    std::string local;    // [0-9]+
    std::string iri_base; // optional absolute IRI prefix for export

    [[nodiscard]] std::string render() const { return prefix + "_" + local; }

    // Parses the textual form; returns nullopt when `text` does not match
    // [A-Za-z][A-Za-z0-9]*_[0-9]+ exactly.
    static std::optional<Oid> parse(std::string_view text);
};

// Orders by prefix, then by local shortlex (length first), which sorts
// numerals numerically when they carry no leading zeros.
[[nodiscard]] std::strong_ordering compare(const Oid& a, const Oid& b) noexcept;

inline std::strong_ordering operator<=>(const Oid& a, const Oid& b) noexcept { return compare(a, b); }
inline bool operator==(const Oid& a, const Oid& b) noexcept { return compare(a, b) == 0; }

// ── LexicalUnit ─────────────────────────────────────────────────────────────
// A natural-language string plus language tag, treated as one atomic
// signature symbol.  Never decomposed; equality is exact on both fields, so
// "coin"@en and "coin"@fr are distinct symbols.

struct LexicalUnit {
    std::string text; // non-empty
    std::string lang; // BCP-47-style tag, e.g. "en" or "en-GB"
};

// (lang, text) order.
[[nodiscard]] std::strong_ordering compare(const LexicalUnit& a, const LexicalUnit& b) noexcept;

inline std::strong_ordering operator<=>(const LexicalUnit& a, const LexicalUnit& b) noexcept {
    return compare(a, b);
}
inline bool operator==(const LexicalUnit& a, const LexicalUnit& b) noexcept {
    return compare(a, b) == 0;
}

// ── ConceptExpr ─────────────────────────────────────────────────────────────
// Class expression over Oid atoms and lexical-unit atoms with complement,
// intersection, union, and the two role quantifiers.
//
// The canonical form produced by normalize() is negation-normal form with
// flattened, duplicate-free, sorted And/Or operand lists (singletons
// collapse to their operand).  Two expressions are "syntactically equal"
// iff their canonical forms compare equal.  Normalization is purely
// syntactic: it never evaluates tautologies or contradictions.

class ConceptExpr {
public:
    // Declaration order is the canonical sort order.
    enum class Kind : std::uint8_t { Top, Bottom, Atom, NlAtom, Not, Exists, Forall, And, Or };

    // Defaults to ⊤ so the type is regular; prefer the named factories.
    ConceptExpr();

    static ConceptExpr top();
    static ConceptExpr bottom();
    static ConceptExpr atom(Oid oid);
    static ConceptExpr nl_atom(LexicalUnit unit);
    static ConceptExpr negation(ConceptExpr inner);
    static ConceptExpr conjunction(std::vector<ConceptExpr> operands); // non-empty
    static ConceptExpr disjunction(std::vector<ConceptExpr> operands); // non-empty
    static ConceptExpr exists(Oid role, ConceptExpr filler);
    static ConceptExpr forall(Oid role, ConceptExpr filler);

    [[nodiscard]] Kind kind() const noexcept;

    [[nodiscard]] const Oid& atom_oid() const;            // Atom only
    [[nodiscard]] const LexicalUnit& lexical_unit() const; // NlAtom only
    [[nodiscard]] const Oid& role() const;                 // Exists/Forall only
    [[nodiscard]] const ConceptExpr& child() const;        // Not only
    [[nodiscard]] const ConceptExpr& filler() const;       // Exists/Forall only
    [[nodiscard]] const std::vector<ConceptExpr>& operands() const; // And/Or only

    [[nodiscard]] bool is_atomic() const noexcept; // Atom or NlAtom

private:
    struct Node;
    explicit ConceptExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    static const std::shared_ptr<const Node>& shared_top();

    std::shared_ptr<const Node> node_;

    friend std::strong_ordering compare(const ConceptExpr& a, const ConceptExpr& b) noexcept;
};

// Total structural order: Top < Bottom < Atom (by Oid) < NlAtom (by lang,
// text) < Not < Exists < Forall < And < Or, recursing into children.
[[nodiscard]] std::strong_ordering compare(const ConceptExpr& a, const ConceptExpr& b) noexcept;

inline std::strong_ordering operator<=>(const ConceptExpr& a, const ConceptExpr& b) noexcept {
    return compare(a, b);
}
inline bool operator==(const ConceptExpr& a, const ConceptExpr& b) noexcept {
    return compare(a, b) == 0;
}

// Canonical form (see class comment).  Idempotent and semantics-preserving.
[[nodiscard]] ConceptExpr normalize(const ConceptExpr& e);

// Every Oid occurring in the expression, as class atom or quantifier role.
[[nodiscard]] std::set<Oid> mentioned_oids(const ConceptExpr& e);

// Every lexical unit occurring in the expression.
[[nodiscard]] std::set<LexicalUnit> mentioned_units(const ConceptExpr& e);

} // namespace ocs

#endif // OCS_MODEL_HPP
