// ocs/statement.hpp — OID statements, OC statements, components, collections,
// and the DL axiom type they translate into.

#ifndef OCS_STATEMENT_HPP
#define OCS_STATEMENT_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ocs/model.hpp"

namespace ocs {

enum class Indicator : std::uint8_t { Analytic, Synthetic };
enum class Condition : std::uint8_t { NC, SC, NSC };

[[nodiscard]] const char* to_string(Indicator i) noexcept;
[[nodiscard]] const char* to_string(Condition c) noexcept; // "has_NC" etc.

// ── OidStatement ────────────────────────────────────────────────────────────
// The assertive quadruplet: subject OID, analytic/synthetic indicator,
// condition type, characterization.  The characterization is stored in
// canonical form, so statement equality is canonical equality by
// construction.

class OidStatement {
public:
    OidStatement(Oid subject, Indicator indicator, Condition condition,
                 const ConceptExpr& characterization);

    [[nodiscard]] const Oid& subject() const noexcept { return subject_; }
    [[nodiscard]] Indicator indicator() const noexcept { return indicator_; }
    [[nodiscard]] Condition condition() const noexcept { return condition_; }
    [[nodiscard]] const ConceptExpr& characterization() const noexcept { return characterization_; }

private:
    Oid subject_;
    Indicator indicator_;
    Condition condition_;
    ConceptExpr characterization_; // normalized

    friend std::strong_ordering compare(const OidStatement& a, const OidStatement& b) noexcept;
};

// (subject, condition NC<SC<NSC, indicator Analytic<Synthetic, characterization)
[[nodiscard]] std::strong_ordering compare(const OidStatement& a, const OidStatement& b) noexcept;

inline std::strong_ordering operator<=>(const OidStatement& a, const OidStatement& b) noexcept {
    return compare(a, b);
}
inline bool operator==(const OidStatement& a, const OidStatement& b) noexcept {
    return compare(a, b) == 0;
}

// Every Oid occurring in the characterization (class atoms and quantifier
// roles).  The subject is not included unless it occurs there too.
[[nodiscard]] std::set<Oid> mentioned_oids(const OidStatement& s);

// ── OcStatement ─────────────────────────────────────────────────────────────
// Non-assertive statement: a human-readable identifier or a metadata entry.
// Never participates in reasoning.

class OcStatement {
public:
    enum class Kind : std::uint8_t { Hri, Meta };

    static OcStatement hri(Oid subject, std::string label, std::string lang);
    // `key` must match [A-Za-z][A-Za-z0-9_]*; `value` must be non-empty, free
    // of '|', '"', '\', '#', and newlines, and have no surrounding whitespace
    // (the pipe syntax stores it raw).
    static OcStatement meta(Oid subject, std::string key, std::string value);

    [[nodiscard]] Kind kind() const noexcept { return kind_; }
    [[nodiscard]] const Oid& subject() const noexcept { return subject_; }
    [[nodiscard]] const std::string& label() const; // Hri
    [[nodiscard]] const std::string& lang() const;  // Hri
    [[nodiscard]] const std::string& key() const;   // Meta
    [[nodiscard]] const std::string& value() const; // Meta

private:
    OcStatement(Kind kind, Oid subject, std::string a, std::string b);

    Kind kind_;
    Oid subject_;
    std::string first_;  // label / key
    std::string second_; // lang / value

    friend std::strong_ordering compare(const OcStatement& a, const OcStatement& b) noexcept;
};

[[nodiscard]] std::strong_ordering compare(const OcStatement& a, const OcStatement& b) noexcept;

inline std::strong_ordering operator<=>(const OcStatement& a, const OcStatement& b) noexcept {
    return compare(a, b);
}
inline bool operator==(const OcStatement& a, const OcStatement& b) noexcept {
    return compare(a, b) == 0;
}

// ── DlAxiom ─────────────────────────────────────────────────────────────────
// Subsumption or equivalence between class expressions.  Sides are stored
// normalized; Equiv sides are additionally sorted, since Equiv(a,b) and
// Equiv(b,a) are the same axiom.

class DlAxiom {
public:
    enum class Kind : std::uint8_t { Sub, Equiv };

    static DlAxiom sub(const ConceptExpr& lhs, const ConceptExpr& rhs);
    static DlAxiom equiv(const ConceptExpr& lhs, const ConceptExpr& rhs);

    [[nodiscard]] Kind kind() const noexcept { return kind_; }
    [[nodiscard]] const ConceptExpr& lhs() const noexcept { return lhs_; }
    [[nodiscard]] const ConceptExpr& rhs() const noexcept { return rhs_; }

private:
    DlAxiom(Kind kind, ConceptExpr lhs, ConceptExpr rhs)
        : kind_(kind), lhs_(std::move(lhs)), rhs_(std::move(rhs)) {}

    Kind kind_;
    ConceptExpr lhs_;
    ConceptExpr rhs_;

    friend std::strong_ordering compare(const DlAxiom& a, const DlAxiom& b) noexcept;
};

[[nodiscard]] std::strong_ordering compare(const DlAxiom& a, const DlAxiom& b) noexcept;

inline std::strong_ordering operator<=>(const DlAxiom& a, const DlAxiom& b) noexcept {
    return compare(a, b);
}
inline bool operator==(const DlAxiom& a, const DlAxiom& b) noexcept { return compare(a, b) == 0; }

// ── OntologicalComponent ────────────────────────────────────────────────────
// One OID together with the OID statements asserted on it and its OC
// statements.  Invariant: every member OID statement's subject equals `oid`.

struct OntologicalComponent {
    Oid oid;
    std::set<OidStatement> oid_statements;
    std::set<OcStatement> oc_statements;
    int first_line = 0; // source line of the first statement, 0 if built in memory

    // False (and no insertion) when the subject differs from `oid`; duplicate
    // inserts return false as well.
    bool add(const OidStatement& s);
    bool add(const OcStatement& s);
};

// ── Collection ──────────────────────────────────────────────────────────────
// A set of components keyed by OID plus a version label.  Analyses treat a
// loaded collection as immutable.

class Collection {
public:
    Collection() = default;

    [[nodiscard]] const std::map<Oid, OntologicalComponent>& components() const noexcept {
        return components_;
    }
    [[nodiscard]] const std::string& version_label() const noexcept { return version_label_; }
    void set_version_label(std::string label) { version_label_ = std::move(label); }

    // Null when no component carries this OID.
    [[nodiscard]] const OntologicalComponent* find(const Oid& oid) const;

    // Materializes the component on first use.
    OntologicalComponent& component(const Oid& oid, int first_line = 0);

    bool add(const OidStatement& s, int line = 0);
    bool add(const OcStatement& s, int line = 0);
    void add(OntologicalComponent component); // merges statements on OID collision

    // Every OID mentioned in any characterization, across all components.
    [[nodiscard]] std::set<Oid> mentioned_oids() const;

    // Mentioned OIDs that never appear as a component: the collection's
    // primitive references.
    [[nodiscard]] std::set<Oid> primitive_references() const;

    // True when the OID appears as a component or inside any characterization.
    [[nodiscard]] bool knows(const Oid& oid) const;

private:
    std::map<Oid, OntologicalComponent> components_;
    std::string version_label_;
};

} // namespace ocs

#endif // OCS_STATEMENT_HPP
