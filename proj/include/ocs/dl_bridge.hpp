// ocs/dl_bridge.hpp — translation between OID statements and DL axioms.
//
// Condition types map onto axioms as:
//   has_NSC  →  subject ≡ characterization
//   has_NC   →  subject ⊑ characterization
//   has_SC   →  characterization ⊑ subject
// The analytic/synthetic indicator is irrelevant to translation; it only
// matters when deciding which statements feed a reasoning task.

#ifndef OCS_DL_BRIDGE_HPP
#define OCS_DL_BRIDGE_HPP

#include <set>
#include <variant>

#include "ocs/statement.hpp"

namespace ocs {

[[nodiscard]] DlAxiom translate(const OidStatement& s);

// Element-wise translation; duplicates collapse under canonical equality.
[[nodiscard]] std::set<DlAxiom> translate_theory(const std::set<OidStatement>& statements);

// A reverse-translated statement whose analytic/synthetic indicator is still
// open: whether an inference is analytic depends on which statements fed the
// reasoner, not on the axiom's shape, so the caller stamps it.
struct ProtoStatement {
    Oid subject;
    Condition condition;
    ConceptExpr characterization;

    [[nodiscard]] OidStatement stamped(Indicator indicator) const {
        return OidStatement(subject, indicator, condition, characterization);
    }
};

// An axiom with no OID atom on either side cannot become an OID statement;
// the axiom is retained so reports can surface it.
struct NotReverseTranslatable {
    DlAxiom axiom;
};

using ReverseResult = std::variant<ProtoStatement, NotReverseTranslatable>;

// `direction_subject` disambiguates axioms where both sides are OID atoms
// (either could be the subject); when it matches neither side, the left
// atom wins.
[[nodiscard]] ReverseResult reverse_translate(const DlAxiom& a, const Oid& direction_subject);

// ── General class axiom reification ─────────────────────────────────────────
// A general class axiom (no OID atom on either side) can still be captured
// by dubbing a fresh OID for one side and asserting the original axiom
// against the other.

enum class GciSide : std::uint8_t { Lhs, Rhs };

[[nodiscard]] bool is_general_class_axiom(const DlAxiom& a);

struct Reified {
    OntologicalComponent component; // carries exactly `statements`
    std::set<OidStatement> statements;
};

// Emits, for side Lhs of C ⊑ D: {fresh has_NSC C, fresh has_NC D}; for side
// Rhs: {fresh has_NSC D, fresh has_SC C}.  For an equivalence both an NC and
// an SC statement are emitted against the other side.  Statements are
// stamped Analytic.  Throws std::invalid_argument when the axiom is not a
// general class axiom.
[[nodiscard]] Reified reify_general_axiom(const DlAxiom& a, const Oid& fresh, GciSide side);

// Same, but checks that `fresh` is neither a component of nor mentioned in
// `collection` (throws std::invalid_argument when it is in use).
[[nodiscard]] Reified reify_general_axiom(const Collection& collection, const DlAxiom& a,
                                          const Oid& fresh, GciSide side);

} // namespace ocs

#endif // OCS_DL_BRIDGE_HPP
