#include "ocs/dl_bridge.hpp"

#include <stdexcept>

namespace ocs {

DlAxiom translate(const OidStatement& s) {
    const ConceptExpr subject = ConceptExpr::atom(s.subject());
    switch (s.condition()) {
        case Condition::NSC: return DlAxiom::equiv(subject, s.characterization());
        case Condition::NC: return DlAxiom::sub(subject, s.characterization());
        case Condition::SC: return DlAxiom::sub(s.characterization(), subject);
    }
    return DlAxiom::sub(subject, s.characterization()); // unreachable
}

std::set<DlAxiom> translate_theory(const std::set<OidStatement>& statements) {
    std::set<DlAxiom> axioms;
    for (const auto& s : statements) axioms.insert(translate(s));
    return axioms;
}

namespace {

bool is_oid_atom(const ConceptExpr& e) { return e.kind() == ConceptExpr::Kind::Atom; }

} // namespace

ReverseResult reverse_translate(const DlAxiom& a, const Oid& direction_subject) {
    const bool lhs_atom = is_oid_atom(a.lhs());
    const bool rhs_atom = is_oid_atom(a.rhs());
    if (!lhs_atom && !rhs_atom) return NotReverseTranslatable{a};

    if (a.kind() == DlAxiom::Kind::Equiv) {
        // Prefer the side equal to the direction subject when both qualify.
        const bool use_rhs =
            rhs_atom && (!lhs_atom || (a.rhs().atom_oid() == direction_subject &&
                                       !(a.lhs().atom_oid() == direction_subject)));
        const ConceptExpr& subject_side = use_rhs ? a.rhs() : a.lhs();
        const ConceptExpr& other_side = use_rhs ? a.lhs() : a.rhs();
        return ProtoStatement{subject_side.atom_oid(), Condition::NSC, other_side};
    }

    // Sub: an atom on the left reads as a necessary condition on it, an atom
    // on the right as a sufficient one.  With atoms on both sides the
    // direction subject picks the reading; left/NC is the default.
    if (lhs_atom && rhs_atom) {
        if (a.rhs().atom_oid() == direction_subject && !(a.lhs().atom_oid() == direction_subject))
            return ProtoStatement{a.rhs().atom_oid(), Condition::SC, a.lhs()};
        return ProtoStatement{a.lhs().atom_oid(), Condition::NC, a.rhs()};
    }
    if (lhs_atom) return ProtoStatement{a.lhs().atom_oid(), Condition::NC, a.rhs()};
    return ProtoStatement{a.rhs().atom_oid(), Condition::SC, a.lhs()};
}

bool is_general_class_axiom(const DlAxiom& a) {
    return !is_oid_atom(a.lhs()) && !is_oid_atom(a.rhs());
}

Reified reify_general_axiom(const DlAxiom& a, const Oid& fresh, GciSide side) {
    if (!is_general_class_axiom(a))
        throw std::invalid_argument(
            "axiom has an OID atom side; reverse translation applies instead of reification");

    const ConceptExpr& chosen = side == GciSide::Lhs ? a.lhs() : a.rhs();
    const ConceptExpr& other = side == GciSide::Lhs ? a.rhs() : a.lhs();

    Reified out;
    out.statements.emplace(fresh, Indicator::Analytic, Condition::NSC, chosen);
    if (a.kind() == DlAxiom::Kind::Equiv) {
        out.statements.emplace(fresh, Indicator::Analytic, Condition::NC, other);
        out.statements.emplace(fresh, Indicator::Analytic, Condition::SC, other);
    } else {
        // fresh ≡ lhs makes lhs ⊑ rhs a necessary condition on fresh;
        // fresh ≡ rhs makes it a sufficient one.
        out.statements.emplace(fresh, Indicator::Analytic,
                               side == GciSide::Lhs ? Condition::NC : Condition::SC, other);
    }
    out.component.oid = fresh;
    out.component.oid_statements = out.statements;
    return out;
}

Reified reify_general_axiom(const Collection& collection, const DlAxiom& a, const Oid& fresh,
                            GciSide side) {
    if (collection.knows(fresh))
        throw std::invalid_argument("fresh OID " + fresh.render() + " is already in use");
    return reify_general_axiom(a, fresh, side);
}

} // namespace ocs
