#include "ocs/meaning.hpp"

#include <deque>

#include "ocs/parse.hpp"

namespace ocs {

std::set<OidStatement> Ebms::total() const {
    std::set<OidStatement> out = asserted;
    out.insert(inferred.begin(), inferred.end());
    return out;
}

namespace {

bool is_analytic_entailment_impl(const OidStatement& s, std::size_t node_budget) {
    if (s.indicator() != Indicator::Analytic) return false;
    if (s.condition() == Condition::SC) return false;
    switch (is_tautology(translate(s), node_budget)) {
        case Verdict::False: return true;
        case Verdict::True: return false;
        case Verdict::ResourceLimit:
            throw ReasonerLimitError("node budget exhausted while checking whether '" +
                                     serialize_statement(s) + "' is tautological");
    }
    return false;
}

std::set<OidStatement> asserted_ebms_impl(const Collection& c, const Oid& x,
                                          std::size_t node_budget) {
    std::set<OidStatement> out;
    if (const OntologicalComponent* component = c.find(x))
        for (const auto& s : component->oid_statements)
            if (is_analytic_entailment_impl(s, node_budget)) out.insert(s);
    return out;
}

AnalyticTheory analytic_theory_impl(const Collection& c, const Oid& x, std::size_t node_budget) {
    AnalyticTheory theory{x, {}, {}};
    std::set<Oid> visited{x};
    std::deque<Oid> queue{x};
    std::set<Oid> mentioned;
    while (!queue.empty()) {
        const Oid oid = queue.front();
        queue.pop_front();
        for (const auto& s : asserted_ebms_impl(c, oid, node_budget)) {
            if (!theory.statements.insert(s).second) continue;
            for (const auto& m : mentioned_oids(s)) {
                mentioned.insert(m);
                if (visited.insert(m).second) queue.push_back(m);
            }
        }
    }
    for (const auto& oid : mentioned)
        if (!(oid == x) && asserted_ebms_impl(c, oid, node_budget).empty())
            theory.primitives.insert(oid);
    return theory;
}

} // namespace

bool is_analytic_entailment(const OidStatement& s) {
    return is_analytic_entailment_impl(s, kDefaultNodeBudget);
}

std::set<OidStatement> asserted_ebms(const Collection& c, const Oid& x) {
    return asserted_ebms_impl(c, x, kDefaultNodeBudget);
}

AnalyticTheory analytic_theory(const Collection& c, const Oid& x) {
    return analytic_theory_impl(c, x, kDefaultNodeBudget);
}

std::set<ConceptExpr> candidate_characterizations(const AnalyticTheory& t) {
    Tbox tbox(translate_theory(t.statements));
    std::set<ConceptExpr> candidates;
    for (const auto& oid : tbox.signature().classes) {
        ConceptExpr e = ConceptExpr::atom(oid);
        candidates.insert(normalize(ConceptExpr::negation(e)));
        candidates.insert(std::move(e));
    }
    for (const auto& unit : tbox.signature().units) {
        ConceptExpr e = ConceptExpr::nl_atom(unit);
        candidates.insert(normalize(ConceptExpr::negation(e)));
        candidates.insert(std::move(e));
    }
    for (const auto& s : t.statements) candidates.insert(s.characterization());
    return candidates;
}

namespace {

// Entailment that converts a budget exhaustion into the distinct failure the
// caller must surface.
bool entails_or_throw(const Tbox& t, const DlAxiom& a, std::size_t node_budget,
                      const ConceptExpr& candidate) {
    switch (entails(t, a, node_budget)) {
        case Verdict::True: return true;
        case Verdict::False: return false;
        case Verdict::ResourceLimit:
            throw ReasonerLimitError("node budget exhausted on candidate '" +
                                     serialize_concept(candidate) + "'");
    }
    return false;
}

bool tautological_or_throw(const DlAxiom& a, std::size_t node_budget,
                           const ConceptExpr& candidate) {
    switch (is_tautology(a, node_budget)) {
        case Verdict::True: return true;
        case Verdict::False: return false;
        case Verdict::ResourceLimit:
            throw ReasonerLimitError("node budget exhausted on candidate '" +
                                     serialize_concept(candidate) + "'");
    }
    return false;
}

// Candidates eligible for the non-reverse-translatable report: named or
// complex classes, not the generated negation helpers.
bool reportable_candidate(const ConceptExpr& e) {
    switch (e.kind()) {
        case ConceptExpr::Kind::NlAtom:
        case ConceptExpr::Kind::And:
        case ConceptExpr::Kind::Or:
        case ConceptExpr::Kind::Exists:
        case ConceptExpr::Kind::Forall:
            return true;
        default:
            return false;
    }
}

} // namespace

Ebms ebms(const Collection& c, const Oid& x, const MeaningOptions& options) {
    Ebms out;
    out.subject = x;
    out.asserted = asserted_ebms_impl(c, x, options.node_budget);

    const AnalyticTheory theory = analytic_theory_impl(c, x, options.node_budget);
    const Tbox tbox(translate_theory(theory.statements));

    const ConceptExpr subject = ConceptExpr::atom(x);
    switch (is_satisfiable(subject, tbox, options.node_budget)) {
        case Verdict::False:
            out.coherent = false;
            return out;
        case Verdict::ResourceLimit:
            throw ReasonerLimitError("node budget exhausted while checking coherence of " +
                                     x.render());
        case Verdict::True:
            break;
    }

    const std::set<ConceptExpr> candidates = candidate_characterizations(theory);
    std::set<ConceptExpr> nsc_characterizations;
    std::set<OidStatement> derived;
    for (const auto& candidate : candidates) {
        const DlAxiom as_nsc = DlAxiom::equiv(subject, candidate);
        const DlAxiom as_nc = DlAxiom::sub(subject, candidate);
        const DlAxiom* entailed = nullptr;
        if (entails_or_throw(tbox, as_nsc, options.node_budget, candidate))
            entailed = &as_nsc;
        else if (entails_or_throw(tbox, as_nc, options.node_budget, candidate))
            entailed = &as_nc;
        if (!entailed || tautological_or_throw(*entailed, options.node_budget, candidate))
            continue;
        const auto reverse = reverse_translate(*entailed, x);
        const auto* proto = std::get_if<ProtoStatement>(&reverse);
        if (!proto || !(proto->subject == x)) continue;
        // Every statement of the theory is an analytic entailment, so the
        // inference carries the Analytic stamp.
        derived.insert(proto->stamped(Indicator::Analytic));
        if (entailed->kind() == DlAxiom::Kind::Equiv) nsc_characterizations.insert(candidate);
    }

    for (const auto& s : out.asserted)
        if (s.condition() == Condition::NSC) nsc_characterizations.insert(s.characterization());

    // NSC subsumes NC on the same characterization; asserted members are
    // never re-reported as inferences.
    for (const auto& s : derived) {
        if (out.asserted.contains(s)) continue;
        if (s.condition() == Condition::NC && nsc_characterizations.contains(s.characterization()))
            continue;
        out.inferred.insert(s);
    }

    if (options.report_non_reverse_translatable) {
        for (const auto& lhs : candidates) {
            if (!reportable_candidate(lhs)) continue;
            for (const auto& rhs : candidates) {
                if (!reportable_candidate(rhs) || lhs == rhs) continue;
                const DlAxiom a = DlAxiom::sub(lhs, rhs);
                if (!std::holds_alternative<NotReverseTranslatable>(reverse_translate(a, x)))
                    continue;
                if (entails_or_throw(tbox, a, options.node_budget, lhs) &&
                    !tautological_or_throw(a, options.node_budget, lhs))
                    out.non_reverse_translatable.insert(a);
            }
        }
    }
    return out;
}

} // namespace ocs
