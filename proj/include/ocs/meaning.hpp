// ocs/meaning.hpp — entailment-based meaning specification.
//
// The pipeline for one OID x over a collection:
//
//   asserted EBMS(x)   = x's analytic, non-tautological NC/NSC statements
//   analytic theory(x) = least fixed point unioning in the asserted EBMS of
//                        every OID recursively mentioned in characterizations
//   EBMS(x)            = asserted EBMS(x) plus the inferred analytic
//                        entailments licensed by the translated theory
//
// The theory's deductive closure is infinite; inference is therefore run
// against a finite candidate set (signature atoms, their negations, and the
// asserted characterizations), which reproduces every inference the source
// formalism derives while keeping the query count linear in signature size.
// This is the one deliberate approximation in the module.

#ifndef OCS_MEANING_HPP
#define OCS_MEANING_HPP

#include <set>

#include "ocs/dl_bridge.hpp"
#include "ocs/reasoner.hpp"
#include "ocs/statement.hpp"

namespace ocs {

struct MeaningOptions {
    std::size_t node_budget = kDefaultNodeBudget;
    // Also derive entailed subsumptions between non-OID candidates; they
    // cannot become OID statements and are reported as axioms.
    bool report_non_reverse_translatable = false;
};

// The analytic theory of one component: its asserted EBMS closed under the
// recursion rule, plus the mentioned OIDs that carry no asserted analytic
// entailments (the primitive terms the meaning bottoms out on).
struct AnalyticTheory {
    Oid root;
    std::set<OidStatement> statements;
    std::set<Oid> primitives;
};

// The entailment-based meaning specification of one component.  Invariants:
// every member is Analytic with condition NC or NSC, no member is a
// tautology, and asserted ∩ inferred = ∅.  When `coherent` is false the
// subject is unsatisfiable in its own analytic theory; only the asserted
// set is reported then, since an inconsistent theory licenses everything.
struct Ebms {
    Oid subject;
    std::set<OidStatement> asserted;
    std::set<OidStatement> inferred;
    std::set<DlAxiom> non_reverse_translatable;
    bool coherent = true;

    [[nodiscard]] std::set<OidStatement> total() const;
};

// Analytic, condition NC or NSC, and not a tautology under translation.
[[nodiscard]] bool is_analytic_entailment(const OidStatement& s);

// The component's statements filtered by is_analytic_entailment; empty for
// primitive or unknown OIDs.
[[nodiscard]] std::set<OidStatement> asserted_ebms(const Collection& c, const Oid& x);

// Least fixed point of the recursion rule; cycle-safe (a visited set keeps
// circular definitions from diverging).
[[nodiscard]] AnalyticTheory analytic_theory(const Collection& c, const Oid& x);

// The finite candidate set: class atoms of the theory's signature, its
// lexical units, the negations of both, and every asserted characterization.
// Role OIDs contribute to the recursion but yield no class candidates.
[[nodiscard]] std::set<ConceptExpr> candidate_characterizations(const AnalyticTheory& t);

// Throws ReasonerLimitError naming the candidate when the node budget is
// exhausted mid-closure.
[[nodiscard]] Ebms ebms(const Collection& c, const Oid& x, const MeaningOptions& options = {});

} // namespace ocs

#endif // OCS_MEANING_HPP
