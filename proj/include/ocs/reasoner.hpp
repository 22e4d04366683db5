// ocs/reasoner.hpp — satisfiability, entailment, and tautology checking for
// the ALC fragment with general TBoxes.
//
// The decision procedure is a tableau.  TBox axioms are internalized: every
// Sub(A,B) contributes nnf(¬A ⊔ B) to each node's label, Equiv splits into
// two Subs.  Expansion is the standard rule set (⊓ add, ⊔ branch, ∃ create
// successor, ∀ propagate into the successor at creation time), clash on ⊥
// or a complementary literal pair, and termination is guaranteed by subset
// blocking on ancestor labels plus a node budget.
//
// Exhausting the budget is a distinct outcome, never "unsatisfiable": a
// timeout must not masquerade as a logical answer.

#ifndef OCS_REASONER_HPP
#define OCS_REASONER_HPP

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>

#include "ocs/statement.hpp"

namespace ocs {

enum class Verdict : std::uint8_t { True, False, ResourceLimit };

inline constexpr std::size_t kDefaultNodeBudget = 100'000;

struct Signature {
    std::set<Oid> classes;
    std::set<Oid> roles;
    std::set<LexicalUnit> units;
};

// An immutable set of axioms plus the signature derived from them.  Lexical
// units are ordinary class names here, on equal footing with OID atoms.
class Tbox {
public:
    Tbox() = default;
    explicit Tbox(std::set<DlAxiom> axioms);

    [[nodiscard]] const std::set<DlAxiom>& axioms() const noexcept { return axioms_; }
    [[nodiscard]] const Signature& signature() const noexcept { return signature_; }

private:
    std::set<DlAxiom> axioms_;
    Signature signature_;
};

// True iff some model of `t` interprets `c` as non-empty.
[[nodiscard]] Verdict is_satisfiable(const ConceptExpr& c, const Tbox& t,
                                     std::size_t node_budget = kDefaultNodeBudget);

// Sub(A,B) is entailed iff A ⊓ ¬B is unsatisfiable w.r.t. `t`; Equiv needs
// both directions.
[[nodiscard]] Verdict entails(const Tbox& t, const DlAxiom& a,
                              std::size_t node_budget = kDefaultNodeBudget);

// Entailment from the empty theory: true regardless of the model.
[[nodiscard]] Verdict is_tautology(const DlAxiom& a,
                                   std::size_t node_budget = kDefaultNodeBudget);

// ── Brute-force oracle ──────────────────────────────────────────────────────
// Role-free entailment by exhaustive truth-table enumeration: every class
// atom (OID or lexical unit) becomes a propositional variable and all 2^n
// valuations over the joint signature are checked.  Used to cross-validate
// the tableau; intentionally has no code in common with it.

inline constexpr std::size_t kOracleMaxVariables = 20;

// Throws std::invalid_argument when an input contains a role quantifier or
// the joint signature exceeds kOracleMaxVariables.
[[nodiscard]] bool oracle_entails(const Tbox& t, const DlAxiom& a);

// Raised where an operation cannot report Verdict::ResourceLimit in-band.
class ReasonerLimitError : public std::runtime_error {
public:
    explicit ReasonerLimitError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ocs

#endif // OCS_REASONER_HPP
