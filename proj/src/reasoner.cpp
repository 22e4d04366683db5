#include "ocs/reasoner.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace ocs {

namespace {

void collect_signature(const ConceptExpr& e, Signature& sig) {
    using Kind = ConceptExpr::Kind;
    switch (e.kind()) {
        case Kind::Top:
        case Kind::Bottom:
            return;
        case Kind::Atom:
            sig.classes.insert(e.atom_oid());
            return;
        case Kind::NlAtom:
            sig.units.insert(e.lexical_unit());
            return;
        case Kind::Not:
            collect_signature(e.child(), sig);
            return;
        case Kind::Exists:
        case Kind::Forall:
            sig.roles.insert(e.role());
            collect_signature(e.filler(), sig);
            return;
        case Kind::And:
        case Kind::Or:
            for (const auto& op : e.operands()) collect_signature(op, sig);
            return;
    }
}

} // namespace

Tbox::Tbox(std::set<DlAxiom> axioms) : axioms_(std::move(axioms)) {
    for (const auto& a : axioms_) {
        collect_signature(a.lhs(), signature_);
        collect_signature(a.rhs(), signature_);
    }
}

// ── Tableau ─────────────────────────────────────────────────────────────────

namespace {

using Label = std::set<ConceptExpr>;

struct Tableau {
    std::vector<ConceptExpr> universal; // internalized TBox constraints, NNF
    std::size_t budget;
    std::size_t nodes = 0;

    // The labels of the current node's ancestors, root first.
    std::vector<const Label*> ancestors;

    Verdict node_satisfiable(Label label);
    Verdict node_satisfiable_inner(Label label);
    Verdict complete(Label& label);
};

// A clash is ⊥ in the label or a complementary pair {e, ¬e}.  Labels are in
// NNF, so scanning the negations covers every pair.
bool has_clash(const Label& label) {
    for (const auto& e : label) {
        if (e.kind() == ConceptExpr::Kind::Bottom) return true;
        if (e.kind() == ConceptExpr::Kind::Not && label.contains(e.child())) return true;
    }
    return false;
}

// Propositional saturation plus successor expansion for one node.  And/Or
// are processed in canonical order (std::set iteration), so branch traces
// are reproducible run to run.
Verdict Tableau::complete(Label& label) {
    for (bool changed = true; changed;) {
        changed = false;
        if (has_clash(label)) return Verdict::False;

        for (const auto& e : label) {
            if (e.kind() != ConceptExpr::Kind::And) continue;
            bool added = false;
            for (const auto& op : e.operands()) added |= label.insert(op).second;
            if (added) {
                changed = true;
                break;
            }
        }
        if (changed) continue;

        for (const auto& e : label) {
            if (e.kind() != ConceptExpr::Kind::Or) continue;
            const auto& ops = e.operands();
            const bool satisfied =
                std::any_of(ops.begin(), ops.end(),
                            [&](const ConceptExpr& op) { return label.contains(op); });
            if (satisfied) continue;
            bool limited = false;
            for (const auto& op : ops) {
                Label branch = label;
                branch.insert(op);
                switch (node_satisfiable_inner(branch)) {
                    case Verdict::True: return Verdict::True;
                    case Verdict::ResourceLimit: limited = true; break;
                    case Verdict::False: break;
                }
            }
            return limited ? Verdict::ResourceLimit : Verdict::False;
        }
        break;
    }

    // Fully saturated and clash-free: expand the existential constraints.
    for (const auto& e : label) {
        if (e.kind() != ConceptExpr::Kind::Exists) continue;
        Label successor(universal.begin(), universal.end());
        successor.insert(e.filler());
        for (const auto& f : label)
            if (f.kind() == ConceptExpr::Kind::Forall && f.role() == e.role())
                successor.insert(f.filler());

        // Subset blocking: a successor whose constraints are already covered
        // by an ancestor (or this node) can loop back to it in the model.
        const auto blocked_by = [&](const Label& anc) {
            return std::includes(anc.begin(), anc.end(), successor.begin(), successor.end());
        };
        if (blocked_by(label) || std::any_of(ancestors.begin(), ancestors.end(),
                                             [&](const Label* anc) { return blocked_by(*anc); }))
            continue;

        ancestors.push_back(&label);
        const Verdict v = node_satisfiable(std::move(successor));
        ancestors.pop_back();
        if (v != Verdict::True) return v;
    }
    return Verdict::True;
}

// Continuation of `complete` for ⊔ branches: same node, no new budget charge.
Verdict Tableau::node_satisfiable_inner(Label label) { return complete(label); }

Verdict Tableau::node_satisfiable(Label label) {
    if (++nodes > budget) return Verdict::ResourceLimit;
    return complete(label);
}

std::vector<ConceptExpr> internalize(const Tbox& t) {
    std::vector<ConceptExpr> universal;
    for (const auto& a : t.axioms()) {
        const auto add = [&](const ConceptExpr& lhs, const ConceptExpr& rhs) {
            universal.push_back(
                normalize(ConceptExpr::disjunction({ConceptExpr::negation(lhs), rhs})));
        };
        add(a.lhs(), a.rhs());
        if (a.kind() == DlAxiom::Kind::Equiv) add(a.rhs(), a.lhs());
    }
    return universal;
}

} // namespace

Verdict is_satisfiable(const ConceptExpr& c, const Tbox& t, std::size_t node_budget) {
    Tableau tableau{internalize(t), node_budget, 0, {}};
    Label root(tableau.universal.begin(), tableau.universal.end());
    root.insert(normalize(c));
    return tableau.node_satisfiable(std::move(root));
}

Verdict entails(const Tbox& t, const DlAxiom& a, std::size_t node_budget) {
    const auto direction = [&](const ConceptExpr& lhs, const ConceptExpr& rhs) {
        const ConceptExpr counterexample =
            ConceptExpr::conjunction({lhs, ConceptExpr::negation(rhs)});
        switch (is_satisfiable(counterexample, t, node_budget)) {
            case Verdict::True: return Verdict::False;
            case Verdict::False: return Verdict::True;
            case Verdict::ResourceLimit: return Verdict::ResourceLimit;
        }
        return Verdict::ResourceLimit; // unreachable
    };
    const Verdict forward = direction(a.lhs(), a.rhs());
    if (a.kind() == DlAxiom::Kind::Sub || forward == Verdict::False) return forward;
    const Verdict backward = direction(a.rhs(), a.lhs());
    if (backward == Verdict::False) return Verdict::False;
    if (forward == Verdict::ResourceLimit || backward == Verdict::ResourceLimit)
        return Verdict::ResourceLimit;
    return Verdict::True;
}

Verdict is_tautology(const DlAxiom& a, std::size_t node_budget) {
    return entails(Tbox{}, a, node_budget);
}

// ── Oracle ──────────────────────────────────────────────────────────────────

namespace {

// Propositional variable numbering over the joint role-free signature.
struct VariableIndex {
    std::map<Oid, unsigned> oids;
    std::map<LexicalUnit, unsigned> units;

    void index(const ConceptExpr& e) {
        using Kind = ConceptExpr::Kind;
        switch (e.kind()) {
            case Kind::Top:
            case Kind::Bottom:
                return;
            case Kind::Atom:
                oids.emplace(e.atom_oid(), static_cast<unsigned>(size_at_emplace()));
                return;
            case Kind::NlAtom:
                units.emplace(e.lexical_unit(), static_cast<unsigned>(size_at_emplace()));
                return;
            case Kind::Not:
                index(e.child());
                return;
            case Kind::Exists:
            case Kind::Forall:
                throw std::invalid_argument("oracle_entails: input contains a role quantifier");
            case Kind::And:
            case Kind::Or:
                for (const auto& op : e.operands()) index(op);
                return;
        }
    }

    [[nodiscard]] std::size_t size() const { return oids.size() + units.size(); }

private:
    [[nodiscard]] std::size_t size_at_emplace() const { return oids.size() + units.size(); }
};

bool eval(const ConceptExpr& e, const VariableIndex& vars, unsigned long mask) {
    using Kind = ConceptExpr::Kind;
    switch (e.kind()) {
        case Kind::Top: return true;
        case Kind::Bottom: return false;
        case Kind::Atom: return (mask >> vars.oids.at(e.atom_oid())) & 1u;
        case Kind::NlAtom: return (mask >> vars.units.at(e.lexical_unit())) & 1u;
        case Kind::Not: return !eval(e.child(), vars, mask);
        case Kind::And:
            for (const auto& op : e.operands())
                if (!eval(op, vars, mask)) return false;
            return true;
        case Kind::Or:
            for (const auto& op : e.operands())
                if (eval(op, vars, mask)) return true;
            return false;
        case Kind::Exists:
        case Kind::Forall:
            throw std::invalid_argument("oracle_entails: input contains a role quantifier");
    }
    return false;
}

bool holds(const DlAxiom& a, const VariableIndex& vars, unsigned long mask) {
    const bool l = eval(a.lhs(), vars, mask);
    const bool r = eval(a.rhs(), vars, mask);
    return a.kind() == DlAxiom::Kind::Sub ? (!l || r) : (l == r);
}

} // namespace

bool oracle_entails(const Tbox& t, const DlAxiom& a) {
    VariableIndex vars;
    for (const auto& axiom : t.axioms()) {
        vars.index(axiom.lhs());
        vars.index(axiom.rhs());
    }
    vars.index(a.lhs());
    vars.index(a.rhs());
    if (vars.size() > kOracleMaxVariables)
        throw std::invalid_argument("oracle_entails: signature exceeds " +
                                    std::to_string(kOracleMaxVariables) + " variables");

    const unsigned long limit = 1ul << vars.size();
    for (unsigned long mask = 0; mask < limit; ++mask) {
        bool theory_holds = true;
        for (const auto& axiom : t.axioms())
            if (!holds(axiom, vars, mask)) {
                theory_holds = false;
                break;
            }
        if (theory_holds && !holds(a, vars, mask)) return false;
    }
    return true;
}

} // namespace ocs
