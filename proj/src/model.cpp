#include "ocs/model.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <utility>

namespace ocs {

// ── Oid ─────────────────────────────────────────────────────────────────────

std::optional<Oid> Oid::parse(std::string_view text) {
    auto underscore = text.rfind('_');
    if (underscore == std::string_view::npos || underscore == 0 || underscore + 1 == text.size())
        return std::nullopt;
    std::string_view prefix = text.substr(0, underscore);
    std::string_view local = text.substr(underscore + 1);
    if (!std::isalpha(static_cast<unsigned char>(prefix.front()))) return std::nullopt;
    for (char c : prefix)
        if (!std::isalnum(static_cast<unsigned char>(c))) return std::nullopt;
    for (char c : local)
        if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    return Oid{std::string(prefix), std::string(local), {}};
}

std::strong_ordering compare(const Oid& a, const Oid& b) noexcept {
    if (auto c = a.prefix.compare(b.prefix); c != 0)
        return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.local.size() != b.local.size())
        return a.local.size() < b.local.size() ? std::strong_ordering::less
                                               : std::strong_ordering::greater;
    if (auto c = a.local.compare(b.local); c != 0)
        return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::strong_ordering compare(const LexicalUnit& a, const LexicalUnit& b) noexcept {
    if (auto c = a.lang.compare(b.lang); c != 0)
        return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    if (auto c = a.text.compare(b.text); c != 0)
        return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

// ── ConceptExpr ─────────────────────────────────────────────────────────────

struct ConceptExpr::Node {
    Kind kind;
    Oid oid;                           // Atom: class OID; Exists/Forall: role OID
    LexicalUnit unit;                  // NlAtom
    std::vector<ConceptExpr> children; // Not: [inner]; Exists/Forall: [filler]; And/Or: operands
};

const std::shared_ptr<const ConceptExpr::Node>& ConceptExpr::shared_top() {
    static const auto node = std::make_shared<const Node>(Node{Kind::Top, {}, {}, {}});
    return node;
}

ConceptExpr::ConceptExpr() : node_(shared_top()) {}

ConceptExpr ConceptExpr::top() { return ConceptExpr(shared_top()); }

ConceptExpr ConceptExpr::bottom() {
    static const auto node =
        std::make_shared<const Node>(Node{Kind::Bottom, {}, {}, {}});
    return ConceptExpr(node);
}

ConceptExpr ConceptExpr::atom(Oid oid) {
    return ConceptExpr(std::make_shared<const Node>(Node{Kind::Atom, std::move(oid), {}, {}}));
}

ConceptExpr ConceptExpr::nl_atom(LexicalUnit unit) {
    if (unit.text.empty()) throw std::invalid_argument("lexical unit text must be non-empty");
    return ConceptExpr(std::make_shared<const Node>(Node{Kind::NlAtom, {}, std::move(unit), {}}));
}

ConceptExpr ConceptExpr::negation(ConceptExpr inner) {
    return ConceptExpr(
        std::make_shared<const Node>(Node{Kind::Not, {}, {}, {std::move(inner)}}));
}

ConceptExpr ConceptExpr::conjunction(std::vector<ConceptExpr> operands) {
    if (operands.empty()) throw std::invalid_argument("conjunction requires at least one operand");
    return ConceptExpr(std::make_shared<const Node>(Node{Kind::And, {}, {}, std::move(operands)}));
}

ConceptExpr ConceptExpr::disjunction(std::vector<ConceptExpr> operands) {
    if (operands.empty()) throw std::invalid_argument("disjunction requires at least one operand");
    return ConceptExpr(std::make_shared<const Node>(Node{Kind::Or, {}, {}, std::move(operands)}));
}

ConceptExpr ConceptExpr::exists(Oid role, ConceptExpr filler) {
    return ConceptExpr(
        std::make_shared<const Node>(Node{Kind::Exists, std::move(role), {}, {std::move(filler)}}));
}

ConceptExpr ConceptExpr::forall(Oid role, ConceptExpr filler) {
    return ConceptExpr(
        std::make_shared<const Node>(Node{Kind::Forall, std::move(role), {}, {std::move(filler)}}));
}

ConceptExpr::Kind ConceptExpr::kind() const noexcept { return node_->kind; }

const Oid& ConceptExpr::atom_oid() const {
    if (node_->kind != Kind::Atom) throw std::logic_error("atom_oid() on non-atom");
    return node_->oid;
}

const LexicalUnit& ConceptExpr::lexical_unit() const {
    if (node_->kind != Kind::NlAtom) throw std::logic_error("lexical_unit() on non-NL-atom");
    return node_->unit;
}

const Oid& ConceptExpr::role() const {
    if (node_->kind != Kind::Exists && node_->kind != Kind::Forall)
        throw std::logic_error("role() on non-quantifier");
    return node_->oid;
}

const ConceptExpr& ConceptExpr::child() const {
    if (node_->kind != Kind::Not) throw std::logic_error("child() on non-negation");
    return node_->children.front();
}

const ConceptExpr& ConceptExpr::filler() const {
    if (node_->kind != Kind::Exists && node_->kind != Kind::Forall)
        throw std::logic_error("filler() on non-quantifier");
    return node_->children.front();
}

const std::vector<ConceptExpr>& ConceptExpr::operands() const {
    if (node_->kind != Kind::And && node_->kind != Kind::Or)
        throw std::logic_error("operands() on non-And/Or");
    return node_->children;
}

bool ConceptExpr::is_atomic() const noexcept {
    return node_->kind == Kind::Atom || node_->kind == Kind::NlAtom;
}

std::strong_ordering compare(const ConceptExpr& a, const ConceptExpr& b) noexcept {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    using Kind = ConceptExpr::Kind;
    if (a.node_->kind != b.node_->kind)
        return static_cast<std::uint8_t>(a.node_->kind) <=> static_cast<std::uint8_t>(b.node_->kind);
    switch (a.node_->kind) {
        case Kind::Top:
        case Kind::Bottom:
            return std::strong_ordering::equal;
        case Kind::Atom:
            return compare(a.node_->oid, b.node_->oid);
        case Kind::NlAtom:
            return compare(a.node_->unit, b.node_->unit);
        case Kind::Exists:
        case Kind::Forall:
            if (auto c = compare(a.node_->oid, b.node_->oid); c != 0) return c;
            [[fallthrough]];
        case Kind::Not:
        case Kind::And:
        case Kind::Or: {
            const auto& xs = a.node_->children;
            const auto& ys = b.node_->children;
            const std::size_t n = std::min(xs.size(), ys.size());
            for (std::size_t i = 0; i < n; ++i)
                if (auto c = compare(xs[i], ys[i]); c != 0) return c;
            return xs.size() <=> ys.size();
        }
    }
    return std::strong_ordering::equal; // unreachable
}

namespace {

// Rebuilds an n-ary node from already-canonical operands: flatten nested
// nodes of the same kind, sort, dedupe, collapse singletons.
ConceptExpr assemble(ConceptExpr::Kind kind, std::vector<ConceptExpr> operands) {
    std::vector<ConceptExpr> flat;
    flat.reserve(operands.size());
    for (auto& op : operands) {
        if (op.kind() == kind) {
            const auto& inner = op.operands();
            flat.insert(flat.end(), inner.begin(), inner.end());
        } else {
            flat.push_back(std::move(op));
        }
    }
    std::sort(flat.begin(), flat.end());
    flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
    if (flat.size() == 1) return flat.front();
    return kind == ConceptExpr::Kind::And ? ConceptExpr::conjunction(std::move(flat))
                                          : ConceptExpr::disjunction(std::move(flat));
}

// Canonical NNF in one pass; `negated` pushes a pending complement inward.
ConceptExpr norm(const ConceptExpr& e, bool negated) {
    using Kind = ConceptExpr::Kind;
    switch (e.kind()) {
        case Kind::Top:
            return negated ? ConceptExpr::bottom() : ConceptExpr::top();
        case Kind::Bottom:
            return negated ? ConceptExpr::top() : ConceptExpr::bottom();
        case Kind::Atom:
        case Kind::NlAtom:
            return negated ? ConceptExpr::negation(e) : e;
        case Kind::Not:
            return norm(e.child(), !negated);
        case Kind::And:
        case Kind::Or: {
            std::vector<ConceptExpr> ops;
            ops.reserve(e.operands().size());
            for (const auto& op : e.operands()) ops.push_back(norm(op, negated));
            const bool is_and = (e.kind() == Kind::And) != negated;
            return assemble(is_and ? Kind::And : Kind::Or, std::move(ops));
        }
        case Kind::Exists:
            return negated ? ConceptExpr::forall(e.role(), norm(e.filler(), true))
                           : ConceptExpr::exists(e.role(), norm(e.filler(), false));
        case Kind::Forall:
            return negated ? ConceptExpr::exists(e.role(), norm(e.filler(), true))
                           : ConceptExpr::forall(e.role(), norm(e.filler(), false));
    }
    return ConceptExpr::top(); // unreachable
}

template <typename AtomFn, typename RoleFn, typename UnitFn>
void walk(const ConceptExpr& e, AtomFn&& on_atom, RoleFn&& on_role, UnitFn&& on_unit) {
    using Kind = ConceptExpr::Kind;
    switch (e.kind()) {
        case Kind::Top:
        case Kind::Bottom:
            return;
        case Kind::Atom:
            on_atom(e.atom_oid());
            return;
        case Kind::NlAtom:
            on_unit(e.lexical_unit());
            return;
        case Kind::Not:
            walk(e.child(), on_atom, on_role, on_unit);
            return;
        case Kind::Exists:
        case Kind::Forall:
            on_role(e.role());
            walk(e.filler(), on_atom, on_role, on_unit);
            return;
        case Kind::And:
        case Kind::Or:
            for (const auto& op : e.operands()) walk(op, on_atom, on_role, on_unit);
            return;
    }
}

} // namespace

ConceptExpr normalize(const ConceptExpr& e) { return norm(e, false); }

std::set<Oid> mentioned_oids(const ConceptExpr& e) {
    std::set<Oid> out;
    walk(
        e, [&](const Oid& o) { out.insert(o); }, [&](const Oid& r) { out.insert(r); },
        [](const LexicalUnit&) {});
    return out;
}

std::set<LexicalUnit> mentioned_units(const ConceptExpr& e) {
    std::set<LexicalUnit> out;
    walk(
        e, [](const Oid&) {}, [](const Oid&) {},
        [&](const LexicalUnit& u) { out.insert(u); });
    return out;
}

} // namespace ocs
