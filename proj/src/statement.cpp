#include "ocs/statement.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

namespace ocs {

const char* to_string(Indicator i) noexcept {
    return i == Indicator::Analytic ? "Analytic" : "Synthetic";
}

const char* to_string(Condition c) noexcept {
    switch (c) {
        case Condition::NC: return "has_NC";
        case Condition::SC: return "has_SC";
        case Condition::NSC: return "has_NSC";
    }
    return "has_NC";
}

// ── OidStatement ────────────────────────────────────────────────────────────

OidStatement::OidStatement(Oid subject, Indicator indicator, Condition condition,
                           const ConceptExpr& characterization)
    : subject_(std::move(subject)),
      indicator_(indicator),
      condition_(condition),
      characterization_(normalize(characterization)) {}

std::strong_ordering compare(const OidStatement& a, const OidStatement& b) noexcept {
    if (auto c = compare(a.subject_, b.subject_); c != 0) return c;
    if (a.condition_ != b.condition_)
        return static_cast<std::uint8_t>(a.condition_) <=> static_cast<std::uint8_t>(b.condition_);
    if (a.indicator_ != b.indicator_)
        return static_cast<std::uint8_t>(a.indicator_) <=> static_cast<std::uint8_t>(b.indicator_);
    return compare(a.characterization_, b.characterization_);
}

std::set<Oid> mentioned_oids(const OidStatement& s) { return mentioned_oids(s.characterization()); }

// ── OcStatement ─────────────────────────────────────────────────────────────

namespace {

bool valid_meta_key(const std::string& key) {
    if (key.empty() || !std::isalpha(static_cast<unsigned char>(key.front()))) return false;
    for (char c : key)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

bool valid_meta_value(const std::string& value) {
    if (value.empty()) return false;
    if (std::isspace(static_cast<unsigned char>(value.front())) ||
        std::isspace(static_cast<unsigned char>(value.back())))
        return false;
    for (char c : value)
        if (c == '|' || c == '"' || c == '\\' || c == '#' || c == '\n' || c == '\r') return false;
    return true;
}

} // namespace

OcStatement::OcStatement(Kind kind, Oid subject, std::string a, std::string b)
    : kind_(kind), subject_(std::move(subject)), first_(std::move(a)), second_(std::move(b)) {}

OcStatement OcStatement::hri(Oid subject, std::string label, std::string lang) {
    return OcStatement(Kind::Hri, std::move(subject), std::move(label), std::move(lang));
}

OcStatement OcStatement::meta(Oid subject, std::string key, std::string value) {
    if (!valid_meta_key(key)) throw std::invalid_argument("invalid metadata key: " + key);
    if (!valid_meta_value(value)) throw std::invalid_argument("invalid metadata value: " + value);
    return OcStatement(Kind::Meta, std::move(subject), std::move(key), std::move(value));
}

const std::string& OcStatement::label() const {
    if (kind_ != Kind::Hri) throw std::logic_error("label() on non-HRI statement");
    return first_;
}

const std::string& OcStatement::lang() const {
    if (kind_ != Kind::Hri) throw std::logic_error("lang() on non-HRI statement");
    return second_;
}

const std::string& OcStatement::key() const {
    if (kind_ != Kind::Meta) throw std::logic_error("key() on non-Meta statement");
    return first_;
}

const std::string& OcStatement::value() const {
    if (kind_ != Kind::Meta) throw std::logic_error("value() on non-Meta statement");
    return second_;
}

std::strong_ordering compare(const OcStatement& a, const OcStatement& b) noexcept {
    if (auto c = compare(a.subject_, b.subject_); c != 0) return c;
    if (a.kind_ != b.kind_)
        return static_cast<std::uint8_t>(a.kind_) <=> static_cast<std::uint8_t>(b.kind_);
    if (auto c = a.first_.compare(b.first_); c != 0)
        return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    if (auto c = a.second_.compare(b.second_); c != 0)
        return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

// ── DlAxiom ─────────────────────────────────────────────────────────────────

DlAxiom DlAxiom::sub(const ConceptExpr& lhs, const ConceptExpr& rhs) {
    return DlAxiom(Kind::Sub, normalize(lhs), normalize(rhs));
}

DlAxiom DlAxiom::equiv(const ConceptExpr& lhs, const ConceptExpr& rhs) {
    ConceptExpr a = normalize(lhs);
    ConceptExpr b = normalize(rhs);
    if (compare(b, a) < 0) std::swap(a, b);
    return DlAxiom(Kind::Equiv, std::move(a), std::move(b));
}

std::strong_ordering compare(const DlAxiom& a, const DlAxiom& b) noexcept {
    if (a.kind_ != b.kind_)
        return static_cast<std::uint8_t>(a.kind_) <=> static_cast<std::uint8_t>(b.kind_);
    if (auto c = compare(a.lhs_, b.lhs_); c != 0) return c;
    return compare(a.rhs_, b.rhs_);
}

// ── OntologicalComponent ────────────────────────────────────────────────────

bool OntologicalComponent::add(const OidStatement& s) {
    if (!(s.subject() == oid)) return false;
    return oid_statements.insert(s).second;
}

bool OntologicalComponent::add(const OcStatement& s) {
    if (!(s.subject() == oid)) return false;
    return oc_statements.insert(s).second;
}

// ── Collection ──────────────────────────────────────────────────────────────

const OntologicalComponent* Collection::find(const Oid& oid) const {
    auto it = components_.find(oid);
    return it == components_.end() ? nullptr : &it->second;
}

OntologicalComponent& Collection::component(const Oid& oid, int first_line) {
    auto [it, inserted] = components_.try_emplace(oid);
    if (inserted) {
        it->second.oid = oid;
        it->second.first_line = first_line;
    }
    return it->second;
}

bool Collection::add(const OidStatement& s, int line) {
    return component(s.subject(), line).add(s);
}

bool Collection::add(const OcStatement& s, int line) {
    return component(s.subject(), line).add(s);
}

void Collection::add(OntologicalComponent incoming) {
    auto it = components_.find(incoming.oid);
    if (it == components_.end()) {
        components_.emplace(incoming.oid, std::move(incoming));
        return;
    }
    for (const auto& s : incoming.oid_statements) it->second.oid_statements.insert(s);
    for (const auto& s : incoming.oc_statements) it->second.oc_statements.insert(s);
}

std::set<Oid> Collection::mentioned_oids() const {
    std::set<Oid> out;
    for (const auto& [oid, component] : components_)
        for (const auto& s : component.oid_statements) {
            auto m = ocs::mentioned_oids(s);
            out.insert(m.begin(), m.end());
        }
    return out;
}

std::set<Oid> Collection::primitive_references() const {
    std::set<Oid> out;
    for (const auto& oid : mentioned_oids())
        if (!components_.contains(oid)) out.insert(oid);
    return out;
}

bool Collection::knows(const Oid& oid) const {
    if (components_.contains(oid)) return true;
    return mentioned_oids().contains(oid);
}

} // namespace ocs
