// Shared test helpers: fixture loading, parse-or-die wrappers, and the
// random generators used by the property suites.

#ifndef OCS_TESTS_SUPPORT_HPP
#define OCS_TESTS_SUPPORT_HPP

#include <array>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ocs/parse.hpp"
#include "ocs/reasoner.hpp"

namespace test_support {

inline std::string fixture_path(const std::string& name) {
    return std::string(OCS_FIXTURE_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return std::move(buffer).str();
}

inline std::string read_fixture(const std::string& name) { return read_file(fixture_path(name)); }

inline ocs::Collection parse_or_die(std::string_view text) {
    auto parsed = ocs::parse_collection(text);
    if (!parsed.ok()) {
        std::string what = "fixture failed to parse:";
        for (const auto& d : parsed.diagnostics) what += " [" + d.code + "] " + d.message;
        throw std::runtime_error(what);
    }
    return std::move(parsed.collection);
}

inline ocs::Collection load_fixture(const std::string& name) {
    return parse_or_die(read_fixture(name));
}

inline ocs::OidStatement stmt(std::string_view line) {
    auto result = ocs::parse_statement(line);
    if (auto* s = std::get_if<ocs::OidStatement>(&result)) return *s;
    throw std::runtime_error("not an OID statement: " + std::string(line));
}

inline ocs::ConceptExpr expr(std::string_view text) {
    auto result = ocs::parse_concept(text);
    if (auto* e = std::get_if<ocs::ConceptExpr>(&result)) return *e;
    throw std::runtime_error("bad concept: " + std::string(text));
}

inline ocs::Oid oid(std::string_view text) {
    auto parsed = ocs::Oid::parse(text);
    if (!parsed) throw std::runtime_error("bad oid: " + std::string(text));
    return *parsed;
}

// The worked fruit example, statement by statement.  fruit_stmt(1) through fruit_stmt(10).
inline ocs::OidStatement fruit_stmt(int n) {
    static const char* lines[] = {
        "OID_01 | Analytic | has_NSC | \"A mature ovary of a seed-bearing plant.\"@en",
        "OID_01 | Analytic | has_NC | not OID_99",
        "OID_01 | Analytic | has_SC | \"Apple\"@en",
        "OID_02 | Analytic | has_NSC | \"A fruit of the tree Prunus armeniaca.\"@en",
        "OID_02 | Analytic | has_NC | OID_01",
        "OID_02 | Synthetic | has_NC | \"Contains vitamin A.\"@en",
        "OID_02 | Analytic | has_NC | OID_99 or not OID_99",
        "OID_03 | Analytic | has_NC | OID_01",
        "OID_03 | Analytic | has_NC | \"A tropical fruit.\"@en",
        "OID_99 | Analytic | has_NC | not OID_10",
    };
    return stmt(lines[n - 1]);
}

// The two inferred members of the fruit example's meaning specification.
inline ocs::OidStatement inferred_mature_ovary() {
    return stmt("OID_02 | Analytic | has_NC | \"A mature ovary of a seed-bearing plant.\"@en");
}
inline ocs::OidStatement inferred_not_vegetable() { return stmt("OID_02 | Analytic | has_NC | not OID_99"); }

// ── Random generation ───────────────────────────────────────────────────────

struct ExprOptions {
    int max_atoms = 6;
    bool with_roles = false;
    bool with_units = false;
    bool with_constants = true; // top/bottom leaves
};

class Gen {
public:
    using ExprOptions = test_support::ExprOptions;

    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
    bool coin(double p = 0.5) { return std::uniform_real_distribution<>(0.0, 1.0)(rng_) < p; }

    ocs::Oid class_oid(int max_atoms = 6) {
        return oid("OID_0" + std::to_string(1 + pick(max_atoms)));
    }
    ocs::Oid role_oid() { return oid("R_" + std::to_string(1 + pick(2))); }
    ocs::LexicalUnit unit() {
        static const ocs::LexicalUnit pool[] = {{"alpha", "en"}, {"beta", "en"}, {"beta", "fr"}};
        return pool[pick(3)];
    }

    ocs::ConceptExpr expr(int depth, const ExprOptions& o = {}) {
        if (depth == 0 || coin(0.25)) return leaf(o);
        switch (pick(o.with_roles ? 5 : 3)) {
            case 0: return ocs::ConceptExpr::negation(expr(depth - 1, o));
            case 1: return nary(true, depth, o);
            case 2: return nary(false, depth, o);
            case 3: return ocs::ConceptExpr::exists(role_oid(), expr(depth - 1, o));
            default: return ocs::ConceptExpr::forall(role_oid(), expr(depth - 1, o));
        }
    }

    ocs::OidStatement statement(int depth, const ExprOptions& o = {}) {
        const ocs::Oid subject = class_oid(o.max_atoms);
        const ocs::Indicator indicator =
            coin(0.7) ? ocs::Indicator::Analytic : ocs::Indicator::Synthetic;
        const ocs::Condition condition = std::array{ocs::Condition::NC, ocs::Condition::SC,
                                                    ocs::Condition::NSC}[pick(3)];
        return ocs::OidStatement(subject, indicator, condition, expr(depth, o));
    }

    ocs::Tbox tbox(int n_axioms, int depth, const ExprOptions& o = {}) {
        std::set<ocs::DlAxiom> axioms;
        for (int i = 0; i < n_axioms; ++i) {
            const ocs::ConceptExpr lhs = expr(depth, o);
            const ocs::ConceptExpr rhs = expr(depth, o);
            axioms.insert(coin(0.8) ? ocs::DlAxiom::sub(lhs, rhs)
                                    : ocs::DlAxiom::equiv(lhs, rhs));
        }
        return ocs::Tbox(std::move(axioms));
    }

private:
    ocs::ConceptExpr leaf(const ExprOptions& o) {
        if (o.with_constants && coin(0.08))
            return coin() ? ocs::ConceptExpr::top() : ocs::ConceptExpr::bottom();
        if (o.with_units && coin(0.25)) return ocs::ConceptExpr::nl_atom(unit());
        return ocs::ConceptExpr::atom(class_oid(o.max_atoms));
    }

    ocs::ConceptExpr nary(bool conj, int depth, const ExprOptions& o) {
        std::vector<ocs::ConceptExpr> ops;
        const int n = 2 + pick(2);
        ops.reserve(n);
        for (int i = 0; i < n; ++i) ops.push_back(expr(depth - 1, o));
        return conj ? ocs::ConceptExpr::conjunction(std::move(ops))
                    : ocs::ConceptExpr::disjunction(std::move(ops));
    }

    std::mt19937_64 rng_;
};

} // namespace test_support

#endif // OCS_TESTS_SUPPORT_HPP
