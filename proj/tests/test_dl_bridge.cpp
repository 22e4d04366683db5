#include <doctest.h>

#include <algorithm>
#include <functional>
#include <variant>

#include "ocs/dl_bridge.hpp"
#include "ocs/parse.hpp"
#include "ocs/reasoner.hpp"
#include "support.hpp"

using namespace ocs;
using test_support::fruit_stmt;
using test_support::expr;
using test_support::oid;
using test_support::stmt;

TEST_CASE("condition types translate per the axiom table") {
    SUBCASE("nsc becomes an equivalence") {
        CHECK(translate(fruit_stmt(4)) ==
              DlAxiom::equiv(expr("OID_02"), expr("\"A fruit of the tree Prunus armeniaca.\"@en")));
    }
    SUBCASE("nc becomes a subsumption") {
        CHECK(translate(fruit_stmt(5)) == DlAxiom::sub(expr("OID_02"), expr("OID_01")));
    }
    SUBCASE("sc with an anonymous characterization becomes a general class axiom") {
        const OidStatement s = stmt("OID_09 | Analytic | has_SC | some OID_10 . OID_11");
        CHECK(translate(s) == DlAxiom::sub(expr("some OID_10 . OID_11"), expr("OID_09")));
    }
    SUBCASE("the indicator does not influence translation") {
        const OidStatement analytic = stmt("OID_02 | Analytic | has_NC | OID_01");
        const OidStatement synthetic = stmt("OID_02 | Synthetic | has_NC | OID_01");
        CHECK(translate(analytic) == translate(synthetic));
    }
}

TEST_CASE("theory translation collapses duplicates") {
    const std::set<OidStatement> theory{fruit_stmt(1), fruit_stmt(2), fruit_stmt(4), fruit_stmt(5), fruit_stmt(10)};
    CHECK(translate_theory(theory).size() == 5);
    CHECK(translate_theory({}).empty());
    // The same axiom from two spellings of one statement.
    const std::set<OidStatement> dup{stmt("OID_01 | Analytic | has_NC | OID_02 and OID_03"),
                                     stmt("OID_01 | Analytic | has_NC | OID_03 and OID_02")};
    CHECK(dup.size() == 1);
    CHECK(translate_theory(dup).size() == 1);
}

TEST_CASE("reverse translation") {
    SUBCASE("an atom on the left of a subsumption reads as a necessary condition") {
        const DlAxiom inferred_axiom =
            DlAxiom::sub(expr("OID_02"), expr("\"A mature ovary of a seed-bearing plant.\"@en"));
        const auto result = reverse_translate(inferred_axiom, oid("OID_02"));
        REQUIRE(std::holds_alternative<ProtoStatement>(result));
        const auto& proto = std::get<ProtoStatement>(result);
        CHECK(proto.subject == oid("OID_02"));
        CHECK(proto.condition == Condition::NC);
        CHECK(proto.characterization == expr("\"A mature ovary of a seed-bearing plant.\"@en"));
        CHECK(proto.stamped(Indicator::Analytic) ==
              stmt("OID_02 | Analytic | has_NC | \"A mature ovary of a seed-bearing plant.\"@en"));
    }
    SUBCASE("no oid on either side is not reverse translatable") {
        const DlAxiom unit_subsumption = DlAxiom::sub(expr("\"A fruit of the tree Prunus armeniaca.\"@en"),
                                         expr("\"A mature ovary of a seed-bearing plant.\"@en"));
        const auto result = reverse_translate(unit_subsumption, oid("OID_02"));
        REQUIRE(std::holds_alternative<NotReverseTranslatable>(result));
        CHECK(std::get<NotReverseTranslatable>(result).axiom == unit_subsumption);
    }
    SUBCASE("self equivalence survives as a statement") {
        const auto result =
            reverse_translate(DlAxiom::equiv(expr("OID_02"), expr("OID_02")), oid("OID_02"));
        REQUIRE(std::holds_alternative<ProtoStatement>(result));
        const auto& proto = std::get<ProtoStatement>(result);
        CHECK(proto.subject == oid("OID_02"));
        CHECK(proto.condition == Condition::NSC);
        CHECK(proto.characterization == expr("OID_02"));
    }
    SUBCASE("the direction subject picks the side of a two-atom axiom") {
        const DlAxiom sub = DlAxiom::sub(expr("OID_02"), expr("OID_01"));
        const auto as_nc = reverse_translate(sub, oid("OID_02"));
        CHECK(std::get<ProtoStatement>(as_nc).condition == Condition::NC);
        const auto as_sc = reverse_translate(sub, oid("OID_01"));
        CHECK(std::get<ProtoStatement>(as_sc).subject == oid("OID_01"));
        CHECK(std::get<ProtoStatement>(as_sc).condition == Condition::SC);

        const DlAxiom eq = DlAxiom::equiv(expr("OID_01"), expr("OID_02"));
        CHECK(std::get<ProtoStatement>(reverse_translate(eq, oid("OID_02"))).subject ==
              oid("OID_02"));
        CHECK(std::get<ProtoStatement>(reverse_translate(eq, oid("OID_01"))).subject ==
              oid("OID_01"));
    }
}

TEST_CASE("translation faithfulness on random statements") {
    test_support::Gen gen(4711);
    test_support::Gen::ExprOptions o;
    o.with_roles = true;
    o.with_units = true;
    int checked = 0;
    while (checked < 500) {
        const OidStatement s = gen.statement(4, o);
        // A sufficient condition whose characterization is the subject atom
        // itself translates to x ⊑ x, which carries no orientation to
        // recover; skip that degenerate shape.
        if (s.condition() == Condition::SC &&
            s.characterization() == ConceptExpr::atom(s.subject()))
            continue;
        ++checked;
        const auto result = reverse_translate(translate(s), s.subject());
        REQUIRE(std::holds_alternative<ProtoStatement>(result));
        const auto& proto = std::get<ProtoStatement>(result);
        CHECK(proto.subject == s.subject());
        CHECK(proto.condition == s.condition());
        CHECK(proto.characterization == s.characterization());
    }
}

TEST_CASE("nsc decomposes into nc plus sc") {
    test_support::Gen gen(808);
    for (int i = 0; i < 50; ++i) {
        const Oid subject = gen.class_oid();
        const ConceptExpr c = gen.expr(3);
        const DlAxiom whole = translate(OidStatement(subject, Indicator::Analytic, Condition::NSC, c));
        const Tbox parts(
            {translate(OidStatement(subject, Indicator::Analytic, Condition::NC, c)),
             translate(OidStatement(subject, Indicator::Analytic, Condition::SC, c))});
        CHECK(entails(parts, whole) == Verdict::True);
        const Tbox whole_box({whole});
        for (const auto& part : parts.axioms())
            CHECK(entails(whole_box, part) == Verdict::True);
    }
}

TEST_CASE("reifying a general class axiom") {
    const DlAxiom gca = DlAxiom::sub(expr("some OID_28 . top"), expr("some OID_10 . OID_11"));
    const Oid fresh = oid("OID_50");

    SUBCASE("naming the left side") {
        const Reified r = reify_general_axiom(gca, fresh, GciSide::Lhs);
        CHECK(r.component.oid == fresh);
        CHECK(r.statements ==
              std::set<OidStatement>{stmt("OID_50 | Analytic | has_NSC | some OID_28 . top"),
                                     stmt("OID_50 | Analytic | has_NC | some OID_10 . OID_11")});
        CHECK(r.component.oid_statements == r.statements);
    }
    SUBCASE("naming the right side") {
        const Reified r = reify_general_axiom(gca, fresh, GciSide::Rhs);
        CHECK(r.statements ==
              std::set<OidStatement>{stmt("OID_50 | Analytic | has_NSC | some OID_10 . OID_11"),
                                     stmt("OID_50 | Analytic | has_SC | some OID_28 . top")});
    }
    SUBCASE("both reifications are logically equivalent to the original") {
        for (const GciSide side : {GciSide::Lhs, GciSide::Rhs}) {
            const Reified r = reify_general_axiom(gca, fresh, side);
            const Tbox reified(translate_theory(r.statements));
            // The reified theory recovers the original axiom.
            CHECK(entails(reified, gca) == Verdict::True);
            // Conversely, the original plus the dubbing definition recovers
            // the remaining statement.
            std::set<OidStatement> rest = r.statements;
            const OidStatement definition = *std::find_if(
                rest.begin(), rest.end(),
                [](const OidStatement& s) { return s.condition() == Condition::NSC; });
            rest.erase(definition);
            const Tbox original_plus_definition({gca, translate(definition)});
            for (const auto& s : rest)
                CHECK(entails(original_plus_definition, translate(s)) == Verdict::True);
        }
    }
    SUBCASE("an axiom with an atomic side is rejected") {
        const DlAxiom atomic = DlAxiom::sub(expr("OID_02"), expr("some OID_10 . OID_11"));
        CHECK_FALSE(is_general_class_axiom(atomic));
        CHECK_THROWS_AS((void)reify_general_axiom(atomic, fresh, GciSide::Lhs),
                        std::invalid_argument);
    }
    SUBCASE("a fresh oid already in use is rejected") {
        const Collection c = test_support::load_fixture("apricot.ocs");
        CHECK_THROWS_AS((void)reify_general_axiom(c, gca, oid("OID_02"), GciSide::Lhs),
                        std::invalid_argument);
        CHECK_THROWS_AS((void)reify_general_axiom(c, gca, oid("OID_10"), GciSide::Lhs),
                        std::invalid_argument); // mentioned-only still counts
        CHECK_NOTHROW((void)reify_general_axiom(c, gca, oid("OID_50"), GciSide::Lhs));
    }
}

TEST_CASE("role-free reification preserves the models over the shared signature") {
    // Independent route: enumerate all valuations and compare the projections
    // of the two theories' model sets onto the shared variables.
    test_support::Gen gen(1337);
    const Oid fresh = oid("FRESH_1");
    int done = 0;
    while (done < 40) {
        const ConceptExpr lhs = gen.expr(2);
        const ConceptExpr rhs = gen.expr(2);
        const DlAxiom gca = DlAxiom::sub(lhs, rhs);
        if (!is_general_class_axiom(gca)) continue;
        ++done;
        const GciSide side = gen.coin() ? GciSide::Lhs : GciSide::Rhs;
        const Reified r = reify_general_axiom(gca, fresh, side);

        // Collect the shared propositional variables.
        std::set<Oid> shared = mentioned_oids(lhs);
        for (const auto& o : mentioned_oids(rhs)) shared.insert(o);

        const auto models = [&](const std::set<DlAxiom>& axioms,
                                const std::set<Oid>& vars) {
            // All valuations of `vars` extendable to a model of `axioms`.
            std::vector<Oid> order(vars.begin(), vars.end());
            std::set<unsigned long> projected;
            std::set<Oid> all = vars;
            for (const auto& a : axioms) {
                for (const auto& o : mentioned_oids(a.lhs())) all.insert(o);
                for (const auto& o : mentioned_oids(a.rhs())) all.insert(o);
            }
            std::vector<Oid> full(all.begin(), all.end());
            REQUIRE(full.size() <= 16);
            for (unsigned long mask = 0; mask < (1ul << full.size()); ++mask) {
                const auto value = [&](const ConceptExpr& atom_expr) {
                    for (std::size_t i = 0; i < full.size(); ++i)
                        if (full[i] == atom_expr.atom_oid()) return ((mask >> i) & 1ul) != 0;
                    return false;
                };
                // Evaluate each axiom propositionally.
                const std::function<bool(const ConceptExpr&)> eval =
                    [&](const ConceptExpr& e) -> bool {
                    switch (e.kind()) {
                        case ConceptExpr::Kind::Top: return true;
                        case ConceptExpr::Kind::Bottom: return false;
                        case ConceptExpr::Kind::Atom: return value(e);
                        case ConceptExpr::Kind::Not: return !eval(e.child());
                        case ConceptExpr::Kind::And: {
                            for (const auto& op : e.operands())
                                if (!eval(op)) return false;
                            return true;
                        }
                        case ConceptExpr::Kind::Or: {
                            for (const auto& op : e.operands())
                                if (eval(op)) return true;
                            return false;
                        }
                        default: throw std::logic_error("role in role-free test");
                    }
                };
                bool ok = true;
                for (const auto& a : axioms) {
                    const bool l = eval(a.lhs());
                    const bool rr = eval(a.rhs());
                    if (!(a.kind() == DlAxiom::Kind::Sub ? (!l || rr) : (l == rr))) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
                unsigned long key = 0;
                for (std::size_t i = 0; i < order.size(); ++i)
                    for (std::size_t k = 0; k < full.size(); ++k)
                        if (full[k] == order[i] && ((mask >> k) & 1ul)) key |= 1ul << i;
                projected.insert(key);
            }
            return projected;
        };

        CHECK(models({gca}, shared) == models(translate_theory(r.statements), shared));
    }
}
