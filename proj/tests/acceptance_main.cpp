// Acceptance suite: one check per shipping criterion, one PASS/FAIL line
// each.  Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ocs/analysis.hpp"
#include "ocs/cli.hpp"
#include "ocs/dl_bridge.hpp"
#include "ocs/meaning.hpp"
#include "ocs/parse.hpp"
#include "ocs/reasoner.hpp"
#include "support.hpp"

using namespace ocs;
using test_support::fruit_stmt;
using test_support::expr;
using test_support::oid;
using test_support::stmt;

namespace {

int failures = 0;

class Criterion {
public:
    Criterion(int number, std::string description)
        : number_(number), description_(std::move(description)) {}

    void require(bool ok, const std::string& what) {
        if (!ok) {
            problems_.push_back(what);
        }
    }

    ~Criterion() {
        const bool pass = problems_.empty();
        std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", number_,
                    description_.c_str());
        if (!pass) {
            ++failures;
            for (const auto& p : problems_) std::fprintf(stderr, "  - %s\n", p.c_str());
        }
    }

private:
    int number_;
    std::string description_;
    std::vector<std::string> problems_;
};

struct Run {
    int code;
    std::string out;
};

Run run_cli(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return Run{code, out.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
    const auto dir = std::filesystem::temp_directory_path() / "ocs_acceptance";
    std::filesystem::create_directories(dir);
    const auto path = dir / name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << content;
    return path.string();
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fixture(const std::string& name) { return test_support::fixture_path(name); }

void criterion_1_golden_ebms() {
    Criterion c(1, "golden meaning specification of the apricot component");
    const auto start = std::chrono::steady_clock::now();
    const Run first = run_cli({"ebms", fixture("apricot.ocs"), "--oid", "OID_02"});
    const double elapsed = seconds_since(start);
    const Run second = run_cli({"ebms", fixture("apricot.ocs"), "--oid", "OID_02"});

    c.require(first.code == 0, "exit code 0");
    c.require(first.out ==
                  "A: OID_02 | Analytic | has_NC | OID_01\n"
                  "A: OID_02 | Analytic | has_NSC | \"A fruit of the tree Prunus "
                  "armeniaca.\"@en\n"
                  "I: OID_02 | Analytic | has_NC | \"A mature ovary of a seed-bearing "
                  "plant.\"@en\n"
                  "I: OID_02 | Analytic | has_NC | not OID_99\n",
              "exact four-statement output");
    c.require(first.out == second.out, "byte-stable across runs");
    c.require(elapsed < 1.0, "runtime under one second");

    const Collection collection = test_support::load_fixture("apricot.ocs");
    const Ebms result = ebms(collection, oid("OID_02"));
    c.require(result.asserted == std::set<OidStatement>{fruit_stmt(4), fruit_stmt(5)}, "asserted set");
    c.require(result.inferred ==
                  std::set<OidStatement>{test_support::inferred_mature_ovary(), test_support::inferred_not_vegetable()},
              "inferred set");
    const auto total = result.total();
    c.require(!total.contains(fruit_stmt(3)), "sufficient condition excluded");
    c.require(!total.contains(fruit_stmt(6)), "synthetic statement excluded");
    c.require(!total.contains(fruit_stmt(7)), "tautology excluded");
}

void criterion_2_analytic_theory() {
    Criterion c(2, "analytic theory listing with its primitive");
    const auto start = std::chrono::steady_clock::now();
    const Run r = run_cli({"ebms", fixture("apricot.ocs"), "--oid", "OID_02", "--show-theory"});
    const double elapsed = seconds_since(start);
    c.require(r.code == 0, "exit code 0");
    const std::string theory_block = r.out.substr(0, r.out.find("A:"));
    c.require(theory_block ==
                  "T: OID_01 | Analytic | has_NC | not OID_99\n"
                  "T: OID_01 | Analytic | has_NSC | \"A mature ovary of a seed-bearing "
                  "plant.\"@en\n"
                  "T: OID_02 | Analytic | has_NC | OID_01\n"
                  "T: OID_02 | Analytic | has_NSC | \"A fruit of the tree Prunus "
                  "armeniaca.\"@en\n"
                  "T: OID_99 | Analytic | has_NC | not OID_10\n"
                  "P: OID_10\n",
              "exact five-statement theory plus primitive");
    c.require(elapsed < 1.0, "runtime under one second");

    const AnalyticTheory theory =
        analytic_theory(test_support::load_fixture("apricot.ocs"), oid("OID_02"));
    c.require(theory.statements == std::set<OidStatement>{fruit_stmt(1), fruit_stmt(2), fruit_stmt(4), fruit_stmt(5), fruit_stmt(10)},
              "theory statement set");
    c.require(theory.primitives == std::set<Oid>{oid("OID_10")}, "primitive set");
}

void criterion_3_reverse_translation() {
    Criterion c(3, "reverse translation derives the fourth statement and reports the fifth axiom");
    const Collection defs = test_support::load_fixture("fruit_defs.ocs");
    MeaningOptions options;
    options.report_non_reverse_translatable = true;
    const Ebms result = ebms(defs, oid("OID_02"), options);

    const OidStatement derived_statement =
        stmt("OID_02 | Analytic | has_NC | \"A mature ovary of a seed-bearing plant.\"@en");
    c.require(result.inferred == std::set<OidStatement>{derived_statement}, "exactly the derived statement");

    const DlAxiom unit_subsumption = DlAxiom::sub(expr("\"A fruit of the tree Prunus armeniaca.\"@en"),
                                     expr("\"A mature ovary of a seed-bearing plant.\"@en"));
    c.require(result.non_reverse_translatable == std::set<DlAxiom>{unit_subsumption},
              "exactly the non-reverse-translatable axiom");

    // The axiom really has no statement form.
    c.require(std::holds_alternative<NotReverseTranslatable>(reverse_translate(unit_subsumption, oid("OID_02"))),
              "axiom rejected by reverse translation");
    // And the derived one reproduces through the translation pair.
    const auto back = reverse_translate(translate(derived_statement), oid("OID_02"));
    c.require(std::holds_alternative<ProtoStatement>(back) &&
                  std::get<ProtoStatement>(back).stamped(Indicator::Analytic) == derived_statement,
              "statement reproduced through translate/reverse");
}

void criterion_4_translation_round_trip() {
    Criterion c(4, "translation round trip on 500 random statements");
    test_support::Gen gen(860226);
    test_support::Gen::ExprOptions o;
    o.with_roles = true;
    o.with_units = true;
    int passed = 0;
    int produced = 0;
    while (produced < 500) {
        const OidStatement s = gen.statement(4, o);
        // x ⊑ x from a self-referential sufficient condition keeps no
        // orientation; there is nothing to reproduce from it.
        if (s.condition() == Condition::SC &&
            s.characterization() == ConceptExpr::atom(s.subject()))
            continue;
        ++produced;
        const auto result = reverse_translate(translate(s), s.subject());
        const auto* proto = std::get_if<ProtoStatement>(&result);
        if (proto && proto->subject == s.subject() && proto->condition == s.condition() &&
            proto->characterization == s.characterization())
            ++passed;
    }
    c.require(passed == 500, "all 500 statements reproduced up to the indicator slot");
}

void criterion_5_oracle_equivalence() {
    Criterion c(5, "tableau agrees with the truth-table oracle on 1000 random problems");
    const auto start = std::chrono::steady_clock::now();
    test_support::Gen gen(5);
    test_support::Gen::ExprOptions o;
    o.with_units = true;
    int disagreements = 0;
    for (int i = 0; i < 1000; ++i) {
        const Tbox t = gen.tbox(1 + gen.pick(4), 3, o);
        const ConceptExpr lhs = gen.expr(3, o);
        const ConceptExpr rhs = gen.expr(3, o);
        const DlAxiom a = gen.coin(0.8) ? DlAxiom::sub(lhs, rhs) : DlAxiom::equiv(lhs, rhs);
        const Verdict fast = entails(t, a);
        if (fast == Verdict::ResourceLimit || (fast == Verdict::True) != oracle_entails(t, a))
            ++disagreements;
    }
    c.require(disagreements == 0, "zero disagreements");
    c.require(seconds_since(start) < 60.0, "runtime under sixty seconds");
}

void criterion_6_tautology_suite() {
    Criterion c(6, "tautology classification");
    c.require(is_tautology(DlAxiom::sub(expr("OID_02"), ConceptExpr::top())) == Verdict::True,
              "subsumption under the top concept");
    c.require(is_tautology(DlAxiom::sub(expr("OID_02"), expr("OID_01 or not OID_01"))) ==
                  Verdict::True,
              "excluded middle");
    c.require(is_tautology(DlAxiom::sub(expr("OID_02"), expr("OID_01"))) == Verdict::False,
              "independent atoms are not tautological");

    test_support::Gen gen(66);
    int agreed = 0;
    for (int i = 0; i < 100; ++i) {
        const DlAxiom a = gen.coin(0.8)
                              ? DlAxiom::sub(gen.expr(3), gen.expr(3))
                              : DlAxiom::equiv(gen.expr(3), gen.expr(3));
        const bool fast = is_tautology(a) == Verdict::True;
        if (fast == oracle_entails(Tbox{}, a)) ++agreed;
    }
    c.require(agreed == 100, "100 random instances agree with the oracle");
}

void criterion_7_purity() {
    Criterion c(7, "no synthetic, sufficient, or tautological member in any meaning specification");
    int violations = 0;
    const auto scan = [&](const Collection& collection) {
        for (const auto& [subject, component] : collection.components()) {
            const Ebms result = ebms(collection, subject);
            for (const auto& s : result.total()) {
                if (s.indicator() != Indicator::Analytic) ++violations;
                if (s.condition() == Condition::SC) ++violations;
                if (is_tautology(translate(s)) != Verdict::False) ++violations;
            }
        }
    };
    for (const char* name :
         {"apricot.ocs", "fruit_defs.ocs", "base_fruit.ocs", "import_oid02.ocs",
          "import_contradiction.ocs"})
        scan(test_support::load_fixture(name));

    test_support::Gen gen(7777);
    test_support::Gen::ExprOptions o;
    o.with_units = true;
    o.max_atoms = 4;
    for (int round = 0; round < 200; ++round) {
        Collection collection;
        const int n = 2 + gen.pick(5);
        for (int i = 0; i < n; ++i) collection.add(gen.statement(2, o));
        scan(collection);
    }
    c.require(violations == 0, "zero violations");
}

void criterion_8_import_impact() {
    Criterion c(8, "import impact on the fruit fixtures");
    const Collection base = test_support::load_fixture("base_fruit.ocs");
    const Collection incoming = test_support::load_fixture("import_oid02.ocs");
    const ImpactReport extended = import_impact(base, incoming);
    c.require(extended.verdict == ImpactVerdict::Extended, "verdict Extended");
    c.require(extended.affected.contains(oid("OID_02")), "apricot delta present");
    if (extended.affected.contains(oid("OID_02"))) {
        const auto& delta = extended.affected.at(oid("OID_02"));
        c.require(delta.after.total() ==
                      std::set<OidStatement>{test_support::inferred_mature_ovary(), test_support::inferred_not_vegetable(),
                                             fruit_stmt(4), fruit_stmt(5)},
                  "union meaning equals the golden set");
        c.require(delta.removed.empty(), "nothing removed");
    }
    c.require(run_cli({"import-check", fixture("base_fruit.ocs"),
                       fixture("import_oid02.ocs")})
                      .code == 0,
              "exit code 0 for the extension");

    const ImpactReport broken =
        import_impact(test_support::load_fixture("apricot.ocs"),
                      test_support::load_fixture("import_contradiction.ocs"));
    c.require(broken.verdict == ImpactVerdict::IncoherenceIntroduced,
              "verdict IncoherenceIntroduced");
    c.require(broken.coherence_breaks == std::set<Oid>{oid("OID_02")},
              "coherence break on the apricot component");
    c.require(run_cli({"import-check", fixture("apricot.ocs"),
                       fixture("import_contradiction.ocs")})
                      .code == 2,
              "exit code 2 for the incoherence");
}

void criterion_9_diff_fixtures() {
    Criterion c(9, "diff classification and exit codes");
    const std::string v1 = fixture("apricot.ocs");
    const std::string base_text = test_support::read_fixture("apricot.ocs");
    const auto without_line = [&](const std::string& needle) {
        std::string out;
        std::istringstream in(base_text);
        std::string line;
        while (std::getline(in, line))
            if (line.find(needle) == std::string::npos) out += line + "\n";
        return out;
    };

    // Synthetic statement deleted.
    const std::string no_ex6 = temp_file("no_ex6.ocs", without_line("Contains vitamin A"));
    const Run a = run_cli({"diff", v1, no_ex6, "--oid", "OID_02"});
    c.require(a.code == 0, "synthetic deletion exits 0");
    c.require(a.out.find("kind: SyntheticOrSufficientOnly") != std::string::npos,
              "synthetic deletion classified SyntheticOrSufficientOnly");

    // HRI edited.
    std::string hri_edited = base_text;
    hri_edited.replace(hri_edited.find("\"apricot\""), 9, "\"Apricot\"");
    const std::string hri_file = temp_file("hri.ocs", hri_edited);
    const Run b = run_cli({"diff", v1, hri_file, "--oid", "OID_02"});
    c.require(b.code == 0, "hri edit exits 0");
    c.require(b.out.find("kind: AnnotationOnly") != std::string::npos,
              "hri edit classified AnnotationOnly");

    // Genus link deleted.
    const std::string no_ex5 =
        temp_file("no_ex5.ocs", without_line("OID_02 | Analytic | has_NC | OID_01"));
    const Run d = run_cli({"diff", v1, no_ex5, "--oid", "OID_02"});
    c.require(d.code == 4, "genus deletion exits 4");
    c.require(d.out.find("kind: MeaningAffecting") != std::string::npos,
              "genus deletion classified MeaningAffecting");
    const Collection v2 = test_support::parse_or_die(without_line("OID_02 | Analytic | has_NC | OID_01"));
    const DiffReport report =
        diff_components(test_support::load_fixture("apricot.ocs"), v2, oid("OID_02"));
    const std::set<OidStatement> expected_removed{fruit_stmt(5), test_support::inferred_mature_ovary(),
                                                  test_support::inferred_not_vegetable()};
    bool removed_ok = true;
    for (const auto& s : expected_removed) removed_ok = removed_ok && report.ebms_removed.contains(s);
    c.require(removed_ok, "removed delta contains the asserted link and both inferences");

    // Identical inputs.
    const Run e = run_cli({"diff", v1, v1, "--oid", "OID_02"});
    c.require(e.code == 0, "identical inputs exit 0");
    c.require(e.out.find("kind: Identical") != std::string::npos, "identical classification");
}

void criterion_10_reification() {
    Criterion c(10, "general class axiom reification is logically equivalent both ways");
    const DlAxiom gca = DlAxiom::sub(expr("some OID_28 . top"), expr("some OID_10 . OID_11"));
    for (const GciSide side : {GciSide::Lhs, GciSide::Rhs}) {
        const Reified r = reify_general_axiom(gca, oid("OID_50"), side);
        const Tbox reified(translate_theory(r.statements));
        c.require(entails(reified, gca) == Verdict::True,
                  side == GciSide::Lhs ? "left reification entails the original axiom"
                                       : "right reification entails the original axiom");
        std::set<OidStatement> rest = r.statements;
        OidStatement definition = *rest.begin();
        for (const auto& s : r.statements)
            if (s.condition() == Condition::NSC) definition = s;
        rest.erase(definition);
        bool other_direction = true;
        const Tbox with_definition({gca, translate(definition)});
        for (const auto& s : rest)
            other_direction =
                other_direction && entails(with_definition, translate(s)) == Verdict::True;
        c.require(other_direction,
                  side == GciSide::Lhs ? "original axiom plus left definition entails the rest"
                                       : "original axiom plus right definition entails the rest");
    }
}

} // namespace

int main() {
    criterion_1_golden_ebms();
    criterion_2_analytic_theory();
    criterion_3_reverse_translation();
    criterion_4_translation_round_trip();
    criterion_5_oracle_equivalence();
    criterion_6_tautology_suite();
    criterion_7_purity();
    criterion_8_import_impact();
    criterion_9_diff_fixtures();
    criterion_10_reification();
    if (failures == 0) std::printf("all criteria passed\n");
    return failures;
}
