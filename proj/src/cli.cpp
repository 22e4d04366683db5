#include "ocs/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "ocs/analysis.hpp"
#include "ocs/exporter.hpp"
#include "ocs/json_io.hpp"
#include "ocs/parse.hpp"
#include "ocs/render.hpp"

namespace ocs::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitIncoherent = 2;
constexpr int kExitIo = 3;
constexpr int kExitMeaningChange = 4;

struct IoError {
    std::string message;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError{"cannot read '" + path + "'"};
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw IoError{"cannot read '" + path + "'"};
    return std::move(buffer).str();
}

void print_diagnostics(std::ostream& out, const std::string& file,
                       const std::vector<ParseDiagnostic>& diagnostics) {
    for (const auto& d : diagnostics)
        out << (d.severity == Severity::Error ? "ERROR " : "WARNING ") << file << ':' << d.line
            << ':' << d.column << ' ' << d.code << ' ' << d.message << '\n';
}

// Loads and parses, printing diagnostics; nullopt means parse errors.
std::optional<Collection> load(const std::string& path, const ParseOptions& options,
                               std::ostream& out) {
    CollectionParse parsed = parse_collection(read_file(path), options);
    print_diagnostics(out, path, parsed.diagnostics);
    if (!parsed.ok()) return std::nullopt;
    return std::move(parsed.collection);
}

struct CommonFlags {
    bool strict = false;
    std::size_t node_budget = kDefaultNodeBudget;

    [[nodiscard]] ParseOptions parse_options() const { return ParseOptions{strict}; }
    [[nodiscard]] MeaningOptions meaning_options(bool report = false) const {
        return MeaningOptions{node_budget, report};
    }
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_flag("--strict", flags.strict, "Reject bottom/only in statement characterizations");
    cmd->add_option("--node-budget", flags.node_budget, "Tableau node budget per query")
        ->capture_default_str();
}

int cmd_validate(const std::string& file, bool coherence, const CommonFlags& flags,
                 std::ostream& out) {
    CollectionParse parsed = parse_collection(read_file(file), flags.parse_options());
    print_diagnostics(out, file, parsed.diagnostics);
    const auto primitives = parsed.collection.primitive_references();
    if (!primitives.empty()) {
        out << "INFO " << file << " primitives:";
        for (const auto& oid : primitives) out << ' ' << oid.render();
        out << '\n';
    }
    if (!parsed.ok()) return kExitInput;
    if (!coherence) return kExitOk;

    std::set<DlAxiom> axioms;
    for (const auto& [oid, component] : parsed.collection.components())
        for (const auto& s : component.oid_statements) axioms.insert(translate(s));
    const Tbox tbox(std::move(axioms));
    bool incoherent = false;
    for (const auto& [oid, component] : parsed.collection.components()) {
        switch (is_satisfiable(ConceptExpr::atom(oid), tbox, flags.node_budget)) {
            case Verdict::True:
                break;
            case Verdict::False:
                out << "ERROR " << file << ':' << component.first_line << ":1 incoherent "
                    << oid.render() << " is unsatisfiable in the collection theory\n";
                incoherent = true;
                break;
            case Verdict::ResourceLimit:
                out << "ERROR " << file << ':' << component.first_line
                    << ":1 budget node budget exhausted while checking " << oid.render() << '\n';
                return kExitInput;
        }
    }
    return incoherent ? kExitIncoherent : kExitOk;
}

struct EbmsFlags {
    std::string oid_text;
    bool asserted_only = false;
    bool show_theory = false;
    bool report = false;
    bool json = false;
};

int cmd_ebms(const std::string& file, const EbmsFlags& ebms_flags, const CommonFlags& flags,
             std::ostream& out, std::ostream& err) {
    const auto collection = load(file, flags.parse_options(), out);
    if (!collection) return kExitInput;
    const auto oid = Oid::parse(ebms_flags.oid_text);
    if (!oid) {
        err << "error: '" << ebms_flags.oid_text << "' is not a valid OID\n";
        return kExitInput;
    }
    if (!collection->knows(*oid)) {
        err << "error: unknown OID " << oid->render() << '\n';
        return kExitInput;
    }

    const AnalyticTheory theory = analytic_theory(*collection, *oid);
    const Ebms result = ebms(*collection, *oid, flags.meaning_options(ebms_flags.report));

    if (ebms_flags.json) {
        nlohmann::json j = to_json(result);
        if (ebms_flags.show_theory) j["theory"] = to_json(theory);
        if (ebms_flags.asserted_only) {
            j.erase("inferred");
            j.erase("non_reverse_translatable");
        }
        out << j.dump(2) << '\n';
    } else {
        out << render_ebms(result, theory,
                           EbmsRenderOptions{ebms_flags.show_theory, ebms_flags.asserted_only});
    }
    return result.coherent ? kExitOk : kExitIncoherent;
}

int cmd_diff(const std::string& old_file, const std::string& new_file,
             const std::string& oid_text, bool json, const CommonFlags& flags, std::ostream& out,
             std::ostream& err) {
    const auto old_collection = load(old_file, flags.parse_options(), out);
    const auto new_collection = load(new_file, flags.parse_options(), out);
    if (!old_collection || !new_collection) return kExitInput;

    std::set<Oid> oids;
    if (!oid_text.empty()) {
        const auto oid = Oid::parse(oid_text);
        if (!oid) {
            err << "error: '" << oid_text << "' is not a valid OID\n";
            return kExitInput;
        }
        oids.insert(*oid);
    } else {
        for (const auto& [oid, component] : old_collection->components()) oids.insert(oid);
        for (const auto& [oid, component] : new_collection->components()) oids.insert(oid);
    }

    bool meaning_change = false;
    nlohmann::json reports = nlohmann::json::array();
    bool first = true;
    for (const auto& oid : oids) {
        const DiffReport report =
            diff_components(*old_collection, *new_collection, oid, flags.meaning_options());
        meaning_change = meaning_change || report.kind == DiffKind::MeaningAffecting ||
                         report.kind == DiffKind::Incoherent;
        if (json) {
            reports.push_back(to_json(report));
        } else {
            if (!std::exchange(first, false)) out << '\n';
            out << render_diff(report);
        }
    }
    if (json) out << nlohmann::json{{"reports", std::move(reports)}}.dump(2) << '\n';
    return meaning_change ? kExitMeaningChange : kExitOk;
}

int cmd_import_check(const std::string& base_file, const std::string& import_file, bool json,
                     const CommonFlags& flags, std::ostream& out) {
    const auto base = load(base_file, flags.parse_options(), out);
    const auto incoming = load(import_file, flags.parse_options(), out);
    if (!base || !incoming) return kExitInput;

    const ImpactReport report = import_impact(*base, *incoming, flags.meaning_options());
    if (json) {
        out << to_json(report).dump(2) << '\n';
    } else {
        std::set<Oid> considered = report.imported;
        for (const auto& [oid, component] : base->components()) considered.insert(oid);
        out << render_impact(report, considered);
    }
    switch (report.verdict) {
        case ImpactVerdict::NoChange:
        case ImpactVerdict::Extended:
            return kExitOk;
        case ImpactVerdict::MeaningAltered:
            return kExitMeaningChange;
        case ImpactVerdict::IncoherenceIntroduced:
            return kExitIncoherent;
    }
    return kExitOk;
}

int cmd_export(const std::string& file, const std::string& format, const std::string& base_iri,
               const CommonFlags& flags, std::ostream& out, std::ostream& err) {
    const auto collection = load(file, flags.parse_options(), out);
    if (!collection) return kExitInput;
    if (format == "owl-functional") {
        out << export_owl_functional(*collection, ExportOptions{base_iri});
        return kExitOk;
    }
    if (format == "json") {
        out << to_json(*collection).dump(2) << '\n';
        return kExitOk;
    }
    err << "error: unknown export format '" << format << "'\n";
    return kExitInput;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Ontological component toolkit"};
    app.require_subcommand(1);

    std::string file;
    std::string second_file;
    CommonFlags flags;
    bool coherence = false;
    EbmsFlags ebms_flags;
    std::string oid_text;
    bool json = false;
    std::string format = "owl-functional";
    std::string base_iri = "http://example.org/ocs";

    CLI::App* validate = app.add_subcommand("validate", "Parse a collection and report problems");
    validate->add_option("file", file, "Collection file (.ocs)")->required();
    validate->add_flag("--coherence", coherence, "Also check every component OID for satisfiability");
    add_common(validate, flags);

    CLI::App* ebms_cmd =
        app.add_subcommand("ebms", "Compute the entailment-based meaning specification of an OID");
    ebms_cmd->add_option("file", file, "Collection file (.ocs)")->required();
    ebms_cmd->add_option("--oid", ebms_flags.oid_text, "Subject OID")->required();
    ebms_cmd->add_flag("--asserted-only", ebms_flags.asserted_only,
                       "Print only the asserted statements");
    ebms_cmd->add_flag("--show-theory", ebms_flags.show_theory,
                       "Print the analytic theory and its primitives first");
    ebms_cmd->add_flag("--report", ebms_flags.report,
                       "Also report entailments that cannot become OID statements");
    ebms_cmd->add_flag("--json", ebms_flags.json, "Emit JSON");
    add_common(ebms_cmd, flags);

    CLI::App* diff = app.add_subcommand("diff", "Compare components across two collection versions");
    diff->add_option("old", file, "Old version (.ocs)")->required();
    diff->add_option("new", second_file, "New version (.ocs)")->required();
    diff->add_option("--oid", oid_text, "Compare only this OID");
    diff->add_flag("--json", json, "Emit JSON");
    add_common(diff, flags);

    CLI::App* import_check =
        app.add_subcommand("import-check", "Check what importing components does to meanings");
    import_check->add_option("base", file, "Receiving collection (.ocs)")->required();
    import_check->add_option("import", second_file, "Collection to import (.ocs)")->required();
    import_check->add_flag("--json", json, "Emit JSON");
    add_common(import_check, flags);

    CLI::App* export_cmd = app.add_subcommand("export", "Export a collection");
    export_cmd->add_option("file", file, "Collection file (.ocs)")->required();
    export_cmd->add_option("--format", format, "owl-functional or json")->capture_default_str();
    export_cmd->add_option("--base", base_iri, "Base IRI for exported identifiers")
        ->capture_default_str();
    add_common(export_cmd, flags);

    std::vector<const char*> argv;
    argv.push_back("ocs");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }

    try {
        if (validate->parsed()) return cmd_validate(file, coherence, flags, out);
        if (ebms_cmd->parsed()) return cmd_ebms(file, ebms_flags, flags, out, err);
        if (diff->parsed())
            return cmd_diff(file, second_file, oid_text, json, flags, out, err);
        if (import_check->parsed()) return cmd_import_check(file, second_file, json, flags, out);
        if (export_cmd->parsed()) return cmd_export(file, format, base_iri, flags, out, err);
    } catch (const IoError& e) {
        err << "error: " << e.message << '\n';
        return kExitIo;
    } catch (const ReasonerLimitError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}

} // namespace ocs::cli
