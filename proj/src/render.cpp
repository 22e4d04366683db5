#include "ocs/render.hpp"

#include "ocs/parse.hpp"

namespace ocs {

namespace {

void statement_lines(std::string& out, const char* prefix, const std::set<OidStatement>& set) {
    for (const auto& s : set) {
        out += prefix;
        out += serialize_statement(s);
        out.push_back('\n');
    }
}

void list_section(std::string& out, const char* key, const std::set<OidStatement>& set) {
    if (set.empty()) return;
    out += key;
    out += ":\n";
    for (const auto& s : set) {
        out += "  ";
        out += serialize_statement(s);
        out.push_back('\n');
    }
}

void list_section(std::string& out, const char* key, const std::set<OcStatement>& set) {
    if (set.empty()) return;
    out += key;
    out += ":\n";
    for (const auto& s : set) {
        out += "  ";
        out += serialize_statement(s);
        out.push_back('\n');
    }
}

} // namespace

std::string render_ebms(const Ebms& e, const AnalyticTheory& theory,
                        const EbmsRenderOptions& options) {
    std::string out;
    if (options.show_theory) {
        statement_lines(out, "T: ", theory.statements);
        for (const auto& oid : theory.primitives) {
            out += "P: ";
            out += oid.render();
            out.push_back('\n');
        }
    }
    statement_lines(out, "A: ", e.asserted);
    if (!e.coherent) {
        out += "INCOHERENT\n";
        return out;
    }
    if (options.asserted_only) return out;
    statement_lines(out, "I: ", e.inferred);
    for (const auto& a : e.non_reverse_translatable) {
        out += "N: ";
        out += serialize_axiom(a);
        out.push_back('\n');
    }
    return out;
}

std::string render_diff(const DiffReport& r) {
    std::string out;
    out += "oid: " + r.oid.render() + "\n";
    out += "kind: ";
    out += to_string(r.kind);
    out.push_back('\n');
    list_section(out, "ebms_added", r.ebms_added);
    list_section(out, "ebms_removed", r.ebms_removed);
    list_section(out, "oc_added", r.oc_added);
    list_section(out, "oc_removed", r.oc_removed);
    for (const auto& line : r.detail) out += "detail: " + line + "\n";
    return out;
}

std::string render_impact(const ImpactReport& r, const std::set<Oid>& considered) {
    std::string out;
    out += "verdict: ";
    out += to_string(r.verdict);
    out.push_back('\n');
    if (!r.imported.empty()) {
        out += "imported:";
        for (const auto& oid : r.imported) out += " " + oid.render();
        out.push_back('\n');
    }
    if (!r.coherence_breaks.empty()) {
        out += "coherence_breaks:";
        for (const auto& oid : r.coherence_breaks) out += " " + oid.render();
        out.push_back('\n');
    }
    for (const auto& c : r.conflicts)
        out += "CONFLICT " + c.subject.render() + ": " + serialize_statement(c.base) +
               " (base) vs " + serialize_statement(c.incoming) + " (incoming)\n";
    for (const auto& oid : considered) {
        out.push_back('\n');
        out += "oid: " + oid.render() + "\n";
        const auto it = r.affected.find(oid);
        if (it == r.affected.end()) {
            out += "status: NoChange\n";
            continue;
        }
        out += "status: ";
        out += to_string(it->second.verdict());
        out.push_back('\n');
        list_section(out, "added", it->second.added);
        list_section(out, "removed", it->second.removed);
    }
    return out;
}

} // namespace ocs
