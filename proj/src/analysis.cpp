#include "ocs/analysis.hpp"

#include <algorithm>

#include "ocs/parse.hpp"

namespace ocs {

const char* to_string(ImpactVerdict v) noexcept {
    switch (v) {
        case ImpactVerdict::NoChange: return "NoChange";
        case ImpactVerdict::Extended: return "Extended";
        case ImpactVerdict::MeaningAltered: return "MeaningAltered";
        case ImpactVerdict::IncoherenceIntroduced: return "IncoherenceIntroduced";
    }
    return "NoChange";
}

const char* to_string(DiffKind k) noexcept {
    switch (k) {
        case DiffKind::Identical: return "Identical";
        case DiffKind::AnnotationOnly: return "AnnotationOnly";
        case DiffKind::SyntheticOrSufficientOnly: return "SyntheticOrSufficientOnly";
        case DiffKind::MeaningAffecting: return "MeaningAffecting";
        case DiffKind::Incoherent: return "Incoherent";
    }
    return "Identical";
}

namespace {

std::set<OidStatement> difference(const std::set<OidStatement>& a,
                                  const std::set<OidStatement>& b) {
    std::set<OidStatement> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.end()));
    return out;
}

std::set<OcStatement> difference(const std::set<OcStatement>& a, const std::set<OcStatement>& b) {
    std::set<OcStatement> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.end()));
    return out;
}

} // namespace

ImpactVerdict EbmsDelta::verdict() const {
    if (before.coherent && !after.coherent) return ImpactVerdict::IncoherenceIntroduced;
    if (!removed.empty()) return ImpactVerdict::MeaningAltered;
    if (!added.empty()) return ImpactVerdict::Extended;
    return ImpactVerdict::NoChange;
}

ImpactReport import_impact(const Collection& base,
                           const std::vector<OntologicalComponent>& incoming,
                           const MeaningOptions& options) {
    ImpactReport report;

    Collection merged = base;
    Collection source; // the incoming components on their own
    for (const auto& component : incoming) {
        report.imported.insert(component.oid);
        source.add(component);
        if (const OntologicalComponent* existing = base.find(component.oid)) {
            for (const auto& incoming_stmt : component.oid_statements) {
                if (incoming_stmt.condition() != Condition::NSC) continue;
                for (const auto& base_stmt : existing->oid_statements)
                    if (base_stmt.condition() == Condition::NSC && !(base_stmt == incoming_stmt))
                        report.conflicts.push_back(
                            NscConflict{component.oid, base_stmt, incoming_stmt});
            }
        }
        merged.add(component);
    }

    const auto record = [&](const Oid& oid, Ebms before, Ebms after) {
        EbmsDelta delta{std::move(before), std::move(after), {}, {}};
        delta.added = difference(delta.after.total(), delta.before.total());
        delta.removed = difference(delta.before.total(), delta.after.total());
        if (delta.before.coherent && !delta.after.coherent)
            report.coherence_breaks.insert(oid);
        report.verdict = std::max(report.verdict, delta.verdict());
        report.affected.emplace(oid, std::move(delta));
    };

    for (const auto& oid : report.imported) {
        // A brand-new component is judged against its own source closure; a
        // merge into an existing component is judged against the base, which
        // is the receiving element here.
        const Collection& before_collection = base.find(oid) ? base : source;
        record(oid, ebms(before_collection, oid, options), ebms(merged, oid, options));
    }

    for (const auto& [oid, component] : base.components()) {
        if (report.affected.contains(oid)) continue;
        const auto before_theory = analytic_theory(base, oid);
        const auto after_theory = analytic_theory(merged, oid);
        if (before_theory.statements == after_theory.statements) continue;
        record(oid, ebms(base, oid, options), ebms(merged, oid, options));
    }

    // Drop no-op entries so NoChange reports stay empty.
    for (auto it = report.affected.begin(); it != report.affected.end();) {
        if (it->second.verdict() == ImpactVerdict::NoChange)
            it = report.affected.erase(it);
        else
            ++it;
    }
    return report;
}

ImpactReport import_impact(const Collection& base, const Collection& incoming,
                           const MeaningOptions& options) {
    std::vector<OntologicalComponent> components;
    components.reserve(incoming.components().size());
    for (const auto& [oid, component] : incoming.components()) components.push_back(component);
    return import_impact(base, components, options);
}

DiffReport diff_components(const Collection& old_version, const Collection& new_version,
                           const Oid& oid, const MeaningOptions& options) {
    DiffReport report;
    report.oid = oid;

    static const OntologicalComponent empty_component;
    const OntologicalComponent* old_component = old_version.find(oid);
    const OntologicalComponent* new_component = new_version.find(oid);
    if (!old_component && new_component)
        report.detail.push_back("component added in new version");
    if (old_component && !new_component)
        report.detail.push_back("component removed in new version");
    const OntologicalComponent& old_c = old_component ? *old_component : empty_component;
    const OntologicalComponent& new_c = new_component ? *new_component : empty_component;

    report.oc_added = difference(new_c.oc_statements, old_c.oc_statements);
    report.oc_removed = difference(old_c.oc_statements, new_c.oc_statements);
    const bool oc_differ = !report.oc_added.empty() || !report.oc_removed.empty();
    const bool oid_differ = old_c.oid_statements != new_c.oid_statements;

    const Ebms old_ebms = ebms(old_version, oid, options);
    const Ebms new_ebms = ebms(new_version, oid, options);
    report.ebms_added = difference(new_ebms.total(), old_ebms.total());
    report.ebms_removed = difference(old_ebms.total(), new_ebms.total());
    const bool ebms_differ = !report.ebms_added.empty() || !report.ebms_removed.empty() ||
                             old_ebms.coherent != new_ebms.coherent;

    if (!old_ebms.coherent || !new_ebms.coherent) {
        report.kind = DiffKind::Incoherent;
        if (!old_ebms.coherent) report.detail.push_back("old version is incoherent");
        if (!new_ebms.coherent) report.detail.push_back("new version is incoherent");
    } else if (ebms_differ) {
        report.kind = DiffKind::MeaningAffecting;
        report.detail.push_back("meaning specification changed");
    } else if (oid_differ) {
        report.kind = DiffKind::SyntheticOrSufficientOnly;
        report.detail.push_back(
            "oid statements differ but the meaning specification is unchanged");
    } else if (oc_differ) {
        report.kind = DiffKind::AnnotationOnly;
        report.detail.push_back("only annotations differ");
    } else {
        report.kind = DiffKind::Identical;
    }

    const auto deprecated = [](const OntologicalComponent& component) {
        for (const auto& s : component.oc_statements)
            if (s.kind() == OcStatement::Kind::Meta && s.key() == "status" &&
                s.value() == "deprecated")
                return true;
        return false;
    };
    const bool was_deprecated = deprecated(old_c);
    const bool is_deprecated = deprecated(new_c);
    if (!was_deprecated && is_deprecated) report.detail.push_back("component deprecated");
    if (was_deprecated && !is_deprecated) report.detail.push_back("deprecation lifted");

    return report;
}

} // namespace ocs
