// ocs/analysis.hpp — import-impact checking and component-level semantic
// version diffing, both phrased as EBMS comparisons.

#ifndef OCS_ANALYSIS_HPP
#define OCS_ANALYSIS_HPP

#include <map>
#include <string>
#include <vector>

#include "ocs/meaning.hpp"

namespace ocs {

// ── Import impact ───────────────────────────────────────────────────────────

// Ordered by severity; the report's verdict is the per-OID maximum.
enum class ImpactVerdict : std::uint8_t {
    NoChange,
    Extended,
    MeaningAltered,
    IncoherenceIntroduced,
};

[[nodiscard]] const char* to_string(ImpactVerdict v) noexcept;

struct EbmsDelta {
    Ebms before;
    Ebms after;
    std::set<OidStatement> added;
    std::set<OidStatement> removed;

    [[nodiscard]] ImpactVerdict verdict() const;
};

// Two NSC statements on the same subject with different characterizations,
// one on each side of the import.
struct NscConflict {
    Oid subject;
    OidStatement base;
    OidStatement incoming;
};

struct ImpactReport {
    std::set<Oid> imported;
    // New OIDs compare their source closure against the union; OIDs merged
    // into an existing component, and base OIDs whose analytic theory gains
    // statements, compare base against the union.
    std::map<Oid, EbmsDelta> affected;
    std::set<Oid> coherence_breaks;
    std::vector<NscConflict> conflicts;
    ImpactVerdict verdict = ImpactVerdict::NoChange;
};

[[nodiscard]] ImpactReport import_impact(const Collection& base,
                                         const std::vector<OntologicalComponent>& incoming,
                                         const MeaningOptions& options = {});
[[nodiscard]] ImpactReport import_impact(const Collection& base, const Collection& incoming,
                                         const MeaningOptions& options = {});

// ── Version diff ────────────────────────────────────────────────────────────

enum class DiffKind : std::uint8_t {
    Identical,
    AnnotationOnly,
    SyntheticOrSufficientOnly,
    MeaningAffecting,
    Incoherent,
};

[[nodiscard]] const char* to_string(DiffKind k) noexcept;

struct DiffReport {
    Oid oid;
    DiffKind kind = DiffKind::Identical;
    std::set<OidStatement> ebms_added;
    std::set<OidStatement> ebms_removed;
    std::set<OcStatement> oc_added;
    std::set<OcStatement> oc_removed;
    std::vector<std::string> detail;
};

// Compares one OID across two collection versions.  EBMS computation runs
// within each version's own collection: a version's meaning is what its own
// theory licenses.  A side where the OID is absent counts as an empty
// component (surfaced as added/removed in `detail`).
[[nodiscard]] DiffReport diff_components(const Collection& old_version,
                                         const Collection& new_version, const Oid& oid,
                                         const MeaningOptions& options = {});

} // namespace ocs

#endif // OCS_ANALYSIS_HPP
