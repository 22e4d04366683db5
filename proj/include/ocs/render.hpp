// ocs/render.hpp — plain-text renderings of EBMS results and analysis
// reports.  Output is deterministic (canonical statement order throughout)
// so golden files stay byte-stable.

#ifndef OCS_RENDER_HPP
#define OCS_RENDER_HPP

#include <set>
#include <string>

#include "ocs/analysis.hpp"
#include "ocs/meaning.hpp"

namespace ocs {

struct EbmsRenderOptions {
    bool show_theory = false;
    bool asserted_only = false;
};

// `T:`/`P:` theory lines (optional), `A:` asserted, `I:` inferred, `N:`
// non-reverse-translatable axioms, and an INCOHERENT banner when applicable.
[[nodiscard]] std::string render_ebms(const Ebms& e, const AnalyticTheory& theory,
                                      const EbmsRenderOptions& options = {});

// One key: value block per report; list values are indented under their key.
[[nodiscard]] std::string render_diff(const DiffReport& r);

// Header lines followed by one block per considered OID; OIDs without a
// recorded delta render as NoChange.
[[nodiscard]] std::string render_impact(const ImpactReport& r, const std::set<Oid>& considered);

} // namespace ocs

#endif // OCS_RENDER_HPP
