#pragma once

#include <json.hpp>

#include "gpi/corpus.hpp"
#include "gpi/pi_property.hpp"

namespace gpi {

inline constexpr const char *kReportSchema = "gpi-report/1";

/// {"order": n, "generators": [...]}: cycle lists for permutation-backed
/// groups, element ids for table-backed ones.
nlohmann::json subgroup_to_json(const Group &G, const Subgroup &H);
/// Witness: series terms plus per-factor diagnostics. Refusal: the dead
/// states of the search.
nlohmann::json verdict_to_json(const Group &G, const Subgroup &H,
                               const PiVerdict &verdict);
nlohmann::json report_to_json(const TheoremReport &report);
/// Top-level document carrying "schema".
nlohmann::json reports_document(const std::vector<TheoremReport> &reports,
                                const CorpusSummary &summary);

} // namespace gpi
