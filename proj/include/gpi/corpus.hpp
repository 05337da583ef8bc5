#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gpi/catalog.hpp"
#include "gpi/theorems.hpp"

namespace gpi {

struct CorpusConfig {
  /// Substring match on entry names; empty selects everything.
  std::string filter;
  std::size_t jobs = 1;
  VerifyOptions verify;
  Limits limits;
};

struct CorpusSummary {
  std::size_t groups = 0;
  std::size_t reports = 0;
  std::size_t hypotheses_held = 0;
  std::size_t conclusions_held = 0;
  std::size_t not_evaluated = 0;
  std::size_t violations = 0;
};

struct CorpusResult {
  std::vector<TheoremReport> reports;
  CorpusSummary summary;
};

/// Every verifier on every group and prime dividing its order: T1.3, T1.4,
/// CLS4.4 and L2.8 once per prime, T1.1 and T1.2 for every nontrivial normal
/// subgroup, L2.14 for every nontrivial normal p-subgroup. A group that
/// cannot be built within the limits yields one not_evaluated report.
CorpusResult run_corpus(const std::vector<CatalogEntry> &entries,
                        const CorpusConfig &config);

/// All reports for one group, in a fixed order.
std::vector<TheoremReport> verify_group(const Group &G, const std::string &name,
                                        const VerifyOptions &options);

CorpusSummary summarize(const std::vector<TheoremReport> &reports);

} // namespace gpi
