#include "gpi/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "gpi/errors.hpp"
#include "gpi/normal_lattice.hpp"
#include "gpi/primes.hpp"
#include "gpi/structure.hpp"

namespace gpi {

std::vector<TheoremReport> verify_group(const Group &G, const std::string &name,
                                        const VerifyOptions &options) {
  VerifyContext ctx(G, name, options);
  std::vector<TheoremReport> out;
  const auto &normals = normal_lattice(G).members();
  const PrimeSet primes = prime_set(G.order());
  for (std::uint64_t p : primes.primes()) {
    out.push_back(verify_T13(ctx, p));
    out.push_back(verify_T14(ctx, p));
    out.push_back(verify_CLS(ctx, p));
    out.push_back(verify_L28(ctx, p));
    for (const auto &E : normals) {
      if (E.order() % p != 0)
        continue;
      out.push_back(verify_T11(ctx, E, p));
      out.push_back(verify_T12(ctx, E, p));
    }
    for (const auto &P : normals)
      if (!P.is_trivial() && is_power_of(P.order(), p))
        out.push_back(verify_L214(ctx, P));
  }
  return out;
}

CorpusSummary summarize(const std::vector<TheoremReport> &reports) {
  CorpusSummary s;
  s.reports = reports.size();
  for (const auto &r : reports) {
    s.hypotheses_held += r.hypothesis == Status::holds;
    s.conclusions_held += r.conclusion == Status::holds;
    s.not_evaluated += r.hypothesis == Status::not_evaluated ||
                       r.conclusion == Status::not_evaluated;
    s.violations += r.violation();
  }
  return s;
}

CorpusResult run_corpus(const std::vector<CatalogEntry> &entries,
                        const CorpusConfig &config) {
  std::vector<const CatalogEntry *> selected;
  for (const auto &e : entries)
    if (config.filter.empty() || e.name.find(config.filter) != std::string::npos)
      selected.push_back(&e);

  std::vector<std::vector<TheoremReport>> per_entry(selected.size());
  std::vector<std::exception_ptr> errors(selected.size());
  auto work = [&](std::size_t i) {
    const CatalogEntry &entry = *selected[i];
    try {
      Group G = construct(entry, config.limits);
      per_entry[i] = verify_group(G, entry.name, config.verify);
    } catch (const ResourceError &e) {
      TheoremReport r;
      r.group = entry.name;
      r.detail = e.what();
      per_entry[i] = {r};
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };

  const std::size_t jobs = std::max<std::size_t>(1, config.jobs);
  if (jobs == 1 || selected.size() < 2) {
    for (std::size_t i = 0; i < selected.size(); ++i)
      work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < std::min(jobs, selected.size()); ++t)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next++) < selected.size();)
          work(i);
      });
  }

  for (const auto &error : errors)
    if (error)
      std::rethrow_exception(error);

  CorpusResult result;
  for (auto &reports : per_entry) {
    std::stable_sort(reports.begin(), reports.end(),
                     [](const TheoremReport &a, const TheoremReport &b) {
                       return std::pair(a.theorem, a.prime) <
                              std::pair(b.theorem, b.prime);
                     });
    for (auto &r : reports)
      result.reports.push_back(std::move(r));
  }
  result.summary = summarize(result.reports);
  result.summary.groups = selected.size();
  return result;
}

} // namespace gpi
