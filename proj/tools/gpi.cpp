#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gpi/corpus.hpp"
#include "gpi/description.hpp"
#include "gpi/errors.hpp"
#include "gpi/formation.hpp"
#include "gpi/normal_lattice.hpp"
#include "gpi/primes.hpp"
#include "gpi/report_json.hpp"
#include "gpi/structure.hpp"
#include "gpi/sylow.hpp"

using namespace gpi;
using nlohmann::json;

namespace {

constexpr int kViolation = 1;
constexpr int kUsage = 2;

json info_json(const Group &G) {
  json out{{"order", G.order()},
           {"degree", G.degree()},
           {"backend", G.backend() == Group::Backend::table ? "table"
                                                            : "permutation"},
           {"normal_subgroups", normal_lattice(G).size()},
           {"soluble", is_soluble(G)},
           {"supersoluble", is_supersoluble(G)},
           {"fitting_order", fitting(G).order()},
           {"socle_order", socle(G).order()},
           {"hypercenter_order", hypercenter(G).order()}};
  json series = json::array();
  for (const auto &f : one_chief_series(G).factors)
    series.push_back({{"order", f.order}, {"abelian", f.abelian}});
  out["chief_factors"] = series;
  json primes = json::array();
  const PrimeSet ps = prime_set(G.order());
  for (std::uint64_t p : ps.primes()) {
    json entry{{"p", p},
               {"sylow_order", p_part(G.order(), p)},
               {"p_soluble", is_p_soluble(G, p)},
               {"p_supersoluble", is_p_supersoluble(G, p)}};
    if (entry["p_soluble"].get<bool>())
      entry["p_length"] = p_length(G, p);
    primes.push_back(entry);
  }
  out["primes"] = primes;
  return out;
}

std::vector<Subgroup> check_targets(const Group &G, std::uint64_t p,
                                    const std::string &spec) {
  const std::string prefix = "family:";
  if (spec.rfind(prefix, 0) != 0) {
    auto gens = elements_from_text(G, spec);
    return {G.generate(gens)};
  }
  const std::string family = spec.substr(prefix.size());
  const Subgroup P = sylow_subgroup(G, p);
  if (family == "sylow")
    return {P};
  if (family == "2min")
    return two_minimal_subgroups(G, P);
  if (family == "2max")
    return two_maximal_subgroups(G, P);
  if (family == "cyc4")
    return cyclic_order4_subgroups(G, P);
  throw InputError("unknown subgroup family " + family +
                   " (expected 2min, 2max, cyc4 or sylow)");
}

void print_verdict(const Group &G, const Subgroup &H, const PiVerdict &v) {
  std::cout << describe_subgroup(G, H) << ": ";
  if (const auto *w = std::get_if<PiWitness>(&v)) {
    std::cout << "witness, series orders";
    for (const auto &T : w->series.terms)
      std::cout << ' ' << T.order();
    std::cout << '\n';
    for (const auto &f : w->per_factor)
      std::cout << "  factor " << f.factor_index << " order " << f.factor_order
                << " |A| " << f.intersection_order << " index "
                << f.normalizer_index << (f.pass ? " ok" : " FAIL") << '\n';
  } else {
    const auto &r = std::get<PiRefusal>(v);
    std::cout << "refusal, " << r.explored_states.size()
              << " dead normal subgroups explored\n";
  }
}

void print_report(const TheoremReport &r) {
  std::cout << theorem_label(r.theorem) << ' ' << r.group << " p=" << r.prime;
  if (!r.subject.empty())
    std::cout << ' ' << r.subject;
  std::cout << ": hypothesis " << status_name(r.hypothesis) << ", conclusion "
            << status_name(r.conclusion);
  if (r.violation())
    std::cout << ", VIOLATION";
  if (!r.detail.empty())
    std::cout << " (" << r.detail << ')';
  std::cout << '\n';
  for (const auto &f : r.failing)
    std::cout << "  no witness [" << f.family << "] " << f.description << '\n';
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Partial Pi-property checker for finite permutation groups"};
  app.require_subcommand(1);

  std::string group_arg, subgroup_arg = "family:sylow", theorem_arg,
                         normal_arg, filter, json_out;
  std::uint64_t prime = 0;
  bool as_json = false, exhaustive = false;
  std::size_t jobs = 1;

  auto *info = app.add_subcommand("info", "Structural summary of a group");
  info->add_option("group", group_arg,
                   "Catalog name, JSON description, or JSON file")
      ->required();
  info->add_flag("--json", as_json);

  auto *check = app.add_subcommand("check", "Search for a partial Pi witness");
  check->add_option("--group", group_arg)->required();
  check->add_option("--prime", prime)->required();
  check->add_option("--subgroup", subgroup_arg,
                    "JSON element list, or family:2min|2max|cyc4|sylow");
  check->add_flag("--json", as_json);

  auto *theorem = app.add_subcommand("theorem", "Verify one theorem on a group");
  theorem->add_option("--id", theorem_arg, "t11|t12|t13|t14|cls|l28|l214")
      ->required();
  theorem->add_option("--group", group_arg)->required();
  theorem->add_option("--prime", prime);
  theorem->add_option("--normal", normal_arg,
                      "Generators of E (t11, t12) or P (l214)");
  theorem->add_flag("--exhaustive", exhaustive);
  theorem->add_flag("--json", as_json);

  auto *corpus = app.add_subcommand("corpus", "Verify every theorem on the catalog");
  corpus->add_option("--filter", filter, "Substring of catalog names");
  corpus->add_option("--json", json_out, "Write the report document here");
  corpus->add_option("--jobs", jobs);
  corpus->add_flag("--exhaustive", exhaustive);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*info) {
      Group G = group_from_argument(group_arg);
      json out = info_json(G);
      if (as_json) {
        std::cout << out.dump(2) << '\n';
      } else {
        std::cout << "order " << out["order"] << ", degree " << out["degree"]
                  << " (" << out["backend"].get<std::string>() << ")\n"
                  << "normal subgroups " << out["normal_subgroups"]
                  << ", soluble " << out["soluble"] << ", supersoluble "
                  << out["supersoluble"] << '\n'
                  << "|F(G)| " << out["fitting_order"] << ", |Soc(G)| "
                  << out["socle_order"] << ", |Z_inf(G)| "
                  << out["hypercenter_order"] << '\n'
                  << "chief factor orders";
        for (const auto &f : out["chief_factors"])
          std::cout << ' ' << f["order"];
        std::cout << '\n';
        for (const auto &p : out["primes"]) {
          std::cout << "p=" << p["p"] << ": |P| " << p["sylow_order"]
                    << ", p-soluble " << p["p_soluble"];
          if (p.contains("p_length"))
            std::cout << ", p-length " << p["p_length"];
          std::cout << ", p-supersoluble " << p["p_supersoluble"] << '\n';
        }
      }
      return 0;
    }

    if (*check) {
      if (!is_prime(prime))
        throw InputError(std::to_string(prime) + " is not prime");
      Group G = group_from_argument(group_arg);
      json out{{"schema", kReportSchema}, {"results", json::array()}};
      for (const auto &H : check_targets(G, prime, subgroup_arg)) {
        PiVerdict v = satisfies_partial_pi(G, H);
        if (as_json)
          out["results"].push_back(verdict_to_json(G, H, v));
        else
          print_verdict(G, H, v);
      }
      if (as_json)
        std::cout << out.dump(2) << '\n';
      return 0;
    }

    if (*theorem) {
      auto id = parse_theorem_id(theorem_arg);
      if (!id)
        throw InputError("unknown theorem id " + theorem_arg);
      Group G = group_from_argument(group_arg);
      VerifyOptions options;
      options.exhaustive = exhaustive;
      VerifyContext ctx(G, argument_display_name(group_arg), options);
      const bool needs_prime = *id != TheoremId::L214 || normal_arg.empty();
      if (needs_prime && !is_prime(prime))
        throw InputError("--prime is required and must be prime");
      Subgroup subject = normal_arg.empty()
                             ? G.whole()
                             : G.generate(elements_from_text(G, normal_arg));
      TheoremReport r;
      switch (*id) {
      case TheoremId::T11: r = verify_T11(ctx, subject, prime); break;
      case TheoremId::T12: r = verify_T12(ctx, subject, prime); break;
      case TheoremId::T13: r = verify_T13(ctx, prime); break;
      case TheoremId::T14: r = verify_T14(ctx, prime); break;
      case TheoremId::CLS: r = verify_CLS(ctx, prime); break;
      case TheoremId::L28: r = verify_L28(ctx, prime); break;
      case TheoremId::L214:
        r = verify_L214(ctx, normal_arg.empty()
                                 ? o_lower(G, CoreKind::p, prime)
                                 : subject);
        break;
      }
      if (as_json)
        std::cout << reports_document({r}, summarize({r})).dump(2) << '\n';
      else
        print_report(r);
      return r.violation() ? kViolation : 0;
    }

    if (*corpus) {
      CorpusConfig config;
      config.filter = filter;
      config.jobs = jobs;
      config.verify.exhaustive = exhaustive;
      CorpusResult result = run_corpus(build_catalog(), config);
      for (const auto &r : result.reports)
        if (r.violation() || r.hypothesis == Status::not_evaluated ||
            r.conclusion == Status::not_evaluated)
          print_report(r);
      const auto &s = result.summary;
      std::cout << "groups " << s.groups << ", reports " << s.reports
                << ", hypotheses held " << s.hypotheses_held
                << ", conclusions held " << s.conclusions_held
                << ", not evaluated " << s.not_evaluated << ", violations "
                << s.violations << '\n';
      if (!json_out.empty()) {
        std::ofstream out(json_out);
        if (!out)
          throw InputError("cannot write " + json_out);
        out << reports_document(result.reports, s).dump(2) << '\n';
      }
      return s.violations ? kViolation : 0;
    }
  } catch (const InputError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceError &e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kUsage;
  }
  return 0;
}
