#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gpi/group.hpp"
#include "gpi/pi_property.hpp"
#include "gpi/series.hpp"

namespace gpi {

enum class TheoremId { T11, T12, T13, T14, CLS, L28, L214 };

/// "T1.1", "CLS4.4", "L2.14", ...
std::string theorem_label(TheoremId id);
/// Accepts the CLI spellings t11 | t12 | t13 | t14 | cls | l28 | l214.
std::optional<TheoremId> parse_theorem_id(std::string_view text);

enum class Status { holds, fails, not_applicable, not_evaluated };
std::string status_name(Status s);

struct FailingSubgroup {
  std::string family; ///< which hypothesis clause it came from
  std::uint64_t order = 1;
  std::vector<ElementId> generators;
  std::string description;
};

struct TheoremReport {
  TheoremId theorem = TheoremId::T11;
  std::string group;
  std::uint64_t prime = 0;
  std::string subject; ///< E or P for the theorems that take one
  Status hypothesis = Status::not_evaluated;
  Status conclusion = Status::not_evaluated;
  std::vector<FailingSubgroup> failing;
  std::size_t subgroups_checked = 0;
  std::string detail;

  bool violation() const {
    return hypothesis == Status::holds && conclusion == Status::fails;
  }
};

struct VerifyOptions {
  bool exhaustive = false;
  TieOrder tie = TieOrder::canonical;
  /// Sylow subgroups are replaced by their conjugate under this element id,
  /// taken modulo |G|.
  ElementId sylow_conjugator = 0;
};

/// Per-group state shared by the verifiers: memoized witness verdicts and
/// hypercentres. Not thread-safe; one context per worker.
class VerifyContext {
public:
  VerifyContext(const Group &G, std::string name, VerifyOptions options = {});
  ~VerifyContext();
  VerifyContext(const VerifyContext &) = delete;
  VerifyContext &operator=(const VerifyContext &) = delete;

  const Group &group() const { return G_; }
  const std::string &name() const { return name_; }
  const VerifyOptions &options() const { return options_; }

  bool has_witness(const Subgroup &H);
  const Subgroup &up_hypercenter(std::uint64_t p);
  /// Sylow p-subgroup of E (of G when E is omitted), conjugated per options.
  Subgroup sylow(std::uint64_t p);
  Subgroup sylow(const Subgroup &E, std::uint64_t p);

private:
  struct Memo;
  const Group &G_;
  std::string name_;
  VerifyOptions options_;
  std::unique_ptr<Memo> memo_;
};

/// E normal in G. Hypothesis: every maximal subgroup of P ∈ Syl_p(E) has a
/// witness in G. Conclusion: E ≤ Z_{U_p}(G) or |E|_p = p.
TheoremReport verify_T11(VerifyContext &ctx, const Subgroup &E,
                         std::uint64_t p);
/// Hypothesis: cyclic subgroups of P of order p, and of order 4 when p = 2
/// and P is not quaternion-free, have witnesses. Conclusion: E ≤ Z_{U_p}(G).
TheoremReport verify_T12(VerifyContext &ctx, const Subgroup &E,
                         std::uint64_t p);
/// Hypothesis: |P| ≥ p² and every 2-minimal subgroup of P has a witness.
/// Conclusion: G is p-soluble of p-length at most 1.
TheoremReport verify_T13(VerifyContext &ctx, std::uint64_t p);
/// Hypothesis: |P| ≥ p³, every 2-maximal subgroup of P has a witness, and
/// when p = 2 and P ≅ Q8 so does every cyclic subgroup of order 4.
/// Conclusion as for T1.3.
TheoremReport verify_T14(VerifyContext &ctx, std::uint64_t p);
/// Hypothesis: |P| ≥ p² and every 2-maximal subgroup of P has a witness.
/// Conclusion: G is p-soluble, or |P| = p², or p = 2 and P ≅ Q8.
TheoremReport verify_CLS(VerifyContext &ctx, std::uint64_t p);
/// Hypothesis: P ∈ Syl_p(G) has a witness. Conclusion: G is p-soluble.
TheoremReport verify_L28(VerifyContext &ctx, std::uint64_t p);
/// P a normal p-subgroup. Both sides of P ≤ Z_∞(G) ⇔ O^p(G) ≤ C_G(P) are
/// computed; the conclusion holds when they agree. InputError otherwise.
TheoremReport verify_L214(VerifyContext &ctx, const Subgroup &P);

std::string describe_subgroup(const Group &G, const Subgroup &H);

} // namespace gpi
