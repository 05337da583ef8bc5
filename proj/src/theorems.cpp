#include "gpi/theorems.hpp"

#include <map>
#include <sstream>
#include <unordered_map>

#include "gpi/errors.hpp"
#include "gpi/formation.hpp"
#include "gpi/primes.hpp"
#include "gpi/recognize.hpp"
#include "gpi/structure.hpp"
#include "gpi/sylow.hpp"

namespace gpi {

std::string theorem_label(TheoremId id) {
  switch (id) {
  case TheoremId::T11: return "T1.1";
  case TheoremId::T12: return "T1.2";
  case TheoremId::T13: return "T1.3";
  case TheoremId::T14: return "T1.4";
  case TheoremId::CLS: return "CLS4.4";
  case TheoremId::L28: return "L2.8";
  case TheoremId::L214: return "L2.14";
  }
  return "?";
}

std::optional<TheoremId> parse_theorem_id(std::string_view text) {
  static const std::map<std::string_view, TheoremId> names{
      {"t11", TheoremId::T11}, {"t12", TheoremId::T12},
      {"t13", TheoremId::T13}, {"t14", TheoremId::T14},
      {"cls", TheoremId::CLS}, {"l28", TheoremId::L28},
      {"l214", TheoremId::L214}};
  auto it = names.find(text);
  if (it == names.end())
    return std::nullopt;
  return it->second;
}

std::string status_name(Status s) {
  switch (s) {
  case Status::holds: return "holds";
  case Status::fails: return "fails";
  case Status::not_applicable: return "not_applicable";
  case Status::not_evaluated: return "not_evaluated";
  }
  return "?";
}

std::string describe_subgroup(const Group &G, const Subgroup &H) {
  std::ostringstream out;
  out << "order " << H.order() << " <";
  const auto &gens = H.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    out << (i ? ", " : "") << describe_element(G, gens[i]);
  out << ">";
  return out.str();
}

struct VerifyContext::Memo {
  std::unordered_map<std::uint64_t, std::vector<std::pair<Subgroup, bool>>>
      witness;
  std::map<std::uint64_t, Subgroup> hypercenters;
};

VerifyContext::VerifyContext(const Group &G, std::string name,
                             VerifyOptions options)
    : G_(G), name_(std::move(name)), options_(options),
      memo_(std::make_unique<Memo>()) {}

VerifyContext::~VerifyContext() = default;

bool VerifyContext::has_witness(const Subgroup &H) {
  auto &bucket = memo_->witness[H.hash()];
  for (const auto &[S, verdict] : bucket)
    if (S == H)
      return verdict;
  PiSearchOptions search;
  search.tie = options_.tie;
  const bool verdict = gpi::has_witness(satisfies_partial_pi(G_, H, search));
  bucket.emplace_back(H, verdict);
  return verdict;
}

const Subgroup &VerifyContext::up_hypercenter(std::uint64_t p) {
  auto it = memo_->hypercenters.find(p);
  if (it == memo_->hypercenters.end())
    it = memo_->hypercenters
             .emplace(p, f_hypercenter(G_, Formation::U_p(p), options_.tie))
             .first;
  return it->second;
}

Subgroup VerifyContext::sylow(std::uint64_t p) {
  return conjugate(G_, sylow_subgroup(G_, p), options_.sylow_conjugator % G_.order());
}

Subgroup VerifyContext::sylow(const Subgroup &E, std::uint64_t p) {
  return conjugate(G_, sylow_subgroup(G_, E, p), options_.sylow_conjugator % G_.order());
}

namespace {

TheoremReport start(VerifyContext &ctx, TheoremId id, std::uint64_t p) {
  if (!is_prime(p))
    throw InputError(std::to_string(p) + " is not prime");
  TheoremReport r;
  r.theorem = id;
  r.group = ctx.name();
  r.prime = p;
  return r;
}

/// Runs the witness search over one family, appending failures. Returns false
/// on the first failure unless the context is exhaustive.
bool check_family(VerifyContext &ctx, TheoremReport &r, const char *family,
                  const std::vector<Subgroup> &subgroups) {
  bool all = true;
  for (const auto &H : subgroups) {
    ++r.subgroups_checked;
    if (ctx.has_witness(H))
      continue;
    all = false;
    r.failing.push_back({family, H.order(), H.generators(),
                         describe_subgroup(ctx.group(), H)});
    if (!ctx.options().exhaustive)
      return false;
  }
  return all;
}

/// Evaluates a hypothesis body, mapping resource exhaustion to not_evaluated.
template <class F> Status guarded(TheoremReport &r, F &&body) {
  try {
    return body() ? Status::holds : Status::fails;
  } catch (const ResourceError &e) {
    r.detail += std::string(r.detail.empty() ? "" : "; ") + e.what();
    return Status::not_evaluated;
  }
}

void require_normal(const Group &G, const Subgroup &E) {
  if (!is_normal(G, E))
    throw InputError("E (" + describe_subgroup(G, E) + ") is not normal in G");
}

void append(std::string &detail, const std::string &text) {
  detail += (detail.empty() ? "" : "; ") + text;
}

Status p_length_at_most_one(VerifyContext &ctx, TheoremReport &r,
                            std::uint64_t p) {
  return guarded(r, [&] {
    const Group &G = ctx.group();
    if (!is_p_soluble(G, p)) {
      append(r.detail, "not p-soluble");
      return false;
    }
    const std::size_t len = p_length(G, p);
    append(r.detail, "p-length " + std::to_string(len));
    return len <= 1;
  });
}

} // namespace

TheoremReport verify_T11(VerifyContext &ctx, const Subgroup &E,
                         std::uint64_t p) {
  TheoremReport r = start(ctx, TheoremId::T11, p);
  const Group &G = ctx.group();
  require_normal(G, E);
  r.subject = "E = " + describe_subgroup(G, E);
  const std::uint64_t ep = p_part(E.order(), p);
  if (ep == 1) {
    r.hypothesis = r.conclusion = Status::not_applicable;
    r.detail = "p does not divide |E|";
    return r;
  }
  r.hypothesis = guarded(r, [&] {
    const Subgroup P = ctx.sylow(E, p);
    return check_family(ctx, r, "maximal", maximal_subgroups_p_group(G, P));
  });
  r.conclusion = guarded(r, [&] {
    if (ep == p) {
      append(r.detail, "|E|_p = p");
      return true;
    }
    const bool inside = E.is_subset_of(ctx.up_hypercenter(p));
    append(r.detail, inside ? "E <= Z_Up(G)" : "E not in Z_Up(G), |E|_p > p");
    return inside;
  });
  return r;
}

TheoremReport verify_T12(VerifyContext &ctx, const Subgroup &E,
                         std::uint64_t p) {
  TheoremReport r = start(ctx, TheoremId::T12, p);
  const Group &G = ctx.group();
  require_normal(G, E);
  r.subject = "E = " + describe_subgroup(G, E);
  if (E.order() % p != 0) {
    r.hypothesis = r.conclusion = Status::not_applicable;
    r.detail = "p does not divide |E|";
    return r;
  }
  r.hypothesis = guarded(r, [&] {
    const Subgroup P = ctx.sylow(E, p);
    bool ok = check_family(ctx, r, "order-p", cyclic_subgroups_of_order(G, P, p));
    if (!ok && !ctx.options().exhaustive)
      return false;
    if (p == 2 && !is_quaternion_free(G, P)) {
      append(r.detail, "P not quaternion-free");
      ok = check_family(ctx, r, "cyclic-4", cyclic_order4_subgroups(G, P)) && ok;
    }
    return ok;
  });
  r.conclusion = guarded(r, [&] {
    const bool inside = E.is_subset_of(ctx.up_hypercenter(p));
    append(r.detail, inside ? "E <= Z_Up(G)" : "E not in Z_Up(G)");
    return inside;
  });
  return r;
}

TheoremReport verify_T13(VerifyContext &ctx, std::uint64_t p) {
  TheoremReport r = start(ctx, TheoremId::T13, p);
  const Group &G = ctx.group();
  const Subgroup P = ctx.sylow(p);
  if (P.order() < p * p) {
    r.hypothesis = Status::not_applicable;
    r.detail = "|P| < p^2";
  } else {
    r.hypothesis = guarded(r, [&] {
      return check_family(ctx, r, "2-minimal", two_minimal_subgroups(G, P));
    });
  }
  r.conclusion = p_length_at_most_one(ctx, r, p);
  return r;
}

TheoremReport verify_T14(VerifyContext &ctx, std::uint64_t p) {
  TheoremReport r = start(ctx, TheoremId::T14, p);
  const Group &G = ctx.group();
  const Subgroup P = ctx.sylow(p);
  if (P.order() < p * p * p) {
    r.hypothesis = Status::not_applicable;
    r.detail = "|P| < p^3";
  } else {
    r.hypothesis = guarded(r, [&] {
      bool ok = check_family(ctx, r, "2-maximal", two_maximal_subgroups(G, P));
      if (!ok && !ctx.options().exhaustive)
        return false;
      if (p == 2 && recognize_small(G, P).is_Q8())
        ok = check_family(ctx, r, "cyclic-4", cyclic_order4_subgroups(G, P)) &&
             ok;
      return ok;
    });
  }
  r.conclusion = p_length_at_most_one(ctx, r, p);
  return r;
}

TheoremReport verify_CLS(VerifyContext &ctx, std::uint64_t p) {
  TheoremReport r = start(ctx, TheoremId::CLS, p);
  const Group &G = ctx.group();
  const Subgroup P = ctx.sylow(p);
  if (P.order() < p * p) {
    r.hypothesis = r.conclusion = Status::not_applicable;
    r.detail = "|P| < p^2";
    return r;
  }
  r.hypothesis = guarded(r, [&] {
    return check_family(ctx, r, "2-maximal", two_maximal_subgroups(G, P));
  });
  r.conclusion = guarded(r, [&] {
    if (is_p_soluble(G, p)) {
      append(r.detail, "outcome (1): p-soluble");
      return true;
    }
    if (P.order() == p * p) {
      append(r.detail, "outcome (2): |P| = p^2");
      return true;
    }
    if (p == 2 && P.order() == 8 && recognize_small(G, P).is_Q8()) {
      append(r.detail, "outcome (3): P is Q8");
      return true;
    }
    append(r.detail, "no outcome applies");
    return false;
  });
  return r;
}

TheoremReport verify_L28(VerifyContext &ctx, std::uint64_t p) {
  TheoremReport r = start(ctx, TheoremId::L28, p);
  const Subgroup P = ctx.sylow(p);
  r.hypothesis = guarded(r, [&] {
    return check_family(ctx, r, "sylow", std::vector<Subgroup>{P});
  });
  r.conclusion = guarded(r, [&] { return is_p_soluble(ctx.group(), p); });
  return r;
}

TheoremReport verify_L214(VerifyContext &ctx, const Subgroup &P) {
  const Group &G = ctx.group();
  const auto p = p_group_prime(P);
  if (!p)
    throw InputError("L2.14 requires a nontrivial p-subgroup, got order " +
                     std::to_string(P.order()));
  require_normal(G, P);
  TheoremReport r = start(ctx, TheoremId::L214, *p);
  r.subject = "P = " + describe_subgroup(G, P);
  r.hypothesis = Status::holds;
  r.conclusion = guarded(r, [&] {
    const bool left = P.is_subset_of(hypercenter(G));
    const Subgroup Op = o_upper(G, ResidualKind::p, *p);
    const bool right = Op.is_subset_of(centralizer(G, P));
    append(r.detail, std::string("P <= Z_inf: ") + (left ? "yes" : "no") +
                         ", O^p <= C_G(P): " + (right ? "yes" : "no"));
    return left == right;
  });
  return r;
}

} // namespace gpi
