#include "ngraph/identities.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

namespace ngraph {

std::string_view to_string(IdentityMode mode) {
  switch (mode) {
    case IdentityMode::Sidon: return "sidon";
    case IdentityMode::Single: return "single";
    case IdentityMode::SumFree: return "sumfree";
  }
  return "?";
}

IdentityMode parse_mode(std::string_view name) {
  for (auto mode : {IdentityMode::Sidon, IdentityMode::Single, IdentityMode::SumFree})
    if (to_string(mode) == name) return mode;
  throw std::invalid_argument("unknown mode '" + std::string(name) + "'");
}

Int default_n_max(IdentityMode mode) {
  switch (mode) {
    case IdentityMode::Sidon: return 300;
    case IdentityMode::Single: return 200;
    case IdentityMode::SumFree: return 150;
  }
  return 0;
}

void require_mode(IdentityMode mode, const ModularSystem& sys) {
  const Int m = sys.modulus();
  const auto s = sys.elements();
  auto fail = [&](std::string_view what) {
    throw PreconditionViolated(std::string(what) + " fails for " + to_string(sys));
  };
  if (m < 2) fail("modulus >= 2");
  switch (mode) {
    case IdentityMode::Sidon:
      if (!is_sum_free(s, m)) fail("sum-free");
      if (!is_sidon(s, m)) fail("sidon");
      break;
    case IdentityMode::Single:
      if (s.size() != 1) fail("single-element S");
      if (s[0] % m == 0) fail("m does not divide s");
      break;
    case IdentityMode::SumFree:
      if (!is_sum_free(s, m)) fail("sum-free");
      if (!has_sum_congruence_equality(s, m)) fail("congruence-equality");
      break;
  }
}

HCandidate hook_map(const NFormPartition& pi, const HClassifier& classifier) {
  if (!pi.strictly_decreasing_u())
    throw PreconditionViolated("hook_map needs strictly decreasing u, got " + to_string(pi));
  const ModularSystem& sys = classifier.system();
  std::vector<HPart> parts;
  for (const Hook& hook : hook_decomposition(build_n_graph(pi, sys))) {
    const HClass cls = classifier.classify(hook.hook_number);
    // A column arm ending in S puts the hook in B; otherwise it is in A.
    if (cls.in_b() != hook.column_terminal.has_value() || !cls.in_h())
      throw InternalInvariantViolated("hook " + std::to_string(hook.index) + " of " +
                                      to_string(pi) + " has the wrong class");
    parts.push_back({hook.hook_number, cls});
  }
  if (!satisfies_gap_rules(parts))
    throw InternalInvariantViolated("hook numbers of " + to_string(pi) + " leave H(n)");
  return HCandidate(std::move(parts));
}

HCandidate hook_map(const NFormPartition& pi, const ModularSystem& sys) {
  return hook_map(pi, HClassifier(sys));
}

namespace {

struct PairChoice {
  std::size_t row_end = 0;
  std::size_t column_end = 0;
};

std::string describe(const HCandidate& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + std::to_string(c[i].h);
  return out + ")";
}

}  // namespace

Fiber reconstruct_fiber(const HCandidate& target, const ModularSystem& sys) {
  const HClassifier classifier(sys);
  const Int m = sys.modulus();
  const auto s = sys.elements();
  if (!is_sidon(s, m) && !has_sum_congruence_equality(s, m))
    throw PreconditionViolated("fiber reconstruction needs a Sidon or congruence-equality system");
  if (!satisfies_gap_rules(target.parts()))
    throw PreconditionViolated("target " + describe(target) + " is not in H(n)");

  const std::size_t d = target.size();
  std::vector<std::size_t> b_positions;  // 1-based diagonal indices j_1 < ... < j_e
  for (std::size_t i = 0; i < d; ++i)
    if (target[i].cls.in_b()) b_positions.push_back(i + 1);

  // Row lengths of the top d rows, from the hook sums.
  std::vector<Int> top_u(d);
  for (std::size_t i = 1; i <= d; ++i) {
    const auto deeper_b = std::count_if(b_positions.begin(), b_positions.end(),
                                        [&](std::size_t j) { return j >= i; });
    const Int y = static_cast<Int>(d - i) + deeper_b;
    const Int in_b = target[i - 1].cls.in_b() ? 1 : 0;
    const Int x = target[i - 1].cls.v() + 1 - y + in_b;
    if (x < 1)
      throw ReconstructionFailed("hook " + std::to_string(i) + " of " + describe(target) +
                                 " has no room for its row arm");
    top_u[i - 1] = x + static_cast<Int>(i) - 2;
  }
  for (std::size_t i = 1; i < d; ++i)
    if (top_u[i] >= top_u[i - 1])
      throw ReconstructionFailed("top rows of " + describe(target) + " are not strictly shorter");
  if (d > 0 && top_u[d - 1] + 1 < static_cast<Int>(d))
    throw ReconstructionFailed("Durfee square of " + describe(target) + " is too small");
  if (!b_positions.empty() && top_u[d - 1] <= static_cast<Int>(b_positions.back()) - 1)
    throw ReconstructionFailed("bottom rows of " + describe(target) + " reach the Durfee square");

  // Per hook: the admissible (row end, column end) assignments.
  std::vector<std::vector<PairChoice>> choices(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (const auto* a = std::get_if<InA>(&target[i].cls.value())) {
      choices[i].push_back({a->s_index, 0});
      continue;
    }
    const Int t = target[i].cls.t(sys);
    for (std::size_t p = 0; p < s.size(); ++p)
      for (std::size_t q = 0; q < s.size(); ++q)
        if (s[p] + s[q] == t) choices[i].push_back({p, q});
  }

  Fiber fiber{target, {}};
  std::vector<std::size_t> digit(d, 0);
  while (true) {
    std::vector<Decomposition> entries;
    for (std::size_t i = 0; i < d; ++i) {
      const std::size_t idx = choices[i][digit[i]].row_end;
      entries.push_back({top_u[i], idx, top_u[i] * m + s[idx]});
    }
    for (auto it = b_positions.rbegin(); it != b_positions.rend(); ++it) {
      const Int u = static_cast<Int>(*it) - 1;
      const std::size_t idx = choices[*it - 1][digit[*it - 1]].column_end;
      entries.push_back({u, idx, u * m + s[idx]});
    }
    NFormPartition pi = NFormPartition::from_entries(std::move(entries));
    HCandidate image;
    try {
      image = hook_map(pi, classifier);
    } catch (const Error& e) {
      throw ReconstructionFailed("assembled " + to_string(pi) + " is not in A(n): " + e.what());
    }
    if (!(image == target))
      throw ReconstructionFailed("assembled " + to_string(pi) + " maps to " + describe(image) +
                                 ", not " + describe(target));
    fiber.members.push_back(std::move(pi));

    std::size_t pos = 0;
    while (pos < d && ++digit[pos] == choices[pos].size()) digit[pos++] = 0;
    if (pos == d) break;
  }
  std::sort(fiber.members.begin(), fiber.members.end());
  if (std::adjacent_find(fiber.members.begin(), fiber.members.end()) != fiber.members.end())
    throw ReconstructionFailed("fiber of " + describe(target) + " has repeated members");
  return fiber;
}

Fiber brute_fiber(const HCandidate& target, const ModularSystem& sys) {
  const HClassifier classifier(sys);
  Fiber fiber{target, {}};
  for_each_A(target.weight(), sys, [&](const NFormPartition& pi) {
    if (hook_map(pi, classifier) == target) fiber.members.push_back(pi);
  });
  std::sort(fiber.members.begin(), fiber.members.end());
  return fiber;
}

namespace {

VerificationRow verify_one(Int n, const ModularSystem& sys, const HClassifier& classifier,
                           IdentityMode mode, Count lhs, bool keep) {
  VerificationRow row{n, lhs, 0, false, {}};
  for_each_H(n, classifier, [&](const HCandidate& c) {
    Count weight = 1;
    switch (mode) {
      case IdentityMode::Sidon: weight = checked::pow2(c.e_prime()); break;
      case IdentityMode::Single: weight = 1; break;
      case IdentityMode::SumFree: weight = rep_product(c, sys); break;
    }
    row.rhs = checked::add(row.rhs, weight);
    if (keep) row.candidates.push_back(c);
  });
  row.pass = row.lhs == row.rhs;
  return row;
}

}  // namespace

VerificationReport verify_identity(Int n_max, const ModularSystem& sys, IdentityMode mode,
                                   const VerifyOptions& options) {
  require_mode(mode, sys);
  if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
  const HClassifier classifier(sys);

  std::vector<Count> lhs(static_cast<std::size_t>(n_max) + 1);
  if (mode == IdentityMode::Single) {
    for (Int n = 0; n <= n_max; ++n) lhs[static_cast<std::size_t>(n)] = count_distinct_parts(n, sys);
  } else {
    lhs = count_A_table(n_max, sys);
  }

  VerificationReport report{sys, mode, std::vector<VerificationRow>(lhs.size()), true};
  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(lhs.size())));

  std::atomic<Int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      for (Int n = next++; n <= n_max; n = next++) {
        const auto i = static_cast<std::size_t>(n);
        report.rows[i] = verify_one(n, sys, classifier, mode, lhs[i], options.keep_candidates);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = n_max + 1;
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  if (failure) std::rethrow_exception(failure);

  for (const auto& row : report.rows) report.all_pass = report.all_pass && row.pass;
  return report;
}

bool alladi_conditions(std::span<const Int> parts) {
  if (parts.empty()) return true;
  for (Int h : parts)
    if (h <= 0) return false;
  if (parts.back() == 2) return false;
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    const Int gap = parts[i] - parts[i + 1];
    if (gap < 6) return false;
    if (parts[i + 1] % 2 == 0 && gap < 7) return false;
  }
  return true;
}

}  // namespace ngraph
