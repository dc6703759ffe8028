#include "ngraph/enumeration.hpp"

#include <algorithm>

namespace ngraph {

HCandidate::HCandidate(std::vector<HPart> parts) : parts_(std::move(parts)) {
  for (const auto& p : parts_) weight_ = checked::add(weight_, p.h);
}

std::size_t HCandidate::e_prime() const {
  return static_cast<std::size_t>(
      std::count_if(parts_.begin(), parts_.end(), [](const HPart& p) { return p.cls.b_prime(); }));
}

std::vector<Int> HCandidate::values() const {
  std::vector<Int> out;
  for (const auto& p : parts_) out.push_back(p.h);
  return out;
}

std::vector<Int> HCandidate::vs() const {
  std::vector<Int> out;
  for (const auto& p : parts_) out.push_back(p.cls.v());
  return out;
}

bool satisfies_gap_rules(std::span<const HPart> parts) {
  for (const auto& p : parts) {
    if (!p.cls.in_h()) return false;
    if (p.cls.in_b() && p.cls.v() < 1) return false;
  }
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    const Int gap = parts[i].cls.v() - parts[i + 1].cls.v();
    if (gap < 3) return false;
    if (parts[i + 1].cls.in_b() && gap < 4) return false;
  }
  return true;
}

std::optional<HCandidate> make_h_candidate(std::span<const Int> parts, const ModularSystem& sys) {
  const HClassifier classifier(sys);
  std::vector<HPart> classified;
  for (Int h : parts) {
    if (h <= 0) return std::nullopt;
    classified.push_back({h, classifier.classify(h)});
  }
  if (!satisfies_gap_rules(classified)) return std::nullopt;
  return HCandidate(std::move(classified));
}

namespace {

// Largest total reachable by parts with strictly decreasing u, all u < u_limit.
Int max_a_total(Int u_limit, Int m, Int max_s) {
  if (u_limit <= 0) return 0;
  return checked::add(checked::mul(m, u_limit * (u_limit - 1) / 2), checked::mul(u_limit, max_s));
}

}  // namespace

void for_each_A(Int n, const ModularSystem& sys,
                const std::function<void(const NFormPartition&)>& visit) {
  if (n < 0) return;
  if (n == 0) {
    visit(NFormPartition{});
    return;
  }
  const Int m = sys.modulus();
  const Int max_s = sys.max_element();
  std::vector<Decomposition> entries;
  auto rec = [&](auto& self, Int remaining, Int u_limit) -> void {
    if (remaining > max_a_total(u_limit, m, max_s)) return;
    for (Int u = u_limit - 1; u >= 0; --u) {
      for (std::size_t j = 0; j < sys.size(); ++j) {
        const Int a = u * m + sys.element(j);
        if (a > remaining) continue;
        entries.push_back({u, j, a});
        if (a == remaining)
          visit(NFormPartition::from_entries(entries));
        else
          self(self, remaining - a, u);
        entries.pop_back();
      }
    }
  };
  rec(rec, n, n / m + 1);
}

std::vector<NFormPartition> enumerate_A(Int n, const ModularSystem& sys) {
  std::vector<NFormPartition> out;
  for_each_A(n, sys, [&](const NFormPartition& pi) { out.push_back(pi); });
  return out;
}

std::vector<Count> count_A_table(Int n_max, const ModularSystem& sys) {
  if (n_max < 0) return {};
  const auto size = static_cast<std::size_t>(n_max) + 1;
  std::vector<Count> coeff(size, 0);
  coeff[0] = 1;
  const Int m = sys.modulus();
  for (Int u = 0; u * m + sys.min_element() <= n_max; ++u) {
    // Multiply by (1 + sum_s q^(u*m + s)); descending k keeps reads on old coefficients.
    for (Int k = n_max; k >= 1; --k) {
      Count acc = coeff[static_cast<std::size_t>(k)];
      for (Int s : sys.elements()) {
        const Int a = u * m + s;
        if (a <= k) acc = checked::add(acc, coeff[static_cast<std::size_t>(k - a)]);
      }
      coeff[static_cast<std::size_t>(k)] = acc;
    }
  }
  return coeff;
}

Count count_A(Int n, const ModularSystem& sys) {
  if (n < 0) return 0;
  return count_A_table(n, sys).back();
}

void for_each_H(Int n, const HClassifier& classifier,
                const std::function<void(const HCandidate&)>& visit) {
  if (n < 0) return;
  if (n == 0) {
    visit(HCandidate{});
    return;
  }
  const ModularSystem& sys = classifier.system();
  const Int m = sys.modulus();
  const auto options = classifier.t_options();
  Int max_t = 0;
  for (const auto& o : options) max_t = std::max(max_t, o.t);

  // Largest total of a gap-valid tail whose first part has v <= v_top.
  auto tail_bound = [&](Int v_top) -> Int {
    if (v_top < 0) return 0;
    const Int terms = v_top / 3 + 1;
    const Int v_sum = terms * v_top - 3 * terms * (terms - 1) / 2;
    return checked::add(checked::mul(m, v_sum), checked::mul(terms, max_t));
  };

  std::vector<HPart> parts;
  auto rec = [&](auto& self, Int remaining, std::optional<Int> prev_v) -> void {
    const Int v_top = prev_v ? *prev_v - 3 : remaining / m;
    for (Int v = v_top; v >= 0; --v) {
      for (const auto& opt : options) {
        if (opt.is_pair && (v < 1 || (prev_v && *prev_v - v < 4))) continue;
        const Int h = v * m + opt.t;
        if (h > remaining) continue;
        const HClass cls = classifier.classify(h);
        if (cls.in_b() != opt.is_pair || !cls.in_h() || cls.t(sys) != opt.t || cls.v() != v)
          continue;
        const Int rest = remaining - h;
        if (rest > 0 && rest > tail_bound(v - 3)) continue;
        parts.push_back({h, cls});
        if (rest == 0)
          visit(HCandidate(parts));
        else
          self(self, rest, v);
        parts.pop_back();
      }
    }
  };
  rec(rec, n, std::nullopt);
}

std::vector<HCandidate> enumerate_H(Int n, const ModularSystem& sys) {
  const HClassifier classifier(sys);
  std::vector<HCandidate> out;
  for_each_H(n, classifier, [&](const HCandidate& c) { out.push_back(c); });
  return out;
}

Count rep_product(const HCandidate& c, const ModularSystem& sys) {
  Count product = 1;
  for (const auto& p : c.parts()) {
    if (!p.cls.in_b()) continue;
    product = checked::mul(product, static_cast<Count>(rep_count(p.cls.t(sys), sys.elements()).r));
  }
  return product;
}

Count weighted_sum_sidon(Int n, const ModularSystem& sys) {
  const HClassifier classifier(sys);
  if (!is_sidon(sys.elements(), sys.modulus()))
    throw PreconditionViolated("S is not a Sidon set modulo m for " + to_string(sys));
  Count total = 0;
  for_each_H(n, classifier, [&](const HCandidate& c) {
    total = checked::add(total, checked::pow2(c.e_prime()));
  });
  return total;
}

Count weighted_sum_general(Int n, const ModularSystem& sys) {
  const HClassifier classifier(sys);
  if (!has_sum_congruence_equality(sys.elements(), sys.modulus()))
    throw PreconditionViolated("S lacks the congruence-equality property for " + to_string(sys));
  Count total = 0;
  for_each_H(n, classifier,
             [&](const HCandidate& c) { total = checked::add(total, rep_product(c, sys)); });
  return total;
}

Count count_distinct_parts(Int n, const ModularSystem& sys) {
  if (n < 0) return 0;
  std::vector<Count> ways(static_cast<std::size_t>(n) + 1, 0);
  ways[0] = 1;
  const Int m = sys.modulus();
  for (Int s : sys.elements())
    for (Int a = s; a <= n; a += m)
      for (Int k = n; k >= a; --k)
        ways[static_cast<std::size_t>(k)] =
            checked::add(ways[static_cast<std::size_t>(k)], ways[static_cast<std::size_t>(k - a)]);
  return ways.back();
}

}  // namespace ngraph
