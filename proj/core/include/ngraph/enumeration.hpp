#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "ngraph/core_partitions.hpp"
#include "ngraph/set_predicates.hpp"

namespace ngraph {

// A(n): partitions of n into parts of A with u(a_1) > u(a_2) > ... >= 0.
// H(n): sequences (h_1, ..., h_d) of elements of H = A u B summing to n with
//   v(h_i) - v(h_{i+1}) >= 3, and >= 4 whenever h_{i+1} is in B.

/// One part of an H(n) candidate.
struct HPart {
  Int h = 0;
  HClass cls;
  friend bool operator==(const HPart&, const HPart&) = default;
};

class HCandidate {
 public:
  HCandidate() = default;
  explicit HCandidate(std::vector<HPart> parts);

  std::span<const HPart> parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  const HPart& operator[](std::size_t i) const { return parts_[i]; }
  Int weight() const { return weight_; }
  /// Number of parts in B' (B with two distinct elements of S).
  std::size_t e_prime() const;
  std::vector<Int> values() const;
  std::vector<Int> vs() const;

  friend bool operator==(const HCandidate& a, const HCandidate& b) { return a.parts_ == b.parts_; }

 private:
  std::vector<HPart> parts_;
  Int weight_ = 0;
};

/// Independent check of the two gap rules on an already classified sequence.
bool satisfies_gap_rules(std::span<const HPart> parts);

/// Classifies the parts in the order given and returns the candidate if the
/// sequence lies in H(n). Throws PreconditionViolated when S is not sum-free
/// modulo m.
std::optional<HCandidate> make_h_candidate(std::span<const Int> parts, const ModularSystem& sys);

/// Visits A(n) in canonical order: entry-wise by u descending, then s_index
/// ascending. n = 0 visits the empty partition once.
void for_each_A(Int n, const ModularSystem& sys,
                const std::function<void(const NFormPartition&)>& visit);
std::vector<NFormPartition> enumerate_A(Int n, const ModularSystem& sys);

/// p_A(n), read off the truncated product prod_u (1 + sum_s q^(u*m + s)).
/// Throws OverflowError.
Count count_A(Int n, const ModularSystem& sys);

/// count_A for every n in [0, n_max] from a single product.
std::vector<Count> count_A_table(Int n_max, const ModularSystem& sys);

/// Visits H(n) in canonical order (v descending, then t-option order).
void for_each_H(Int n, const HClassifier& classifier,
                const std::function<void(const HCandidate&)>& visit);
std::vector<HCandidate> enumerate_H(Int n, const ModularSystem& sys);

/// Product of rep_count(t(h)) over the B-parts; A-parts contribute 1.
Count rep_product(const HCandidate& c, const ModularSystem& sys);

/// Sum over H(n) of 2^e'. Requires S sum-free Sidon modulo m.
Count weighted_sum_sidon(Int n, const ModularSystem& sys);

/// Sum over H(n) of rep_product. Requires S sum-free modulo m with the
/// congruence-equality property.
Count weighted_sum_general(Int n, const ModularSystem& sys);

/// Partitions of n into distinct elements of A (0/1 knapsack over A).
Count count_distinct_parts(Int n, const ModularSystem& sys);

}  // namespace ngraph
