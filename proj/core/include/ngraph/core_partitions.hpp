#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ngraph/checked.hpp"

namespace ngraph {

/// An integer partition in standard form: parts weakly descending, all >= 1.
class Partition {
 public:
  Partition() = default;

  /// Sorts the parts into standard form. Throws std::invalid_argument on a
  /// nonpositive part.
  explicit Partition(std::vector<Int> parts);

  std::span<const Int> parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  Int weight() const { return weight_; }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<Int> parts_;
  Int weight_ = 0;
};

/// Modulus m together with an ordered set S of positive integers, pairwise
/// incongruent modulo m. The order of S is significant and kept as given.
///
/// A = { u*m + s : u >= 0, s in S } is the set of admissible parts.
class ModularSystem {
 public:
  Int modulus() const { return modulus_; }
  std::span<const Int> elements() const { return elements_; }
  Int element(std::size_t index) const { return elements_[index]; }
  std::size_t size() const { return elements_.size(); }
  Int max_element() const;
  Int min_element() const;

  friend bool operator==(const ModularSystem&, const ModularSystem&) = default;

 private:
  friend ModularSystem make_system(Int m, std::vector<Int> elements);
  ModularSystem(Int m, std::vector<Int> elements)
      : modulus_(m), elements_(std::move(elements)) {}

  Int modulus_ = 1;
  std::vector<Int> elements_;
};

/// Validates and builds a system. m = 1 is accepted (with a single element)
/// to express the classical Ferrers graph. Throws InvalidSystem.
ModularSystem make_system(Int m, std::vector<Int> elements);

/// Parses `m=<int>;S=<int>,<int>,...`. Whitespace is ignored.
ModularSystem parse_system(std::string_view text);

/// Inverse of parse_system.
std::string to_string(const ModularSystem& sys);

/// a = u*m + S[s_index] with u >= 0.
struct Decomposition {
  Int u = 0;
  std::size_t s_index = 0;
  Int value = 0;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

std::optional<Decomposition> try_decompose(Int a, const ModularSystem& sys);

/// Throws NotInA when a has no representation over sys.
Decomposition decompose(Int a, const ModularSystem& sys);

bool in_a(Int a, const ModularSystem& sys);

/// A partition into parts of A, listed in standard N-form: u weakly
/// descending, ties broken by ascending position of s in S. The integer
/// parts themselves need not be descending.
class NFormPartition {
 public:
  NFormPartition() = default;

  /// Throws std::invalid_argument when the entries are not in N-form order.
  static NFormPartition from_entries(std::vector<Decomposition> entries);

  std::span<const Decomposition> entries() const { return entries_; }
  const Decomposition& operator[](std::size_t i) const { return entries_[i]; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  Int weight() const { return weight_; }
  std::vector<Int> parts() const;

  /// True when u(a_1) > u(a_2) > ... (membership condition for the class A(n)).
  bool strictly_decreasing_u() const;

  friend bool operator==(const NFormPartition& a, const NFormPartition& b) {
    return a.entries_ == b.entries_;
  }
  /// Canonical order: entry-wise by (u descending, s_index ascending).
  friend std::strong_ordering operator<=>(const NFormPartition& a, const NFormPartition& b);

 private:
  std::vector<Decomposition> entries_;
  Int weight_ = 0;
};

/// Puts a multiset of parts into standard N-form. Propagates NotInA.
NFormPartition standard_n_form(std::span<const Int> parts, const ModularSystem& sys);

/// `(55,41,29,15,33,20)_N`
std::string to_string(const NFormPartition& pi);

/// Parses a comma-separated list of integers such as `55,41,33`.
std::vector<Int> parse_int_list(std::string_view text);

}  // namespace ngraph
