#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "ngraph/core_partitions.hpp"

namespace ngraph {

/// Predicates accepted by search_sets and the CLI. The spellings returned by
/// to_string are the CLI names.
enum class SetPredicate { SumFree, Sidon, SumFreeSidon, CongruenceEquality };

std::string_view to_string(SetPredicate p);
/// Throws std::invalid_argument on an unknown name.
SetPredicate parse_predicate(std::string_view name);

/// Without a modulus: S and 2S are disjoint. With a modulus m >= 2: S is
/// pairwise incongruent and no s + s' is congruent to an element of S.
bool is_sum_free(std::span<const Int> s, std::optional<Int> modulus = std::nullopt);

/// s_i1 + s_i2 = s_j1 + s_j2 (or congruent, with a modulus) only when
/// {i1, i2} = {j1, j2}. The modular form also requires pairwise incongruence.
bool is_sidon(std::span<const Int> s, std::optional<Int> modulus = std::nullopt);

/// Congruent pair sums are equal as integers.
bool has_sum_congruence_equality(std::span<const Int> s, Int m);

bool satisfies(SetPredicate p, std::span<const Int> s, Int m);

struct RepCount {
  Int t = 0;
  Int r = 0;  ///< ordered pairs (s, s') in S x S with s + s' = t
};

RepCount rep_count(Int t, std::span<const Int> s);

/// h = u*m + s with u >= 0.
struct InA {
  Int u = 0;
  std::size_t s_index = 0;
  friend bool operator==(const InA&, const InA&) = default;
};

/// h = v*m + s + s' with v >= 1; first_index <= second_index.
struct InB {
  Int v = 0;
  std::size_t first_index = 0;
  std::size_t second_index = 0;
  friend bool operator==(const InB&, const InB&) = default;
};

struct NotInH {
  friend bool operator==(const NotInH&, const NotInH&) = default;
};

/// Position of an integer relative to A, B and H = A u B.
class HClass {
 public:
  using Variant = std::variant<InA, InB, NotInH>;

  HClass() : value_(NotInH{}) {}
  HClass(Variant value) : value_(value) {}

  const Variant& value() const { return value_; }
  bool in_a() const { return std::holds_alternative<InA>(value_); }
  bool in_b() const { return std::holds_alternative<InB>(value_); }
  bool in_h() const { return !std::holds_alternative<NotInH>(value_); }
  /// In B with two distinct elements of S.
  bool b_prime() const;
  /// v(h); u(h) for elements of A. Undefined for NotInH.
  Int v() const;
  /// t(h) in S u 2S, resolved against the system.
  Int t(const ModularSystem& sys) const;

  friend bool operator==(const HClass&, const HClass&) = default;

 private:
  Variant value_;
};

/// Classifies integers against a fixed system. Construction checks that S
/// is sum-free modulo m and precomputes the residue tables.
class HClassifier {
 public:
  /// Throws PreconditionViolated when S is not sum-free modulo m.
  explicit HClassifier(const ModularSystem& sys);

  HClass classify(Int h) const;
  const ModularSystem& system() const { return sys_; }

  /// Distinct values of t usable at the end of a hook: elements of S first
  /// (in S order), then distinct pair sums (by index pair). For systems whose
  /// congruent pair sums differ, a pair sum is kept only for the residues
  /// where it is the canonical one.
  struct TOption {
    Int t = 0;
    bool is_pair = false;
    HClass::Variant prototype;  ///< class with v/u left at 0
  };
  std::span<const TOption> t_options() const { return options_; }

 private:
  ModularSystem sys_;
  std::vector<TOption> options_;
};

/// Single-shot classification. Throws PreconditionViolated when S is not
/// sum-free modulo m. When several pairs fit, the lexicographically least
/// index pair is reported.
HClass classify_h(Int h, const ModularSystem& sys);

/// All len-element subsets of [1, bound], pairwise incongruent mod m, that
/// satisfy the predicate, in lexicographic order.
std::vector<std::vector<Int>> search_sets(Int m, std::size_t len, Int bound, SetPredicate p);

}  // namespace ngraph
