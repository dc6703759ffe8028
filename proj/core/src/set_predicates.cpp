#include "ngraph/set_predicates.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace ngraph {

std::string_view to_string(SetPredicate p) {
  switch (p) {
    case SetPredicate::SumFree: return "sum-free";
    case SetPredicate::Sidon: return "sidon";
    case SetPredicate::SumFreeSidon: return "sum-free-sidon";
    case SetPredicate::CongruenceEquality: return "congruence-equality";
  }
  return "?";
}

SetPredicate parse_predicate(std::string_view name) {
  for (auto p : {SetPredicate::SumFree, SetPredicate::Sidon, SetPredicate::SumFreeSidon,
                 SetPredicate::CongruenceEquality})
    if (to_string(p) == name) return p;
  throw std::invalid_argument("unknown predicate '" + std::string(name) + "'");
}

namespace {

bool pairwise_incongruent(std::span<const Int> s, Int m) {
  std::set<Int> residues;
  for (Int x : s)
    if (!residues.insert(residue(x, m)).second) return false;
  return true;
}

// Reduces modulo m when a modulus is given, so one code path serves both modes.
Int reduce(Int x, std::optional<Int> modulus) { return modulus ? residue(x, *modulus) : x; }

}  // namespace

bool is_sum_free(std::span<const Int> s, std::optional<Int> modulus) {
  if (modulus && !pairwise_incongruent(s, *modulus)) return false;
  std::set<Int> values;
  for (Int x : s) values.insert(reduce(x, modulus));
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i; j < s.size(); ++j)
      if (values.count(reduce(checked::add(s[i], s[j]), modulus))) return false;
  return true;
}

bool is_sidon(std::span<const Int> s, std::optional<Int> modulus) {
  if (modulus && !pairwise_incongruent(s, *modulus)) return false;
  // Each unordered index pair {i, j} must own its (reduced) sum.
  std::set<Int> sums;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i; j < s.size(); ++j)
      if (!sums.insert(reduce(checked::add(s[i], s[j]), modulus)).second) return false;
  return true;
}

bool has_sum_congruence_equality(std::span<const Int> s, Int m) {
  std::map<Int, Int> sum_by_residue;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i; j < s.size(); ++j) {
      const Int sum = checked::add(s[i], s[j]);
      auto [it, inserted] = sum_by_residue.emplace(residue(sum, m), sum);
      if (!inserted && it->second != sum) return false;
    }
  return true;
}

bool satisfies(SetPredicate p, std::span<const Int> s, Int m) {
  switch (p) {
    case SetPredicate::SumFree: return is_sum_free(s, m);
    case SetPredicate::Sidon: return is_sidon(s, m);
    case SetPredicate::SumFreeSidon: return is_sum_free(s, m) && is_sidon(s, m);
    case SetPredicate::CongruenceEquality:
      return pairwise_incongruent(s, m) && has_sum_congruence_equality(s, m);
  }
  return false;
}

RepCount rep_count(Int t, std::span<const Int> s) {
  RepCount out{t, 0};
  for (Int a : s)
    for (Int b : s)
      if (a + b == t) ++out.r;
  return out;
}

bool HClass::b_prime() const {
  const auto* b = std::get_if<InB>(&value_);
  return b != nullptr && b->first_index != b->second_index;
}

Int HClass::v() const {
  if (const auto* a = std::get_if<InA>(&value_)) return a->u;
  if (const auto* b = std::get_if<InB>(&value_)) return b->v;
  throw std::logic_error("v() of an integer outside H");
}

Int HClass::t(const ModularSystem& sys) const {
  if (const auto* a = std::get_if<InA>(&value_)) return sys.element(a->s_index);
  if (const auto* b = std::get_if<InB>(&value_))
    return sys.element(b->first_index) + sys.element(b->second_index);
  throw std::logic_error("t() of an integer outside H");
}

HClassifier::HClassifier(const ModularSystem& sys) : sys_(sys) {
  const Int m = sys.modulus();
  if (m < 2 || !is_sum_free(sys.elements(), m))
    throw PreconditionViolated("S is not sum-free modulo m for " + to_string(sys));
  for (std::size_t j = 0; j < sys.size(); ++j)
    options_.push_back({sys.element(j), false, InA{0, j}});
  std::set<Int> seen;
  for (std::size_t i = 0; i < sys.size(); ++i)
    for (std::size_t j = i; j < sys.size(); ++j) {
      const Int t = checked::add(sys.element(i), sys.element(j));
      if (seen.insert(t).second) options_.push_back({t, true, InB{0, i, j}});
    }
}

HClass HClassifier::classify(Int h) const {
  const Int m = sys_.modulus();
  const Int r = residue(h, m);
  const auto s = sys_.elements();
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (residue(s[j], m) != r) continue;
    // Residues of S and 2S are disjoint, so no pair can match either.
    if (h < s[j]) return {};
    return HClass(InA{(h - s[j]) / m, j});
  }
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i; j < s.size(); ++j) {
      const Int t = s[i] + s[j];
      if (residue(t, m) != r || h - t < m) continue;
      return HClass(InB{(h - t) / m, i, j});
    }
  return {};
}

HClass classify_h(Int h, const ModularSystem& sys) { return HClassifier(sys).classify(h); }

std::vector<std::vector<Int>> search_sets(Int m, std::size_t len, Int bound, SetPredicate p) {
  std::vector<std::vector<Int>> out;
  if (m < 2 || len == 0 || bound < static_cast<Int>(len)) return out;
  std::vector<Int> current;
  std::vector<bool> used_residue(static_cast<std::size_t>(m), false);
  auto rec = [&](auto& self, Int next) -> void {
    if (current.size() == len) {
      if (satisfies(p, current, m)) out.push_back(current);
      return;
    }
    const Int needed = static_cast<Int>(len - current.size());
    for (Int x = next; x + needed - 1 <= bound; ++x) {
      const auto r = static_cast<std::size_t>(residue(x, m));
      if (used_residue[r]) continue;
      used_residue[r] = true;
      current.push_back(x);
      self(self, x + 1);
      current.pop_back();
      used_residue[r] = false;
    }
  };
  rec(rec, 1);
  return out;
}

}  // namespace ngraph
