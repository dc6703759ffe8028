#include "ngraph/core_partitions.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ngraph {

Partition::Partition(std::vector<Int> parts) : parts_(std::move(parts)) {
  for (Int p : parts_) {
    if (p <= 0) throw std::invalid_argument("partition parts must be positive");
    weight_ = checked::add(weight_, p);
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

Int ModularSystem::max_element() const {
  return *std::max_element(elements_.begin(), elements_.end());
}

Int ModularSystem::min_element() const {
  return *std::min_element(elements_.begin(), elements_.end());
}

ModularSystem make_system(Int m, std::vector<Int> elements) {
  if (m <= 0) throw InvalidSystem("modulus must be positive, got " + std::to_string(m));
  if (elements.empty()) throw InvalidSystem("S must be nonempty");
  std::set<Int> seen_values;
  std::set<Int> seen_residues;
  for (Int s : elements) {
    if (s <= 0) throw InvalidSystem("elements of S must be positive, got " + std::to_string(s));
    if (!seen_values.insert(s).second)
      throw InvalidSystem("duplicate element " + std::to_string(s) + " in S");
    // For m = 1 every pair collides, which limits the classical case to S = (s).
    if (!seen_residues.insert(residue(s, m)).second)
      throw InvalidSystem("element " + std::to_string(s) + " repeats a residue modulo " +
                          std::to_string(m));
  }
  return ModularSystem(m, std::move(elements));
}

namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

Int parse_int(std::string_view token) {
  Int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty())
    throw std::invalid_argument("not an integer: '" + std::string(token) + "'");
  return value;
}

}  // namespace

std::vector<Int> parse_int_list(std::string_view text) {
  const std::string compact = strip_spaces(text);
  std::vector<Int> out;
  if (compact.empty()) return out;
  std::string_view rest = compact;
  while (true) {
    const auto comma = rest.find(',');
    out.push_back(parse_int(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

ModularSystem parse_system(std::string_view text) {
  const std::string compact = strip_spaces(text);
  const auto semi = compact.find(';');
  if (semi == std::string::npos || compact.rfind("m=", 0) != 0 ||
      compact.compare(semi + 1, 2, "S=") != 0)
    throw InvalidSystem("expected 'm=<int>;S=<int>,...', got '" + std::string(text) + "'");
  try {
    const Int m = parse_int(std::string_view(compact).substr(2, semi - 2));
    auto elements = parse_int_list(std::string_view(compact).substr(semi + 3));
    return make_system(m, std::move(elements));
  } catch (const std::invalid_argument& e) {
    throw InvalidSystem(e.what());
  }
}

std::string to_string(const ModularSystem& sys) {
  std::ostringstream os;
  os << "m=" << sys.modulus() << ";S=";
  for (std::size_t i = 0; i < sys.size(); ++i) os << (i ? "," : "") << sys.element(i);
  return os.str();
}

std::optional<Decomposition> try_decompose(Int a, const ModularSystem& sys) {
  const Int m = sys.modulus();
  const Int r = residue(a, m);
  for (std::size_t j = 0; j < sys.size(); ++j) {
    const Int s = sys.element(j);
    if (residue(s, m) != r) continue;
    if (a < s) return std::nullopt;
    return Decomposition{(a - s) / m, j, a};
  }
  return std::nullopt;
}

Decomposition decompose(Int a, const ModularSystem& sys) {
  if (auto d = try_decompose(a, sys)) return *d;
  throw NotInA(std::to_string(a) + " is not in A for " + to_string(sys));
}

bool in_a(Int a, const ModularSystem& sys) { return try_decompose(a, sys).has_value(); }

namespace {

// Strict "comes before" in N-form order.
bool n_form_before(const Decomposition& x, const Decomposition& y) {
  if (x.u != y.u) return x.u > y.u;
  return x.s_index < y.s_index;
}

}  // namespace

NFormPartition NFormPartition::from_entries(std::vector<Decomposition> entries) {
  NFormPartition out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i > 0 && n_form_before(entries[i], entries[i - 1]))
      throw std::invalid_argument("entries are not in standard N-form order");
    out.weight_ = checked::add(out.weight_, entries[i].value);
  }
  out.entries_ = std::move(entries);
  return out;
}

std::vector<Int> NFormPartition::parts() const {
  std::vector<Int> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.value);
  return out;
}

bool NFormPartition::strictly_decreasing_u() const {
  for (std::size_t i = 1; i < entries_.size(); ++i)
    if (entries_[i].u >= entries_[i - 1].u) return false;
  return true;
}

std::strong_ordering operator<=>(const NFormPartition& a, const NFormPartition& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].u != b[i].u) return b[i].u <=> a[i].u;
    if (a[i].s_index != b[i].s_index) return a[i].s_index <=> b[i].s_index;
  }
  return a.size() <=> b.size();
}

NFormPartition standard_n_form(std::span<const Int> parts, const ModularSystem& sys) {
  std::vector<Decomposition> entries;
  entries.reserve(parts.size());
  for (Int a : parts) entries.push_back(decompose(a, sys));
  std::stable_sort(entries.begin(), entries.end(), n_form_before);
  return NFormPartition::from_entries(std::move(entries));
}

std::string to_string(const NFormPartition& pi) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < pi.size(); ++i) os << (i ? "," : "") << pi[i].value;
  os << ")_N";
  return os.str();
}

}  // namespace ngraph
