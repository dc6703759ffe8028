#include "ngraph/graph.hpp"

#include <numeric>
#include <sstream>

namespace ngraph {

std::optional<Int> NGraph::entry(std::size_t row, std::size_t col) const {
  if (row >= rows_.size()) return std::nullopt;
  const GraphRow& r = rows_[row];
  if (col < static_cast<std::size_t>(r.m_count)) return modulus_;
  if (col == static_cast<std::size_t>(r.m_count)) return r.terminal;
  return std::nullopt;
}

std::size_t NGraph::entry_count() const {
  std::size_t total = 0;
  for (const auto& r : rows_) total += r.length();
  return total;
}

Int NGraph::weight() const {
  Int total = 0;
  for (const auto& r : rows_)
    total = checked::add(total, checked::add(checked::mul(r.m_count, modulus_), r.terminal));
  return total;
}

HookPartition::HookPartition(std::vector<Int> hooks) : hooks_(std::move(hooks)) {
  for (Int h : hooks_) weight_ = checked::add(weight_, h);
}

NGraph build_n_graph(const NFormPartition& pi, const ModularSystem& sys) {
  std::vector<GraphRow> rows;
  rows.reserve(pi.size());
  for (const auto& e : pi.entries()) rows.push_back({e.u, sys.element(e.s_index)});
  return NGraph(sys.modulus(), std::move(rows));
}

std::size_t durfee_size(const NGraph& g) {
  std::size_t d = 0;
  const auto rows = g.rows();
  while (d < rows.size() && rows[d].length() >= d + 1) ++d;
  return d;
}

std::vector<Hook> hook_decomposition(const NGraph& g) {
  const std::size_t d = durfee_size(g);
  const Int m = g.modulus();
  const auto rows = g.rows();
  std::vector<Hook> hooks;
  hooks.reserve(d);
  for (std::size_t i = 0; i < d; ++i) {
    Hook h;
    h.index = i + 1;
    const GraphRow& corner_row = rows[i];
    h.x = corner_row.length() - i;
    h.row_terminal = corner_row.terminal;
    h.m_entries = static_cast<Int>(h.x) - 1;
    Int s_sum = corner_row.terminal;
    // Column arm: cell (r, i) for every lower row long enough to reach column i.
    for (std::size_t r = i + 1; r < rows.size(); ++r) {
      if (rows[r].length() <= i) continue;
      ++h.y;
      if (static_cast<std::size_t>(rows[r].m_count) > i) {
        ++h.m_entries;
        h.column_terminal.reset();
      } else {
        s_sum = checked::add(s_sum, rows[r].terminal);
        h.column_terminal = rows[r].terminal;
      }
    }
    h.hook_number = checked::add(checked::mul(h.m_entries, m), s_sum);
    hooks.push_back(h);
  }
  return hooks;
}

HookPartition hook_numbers(const NGraph& g) {
  std::vector<Int> out;
  for (const auto& h : hook_decomposition(g)) out.push_back(h.hook_number);
  return HookPartition(std::move(out));
}

ModularSystem macmahon_system(Int m) {
  std::vector<Int> s(static_cast<std::size_t>(m));
  std::iota(s.rbegin(), s.rend(), Int{1});
  return make_system(m, std::move(s));
}

NGraph macmahon_graph(const Partition& pi, Int m) {
  const ModularSystem sys = macmahon_system(m);
  return build_n_graph(standard_n_form(pi.parts(), sys), sys);
}

std::string render_text(const NGraph& g) {
  std::ostringstream os;
  for (const auto& r : g.rows()) {
    for (Int c = 0; c < r.m_count; ++c) os << g.modulus() << ' ';
    os << r.terminal << '\n';
  }
  return os.str();
}

std::string to_string(const HookPartition& h) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < h.size(); ++i) os << (i ? "," : "") << h[i];
  os << ')';
  return os.str();
}

}  // namespace ngraph
