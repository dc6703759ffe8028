#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ngraph/core_partitions.hpp"

namespace ngraph {

/// One row of an N-graph: `m_count` entries equal to the modulus followed by
/// one terminal element of S.
struct GraphRow {
  Int m_count = 0;
  Int terminal = 0;

  std::size_t length() const { return static_cast<std::size_t>(m_count) + 1; }
  Int sum(Int m) const { return m_count * m + terminal; }

  friend bool operator==(const GraphRow&, const GraphRow&) = default;
};

/// Left-aligned rows, one per part of an N-form partition. Rows and columns
/// are 1-based in documentation; the accessors below are 0-based.
class NGraph {
 public:
  NGraph(Int modulus, std::vector<GraphRow> rows) : modulus_(modulus), rows_(std::move(rows)) {}

  Int modulus() const { return modulus_; }
  std::span<const GraphRow> rows() const { return rows_; }
  std::size_t row_count() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }

  /// Entry at (row, col), if the row reaches that column.
  std::optional<Int> entry(std::size_t row, std::size_t col) const;
  std::size_t entry_count() const;
  Int weight() const;

  friend bool operator==(const NGraph&, const NGraph&) = default;

 private:
  Int modulus_;
  std::vector<GraphRow> rows_;
};

/// Hook i of a graph: the row arm runs right from the diagonal cell (i, i),
/// the column arm runs down from the cell below it.
struct Hook {
  std::size_t index = 0;        ///< 1-based diagonal position
  std::size_t x = 0;            ///< row-arm entries, corner included
  std::size_t y = 0;            ///< column-arm entries strictly below the corner
  Int row_terminal = 0;         ///< element of S ending the row arm
  std::optional<Int> column_terminal;  ///< S-element ending the column arm, if any
  Int m_entries = 0;            ///< number of entries equal to the modulus
  Int hook_number = 0;

  std::size_t entry_count() const { return x + y; }
  friend bool operator==(const Hook&, const Hook&) = default;
};

/// Hook numbers in diagonal order.
class HookPartition {
 public:
  HookPartition() = default;
  explicit HookPartition(std::vector<Int> hooks);

  std::span<const Int> hooks() const { return hooks_; }
  std::size_t size() const { return hooks_.size(); }
  Int weight() const { return weight_; }
  Int operator[](std::size_t i) const { return hooks_[i]; }

  friend bool operator==(const HookPartition&, const HookPartition&) = default;

 private:
  std::vector<Int> hooks_;
  Int weight_ = 0;
};

NGraph build_n_graph(const NFormPartition& pi, const ModularSystem& sys);

/// Side of the largest square in the upper-left corner; 0 for an empty graph.
std::size_t durfee_size(const NGraph& g);

std::vector<Hook> hook_decomposition(const NGraph& g);

HookPartition hook_numbers(const NGraph& g);

/// MacMahon's modular graph: the system with S = (m, m-1, ..., 1). For m = 1
/// this is the Ferrers graph with every dot replaced by 1.
NGraph macmahon_graph(const Partition& pi, Int m);

ModularSystem macmahon_system(Int m);

/// One row per line, entries separated by single spaces.
std::string render_text(const NGraph& g);

/// `(127,63,3)`
std::string to_string(const HookPartition& h);

}  // namespace ngraph
