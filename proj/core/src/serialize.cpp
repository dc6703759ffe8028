#include "ngraph/serialize.hpp"

#include <sstream>

namespace ngraph {

using nlohmann::json;

std::string class_label(const HClass& cls) {
  if (cls.in_a()) return "A";
  if (cls.b_prime()) return "B'";
  if (cls.in_b()) return "B";
  return "-";
}

json to_json(const NGraph& g) {
  json rows = json::array();
  for (const auto& r : g.rows()) {
    json row = json::array();
    for (Int c = 0; c < r.m_count; ++c) row.push_back(g.modulus());
    row.push_back(r.terminal);
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const Hook& h) {
  json out{{"index", h.index},
           {"x", h.x},
           {"y", h.y},
           {"row_terminal", h.row_terminal},
           {"hook_number", h.hook_number}};
  out["column_terminal"] = h.column_terminal ? json(*h.column_terminal) : json(nullptr);
  return out;
}

json to_json(const HCandidate& c) {
  json classes = json::array();
  for (const auto& p : c.parts()) classes.push_back(class_label(p.cls));
  return json{{"parts", c.values()}, {"vs", c.vs()}, {"classes", classes}, {"e_prime", c.e_prime()}};
}

json to_json(const NFormPartition& pi) { return pi.parts(); }

json to_json(const Fiber& f) {
  json members = json::array();
  for (const auto& pi : f.members) members.push_back(to_json(pi));
  return json{{"target", to_json(f.target)}, {"members", members}};
}

json to_json(const VerificationReport& report, bool verbose) {
  json rows = json::array();
  for (const auto& row : report.rows) {
    json r{{"n", row.n}, {"p_A", row.lhs}, {"rhs", row.rhs}, {"pass", row.pass}};
    if (verbose) {
      json cands = json::array();
      for (const auto& c : row.candidates) cands.push_back(to_json(c));
      r["candidates"] = std::move(cands);
    }
    rows.push_back(std::move(r));
  }
  return json{{"system", to_string(report.sys)},
              {"mode", std::string(to_string(report.mode))},
              {"all_pass", report.all_pass},
              {"rows", std::move(rows)}};
}

std::string to_csv(const VerificationReport& report) {
  std::ostringstream os;
  os << "n,lhs,rhs,pass\n";
  for (const auto& row : report.rows)
    os << row.n << ',' << row.lhs << ',' << row.rhs << ',' << (row.pass ? "true" : "false") << '\n';
  return os.str();
}

}  // namespace ngraph
