#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "ngraph/identities.hpp"

namespace ngraph {

/// "A", "B" or "B'" ("-" outside H).
std::string class_label(const HClass& cls);

/// Array of rows, each an array of integers.
nlohmann::json to_json(const NGraph& g);
nlohmann::json to_json(const Hook& h);
/// {parts, vs, classes, e_prime}
nlohmann::json to_json(const HCandidate& c);
nlohmann::json to_json(const NFormPartition& pi);
/// {target, members}
nlohmann::json to_json(const Fiber& f);

/// {system, mode, all_pass, rows: [{n, p_A, rhs, pass[, candidates]}]}
nlohmann::json to_json(const VerificationReport& report, bool verbose);

/// Header `n,lhs,rhs,pass`, one line per n, booleans as true/false.
std::string to_csv(const VerificationReport& report);

}  // namespace ngraph
