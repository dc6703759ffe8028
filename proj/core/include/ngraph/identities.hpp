#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "ngraph/enumeration.hpp"
#include "ngraph/graph.hpp"

namespace ngraph {

/// Which identity a verification run checks.
///   sidon   : p_A(n) = sum over H(n) of 2^e'           (S sum-free Sidon mod m)
///   single  : q_A(n) = |H(n)|                          (S = (s), m does not divide s)
///   sumfree : p_A(n) = sum over H(n) of prod r(h_i)    (S sum-free mod m, congruent pair sums equal)
enum class IdentityMode { Sidon, Single, SumFree };

std::string_view to_string(IdentityMode mode);
/// Throws std::invalid_argument on an unknown name.
IdentityMode parse_mode(std::string_view name);
Int default_n_max(IdentityMode mode);

/// Throws PreconditionViolated naming the first predicate the system fails.
void require_mode(IdentityMode mode, const ModularSystem& sys);

/// Hook-number partition of an A(n) partition, with each hook classified.
/// Throws PreconditionViolated if pi is not in A(n) and
/// InternalInvariantViolated if the image leaves H(n).
HCandidate hook_map(const NFormPartition& pi, const HClassifier& classifier);
HCandidate hook_map(const NFormPartition& pi, const ModularSystem& sys);

/// All A(n) partitions sharing one hook-number partition, kept sorted in
/// canonical N-form order.
struct Fiber {
  HCandidate target;
  std::vector<NFormPartition> members;
};

/// Builds the preimages of a target directly from its hook numbers: the
/// B-parts fix the bottom rows, the hook sums fix the top rows, and every
/// ordered pair (row end, column end) summing to t(h) of a B-part is one
/// choice. Choices are enumerated mixed-radix with the first B-part as the
/// fastest digit. Needs S sum-free mod m and either Sidon or
/// congruence-equality. Throws ReconstructionFailed when an assembled
/// partition is not a preimage of the target.
Fiber reconstruct_fiber(const HCandidate& target, const ModularSystem& sys);

/// Exhaustive preimage: filters A(n) by hook_map.
Fiber brute_fiber(const HCandidate& target, const ModularSystem& sys);

struct VerificationRow {
  Int n = 0;
  Count lhs = 0;
  Count rhs = 0;
  bool pass = false;
  std::vector<HCandidate> candidates;  ///< filled only when requested
};

struct VerificationReport {
  ModularSystem sys;
  IdentityMode mode;
  std::vector<VerificationRow> rows;
  bool all_pass = true;
};

struct VerifyOptions {
  bool keep_candidates = false;
  unsigned threads = 0;  ///< 0 picks the hardware concurrency
};

/// Checks the identity for n = 0..n_max. Rows come back in ascending n
/// whatever the thread count.
VerificationReport verify_identity(Int n_max, const ModularSystem& sys, IdentityMode mode,
                                   const VerifyOptions& options = {});

/// h_d != 2, h_i - h_{i+1} >= 6, and >= 7 when h_{i+1} is even.
bool alladi_conditions(std::span<const Int> parts);

}  // namespace ngraph
