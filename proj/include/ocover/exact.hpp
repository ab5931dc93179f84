#pragma once

#include <cstdint>

#include "ocover/coverage.hpp"
#include "ocover/types.hpp"

namespace ocover {

struct OracleResult {
  bool feasible = false;
  DescriptionSet best;        // meaningful only when feasible
  double cost = 0.0;
  std::uint64_t num_optima = 0;
  std::uint64_t enumerated = 0;
};

// Throws LimitError when the instance is too large to enumerate: the
// single-group kinds walk all 2^d tag subsets (d <= 20 required), the
// multi-group kinds walk all (K+1)^d assignments of tags to
// {unused, group 1..K}. Both are additionally capped by `limit`.
void check_exact_limits(ProblemKind kind, const TaggedDataset& dataset,
                        std::uint64_t limit);

// Brute-force optimum by full enumeration. Deliberately simple: every
// candidate is scored from scratch so this can serve as ground truth for the
// greedy solvers. Ties are broken by the lexicographically smallest
// tag-to-group assignment vector; `num_optima` counts cost ties.
// PDM/BCCM/D-BCCM may come back infeasible; WCCM/D-WCCM never do.
OracleResult solve_exact(ProblemKind kind, const TaggedDataset& dataset,
                         const SolverConfig& cfg,
                         std::uint64_t limit = (std::uint64_t{1} << 22));

}  // namespace ocover
