#pragma once

#include <string>
#include <vector>

#include "ocover/types.hpp"

namespace ocover {

// Exact cover accounting for a description: which normals it touches, which
// outliers it misses, and which outliers it claims from other groups.
// Pure and order-independent over the tags of each group.
CoverageAssignment evaluate_coverage(const TaggedDataset& dataset,
                                     const DescriptionSet& desc);

// Weighted ignore objective: |u| plus, per group, lambda^(k) times the number
// of group-k outliers that end up ignored. An outlier is ignored when its own
// description misses it or another group's description covers it; an outlier
// hit by both causes counts once.
double objective_d_wccm(const CoverageAssignment& cov, const SolverConfig& cfg);

enum class ProblemKind { kPdm, kWccm, kBccm, kDWccm, kDBccm };

std::string to_string(ProblemKind kind);

struct FeasibilityReport {
  bool feasible = true;
  std::vector<std::string> violations;
};

// Constraint check for the hard-constrained formulations.
//   kPdm:   every outlier covered by its group's description, no normal covered
//   kBccm:  single group; |Y| <= theta and uncovered <= floor(rho*o)
//   kDBccm: the kBccm bounds per group
// kWccm/kDWccm carry no hard constraints and are rejected.
FeasibilityReport check_feasibility(const TaggedDataset& dataset,
                                    const DescriptionSet& desc,
                                    const SolverConfig& cfg, ProblemKind kind);

}  // namespace ocover
