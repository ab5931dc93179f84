#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ocover/bitset.hpp"
#include "ocover/coverage.hpp"
#include "ocover/set_system.hpp"
#include "ocover/types.hpp"

namespace ocover {

// One selection made by a greedy solver. `beta`/`alpha` carry the eligibility
// bounds in force for budgeted runs (-1 when not applicable or unbounded).
struct GreedyStep {
  TagId tag = -1;
  GroupId group = -1;
  double price = 0.0;
  std::vector<OutlierRef> newly_covered;
  std::vector<GroupId> abandoned_so_far;
  long long beta = -1;
  long long alpha = -1;
};

// Why a budgeted run came back empty.
enum class GreedyFailureReason { kNoEligibleSet, kBudgetExhausted };

struct GreedyFailure {
  GroupId group = -1;
  int rounds_left = 0;       // budget remaining at the failing step (incl. it)
  long long beta = -1;       // required newly covered target outliers
  long long alpha = -1;      // allowed coverage of each other group (-1: none)
  GreedyFailureReason reason = GreedyFailureReason::kNoEligibleSet;
  std::string detail;
};

struct GreedyTrace {
  std::vector<GreedyStep> steps;
  std::vector<std::string> notes;
  std::optional<GreedyFailure> failure;
};

struct GreedySolution {
  DescriptionSet desc;
  CoverageAssignment cov;
  double cost = 0.0;
};

// `solution` is absent exactly when a budgeted run found no feasible greedy
// completion; the trace then records the failing step. Empty is a legitimate
// outcome, not an error.
struct GreedyResult {
  std::optional<GreedySolution> solution;
  GreedyTrace trace;

  bool empty() const { return !solution.has_value(); }
};

// Cost of using `tag` to describe group k: outliers it covers in other
// groups, each weighted by lambda (convention per cfg), plus the normals it
// covers. Static over a run; independent of what is already covered.
double set_cost(const SetSystem& sys, TagId tag, GroupId k,
                const SolverConfig& cfg);

// Cost divided by how many still-uncovered outliers the tag would newly
// cover (any group), with epsilon keeping the ratio finite when it covers
// none. `uncovered` is a mask over global outlier ids.
double set_price(const SetSystem& sys, TagId tag, GroupId k,
                 const DynamicBitset& uncovered, const SolverConfig& cfg);

// Weighted-ignore greedy over all groups. Processes groups in ascending
// lambda order: each phase repeatedly takes the globally cheapest
// (tag, group) pair among active groups and stops covering a group once the
// cheapest price exceeds its ignore threshold lambda/(1+epsilon). Selected
// tags remove every outlier they cover from the uncovered universe.
// Always returns a solution; cost equals objective_d_wccm of the result.
GreedyResult greedy_d_wccm(const TaggedDataset& dataset,
                           const SolverConfig& cfg);

// Budgeted greedy: per group at most theta tags, uncovered at most
// floor(rho*o). Eligibility per round: a tag must newly cover at least
// beta = ceil(remaining/rounds_left) target outliers and at most alpha
// still-uncovered outliers of each other group; the cheapest eligible tag by
// normals-covered price wins. Outliers covered by any selection are removed
// from every group, so per-group covered sets never overlap. Returns an
// empty outcome when a round has no eligible tag.
GreedyResult greedy_d_bccm(const TaggedDataset& dataset,
                           const SolverConfig& cfg);

// Single-group specializations; reject datasets with more than one group.
GreedyResult greedy_wccm(const TaggedDataset& dataset, const SolverConfig& cfg);
GreedyResult greedy_bccm(const TaggedDataset& dataset, const SolverConfig& cfg);

// Set-cover pass over a solver output: per group, keeps a subset of the tags
// that covers exactly the same group outliers. Never increases covered
// normals; idempotent.
DescriptionSet prune_redundant(const TaggedDataset& dataset,
                               const DescriptionSet& desc);

}  // namespace ocover
