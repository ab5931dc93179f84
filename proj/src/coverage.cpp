#include "ocover/coverage.hpp"

#include <algorithm>

#include "ocover/bitset.hpp"

namespace ocover {

CoverageAssignment evaluate_coverage(const TaggedDataset& dataset,
                                     const DescriptionSet& desc) {
  const std::size_t K = dataset.num_groups();
  const std::size_t d = dataset.num_tags();
  if (desc.num_groups() != K) {
    throw ValidationError("description has " +
                          std::to_string(desc.num_groups()) +
                          " groups but dataset has " + std::to_string(K));
  }
  for (const auto& tags : desc.per_group) {
    for (TagId t : tags) {
      if (t < 0 || static_cast<std::size_t>(t) >= d) {
        throw ValidationError("description references unknown tag " +
                              std::to_string(t));
      }
    }
  }

  // Membership masks per group: tag set of each description, as bitsets over
  // the universe, so instance tests are a single sorted-merge pass.
  std::vector<DynamicBitset> desc_masks(K, DynamicBitset(d));
  for (std::size_t k = 0; k < K; ++k) {
    for (TagId t : desc.per_group[k]) desc_masks[k].set(static_cast<std::size_t>(t));
  }
  auto hits = [](const std::vector<TagId>& instance, const DynamicBitset& mask) {
    for (TagId t : instance) {
      if (mask.test(static_cast<std::size_t>(t))) return true;
    }
    return false;
  };

  CoverageAssignment cov;
  cov.covered_normals_by_group.resize(K);
  cov.uncovered_outliers.resize(K);
  cov.cross_covered.resize(K);

  for (std::size_t i = 0; i < dataset.num_normals(); ++i) {
    bool covered = false;
    for (std::size_t k = 0; k < K; ++k) {
      if (hits(dataset.normal(i), desc_masks[k])) {
        cov.covered_normals_by_group[k].push_back(static_cast<std::int32_t>(i));
        covered = true;
      }
    }
    if (covered) cov.covered_normals.push_back(static_cast<std::int32_t>(i));
  }

  for (std::size_t k = 0; k < K; ++k) {
    const GroupId gk = static_cast<GroupId>(k);
    for (std::size_t i = 0; i < dataset.group_size(gk); ++i) {
      const auto& inst = dataset.outlier(gk, i);
      if (!hits(inst, desc_masks[k])) {
        cov.uncovered_outliers[k].push_back(static_cast<std::int32_t>(i));
      }
      for (std::size_t l = 0; l < K; ++l) {
        if (l == k) continue;
        if (hits(inst, desc_masks[l])) {
          cov.cross_covered[l].push_back(
              OutlierRef{gk, static_cast<std::int32_t>(i)});
        }
      }
    }
  }
  for (auto& z : cov.cross_covered) std::sort(z.begin(), z.end());
  return cov;
}

namespace {

// Group-k outliers counted as ignored by the weighted objective: missed by
// their own description or claimed by another group's.
std::vector<std::int32_t> ignored_outliers(const CoverageAssignment& cov,
                                           std::size_t k) {
  std::vector<std::int32_t> ignored = cov.uncovered_outliers[k];
  for (std::size_t l = 0; l < cov.num_groups(); ++l) {
    if (l == k) continue;
    for (const OutlierRef& ref : cov.cross_covered[l]) {
      if (static_cast<std::size_t>(ref.group) == k) ignored.push_back(ref.index);
    }
  }
  std::sort(ignored.begin(), ignored.end());
  ignored.erase(std::unique(ignored.begin(), ignored.end()), ignored.end());
  return ignored;
}

}  // namespace

double objective_d_wccm(const CoverageAssignment& cov,
                        const SolverConfig& cfg) {
  const std::size_t K = cov.num_groups();
  cfg.validate(K);
  double cost = static_cast<double>(cov.covered_normals.size());
  for (std::size_t k = 0; k < K; ++k) {
    cost += cfg.lambda_for(static_cast<GroupId>(k)) *
            static_cast<double>(ignored_outliers(cov, k).size());
  }
  return cost;
}

std::string to_string(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::kPdm: return "pdm";
    case ProblemKind::kWccm: return "wccm";
    case ProblemKind::kBccm: return "bccm";
    case ProblemKind::kDWccm: return "d-wccm";
    case ProblemKind::kDBccm: return "d-bccm";
  }
  return "?";
}

FeasibilityReport check_feasibility(const TaggedDataset& dataset,
                                    const DescriptionSet& desc,
                                    const SolverConfig& cfg,
                                    ProblemKind kind) {
  const std::size_t K = dataset.num_groups();
  if (kind == ProblemKind::kWccm || kind == ProblemKind::kDWccm) {
    throw ValidationError(to_string(kind) + " has no hard constraints to check");
  }
  if (kind == ProblemKind::kBccm && K != 1) {
    throw ValidationError("bccm feasibility applies to single-group datasets");
  }
  cfg.validate(K);
  const CoverageAssignment cov = evaluate_coverage(dataset, desc);

  FeasibilityReport report;
  auto violate = [&report](std::string msg) {
    report.feasible = false;
    report.violations.push_back(std::move(msg));
  };

  if (kind == ProblemKind::kPdm) {
    for (std::size_t k = 0; k < K; ++k) {
      if (!cov.uncovered_outliers[k].empty()) {
        violate("sufficiency group " + std::to_string(k) + ": " +
                std::to_string(cov.uncovered_outliers[k].size()) +
                " outliers uncovered");
      }
    }
    if (!cov.covered_normals.empty()) {
      violate("necessity: " + std::to_string(cov.covered_normals.size()) +
              " normals covered");
    }
    return report;
  }

  // kBccm / kDBccm
  for (std::size_t k = 0; k < K; ++k) {
    const GroupId gk = static_cast<GroupId>(k);
    const long long size_y = static_cast<long long>(desc.per_group[k].size());
    if (size_y > cfg.theta_for(gk)) {
      violate("cardinality group " + std::to_string(k) + ": |Y|=" +
              std::to_string(size_y) + " > theta=" +
              std::to_string(cfg.theta_for(gk)));
    }
    const long long allowed = tolerant_floor(
        cfg.rho_for(gk) * static_cast<double>(dataset.group_size(gk)));
    const long long uncovered =
        static_cast<long long>(cov.uncovered_outliers[k].size());
    if (uncovered > allowed) {
      violate("coverage group " + std::to_string(k) + ": " +
              std::to_string(uncovered) + " uncovered > floor(rho*o)=" +
              std::to_string(allowed));
    }
  }
  return report;
}

}  // namespace ocover
