#include "ocover/greedy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace ocover {

double set_cost(const SetSystem& sys, TagId tag, GroupId k,
                const SolverConfig& cfg) {
  double cost = static_cast<double>(sys.normals_covered(tag).size());
  for (std::size_t l = 0; l < sys.num_groups(); ++l) {
    if (static_cast<GroupId>(l) == k) continue;
    const double w = cfg.weight_convention == WeightConvention::kCoveredGroup
                         ? cfg.lambda_for(static_cast<GroupId>(l))
                         : cfg.lambda_for(k);
    cost += w * static_cast<double>(
                    sys.group_cover_count(tag, static_cast<GroupId>(l)));
  }
  return cost;
}

double set_price(const SetSystem& sys, TagId tag, GroupId k,
                 const DynamicBitset& uncovered, const SolverConfig& cfg) {
  const double newly = static_cast<double>(
      DynamicBitset::count_and(sys.outlier_mask(tag), uncovered));
  return set_cost(sys, tag, k, cfg) / (newly + cfg.epsilon);
}

namespace {

std::vector<OutlierRef> collect_refs(const TaggedDataset& dataset,
                                     const DynamicBitset& mask) {
  std::vector<OutlierRef> refs;
  mask.for_each_set(
      [&](std::size_t gid) { refs.push_back(dataset.ref_of_global(gid)); });
  return refs;
}

GreedySolution finish_solution(const TaggedDataset& dataset,
                               const SolverConfig& cfg, DescriptionSet desc,
                               bool wccm_objective) {
  desc.normalize();
  GreedySolution sol;
  sol.cov = evaluate_coverage(dataset, desc);
  sol.cost = wccm_objective
                 ? objective_d_wccm(sol.cov, cfg)
                 : static_cast<double>(sol.cov.covered_normals.size());
  sol.desc = std::move(desc);
  return sol;
}

}  // namespace

GreedyResult greedy_d_wccm(const TaggedDataset& dataset,
                           const SolverConfig& cfg) {
  const std::size_t K = dataset.num_groups();
  const std::size_t d = dataset.num_tags();
  cfg.validate(K);
  const SetSystem sys = build_set_system(dataset);

  GreedyResult result;
  for (std::size_t k = 0; k < K; ++k) {
    if (dataset.group_size(static_cast<GroupId>(k)) == 0) {
      result.trace.notes.push_back("group " + std::to_string(k) +
                                   " is empty; it is skipped");
    }
  }

  // Static per-(tag, group) costs; only the price denominator moves.
  std::vector<std::vector<double>> cost(d, std::vector<double>(K, 0.0));
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = 0; k < K; ++k) {
      cost[j][k] = set_cost(sys, static_cast<TagId>(j),
                            static_cast<GroupId>(k), cfg);
    }
  }

  // Phases follow ascending lambda; ties keep group order.
  std::vector<std::size_t> phase_order(K);
  std::iota(phase_order.begin(), phase_order.end(), std::size_t{0});
  std::stable_sort(phase_order.begin(), phase_order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return cfg.lambda_for(static_cast<GroupId>(a)) <
                            cfg.lambda_for(static_cast<GroupId>(b));
                   });

  DynamicBitset uncovered(dataset.num_outliers());
  uncovered.set_all();
  std::vector<bool> active(K, true);
  std::vector<bool> selected(d, false);
  std::vector<GroupId> abandoned;
  DescriptionSet desc = DescriptionSet::empty(K);

  DynamicBitset active_uncovered(dataset.num_outliers());
  auto has_active_uncovered = [&]() {
    active_uncovered.clear();
    for (std::size_t k = 0; k < K; ++k) {
      if (active[k]) active_uncovered |= sys.group_mask(static_cast<GroupId>(k));
    }
    active_uncovered &= uncovered;
    return active_uncovered.any();
  };

  bool done = false;
  for (std::size_t phase = 0; phase < K && !done; ++phase) {
    const std::size_t phase_group = phase_order[phase];
    const double tau =
        cfg.lambda_for(static_cast<GroupId>(phase_group)) / (1.0 + cfg.epsilon);

    while (true) {
      if (!has_active_uncovered()) {
        done = true;
        break;
      }
      // Globally cheapest (tag, group) pair among unselected tags that still
      // cover something, ties to the lowest tag index then group index.
      double best_price = std::numeric_limits<double>::infinity();
      std::size_t best_tag = d, best_group = K;
      for (std::size_t j = 0; j < d; ++j) {
        if (selected[j] || !sys.usable(static_cast<TagId>(j))) continue;
        const std::size_t newly = DynamicBitset::count_and(
            sys.outlier_mask(static_cast<TagId>(j)), uncovered);
        if (newly == 0) continue;
        const double denom = static_cast<double>(newly) + cfg.epsilon;
        for (std::size_t k = 0; k < K; ++k) {
          if (!active[k]) continue;
          const double price = cost[j][k] / denom;
          if (price < best_price) {
            best_price = price;
            best_tag = j;
            best_group = k;
          }
        }
      }

      if (best_tag == d || best_price > tau) {
        active[phase_group] = false;
        abandoned.push_back(static_cast<GroupId>(phase_group));
        break;
      }

      GreedyStep step;
      step.tag = static_cast<TagId>(best_tag);
      step.group = static_cast<GroupId>(best_group);
      step.price = best_price;
      step.abandoned_so_far = abandoned;
      DynamicBitset newly_mask = sys.outlier_mask(static_cast<TagId>(best_tag));
      newly_mask &= uncovered;
      step.newly_covered = collect_refs(dataset, newly_mask);
      result.trace.steps.push_back(std::move(step));

      desc.per_group[best_group].push_back(static_cast<TagId>(best_tag));
      selected[best_tag] = true;
      uncovered.and_not(sys.outlier_mask(static_cast<TagId>(best_tag)));
    }
  }

  result.solution = finish_solution(dataset, cfg, std::move(desc), true);
  return result;
}

GreedyResult greedy_d_bccm(const TaggedDataset& dataset,
                           const SolverConfig& cfg) {
  const std::size_t K = dataset.num_groups();
  const std::size_t d = dataset.num_tags();
  cfg.validate(K);
  const SetSystem sys = build_set_system(dataset);

  GreedyResult result;
  if (K > 1) {
    result.trace.notes.push_back(
        "alpha is a single shared bound per round: the target group's ignore "
        "budget divided by the other groups' total remaining tag budget, "
        "applied uniformly to every other group");
  }

  // Integer bookkeeping: target_k = ceil((1-rho)*o_k) outliers to cover,
  // ignore budget o_k - target_k = floor(rho*o_k).
  std::vector<long long> remaining(K), ignore_budget(K);
  std::vector<int> budget(K);
  for (std::size_t k = 0; k < K; ++k) {
    const GroupId gk = static_cast<GroupId>(k);
    const long long o_k = static_cast<long long>(dataset.group_size(gk));
    remaining[k] =
        tolerant_ceil((1.0 - cfg.rho_for(gk)) * static_cast<double>(o_k));
    ignore_budget[k] = o_k - remaining[k];
    budget[k] = cfg.theta_for(gk);
    if (o_k == 0) {
      result.trace.notes.push_back("group " + std::to_string(k) +
                                   " is empty; it is skipped");
    }
  }

  // Per-group uncovered masks over global outlier ids.
  std::vector<DynamicBitset> open(K, DynamicBitset(dataset.num_outliers()));
  for (std::size_t k = 0; k < K; ++k) open[k] = sys.group_mask(static_cast<GroupId>(k));

  std::vector<bool> selected(d, false);
  DescriptionSet desc = DescriptionSet::empty(K);

  for (std::size_t k = 0; k < K; ++k) {
    if (remaining[k] <= 0) {
      budget[k] = 0;
      continue;
    }
    bool met = false;
    for (int round = cfg.theta_for(static_cast<GroupId>(k)); round >= 1;
         --round) {
      long long other_budget = 0;
      for (std::size_t l = 0; l < K; ++l) {
        if (l != k) other_budget += budget[l];
      }
      const bool alpha_bounded = K > 1 && other_budget > 0;
      const long long alpha =
          alpha_bounded ? ignore_budget[k] / other_budget : -1;
      const long long beta =
          (remaining[k] + round - 1) / static_cast<long long>(round);

      double best_price = std::numeric_limits<double>::infinity();
      std::size_t best_tag = d;
      long long best_newly = 0;
      for (std::size_t j = 0; j < d; ++j) {
        if (selected[j]) continue;
        const long long newly = static_cast<long long>(DynamicBitset::count_and(
            sys.outlier_mask(static_cast<TagId>(j)), open[k]));
        if (newly < beta) continue;
        if (alpha_bounded) {
          bool ok = true;
          for (std::size_t l = 0; l < K && ok; ++l) {
            if (l == k) continue;
            const long long hits =
                static_cast<long long>(DynamicBitset::count_and(
                    sys.outlier_mask(static_cast<TagId>(j)), open[l]));
            if (hits > alpha) ok = false;
          }
          if (!ok) continue;
        }
        const double price =
            static_cast<double>(sys.normals_covered(static_cast<TagId>(j)).size()) /
            (static_cast<double>(newly) + cfg.epsilon);
        if (price < best_price) {
          best_price = price;
          best_tag = j;
          best_newly = newly;
        }
      }

      if (best_tag == d) {
        GreedyFailure fail;
        fail.group = static_cast<GroupId>(k);
        fail.rounds_left = round;
        fail.beta = beta;
        fail.alpha = alpha;
        fail.reason = GreedyFailureReason::kNoEligibleSet;
        fail.detail = "group " + std::to_string(k) + " still needs " +
                      std::to_string(remaining[k]) + " outliers in " +
                      std::to_string(round) +
                      " rounds but no unselected tag newly covers >= " +
                      std::to_string(beta) +
                      (alpha_bounded ? " while covering <= " +
                                           std::to_string(alpha) +
                                           " of each other group"
                                     : "");
        result.trace.failure = fail;
        return result;
      }

      GreedyStep step;
      step.tag = static_cast<TagId>(best_tag);
      step.group = static_cast<GroupId>(k);
      step.price = best_price;
      step.beta = beta;
      step.alpha = alpha;
      for (std::size_t l = 0; l < K; ++l) {
        DynamicBitset hit = sys.outlier_mask(static_cast<TagId>(best_tag));
        hit &= open[l];
        if (l != k) {
          ignore_budget[l] -= static_cast<long long>(hit.count());
        }
        hit.for_each_set([&](std::size_t gid) {
          step.newly_covered.push_back(dataset.ref_of_global(gid));
        });
        open[l].and_not(sys.outlier_mask(static_cast<TagId>(best_tag)));
      }
      std::sort(step.newly_covered.begin(), step.newly_covered.end());
      result.trace.steps.push_back(std::move(step));

      desc.per_group[k].push_back(static_cast<TagId>(best_tag));
      selected[best_tag] = true;
      remaining[k] -= best_newly;
      budget[k] = round - 1;
      if (remaining[k] <= 0) {
        budget[k] = 0;
        met = true;
        break;
      }
    }
    if (!met && remaining[k] > 0) {
      // Unreachable while beta forces full coverage on the last round; kept
      // as an honest terminal state should the eligibility rule change.
      GreedyFailure fail;
      fail.group = static_cast<GroupId>(k);
      fail.rounds_left = 0;
      fail.reason = GreedyFailureReason::kBudgetExhausted;
      fail.detail = "group " + std::to_string(k) + " exhausted its budget with " +
                    std::to_string(remaining[k]) + " outliers still to cover";
      result.trace.failure = fail;
      return result;
    }
  }

  result.solution = finish_solution(dataset, cfg, std::move(desc), false);
  return result;
}

namespace {

GreedyResult require_single_group(const TaggedDataset& dataset,
                                  const char* name) {
  if (dataset.num_groups() != 1) {
    throw ValidationError(std::string(name) +
                          " expects a single outlier group; dataset has " +
                          std::to_string(dataset.num_groups()));
  }
  return {};
}

}  // namespace

GreedyResult greedy_wccm(const TaggedDataset& dataset, const SolverConfig& cfg) {
  require_single_group(dataset, "greedy_wccm");
  return greedy_d_wccm(dataset, cfg);
}

GreedyResult greedy_bccm(const TaggedDataset& dataset, const SolverConfig& cfg) {
  require_single_group(dataset, "greedy_bccm");
  return greedy_d_bccm(dataset, cfg);
}

DescriptionSet prune_redundant(const TaggedDataset& dataset,
                               const DescriptionSet& desc) {
  const std::size_t K = dataset.num_groups();
  if (desc.num_groups() != K) {
    throw ValidationError("description group count does not match dataset");
  }
  const SetSystem sys = build_set_system(dataset);

  DescriptionSet pruned = DescriptionSet::empty(K);
  for (std::size_t k = 0; k < K; ++k) {
    std::vector<TagId> tags = desc.per_group[k];
    std::sort(tags.begin(), tags.end());
    tags.erase(std::unique(tags.begin(), tags.end()), tags.end());

    // Universe: group-k outliers the input description covers.
    DynamicBitset target(dataset.num_outliers());
    for (TagId t : tags) target |= sys.outlier_mask(t);
    target &= sys.group_mask(static_cast<GroupId>(k));

    std::vector<bool> used(tags.size(), false);
    while (target.any()) {
      std::size_t best = tags.size();
      std::size_t best_gain = 0;
      std::size_t best_normals = 0;
      for (std::size_t i = 0; i < tags.size(); ++i) {
        if (used[i]) continue;
        const std::size_t gain =
            DynamicBitset::count_and(sys.outlier_mask(tags[i]), target);
        const std::size_t normals = sys.normals_covered(tags[i]).size();
        if (gain == 0) continue;
        if (best == tags.size() || gain > best_gain ||
            (gain == best_gain && normals < best_normals)) {
          best = i;
          best_gain = gain;
          best_normals = normals;
        }
      }
      if (best == tags.size()) break;  // defensive; target is coverable
      used[best] = true;
      pruned.per_group[k].push_back(tags[best]);
      target.and_not(sys.outlier_mask(tags[best]));
    }
    std::sort(pruned.per_group[k].begin(), pruned.per_group[k].end());
  }
  return pruned;
}

}  // namespace ocover
