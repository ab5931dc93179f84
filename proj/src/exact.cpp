#include "ocover/exact.hpp"

#include <cmath>
#include <limits>

#include "ocover/bitset.hpp"
#include "ocover/set_system.hpp"

namespace ocover {

namespace {

bool single_group_kind(ProblemKind kind) {
  return kind == ProblemKind::kPdm || kind == ProblemKind::kWccm ||
         kind == ProblemKind::kBccm;
}

}  // namespace

void check_exact_limits(ProblemKind kind, const TaggedDataset& dataset,
                        std::uint64_t limit) {
  const std::size_t d = dataset.num_tags();
  const std::size_t K = dataset.num_groups();
  if (single_group_kind(kind)) {
    if (K != 1) {
      throw ValidationError(to_string(kind) +
                            " is defined for a single outlier group; dataset "
                            "has " + std::to_string(K));
    }
    if (d > 20) {
      throw LimitError("exact " + to_string(kind) + " enumerates 2^d subsets; d=" +
                       std::to_string(d) + " exceeds the d<=20 bound");
    }
  }
  const std::uint64_t radix = static_cast<std::uint64_t>(K) + 1;
  std::uint64_t total = 1;
  for (std::size_t j = 0; j < d; ++j) {
    if (total > limit / radix) {
      throw LimitError("exact " + to_string(kind) + " would enumerate more than " +
                       std::to_string(limit) +
                       " candidates ((K+1)^d overflows the limit)");
    }
    total *= radix;
  }
  if (total > limit) {
    throw LimitError("exact " + to_string(kind) + " would enumerate " +
                     std::to_string(total) + " candidates > limit " +
                     std::to_string(limit));
  }
}

OracleResult solve_exact(ProblemKind kind, const TaggedDataset& dataset,
                         const SolverConfig& cfg, std::uint64_t limit) {
  check_exact_limits(kind, dataset, limit);
  const std::size_t d = dataset.num_tags();
  const std::size_t K = dataset.num_groups();
  cfg.validate(K);

  const SetSystem sys = build_set_system(dataset);
  const std::size_t n_words_outliers = dataset.num_outliers();
  const std::size_t n_words_normals = dataset.num_normals();

  std::vector<long long> rho_allowed(K);
  for (std::size_t k = 0; k < K; ++k) {
    rho_allowed[k] =
        tolerant_floor(cfg.rho_for(static_cast<GroupId>(k)) *
                       static_cast<double>(dataset.group_size(static_cast<GroupId>(k))));
  }

  // Digits assign each tag to 0 (unused) or g+1 (group g); the odometer below
  // visits assignment vectors in lexicographic order with digit 0 most
  // significant, so the first optimum seen is the lexicographic tie winner.
  std::vector<int> digits(d, 0);
  const int radix = static_cast<int>(K) + 1;

  OracleResult result;
  result.best = DescriptionSet::empty(K);
  double best_cost = std::numeric_limits<double>::infinity();
  bool found = false;
  std::vector<int> best_digits;

  std::vector<DynamicBitset> outlier_union(K, DynamicBitset(n_words_outliers));
  std::vector<DynamicBitset> normal_union(K, DynamicBitset(n_words_normals));
  DynamicBitset all_normals(n_words_normals);
  DynamicBitset others(n_words_outliers);

  while (true) {
    ++result.enumerated;

    for (std::size_t k = 0; k < K; ++k) {
      outlier_union[k].clear();
      normal_union[k].clear();
    }
    std::size_t total_tags = 0;
    std::vector<std::size_t> tags_per_group(K, 0);
    for (std::size_t j = 0; j < d; ++j) {
      if (digits[j] == 0) continue;
      const std::size_t k = static_cast<std::size_t>(digits[j] - 1);
      outlier_union[k] |= sys.outlier_mask(static_cast<TagId>(j));
      normal_union[k] |= sys.normal_mask(static_cast<TagId>(j));
      ++tags_per_group[k];
      ++total_tags;
    }

    all_normals.clear();
    for (std::size_t k = 0; k < K; ++k) all_normals |= normal_union[k];
    const long long u_count = static_cast<long long>(all_normals.count());

    bool feasible = true;
    double cost = 0.0;
    switch (kind) {
      case ProblemKind::kPdm: {
        const long long covered =
            static_cast<long long>(DynamicBitset::count_and(
                outlier_union[0], sys.group_mask(0)));
        feasible = covered == static_cast<long long>(dataset.group_size(0)) &&
                   u_count == 0;
        cost = static_cast<double>(total_tags);
        break;
      }
      case ProblemKind::kWccm: {
        const long long covered =
            static_cast<long long>(DynamicBitset::count_and(
                outlier_union[0], sys.group_mask(0)));
        const long long v =
            static_cast<long long>(dataset.group_size(0)) - covered;
        cost = static_cast<double>(u_count) +
               cfg.lambda_for(0) * static_cast<double>(v);
        break;
      }
      case ProblemKind::kBccm: {
        const long long covered =
            static_cast<long long>(DynamicBitset::count_and(
                outlier_union[0], sys.group_mask(0)));
        const long long v =
            static_cast<long long>(dataset.group_size(0)) - covered;
        feasible = static_cast<long long>(total_tags) <= cfg.theta_for(0) &&
                   v <= rho_allowed[0];
        cost = static_cast<double>(u_count);
        break;
      }
      case ProblemKind::kDWccm:
      case ProblemKind::kDBccm: {
        cost = static_cast<double>(u_count);
        for (std::size_t k = 0; k < K; ++k) {
          others.clear();
          for (std::size_t l = 0; l < K; ++l) {
            if (l != k) others |= outlier_union[l];
          }
          others &= sys.group_mask(static_cast<GroupId>(k));
          // ignored = |(G_k \ own) ∪ (G_k ∩ others)| = o_k - |own| + |own ∩ others|
          DynamicBitset own = outlier_union[k];
          own &= sys.group_mask(static_cast<GroupId>(k));
          const long long own_count = static_cast<long long>(own.count());
          own &= others;
          const long long both = static_cast<long long>(own.count());
          const long long o_k =
              static_cast<long long>(dataset.group_size(static_cast<GroupId>(k)));
          const long long eff = o_k - own_count + both;
          if (kind == ProblemKind::kDWccm) {
            cost += cfg.lambda_for(static_cast<GroupId>(k)) *
                    static_cast<double>(eff);
          } else {
            if (static_cast<long long>(tags_per_group[k]) >
                    cfg.theta_for(static_cast<GroupId>(k)) ||
                eff > rho_allowed[k]) {
              feasible = false;
            }
          }
        }
        break;
      }
    }

    if (feasible) {
      if (!found || cost < best_cost) {
        found = true;
        best_cost = cost;
        best_digits = digits;
        result.num_optima = 1;
      } else if (cost == best_cost) {
        ++result.num_optima;
      }
    }

    // next assignment vector
    bool wrapped = true;
    for (std::size_t pos = d; pos-- > 0;) {
      if (++digits[pos] < radix) {
        wrapped = false;
        break;
      }
      digits[pos] = 0;
    }
    if (wrapped) break;
  }

  result.feasible = found;
  if (found) {
    result.cost = best_cost;
    for (std::size_t j = 0; j < d; ++j) {
      if (best_digits[j] != 0) {
        result.best.per_group[static_cast<std::size_t>(best_digits[j] - 1)]
            .push_back(static_cast<TagId>(j));
      }
    }
  } else {
    result.cost = std::numeric_limits<double>::infinity();
  }
  return result;
}

}  // namespace ocover
