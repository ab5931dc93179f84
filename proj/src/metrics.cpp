#include "ocover/metrics.hpp"

#include <cmath>

namespace ocover {

double log_star(std::uint64_t m) {
  if (m == 0) return 0.0;
  double total = 0.0;
  double x = std::log2(static_cast<double>(m));
  while (x > 0.0) {
    total += x;
    x = std::log2(x);
  }
  return total;
}

double log2_choose(std::uint64_t n, std::uint64_t k) {
  if (k > n) {
    throw ValidationError("log2_choose: k=" + std::to_string(k) + " > n=" +
                          std::to_string(n));
  }
  if (k == 0 || k == n) return 0.0;
  static constexpr double kLn2 = 0.6931471805599453;
  return (std::lgamma(static_cast<double>(n) + 1.0) -
          std::lgamma(static_cast<double>(k) + 1.0) -
          std::lgamma(static_cast<double>(n - k) + 1.0)) /
         kLn2;
}

std::vector<GroupMetrics> compute_metrics(const TaggedDataset& dataset,
                                          const DescriptionSet& desc,
                                          const CoverageAssignment& cov) {
  const std::size_t K = dataset.num_groups();
  if (desc.num_groups() != K || cov.num_groups() != K) {
    throw ValidationError("metrics: group counts disagree");
  }
  const double n = static_cast<double>(dataset.num_normals());
  const double o = static_cast<double>(dataset.num_outliers());

  std::vector<GroupMetrics> out(K);
  for (std::size_t k = 0; k < K; ++k) {
    const GroupId gk = static_cast<GroupId>(k);
    const double o_k = static_cast<double>(dataset.group_size(gk));
    GroupMetrics& m = out[k];
    if (o_k > 0) {
      m.fuo = static_cast<double>(cov.uncovered_outliers[k].size()) / o_k;
    }
    if (K > 1 && o - o_k > 0) {
      m.fco = static_cast<double>(cov.cross_covered[k].size()) / (o - o_k);
    }
    if (n > 0) {
      m.fcn = static_cast<double>(cov.covered_normals_by_group[k].size()) / n;
    }
    m.nt = static_cast<int>(desc.per_group[k].size());
    if (m.nt > 0) {
      long long preds = 0;
      for (TagId t : desc.per_group[k]) preds += dataset.universe().tag(t).length();
      m.al = static_cast<double>(preds) / static_cast<double>(m.nt);
    }
  }
  return out;
}

MdlBreakdown mdl_cost(const TaggedDataset& dataset, const DescriptionSet& desc,
                      const CoverageAssignment& cov) {
  const std::size_t K = dataset.num_groups();
  if (desc.num_groups() != K || cov.num_groups() != K) {
    throw ValidationError("mdl_cost: group counts disagree");
  }
  const std::uint64_t d_tilde =
      static_cast<std::uint64_t>(dataset.universe().num_unique_predicates());
  const std::uint64_t n = dataset.num_normals();
  const std::uint64_t o = dataset.num_outliers();

  auto choose_term = [](std::uint64_t upper, std::uint64_t lower,
                        const std::string& what) {
    if (lower > upper) {
      throw ValidationError("mdl_cost: " + what + " needs C(" +
                            std::to_string(upper) + "," +
                            std::to_string(lower) +
                            "); the coverage assignment is inconsistent");
    }
    return log2_choose(upper, lower);
  };

  MdlBreakdown mdl;
  mdl.per_group.resize(K);
  for (std::size_t k = 0; k < K; ++k) {
    const GroupId gk = static_cast<GroupId>(k);
    MdlGroupTerms& terms = mdl.per_group[k];
    const std::uint64_t v = cov.uncovered_outliers[k].size();
    const std::uint64_t u = cov.covered_normals_by_group[k].size();
    const std::uint64_t z = cov.cross_covered[k].size();
    // instances covered by this group's description
    const std::uint64_t covered_k = dataset.group_size(gk) - v + u + z;

    for (TagId t : desc.per_group[k]) {
      const std::uint64_t n_t =
          static_cast<std::uint64_t>(dataset.universe().tag(t).length());
      terms.tag_bits += log_star(n_t) +
                        choose_term(d_tilde, n_t,
                                    "tag term (group " + std::to_string(k) + ")") +
                        static_cast<double>(n_t);
    }
    terms.v_bits = log_star(v) +
                   choose_term(n + o - covered_k, v,
                               "v term (group " + std::to_string(k) + ")");
    terms.u_bits = log_star(u) +
                   choose_term(covered_k, u,
                               "u term (group " + std::to_string(k) + ")");
    if (K > 1) {
      terms.z_bits = log_star(z) +
                     choose_term(covered_k, z,
                                 "z term (group " + std::to_string(k) + ")");
    }
    mdl.total_bits += terms.total();
  }
  return mdl;
}

MetricsReport compute_report(const TaggedDataset& dataset,
                             const DescriptionSet& desc,
                             const CoverageAssignment& cov) {
  MetricsReport report;
  report.per_group = compute_metrics(dataset, desc, cov);
  report.mdl = mdl_cost(dataset, desc, cov);
  return report;
}

}  // namespace ocover
