#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ocover/types.hpp"

namespace ocover {

// Purity and interpretability scores for one group. Fractions are absent
// when their denominator is zero (e.g. fco for a single-group dataset).
// Lower is better for every field.
struct GroupMetrics {
  std::optional<double> fuo;  // uncovered outliers / group size
  std::optional<double> fco;  // other-group outliers covered / (o - o_k)
  std::optional<double> fcn;  // normals covered by this description / n
  double al = 0.0;            // mean predicates per selected tag
  int nt = 0;                 // selected tag count
};

struct MdlGroupTerms {
  double tag_bits = 0.0;
  double v_bits = 0.0;
  double u_bits = 0.0;
  double z_bits = 0.0;

  double total() const { return tag_bits + v_bits + u_bits + z_bits; }
};

// Two-part code length for transmitting the outlier identities given the
// description. The iterated-log integer code uses log_star(0) = 0 and omits
// the method-independent constant, so scores are comparable across runs of
// this tool but carry no absolute meaning.
struct MdlBreakdown {
  double total_bits = 0.0;
  std::vector<MdlGroupTerms> per_group;
};

struct MetricsReport {
  std::vector<GroupMetrics> per_group;
  MdlBreakdown mdl;
};

// Sum of the strictly positive terms of log2(m), log2(log2(m)), ...;
// 0 for m = 0 and m = 1.
double log_star(std::uint64_t m);

// log2 of the binomial coefficient via lgamma. Throws when k > n.
double log2_choose(std::uint64_t n, std::uint64_t k);

std::vector<GroupMetrics> compute_metrics(const TaggedDataset& dataset,
                                          const DescriptionSet& desc,
                                          const CoverageAssignment& cov);

// Requires cov = evaluate_coverage(dataset, desc); an impossible binomial
// (lower index above upper) signals a cov not produced that way and throws
// naming the offending term. z terms are dropped for single-group datasets.
MdlBreakdown mdl_cost(const TaggedDataset& dataset, const DescriptionSet& desc,
                      const CoverageAssignment& cov);

MetricsReport compute_report(const TaggedDataset& dataset,
                             const DescriptionSet& desc,
                             const CoverageAssignment& cov);

}  // namespace ocover
