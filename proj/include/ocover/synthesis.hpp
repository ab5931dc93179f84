#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ocover/types.hpp"

namespace ocover {

enum class ColumnKind { kCategorical, kNumeric };

struct ColumnSpec {
  std::string name;
  ColumnKind kind = ColumnKind::kCategorical;
};

// Raw feature rows with an already-separated label: 0 = normal,
// 1..K = outlier group. Cells are strings; the empty string and "?" denote
// missing values.
struct FeatureTable {
  std::vector<ColumnSpec> schema;
  std::vector<std::vector<std::string>> rows;
  std::vector<int> labels;
  int num_groups = 0;

  std::size_t num_rows() const { return rows.size(); }
  std::size_t num_columns() const { return schema.size(); }
  void validate() const;
  bool all_categorical() const;
};

struct SynthesisConfig {
  int max_len = 3;       // predicates per tag
  int max_tags = 2000;   // universe cap
  int min_support = 1;   // outliers a tag must cover
  int bins = 4;          // quantile bins for numeric columns
  std::uint64_t seed = 0;

  void validate() const;
};

// Replaces each numeric column with quantile-bin labels computed over all
// rows; already-categorical columns pass through. Missing cells become their
// own level. Deterministic; a column with no finite value is an error.
FeatureTable discretize(const FeatureTable& table, const SynthesisConfig& cfg);

// Every conjunction of at most max_len distinct-feature predicates whose
// outlier support reaches min_support, in canonical (feature, value) order.
// Refuses (LimitError) instead of truncating when the lattice explodes.
TagUniverse enumerate_conjunctions(const FeatureTable& table,
                                   const SynthesisConfig& cfg);

// Maps table rows onto the universe: an instance carries a tag when it
// satisfies all of its predicates.
TaggedDataset build_dataset(const FeatureTable& table,
                            const TagUniverse& universe);

// Keeps the max_tags best tags by (outliers covered - normals covered),
// ties to shorter tags then lower id; survivors are reindexed densely in
// their original order.
TagUniverse cap_universe(const TagUniverse& universe,
                         const TaggedDataset& dataset,
                         const SynthesisConfig& cfg);

// cap_universe plus reprojection of the dataset onto the capped universe.
TaggedDataset cap_and_project(const TaggedDataset& dataset,
                              const SynthesisConfig& cfg);

// discretize -> enumerate_conjunctions -> build_dataset -> cap_and_project.
TaggedDataset synthesize_dataset(const FeatureTable& table,
                                 const SynthesisConfig& cfg);

}  // namespace ocover
