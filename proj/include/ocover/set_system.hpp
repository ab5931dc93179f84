#pragma once

#include <vector>

#include "ocover/bitset.hpp"
#include "ocover/types.hpp"

namespace ocover {

// Per-tag cover sets over a dataset: for every tag, which outliers (across
// all groups) and which normals carry it. Outliers are indexed both as
// (group, index) refs and as bits in a global mask so solvers can take
// intersection counts without touching the instance lists.
class SetSystem {
 public:
  std::size_t num_tags() const { return outlier_refs_.size(); }
  std::size_t num_groups() const { return group_sizes_.size(); }
  std::size_t num_normals() const { return num_normals_; }
  std::size_t num_outliers() const { return num_outliers_; }
  std::size_t group_size(GroupId k) const {
    return group_sizes_[static_cast<std::size_t>(k)];
  }
  std::size_t group_offset(GroupId k) const {
    return group_offsets_[static_cast<std::size_t>(k)];
  }

  const std::vector<OutlierRef>& outliers_covered(TagId j) const {
    return outlier_refs_[static_cast<std::size_t>(j)];
  }
  const std::vector<std::int32_t>& normals_covered(TagId j) const {
    return normal_ids_[static_cast<std::size_t>(j)];
  }
  // Count of group-k outliers covered by tag j (over the full dataset).
  std::size_t group_cover_count(TagId j, GroupId k) const {
    return group_counts_[static_cast<std::size_t>(j)]
                        [static_cast<std::size_t>(k)];
  }

  // A tag is usable when it covers at least one outlier.
  bool usable(TagId j) const { return !outlier_refs_[static_cast<std::size_t>(j)].empty(); }

  const DynamicBitset& outlier_mask(TagId j) const {
    return outlier_masks_[static_cast<std::size_t>(j)];
  }
  const DynamicBitset& normal_mask(TagId j) const {
    return normal_masks_[static_cast<std::size_t>(j)];
  }
  // Mask of global outlier ids belonging to group k.
  const DynamicBitset& group_mask(GroupId k) const {
    return group_masks_[static_cast<std::size_t>(k)];
  }

  friend SetSystem build_set_system(const TaggedDataset& dataset);

 private:
  std::vector<std::vector<OutlierRef>> outlier_refs_;
  std::vector<std::vector<std::int32_t>> normal_ids_;
  std::vector<std::vector<std::size_t>> group_counts_;
  std::vector<DynamicBitset> outlier_masks_;
  std::vector<DynamicBitset> normal_masks_;
  std::vector<DynamicBitset> group_masks_;
  std::vector<std::size_t> group_sizes_;
  std::vector<std::size_t> group_offsets_;
  std::size_t num_normals_ = 0;
  std::size_t num_outliers_ = 0;
};

SetSystem build_set_system(const TaggedDataset& dataset);

}  // namespace ocover
