#include "ocover/set_system.hpp"

namespace ocover {

SetSystem build_set_system(const TaggedDataset& dataset) {
  SetSystem sys;
  const std::size_t d = dataset.num_tags();
  const std::size_t K = dataset.num_groups();
  sys.num_normals_ = dataset.num_normals();
  sys.num_outliers_ = dataset.num_outliers();

  sys.outlier_refs_.resize(d);
  sys.normal_ids_.resize(d);
  sys.group_counts_.assign(d, std::vector<std::size_t>(K, 0));
  sys.outlier_masks_.assign(d, DynamicBitset(sys.num_outliers_));
  sys.normal_masks_.assign(d, DynamicBitset(sys.num_normals_));
  sys.group_masks_.assign(K, DynamicBitset(sys.num_outliers_));
  sys.group_sizes_.resize(K);
  sys.group_offsets_.resize(K);

  for (std::size_t k = 0; k < K; ++k) {
    const GroupId gk = static_cast<GroupId>(k);
    sys.group_sizes_[k] = dataset.group_size(gk);
    sys.group_offsets_[k] = dataset.group_offset(gk);
    for (std::size_t i = 0; i < dataset.group_size(gk); ++i) {
      const std::size_t gid = sys.group_offsets_[k] + i;
      sys.group_masks_[k].set(gid);
      for (TagId j : dataset.outlier(gk, i)) {
        sys.outlier_refs_[static_cast<std::size_t>(j)].push_back(
            OutlierRef{gk, static_cast<std::int32_t>(i)});
        sys.group_counts_[static_cast<std::size_t>(j)][k] += 1;
        sys.outlier_masks_[static_cast<std::size_t>(j)].set(gid);
      }
    }
  }
  for (std::size_t i = 0; i < dataset.num_normals(); ++i) {
    for (TagId j : dataset.normal(i)) {
      sys.normal_ids_[static_cast<std::size_t>(j)].push_back(
          static_cast<std::int32_t>(i));
      sys.normal_masks_[static_cast<std::size_t>(j)].set(i);
    }
  }
  return sys;
}

}  // namespace ocover
