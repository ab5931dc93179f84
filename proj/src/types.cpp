#include "ocover/types.hpp"

#include <algorithm>
#include <set>

namespace ocover {

TagUniverse::TagUniverse(std::vector<Tag> tags) : tags_(std::move(tags)) {
  std::set<std::vector<Predicate>> seen;
  std::set<Predicate> unique_predicates;
  for (std::size_t i = 0; i < tags_.size(); ++i) {
    const Tag& t = tags_[i];
    if (t.id != static_cast<TagId>(i)) {
      throw ValidationError("tag at position " + std::to_string(i) +
                            " has id " + std::to_string(t.id) +
                            "; ids must be dense 0..d-1 in order");
    }
    if (t.predicates.empty()) {
      throw ValidationError("tag " + std::to_string(t.id) +
                            " has no predicates");
    }
    std::vector<Predicate> canon = t.predicates;
    std::sort(canon.begin(), canon.end());
    if (std::adjacent_find(canon.begin(), canon.end()) != canon.end()) {
      throw ValidationError("tag " + std::to_string(t.id) +
                            " repeats a predicate");
    }
    if (!seen.insert(canon).second) {
      throw ValidationError("tag " + std::to_string(t.id) +
                            " duplicates the predicate set of an earlier tag");
    }
    for (const auto& p : t.predicates) unique_predicates.insert(p);
  }
  num_unique_predicates_ = static_cast<int>(unique_predicates.size());
}

namespace {

void normalize_instance(std::vector<TagId>& tags, std::size_t d,
                        const std::string& what) {
  for (TagId t : tags) {
    if (t < 0 || static_cast<std::size_t>(t) >= d) {
      throw ValidationError(what + " references tag " + std::to_string(t) +
                            " but the universe has " + std::to_string(d) +
                            " tags");
    }
  }
  std::sort(tags.begin(), tags.end());
  tags.erase(std::unique(tags.begin(), tags.end()), tags.end());
}

}  // namespace

TaggedDataset::TaggedDataset(
    TagUniverse universe, std::vector<std::vector<TagId>> normals,
    std::vector<std::vector<std::vector<TagId>>> outlier_groups)
    : universe_(std::move(universe)),
      normals_(std::move(normals)),
      groups_(std::move(outlier_groups)) {
  if (groups_.empty()) {
    throw ValidationError("dataset needs at least one outlier group");
  }
  const std::size_t d = universe_.size();
  for (std::size_t i = 0; i < normals_.size(); ++i) {
    normalize_instance(normals_[i], d, "normal instance " + std::to_string(i));
  }
  offsets_.reserve(groups_.size());
  for (std::size_t k = 0; k < groups_.size(); ++k) {
    offsets_.push_back(num_outliers_);
    for (std::size_t i = 0; i < groups_[k].size(); ++i) {
      normalize_instance(groups_[k][i], d,
                         "outlier " + std::to_string(i) + " in group " +
                             std::to_string(k));
    }
    num_outliers_ += groups_[k].size();
  }
}

OutlierRef TaggedDataset::ref_of_global(std::size_t gid) const {
  for (std::size_t k = groups_.size(); k-- > 0;) {
    if (gid >= offsets_[k]) {
      return OutlierRef{static_cast<GroupId>(k),
                        static_cast<std::int32_t>(gid - offsets_[k])};
    }
  }
  throw ValidationError("global outlier id out of range");
}

void DescriptionSet::normalize() {
  for (auto& g : per_group) {
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
  }
}

void SolverConfig::validate(std::size_t num_groups) const {
  auto check_size = [&](std::size_t s, const char* name) {
    if (s != 1 && s != num_groups) {
      throw ValidationError(std::string(name) + " must have 1 or " +
                            std::to_string(num_groups) + " entries, got " +
                            std::to_string(s));
    }
  };
  check_size(lambda.size(), "lambda");
  check_size(theta.size(), "theta");
  check_size(rho.size(), "rho");
  for (double l : lambda) {
    if (!(l >= 1.0)) throw ValidationError("lambda must be >= 1");
  }
  for (int t : theta) {
    if (t < 1) throw ValidationError("theta must be >= 1");
  }
  for (double r : rho) {
    if (!(r >= 0.0 && r < 1.0)) throw ValidationError("rho must be in [0,1)");
  }
  if (!(epsilon > 0.0)) throw ValidationError("epsilon must be positive");
}

}  // namespace ocover
