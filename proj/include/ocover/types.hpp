#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ocover {

class Error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed inputs: bad tag indices, inconsistent shapes, schema violations.
class ValidationError : public Error {
  using Error::Error;
};

// Explicit refusal when an instance exceeds an enumeration or mining cap.
class LimitError : public Error {
  using Error::Error;
};

using TagId = std::int32_t;
using GroupId = std::int32_t;

// A (feature, value) equality test. An instance satisfies a tag when it
// satisfies every predicate of the tag.
struct Predicate {
  std::string feature;
  std::string value;

  friend auto operator<=>(const Predicate&, const Predicate&) = default;
};

struct Tag {
  TagId id = 0;
  std::vector<Predicate> predicates;

  int length() const { return static_cast<int>(predicates.size()); }
};

// The candidate tag vocabulary. Ids are dense 0..d-1 and no two tags carry
// the same predicate set.
class TagUniverse {
 public:
  TagUniverse() = default;
  explicit TagUniverse(std::vector<Tag> tags);

  std::size_t size() const { return tags_.size(); }
  bool empty() const { return tags_.empty(); }
  const Tag& tag(TagId id) const { return tags_.at(static_cast<std::size_t>(id)); }
  const std::vector<Tag>& tags() const { return tags_; }

  // Count of distinct (feature, value) pairs across all tags.
  int num_unique_predicates() const { return num_unique_predicates_; }

 private:
  std::vector<Tag> tags_;
  int num_unique_predicates_ = 0;
};

// Identifies one outlier: group index plus position within the group.
struct OutlierRef {
  GroupId group = 0;
  std::int32_t index = 0;

  friend auto operator<=>(const OutlierRef&, const OutlierRef&) = default;
};

// Normal and grouped outlier instances, each stored as a sorted sequence of
// tag ids. Immutable after construction; construction validates tag ranges
// and sorts/dedupes every instance.
class TaggedDataset {
 public:
  TaggedDataset(TagUniverse universe,
                std::vector<std::vector<TagId>> normals,
                std::vector<std::vector<std::vector<TagId>>> outlier_groups);

  const TagUniverse& universe() const { return universe_; }
  std::size_t num_tags() const { return universe_.size(); }

  std::size_t num_normals() const { return normals_.size(); }
  std::size_t num_groups() const { return groups_.size(); }
  std::size_t group_size(GroupId k) const {
    return groups_.at(static_cast<std::size_t>(k)).size();
  }
  std::size_t num_outliers() const { return num_outliers_; }

  const std::vector<TagId>& normal(std::size_t i) const { return normals_[i]; }
  const std::vector<TagId>& outlier(GroupId k, std::size_t i) const {
    return groups_[static_cast<std::size_t>(k)][i];
  }
  const std::vector<std::vector<TagId>>& normals() const { return normals_; }
  const std::vector<std::vector<std::vector<TagId>>>& groups() const {
    return groups_;
  }

  // Offset of group k in the global outlier numbering (groups concatenated).
  std::size_t group_offset(GroupId k) const {
    return offsets_[static_cast<std::size_t>(k)];
  }
  std::size_t global_outlier_id(OutlierRef ref) const {
    return group_offset(ref.group) + static_cast<std::size_t>(ref.index);
  }
  OutlierRef ref_of_global(std::size_t gid) const;

 private:
  TagUniverse universe_;
  std::vector<std::vector<TagId>> normals_;
  std::vector<std::vector<std::vector<TagId>>> groups_;
  std::vector<std::size_t> offsets_;
  std::size_t num_outliers_ = 0;
};

// Selected tags per outlier group. Multi-group solver outputs keep the
// per-group sets pairwise disjoint.
struct DescriptionSet {
  std::vector<std::vector<TagId>> per_group;

  std::size_t num_groups() const { return per_group.size(); }
  std::size_t total_tags() const {
    std::size_t s = 0;
    for (const auto& g : per_group) s += g.size();
    return s;
  }
  static DescriptionSet empty(std::size_t num_groups) {
    DescriptionSet d;
    d.per_group.resize(num_groups);
    return d;
  }
  // Sorts and dedupes each group in place.
  void normalize();

  friend bool operator==(const DescriptionSet&, const DescriptionSet&) = default;
};

// Derived cover sets for a description on a dataset. All indices local:
// covered_normals holds normal row indices, uncovered_outliers[k] holds
// positions within group k, cross_covered[k] holds outliers outside group k
// that the group-k description covers.
struct CoverageAssignment {
  std::vector<std::int32_t> covered_normals;                       // u
  std::vector<std::vector<std::int32_t>> covered_normals_by_group; // u^(k)
  std::vector<std::vector<std::int32_t>> uncovered_outliers;       // v^(k)
  std::vector<std::vector<OutlierRef>> cross_covered;              // z^(k)

  std::size_t num_groups() const { return uncovered_outliers.size(); }
};

// Which lambda weighs a cross-covered outlier in the set-cost formula:
// the weight of the group whose outlier is being covered (per-covered-group),
// or the weight of the target group being described (per-target-group).
enum class WeightConvention { kCoveredGroup, kTargetGroup };

enum class TieBreak { kLowestIndex };

struct SolverConfig {
  std::vector<double> lambda{1.0};  // >= 1, ignore-weight per group
  std::vector<int> theta{1};        // >= 1, description budget per group
  std::vector<double> rho{0.0};     // in [0,1), allowed uncovered fraction
  double epsilon = 1e-9;
  TieBreak tie_break = TieBreak::kLowestIndex;
  std::uint64_t seed = 0;
  WeightConvention weight_convention = WeightConvention::kCoveredGroup;

  // Scalar entries broadcast to every group; otherwise sizes must equal K.
  double lambda_for(GroupId k) const { return pick(lambda, k); }
  int theta_for(GroupId k) const {
    return theta.size() == 1 ? theta[0] : theta.at(static_cast<std::size_t>(k));
  }
  double rho_for(GroupId k) const { return pick(rho, k); }

  void validate(std::size_t num_groups) const;

 private:
  static double pick(const std::vector<double>& v, GroupId k) {
    return v.size() == 1 ? v[0] : v.at(static_cast<std::size_t>(k));
  }
};

// floor/ceil with a small symmetric tolerance, so that bounds like rho*o
// evaluate as written in decimal rather than at the mercy of binary
// representation error (0.8*5 must floor/ceil as 4).
inline long long tolerant_floor(double x) {
  return static_cast<long long>(std::floor(x + 1e-9));
}
inline long long tolerant_ceil(double x) {
  return static_cast<long long>(std::ceil(x - 1e-9));
}

}  // namespace ocover
