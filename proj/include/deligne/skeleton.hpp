#pragma once

#include <optional>
#include <string>
#include <vector>

#include "deligne/arrangement.hpp"

namespace deligne {

// Directed edge of the skeleton: crossing one wall of a chamber.
// Labels are 1-based, walls are 0-based hyperplane indices.
struct Arrow {
  int source = -1;
  int target = -1;
  int wall = -1;
  int label = 0;
  bool operator==(const Arrow&) const = default;
};

// Skeleton of a simplicial essential arrangement: every chamber carries a
// labeling of its rays by 1..rank, propagated from the base chamber, and one
// outgoing arrow per label. The arrangement must outlive the graph.
class SkeletonGraph {
 public:
  SkeletonGraph(const Arrangement* arr, int base, std::vector<Arrow> arrows,
                std::vector<std::vector<IVec>> labeled_rays);

  const Arrangement& arrangement() const { return *arr_; }
  int base() const { return base_; }
  int labels() const { return labels_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(int chamber, int label) const;
  // Rays of the chamber in label order: entry i is the ray labeled i+1.
  const std::vector<IVec>& labeled_rays(int chamber) const;

 private:
  const Arrangement* arr_;
  int base_;
  int labels_;
  std::vector<Arrow> arrows_;  // sorted by (source, label)
  std::vector<std::vector<IVec>> labeled_;
};

// Builds the skeleton from a base chamber. By default the base rays get
// labels 1..rank in lex-descending order; base_rays overrides that (it must
// list the base chamber's rays in label order). shuffle_seed randomizes the
// propagation order, which must not change the result.
SkeletonGraph build_skeleton(
    const Arrangement& arr, const Chamber& base,
    const std::optional<std::vector<IVec>>& base_rays = std::nullopt,
    std::optional<std::uint64_t> shuffle_seed = std::nullopt);

const Arrow& cross(const SkeletonGraph& sk, const Chamber& c, int label);

std::string export_dot(const SkeletonGraph& sk);

}  // namespace deligne
