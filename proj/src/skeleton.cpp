#include "deligne/skeleton.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace deligne {

SkeletonGraph::SkeletonGraph(const Arrangement* arr, int base,
                             std::vector<Arrow> arrows,
                             std::vector<std::vector<IVec>> labeled_rays)
    : arr_(arr),
      base_(base),
      labels_(arr->rank()),
      arrows_(std::move(arrows)),
      labeled_(std::move(labeled_rays)) {
  std::sort(arrows_.begin(), arrows_.end(), [](const Arrow& a, const Arrow& b) {
    return std::tie(a.source, a.label) < std::tie(b.source, b.label);
  });
}

const Arrow& SkeletonGraph::arrow(int chamber, int label) const {
  if (label < 1 || label > labels_) throw Error("label out of range");
  return arrows_[static_cast<size_t>(chamber) * labels_ + (label - 1)];
}

const std::vector<IVec>& SkeletonGraph::labeled_rays(int chamber) const {
  return labeled_[chamber];
}

namespace {

bool same_ray(const IVec& a, const IVec& b) { return a == b; }

int find_ray(const std::vector<IVec>& rays, const IVec& r) {
  for (size_t i = 0; i < rays.size(); ++i) {
    if (same_ray(rays[i], r)) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace

SkeletonGraph build_skeleton(const Arrangement& arr, const Chamber& base,
                             const std::optional<std::vector<IVec>>& base_rays,
                             std::optional<std::uint64_t> shuffle_seed) {
  if (!is_simplicial(arr)) throw NotSimplicial();
  if (!arr.essential()) throw NotEssential();
  const auto& cx = arr.chambers();
  const int n = arr.rank();
  const int m = static_cast<int>(cx.chambers.size());

  std::vector<std::vector<IVec>> labeled(m);
  if (base_rays) {
    if (static_cast<int>(base_rays->size()) != n) {
      throw InconsistentLabeling("base labeling must list one ray per label");
    }
    std::vector<IVec> prim;
    for (const auto& r : *base_rays) prim.push_back(primitive(r));
    const auto& actual = chamber_rays(arr, base);
    for (const auto& r : prim) {
      if (find_ray(actual, r) < 0) {
        throw InconsistentLabeling("base labeling ray is not a ray of the base chamber");
      }
    }
    for (const auto& r : actual) {
      if (find_ray(prim, r) < 0) {
        throw InconsistentLabeling("base labeling misses a ray of the base chamber");
      }
    }
    labeled[base.id] = std::move(prim);
  } else {
    labeled[base.id] = chamber_rays(arr, base);  // already lex-descending
  }

  std::mt19937_64 rng(shuffle_seed.value_or(0));
  std::vector<Arrow> arrows;
  arrows.reserve(static_cast<size_t>(m) * n);
  std::vector<int> queue{base.id};
  std::vector<char> processed(m, 0);
  while (!queue.empty()) {
    size_t pick = 0;
    if (shuffle_seed) {
      pick = std::uniform_int_distribution<size_t>(0, queue.size() - 1)(rng);
    }
    int cid = queue[pick];
    queue.erase(queue.begin() + static_cast<long>(pick));
    if (processed[cid]) continue;
    processed[cid] = 1;
    const Chamber& c = arr.chamber(cid);
    const auto& rays = labeled[cid];

    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i + 1;
    if (shuffle_seed) std::shuffle(order.begin(), order.end(), rng);

    for (int label : order) {
      const IVec& omitted = rays[label - 1];
      // The unique wall the labeled ray is strictly off of.
      int wall = -1;
      for (int w : walls(arr, c)) {
        if (arr.hyperplane(w).normal.dot(omitted) != 0) {
          if (wall >= 0) throw InconsistentLabeling("ray off two walls");
          wall = w;
        }
      }
      if (wall < 0) throw InconsistentLabeling("ray lies on every wall");
      const Chamber& next = arr.chamber(c.sign.flipped(wall));
      const auto& next_rays = chamber_rays(arr, next);

      std::vector<IVec> proposed(n);
      IVec fresh;
      bool fresh_set = false;
      for (const auto& r : next_rays) {
        int pos = find_ray(rays, r);
        if (pos < 0) {
          if (fresh_set) throw InconsistentLabeling("facet shares too few rays");
          fresh = r;
          fresh_set = true;
        }
      }
      if (!fresh_set) throw InconsistentLabeling("crossing produced no new ray");
      for (int j = 1; j <= n; ++j) {
        proposed[j - 1] = (j == label) ? fresh : rays[j - 1];
      }
      for (const auto& r : proposed) {
        if (find_ray(next_rays, r) < 0) {
          throw InconsistentLabeling("shared ray is not a ray of the next chamber");
        }
      }

      if (labeled[next.id].empty()) {
        labeled[next.id] = proposed;
        queue.push_back(next.id);
      } else if (labeled[next.id] != proposed) {
        throw InconsistentLabeling("labels disagree along two routes to chamber " +
                                   next.sign.to_string());
      }
      arrows.push_back(Arrow{cid, next.id, wall, label});
    }
  }

  for (int c = 0; c < m; ++c) {
    if (labeled[c].empty()) throw Error("skeleton is not connected");
  }
  return SkeletonGraph(&arr, base.id, std::move(arrows), std::move(labeled));
}

const Arrow& cross(const SkeletonGraph& sk, const Chamber& c, int label) {
  return sk.arrow(c.id, label);
}

std::string export_dot(const SkeletonGraph& sk) {
  const auto& arr = sk.arrangement();
  const auto& cx = arr.chambers();
  std::ostringstream out;
  out << "digraph skeleton {\n";
  for (const auto& c : cx.chambers) {
    out << "  \"" << c.sign.to_string() << "\";\n";
  }
  for (const auto& a : sk.arrows()) {
    out << "  \"" << cx.chambers[a.source].sign.to_string() << "\" -> \""
        << cx.chambers[a.target].sign.to_string() << "\" [label=\"s" << a.label
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace deligne
