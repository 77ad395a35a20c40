#include "deligne/gfan.hpp"

#include <algorithm>
#include <set>

namespace deligne {

GMatrix g_matrix(const SkeletonGraph& sk, const Chamber& c) {
  const auto& rays = sk.labeled_rays(c.id);
  const int n = sk.labels();
  IMat rows(n, sk.arrangement().dim());
  for (int i = 0; i < n; ++i) rows.row(i) = rays[i].transpose();
  return GMatrix{sk.base(), c.id, std::move(rows)};
}

GMatrix mutate_g(const SkeletonGraph& sk, const GMatrix& g, int label) {
  const Arrow& a = sk.arrow(g.chamber, label);
  return g_matrix(sk, sk.arrangement().chamber(a.target));
}

namespace {

// Inward facet normals of the simplicial cone spanned by the rows.
std::vector<IVec> facet_normals(const IMat& rows) {
  const int n = static_cast<int>(rows.rows());
  std::vector<IVec> out;
  for (int i = 0; i < n; ++i) {
    std::vector<IVec> others;
    for (int j = 0; j < n; ++j) {
      if (j != i) others.push_back(rows.row(j).transpose());
    }
    auto ker = kernel_line(rows_to_matrix(others, static_cast<int>(rows.cols())));
    if (!ker) throw RankDeficient("facet rows do not span a hyperplane");
    IVec normal = *ker;
    Int d = normal.dot(rows.row(i).transpose());
    if (d == 0) throw RankDeficient("ray lies inside its opposite facet");
    if (d < 0) normal = -normal;
    out.push_back(std::move(normal));
  }
  return out;
}

}  // namespace

Reconstruction arrangement_from_g_matrices(int dim,
                                           const std::vector<IMat>& matrices) {
  if (matrices.empty()) throw Error("no matrices given");
  for (const auto& m : matrices) {
    if (m.rows() != dim || m.cols() != dim) {
      throw DimensionMismatch("matrices must be square of the given dimension");
    }
    if (rank_exact(m) != dim) throw RankDeficient();
  }

  std::vector<std::vector<IVec>> inward;
  inward.reserve(matrices.size());
  for (const auto& m : matrices) inward.push_back(facet_normals(m));

  std::set<std::vector<Int>> seen;
  std::vector<IVec> normals;
  for (const auto& cone : inward) {
    for (const auto& v : cone) {
      IVec c = canonical_normal(v);
      std::vector<Int> key(c.data(), c.data() + c.size());
      if (seen.insert(key).second) normals.push_back(std::move(c));
    }
  }
  std::sort(normals.begin(), normals.end(), lex_less);

  // Interiors must be pairwise disjoint before chambers are matched.
  for (size_t a = 0; a < matrices.size(); ++a) {
    for (size_t b = a + 1; b < matrices.size(); ++b) {
      std::vector<IVec> rows = inward[a];
      rows.insert(rows.end(), inward[b].begin(), inward[b].end());
      if (feasible_point(rows, dim)) {
        throw OverlappingCones("cones " + std::to_string(a) + " and " +
                               std::to_string(b) + " share interior points");
      }
    }
  }

  Arrangement arr(dim, normals);
  const auto& cx = arr.chambers();

  std::vector<int> matrix_chamber;
  for (size_t t = 0; t < matrices.size(); ++t) {
    // The row sum is interior to the cone; it must land inside one chamber.
    IVec point = IVec::Zero(dim);
    for (int i = 0; i < dim; ++i) point += matrices[t].row(i).transpose();
    std::vector<std::uint8_t> bits;
    for (const auto& h : arr.hyperplanes()) {
      Int d = h.normal.dot(point);
      if (d == 0) {
        throw ConeNotChamber("cone " + std::to_string(t) +
                             " is cut by a reconstructed hyperplane");
      }
      bits.push_back(d > 0 ? 0 : 1);
    }
    const Chamber& c = arr.chamber(SignVector(std::move(bits)));
    std::set<std::vector<Int>> cone_rays;
    for (int i = 0; i < dim; ++i) {
      IVec r = primitive(IVec(matrices[t].row(i).transpose()));
      cone_rays.insert({r.data(), r.data() + r.size()});
    }
    std::set<std::vector<Int>> chamber_ray_set;
    for (const auto& r : chamber_rays(arr, c)) {
      chamber_ray_set.insert({r.data(), r.data() + r.size()});
    }
    if (cone_rays != chamber_ray_set) {
      throw ConeNotChamber("cone " + std::to_string(t) +
                           " is not a chamber of the reconstruction");
    }
    matrix_chamber.push_back(c.id);
  }

  std::set<int> hit(matrix_chamber.begin(), matrix_chamber.end());
  bool full = hit.size() == cx.chambers.size();
  return Reconstruction{std::move(arr), std::move(matrix_chamber), full};
}

WeakOrder weak_order(const Arrangement& arr, const Chamber& base) {
  const auto& cx = arr.chambers();
  const int m = static_cast<int>(cx.chambers.size());
  std::vector<SeparationSet> sep(m);
  for (int c = 0; c < m; ++c) {
    sep[c] = separation(arr, base, arr.chamber(c));
  }

  WeakOrder order;
  order.base = base.id;
  for (int v = 0; v < m; ++v) {
    for (int w = 0; w < m; ++w) {
      if (v == w || !sep[v].subset_of(sep[w])) continue;
      bool cover = true;
      for (int z = 0; z < m; ++z) {
        if (z == v || z == w) continue;
        if (sep[v].subset_of(sep[z]) && sep[z].subset_of(sep[w]) &&
            !(sep[z] == sep[v]) && !(sep[z] == sep[w])) {
          cover = false;
          break;
        }
      }
      if (cover) order.covers.emplace_back(v, w);
    }
  }
  std::sort(order.covers.begin(), order.covers.end());

  // Cross-check: covers must be exactly the wall crossings that gain one
  // separating hyperplane.
  std::vector<std::pair<int, int>> adjacency;
  for (int v = 0; v < m; ++v) {
    for (int w : walls(arr, arr.chamber(v))) {
      auto it = cx.by_sign.find(cx.chambers[v].sign.flipped(w));
      if (it == cx.by_sign.end()) continue;
      int u = it->second;
      if (sep[u].size() == sep[v].size() + 1 && sep[v].subset_of(sep[u])) {
        adjacency.emplace_back(v, u);
      }
    }
  }
  std::sort(adjacency.begin(), adjacency.end());
  if (adjacency != order.covers) {
    throw Error("weak order covers disagree with wall adjacency");
  }
  return order;
}

std::vector<NormalForm> atom_chamber_bijection(const SkeletonGraph& sk,
                                               const Chamber& v) {
  const auto& arr = sk.arrangement();
  const auto& cx = arr.chambers();
  std::vector<NormalForm> out;
  for (const auto& w : cx.chambers) {
    std::vector<PositivePath> atoms = enumerate_atoms(sk, v, w);
    if (atoms.empty()) throw Error("no atom between chambers");
    EquivClass cls = equiv_class(atoms.front());
    for (const auto& a : atoms) {
      if (!cls.contains(a.word())) {
        throw AtomClassSplit("inequivalent atoms " +
                             format_word(cls.canonical()) + " and " +
                             format_word(a.word()));
      }
    }
    out.push_back(deligne_normal_form(atoms.front()));
  }
  return out;
}

}  // namespace deligne
