#pragma once

#include "deligne/paths.hpp"

namespace deligne {

// Rows are the primitive labeled rays of a chamber, row i = ray labeled i+1,
// in the coordinates fixed by the base chamber's labeling.
struct GMatrix {
  int base = -1;
  int chamber = -1;
  IMat rows;
};

GMatrix g_matrix(const SkeletonGraph& sk, const Chamber& c);

// Crossing the wall of the given label swaps exactly one row.
GMatrix mutate_g(const SkeletonGraph& sk, const GMatrix& g, int label);

struct Reconstruction {
  Arrangement arrangement;
  std::vector<int> matrix_chamber;  // chamber id per input matrix
  bool full_cover = false;
};

// Rebuilds the arrangement whose chambers the given cones are, and checks
// the cones really are chambers with pairwise disjoint interiors.
Reconstruction arrangement_from_g_matrices(int dim,
                                           const std::vector<IMat>& matrices);

struct WeakOrder {
  int base = -1;
  std::vector<std::pair<int, int>> covers;  // (lower, upper) chamber ids
};

WeakOrder weak_order(const Arrangement& arr, const Chamber& base);

// One normal form per chamber (indexed by chamber id), each the class of
// atoms from v to that chamber; also certifies the class is unique.
std::vector<NormalForm> atom_chamber_bijection(const SkeletonGraph& sk,
                                               const Chamber& v);

}  // namespace deligne
