#pragma once

#include <optional>
#include <vector>

#include "deligne/numeric.hpp"

namespace deligne {

IMat rows_to_matrix(const std::vector<IVec>& rows, int n);
QMat to_rational(const IMat& m);

int rank_exact(QMat m);
int rank_exact(const IMat& m);

// Primitive generator of the kernel when the nullity is exactly 1,
// otherwise nullopt. The sign of the generator is unspecified.
std::optional<IVec> kernel_line(const IMat& rows);

// Strict homogeneous feasibility: a rational x with <row, x> > 0 for every
// row, or nullopt when the open cone is empty. Decided by exact
// Fourier-Motzkin elimination; the witness is recovered by back-substitution.
std::optional<QVec> feasible_point(const std::vector<IVec>& rows, int n);

}  // namespace deligne
