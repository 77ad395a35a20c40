#include "deligne/linalg.hpp"

#include <set>
#include <utility>

namespace deligne {

IMat rows_to_matrix(const std::vector<IVec>& rows, int n) {
  IMat m(static_cast<Eigen::Index>(rows.size()), n);
  for (Eigen::Index i = 0; i < m.rows(); ++i) m.row(i) = rows[i].transpose();
  return m;
}

QMat to_rational(const IMat& m) {
  QMat out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Rat(m(i, j));
  return out;
}

int rank_exact(QMat m) {
  const Eigen::Index nr = m.rows(), nc = m.cols();
  int r = 0;
  for (Eigen::Index c = 0; c < nc && r < nr; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = r; i < nr; ++i) {
      if (m(i, c) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    m.row(r).swap(m.row(piv));
    for (Eigen::Index i = 0; i < nr; ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rat f = m(i, c) / m(r, c);
      m.row(i) -= f * m.row(r);
    }
    ++r;
  }
  return r;
}

int rank_exact(const IMat& m) { return rank_exact(to_rational(m)); }

std::optional<IVec> kernel_line(const IMat& rows) {
  const Eigen::Index n = rows.cols();
  QMat m = to_rational(rows);
  std::vector<Eigen::Index> pivcols;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < n && r < m.rows(); ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = r; i < m.rows(); ++i) {
      if (m(i, c) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    m.row(r).swap(m.row(piv));
    m.row(r) /= m(r, c);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      m.row(i) -= m(i, c) * m.row(r);
    }
    pivcols.push_back(c);
    ++r;
  }
  if (r != n - 1) return std::nullopt;
  Eigen::Index free = -1;
  for (Eigen::Index c = 0, p = 0; c < n; ++c) {
    if (p < static_cast<Eigen::Index>(pivcols.size()) && pivcols[p] == c) {
      ++p;
      continue;
    }
    free = c;
    break;
  }
  QVec x = QVec::Zero(n);
  x[free] = 1;
  for (std::size_t i = 0; i < pivcols.size(); ++i) x[pivcols[i]] = -m(i, free);
  return primitive(x);
}

namespace {

using Level = std::vector<IVec>;

std::vector<Int> key_of(const IVec& v) {
  return std::vector<Int>(v.data(), v.data() + v.size());
}

// Deduplicate rows by primitive direction; a zero row means 0 > 0.
bool dedup(Level& rows) {
  std::set<std::vector<Int>> seen;
  Level out;
  for (IVec& r : rows) {
    IVec p = primitive(std::move(r));
    if (p.isZero()) return false;
    if (seen.insert(key_of(p)).second) out.push_back(std::move(p));
  }
  rows = std::move(out);
  return true;
}

}  // namespace

std::optional<QVec> feasible_point(const std::vector<IVec>& rows, int n) {
  Level cur = rows;
  if (!dedup(cur)) return std::nullopt;
  // levels[i] holds the system before variable n-1-i is eliminated.
  std::vector<Level> levels;
  levels.reserve(n);
  for (int j = n - 1; j >= 0; --j) {
    levels.push_back(cur);
    Level next;
    for (const IVec& r : cur) {
      if (r[j] == 0) next.push_back(r);
    }
    for (const IVec& a : cur) {
      if (a[j] <= 0) continue;
      for (const IVec& b : cur) {
        if (b[j] >= 0) continue;
        next.push_back(a[j] * b - b[j] * a);
      }
    }
    if (!dedup(next)) return std::nullopt;
    cur = std::move(next);
  }
  // Feasible; recover a witness from the lowest variable up.
  QVec x = QVec::Zero(n);
  for (int j = 0; j < n; ++j) {
    const Level& lev = levels[n - 1 - j];
    std::optional<Rat> lo, hi;
    for (const IVec& r : lev) {
      if (r[j] == 0) continue;
      Rat rest = 0;
      for (int t = 0; t < j; ++t) rest += Rat(r[t]) * x[t];
      Rat bound = -rest / Rat(r[j]);
      if (r[j] > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else {
        if (!hi || bound < *hi) hi = bound;
      }
    }
    if (lo && hi)
      x[j] = (*lo + *hi) / 2;
    else if (lo)
      x[j] = *lo + 1;
    else if (hi)
      x[j] = *hi - 1;
  }
  return x;
}

}  // namespace deligne
