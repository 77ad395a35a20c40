#include "deligne/arrangement.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace deligne {

IVec canonical_normal(const IVec& v) {
  IVec p = primitive(v);
  for (int i = 0; i < p.size(); ++i) {
    if (p[i] != 0) {
      if (p[i] < 0) p = -p;
      break;
    }
  }
  return p;
}

SignVector SignVector::from_string(const std::string& s) {
  std::vector<std::uint8_t> bits;
  bits.reserve(s.size());
  for (char c : s) {
    if (c == '+') {
      bits.push_back(0);
    } else if (c == '-') {
      bits.push_back(1);
    } else {
      throw Error("bad sign character in \"" + s + "\"");
    }
  }
  return SignVector(std::move(bits));
}

std::string SignVector::to_string() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_) s.push_back(b ? '-' : '+');
  return s;
}

SignVector SignVector::flipped(int i) const {
  auto bits = bits_;
  bits[i] ^= 1;
  return SignVector(std::move(bits));
}

SignVector SignVector::negated() const {
  auto bits = bits_;
  for (auto& b : bits) b ^= 1;
  return SignVector(std::move(bits));
}

int SeparationSet::size() const {
  int n = 0;
  for (std::uint64_t m = mask_; m; m &= m - 1) ++n;
  return n;
}

std::vector<int> SeparationSet::indices() const {
  std::vector<int> out;
  for (int i = 0; i < 64; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

namespace {

// Rows of the strict system defining the chamber: sign * normal > 0.
std::vector<IVec> signed_rows(const std::vector<Hyperplane>& hps,
                              const SignVector& sign) {
  std::vector<IVec> rows;
  rows.reserve(hps.size());
  for (size_t i = 0; i < hps.size(); ++i) {
    rows.push_back(sign.negative_at(static_cast<int>(i))
                       ? IVec(-hps[i].normal)
                       : hps[i].normal);
  }
  return rows;
}

bool sign_feasible(const std::vector<Hyperplane>& hps, const SignVector& sign,
                   int dim) {
  return feasible_point(signed_rows(hps, sign), dim).has_value();
}

// Sign vector of a generic point, or nullopt if it lies on some hyperplane.
std::optional<SignVector> sign_at(const std::vector<Hyperplane>& hps,
                                  const IVec& p) {
  std::vector<std::uint8_t> bits;
  bits.reserve(hps.size());
  for (const auto& h : hps) {
    Int d = h.normal.dot(p);
    if (d == 0) return std::nullopt;
    bits.push_back(d > 0 ? 0 : 1);
  }
  return SignVector(std::move(bits));
}

std::vector<std::vector<IVec>> compute_rays(
    const std::vector<Hyperplane>& hps, const std::vector<Chamber>& chambers,
    const std::vector<std::vector<int>>& walls, int dim) {
  // For a simplicial essential chamber every ray spans the intersection of
  // all walls but one.
  std::vector<std::vector<IVec>> all;
  all.reserve(chambers.size());
  for (const auto& c : chambers) {
    const auto& w = walls[c.id];
    std::vector<IVec> rays;
    for (size_t skip = 0; skip < w.size(); ++skip) {
      std::vector<IVec> rows;
      for (size_t t = 0; t < w.size(); ++t) {
        if (t != skip) rows.push_back(hps[w[t]].normal);
      }
      auto ker = kernel_line(rows_to_matrix(rows, dim));
      if (!ker) throw Error("wall normals of a simplicial chamber must have a line kernel");
      IVec r = *ker;
      // Orient into the chamber closure: strictly off the skipped wall.
      Int d = hps[w[skip]].normal.dot(r);
      if (d == 0) throw Error("ray lies inside its opposite wall");
      bool want_pos = !c.sign.negative_at(w[skip]);
      if ((d > 0) != want_pos) r = -r;
      rays.push_back(std::move(r));
    }
    std::sort(rays.begin(), rays.end(),
              [](const IVec& a, const IVec& b) { return lex_less(b, a); });
    all.push_back(std::move(rays));
  }
  return all;
}

}  // namespace

Arrangement::Arrangement(int dim, const std::vector<IVec>& normals)
    : dim_(dim), mutex_(std::make_shared<std::mutex>()) {
  if (dim < 1) throw DimensionMismatch("dim must be positive");
  if (normals.empty()) throw Error("arrangement needs at least one hyperplane");
  if (normals.size() > 64) throw Error("at most 64 hyperplanes supported");
  std::set<std::vector<Int>> seen;
  for (const auto& v : normals) {
    if (v.size() != dim) throw DimensionMismatch();
    if (v.isZero()) throw ZeroNormal();
    IVec c = canonical_normal(v);
    std::vector<Int> key(c.data(), c.data() + c.size());
    if (!seen.insert(key).second) throw DuplicateHyperplane();
    hyperplanes_.push_back(Hyperplane{std::move(c)});
  }
  std::vector<IVec> rows;
  rows.reserve(hyperplanes_.size());
  for (const auto& h : hyperplanes_) rows.push_back(h.normal);
  rank_ = rank_exact(rows_to_matrix(rows, dim_));
}

const ChamberComplex& Arrangement::chambers() const {
  {
    std::lock_guard<std::mutex> lock(*mutex_);
    if (complex_) return *complex_;
  }
  auto cx = std::make_shared<ChamberComplex>();

  // Seed with a generic point (1, t, t^2, ...), bumping t until off all
  // hyperplanes, then flood fill by flipping one sign at a time.
  std::optional<SignVector> seed;
  for (Int t = 1; !seed; ++t) {
    IVec p(dim_);
    Int pw = 1;
    for (int i = 0; i < dim_; ++i) {
      p[i] = pw;
      pw *= t;
    }
    seed = sign_at(hyperplanes_, p);
  }

  std::set<SignVector> found{*seed};
  std::deque<SignVector> queue{*seed};
  while (!queue.empty()) {
    SignVector cur = queue.front();
    queue.pop_front();
    for (int i = 0; i < size(); ++i) {
      SignVector next = cur.flipped(i);
      if (found.contains(next)) continue;
      if (sign_feasible(hyperplanes_, next, dim_)) {
        found.insert(next);
        queue.push_back(next);
      }
    }
  }

  for (const auto& sign : found) {
    int id = static_cast<int>(cx->chambers.size());
    cx->chambers.push_back(Chamber{id, sign});
    cx->by_sign.emplace(sign, id);
  }

  // Walls: facets of the chamber, i.e. flips that land in another chamber.
  cx->walls.resize(cx->chambers.size());
  for (const auto& c : cx->chambers) {
    for (int i = 0; i < size(); ++i) {
      if (found.contains(c.sign.flipped(i))) cx->walls[c.id].push_back(i);
    }
  }

  cx->simplicial = true;
  for (const auto& c : cx->chambers) {
    const auto& w = cx->walls[c.id];
    if (static_cast<int>(w.size()) != rank_) {
      cx->simplicial = false;
      break;
    }
    std::vector<IVec> rows;
    for (int i : w) rows.push_back(hyperplanes_[i].normal);
    if (rank_exact(rows_to_matrix(rows, dim_)) != rank_) {
      cx->simplicial = false;
      break;
    }
  }

  if (cx->simplicial && essential()) {
    cx->rays = compute_rays(hyperplanes_, cx->chambers, cx->walls, dim_);
  }

  std::lock_guard<std::mutex> lock(*mutex_);
  if (!complex_) complex_ = std::move(cx);
  return *complex_;
}

const Chamber& Arrangement::chamber(int id) const {
  const auto& cx = chambers();
  if (id < 0 || id >= static_cast<int>(cx.chambers.size())) {
    throw Error("chamber id out of range");
  }
  return cx.chambers[id];
}

const Chamber& Arrangement::chamber(const SignVector& sign) const {
  const auto& cx = chambers();
  auto it = cx.by_sign.find(sign);
  if (it == cx.by_sign.end()) throw Error("no chamber with sign " + sign.to_string());
  return cx.chambers[it->second];
}

std::optional<QVec> feasible(const Arrangement& arr, const SignVector& sign) {
  if (sign.size() != arr.size()) throw DimensionMismatch("sign vector length");
  return feasible_point(signed_rows(arr.hyperplanes(), sign), arr.dim());
}

const std::vector<int>& walls(const Arrangement& arr, const Chamber& c) {
  return arr.chambers().walls[c.id];
}

SeparationSet separation(const Arrangement& arr, const Chamber& v,
                         const Chamber& w) {
  SeparationSet s;
  for (int i = 0; i < arr.size(); ++i) {
    if (v.sign.negative_at(i) != w.sign.negative_at(i)) s.add(i);
  }
  return s;
}

bool is_simplicial(const Arrangement& arr) { return arr.chambers().simplicial; }

const std::vector<IVec>& chamber_rays(const Arrangement& arr,
                                      const Chamber& c) {
  if (!is_simplicial(arr)) throw NotSimplicial();
  if (!arr.essential()) throw NotEssential();
  return arr.chambers().rays[c.id];
}

const Chamber& antipode(const Arrangement& arr, const Chamber& c) {
  return arr.chamber(c.sign.negated());
}

}  // namespace deligne
