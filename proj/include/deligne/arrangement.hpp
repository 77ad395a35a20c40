#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "deligne/errors.hpp"
#include "deligne/linalg.hpp"

namespace deligne {

// Canonical form: primitive integer normal with positive first nonzero entry.
struct Hyperplane {
  IVec normal;
};

IVec canonical_normal(const IVec& v);

// Strict sign vector of an open chamber, one entry per hyperplane.
class SignVector {
 public:
  SignVector() = default;
  explicit SignVector(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {}
  static SignVector from_string(const std::string& s);
  std::string to_string() const;
  int size() const { return static_cast<int>(bits_.size()); }
  bool negative_at(int i) const { return bits_[i] != 0; }
  SignVector flipped(int i) const;
  SignVector negated() const;
  // '+' sorts before '-', so default vector comparison is the required
  // lexicographic chamber order.
  auto operator<=>(const SignVector&) const = default;

 private:
  std::vector<std::uint8_t> bits_;  // 0 = '+', 1 = '-'
};

struct Chamber {
  int id = -1;
  SignVector sign;
};

// Set of hyperplane indices on which two chambers take opposite signs.
class SeparationSet {
 public:
  SeparationSet() = default;
  void add(int i) { mask_ |= std::uint64_t{1} << i; }
  bool contains(int i) const { return (mask_ >> i) & 1; }
  int size() const;
  bool subset_of(const SeparationSet& o) const {
    return (mask_ & ~o.mask_) == 0;
  }
  SeparationSet united(const SeparationSet& o) const {
    SeparationSet s;
    s.mask_ = mask_ | o.mask_;
    return s;
  }
  std::vector<int> indices() const;
  bool operator==(const SeparationSet&) const = default;

 private:
  std::uint64_t mask_ = 0;
};

struct ChamberComplex {
  std::vector<Chamber> chambers;          // position == id, sign-lex order
  std::map<SignVector, int> by_sign;
  std::vector<std::vector<int>> walls;    // ascending hyperplane indices
  bool simplicial = false;
  // Extremal rays per chamber, lex-descending; filled only when the
  // arrangement is simplicial and essential.
  std::vector<std::vector<IVec>> rays;
};

class Arrangement {
 public:
  Arrangement(int dim, const std::vector<IVec>& normals);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(hyperplanes_.size()); }
  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
  const Hyperplane& hyperplane(int i) const { return hyperplanes_[i]; }
  int rank() const { return rank_; }
  bool essential() const { return rank_ == dim_; }

  const ChamberComplex& chambers() const;
  const Chamber& chamber(int id) const;
  const Chamber& chamber(const SignVector& sign) const;

 private:
  int dim_;
  std::vector<Hyperplane> hyperplanes_;
  int rank_;
  mutable std::shared_ptr<std::mutex> mutex_;
  mutable std::shared_ptr<const ChamberComplex> complex_;
};

std::optional<QVec> feasible(const Arrangement& arr, const SignVector& sign);
const std::vector<int>& walls(const Arrangement& arr, const Chamber& c);
SeparationSet separation(const Arrangement& arr, const Chamber& v,
                         const Chamber& w);
bool is_simplicial(const Arrangement& arr);
const std::vector<IVec>& chamber_rays(const Arrangement& arr, const Chamber& c);
const Chamber& antipode(const Arrangement& arr, const Chamber& c);

}  // namespace deligne
